#include "sixcycle/partition.hpp"

#include <stdexcept>
#include <string>

namespace sixcycle {

Partition4 Partition4::FromCodes(std::span<const int> codes) {
  std::vector<Color> colors;
  colors.reserve(codes.size());
  for (int code : codes) {
    if (code < 0 || code >= kNumColors) {
      throw std::invalid_argument("color code " + std::to_string(code) + " not in 0..3");
    }
    colors.push_back(static_cast<Color>(code));
  }
  return Partition4(std::move(colors));
}

void Partition4::randomize(std::size_t n, Rng& rng) {
  colors_.resize(n);
  std::uint64_t bits = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (i % 32 == 0) bits = rng();
    colors_[i] = static_cast<Color>(bits & 3u);
    bits >>= 2;
  }
}

Partition4 random_partition(std::size_t n, Rng& rng) {
  Partition4 p;
  p.randomize(n, rng);
  return p;
}

}  // namespace sixcycle

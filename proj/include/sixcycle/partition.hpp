#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "sixcycle/graph.hpp"
#include "sixcycle/rng.hpp"

namespace sixcycle {

enum class Color : std::uint8_t { kA = 0, kB = 1, kC = 2, kD = 3 };
inline constexpr int kNumColors = 4;

/// Total assignment of the nodes [0, n) to the classes A, B, C, D.
class Partition4 {
 public:
  Partition4() = default;
  explicit Partition4(std::vector<Color> colors) : colors_(std::move(colors)) {}

  /// Node i gets color `codes[i]` (0..3 for A..D). Throws std::invalid_argument
  /// on any other code.
  static Partition4 FromCodes(std::span<const int> codes);

  /// Every node in class `c`.
  static Partition4 Uniform(std::size_t n, Color c) {
    return Partition4(std::vector<Color>(n, c));
  }

  std::size_t size() const { return colors_.size(); }
  Color operator[](NodeId v) const { return colors_[v]; }
  std::span<const Color> colors() const { return colors_; }

  /// Redraws every node's class uniformly and independently from `rng`.
  /// Consumes one 64-bit draw per 32 nodes.
  void randomize(std::size_t n, Rng& rng);

  friend bool operator==(const Partition4&, const Partition4&) = default;

 private:
  std::vector<Color> colors_;
};

Partition4 random_partition(std::size_t n, Rng& rng);

}  // namespace sixcycle

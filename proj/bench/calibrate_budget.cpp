// Estimates the largest steps / ((n^2 + t + 1) R(n)) ratio of a complete
// color-coding run over every prefix of every corpus graph. The probe budget
// constant must stay above this with room to spare.
//
// Steps grow linearly with the round count, so each prefix is sampled with a
// fixed number of rounds instead of the full R(n).

#include <iostream>

#include "sixcycle/color_coding.hpp"
#include "sixcycle/oracle.hpp"
#include "support/corpus.hpp"

int main(int argc, char** argv) {
  using namespace sixcycle;
  const std::uint64_t rounds = argc > 1 ? std::stoull(argv[1]) : 4096;
  double worst = 0;
  std::string worst_at;
  for (const auto& [name, g] : testing::acceptance_corpus()) {
    for (std::size_t i = 1; i <= g.num_nodes(); ++i) {
      const Graph prefix = g.prefix(i);
      const double t = static_cast<double>(oracle::six_cycles(prefix).size());
      CycleSink sink;
      ListAllReport r = list_all(prefix, RoundsPolicy{.explicit_rounds = rounds}, 1, sink);
      const double n = static_cast<double>(i);
      const double ratio =
          static_cast<double>(r.steps) / ((n * n + t + 1) * static_cast<double>(rounds));
      if (ratio > worst) {
        worst = ratio;
        worst_at = name + " prefix " + std::to_string(i);
      }
    }
  }
  std::cout << "largest ratio " << worst << " at " << worst_at << '\n';
}

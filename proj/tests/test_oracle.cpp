#include "support.hpp"

#include <doctest.h>

using namespace repcat;

TEST_CASE("inventory counts on the 2-cycle") {
  const Quiver q = test::two_cycle_quiver();
  // Closed walks of length 1 and 2 in the double quiver: a a^-1, a^-1 a, b b^-1,
  // b^-1 b from each end, plus b*a, a*b and their inverses.
  const CycleInventory inv = enumerate_all_cycles(q, 2);
  CHECK(inv.cycles.size() == 8);
  CHECK(all_cycles_pass(test::scalars({3, Rational(1, 3)}), inv));
  CHECK_FALSE(all_cycles_pass(test::scalars({3, Rational(1, 2)}), inv));
}

TEST_CASE("the sweep oracle agrees with the listing oracle") {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 80; ++trial) {
    Quiver q;
    const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 3)(rng);
    for (std::size_t v = 0; v < n; ++v) q.add_vertex(std::to_string(v + 1));
    std::uniform_int_distribution<VertexId> pick(0, n - 1);
    const std::size_t arrows = std::uniform_int_distribution<std::size_t>(1, 4)(rng);
    for (std::size_t k = 0; k < arrows; ++k) q.add_arrow("x" + std::to_string(k), pick(rng), pick(rng));
    ArrowScalars E = trial % 2 == 0 ? xi(q, test::random_vertex_scalars(q, rng)).scalars()
                                    : test::random_arrow_scalars(q, rng);
    for (std::size_t bound = 1; bound <= 4; ++bound) {
      CHECK(all_cycles_pass(E, q, bound) == all_cycles_pass(E, enumerate_all_cycles(q, bound)));
    }
  }
}

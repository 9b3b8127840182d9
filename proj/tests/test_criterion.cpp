#include "support.hpp"

#include <doctest.h>

using namespace repcat;

namespace {

ScalingAuto two_cycle_auto(const Algebra& a, Rational sa, Rational sb) {
  return ScalingAuto::scaling(a, test::scalars({sa, sb}));
}

// Exhaustive validity sweep written against the scalar formula directly.
bool rho_sweep(const Algebra& a, const ScalingAuto& g, const ScalingAuto& h, const RhoMap& rho) {
  for (std::size_t p = 0; p < a.dimension(); ++p) {
    const Path& f = a.path(p);
    if (g.vertex(f.source) != h.vertex(f.source) || g.vertex(f.target) != h.vertex(f.target)) return false;
    if (rho[f.target] * path_scalar(g, f) != path_scalar(h, f) * rho[f.source]) return false;
  }
  return true;
}

JumpAuto example_psi(const Algebra& a) {
  LevelScalars l;
  l.set(0, 0, Rational(1, 6));
  l.set(0, 1, Rational(1, 3));
  l.set(-1, 1, Rational(1, 2));
  l.set(-1, 2, Rational(1, 6));
  return JumpAuto{0, ScalingAuto::scaling(a, test::scalars({2, 3})), l};
}

}  // namespace

TEST_CASE("scaling condition") {
  const Algebra a = test::two_cycle();
  const Quiver& q = a.quiver();
  const ScalingAuto g = two_cycle_auto(a, 2, 3);
  CHECK(*check_scaling_condition(q, g, g) == test::scalars({1, 1}));
  CHECK(*check_scaling_condition(q, g, two_cycle_auto(a, 6, 1)) == test::scalars({3, Rational(1, 3)}));

  Quiver dbl;
  dbl.add_vertex("1");
  dbl.add_vertex("2");
  dbl.add_arrow("a", 0, 1);
  dbl.add_arrow("b", 0, 1);
  const Algebra da = build_algebra(dbl, {});
  const ScalingAuto id = ScalingAuto::identity(dbl);
  CHECK_FALSE(check_scaling_condition(dbl, id, ScalingAuto::scaling(da, test::scalars({2, 3}))));
  CHECK(check_scaling_condition(dbl, id, ScalingAuto::scaling(da, test::scalars({2, 2}))));
  CHECK_FALSE(check_scaling_condition(dbl, id, ScalingAuto(da, {0, 1}, {1, 0}, test::scalars({1, 1}))));

  const ScalingAuto swap(a, {1, 0}, {1, 0}, test::scalars({1, 1}));
  try {
    check_scaling_condition(q, g, swap);
    FAIL("expected ObjectMismatchError");
  } catch (const ObjectMismatchError& e) {
    CHECK(e.object() == HatObject{0, 0});
  }
}

TEST_CASE("cycle condition") {
  CHECK(check_cycle_condition(test::scalars({5, 7}), test::a3().quiver()));
  const Quiver q = test::two_cycle_quiver();
  CHECK(check_cycle_condition(test::scalars({3, Rational(1, 3)}), q));
  CHECK_FALSE(check_cycle_condition(test::scalars({3, Rational(1, 2)}), q));
  const auto failure = first_failing_cycle(q, test::scalars({3, Rational(1, 2)}));
  REQUIRE(failure);
  CHECK(to_string(q, failure->cycle.walk()) == "b*a");
  CHECK(failure->value == Rational(3, 2));
}

TEST_CASE("build_rho on the 2-cycle") {
  const Algebra a = test::two_cycle();
  const Quiver& q = a.quiver();
  const ScalingAuto g = two_cycle_auto(a, 2, 3);
  const auto rho = build_rho(q, g, two_cycle_auto(a, 6, 1));
  REQUIRE(rho);
  CHECK(*rho == RhoMap{1, 3});
  CHECK((*rho)[1] * 2 == 6 * (*rho)[0]);
  CHECK((*rho)[0] * 3 == 1 * (*rho)[1]);
  CHECK(rho_is_valid(a, g, two_cycle_auto(a, 6, 1), *rho));
  CHECK(rho_sweep(a, g, two_cycle_auto(a, 6, 1), *rho));
  CHECK(*build_rho(q, g, g) == RhoMap{1, 1});
  CHECK_FALSE(build_rho(q, g, two_cycle_auto(a, 2, 2)));
}

TEST_CASE("build_rho is sound and complete against the sweep") {
  std::mt19937 rng(17);
  for (const Algebra& a : test::fixture_algebras()) {
    const Quiver& q = a.quiver();
    for (int trial = 0; trial < 200; ++trial) {
      const ScalingAuto g = ScalingAuto::scaling(a, test::random_arrow_scalars(q, rng));
      // Half of the partners are built to be equivalent: h = g∘xi(mu) for some mu.
      ScalingAuto h = ScalingAuto::scaling(a, test::random_arrow_scalars(q, rng));
      if (trial % 2 == 0) h = compose_autos(g, xi(q, test::random_vertex_scalars(q, rng)));
      const auto rho = build_rho(q, g, h);
      const auto E = check_scaling_condition(q, g, h);
      REQUIRE(E);
      CHECK(rho.has_value() == check_cycle_condition(*E, q));
      CHECK(rho.has_value() == all_cycles_pass(*E, q, 2 * q.vertex_count()));
      if (trial % 2 == 0) CHECK(rho.has_value());
      if (rho) CHECK(rho_sweep(a, g, h, *rho));
    }
  }
}

TEST_CASE("extend_rho") {
  const Algebra a = test::a3();
  const Quiver& q = a.quiver();
  const RepetitiveWindow w = build_window(a, -3, 3);
  const JumpAuto psi = example_psi(a);
  const JumpAuto id = hat_lift(ScalingAuto::identity(q));

  SUBCASE("phi = psi gives rho = 1") {
    const WindowRho rho = extend_rho(w, psi, psi, RhoMap{1, 1, 1});
    for (const auto& [x, value] : rho) CHECK(value == 1);
  }

  SUBCASE("jump 0 pair reproduces the displayed scalars") {
    const JumpAuto hat_phi0 = hat_lift(psi.sigma);
    const WindowRho rho = extend_rho(w, psi, hat_phi0, RhoMap{1, 1, 1});
    CHECK(rho.at({0, -1}) == 1);
    CHECK(rho.at({1, -1}) == 2);
    CHECK(rho.at({2, -1}) == 6);
    for (VertexId x = 0; x < 3; ++x) CHECK(rho.at({x, 0}) == 1);
    CHECK(rho.at({0, 1}) == Rational(1, 6));
    CHECK(rho.at({1, 1}) == Rational(1, 3));
    CHECK(rho.at({2, 1}) == 1);
    // Consecutive levels differ by the lambda factor.
    for (int i = -3; i < 3; ++i) {
      for (VertexId x = 0; x < 3; ++x) CHECK(rho.at({x, i + 1}) == rho.at({x, i}) * psi.lambda.at(i, x));
    }
  }

  SUBCASE("jump n pairs: rho is the jump 0 solution read at nu^n x") {
    const WindowRho base = extend_rho(w, psi, hat_lift(psi.sigma), RhoMap{1, 1, 1});
    for (int n : {1, 2, -1}) {
      const JumpAuto phi = compose_jump(q, psi, nu(q, n));
      const JumpAuto twist = compose_jump(q, hat_lift(psi.sigma), nu(q, n));
      const WindowRho rho = extend_rho(w, phi, twist, RhoMap{1, 1, 1});
      CHECK_FALSE(first_invalid_morphism(w, phi, twist, rho));
      for (const auto& [x, value] : rho) {
        const HatObject shifted{x.vertex, x.level + n};
        if (base.count(shifted)) CHECK(value == base.at(shifted));
      }
    }
  }

  SUBCASE("preconditions") {
    CHECK_THROWS_AS(extend_rho(w, psi, nu(q), RhoMap{1, 1, 1}), Error);
    CHECK_THROWS_AS(extend_rho(w, psi, id, RhoMap{1, 1, 1}), Error);
    const Algebra two = test::two_cycle();
    const RepetitiveWindow w2 = build_window(two, -1, 1);
    const JumpAuto swap = hat_lift(ScalingAuto(two, {1, 0}, {1, 0}, test::scalars({1, 1})));
    CHECK_THROWS_AS(extend_rho(w2, hat_lift(ScalingAuto::identity(two.quiver())), swap, RhoMap{1, 1}),
                    ObjectMismatchError);
  }
}

TEST_CASE("extend_rho on random pairs with equal level-0 data") {
  std::mt19937 rng(19);
  for (const Algebra& a : test::fixture_algebras()) {
    const Quiver& q = a.quiver();
    const RepetitiveWindow w = build_window(a, -3, 3);
    for (int trial = 0; trial < 20; ++trial) {
      const int n = std::uniform_int_distribution<int>(-2, 2)(rng);
      const JumpAuto phi = test::random_jump_auto(a, n, rng);
      const ScalingAuto phi0 = Psi(w, decompose(q, phi).part);
      // psi shares phi0 up to a vertex rescaling, so rho0 exists.
      const ScalingAuto psi0 = compose_autos(phi0, xi(q, test::random_vertex_scalars(q, rng)));
      const JumpAuto psi = compose_jump(q, compose_jump(q, hat_lift(psi0), Phi(q, test::random_lambda(q, rng, -2, 2))),
                                        nu(q, n));
      const auto rho0 = build_rho(q, phi0, psi0);
      REQUIRE(rho0);
      const WindowRho rho = extend_rho(w, phi, psi, *rho0);
      CHECK_FALSE(first_invalid_morphism(w, phi, psi, rho));
    }
  }
}

TEST_CASE("shift_rho") {
  const Algebra a = test::a3();
  const Quiver& q = a.quiver();
  const JumpAuto psi = example_psi(a);
  const JumpAuto hat = hat_lift(psi.sigma);
  CHECK(shift_rho(a, psi, hat, RhoMap{1, 1, 1}, 0, 0) == RhoMap{1, 1, 1});

  // At level 1, psi acts as sigma∘xi(lambda_0); rho = lambda_0 balances it.
  const RhoMap at1{Rational(1, 6), Rational(1, 3), 1};
  CHECK(rho_is_valid(a, level_auto(q, psi, 1), psi.sigma, at1));
  CHECK(shift_rho(a, psi, hat, at1, 1, 0) == RhoMap{1, 1, 1});
  CHECK_THROWS_AS(shift_rho(a, psi, hat, RhoMap{1, 1, 1}, 1, 0), Error);

  std::mt19937 rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    const JumpAuto f = test::random_jump_auto(a, 0, rng);
    const JumpAuto g{0, f.sigma, test::random_lambda(q, rng, -2, 2)};
    const int i = std::uniform_int_distribution<int>(-2, 2)(rng);
    const int j = std::uniform_int_distribution<int>(-2, 2)(rng);
    const auto rho = build_rho(q, level_auto(q, f, i), level_auto(q, g, j));
    REQUIRE(rho);
    const RhoMap rho0 = shift_rho(a, f, g, *rho, i, j);
    CHECK(rho_is_valid(a, level_auto(q, f, 0), level_auto(q, g, 0), rho0));
  }
}

TEST_CASE("eta family") {
  const Algebra a = test::two_cycle();
  const Quiver& q = a.quiver();
  const RepetitiveWindow w = build_window(a, -6, 6);
  const JumpAuto g = compose_jump(q, hat_lift(two_cycle_auto(a, 2, 3)), nu(q, 1));
  const JumpAuto h = compose_jump(q, hat_lift(two_cycle_auto(a, 6, 1)), nu(q, 1));
  const WindowRho rho = extend_rho(w, g, h, RhoMap{1, 3});
  const std::vector<HatObject> reps{{0, 0}, {1, 0}};
  const EtaFamily eta = build_eta(g, rho, -2, 2, reps);
  CHECK(eta.at(0, {0, 0}) == 1);
  CHECK(eta.at(1, {1, 0}) == rho.at({1, 0}));
  CHECK(eta.at(2, {0, 0}) == 1);
  CHECK(eta.at(2, {1, 0}) == 9);
  CHECK(eta.at(-1, {1, 0}) == Rational(1, 3));
  CHECK(eta_cocycle_holds(eta, g));
  for (int k = -2; k <= 2; ++k) CHECK(eta_natural(w, g, h, eta, k));
  CHECK_THROWS_AS(eta.at(3, {0, 0}), Error);
  CHECK_THROWS_AS(build_eta(g, rho, -9, 9, reps), Error);

  const WindowRho ones = extend_rho(w, g, g, RhoMap{1, 1});
  const EtaFamily trivial = build_eta(g, ones, -2, 2, reps);
  for (const auto& [key, value] : trivial.entries()) CHECK(value == 1);
}

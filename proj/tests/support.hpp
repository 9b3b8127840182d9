#pragma once

#include "repcat/criterion.hpp"
#include "repcat/oracle.hpp"
#include "repcat/orbit.hpp"

#include <random>
#include <vector>

namespace repcat::test {

// 1 -alpha-> 2 -beta-> 3, no relations.
inline Algebra a3() {
  Quiver q;
  q.add_vertex("1");
  q.add_vertex("2");
  q.add_vertex("3");
  q.add_arrow("alpha", 0, 1);
  q.add_arrow("beta", 1, 2);
  return build_algebra(q, {});
}

// a: 1 -> 2, b: 2 -> 1 with ab = 0 = ba.
inline Quiver two_cycle_quiver() {
  Quiver q;
  q.add_vertex("1");
  q.add_vertex("2");
  q.add_arrow("a", 0, 1);
  q.add_arrow("b", 1, 0);
  return q;
}

inline Algebra two_cycle() { return build_algebra(two_cycle_quiver(), {{0, 1}, {1, 0}}); }

inline std::vector<Algebra> fixture_algebras() { return {a3(), two_cycle()}; }

inline ArrowScalars scalars(std::initializer_list<Rational> values) { return ArrowScalars(values); }

inline Rational random_scalar(std::mt19937& rng, int bound = 6) {
  std::uniform_int_distribution<int> num(1, bound);
  std::uniform_int_distribution<int> sign(0, 1);
  Rational r = num(rng);
  r /= num(rng);
  return sign(rng) ? Rational(-r) : r;
}

inline ArrowScalars random_arrow_scalars(const Quiver& q, std::mt19937& rng) {
  ArrowScalars s(q.arrow_count());
  for (auto& x : s) x = random_scalar(rng);
  return s;
}

inline std::vector<Rational> random_vertex_scalars(const Quiver& q, std::mt19937& rng) {
  std::vector<Rational> s(q.vertex_count());
  for (auto& x : s) x = random_scalar(rng);
  return s;
}

// Swaps the two vertices and the two arrows of the 2-cycle; identity otherwise.
inline ScalingAuto random_scaling(const Algebra& a, std::mt19937& rng, bool allow_swap = true) {
  const Quiver& q = a.quiver();
  std::vector<VertexId> vp(q.vertex_count());
  std::vector<ArrowId> ap(q.arrow_count());
  for (VertexId v = 0; v < vp.size(); ++v) vp[v] = v;
  for (ArrowId x = 0; x < ap.size(); ++x) ap[x] = x;
  const bool swappable = q.vertex_count() == 2 && q.arrow_count() == 2 && q.arrow(0).source == q.arrow(1).target &&
                         q.arrow(0).target == q.arrow(1).source;
  if (allow_swap && swappable && std::bernoulli_distribution(0.5)(rng)) {
    vp = {1, 0};
    ap = {1, 0};
  }
  return ScalingAuto(a, vp, ap, random_arrow_scalars(q, rng));
}

inline LevelScalars random_lambda(const Quiver& q, std::mt19937& rng, int lo, int hi) {
  LevelScalars l;
  for (int i = lo; i <= hi; ++i) {
    for (VertexId x = 0; x < q.vertex_count(); ++x) l.set(i, x, random_scalar(rng));
  }
  return l;
}

inline JumpAuto random_jump_auto(const Algebra& a, int jump, std::mt19937& rng) {
  const Quiver& q = a.quiver();
  return JumpAuto{jump, random_scaling(a, rng), random_lambda(q, rng, -2, 2)};
}

// hat(Psi(part)) ∘ nu^n for phi = part ∘ nu^n.
inline JumpAuto twist_of(const Algebra& a, const JumpAuto& phi) {
  const Quiver& q = a.quiver();
  const ScalingAuto phi0 = Psi(build_window(a, 0, 0), decompose(q, phi).part);
  return compose_jump(q, hat_lift(phi0), nu(q, phi.jump));
}

struct PipelineResult {
  bool criterion = false;
  bool verified = false;
  std::size_t src_dim = 0;
  std::size_t dst_dim = 0;
};

// criterion -> extend -> eta -> both orbits -> independent verification.
inline PipelineResult run_pipeline(const Algebra& a, const JumpAuto& phi, const JumpAuto& psi) {
  const Quiver& q = a.quiver();
  PipelineResult r;
  const auto [lo, hi] = default_window(phi.jump);
  const RepetitiveWindow w = build_window(a, lo, hi);
  const ScalingAuto phi0 = Psi(w, decompose(q, phi).part);
  const ScalingAuto psi0 = Psi(w, decompose(q, psi).part);
  const auto rho0 = build_rho(q, phi0, psi0);
  if (!rho0) return r;
  r.criterion = true;
  const WindowRho rho = extend_rho(w, phi, psi, *rho0);
  const GradedAlgebra src = build_orbit(w, phi);
  const GradedAlgebra dst = build_orbit(w, psi);
  r.src_dim = src.dimension();
  r.dst_dim = dst.dimension();
  const EtaFamily eta = build_eta(phi, rho, -1, 1, src.objects());
  r.verified = verify_graded_iso(graded_iso_from_rho(src, dst, eta), src, dst);
  return r;
}

}  // namespace repcat::test

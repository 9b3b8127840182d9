#include "repcat/criterion.hpp"
#include "repcat/oracle.hpp"
#include "repcat/orbit.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace repcat;

namespace {

// Linear quiver 1 -> 2 -> ... -> n with all length-3 paths zero.
Algebra linear(std::size_t n) {
  Quiver q;
  for (std::size_t v = 0; v < n; ++v) q.add_vertex(std::to_string(v + 1));
  for (std::size_t v = 0; v + 1 < n; ++v) q.add_arrow("a" + std::to_string(v + 1), v, v + 1);
  std::vector<std::vector<ArrowId>> rels;
  for (ArrowId a = 0; a + 2 < q.arrow_count(); ++a) rels.push_back({a, a + 1, a + 2});
  return build_algebra(q, rels);
}

// n vertices, 2n arrows, every vertex on a few cycles.
Quiver tangled(std::size_t n, std::mt19937& rng) {
  Quiver q;
  for (std::size_t v = 0; v < n; ++v) q.add_vertex(std::to_string(v + 1));
  std::uniform_int_distribution<VertexId> pick(0, n - 1);
  for (std::size_t v = 0; v < n; ++v) q.add_arrow("r" + std::to_string(v), v, (v + 1) % n);
  for (std::size_t k = 0; k < n; ++k) q.add_arrow("x" + std::to_string(k), pick(rng), pick(rng));
  return q;
}

void BM_BuildWindow(benchmark::State& state) {
  const Algebra a = linear(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(build_window(a, -2, 2).size());
}
BENCHMARK(BM_BuildWindow)->Arg(4)->Arg(8)->Arg(16);

void BM_TwistedExtension(benchmark::State& state) {
  const Algebra a = linear(6);
  const int n = static_cast<int>(state.range(0));
  const ScalingAuto id = ScalingAuto::identity(a.quiver());
  for (auto _ : state) benchmark::DoNotOptimize(twisted_extension(a, id, n).dimension());
}
BENCHMARK(BM_TwistedExtension)->Arg(1)->Arg(2)->Arg(3);

void BM_SimpleCycles(benchmark::State& state) {
  std::mt19937 rng(1);
  const Quiver q = tangled(static_cast<std::size_t>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_simple_cycles(q).size());
}
BENCHMARK(BM_SimpleCycles)->Arg(4)->Arg(6)->Arg(8);

void BM_CycleOracle(benchmark::State& state) {
  std::mt19937 rng(1);
  const Quiver q = tangled(static_cast<std::size_t>(state.range(0)), rng);
  std::vector<Rational> mu(q.vertex_count());
  for (std::size_t v = 0; v < mu.size(); ++v) mu[v] = Rational(static_cast<long>(v + 2));
  const ArrowScalars E = xi(q, mu).scalars();
  for (auto _ : state) benchmark::DoNotOptimize(all_cycles_pass(E, q, 2 * q.vertex_count()));
}
BENCHMARK(BM_CycleOracle)->Arg(4)->Arg(6);

void BM_VerifyIso(benchmark::State& state) {
  const Algebra a = linear(5);
  const Quiver& q = a.quiver();
  const int n = static_cast<int>(state.range(0));
  ArrowScalars s(q.arrow_count());
  for (std::size_t k = 0; k < s.size(); ++k) s[k] = Rational(static_cast<long>(k + 2));
  const JumpAuto phi = compose_jump(q, hat_lift(ScalingAuto::scaling(a, s)), nu(q, n));
  const JumpAuto psi = nu(q, n);
  const auto [lo, hi] = default_window(n);
  const RepetitiveWindow w = build_window(a, lo, hi);
  const GradedAlgebra src = build_orbit(w, phi);
  const GradedAlgebra dst = build_orbit(w, psi);
  const auto rho0 = build_rho(q, Psi(w, decompose(q, phi).part), Psi(w, decompose(q, psi).part));
  const WindowRho rho = extend_rho(w, phi, psi, *rho0);
  const GradedIso iso = graded_iso_from_rho(src, dst, build_eta(phi, rho, -1, 1, src.objects()));
  for (auto _ : state) benchmark::DoNotOptimize(verify_graded_iso(iso, src, dst));
}
BENCHMARK(BM_VerifyIso)->Arg(1)->Arg(2);

}  // namespace

BENCHMARK_MAIN();

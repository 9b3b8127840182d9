#include "repcat/criterion.hpp"

namespace repcat {

namespace {

void require_same_vertices(const Quiver& q, const ScalingAuto& g, const ScalingAuto& h) {
  for (VertexId x = 0; x < q.vertex_count(); ++x) {
    if (g.vertex(x) != h.vertex(x)) {
      throw ObjectMismatchError("automorphisms disagree on vertex " + q.vertex_name(x), HatObject{x, 0});
    }
  }
}

void require_same_objects(const RepetitiveWindow& w, const JumpAuto& phi, const JumpAuto& psi) {
  if (phi.jump != psi.jump) {
    throw Error("automorphisms have different jumps (" + std::to_string(phi.jump) + " and " +
                std::to_string(psi.jump) + ")");
  }
  for (const HatObject& x : w.objects()) {
    if (apply_jump_auto(phi, x) != apply_jump_auto(psi, x)) {
      throw ObjectMismatchError("automorphisms disagree on object " + to_string(w.algebra().quiver(), x), x);
    }
  }
}

// First basis path f: x -> y with rho(y) g(f) != h(f) rho(x).
std::optional<std::size_t> first_invalid_path(const Algebra& a, const ScalingAuto& g, const ScalingAuto& h,
                                              const RhoMap& rho) {
  if (rho.size() != a.quiver().vertex_count()) throw Error("rho needs one scalar per vertex");
  for (std::size_t p = 0; p < a.dimension(); ++p) {
    const Path& path = a.path(p);
    auto [cg, ig] = apply_auto(a, g, p);
    auto [ch, ih] = apply_auto(a, h, p);
    if (ig != ih || rho[path.target] * cg != ch * rho[path.source]) return p;
  }
  return std::nullopt;
}

HatObject preimage(const JumpAuto& g, const HatObject& x) {
  for (VertexId v = 0; v < g.sigma.vertex_perm().size(); ++v) {
    if (g.sigma.vertex(v) == x.vertex) return {v, x.level - g.jump};
  }
  throw Error("vertex permutation is not surjective");
}

}  // namespace

std::optional<ArrowScalars> check_scaling_condition(const Quiver& q, const ScalingAuto& g, const ScalingAuto& h) {
  require_same_vertices(q, g, h);
  ScalingAuto E = compose_autos(invert_auto(g), h);
  if (!E.permutes_nothing()) return std::nullopt;
  std::map<std::pair<VertexId, VertexId>, Rational> per_pair;
  for (ArrowId a = 0; a < q.arrow_count(); ++a) {
    const Arrow& arrow = q.arrow(a);
    auto [it, fresh] = per_pair.emplace(std::pair{arrow.source, arrow.target}, E.scalar(a));
    if (!fresh && it->second != E.scalar(a)) return std::nullopt;
  }
  return E.scalars();
}

std::optional<CycleFailure> first_failing_cycle(const Quiver& q, const ArrowScalars& E) {
  for (Cycle& c : enumerate_simple_cycles(q)) {
    Rational value = cycle_value(E, c.walk());
    if (value != 1) return CycleFailure{std::move(c), std::move(value)};
  }
  return std::nullopt;
}

bool check_cycle_condition(const ArrowScalars& E, const Quiver& q) { return !first_failing_cycle(q, E); }

std::optional<RhoMap> build_rho(const Quiver& q, const ScalingAuto& g, const ScalingAuto& h) {
  auto E = check_scaling_condition(q, g, h);
  if (!E || !check_cycle_condition(*E, q)) return std::nullopt;
  RhoMap rho(q.vertex_count());
  for (const ComponentWalks& comp : spanning_walks(q)) {
    for (const auto& [x, walk] : comp.walks) rho[x] = cycle_value(*E, walk);
  }
  return rho;
}

bool rho_is_valid(const Algebra& a, const ScalingAuto& g, const ScalingAuto& h, const RhoMap& rho) {
  return !first_invalid_path(a, g, h, rho);
}

std::optional<HatMorphism> first_invalid_morphism(const RepetitiveWindow& w, const JumpAuto& phi,
                                                  const JumpAuto& psi, const WindowRho& rho) {
  for (std::size_t m = 0; m < w.size(); ++m) {
    auto u = rho.find(w.source(m));
    auto v = rho.find(w.target(m));
    if (u == rho.end() || v == rho.end()) return w.morphism(m);
    auto [cphi, iphi] = apply_jump_auto(w.algebra(), phi, w.morphism(m));
    auto [cpsi, ipsi] = apply_jump_auto(w.algebra(), psi, w.morphism(m));
    if (iphi != ipsi || v->second * cphi != cpsi * u->second) return w.morphism(m);
  }
  return std::nullopt;
}

WindowRho extend_rho(const RepetitiveWindow& w, const JumpAuto& phi, const JumpAuto& psi, const RhoMap& rho0) {
  const Algebra& a = w.algebra();
  const Quiver& q = a.quiver();
  require_same_objects(w, phi, psi);
  if (rho0.size() != q.vertex_count()) throw Error("rho0 needs one scalar per vertex");

  const ScalingAuto phi0 = level_auto(q, decompose(q, phi).part, 0);
  const ScalingAuto psi0 = level_auto(q, decompose(q, psi).part, 0);
  if (auto bad = first_invalid_path(a, phi0, psi0, rho0)) {
    throw Error("rho0 fails the level-0 identity on " + to_string(q, a.path(*bad)));
  }

  // With phi = P nu^n and psi = Q nu^n, P^-1 Q hat(xi(rho0)) has jump 0 and
  // trivial level-0 part, so it is Phi(lambda). The jump-0 solution for
  // (P, Q) is rho0(x) / c_i(x); rho itself is that solution read at nu^n x.
  const int n = phi.jump;
  const JumpAuto m = compose_jump(q, invert_jump(q, decompose(q, phi).part),
                                  compose_jump(q, decompose(q, psi).part, hat_lift(xi(q, rho0))));
  if (m.jump != 0 || !m.sigma.is_identity()) throw Error("extend_rho: residual automorphism is not of the form Phi");

  WindowRho rho;
  for (const HatObject& x : w.objects()) rho[x] = rho0[x.vertex] / m.lambda.cumulative(x.level + n, x.vertex);
  if (auto bad = first_invalid_morphism(w, phi, psi, rho)) {
    throw Error("extended rho fails on the morphism " + to_string(a, *bad));
  }
  return rho;
}

RhoMap shift_rho(const Algebra& a, const JumpAuto& phi, const JumpAuto& psi, const RhoMap& rho, int i, int j) {
  const Quiver& q = a.quiver();
  if (phi.jump != psi.jump) throw Error("shift_rho: automorphisms have different jumps");
  require_same_vertices(q, phi.sigma, psi.sigma);
  const JumpAuto lambda_part = decompose(q, phi).part;
  const JumpAuto mu_part = decompose(q, psi).part;
  if (auto bad = first_invalid_path(a, level_auto(q, lambda_part, i), level_auto(q, mu_part, j), rho)) {
    throw Error("rho fails the level (" + std::to_string(i) + ", " + std::to_string(j) + ") identity on " +
                to_string(q, a.path(*bad)));
  }
  RhoMap out(q.vertex_count());
  for (VertexId z = 0; z < q.vertex_count(); ++z) {
    out[z] = rho[z] * mu_part.lambda.cumulative(j, z) / lambda_part.lambda.cumulative(i, z);
  }
  if (first_invalid_path(a, level_auto(q, lambda_part, 0), level_auto(q, mu_part, 0), out)) {
    throw Error("shift_rho: shifted rho fails the level-0 identity");
  }
  return out;
}

const Rational& EtaFamily::at(int k, const HatObject& x) const {
  auto it = values_.find({k, x});
  if (it == values_.end()) throw Error("eta_{" + std::to_string(k) + "} was not built for this object");
  return it->second;
}

EtaFamily build_eta(const JumpAuto& g, const WindowRho& rho, int min_power, int max_power,
                    std::span<const HatObject> objects) {
  if (min_power > max_power) throw Error("build_eta: empty power range");
  auto rho_at = [&](const HatObject& x) -> const Rational& {
    auto it = rho.find(x);
    if (it == rho.end()) throw Error("build_eta: power range exceeds the window of rho");
    return it->second;
  };
  EtaFamily eta;
  eta.min_power_ = min_power;
  eta.max_power_ = max_power;
  for (const HatObject& x : objects) {
    for (int k = min_power; k <= max_power; ++k) {
      Rational value = 1;
      HatObject at = x;
      if (k > 0) {
        for (int step = 0; step < k; ++step) {
          value *= rho_at(at);
          at = apply_jump_auto(g, at);
        }
      } else {
        for (int step = 0; step < -k; ++step) {
          at = preimage(g, at);
          value /= rho_at(at);
        }
      }
      eta.values_.emplace(std::pair{k, x}, std::move(value));
    }
  }
  return eta;
}

bool eta_cocycle_holds(const EtaFamily& eta, const JumpAuto& g) {
  auto power_of = [&](HatObject x, int n) {
    for (; n > 0; --n) x = apply_jump_auto(g, x);
    for (; n < 0; ++n) x = preimage(g, x);
    return x;
  };
  for (const auto& [key, eta_n] : eta.entries()) {
    const auto& [n, x] = key;
    const HatObject moved = power_of(x, n);
    for (int m = eta.min_power(); m <= eta.max_power(); ++m) {
      if (!eta.contains(m + n, x) || !eta.contains(m, moved)) continue;
      if (eta.at(m + n, x) != eta.at(m, moved) * eta_n) return false;
    }
  }
  return true;
}

bool eta_natural(const RepetitiveWindow& w, const JumpAuto& g, const JumpAuto& h, const EtaFamily& eta, int k) {
  const Quiver& q = w.algebra().quiver();
  const JumpAuto gk = power_jump(q, g, k);
  const JumpAuto hk = power_jump(q, h, k);
  for (std::size_t f = 0; f < w.size(); ++f) {
    const HatObject x = w.source(f);
    const HatObject y = w.target(f);
    if (!eta.contains(k, x) || !eta.contains(k, y)) continue;
    auto [cg, ig] = apply_jump_auto(w.algebra(), gk, w.morphism(f));
    auto [ch, ih] = apply_jump_auto(w.algebra(), hk, w.morphism(f));
    if (ig != ih || eta.at(k, y) * cg != ch * eta.at(k, x)) return false;
  }
  return true;
}

}  // namespace repcat

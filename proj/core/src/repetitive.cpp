#include "repcat/repetitive.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

namespace repcat {

HatObject source(const Algebra& a, const HatMorphism& m) {
  const Path& p = a.path(m.path);
  if (m.kind == MorphismKind::algebra) return {p.source, m.level};
  return {p.target, m.level};
}

HatObject target(const Algebra& a, const HatMorphism& m) {
  const Path& p = a.path(m.path);
  if (m.kind == MorphismKind::algebra) return {p.target, m.level};
  return {p.source, m.level + 1};
}

std::string to_string(const Quiver& q, const HatObject& x) {
  return q.vertex_name(x.vertex) + "^[" + std::to_string(x.level) + "]";
}

std::string to_string(const Algebra& a, const HatMorphism& m) {
  std::string body = to_string(a.quiver(), a.path(m.path));
  if (m.kind == MorphismKind::dual) body = "D(" + body + ")";
  return body + "^[" + std::to_string(m.level) + "]";
}

std::vector<HatObject> RepetitiveWindow::objects() const {
  std::vector<HatObject> out;
  for (int i = lo_; i <= hi_; ++i) {
    for (VertexId x = 0; x < algebra_.quiver().vertex_count(); ++x) out.push_back({x, i});
  }
  return out;
}

std::optional<std::size_t> RepetitiveWindow::find(const HatMorphism& m) const {
  auto it = index_.find(m);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t RepetitiveWindow::index(const HatMorphism& m) const {
  if (auto i = find(m)) return *i;
  throw Error("morphism " + to_string(algebra_, m) + " lies outside the window [" + std::to_string(lo_) + ", " +
              std::to_string(hi_) + "]");
}

std::span<const std::size_t> RepetitiveWindow::hom(const HatObject& u, const HatObject& v) const {
  auto it = hom_.find({u, v});
  if (it == hom_.end()) return {};
  return it->second;
}

std::size_t RepetitiveWindow::identity(const HatObject& x) const {
  return index({MorphismKind::algebra, x.level, algebra_.identity(x.vertex)});
}

namespace {
const Element kZero{};
}

const Element& RepetitiveWindow::compose(std::size_t g, std::size_t f) const {
  if (target(f) != source(g)) throw Error("compose: morphisms are not composable");
  auto it = products_.find({g, f});
  return it == products_.end() ? kZero : it->second;
}

Element RepetitiveWindow::compose(const Element& g, const Element& f) const {
  Element out;
  for (const auto& [gi, gc] : g) {
    for (const auto& [fi, fc] : f) {
      if (target(fi) != source(gi)) continue;
      for (const auto& [r, c] : compose(gi, fi)) add_term(out, r, gc * fc * c);
    }
  }
  return out;
}

RepetitiveWindow build_window(const Algebra& a, int lo, int hi) {
  if (lo > hi) throw Error("window bounds are reversed");
  RepetitiveWindow w(a, lo, hi);
  for (int i = lo; i <= hi; ++i) {
    for (std::size_t p = 0; p < a.dimension(); ++p) w.morphisms_.push_back({MorphismKind::algebra, i, p});
    if (i == hi) break;
    for (std::size_t p = 0; p < a.dimension(); ++p) w.morphisms_.push_back({MorphismKind::dual, i, p});
  }
  std::map<HatObject, std::vector<std::size_t>> outgoing;
  for (std::size_t k = 0; k < w.morphisms_.size(); ++k) {
    w.index_.emplace(w.morphisms_[k], k);
    w.hom_[{w.source(k), w.target(k)}].push_back(k);
    outgoing[w.source(k)].push_back(k);
  }

  // Only two kinds of nonzero products: within one level, and a dual
  // morphism composed with an algebra morphism on either side.
  for (std::size_t f = 0; f < w.morphisms_.size(); ++f) {
    const HatMorphism& mf = w.morphisms_[f];
    for (std::size_t g : outgoing[w.target(f)]) {
      const HatMorphism& mg = w.morphisms_[g];
      Element out;
      if (mf.kind == MorphismKind::algebra && mg.kind == MorphismKind::algebra) {
        if (auto prod = a.multiply(mg.path, mf.path)) {
          add_term(out, w.index({MorphismKind::algebra, mf.level, *prod}), 1);
        }
      } else if (mf.kind == MorphismKind::algebra && mg.kind == MorphismKind::dual) {
        for (const auto& [q, c] : w.dual_.right(mg.path, mf.path)) {
          add_term(out, w.index({MorphismKind::dual, mg.level, q}), c);
        }
      } else if (mf.kind == MorphismKind::dual && mg.kind == MorphismKind::algebra) {
        for (const auto& [q, c] : w.dual_.left(mg.path, mf.path)) {
          add_term(out, w.index({MorphismKind::dual, mf.level, q}), c);
        }
      }
      if (!out.empty()) w.products_.emplace(std::pair{g, f}, std::move(out));
    }
  }
  return w;
}

std::pair<int, int> default_window(int jump) {
  int n = std::abs(jump);
  if (n == 0) return {-2, 2};
  return {-2 * n - 2, 2 * n + 2};
}

HatMorphism nakayama_shift(const HatMorphism& m, int shift) { return {m.kind, m.level + shift, m.path}; }

Element nakayama_shift(const RepetitiveWindow& w, const Element& e, int shift) {
  Element out;
  for (const auto& [i, c] : e) add_term(out, w.index(nakayama_shift(w.morphism(i), shift)), c);
  return out;
}

Rational LevelScalars::at(int level, VertexId x) const {
  auto it = values_.find({level, x});
  return it == values_.end() ? Rational(1) : it->second;
}

void LevelScalars::set(int level, VertexId x, const Rational& value) {
  if (value == 0) throw Error("level scalar must be nonzero");
  if (value == 1) {
    values_.erase({level, x});
  } else {
    values_[{level, x}] = value;
  }
}

std::vector<int> LevelScalars::levels() const {
  std::set<int> out;
  for (const auto& [key, value] : values_) out.insert(key.first);
  return {out.begin(), out.end()};
}

Rational LevelScalars::cumulative(int level, VertexId x) const {
  Rational c = 1;
  for (const auto& [key, value] : values_) {
    if (key.second != x) continue;
    if (level > 0 && key.first >= 0 && key.first < level) c *= value;
    if (level < 0 && key.first >= level && key.first < 0) c /= value;
  }
  return c;
}

namespace {

std::vector<Rational> cumulative_row(const Quiver& q, const LevelScalars& lambda, int level) {
  std::vector<Rational> row(q.vertex_count());
  for (VertexId x = 0; x < q.vertex_count(); ++x) row[x] = lambda.cumulative(level, x);
  return row;
}

// sigma ∘ xi(c_level), without the jump check.
ScalingAuto level_part(const Quiver& q, const JumpAuto& f, int level) {
  return compose_autos(f.sigma, xi(q, cumulative_row(q, f.lambda, level)));
}

}  // namespace

JumpAuto nu(const Quiver& q, int n) { return JumpAuto{n, ScalingAuto::identity(q), {}}; }

JumpAuto hat_lift(const ScalingAuto& s) { return JumpAuto{0, s, {}}; }

JumpAuto Phi(const Quiver& q, LevelScalars lambda) {
  for (const auto& [key, value] : lambda.entries()) {
    if (key.second >= q.vertex_count()) throw Error("level scalar names an undeclared vertex");
  }
  return JumpAuto{0, ScalingAuto::identity(q), std::move(lambda)};
}

HatObject apply_jump_auto(const JumpAuto& f, const HatObject& x) {
  return {f.sigma.vertex(x.vertex), x.level + f.jump};
}

std::pair<Rational, HatMorphism> apply_jump_auto(const Algebra& a, const JumpAuto& f, const HatMorphism& m) {
  const Quiver& q = a.quiver();
  const int j = m.level + f.jump;
  const ScalingAuto L = level_part(q, f, j);
  if (m.kind == MorphismKind::algebra) {
    auto [c, image] = apply_auto(a, L, m.path);
    return {c, {MorphismKind::algebra, j, image}};
  }

  // beta_p with p: y -> x goes to the functional q ↦ beta_p(phibar^-1(q))
  // on A(sigma y, sigma x), where phibar(r) = lambda_j(s(r)) L(r).
  const Path& p = a.path(m.path);
  const ScalingAuto L_inv = invert_auto(L);
  const Rational bar = f.lambda.at(j, p.source);
  for (std::size_t r : a.hom(L.vertex(p.source), L.vertex(p.target))) {
    auto [c, preimage] = apply_auto(a, L_inv, r);
    if (preimage == m.path) return {c / bar, {MorphismKind::dual, j, r}};
  }
  throw Error("dual transport found no image for " + to_string(a, m));
}

Element apply_jump_auto(const RepetitiveWindow& w, const JumpAuto& f, const Element& e) {
  Element out;
  for (const auto& [i, c] : e) {
    auto [scale, image] = apply_jump_auto(w.algebra(), f, w.morphism(i));
    add_term(out, w.index(image), c * scale);
  }
  return out;
}

JumpAuto compose_jump(const Quiver& q, const JumpAuto& f, const JumpAuto& g) {
  // nu^n Phi(mu) nu^-n scales x^[i] by c^mu_{i-n}(x). Splitting off the
  // level-constant factor c^mu_{-n} leaves a Phi-family; that factor is a
  // hat-lifted xi and is absorbed into sigma.
  const int n = f.jump;
  std::vector<Rational> kappa(q.vertex_count());
  for (VertexId x = 0; x < q.vertex_count(); ++x) kappa[x] = g.lambda.cumulative(-n, x);

  std::set<int> levels;
  for (int i : f.lambda.levels()) levels.insert(i);
  for (int i : g.lambda.levels()) levels.insert(i + n);
  LevelScalars lambda;
  for (int i : levels) {
    for (VertexId x = 0; x < q.vertex_count(); ++x) {
      lambda.set(i, x, f.lambda.at(i, g.sigma.vertex(x)) * g.lambda.at(i - n, x));
    }
  }
  ScalingAuto sigma = compose_autos(compose_autos(f.sigma, g.sigma), xi(q, kappa));
  return JumpAuto{f.jump + g.jump, std::move(sigma), std::move(lambda)};
}

JumpAuto invert_jump(const Quiver& q, const JumpAuto& f) {
  const int n = f.jump;
  const ScalingAuto sigma_inv = invert_auto(f.sigma);
  std::vector<Rational> kappa(q.vertex_count());
  for (VertexId x = 0; x < q.vertex_count(); ++x) kappa[x] = 1 / f.lambda.cumulative(n, sigma_inv.vertex(x));

  LevelScalars lambda;
  for (int i : f.lambda.levels()) {
    for (VertexId x = 0; x < q.vertex_count(); ++x) {
      lambda.set(i - n, x, 1 / f.lambda.at(i, sigma_inv.vertex(x)));
    }
  }
  return JumpAuto{-n, compose_autos(sigma_inv, xi(q, kappa)), std::move(lambda)};
}

JumpAuto power_jump(const Quiver& q, const JumpAuto& f, int k) {
  JumpAuto base = k < 0 ? invert_jump(q, f) : f;
  JumpAuto out = nu(q, 0);
  for (int step = 0; step < std::abs(k); ++step) out = compose_jump(q, base, out);
  return out;
}

ScalingAuto level_auto(const Quiver& q, const JumpAuto& f, int level) {
  if (f.jump != 0) throw Error("level automorphisms are defined for jump 0 only");
  return level_part(q, f, level);
}

ScalingAuto Psi(const RepetitiveWindow& w, const JumpAuto& f) {
  if (f.jump != 0) throw Error("Psi needs an automorphism with jump 0, got jump " + std::to_string(f.jump));
  if (!w.contains(0)) throw Error("Psi needs level 0 inside the window");
  const Algebra& a = w.algebra();
  const Quiver& q = a.quiver();
  std::vector<VertexId> vp(q.vertex_count());
  for (VertexId x = 0; x < q.vertex_count(); ++x) vp[x] = apply_jump_auto(f, HatObject{x, 0}).vertex;
  std::vector<ArrowId> ap(q.arrow_count());
  ArrowScalars scalars(q.arrow_count());
  for (ArrowId x = 0; x < q.arrow_count(); ++x) {
    auto idx = a.find(make_path(q, {x}));
    if (!idx) throw Error("arrow '" + q.arrow(x).name + "' is zero in the algebra");
    auto [c, image] = apply_jump_auto(a, f, HatMorphism{MorphismKind::algebra, 0, *idx});
    const Path& ip = a.path(image.path);
    if (ip.length() != 1) throw Error("level-0 action does not send arrows to arrows");
    ap[x] = ip.arrows.front();
    scalars[x] = c;
  }
  return ScalingAuto(a, std::move(vp), std::move(ap), std::move(scalars));
}

Decomposition decompose(const Quiver& q, const JumpAuto& f) {
  JumpAuto part = compose_jump(q, f, nu(q, -f.jump));
  return Decomposition{f.jump, std::move(part)};
}

LevelScalars recover_lambda(const RepetitiveWindow& w, const JumpAuto& f) {
  if (!Psi(w, f).is_identity()) throw Error("recover_lambda: the level-0 part is not the identity");
  const Algebra& a = w.algebra();
  LevelScalars out;
  for (int i = w.lo(); i < w.hi(); ++i) {
    for (VertexId x = 0; x < a.quiver().vertex_count(); ++x) {
      auto [c, image] = apply_jump_auto(a, f, HatMorphism{MorphismKind::dual, i, a.identity(x)});
      if (image.path != a.identity(x)) throw Error("recover_lambda: socle element is not fixed");
      out.set(i, x, 1 / c);
    }
  }
  return out;
}

bool same_action(const RepetitiveWindow& w, const JumpAuto& f, const JumpAuto& g) {
  for (const HatObject& x : w.objects()) {
    if (apply_jump_auto(f, x) != apply_jump_auto(g, x)) return false;
  }
  for (const HatMorphism& m : w.morphisms()) {
    if (apply_jump_auto(w.algebra(), f, m) != apply_jump_auto(w.algebra(), g, m)) return false;
  }
  return true;
}

}  // namespace repcat

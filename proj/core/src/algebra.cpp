#include "repcat/algebra.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace repcat {

Path make_path(const Quiver& q, std::vector<ArrowId> arrows) {
  if (arrows.empty()) throw Error("a nontrivial path needs at least one arrow");
  for (ArrowId a : arrows) {
    if (a >= q.arrow_count()) throw Error("path uses an undeclared arrow");
  }
  for (std::size_t k = 1; k < arrows.size(); ++k) {
    if (q.arrow(arrows[k - 1]).target != q.arrow(arrows[k]).source) {
      throw Error("path arrows '" + q.arrow(arrows[k - 1]).name + "' and '" + q.arrow(arrows[k]).name +
                  "' are not composable");
    }
  }
  Path p;
  p.source = q.arrow(arrows.front()).source;
  p.target = q.arrow(arrows.back()).target;
  p.arrows = std::move(arrows);
  return p;
}

Path trivial_path(VertexId x) { return Path{x, x, {}}; }

std::string to_string(const Quiver& q, const Path& p) {
  if (p.arrows.empty()) return "e_" + q.vertex_name(p.source);
  std::string out;
  for (auto it = p.arrows.rbegin(); it != p.arrows.rend(); ++it) {
    if (!out.empty()) out += '*';
    out += q.arrow(*it).name;
  }
  return out;
}

std::optional<std::size_t> Algebra::find(const Path& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool Algebra::is_zero(std::span<const ArrowId> arrows) const {
  for (const Path& r : relations_) {
    if (r.length() > arrows.size()) continue;
    auto hit = std::search(arrows.begin(), arrows.end(), r.arrows.begin(), r.arrows.end());
    if (hit != arrows.end()) return true;
  }
  return false;
}

std::optional<std::size_t> Algebra::multiply(std::size_t g, std::size_t f) const {
  const Path& pf = path(f);
  const Path& pg = path(g);
  if (pf.target != pg.source) throw Error("multiply: paths are not composable");
  Path prod{pf.source, pg.target, pf.arrows};
  prod.arrows.insert(prod.arrows.end(), pg.arrows.begin(), pg.arrows.end());
  return find(prod);
}

Element Algebra::multiply(const Element& g, const Element& f) const {
  Element out;
  for (const auto& [gi, gc] : g) {
    for (const auto& [fi, fc] : f) {
      if (path(fi).target != path(gi).source) continue;
      if (auto prod = multiply(gi, fi)) add_term(out, *prod, gc * fc);
    }
  }
  return out;
}

namespace {

bool is_connected(const Quiver& q) {
  if (q.vertex_count() == 0) return false;
  std::vector<bool> seen(q.vertex_count(), false);
  std::deque<VertexId> queue{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!queue.empty()) {
    VertexId at = queue.front();
    queue.pop_front();
    for (const Arrow& a : q.arrows()) {
      for (auto [from, to] : {std::pair{a.source, a.target}, std::pair{a.target, a.source}}) {
        if (from == at && !seen[to]) {
          seen[to] = true;
          ++count;
          queue.push_back(to);
        }
      }
    }
  }
  return count == q.vertex_count();
}

bool ends_with(const std::vector<ArrowId>& arrows, const std::vector<ArrowId>& suffix) {
  return suffix.size() <= arrows.size() && std::equal(suffix.rbegin(), suffix.rend(), arrows.rbegin());
}

}  // namespace

Algebra build_algebra(Quiver q, std::vector<std::vector<ArrowId>> relations) {
  if (q.vertex_count() == 0) throw Error("the quiver has no vertices");
  if (!is_connected(q)) throw Error("the quiver is not connected");

  Algebra alg;
  std::size_t longest = 0;
  for (auto& r : relations) {
    if (r.size() < 2) throw Error("relations must have length at least 2");
    Path p = make_path(q, std::move(r));
    longest = std::max(longest, p.length());
    alg.relations_.push_back(std::move(p));
  }
  std::sort(alg.relations_.begin(), alg.relations_.end());
  alg.relations_.erase(std::unique(alg.relations_.begin(), alg.relations_.end()), alg.relations_.end());

  // Nonzero paths are words avoiding the relations. Whether a word stays
  // nonzero depends only on its end vertex and its last (longest - 1)
  // arrows, so a repeated state along one path is a pumpable cycle.
  const std::size_t memory = longest == 0 ? 0 : longest - 1;
  using State = std::pair<VertexId, std::vector<ArrowId>>;
  auto state_of = [&](const Path& p) {
    std::vector<ArrowId> tail(p.arrows.end() - static_cast<std::ptrdiff_t>(std::min(memory, p.length())),
                              p.arrows.end());
    return State{p.target, std::move(tail)};
  };

  for (VertexId x = 0; x < q.vertex_count(); ++x) {
    std::vector<State> stack_states;
    Path current = trivial_path(x);
    auto dfs = [&](auto&& self) -> void {
      State st = state_of(current);
      auto hit = std::find(stack_states.begin(), stack_states.end(), st);
      if (hit != stack_states.end()) {
        std::size_t from = static_cast<std::size_t>(hit - stack_states.begin());
        std::vector<ArrowId> cyc(current.arrows.begin() + static_cast<std::ptrdiff_t>(from), current.arrows.end());
        Path cycle = make_path(q, std::move(cyc));
        throw NonAdmissibleError("relations are not admissible: the cycle " + to_string(q, cycle) +
                                     " has no vanishing power",
                                 cycle);
      }
      alg.index_.emplace(current, alg.basis_.size());
      alg.basis_.push_back(current);
      stack_states.push_back(std::move(st));
      for (ArrowId a = 0; a < q.arrow_count(); ++a) {
        if (q.arrow(a).source != current.target) continue;
        current.arrows.push_back(a);
        VertexId saved = current.target;
        current.target = q.arrow(a).target;
        bool zero = std::any_of(alg.relations_.begin(), alg.relations_.end(),
                                [&](const Path& r) { return ends_with(current.arrows, r.arrows); });
        if (!zero) self(self);
        current.target = saved;
        current.arrows.pop_back();
      }
      stack_states.pop_back();
    };
    dfs(dfs);
  }

  const std::size_t n = q.vertex_count();
  alg.hom_.assign(n, std::vector<std::vector<std::size_t>>(n));
  alg.identities_.resize(n);
  for (std::size_t i = 0; i < alg.basis_.size(); ++i) {
    const Path& p = alg.basis_[i];
    alg.hom_[p.source][p.target].push_back(i);
    if (p.arrows.empty()) alg.identities_[p.source] = i;
  }
  alg.quiver_ = std::move(q);
  return alg;
}

bool has_no_nonzero_oriented_cycles(const Algebra& a) {
  for (VertexId x = 0; x < a.quiver().vertex_count(); ++x) {
    if (a.hom(x, x).size() != 1) return false;
  }
  return true;
}

ScalingAuto ScalingAuto::identity(const Quiver& q) {
  std::vector<VertexId> vp(q.vertex_count());
  std::vector<ArrowId> ap(q.arrow_count());
  for (std::size_t i = 0; i < vp.size(); ++i) vp[i] = i;
  for (std::size_t i = 0; i < ap.size(); ++i) ap[i] = i;
  return ScalingAuto(Unchecked{}, std::move(vp), std::move(ap), ArrowScalars(q.arrow_count(), Rational(1)));
}

ScalingAuto ScalingAuto::scaling(const Algebra& a, ArrowScalars scalars) {
  ScalingAuto id = identity(a.quiver());
  return ScalingAuto(a, {id.vertex_perm_.begin(), id.vertex_perm_.end()},
                     {id.arrow_perm_.begin(), id.arrow_perm_.end()}, std::move(scalars));
}

namespace {

template <typename T>
bool is_permutation_of_range(const std::vector<T>& perm) {
  std::vector<bool> hit(perm.size(), false);
  for (T v : perm) {
    if (v >= perm.size() || hit[v]) return false;
    hit[v] = true;
  }
  return true;
}

}  // namespace

ScalingAuto::ScalingAuto(const Algebra& a, std::vector<VertexId> vertex_perm, std::vector<ArrowId> arrow_perm,
                         ArrowScalars scalars)
    : vertex_perm_(std::move(vertex_perm)), arrow_perm_(std::move(arrow_perm)), scalars_(std::move(scalars)) {
  const Quiver& q = a.quiver();
  if (vertex_perm_.size() != q.vertex_count() || !is_permutation_of_range(vertex_perm_)) {
    throw Error("vertex map is not a bijection on the vertices");
  }
  if (arrow_perm_.size() != q.arrow_count() || !is_permutation_of_range(arrow_perm_)) {
    throw Error("arrow map is not a bijection on the arrows");
  }
  if (scalars_.size() != q.arrow_count()) throw Error("one scalar per arrow is required");
  for (ArrowId x = 0; x < q.arrow_count(); ++x) {
    if (scalars_[x] == 0) throw Error("arrow scalar for '" + q.arrow(x).name + "' is zero");
    const Arrow& from = q.arrow(x);
    const Arrow& to = q.arrow(arrow_perm_[x]);
    if (to.source != vertex_perm_[from.source] || to.target != vertex_perm_[from.target]) {
      throw Error("arrow map sends '" + from.name + "' to '" + to.name + "', which has the wrong endpoints");
    }
  }
  std::vector<ArrowId> inverse_perm(arrow_perm_.size());
  for (ArrowId x = 0; x < arrow_perm_.size(); ++x) inverse_perm[arrow_perm_[x]] = x;
  for (const Path& r : a.relations()) {
    std::vector<ArrowId> fwd, back;
    for (ArrowId x : r.arrows) {
      fwd.push_back(arrow_perm_[x]);
      back.push_back(inverse_perm[x]);
    }
    if (!a.is_zero(fwd) || !a.is_zero(back)) {
      throw Error("arrow map does not preserve the relation " + to_string(q, r));
    }
  }
}

bool ScalingAuto::permutes_nothing() const {
  for (std::size_t i = 0; i < vertex_perm_.size(); ++i) {
    if (vertex_perm_[i] != i) return false;
  }
  for (std::size_t i = 0; i < arrow_perm_.size(); ++i) {
    if (arrow_perm_[i] != i) return false;
  }
  return true;
}

bool ScalingAuto::is_identity() const {
  return permutes_nothing() && std::all_of(scalars_.begin(), scalars_.end(), [](const Rational& c) { return c == 1; });
}

ScalingAuto compose_autos(const ScalingAuto& f, const ScalingAuto& g) {
  if (f.vertex_perm_.size() != g.vertex_perm_.size() || f.arrow_perm_.size() != g.arrow_perm_.size()) {
    throw Error("compose_autos: automorphisms of different quivers");
  }
  std::vector<VertexId> vp(g.vertex_perm_.size());
  std::vector<ArrowId> ap(g.arrow_perm_.size());
  ArrowScalars s(g.arrow_perm_.size());
  for (std::size_t v = 0; v < vp.size(); ++v) vp[v] = f.vertex_perm_[g.vertex_perm_[v]];
  for (std::size_t a = 0; a < ap.size(); ++a) {
    ap[a] = f.arrow_perm_[g.arrow_perm_[a]];
    s[a] = g.scalars_[a] * f.scalars_[g.arrow_perm_[a]];
  }
  return ScalingAuto(ScalingAuto::Unchecked{}, std::move(vp), std::move(ap), std::move(s));
}

ScalingAuto invert_auto(const ScalingAuto& f) {
  std::vector<VertexId> vp(f.vertex_perm_.size());
  std::vector<ArrowId> ap(f.arrow_perm_.size());
  ArrowScalars s(f.arrow_perm_.size());
  for (std::size_t v = 0; v < vp.size(); ++v) vp[f.vertex_perm_[v]] = v;
  for (std::size_t a = 0; a < ap.size(); ++a) ap[f.arrow_perm_[a]] = a;
  for (std::size_t a = 0; a < ap.size(); ++a) s[a] = 1 / f.scalars_[ap[a]];
  return ScalingAuto(ScalingAuto::Unchecked{}, std::move(vp), std::move(ap), std::move(s));
}

ScalingAuto xi(const Quiver& q, std::span<const Rational> lambda) {
  if (lambda.size() != q.vertex_count()) throw Error("xi: one scalar per vertex is required");
  for (const Rational& c : lambda) {
    if (c == 0) throw Error("xi: vertex scalars must be nonzero");
  }
  ScalingAuto out = ScalingAuto::identity(q);
  for (ArrowId a = 0; a < q.arrow_count(); ++a) {
    const Arrow& arr = q.arrow(a);
    out.scalars_[a] = lambda[arr.source] / lambda[arr.target];
  }
  return out;
}

Rational path_scalar(const ScalingAuto& f, const Path& p) {
  Rational c = 1;
  for (ArrowId a : p.arrows) c *= f.scalar(a);
  return c;
}

std::pair<Rational, std::size_t> apply_auto(const Algebra& a, const ScalingAuto& f, std::size_t basis) {
  const Path& p = a.path(basis);
  Path image{f.vertex(p.source), f.vertex(p.target), {}};
  image.arrows.reserve(p.length());
  for (ArrowId x : p.arrows) image.arrows.push_back(f.arrow(x));
  auto idx = a.find(image);
  if (!idx) throw Error("automorphism sends a basis path to zero: " + to_string(a.quiver(), p));
  return {path_scalar(f, p), *idx};
}

Element apply_auto(const Algebra& a, const ScalingAuto& f, const Element& element) {
  Element out;
  for (const auto& [basis, coefficient] : element) {
    auto [c, image] = apply_auto(a, f, basis);
    add_term(out, image, coefficient * c);
  }
  return out;
}

DualBasis::DualBasis(const Algebra& a) {
  const std::size_t n = a.dimension();
  for (std::size_t p = 0; p < n; ++p) {
    const Path& pp = a.path(p);
    // u in A(source(p), z): (u∘beta_p)(q) = beta_p(q∘u), q in A(z, target(p)).
    for (std::size_t u = 0; u < n; ++u) {
      if (a.path(u).source != pp.source) continue;
      Element e;
      for (std::size_t q : a.hom(a.path(u).target, pp.target)) {
        if (auto qu = a.multiply(q, u)) add_term(e, q, pairing(p, *qu));
      }
      left_.emplace(std::pair{u, p}, std::move(e));
    }
    // v in A(w, target(p)): (beta_p∘v)(q) = beta_p(v∘q), q in A(source(p), w).
    for (std::size_t v = 0; v < n; ++v) {
      if (a.path(v).target != pp.target) continue;
      Element e;
      for (std::size_t q : a.hom(pp.source, a.path(v).source)) {
        if (auto vq = a.multiply(v, q)) add_term(e, q, pairing(p, *vq));
      }
      right_.emplace(std::pair{p, v}, std::move(e));
    }
  }
}

namespace {
const Element kEmptyElement{};
}

const Element& DualBasis::left(std::size_t u, std::size_t p) const {
  auto it = left_.find({u, p});
  return it == left_.end() ? kEmptyElement : it->second;
}

const Element& DualBasis::right(std::size_t p, std::size_t v) const {
  auto it = right_.find({p, v});
  return it == right_.end() ? kEmptyElement : it->second;
}

Element DualBasis::act(std::size_t u, std::size_t p, std::size_t v) const {
  Element out;
  for (const auto& [q, c] : right(p, v)) {
    for (const auto& [r, d] : left(u, q)) add_term(out, r, c * d);
  }
  return out;
}

}  // namespace repcat

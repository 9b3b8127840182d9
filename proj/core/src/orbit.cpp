#include "repcat/orbit.hpp"

#include <cstdlib>
#include <set>

namespace repcat {

std::optional<std::size_t> GradedAlgebra::find(const OrbitLabel& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

namespace {
const Element kZero{};
}

const Element& GradedAlgebra::product(std::size_t g, std::size_t f) const {
  if (!composable(g, f)) throw Error("orbit product: basis elements are not composable");
  auto it = products_.find({g, f});
  return it == products_.end() ? kZero : it->second;
}

Element GradedAlgebra::product(const Element& g, const Element& f) const {
  Element out;
  for (const auto& [gi, gc] : g) {
    for (const auto& [fi, fc] : f) {
      if (!composable(gi, fi)) continue;
      for (const auto& [r, c] : product(gi, fi)) add_term(out, r, gc * fc * c);
    }
  }
  return out;
}

void GradedAlgebra::set_product(std::size_t g, std::size_t f, Element value) {
  if (!composable(g, f)) throw Error("set_product: basis elements are not composable");
  if (value.empty()) {
    products_.erase({g, f});
  } else {
    products_[{g, f}] = std::move(value);
  }
}

GradedAlgebra build_orbit(const RepetitiveWindow& w, const JumpAuto& phi) {
  const int n = phi.jump;
  if (n == 0) {
    throw Error("refusing to build the orbit algebra of a jump-0 automorphism: it has infinitely many objects");
  }
  const Algebra& a = w.algebra();
  const Quiver& q = a.quiver();
  const int width = std::abs(n);

  GradedAlgebra out;
  for (int r = 0; r < width; ++r) {
    for (VertexId x = 0; x < q.vertex_count(); ++x) {
      out.objects_.push_back({x, r});
      out.object_names_.push_back(to_string(q, HatObject{x, r}));
    }
  }

  std::map<int, JumpAuto> powers;
  auto power = [&](int k) -> const JumpAuto& {
    auto it = powers.find(k);
    if (it == powers.end()) it = powers.emplace(k, power_jump(q, phi, k)).first;
    return it->second;
  };
  auto window_index = [&](const HatMorphism& m) {
    if (auto i = w.find(m)) return *i;
    throw Error("window [" + std::to_string(w.lo()) + ", " + std::to_string(w.hi()) +
                "] is too narrow for this orbit algebra");
  };

  // Hat(phi^k u, v) is nonzero only when phi^k u sits at the level of v or
  // one below, which pins down k.
  for (std::size_t ui = 0; ui < out.objects_.size(); ++ui) {
    const HatObject u = out.objects_[ui];
    for (std::size_t vi = 0; vi < out.objects_.size(); ++vi) {
      const HatObject v = out.objects_[vi];
      std::set<int> degrees;
      for (int target_level : {v.level - 1, v.level}) {
        if ((target_level - u.level) % n == 0) degrees.insert((target_level - u.level) / n);
      }
      for (int k : degrees) {
        const HatObject moved = apply_jump_auto(power(k), u);
        if (!w.contains(moved) || !w.contains(v)) throw Error("window is too narrow for this orbit algebra");
        for (std::size_t m : w.hom(moved, v)) {
          OrbitLabel label{ui, vi, k, w.morphism(m)};
          out.index_.emplace(label, out.labels_.size());
          out.labels_.push_back(label);
          out.basis_names_.push_back(out.object_names_[ui] + " -> " + out.object_names_[vi] + " [" +
                                     std::to_string(k) + "] " + to_string(a, w.morphism(m)));
        }
      }
    }
  }
  for (std::size_t ui = 0; ui < out.objects_.size(); ++ui) {
    const HatObject u = out.objects_[ui];
    HatMorphism id{MorphismKind::algebra, u.level, a.identity(u.vertex)};
    out.identities_.push_back(out.index_.at(OrbitLabel{ui, ui, 0, id}));
  }

  for (std::size_t f = 0; f < out.labels_.size(); ++f) {
    const OrbitLabel& lf = out.labels_[f];
    for (std::size_t g = 0; g < out.labels_.size(); ++g) {
      const OrbitLabel& lg = out.labels_[g];
      if (lg.source != lf.target) continue;
      auto [c, moved] = apply_jump_auto(a, power(lg.degree), lf.morphism);
      Element value;
      for (const auto& [r, d] : w.compose(window_index(lg.morphism), window_index(moved))) {
        OrbitLabel lr{lf.source, lg.target, lf.degree + lg.degree, w.morphism(r)};
        auto idx = out.find(lr);
        if (!idx) throw Error("orbit product left the collected basis: " + to_string(a, w.morphism(r)));
        add_term(value, *idx, c * d);
      }
      if (!value.empty()) out.products_.emplace(std::pair{g, f}, std::move(value));
    }
  }
  return out;
}

GradedAlgebra twisted_extension(const Algebra& a, const ScalingAuto& sigma, int n) {
  if (n == 0) throw Error("twisted extensions need a nonzero jump");
  auto [lo, hi] = default_window(n);
  RepetitiveWindow w = build_window(a, lo, hi);
  return build_orbit(w, compose_jump(a.quiver(), hat_lift(sigma), nu(a.quiver(), n)));
}

bool is_associative(const GradedAlgebra& g) {
  const std::size_t d = g.dimension();
  for (std::size_t x = 0; x < d; ++x) {
    for (std::size_t y = 0; y < d; ++y) {
      if (!g.composable(y, x)) continue;
      const Element& yx = g.product(y, x);
      for (std::size_t z = 0; z < d; ++z) {
        if (!g.composable(z, y)) continue;
        Element left = g.product(basis_element(z), yx);
        Element right = g.product(g.product(z, y), basis_element(x));
        if (left != right) return false;
      }
    }
  }
  return true;
}

bool grading_is_additive(const GradedAlgebra& g) {
  for (std::size_t o = 0; o < g.objects().size(); ++o) {
    if (g.degree(g.identity(o)) != 0) return false;
  }
  for (const auto& [key, value] : g.products()) {
    const int expected = g.degree(key.first) + g.degree(key.second);
    for (const auto& [r, c] : value) {
      if (g.degree(r) != expected) return false;
      if (g.label(r).source != g.label(key.second).source || g.label(r).target != g.label(key.first).target) {
        return false;
      }
    }
  }
  return true;
}

GradedIso identity_iso(const GradedAlgebra& g) {
  GradedIso iso;
  for (std::size_t i = 0; i < g.dimension(); ++i) iso.images.emplace_back(Rational(1), i);
  return iso;
}

GradedIso graded_iso_from_rho(const GradedAlgebra& src, const GradedAlgebra& dst, const EtaFamily& eta) {
  GradedIso iso;
  for (std::size_t i = 0; i < src.dimension(); ++i) {
    const OrbitLabel& label = src.label(i);
    auto j = dst.find(label);
    if (!j) throw Error("basis element " + src.basis_name(i) + " has no counterpart in the target algebra");
    const Rational& e = eta.at(label.degree, src.objects()[label.source]);
    iso.images.emplace_back(1 / e, *j);
  }
  return iso;
}

bool verify_graded_iso(const GradedIso& iso, const GradedAlgebra& src, const GradedAlgebra& dst) {
  if (!std::equal(src.objects().begin(), src.objects().end(), dst.objects().begin(), dst.objects().end())) {
    return false;
  }
  if (src.dimension() != dst.dimension() || iso.images.size() != src.dimension()) return false;
  std::vector<bool> hit(dst.dimension(), false);
  for (std::size_t i = 0; i < src.dimension(); ++i) {
    const auto& [c, j] = iso.images[i];
    if (c == 0 || j >= dst.dimension() || hit[j]) return false;
    hit[j] = true;
    const OrbitLabel& ls = src.label(i);
    const OrbitLabel& ld = dst.label(j);
    if (ls.source != ld.source || ls.target != ld.target || ls.degree != ld.degree) return false;
  }

  auto image = [&](const Element& e) {
    Element out;
    for (const auto& [i, c] : e) add_term(out, iso.images[i].second, c * iso.images[i].first);
    return out;
  };
  for (std::size_t f = 0; f < src.dimension(); ++f) {
    for (std::size_t g = 0; g < src.dimension(); ++g) {
      if (!src.composable(g, f)) continue;
      Element lhs = image(src.product(g, f));
      Element rhs = dst.product(image(basis_element(g)), image(basis_element(f)));
      if (lhs != rhs) return false;
    }
  }
  return true;
}

}  // namespace repcat

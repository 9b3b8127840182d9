#pragma once

#include "repcat/criterion.hpp"
#include "repcat/repetitive.hpp"

#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace repcat {

/// Orbit basis element: `morphism` lies in Hat(phi^degree u, v) where u and
/// v are the representatives objects()[source] and objects()[target].
struct OrbitLabel {
  std::size_t source = 0;
  std::size_t target = 0;
  int degree = 0;
  HatMorphism morphism;

  auto operator<=>(const OrbitLabel&) const = default;
};

/// Finite Z-graded algebra (as a category with finitely many objects) given
/// by a basis and exact structure constants.
class GradedAlgebra {
 public:
  std::span<const HatObject> objects() const { return objects_; }
  const std::string& object_name(std::size_t object) const { return object_names_.at(object); }

  std::size_t dimension() const { return labels_.size(); }
  const OrbitLabel& label(std::size_t basis) const { return labels_.at(basis); }
  const std::string& basis_name(std::size_t basis) const { return basis_names_.at(basis); }
  int degree(std::size_t basis) const { return label(basis).degree; }
  std::optional<std::size_t> find(const OrbitLabel& label) const;
  /// Degree-0 identity of an object.
  std::size_t identity(std::size_t object) const { return identities_.at(object); }

  bool composable(std::size_t g, std::size_t f) const { return label(f).target == label(g).source; }
  /// g ⋆ f; empty when zero. Throws Error when not composable.
  const Element& product(std::size_t g, std::size_t f) const;
  Element product(const Element& g, const Element& f) const;
  /// Nonzero products keyed by (g, f).
  const std::map<std::pair<std::size_t, std::size_t>, Element>& products() const { return products_; }

  /// Overwrites one product; used to build corrupted copies in tests.
  void set_product(std::size_t g, std::size_t f, Element value);

 private:
  friend GradedAlgebra build_orbit(const RepetitiveWindow& w, const JumpAuto& phi);

  std::vector<HatObject> objects_;
  std::vector<std::string> object_names_;
  std::vector<OrbitLabel> labels_;
  std::vector<std::string> basis_names_;
  std::map<OrbitLabel, std::size_t> index_;
  std::vector<std::size_t> identities_;
  std::map<std::pair<std::size_t, std::size_t>, Element> products_;
};

/// The orbit algebra of phi: objects x^[r] for 0 <= r < |n|, degree-k
/// components Hat(phi^k u, v), and g ⋆ f = g ∘ phi^l(f) for g of degree l.
/// Throws Error for jump 0 or when the window is too narrow.
GradedAlgebra build_orbit(const RepetitiveWindow& w, const JumpAuto& phi);

/// Orbit algebra of hat(sigma) ∘ nu^n over the default window.
GradedAlgebra twisted_extension(const Algebra& a, const ScalingAuto& sigma, int n);

bool is_associative(const GradedAlgebra& g);
/// Products of degrees k and l lie in degree k + l; identities have degree 0.
bool grading_is_additive(const GradedAlgebra& g);

/// Degree-preserving map sending basis element i of the source to
/// images[i].first times basis element images[i].second of the target.
struct GradedIso {
  std::vector<std::pair<Rational, std::size_t>> images;
};

GradedIso identity_iso(const GradedAlgebra& g);

/// f ↦ eta_{k,u}^-1 f on the degree-k basis element f with source
/// representative u, matched to the target by label. Throws Error when
/// eta lacks an entry or a label has no counterpart.
GradedIso graded_iso_from_rho(const GradedAlgebra& src, const GradedAlgebra& dst, const EtaFamily& eta);

/// Independent check: same objects, degree- and endpoint-preserving,
/// bijective, nonzero scalars, and multiplicative on every composable pair.
bool verify_graded_iso(const GradedIso& iso, const GradedAlgebra& src, const GradedAlgebra& dst);

}  // namespace repcat

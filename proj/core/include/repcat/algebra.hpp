#pragma once

#include "repcat/quiver.hpp"
#include "repcat/scalar.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace repcat {

/// A path of Q, stored source to target: arrows[0] is traversed first.
/// The trivial path at x has no arrows and source == target == x.
struct Path {
  VertexId source = 0;
  VertexId target = 0;
  std::vector<ArrowId> arrows;

  std::size_t length() const { return arrows.size(); }
  auto operator<=>(const Path&) const = default;
};

/// Checks composability and fills source/target. Throws Error.
Path make_path(const Quiver& q, std::vector<ArrowId> arrows);
Path trivial_path(VertexId x);

/// Right-to-left rendering: "b*a"; trivial paths as "e_x".
std::string to_string(const Quiver& q, const Path& p);

/// Relation set that leaves an oriented cycle with infinitely many nonzero
/// powers. `cycle` is one such cycle.
class NonAdmissibleError : public Error {
 public:
  NonAdmissibleError(std::string message, Path cycle) : Error(std::move(message)), cycle_(std::move(cycle)) {}
  const Path& cycle() const { return cycle_; }

 private:
  Path cycle_;
};

/// kQ/I for a monomial admissible ideal I. The basis is the set of paths
/// containing no relation as a contiguous subpath.
class Algebra {
 public:
  const Quiver& quiver() const { return quiver_; }
  std::span<const Path> relations() const { return relations_; }

  std::size_t dimension() const { return basis_.size(); }
  const Path& path(std::size_t basis) const { return basis_.at(basis); }
  std::span<const Path> basis() const { return basis_; }

  /// Basis of A(x, y): paths from x to y.
  std::span<const std::size_t> hom(VertexId x, VertexId y) const { return hom_.at(x).at(y); }
  std::size_t identity(VertexId x) const { return identities_.at(x); }

  std::optional<std::size_t> find(const Path& p) const;
  /// True iff some relation occurs in `arrows` as a contiguous block.
  bool is_zero(std::span<const ArrowId> arrows) const;

  /// g∘f on basis paths: nullopt when the product is zero.
  /// Throws Error when target(f) != source(g).
  std::optional<std::size_t> multiply(std::size_t g, std::size_t f) const;
  Element multiply(const Element& g, const Element& f) const;

 private:
  friend Algebra build_algebra(Quiver q, std::vector<std::vector<ArrowId>> relations);
  Algebra() = default;

  Quiver quiver_;
  std::vector<Path> relations_;
  std::vector<Path> basis_;
  std::vector<std::size_t> identities_;
  std::vector<std::vector<std::vector<std::size_t>>> hom_;
  std::map<Path, std::size_t> index_;
};

/// Relations are arrow sequences in traversal order. Requirements: every
/// relation is a composable path of length >= 2, the quiver is nonempty and
/// connected, and the set of nonzero paths is finite.
/// Throws NonAdmissibleError (naming a cycle) or Error.
Algebra build_algebra(Quiver q, std::vector<std::vector<ArrowId>> relations);

/// True iff A(x,x) is spanned by e_x for every vertex x.
bool has_no_nonzero_oriented_cycles(const Algebra& a);

/// Automorphism of A that permutes vertices and arrows and rescales arrows:
/// arrow a is sent to scalar(a) * arrow_perm(a).
class ScalingAuto {
 public:
  static ScalingAuto identity(const Quiver& q);
  /// Identity permutations with the given arrow scalars.
  static ScalingAuto scaling(const Algebra& a, ArrowScalars scalars);

  /// Throws Error unless the permutations are bijections compatible with
  /// sources and targets, the scalars are nonzero, and relations are mapped
  /// into the ideal in both directions.
  ScalingAuto(const Algebra& a, std::vector<VertexId> vertex_perm, std::vector<ArrowId> arrow_perm,
              ArrowScalars scalars);

  VertexId vertex(VertexId v) const { return vertex_perm_.at(v); }
  ArrowId arrow(ArrowId a) const { return arrow_perm_.at(a); }
  const Rational& scalar(ArrowId a) const { return scalars_.at(a); }

  std::span<const VertexId> vertex_perm() const { return vertex_perm_; }
  std::span<const ArrowId> arrow_perm() const { return arrow_perm_; }
  const ArrowScalars& scalars() const { return scalars_; }

  bool permutes_nothing() const;
  bool is_identity() const;

  bool operator==(const ScalingAuto&) const = default;

 private:
  struct Unchecked {};
  ScalingAuto(Unchecked, std::vector<VertexId> vp, std::vector<ArrowId> ap, ArrowScalars s)
      : vertex_perm_(std::move(vp)), arrow_perm_(std::move(ap)), scalars_(std::move(s)) {}

  friend ScalingAuto compose_autos(const ScalingAuto& f, const ScalingAuto& g);
  friend ScalingAuto invert_auto(const ScalingAuto& f);
  friend ScalingAuto xi(const Quiver& q, std::span<const Rational> lambda);

  std::vector<VertexId> vertex_perm_;
  std::vector<ArrowId> arrow_perm_;
  ArrowScalars scalars_;
};

/// f∘g.
ScalingAuto compose_autos(const ScalingAuto& f, const ScalingAuto& g);
ScalingAuto invert_auto(const ScalingAuto& f);

/// The vertex scaling automorphism: identity on vertices and arrows, and
/// a: x -> y is sent to lambda(y)^-1 lambda(x) a. `lambda` is indexed by
/// vertex and must be nonzero.
ScalingAuto xi(const Quiver& q, std::span<const Rational> lambda);

/// Image of a basis path: (scalar, image basis index).
std::pair<Rational, std::size_t> apply_auto(const Algebra& a, const ScalingAuto& f, std::size_t basis);
Element apply_auto(const Algebra& a, const ScalingAuto& f, const Element& element);

/// Scalar by which f multiplies the path (product of arrow scalars).
Rational path_scalar(const ScalingAuto& f, const Path& p);

/// The dual bimodule DA with the dual basis {beta_p}. For a basis path
/// p: y -> x, beta_p is a functional on A(y, x) and, as a morphism of the
/// repetitive category, runs from x (level i) to y (level i+1).
class DualBasis {
 public:
  explicit DualBasis(const Algebra& a);

  /// beta_p(q).
  Rational pairing(std::size_t p, std::size_t q) const { return p == q ? 1 : 0; }

  /// u∘beta_p for u in A(source(p), z): the functional q -> beta_p(q∘u).
  /// Empty when not composable or zero.
  const Element& left(std::size_t u, std::size_t p) const;
  /// beta_p∘v for v in A(w, target(p)): the functional q -> beta_p(v∘q).
  const Element& right(std::size_t p, std::size_t v) const;
  /// u∘beta_p∘v, i.e. the functional q -> beta_p(v∘q∘u).
  Element act(std::size_t u, std::size_t p, std::size_t v) const;

 private:
  std::map<std::pair<std::size_t, std::size_t>, Element> left_;
  std::map<std::pair<std::size_t, std::size_t>, Element> right_;
};

}  // namespace repcat

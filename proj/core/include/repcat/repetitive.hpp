#pragma once

#include "repcat/algebra.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace repcat {

/// The object x^[level] of the repetitive category.
struct HatObject {
  VertexId vertex = 0;
  int level = 0;

  auto operator<=>(const HatObject&) const = default;
};

enum class MorphismKind : std::uint8_t { algebra, dual };

/// Basis morphism of the repetitive category.
///  - algebra: the path `path` of A(x, y), placed at x^[level] -> y^[level];
///  - dual: beta_p for p = `path` in A(y, x), running x^[level] -> y^[level+1].
/// Self-describing, so it can name morphisms outside any window.
struct HatMorphism {
  MorphismKind kind = MorphismKind::algebra;
  int level = 0;
  std::size_t path = 0;

  auto operator<=>(const HatMorphism&) const = default;
};

HatObject source(const Algebra& a, const HatMorphism& m);
HatObject target(const Algebra& a, const HatMorphism& m);

std::string to_string(const Quiver& q, const HatObject& x);
/// "b*a^[0]" for algebra morphisms, "D(b*a)^[0]" for dual ones.
std::string to_string(const Algebra& a, const HatMorphism& m);

/// The full subcategory of the repetitive category on the levels [lo, hi],
/// with its composition table materialized.
class RepetitiveWindow {
 public:
  const Algebra& algebra() const { return algebra_; }
  const DualBasis& dual() const { return dual_; }
  int lo() const { return lo_; }
  int hi() const { return hi_; }
  bool contains(int level) const { return lo_ <= level && level <= hi_; }
  bool contains(const HatObject& x) const { return contains(x.level) && x.vertex < algebra_.quiver().vertex_count(); }

  std::vector<HatObject> objects() const;

  std::size_t size() const { return morphisms_.size(); }
  const HatMorphism& morphism(std::size_t index) const { return morphisms_.at(index); }
  std::span<const HatMorphism> morphisms() const { return morphisms_; }
  std::optional<std::size_t> find(const HatMorphism& m) const;
  /// Throws Error when m is not inside the window.
  std::size_t index(const HatMorphism& m) const;

  HatObject source(std::size_t index) const { return repcat::source(algebra_, morphism(index)); }
  HatObject target(std::size_t index) const { return repcat::target(algebra_, morphism(index)); }
  std::span<const std::size_t> hom(const HatObject& u, const HatObject& v) const;
  std::size_t identity(const HatObject& x) const;

  /// g∘f on basis morphisms; empty when zero. Throws Error unless
  /// target(f) == source(g).
  const Element& compose(std::size_t g, std::size_t f) const;
  Element compose(const Element& g, const Element& f) const;

 private:
  friend RepetitiveWindow build_window(const Algebra& a, int lo, int hi);
  RepetitiveWindow(const Algebra& a, int lo, int hi) : algebra_(a), dual_(a), lo_(lo), hi_(hi) {}

  Algebra algebra_;
  DualBasis dual_;
  int lo_;
  int hi_;
  std::vector<HatMorphism> morphisms_;
  std::map<HatMorphism, std::size_t> index_;
  std::map<std::pair<HatObject, HatObject>, std::vector<std::size_t>> hom_;
  std::map<std::pair<std::size_t, std::size_t>, Element> products_;
};

/// Throws Error if lo > hi.
RepetitiveWindow build_window(const Algebra& a, int lo, int hi);

/// Levels wide enough for the orbit algebra of an automorphism with jump n.
std::pair<int, int> default_window(int jump);

/// Applies nu^shift. Throws Error when a term leaves the window.
Element nakayama_shift(const RepetitiveWindow& w, const Element& e, int shift = 1);
HatMorphism nakayama_shift(const HatMorphism& m, int shift = 1);

/// Sparse family lambda_i(x) indexed by (level, vertex); missing entries are 1.
class LevelScalars {
 public:
  Rational at(int level, VertexId x) const;
  /// Throws Error on a zero scalar.
  void set(int level, VertexId x, const Rational& value);
  /// Levels carrying a value other than 1, ascending.
  std::vector<int> levels() const;
  bool is_trivial() const { return values_.empty(); }
  const std::map<std::pair<int, VertexId>, Rational>& entries() const { return values_; }

  /// The cumulative family c_i: c_0 = 1, c_{i+1} = c_i * lambda_i, so
  /// c_i = lambda_0...lambda_{i-1} for i > 0 and (lambda_i...lambda_{-1})^-1
  /// for i < 0.
  Rational cumulative(int level, VertexId x) const;

  bool operator==(const LevelScalars&) const = default;

 private:
  std::map<std::pair<int, VertexId>, Rational> values_;
};

/// The automorphism hat(sigma) ∘ Phi(lambda) ∘ nu^jump of the repetitive
/// category. On objects it is x^[i] -> sigma(x)^[i+jump].
struct JumpAuto {
  int jump = 0;
  ScalingAuto sigma;
  LevelScalars lambda;
};

JumpAuto nu(const Quiver& q, int n = 1);
/// Jump 0, lambda = 1: the automorphism induced level by level by s.
JumpAuto hat_lift(const ScalingAuto& s);
/// Jump 0, sigma = id.
JumpAuto Phi(const Quiver& q, LevelScalars lambda);

HatObject apply_jump_auto(const JumpAuto& f, const HatObject& x);
/// Image of a basis morphism as (scalar, basis morphism); never leaves any
/// window because morphisms are self-describing. The dual part is
/// transported through the pairing: beta ↦ beta ∘ (phibar_i)^-1.
std::pair<Rational, HatMorphism> apply_jump_auto(const Algebra& a, const JumpAuto& f, const HatMorphism& m);
/// Throws Error when some image leaves the window.
Element apply_jump_auto(const RepetitiveWindow& w, const JumpAuto& f, const Element& e);

/// f∘g and f^-1 in (jump, sigma, lambda) form.
JumpAuto compose_jump(const Quiver& q, const JumpAuto& f, const JumpAuto& g);
JumpAuto invert_jump(const Quiver& q, const JumpAuto& f);
/// f^k for any integer k.
JumpAuto power_jump(const Quiver& q, const JumpAuto& f, int k);

/// The level-i algebra automorphism phi_i of a jump-0 automorphism, i.e.
/// sigma ∘ xi(c_i). Throws Error on a nonzero jump.
ScalingAuto level_auto(const Quiver& q, const JumpAuto& f, int level);

/// Restriction to level 0, read off the action on the window.
/// Throws Error on a nonzero jump or when the window misses level 0.
ScalingAuto Psi(const RepetitiveWindow& w, const JumpAuto& f);

struct Decomposition {
  int jump = 0;
  /// f ∘ nu^-jump, which has jump 0.
  JumpAuto part;
};
Decomposition decompose(const Quiver& q, const JumpAuto& f);

/// For a jump-0 automorphism acting as the identity on level 0, the family
/// lambda with f = Phi(lambda) on the window, read off f(beta_{e_x}^[i]).
/// Throws Error if Psi(f) is not the identity.
LevelScalars recover_lambda(const RepetitiveWindow& w, const JumpAuto& f);

/// True iff f and g agree on every object and basis morphism of the window.
bool same_action(const RepetitiveWindow& w, const JumpAuto& f, const JumpAuto& g);

}  // namespace repcat

#pragma once

#include "repcat/algebra.hpp"
#include "repcat/quiver.hpp"
#include "repcat/repetitive.hpp"

#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace repcat {

/// rho on the vertices of A, indexed by VertexId.
using RhoMap = std::vector<Rational>;
/// rho on objects of a window.
using WindowRho = std::map<HatObject, Rational>;

/// Two automorphisms that should agree on objects do not. `object` is the
/// first disagreeing one (level 0 when comparing automorphisms of A).
class ObjectMismatchError : public Error {
 public:
  ObjectMismatchError(std::string message, HatObject object) : Error(std::move(message)), object_(object) {}
  const HatObject& object() const { return object_; }

 private:
  HatObject object_;
};

/// Arrow scalars of E = g^-1 h when E fixes every arrow and parallel arrows
/// share one scalar; nullopt otherwise. Throws ObjectMismatchError when g
/// and h differ on a vertex.
std::optional<ArrowScalars> check_scaling_condition(const Quiver& q, const ScalingAuto& g, const ScalingAuto& h);

struct CycleFailure {
  Cycle cycle;
  Rational value;
};

/// First simple-cycle representative whose value under E is not 1.
std::optional<CycleFailure> first_failing_cycle(const Quiver& q, const ArrowScalars& E);
bool check_cycle_condition(const ArrowScalars& E, const Quiver& q);

/// rho(base) = 1 per component and rho(x) = E along the spanning walk, when
/// both conditions hold; nullopt otherwise.
std::optional<RhoMap> build_rho(const Quiver& q, const ScalingAuto& g, const ScalingAuto& h);

/// rho(y) g(f) = h(f) rho(x) for every basis path f: x -> y.
bool rho_is_valid(const Algebra& a, const ScalingAuto& g, const ScalingAuto& h, const RhoMap& rho);

/// First window basis morphism f: u -> v violating rho(v) phi(f) = psi(f) rho(u),
/// or nullopt. Objects missing from rho count as violations.
std::optional<HatMorphism> first_invalid_morphism(const RepetitiveWindow& w, const JumpAuto& phi,
                                                  const JumpAuto& psi, const WindowRho& rho);

/// Extends rho0 from level 0 to the whole window. Throws ObjectMismatchError,
/// or Error naming the failing path or morphism when rho0 does not satisfy
/// rho0(y) phi_0(a) = psi_0(a) rho0(x) or the jumps differ.
WindowRho extend_rho(const RepetitiveWindow& w, const JumpAuto& phi, const JumpAuto& psi, const RhoMap& rho0);

/// Moves a rho satisfying rho(y) phi_i(a) = psi_j(a) rho(x) to one satisfying
/// the level-0 identity. Throws Error naming the failing path otherwise.
RhoMap shift_rho(const Algebra& a, const JumpAuto& phi, const JumpAuto& psi, const RhoMap& rho, int i, int j);

/// The scalars eta_{k,x} for k in [min_power, max_power].
class EtaFamily {
 public:
  int min_power() const { return min_power_; }
  int max_power() const { return max_power_; }
  bool contains(int k, const HatObject& x) const { return values_.count({k, x}) != 0; }
  /// Throws Error when (k, x) was not built.
  const Rational& at(int k, const HatObject& x) const;
  const std::map<std::pair<int, HatObject>, Rational>& entries() const { return values_; }

 private:
  friend EtaFamily build_eta(const JumpAuto& g, const WindowRho& rho, int min_power, int max_power,
                             std::span<const HatObject> objects);
  int min_power_ = 0;
  int max_power_ = 0;
  std::map<std::pair<int, HatObject>, Rational> values_;
};

/// eta_{k,x} = rho(x) rho(g x) ... rho(g^{k-1} x) for k > 0, 1 for k = 0 and
/// (rho(g^k x) ... rho(g^-1 x))^-1 for k < 0. Throws Error when some g^j x
/// needed for the range lies outside rho's domain.
EtaFamily build_eta(const JumpAuto& g, const WindowRho& rho, int min_power, int max_power,
                    std::span<const HatObject> objects);

/// eta_{m+n,x} = eta_{m,g^n x} eta_{n,x} wherever all three are built.
bool eta_cocycle_holds(const EtaFamily& eta, const JumpAuto& g);

/// eta_{k,y} g^k(f) = h^k(f) eta_{k,x} for every window morphism f: x -> y
/// whose endpoints carry eta_k.
bool eta_natural(const RepetitiveWindow& w, const JumpAuto& g, const JumpAuto& h, const EtaFamily& eta, int k);

}  // namespace repcat

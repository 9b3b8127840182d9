#pragma once

#include "repcat/scalar.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace repcat {

using VertexId = std::size_t;
using ArrowId = std::size_t;

struct Arrow {
  std::string name;
  VertexId source = 0;
  VertexId target = 0;

  bool operator==(const Arrow&) const = default;
};

/// Finite multigraph. Vertices and arrows are indexed in declaration order;
/// names are kept for input and output only.
class Quiver {
 public:
  Quiver() = default;

  /// Throws Error on a duplicate vertex name.
  VertexId add_vertex(std::string name);
  /// Throws Error on a duplicate arrow name or an undeclared endpoint.
  ArrowId add_arrow(std::string name, VertexId source, VertexId target);

  std::size_t vertex_count() const { return vertex_names_.size(); }
  std::size_t arrow_count() const { return arrows_.size(); }

  const std::string& vertex_name(VertexId v) const { return vertex_names_.at(v); }
  const Arrow& arrow(ArrowId a) const { return arrows_.at(a); }
  std::span<const Arrow> arrows() const { return arrows_; }

  std::optional<VertexId> find_vertex(std::string_view name) const;
  std::optional<ArrowId> find_arrow(std::string_view name) const;

  bool operator==(const Quiver&) const = default;

 private:
  std::vector<std::string> vertex_names_;
  std::vector<Arrow> arrows_;
};

/// Same vertices; every arrow a is kept and followed by a reversed arrow
/// named "a^-1".
Quiver double_quiver(const Quiver& q);

enum class Direction : std::uint8_t { forward, inverse };

/// One arrow of the double quiver: an arrow of Q traversed forwards or
/// backwards. Ordered by (arrow, forward < inverse).
struct Step {
  ArrowId arrow = 0;
  Direction direction = Direction::forward;

  auto operator<=>(const Step&) const = default;
};

Step inverse(Step s);
VertexId step_source(const Quiver& q, Step s);
VertexId step_target(const Quiver& q, Step s);

/// A path in the double quiver. Steps are stored in traversal order
/// (first step first); the empty walk remembers its vertex.
class Walk {
 public:
  static Walk empty(VertexId at);
  /// Throws Error if the steps are not composable or empty.
  Walk(const Quiver& q, std::vector<Step> steps);

  VertexId start() const { return start_; }
  VertexId end() const { return end_; }
  std::size_t length() const { return steps_.size(); }
  std::span<const Step> steps() const { return steps_; }

  /// Walk followed by one more step; throws Error if not composable.
  Walk then(const Quiver& q, Step s) const;

  auto operator<=>(const Walk&) const = default;

 private:
  Walk(VertexId start, VertexId end, std::vector<Step> steps)
      : start_(start), end_(end), steps_(std::move(steps)) {}

  VertexId start_ = 0;
  VertexId end_ = 0;
  std::vector<Step> steps_;
};

/// Reverse order and flip every direction.
Walk inverse(const Quiver& q, const Walk& w);
/// `second` after `first`; throws Error unless first.end() == second.start().
Walk concat(const Quiver& q, const Walk& first, const Walk& second);

/// A nonempty closed walk.
class Cycle {
 public:
  /// Throws Error if the walk is empty or not closed.
  Cycle(const Quiver& q, Walk walk);

  const Walk& walk() const { return walk_; }
  std::size_t length() const { return walk_.length(); }
  /// True iff the start vertices of the steps are pairwise distinct.
  bool is_simple() const { return simple_; }

  bool operator==(const Cycle& other) const { return walk_ == other.walk_; }

 private:
  Walk walk_;
  bool simple_ = false;
};

/// C[shift] for shift in 1..|C|: the cycle starting at step shift+1.
/// Throws Error if shift is out of range.
Cycle rotate_cycle(const Quiver& q, const Cycle& c, std::size_t shift);

/// Same length and some rotation of c1 equals c2 or its inverse.
bool cycles_equivalent(const Quiver& q, const Cycle& c1, const Cycle& c2);

/// Least rotation or inverse rotation of c, in step order.
Cycle canonical_representative(const Quiver& q, const Cycle& c);

/// One representative per equivalence class of simple cycles, excluding the
/// backtracking cycles a^-1 a (their value is always 1). Each representative
/// is the canonical one; classes are listed in depth-first discovery order
/// (start vertices ascending, arrows in declaration order, forward first).
std::vector<Cycle> enumerate_simple_cycles(const Quiver& q);

/// Dense per-arrow scalar family indexed by ArrowId.
using ArrowScalars = std::vector<Rational>;

/// Product of arrow scalars along the walk, using the inverse scalar on
/// inverse steps. Throws Error if a scalar is missing or zero.
Rational cycle_value(const ArrowScalars& scalars, const Walk& w);

struct ComponentWalks {
  VertexId base = 0;
  /// Walk from base to every vertex of the component; empty for the base.
  std::map<VertexId, Walk> walks;
};

/// Breadth-first spanning walks, one component at a time. The base of each
/// component is its least vertex; arrows are scanned in declaration order,
/// forward steps before inverse steps.
std::vector<ComponentWalks> spanning_walks(const Quiver& q);

/// Right-to-left rendering as in composition: "b*a", "a^-1*b", "e_1".
std::string to_string(const Quiver& q, const Walk& w);

}  // namespace repcat

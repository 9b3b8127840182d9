#include "repcat/quiver.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace repcat {

VertexId Quiver::add_vertex(std::string name) {
  if (find_vertex(name)) throw Error("duplicate vertex '" + name + "'");
  vertex_names_.push_back(std::move(name));
  return vertex_names_.size() - 1;
}

ArrowId Quiver::add_arrow(std::string name, VertexId source, VertexId target) {
  if (find_arrow(name)) throw Error("duplicate arrow '" + name + "'");
  if (source >= vertex_count() || target >= vertex_count()) {
    throw Error("arrow '" + name + "' has an undeclared endpoint");
  }
  arrows_.push_back(Arrow{std::move(name), source, target});
  return arrows_.size() - 1;
}

std::optional<VertexId> Quiver::find_vertex(std::string_view name) const {
  auto it = std::find(vertex_names_.begin(), vertex_names_.end(), name);
  if (it == vertex_names_.end()) return std::nullopt;
  return static_cast<VertexId>(it - vertex_names_.begin());
}

std::optional<ArrowId> Quiver::find_arrow(std::string_view name) const {
  auto it = std::find_if(arrows_.begin(), arrows_.end(), [&](const Arrow& a) { return a.name == name; });
  if (it == arrows_.end()) return std::nullopt;
  return static_cast<ArrowId>(it - arrows_.begin());
}

Quiver double_quiver(const Quiver& q) {
  Quiver out;
  for (VertexId v = 0; v < q.vertex_count(); ++v) out.add_vertex(q.vertex_name(v));
  for (const Arrow& a : q.arrows()) {
    out.add_arrow(a.name, a.source, a.target);
    out.add_arrow(a.name + "^-1", a.target, a.source);
  }
  return out;
}

Step inverse(Step s) {
  s.direction = s.direction == Direction::forward ? Direction::inverse : Direction::forward;
  return s;
}

VertexId step_source(const Quiver& q, Step s) {
  const Arrow& a = q.arrow(s.arrow);
  return s.direction == Direction::forward ? a.source : a.target;
}

VertexId step_target(const Quiver& q, Step s) {
  const Arrow& a = q.arrow(s.arrow);
  return s.direction == Direction::forward ? a.target : a.source;
}

Walk Walk::empty(VertexId at) { return Walk(at, at, {}); }

Walk::Walk(const Quiver& q, std::vector<Step> steps) : steps_(std::move(steps)) {
  if (steps_.empty()) throw Error("walk without steps needs an explicit vertex; use Walk::empty");
  start_ = step_source(q, steps_.front());
  VertexId at = start_;
  for (const Step& s : steps_) {
    if (step_source(q, s) != at) throw Error("walk steps are not composable");
    at = step_target(q, s);
  }
  end_ = at;
}

Walk Walk::then(const Quiver& q, Step s) const {
  if (step_source(q, s) != end_) throw Error("walk step is not composable");
  std::vector<Step> steps = steps_;
  steps.push_back(s);
  return Walk(start_, step_target(q, s), std::move(steps));
}

Walk inverse(const Quiver& q, const Walk& w) {
  if (w.length() == 0) return w;
  std::vector<Step> steps;
  steps.reserve(w.length());
  for (auto it = w.steps().rbegin(); it != w.steps().rend(); ++it) steps.push_back(inverse(*it));
  return Walk(q, std::move(steps));
}

Walk concat(const Quiver& q, const Walk& first, const Walk& second) {
  if (first.end() != second.start()) throw Error("walks are not composable");
  if (first.length() == 0) return second;
  if (second.length() == 0) return first;
  std::vector<Step> steps(first.steps().begin(), first.steps().end());
  steps.insert(steps.end(), second.steps().begin(), second.steps().end());
  return Walk(q, std::move(steps));
}

Cycle::Cycle(const Quiver& q, Walk walk) : walk_(std::move(walk)) {
  if (walk_.length() == 0) throw Error("a cycle must have at least one step");
  if (walk_.start() != walk_.end()) throw Error("walk is not closed");
  std::set<VertexId> seen;
  simple_ = true;
  for (const Step& s : walk_.steps()) {
    if (!seen.insert(step_source(q, s)).second) {
      simple_ = false;
      break;
    }
  }
}

namespace {

std::vector<Step> rotated(std::span<const Step> steps, std::size_t shift) {
  std::vector<Step> out;
  out.reserve(steps.size());
  for (std::size_t k = 0; k < steps.size(); ++k) out.push_back(steps[(k + shift) % steps.size()]);
  return out;
}

std::vector<Step> inverted(std::span<const Step> steps) {
  std::vector<Step> out;
  out.reserve(steps.size());
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) out.push_back(inverse(*it));
  return out;
}

std::vector<Step> canonical_steps(std::span<const Step> steps) {
  std::vector<Step> best(steps.begin(), steps.end());
  const std::vector<Step> inv = inverted(steps);
  for (std::size_t c = 0; c < steps.size(); ++c) {
    best = std::min(best, rotated(steps, c));
    best = std::min(best, rotated(inv, c));
  }
  return best;
}

bool is_backtrack(const Quiver& q, std::span<const Step> steps) {
  (void)q;
  return steps.size() == 2 && steps[1] == inverse(steps[0]);
}

}  // namespace

Cycle rotate_cycle(const Quiver& q, const Cycle& c, std::size_t shift) {
  if (shift < 1 || shift > c.length()) {
    throw Error("rotation shift " + std::to_string(shift) + " outside 1.." + std::to_string(c.length()));
  }
  return Cycle(q, Walk(q, rotated(c.walk().steps(), shift % c.length())));
}

bool cycles_equivalent(const Quiver& q, const Cycle& c1, const Cycle& c2) {
  (void)q;
  if (c1.length() != c2.length()) return false;
  const auto target = c2.walk().steps();
  const std::vector<Step> target_inv = inverted(target);
  for (std::size_t c = 0; c < c1.length(); ++c) {
    auto r = rotated(c1.walk().steps(), c);
    if (std::equal(r.begin(), r.end(), target.begin(), target.end()) || r == target_inv) return true;
  }
  return false;
}

Cycle canonical_representative(const Quiver& q, const Cycle& c) {
  return Cycle(q, Walk(q, canonical_steps(c.walk().steps())));
}

std::vector<Cycle> enumerate_simple_cycles(const Quiver& q) {
  std::vector<Cycle> out;
  std::set<std::vector<Step>> seen;
  std::vector<Step> path;
  std::vector<bool> visited(q.vertex_count(), false);

  // Every class has a rotation starting at its least vertex, so the search
  // from `start` only enters vertices greater than `start`.
  auto dfs = [&](auto&& self, VertexId start, VertexId at) -> void {
    for (ArrowId a = 0; a < q.arrow_count(); ++a) {
      for (Direction d : {Direction::forward, Direction::inverse}) {
        Step s{a, d};
        if (step_source(q, s) != at) continue;
        VertexId next = step_target(q, s);
        path.push_back(s);
        if (next == start) {
          if (!is_backtrack(q, path)) {
            auto key = canonical_steps(path);
            if (seen.insert(key).second) out.emplace_back(q, Walk(q, std::move(key)));
          }
        } else if (next > start && !visited[next]) {
          visited[next] = true;
          self(self, start, next);
          visited[next] = false;
        }
        path.pop_back();
      }
    }
  };

  for (VertexId v = 0; v < q.vertex_count(); ++v) {
    visited[v] = true;
    dfs(dfs, v, v);
    visited[v] = false;
  }
  return out;
}

Rational cycle_value(const ArrowScalars& scalars, const Walk& w) {
  Rational value = 1;
  for (const Step& s : w.steps()) {
    if (s.arrow >= scalars.size()) throw Error("missing scalar for arrow #" + std::to_string(s.arrow));
    const Rational& c = scalars[s.arrow];
    if (c == 0) throw Error("zero scalar for arrow #" + std::to_string(s.arrow));
    if (s.direction == Direction::forward) {
      value *= c;
    } else {
      value /= c;
    }
  }
  return value;
}

std::vector<ComponentWalks> spanning_walks(const Quiver& q) {
  std::vector<ComponentWalks> out;
  std::vector<bool> reached(q.vertex_count(), false);
  for (VertexId base = 0; base < q.vertex_count(); ++base) {
    if (reached[base]) continue;
    ComponentWalks comp;
    comp.base = base;
    comp.walks.emplace(base, Walk::empty(base));
    reached[base] = true;
    std::deque<VertexId> queue{base};
    while (!queue.empty()) {
      VertexId at = queue.front();
      queue.pop_front();
      for (ArrowId a = 0; a < q.arrow_count(); ++a) {
        for (Direction d : {Direction::forward, Direction::inverse}) {
          Step s{a, d};
          if (step_source(q, s) != at) continue;
          VertexId next = step_target(q, s);
          if (reached[next]) continue;
          reached[next] = true;
          comp.walks.emplace(next, comp.walks.at(at).then(q, s));
          queue.push_back(next);
        }
      }
    }
    out.push_back(std::move(comp));
  }
  return out;
}

std::string to_string(const Quiver& q, const Walk& w) {
  if (w.length() == 0) return "e_" + q.vertex_name(w.start());
  std::string out;
  for (auto it = w.steps().rbegin(); it != w.steps().rend(); ++it) {
    if (!out.empty()) out += '*';
    out += q.arrow(it->arrow).name;
    if (it->direction == Direction::inverse) out += "^-1";
  }
  return out;
}

}  // namespace repcat

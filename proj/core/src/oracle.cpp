#include "repcat/oracle.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace repcat {

CycleInventory enumerate_all_cycles(const Quiver& q, std::size_t max_len) {
  CycleInventory inv;
  inv.max_len = max_len;
  std::vector<Step> steps;
  auto extend = [&](auto&& self, VertexId start, VertexId at) -> void {
    if (steps.size() == max_len) return;
    for (ArrowId a = 0; a < q.arrow_count(); ++a) {
      for (Direction d : {Direction::forward, Direction::inverse}) {
        Step s{a, d};
        if (step_source(q, s) != at) continue;
        steps.push_back(s);
        VertexId next = step_target(q, s);
        if (next == start) inv.cycles.emplace_back(q, Walk(q, steps));
        self(self, start, next);
        steps.pop_back();
      }
    }
  };
  for (VertexId v = 0; v < q.vertex_count(); ++v) extend(extend, v, v);
  return inv;
}

bool all_cycles_pass(const ArrowScalars& E, const CycleInventory& inventory) {
  return std::all_of(inventory.cycles.begin(), inventory.cycles.end(),
                     [&](const Cycle& c) { return cycle_value(E, c.walk()) == 1; });
}

bool all_cycles_pass(const ArrowScalars& E, const Quiver& q, std::size_t max_len) {
  using Frontier = std::map<VertexId, std::set<Rational>>;
  const std::size_t n = q.vertex_count();
  // A (vertex, value) pair reached before can only lead to closed walks that
  // were already reachable, so each pair is expanded once per start.
  std::vector<Frontier> seen(n), frontier(n);
  for (VertexId s = 0; s < n; ++s) {
    seen[s][s].insert(Rational(1));
    frontier[s][s].insert(Rational(1));
  }
  for (std::size_t len = 1; len <= max_len; ++len) {
    bool any = false;
    for (VertexId s = 0; s < n; ++s) {
      Frontier next;
      for (const auto& [at, values] : frontier[s]) {
        for (ArrowId a = 0; a < q.arrow_count(); ++a) {
          const Arrow& arrow = q.arrow(a);
          for (Direction d : {Direction::forward, Direction::inverse}) {
            const VertexId from = d == Direction::forward ? arrow.source : arrow.target;
            if (from != at) continue;
            const VertexId to = d == Direction::forward ? arrow.target : arrow.source;
            for (const Rational& v : values) {
              Rational value = v;
              if (d == Direction::forward) {
                value *= E.at(a);
              } else {
                value /= E.at(a);
              }
              if (to == s && value != 1) return false;
              if (seen[s][to].insert(value).second) next[to].insert(std::move(value));
            }
          }
        }
      }
      any = any || !next.empty();
      frontier[s] = std::move(next);
    }
    if (!any) break;
  }
  return true;
}

std::vector<TableRow> structure_table(const GradedAlgebra& g) {
  std::vector<TableRow> rows;
  for (const auto& [key, value] : g.products()) {
    TableRow row{g.basis_name(key.first), g.basis_name(key.second), {}};
    for (const auto& [r, c] : value) row.terms.emplace_back(c, g.basis_name(r));
    std::sort(row.terms.begin(), row.terms.end(), [](const auto& x, const auto& y) { return x.second < y.second; });
    rows.push_back(std::move(row));
  }
  std::sort(rows.begin(), rows.end(), [](const TableRow& x, const TableRow& y) {
    return std::tie(x.left, x.right) < std::tie(y.left, y.right);
  });
  return rows;
}

std::string structure_table_text(const GradedAlgebra& g) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < g.dimension(); ++i) names.push_back(g.basis_name(i));
  std::sort(names.begin(), names.end());
  std::ostringstream out;
  out << "dimension " << g.dimension() << '\n';
  for (const std::string& name : names) out << "basis {" << name << "}\n";
  for (const TableRow& row : structure_table(g)) {
    out << '{' << row.left << "} * {" << row.right << "} =";
    for (std::size_t t = 0; t < row.terms.size(); ++t) {
      out << (t == 0 ? " " : " + ") << to_string(row.terms[t].first) << " {" << row.terms[t].second << '}';
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace repcat

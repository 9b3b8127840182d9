#include "problem.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

namespace repcat::cli {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string> tokens(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  for (std::string t; in >> t;) out.push_back(t);
  return out;
}

int parse_int(int line, std::string_view text) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw ParseError(line, "expected an integer, got '" + std::string(text) + "'");
  }
  return value;
}

Rational parse_scalar(int line, std::string_view text) {
  Rational value;
  try {
    value = parse_rational(text);
  } catch (const Error& e) {
    throw ParseError(line, e.what());
  }
  if (value == 0) throw ParseError(line, "scalars must be nonzero");
  return value;
}

VertexId vertex_of(const Quiver& q, int line, const std::string& name) {
  if (auto v = q.find_vertex(name)) return *v;
  throw ParseError(line, "undeclared vertex '" + name + "'");
}

ArrowId arrow_of(const Quiver& q, int line, const std::string& name) {
  if (auto a = q.find_arrow(name)) return *a;
  throw ParseError(line, "undeclared arrow '" + name + "'");
}

enum class Section { none, quiver, relations, automorphism };

}  // namespace

ProblemFile parse_problem(std::string_view text) {
  ProblemFile out;
  Section section = Section::none;
  std::set<std::string> auto_names;
  int line_no = 0;
  std::istringstream in{std::string(text)};
  for (std::string raw; std::getline(in, raw);) {
    ++line_no;
    std::string_view line = raw;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    if (line.front() == '[') {
      if (line.back() != ']') throw ParseError(line_no, "unterminated section header");
      auto head = tokens(line.substr(1, line.size() - 2));
      if (head.size() == 1 && head[0] == "quiver") {
        section = Section::quiver;
      } else if (head.size() == 1 && head[0] == "relations") {
        section = Section::relations;
      } else if (head.size() == 2 && head[0] == "auto") {
        if (!auto_names.insert(head[1]).second) throw ParseError(line_no, "duplicate auto '" + head[1] + "'");
        out.autos.push_back(AutoSection{head[1], 0, {}, {}, {}, {}});
        section = Section::automorphism;
      } else {
        throw ParseError(line_no, "unknown section '" + std::string(line) + "'");
      }
      continue;
    }

    const auto eq = line.find('=');
    if (eq == std::string_view::npos) throw ParseError(line_no, "expected 'key = value'");
    const auto key = tokens(line.substr(0, eq));
    const std::string_view value = trim(line.substr(eq + 1));
    if (key.empty() || value.empty()) throw ParseError(line_no, "expected 'key = value'");
    Quiver& q = out.quiver;

    switch (section) {
      case Section::none:
        throw ParseError(line_no, "entry outside of any section");
      case Section::quiver:
        if (key.size() == 1 && key[0] == "vertices") {
          for (const std::string& name : tokens(value)) {
            if (q.find_vertex(name)) throw ParseError(line_no, "duplicate vertex '" + name + "'");
            q.add_vertex(name);
          }
        } else if (key.size() == 2 && key[0] == "arrow") {
          auto ends = tokens(value);
          if (ends.size() != 3 || ends[1] != "->") throw ParseError(line_no, "expected 'SOURCE -> TARGET'");
          if (q.find_arrow(key[1])) throw ParseError(line_no, "duplicate arrow '" + key[1] + "'");
          q.add_arrow(key[1], vertex_of(q, line_no, ends[0]), vertex_of(q, line_no, ends[2]));
        } else {
          throw ParseError(line_no, "unknown quiver entry");
        }
        break;
      case Section::relations: {
        if (key.size() != 1 || key[0] != "zero") throw ParseError(line_no, "relations are written 'zero = PATH'");
        std::vector<ArrowId> arrows;
        std::string_view rest = value;
        while (true) {
          const auto star = rest.find('*');
          arrows.push_back(arrow_of(q, line_no, std::string(trim(rest.substr(0, star)))));
          if (star == std::string_view::npos) break;
          rest = rest.substr(star + 1);
        }
        std::reverse(arrows.begin(), arrows.end());
        for (std::size_t k = 1; k < arrows.size(); ++k) {
          if (q.arrow(arrows[k - 1]).target != q.arrow(arrows[k]).source) {
            throw ParseError(line_no, "relation '" + std::string(value) + "' is not a path");
          }
        }
        out.relations.push_back(std::move(arrows));
        break;
      }
      case Section::automorphism: {
        AutoSection& a = out.autos.back();
        if (key.size() == 1 && key[0] == "jump") {
          a.jump = parse_int(line_no, value);
        } else if (key.size() == 2 && key[0] == "sigma") {
          arrow_of(q, line_no, key[1]);
          if (!a.sigma.emplace(key[1], parse_scalar(line_no, value)).second) {
            throw ParseError(line_no, "duplicate sigma entry");
          }
        } else if (key.size() == 3 && key[0] == "lambda") {
          const int level = parse_int(line_no, key[1]);
          vertex_of(q, line_no, key[2]);
          if (!a.lambda.emplace(std::pair{level, key[2]}, parse_scalar(line_no, value)).second) {
            throw ParseError(line_no, "duplicate lambda entry");
          }
        } else if (key.size() == 2 && key[0] == "vertex-map") {
          vertex_of(q, line_no, key[1]);
          vertex_of(q, line_no, std::string(value));
          if (!a.vertex_map.emplace(key[1], std::string(value)).second) {
            throw ParseError(line_no, "duplicate vertex-map entry");
          }
        } else if (key.size() == 2 && key[0] == "arrow-map") {
          arrow_of(q, line_no, key[1]);
          arrow_of(q, line_no, std::string(value));
          if (!a.arrow_map.emplace(key[1], std::string(value)).second) {
            throw ParseError(line_no, "duplicate arrow-map entry");
          }
        } else {
          throw ParseError(line_no, "unknown auto entry");
        }
        break;
      }
    }
  }
  return out;
}

ProblemFile read_problem(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_problem(buffer.str());
}

std::string serialize_problem(const ProblemFile& problem) {
  const Quiver& q = problem.quiver;
  std::ostringstream out;
  out << "[quiver]\nvertices =";
  for (VertexId v = 0; v < q.vertex_count(); ++v) out << ' ' << q.vertex_name(v);
  out << '\n';
  for (const Arrow& a : q.arrows()) {
    out << "arrow " << a.name << " = " << q.vertex_name(a.source) << " -> " << q.vertex_name(a.target) << '\n';
  }
  if (!problem.relations.empty()) {
    out << "\n[relations]\n";
    for (const auto& r : problem.relations) {
      out << "zero = ";
      for (auto it = r.rbegin(); it != r.rend(); ++it) out << (it == r.rbegin() ? "" : "*") << q.arrow(*it).name;
      out << '\n';
    }
  }
  for (const AutoSection& a : problem.autos) {
    out << "\n[auto " << a.name << "]\njump = " << a.jump << '\n';
    for (VertexId v = 0; v < q.vertex_count(); ++v) {
      if (auto it = a.vertex_map.find(q.vertex_name(v)); it != a.vertex_map.end()) {
        out << "vertex-map " << it->first << " = " << it->second << '\n';
      }
    }
    for (const Arrow& arrow : q.arrows()) {
      if (auto it = a.arrow_map.find(arrow.name); it != a.arrow_map.end()) {
        out << "arrow-map " << it->first << " = " << it->second << '\n';
      }
    }
    for (const Arrow& arrow : q.arrows()) {
      if (auto it = a.sigma.find(arrow.name); it != a.sigma.end()) {
        out << "sigma " << it->first << " = " << to_string(it->second) << '\n';
      }
    }
    std::vector<std::pair<std::pair<int, VertexId>, Rational>> lambda;
    for (const auto& [key, value] : a.lambda) lambda.push_back({{key.first, *q.find_vertex(key.second)}, value});
    std::sort(lambda.begin(), lambda.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    for (const auto& [key, value] : lambda) {
      out << "lambda " << key.first << ' ' << q.vertex_name(key.second) << " = " << to_string(value) << '\n';
    }
  }
  return out.str();
}

namespace {

JumpAuto to_jump_auto(const Algebra& alg, const AutoSection& a) {
  const Quiver& q = alg.quiver();
  std::vector<VertexId> vp(q.vertex_count());
  std::vector<ArrowId> ap(q.arrow_count());
  ArrowScalars scalars(q.arrow_count(), Rational(1));
  for (VertexId v = 0; v < vp.size(); ++v) vp[v] = v;
  for (ArrowId x = 0; x < ap.size(); ++x) ap[x] = x;
  for (const auto& [from, to] : a.vertex_map) vp[*q.find_vertex(from)] = *q.find_vertex(to);
  for (const auto& [from, to] : a.arrow_map) ap[*q.find_arrow(from)] = *q.find_arrow(to);
  for (const auto& [name, value] : a.sigma) scalars[*q.find_arrow(name)] = value;
  LevelScalars lambda;
  for (const auto& [key, value] : a.lambda) lambda.set(key.first, *q.find_vertex(key.second), value);
  try {
    return JumpAuto{a.jump, ScalingAuto(alg, std::move(vp), std::move(ap), std::move(scalars)), std::move(lambda)};
  } catch (const Error& e) {
    throw Error("auto '" + a.name + "': " + e.what());
  }
}

}  // namespace

Problem::Problem(ProblemFile file) : file_(std::move(file)), algebra_(build_algebra(file_.quiver, file_.relations)) {
  for (const AutoSection& a : file_.autos) autos_.emplace(a.name, to_jump_auto(algebra_, a));
}

const JumpAuto& Problem::get(const std::string& name) const {
  auto it = autos_.find(name);
  if (it == autos_.end()) throw Error("no auto named '" + name + "'");
  return it->second;
}

}  // namespace repcat::cli

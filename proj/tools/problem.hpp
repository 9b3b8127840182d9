#pragma once

#include "repcat/algebra.hpp"
#include "repcat/repetitive.hpp"

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace repcat::cli {

/// Malformed problem file; the message starts with "line N: ".
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& message)
      : Error("line " + std::to_string(line) + ": " + message), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// One [auto NAME] section, kept by name so it can be written back.
struct AutoSection {
  std::string name;
  int jump = 0;
  std::map<std::string, std::string> vertex_map;
  std::map<std::string, std::string> arrow_map;
  std::map<std::string, Rational> sigma;
  std::map<std::pair<int, std::string>, Rational> lambda;

  bool operator==(const AutoSection&) const = default;
};

struct ProblemFile {
  Quiver quiver;
  /// Each relation as arrows in traversal order.
  std::vector<std::vector<ArrowId>> relations;
  std::vector<AutoSection> autos;

  bool operator==(const ProblemFile&) const = default;
};

/// Parses the line-oriented format:
///
///   [quiver]
///   vertices = 1 2 3
///   arrow alpha = 1 -> 2
///   [relations]
///   zero = beta*alpha          # composition order, alpha first
///   [auto phi]
///   jump = 1
///   sigma alpha = 2            # unlisted arrows get 1
///   lambda -1 2 = 1/2          # level, vertex; unlisted entries get 1
///   vertex-map 1 = 1           # optional permutation parts
///   arrow-map alpha = alpha
ProblemFile parse_problem(std::string_view text);
ProblemFile read_problem(const std::string& path);
std::string serialize_problem(const ProblemFile& problem);

/// A parsed file turned into library objects.
class Problem {
 public:
  /// Throws Error (or ParseError naming the auto section's line) when the
  /// relations or an automorphism are invalid.
  explicit Problem(ProblemFile file);

  const ProblemFile& file() const { return file_; }
  const Algebra& algebra() const { return algebra_; }
  const Quiver& quiver() const { return algebra_.quiver(); }
  const std::map<std::string, JumpAuto>& autos() const { return autos_; }
  /// Throws Error for an unknown name.
  const JumpAuto& get(const std::string& name) const;

 private:
  ProblemFile file_;
  Algebra algebra_;
  std::map<std::string, JumpAuto> autos_;
};

}  // namespace repcat::cli

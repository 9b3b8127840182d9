#pragma once

#include "problem.hpp"

#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace repcat::cli {

enum class Format { text, json };

struct Options {
  /// Window levels; the default depends on the jump.
  std::optional<std::pair<int, int>> window;
  /// When set, `check` also runs the exhaustive walk oracle up to this length.
  std::optional<std::size_t> max_cycle_len;
  Format format = Format::text;
  /// `orbit` writes the table here instead of to the output stream.
  std::optional<std::string> out_path;
};

namespace exit_code {
inline constexpr int success = 0;
inline constexpr int not_equivalent = 1;
inline constexpr int input_error = 2;
}  // namespace exit_code

/// "lo..hi"; throws Error when malformed or reversed.
std::pair<int, int> parse_window(const std::string& text);

int cmd_cycles(const Problem& p, const Options& opt, std::ostream& out);
int cmd_check(const Problem& p, const std::string& first, const std::string& second, const Options& opt,
              std::ostream& out);
int cmd_rho(const Problem& p, const std::string& first, const std::string& second, const Options& opt,
            std::ostream& out);
int cmd_orbit(const Problem& p, const std::string& name, const Options& opt, std::ostream& out);
/// `second` may be "twist" (unless the file defines an auto of that name),
/// standing for hat(phi_0) ∘ nu^n built from `first`.
int cmd_verify(const Problem& p, const std::string& first, const std::string& second, const Options& opt,
               std::ostream& out);
int cmd_dump(const Problem& p, const Options& opt, std::ostream& out);

/// Full command line (without the program name). Errors go to `err` and
/// yield exit_code::input_error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace repcat::cli

#include "commands.hpp"

#include "repcat/criterion.hpp"
#include "repcat/oracle.hpp"
#include "repcat/orbit.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>

namespace repcat::cli {

using nlohmann::json;

std::pair<int, int> parse_window(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) throw Error("window must look like LO..HI, got '" + text + "'");
  int lo = 0;
  int hi = 0;
  try {
    std::size_t used = 0;
    lo = std::stoi(text.substr(0, dots), &used);
    if (used != dots) throw Error("");
    const std::string rest = text.substr(dots + 2);
    hi = std::stoi(rest, &used);
    if (used != rest.size()) throw Error("");
  } catch (const std::exception&) {
    throw Error("window must look like LO..HI, got '" + text + "'");
  }
  if (lo > hi) throw Error("window bounds are reversed: " + text);
  return {lo, hi};
}

namespace {

bool defines(const Problem& p, const std::string& name) { return p.autos().count(name) != 0; }

JumpAuto resolve(const Problem& p, const std::string& name, const std::string& partner) {
  if (name != "twist" || defines(p, name)) return p.get(name);
  // hat(phi_0) ∘ nu^n for the partner phi.
  const Quiver& q = p.quiver();
  const JumpAuto& phi = p.get(partner);
  const RepetitiveWindow level0 = build_window(p.algebra(), 0, 0);
  const ScalingAuto phi0 = Psi(level0, decompose(q, phi).part);
  return compose_jump(q, hat_lift(phi0), nu(q, phi.jump));
}

std::pair<int, int> window_for(const Options& opt, int jump) { return opt.window ? *opt.window : default_window(jump); }

std::string scalars_by_arrow(const Quiver& q, const ArrowScalars& s) {
  std::string out;
  for (ArrowId a = 0; a < q.arrow_count(); ++a) {
    out += (a == 0 ? "" : ", ") + q.arrow(a).name + " -> " + to_string(s[a]);
  }
  return out.empty() ? "(no arrows)" : out;
}

std::string scalars_by_vertex(const Quiver& q, const RhoMap& rho) {
  std::string out;
  for (VertexId x = 0; x < q.vertex_count(); ++x) {
    out += (x == 0 ? "" : ", ") + q.vertex_name(x) + " -> " + to_string(rho[x]);
  }
  return out;
}

struct Criterion {
  int jump = 0;
  std::pair<int, int> window;
  std::optional<ScalingAuto> phi0;
  std::optional<ScalingAuto> psi0;
  std::optional<ArrowScalars> E;
  std::optional<CycleFailure> failure;
  std::size_t cycles_checked = 0;
  std::optional<RhoMap> rho0;
  std::optional<WindowRho> rho;

  bool equivalent() const { return rho.has_value(); }
};

Criterion run_criterion(const Problem& p, const JumpAuto& phi, const JumpAuto& psi, const Options& opt) {
  const Quiver& q = p.quiver();
  if (phi.jump != psi.jump) {
    throw Error("the automorphisms have different jumps (" + std::to_string(phi.jump) + " and " +
                std::to_string(psi.jump) + ")");
  }
  Criterion c;
  c.jump = phi.jump;
  c.window = window_for(opt, phi.jump);
  const RepetitiveWindow w = build_window(p.algebra(), c.window.first, c.window.second);
  if (!w.contains(0)) throw Error("the window must contain level 0");
  c.phi0 = Psi(w, decompose(q, phi).part);
  c.psi0 = Psi(w, decompose(q, psi).part);
  c.E = check_scaling_condition(q, *c.phi0, *c.psi0);
  if (!c.E) return c;
  c.cycles_checked = enumerate_simple_cycles(q).size();
  c.failure = first_failing_cycle(q, *c.E);
  if (c.failure) return c;
  c.rho0 = build_rho(q, *c.phi0, *c.psi0);
  if (c.rho0) c.rho = extend_rho(w, phi, psi, *c.rho0);
  return c;
}

void print_window_rho(const Quiver& q, const WindowRho& rho, std::ostream& out) {
  std::map<int, std::vector<std::pair<VertexId, Rational>>> by_level;
  for (const auto& [x, value] : rho) by_level[x.level].emplace_back(x.vertex, value);
  for (const auto& [level, row] : by_level) {
    out << "  level " << level << ":";
    for (std::size_t k = 0; k < row.size(); ++k) {
      out << (k == 0 ? " " : ", ") << q.vertex_name(row[k].first) << " -> " << to_string(row[k].second);
    }
    out << '\n';
  }
}

void print_refusal(const Problem& p, const Criterion& c, std::ostream& out) {
  const Quiver& q = p.quiver();
  out << "verdict: not equivalent\n";
  if (!c.E) {
    out << "reason: phi0^-1 psi0 is not a diagonal scaling with one scalar per vertex pair\n";
    return;
  }
  out << "failing cycle: " << to_string(q, c.failure->cycle.walk()) << '\n';
  out << "  (phi0^-1 psi0)_C = " << to_string(c.failure->value) << '\n';
  if (c.phi0->permutes_nothing() && c.psi0->permutes_nothing()) {
    out << "  phi0_C = " << to_string(cycle_value(c.phi0->scalars(), c.failure->cycle.walk()))
        << ", psi0_C = " << to_string(cycle_value(c.psi0->scalars(), c.failure->cycle.walk())) << '\n';
  }
}

json window_rho_json(const Quiver& q, const WindowRho& rho) {
  std::map<int, json> by_level;
  for (const auto& [x, value] : rho) by_level[x.level][q.vertex_name(x.vertex)] = to_string(value);
  json levels = json::array();
  for (const auto& [level, values] : by_level) levels.push_back({{"level", level}, {"rho", values}});
  return levels;
}

json orbit_json(const GradedAlgebra& g) {
  json basis = json::array();
  for (std::size_t i = 0; i < g.dimension(); ++i) {
    const OrbitLabel& l = g.label(i);
    basis.push_back({{"name", g.basis_name(i)},
                     {"degree", l.degree},
                     {"source", g.object_name(l.source)},
                     {"target", g.object_name(l.target)}});
  }
  std::sort(basis.begin(), basis.end(),
            [](const json& x, const json& y) { return x["name"].get<std::string>() < y["name"].get<std::string>(); });
  json products = json::array();
  for (const TableRow& row : structure_table(g)) {
    json terms = json::array();
    for (const auto& [c, name] : row.terms) terms.push_back({{"coefficient", to_string(c)}, {"basis", name}});
    products.push_back({{"left", row.left}, {"right", row.right}, {"terms", terms}});
  }
  json objects = json::array();
  for (std::size_t o = 0; o < g.objects().size(); ++o) objects.push_back(g.object_name(o));
  return {{"dimension", g.dimension()}, {"objects", objects}, {"basis", basis}, {"products", products}};
}

}  // namespace

int cmd_cycles(const Problem& p, const Options& opt, std::ostream& out) {
  const Quiver& q = p.quiver();
  const auto cycles = enumerate_simple_cycles(q);
  if (opt.format == Format::json) {
    json list = json::array();
    for (const Cycle& c : cycles) list.push_back({{"cycle", to_string(q, c.walk())}, {"length", c.length()}});
    out << json{{"simple_cycles", list}}.dump(2) << '\n';
    return exit_code::success;
  }
  if (cycles.empty()) {
    out << "no simple cycles\n";
    return exit_code::success;
  }
  out << "simple cycles: " << cycles.size() << '\n';
  for (const Cycle& c : cycles) out << "  " << to_string(q, c.walk()) << "  (length " << c.length() << ")\n";
  return exit_code::success;
}

int cmd_check(const Problem& p, const std::string& first, const std::string& second, const Options& opt,
              std::ostream& out) {
  const Quiver& q = p.quiver();
  const JumpAuto phi = resolve(p, first, second);
  const JumpAuto psi = resolve(p, second, first);
  const Criterion c = run_criterion(p, phi, psi, opt);
  out << "automorphisms: " << first << ", " << second << " (jump " << c.jump << ")\n";
  out << "window: [" << c.window.first << ", " << c.window.second << "]\n";
  if (c.E) {
    out << "E = phi0^-1 psi0: " << scalars_by_arrow(q, *c.E) << '\n';
    out << "simple cycles checked: " << c.cycles_checked << '\n';
    if (opt.max_cycle_len) {
      const bool oracle = all_cycles_pass(*c.E, q, *opt.max_cycle_len);
      out << "oracle (closed walks up to length " << *opt.max_cycle_len
          << "): " << (oracle == !c.failure ? "agrees" : "DISAGREES") << '\n';
    }
  }
  if (!c.equivalent()) {
    print_refusal(p, c, out);
    return exit_code::not_equivalent;
  }
  out << "verdict: equivalent\n";
  out << "rho0: " << scalars_by_vertex(q, *c.rho0) << '\n';
  out << "rho on window:\n";
  print_window_rho(q, *c.rho, out);
  return exit_code::success;
}

int cmd_rho(const Problem& p, const std::string& first, const std::string& second, const Options& opt,
            std::ostream& out) {
  const Quiver& q = p.quiver();
  const Criterion c = run_criterion(p, resolve(p, first, second), resolve(p, second, first), opt);
  if (opt.format == Format::json) {
    json doc{{"equivalent", c.equivalent()}, {"window", {c.window.first, c.window.second}}};
    if (c.equivalent()) {
      json rho0 = json::object();
      for (VertexId x = 0; x < q.vertex_count(); ++x) rho0[q.vertex_name(x)] = to_string((*c.rho0)[x]);
      doc["rho0"] = rho0;
      doc["rho"] = window_rho_json(q, *c.rho);
    } else if (c.failure) {
      doc["failing_cycle"] = to_string(q, c.failure->cycle.walk());
      doc["value"] = to_string(c.failure->value);
    }
    out << doc.dump(2) << '\n';
  } else if (c.equivalent()) {
    out << "rho0: " << scalars_by_vertex(q, *c.rho0) << '\n';
    print_window_rho(q, *c.rho, out);
  } else {
    print_refusal(p, c, out);
  }
  return c.equivalent() ? exit_code::success : exit_code::not_equivalent;
}

int cmd_orbit(const Problem& p, const std::string& name, const Options& opt, std::ostream& out) {
  const JumpAuto phi = p.get(name);
  if (phi.jump == 0) {
    throw Error("auto '" + name +
                "' has jump 0; its orbit category has infinitely many objects, so no finite algebra is built");
  }
  const auto [lo, hi] = window_for(opt, phi.jump);
  const GradedAlgebra g = build_orbit(build_window(p.algebra(), lo, hi), phi);
  const std::string body = opt.format == Format::json ? orbit_json(g).dump(2) + "\n" : structure_table_text(g);
  if (opt.out_path) {
    std::ofstream file(*opt.out_path);
    if (!file) throw Error("cannot write '" + *opt.out_path + "'");
    file << body;
    out << "wrote orbit algebra of dimension " << g.dimension() << " to " << *opt.out_path << '\n';
  } else {
    out << body;
  }
  return exit_code::success;
}

int cmd_verify(const Problem& p, const std::string& first, const std::string& second, const Options& opt,
               std::ostream& out) {
  const Quiver& q = p.quiver();
  const JumpAuto phi = resolve(p, first, second);
  const JumpAuto psi = resolve(p, second, first);
  if (phi.jump == 0) throw Error("verify needs a nonzero jump: orbit categories of jump 0 are infinite");
  const Criterion c = run_criterion(p, phi, psi, opt);
  if (!c.equivalent()) {
    out << "stage criterion: failed\n";
    print_refusal(p, c, out);
    out << "result: no isomorphism constructed\n";
    return exit_code::not_equivalent;
  }
  out << "stage criterion: ok, rho0 = " << scalars_by_vertex(q, *c.rho0) << '\n';
  out << "stage extend: ok on window [" << c.window.first << ", " << c.window.second << "]\n";

  const RepetitiveWindow w = build_window(p.algebra(), c.window.first, c.window.second);
  const GradedAlgebra src = build_orbit(w, phi);
  const GradedAlgebra dst = build_orbit(w, psi);
  const EtaFamily eta = build_eta(phi, *c.rho, -1, 1, src.objects());
  const bool cocycle = eta_cocycle_holds(eta, phi);
  out << "stage eta: powers -1..1, cocycle " << (cocycle ? "holds" : "FAILS") << '\n';
  out << "stage orbit " << first << ": dimension " << src.dimension() << '\n';
  out << "stage orbit " << second << ": dimension " << dst.dimension() << '\n';
  const GradedIso iso = graded_iso_from_rho(src, dst, eta);
  const bool ok = cocycle && verify_graded_iso(iso, src, dst);
  out << "stage verify: " << (ok ? "ok" : "FAILED") << '\n';
  out << "result: " << (ok ? "isomorphic (graded)" : "not verified") << '\n';
  return ok ? exit_code::success : exit_code::not_equivalent;
}

int cmd_dump(const Problem& p, const Options& opt, std::ostream& out) {
  const Algebra& a = p.algebra();
  const Quiver& q = a.quiver();
  if (opt.format == Format::json) {
    json vertices = json::array();
    for (VertexId v = 0; v < q.vertex_count(); ++v) vertices.push_back(q.vertex_name(v));
    json arrows = json::array();
    for (const Arrow& arrow : q.arrows()) {
      arrows.push_back({{"name", arrow.name}, {"source", q.vertex_name(arrow.source)},
                        {"target", q.vertex_name(arrow.target)}});
    }
    json relations = json::array();
    for (const Path& r : a.relations()) relations.push_back(to_string(q, r));
    json basis = json::array();
    for (const Path& b : a.basis()) basis.push_back(to_string(q, b));
    json autos = json::object();
    for (const auto& [name, f] : p.autos()) {
      json sigma = json::object();
      for (ArrowId x = 0; x < q.arrow_count(); ++x) {
        sigma[q.arrow(x).name] = {{"image", q.arrow(f.sigma.arrow(x)).name}, {"scalar", to_string(f.sigma.scalar(x))}};
      }
      json lambda = json::array();
      for (const auto& [key, value] : f.lambda.entries()) {
        lambda.push_back({{"level", key.first}, {"vertex", q.vertex_name(key.second)}, {"value", to_string(value)}});
      }
      autos[name] = {{"jump", f.jump}, {"sigma", sigma}, {"lambda", lambda}};
    }
    out << json{{"vertices", vertices},
                {"arrows", arrows},
                {"relations", relations},
                {"dimension", a.dimension()},
                {"basis", basis},
                {"no_nonzero_oriented_cycles", has_no_nonzero_oriented_cycles(a)},
                {"autos", autos}}
               .dump(2)
        << '\n';
    return exit_code::success;
  }
  out << serialize_problem(p.file());
  out << "\n# dimension " << a.dimension() << '\n';
  out << "# basis";
  for (const Path& b : a.basis()) out << ' ' << to_string(q, b);
  out << "\n# no nonzero oriented cycles: " << (has_no_nonzero_oriented_cycles(a) ? "yes" : "no") << '\n';
  return exit_code::success;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"repcat: repetitive categories, jump automorphisms and graded orbit algebras"};
  app.require_subcommand(1);

  std::string file;
  std::string first;
  std::string second;
  std::string window;
  std::string format = "text";
  std::string out_path;
  std::size_t max_cycle_len = 0;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--window", window, "Window levels LO..HI (default depends on the jump)");
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  };

  auto* cycles = app.add_subcommand("cycles", "List simple-cycle representatives");
  cycles->add_option("file", file, "Problem file")->required();
  add_common(cycles);

  auto* check = app.add_subcommand("check", "Decide whether two orbit categories are graded-isomorphic");
  check->add_option("file", file, "Problem file")->required();
  check->add_option("first", first, "First automorphism")->required();
  check->add_option("second", second, "Second automorphism")->required();
  check->add_option("--max-cycle-len", max_cycle_len, "Also run the exhaustive walk oracle up to this length");
  add_common(check);

  auto* rho = app.add_subcommand("rho", "Print the certificate rho on the window");
  rho->add_option("file", file, "Problem file")->required();
  rho->add_option("first", first, "First automorphism")->required();
  rho->add_option("second", second, "Second automorphism")->required();
  add_common(rho);

  auto* orbit = app.add_subcommand("orbit", "Dump the structure constants of the orbit algebra");
  orbit->add_option("file", file, "Problem file")->required();
  orbit->add_option("auto", first, "Automorphism with nonzero jump")->required();
  orbit->add_option("--out", out_path, "Write the table to this file");
  add_common(orbit);

  auto* verify = app.add_subcommand("verify", "Build and verify the graded isomorphism end to end");
  verify->add_option("file", file, "Problem file")->required();
  verify->add_option("first", first, "First automorphism")->required();
  verify->add_option("second", second, "Second automorphism, or 'twist'")->required();
  add_common(verify);

  auto* dump = app.add_subcommand("dump", "Print the parsed problem and algebra");
  dump->add_option("file", file, "Problem file")->required();
  add_common(dump);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_code::success : exit_code::input_error;
  }

  try {
    Options opt;
    if (!window.empty()) opt.window = parse_window(window);
    if (max_cycle_len > 0) opt.max_cycle_len = max_cycle_len;
    if (!out_path.empty()) opt.out_path = out_path;
    opt.format = format == "json" ? Format::json : Format::text;
    const Problem problem(read_problem(file));

    if (cycles->parsed()) return cmd_cycles(problem, opt, out);
    if (check->parsed()) return cmd_check(problem, first, second, opt, out);
    if (rho->parsed()) return cmd_rho(problem, first, second, opt, out);
    if (orbit->parsed()) return cmd_orbit(problem, first, opt, out);
    if (verify->parsed()) return cmd_verify(problem, first, second, opt, out);
    return cmd_dump(problem, opt, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::input_error;
  }
}

}  // namespace repcat::cli

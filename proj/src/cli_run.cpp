#include "tangles/cli.hpp"

#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "tangles/decide.hpp"
#include "tangles/determinant.hpp"
#include "tangles/errors.hpp"
#include "tangles/parser.hpp"
#include "tangles/slope.hpp"
#include "tangles/surface.hpp"
#include "tangles/templates.hpp"

namespace tangles {

namespace {

using nlohmann::json;

json int_json(const Integer& v) {
  static const Integer lo = std::numeric_limits<long long>::min();
  static const Integer hi = std::numeric_limits<long long>::max();
  if (v >= lo && v <= hi) return static_cast<long long>(v);
  return v.str();
}

json witness_json(const Witness& w) {
  json j;
  j["kind"] = w.kind;
  if (!w.vertex.empty()) j["vertex"] = w.vertex;
  if (!w.vertex2.empty()) j["vertex2"] = w.vertex2;
  if (!w.subexpr.empty()) j["subexpr"] = w.subexpr;
  if (w.kind == "closed-subtangle" || w.kind == "q-summand")
    j["path"] = w.path.str();
  if (w.genus >= 0) j["genus"] = int_json(w.genus);
  if (w.q_m > 0) j["m"] = w.q_m;
  return j;
}

json decision_json(const Decision& d) {
  json j;
  j["value"] = d.value;
  j["witness"] = d.witness ? witness_json(*d.witness) : json(nullptr);
  return j;
}

std::string witness_text(const Witness& w) {
  std::string s = w.kind;
  if (!w.vertex.empty()) s += " at vertex " + w.vertex;
  if (!w.vertex2.empty()) s += " and " + w.vertex2;
  if (!w.subexpr.empty()) s += ": " + w.subexpr;
  return s;
}

struct Command {
  std::string name;
  json input;
  json result;
  std::vector<std::string> warnings;
  std::string human;
};

json report_json(const Command& c) {
  json j;
  j["command"] = c.name;
  j["input"] = c.input;
  j["result"] = c.result;
  j["warnings"] = c.warnings;
  return j;
}

Command cmd_slope(const std::string& text) {
  Command c;
  c.name = "slope";
  ExprPtr e = parse(text);
  c.input = render(e);
  ExtendedRational s = slope(e);
  std::string type = parity_name(classify(s));
  c.result["slope"] = s.str();
  c.result["type"] = type;
  c.human = s.str() + " (" + type + ")";
  return c;
}

Command cmd_classify(const std::string& text) {
  Command c;
  c.name = "classify";
  ExprPtr e = parse(text);
  c.input = render(e);
  ExtendedRational s = slope(e);
  bool loop = has_loop(e);
  c.result["slope"] = s.str();
  c.result["type"] = parity_name(classify(s));
  c.result["has_loop"] = loop;
  if (loop)
    c.result["connection_type"] = nullptr;
  else
    c.result["connection_type"] = parity_name(connection_type(e));
  c.result["closed_subtangles"] = json::array();
  for (const TreePath& p : find_closed_subtangles(e))
    c.result["closed_subtangles"].push_back(p.str());
  c.result["qm_summands"] = json::array();
  for (const QSummand& q : find_qm_summands(e))
    c.result["qm_summands"].push_back({{"m", q.m}, {"path", q.where.str()}});

  std::ostringstream h;
  h << "slope " << s.str() << " (" << parity_name(classify(s)) << ")\n";
  h << "has_loop " << (loop ? "yes" : "no") << "\n";
  h << "connection " << (loop ? "-" : parity_name(connection_type(e))) << "\n";
  h << "closed_subtangles " << c.result["closed_subtangles"].size() << "\n";
  h << "qm_summands " << c.result["qm_summands"].size();
  c.human = h.str();
  return c;
}

Command cmd_surface(const std::string& text) {
  Command c;
  c.name = "surface";
  ExprPtr e = parse(text);
  c.input = render(e);
  SurfaceResult r = surface_of_detailed(e);
  c.warnings = r.warnings;
  c.result["euler"] = int_json(r.data.euler);
  c.result["boundary_count"] = int_json(r.data.boundary_count);
  c.result["boundary_slope"] = r.data.boundary_slope.str();
  c.result["genus"] = int_json(r.data.genus);
  std::ostringstream h;
  h << "euler " << r.data.euler << ", boundary " << r.data.boundary_count
    << ", slope " << r.data.boundary_slope.str() << ", genus " << r.data.genus;
  c.human = h.str();
  return c;
}

Command cmd_genus(const std::string& text) {
  Command c;
  c.name = "genus";
  ExprPtr e = parse(text);
  c.input = render(e);
  Integer g = genus(e);
  c.result["genus"] = int_json(g);
  c.human = g.str();
  return c;
}

Command cmd_oracle(const std::string& text) {
  Command c;
  c.name = "oracle";
  ExprPtr e = parse(text);
  c.input = render(e);
  KrebesFraction f = krebes_fraction(e);
  bool ok = check_slope_consistency(e);
  c.result["krebes"] = {{"num", int_json(f.num)}, {"den", int_json(f.den)}};
  c.result["slope"] = slope(e).str();
  c.result["consistent"] = ok;
  std::ostringstream h;
  h << "krebes " << f.num << "/" << f.den << ", slope " << slope(e).str()
    << ", " << (ok ? "consistent" : "INCONSISTENT");
  c.human = h.str();
  return c;
}

Command cmd_assemble(const std::string& path, bool pd) {
  Command c;
  c.name = "assemble";
  DiagramTemplate t = load_template_file(path);
  c.input = path;
  LinkDiagram d = assemble(t);
  c.result["crossings"] = static_cast<long long>(d.crossing_count());
  c.result["free_loops"] = d.free_loops;
  c.result["components"] = trace_components(d);
  c.result["alternating"] = is_alternating(d);
  c.result["split"] = is_split(d);
  std::string pd_str = pd_text(d);
  if (pd) c.result["pd"] = pd_str;
  std::ostringstream h;
  if (pd) {
    if (!pd_str.empty() && pd_str.back() == '\n') pd_str.pop_back();
    h << pd_str;
  } else {
    h << "crossings " << d.crossing_count() << ", components "
      << trace_components(d) << ", free loops " << d.free_loops
      << (is_alternating(d) ? ", alternating" : ", non-alternating")
      << (is_split(d) ? ", split" : ", non-split");
  }
  c.human = h.str();
  return c;
}

Command cmd_decide(const std::string& path) {
  Command c;
  c.name = "decide";
  DiagramTemplate t = load_template_file(path);
  c.input = path;
  SurfaceExistenceReport rep = decide_all(t);
  c.result["closed_surface"] = decision_json(rep.closed_surface);
  c.result["sphere"] = decision_json(rep.sphere);
  c.result["torus"] = {
      {"value", tri_state_name(rep.torus.value)},
      {"witness", rep.torus.witness ? witness_json(*rep.torus.witness) : json(nullptr)}};
  c.result["preconditions_met"] = {
      {"algebraically_alternating", rep.alternating_precondition},
      {"no_genus0_cut_tangle", rep.no_genus0_cut_tangle}};
  c.result["q_summands"] = json::array();
  for (const auto& q : rep.q_summands)
    c.result["q_summands"].push_back(
        {{"vertex", q.vertex}, {"m", q.m}, {"path", q.path.str()}});
  if (!rep.no_genus0_cut_tangle)
    c.warnings.push_back("torus clause precondition not met: genus-0 cut tangle");
  for (const auto& q : rep.q_summands)
    if (rep.torus.value == TriState::unknown)
      c.warnings.push_back("unresolved Q_" + std::to_string(q.m) + " at vertex " +
                           q.vertex);

  std::ostringstream h;
  h << "closed_surface: " << (rep.closed_surface.value ? "yes" : "no");
  if (rep.closed_surface.witness)
    h << " (" << witness_text(*rep.closed_surface.witness) << ")";
  h << "\nsphere: " << (rep.sphere.value ? "yes" : "no");
  if (rep.sphere.witness) h << " (" << witness_text(*rep.sphere.witness) << ")";
  h << "\ntorus: " << tri_state_name(rep.torus.value);
  if (rep.torus.witness) h << " (" << witness_text(*rep.torus.witness) << ")";
  c.human = h.str();
  return c;
}

}  // namespace

CliResult run_cli(const std::vector<std::string>& args) {
  CLI::App app{"exact slope, surface and closed-surface calculator for "
               "algebraic tangles"};
  app.require_subcommand(1);
  bool json_mode = false;
  app.add_flag("--json", json_mode, "machine-readable output");

  std::string expr_text, template_path;
  bool pd_flag = false;

  CLI::App* c_slope = app.add_subcommand("slope", "slope and parity type");
  c_slope->add_option("expr", expr_text, "tangle expression")->required();
  CLI::App* c_classify =
      app.add_subcommand("classify", "type, loops, connection, sub-tangles");
  c_classify->add_option("expr", expr_text)->required();
  CLI::App* c_surface = app.add_subcommand("surface", "essential surface data");
  c_surface->add_option("expr", expr_text)->required();
  CLI::App* c_genus = app.add_subcommand("genus", "minimal surface genus");
  c_genus->add_option("expr", expr_text)->required();
  CLI::App* c_oracle =
      app.add_subcommand("oracle", "determinant fraction and slope check");
  c_oracle->add_option("expr", expr_text)->required();
  CLI::App* c_assemble = app.add_subcommand("assemble", "assemble a template");
  c_assemble->add_option("template", template_path, "template JSON file")->required();
  c_assemble->add_flag("--pd", pd_flag, "print the PD code");
  CLI::App* c_decide =
      app.add_subcommand("decide", "closed-surface decision report");
  c_decide->add_option("template", template_path)->required();

  // Expressions may start with '-' (reflection); route every token that is
  // not a recognized flag through a positional-only section.
  std::vector<std::string> flags, positionals;
  bool help_requested = false;
  for (const auto& a : args) {
    if (a == "--json" || a == "--pd") {
      flags.push_back(a);
    } else if (a == "--help" || a == "-h") {
      help_requested = true;
    } else {
      positionals.push_back(a);
    }
  }
  std::vector<std::string> ordered;
  for (const auto& f : flags)
    if (f == "--json") ordered.push_back(f);
  if (!positionals.empty()) {
    ordered.push_back(positionals.front());  // subcommand name
    for (const auto& f : flags)
      if (f != "--json") ordered.push_back(f);
    if (help_requested) ordered.push_back("--help");
    ordered.push_back("--");
    ordered.insert(ordered.end(), positionals.begin() + 1, positionals.end());
  } else if (help_requested) {
    ordered.push_back("--help");
  }

  CliResult res;
  std::vector<const char*> argv;
  argv.push_back("tangle");
  for (const auto& a : ordered) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    res.out = app.help();
    res.status = 0;
    return res;
  } catch (const CLI::ParseError& e) {
    res.err = std::string("usage error: ") + e.what() + "\n";
    res.status = 2;
    return res;
  }

  try {
    Command c;
    if (c_slope->parsed())
      c = cmd_slope(expr_text);
    else if (c_classify->parsed())
      c = cmd_classify(expr_text);
    else if (c_surface->parsed())
      c = cmd_surface(expr_text);
    else if (c_genus->parsed())
      c = cmd_genus(expr_text);
    else if (c_oracle->parsed())
      c = cmd_oracle(expr_text);
    else if (c_assemble->parsed())
      c = cmd_assemble(template_path, pd_flag);
    else
      c = cmd_decide(template_path);
    if (json_mode) {
      res.out = report_json(c).dump(2) + "\n";
    } else {
      res.out = c.human + "\n";
      for (const auto& w : c.warnings) res.err += "warning: " + w + "\n";
    }
    res.status = 0;
  } catch (const TangleError& e) {
    res.status = 1;
    if (json_mode) {
      json j;
      j["error"] = {{"type", e.name()}, {"message", e.what()}};
      if (const auto* pe = dynamic_cast<const ParseError*>(&e)) {
        j["error"]["position"] = static_cast<long long>(pe->position);
        j["error"]["expected"] = pe->expected;
        j["error"]["found"] = pe->found;
      }
      res.out = j.dump(2) + "\n";
    } else {
      res.err = std::string(e.name()) + ": " + e.what() + "\n";
    }
  }
  return res;
}

}  // namespace tangles

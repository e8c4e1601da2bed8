#ifndef MINDING_TOOLS_CLI_HPP
#define MINDING_TOOLS_CLI_HPP

#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "minding/minding.hpp"

namespace minding::cli {

enum ExitCode : int { ok = 0, parse_error = 2, precondition = 3, render = 4, internal = 5 };

struct RunConfiguration {
  std::string command;
  std::vector<std::string> inputs;
  bool pattern = false;
  std::uint64_t seed = 0;
  std::uint64_t bound = 99;
  std::string eliminate = "y";
  std::string method = "all";
  std::string k_source = "support";
  std::string format = "json";
  std::string out;
};

struct CliResult {
  int code = ok;
  std::string out;
  std::string err;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline std::string slurp(const std::string& arg) {
  if (arg.empty() || arg.front() != '@') return arg;
  std::ifstream in(arg.substr(1));
  if (!in) throw UsageError("cannot read " + arg.substr(1));
  std::ostringstream ss;
  ss << in.rdbuf();
  std::string text = ss.str();
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' ')) text.pop_back();
  return text;
}

inline bool looks_like_json(const std::string& text) {
  const auto pos = text.find_first_not_of(" \t\n");
  return pos != std::string::npos && (text[pos] == '[' || text[pos] == '{');
}

class Session {
 public:
  explicit Session(const RunConfiguration& cfg) : cfg_(cfg) {
    for (const auto& in : cfg.inputs) texts_.push_back(slurp(in));
  }

  std::size_t count() const { return texts_.size(); }

  void require(std::size_t n, const char* what) const {
    if (texts_.size() != n) throw UsageError(cfg_.command + " expects " + what);
  }

  Polynomial polynomial(std::size_t i) const {
    if (looks_like_json(texts_[i])) throw UsageError("input " + std::to_string(i + 1) + " must be a polynomial");
    if (cfg_.pattern) return parse_pattern(texts_[i], cfg_.seed + i, cfg_.bound);
    return parse_polynomial(texts_[i]);
  }

  LatticePolygon polygon(std::size_t i) const {
    if (!looks_like_json(texts_[i])) return convex_hull(polynomial(i).support());
    Json j;
    try {
      j = Json::parse(texts_[i]);
    } catch (const Json::parse_error& e) {
      throw ParseError(e.byte, "invalid polygon literal");
    }
    try {
      return polygon_from_json(j);
    } catch (const Json::exception& e) {
      throw ParseError(1, std::string("invalid polygon literal: ") + e.what());
    }
  }

  Variable eliminate() const { return variable_from_string(cfg_.eliminate); }
  KSource k_source() const {
    if (cfg_.k_source == "support") return KSource::support;
    if (cfg_.k_source == "polygon") return KSource::polygon;
    throw UsageError("--k-source must be support or polygon");
  }

  Json header() const {
    Json j = {{"command", cfg_.command}, {"seed", cfg_.seed}};
    if (cfg_.pattern) j["bound"] = cfg_.bound;
    return j;
  }

  const RunConfiguration& config() const { return cfg_; }

  bool blank(std::size_t i) const {
    const std::string& t = texts_[i];
    if (t.find_first_not_of(" \t\n") == std::string::npos) return true;
    if (!looks_like_json(t)) return false;
    const Json j = Json::parse(t, nullptr, false);
    if (j.is_array()) return j.empty();
    return j.is_object() && j.contains("vertices") && j["vertices"].is_array() && j["vertices"].empty();
  }

 private:
  const RunConfiguration& cfg_;
  std::vector<std::string> texts_;
};

/// Exponents in the order of the canonical text: descending y, then x.
inline Json support_json(const Polynomial& p) {
  auto pts = p.support();
  std::sort(pts.begin(), pts.end(), [](LatticePoint a, LatticePoint b) { return a.y != b.y ? a.y > b.y : a.x > b.x; });
  return points_json(pts);
}

inline std::string text_lines(const Json& j) {
  std::ostringstream os;
  for (const auto& [k, v] : j.items()) os << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
  return os.str();
}

inline std::string degree_formula(const DegreeReport& r) {
  std::ostringstream os;
  os << r.m << '*' << r.b;
  for (std::size_t i = 0; i < r.classes.size(); ++i) {
    const auto& c = r.classes[i];
    Rational k = 0;
    std::size_t offset = 0;
    for (std::size_t j = 0; j < i; ++j) offset += static_cast<std::size_t>(r.classes[j].multiplicity);
    k = r.k_values[offset] * c.multiplicity;
    os << " + " << to_string(k);
  }
  os << " = " << r.degree;
  return os.str();
}

inline Json cmd_parse(const Session& s) {
  if (s.count() == 0) throw UsageError("parse expects at least one polynomial");
  Json j = s.header();
  Json polys = Json::array();
  for (std::size_t i = 0; i < s.count(); ++i) {
    const Polynomial p = s.polynomial(i);
    polys.push_back({{"canonical", p.to_string()}, {"support", support_json(p)}});
  }
  j["polynomials"] = polys;
  return j;
}

inline Json cmd_predict(const Session& s) {
  s.require(2, "two polynomials f and theta");
  const Polynomial f = s.polynomial(0), theta = s.polynomial(1);
  const DegreeReport r = minding_degree(f, theta, s.eliminate(), s.k_source());
  Json j = s.header();
  j.update(to_json(r));
  j["formula"] = degree_formula(r);
  const FinckResult finck = finck_degree(f, theta, s.eliminate());
  j["finck_consistent"] = finck.applicable() && *finck.degree == r.degree;
  if (finck.applicable()) j["finck"] = *finck.degree;
  return j;
}

inline Json cmd_mixed_area(const Session& s) {
  s.require(2, "two polygons or polynomials");
  const LatticePolygon p = s.polygon(0), q = s.polygon(1);
  const std::string& sel = s.config().method;
  std::vector<MixedAreaResult> results = all_mixed_areas(p, q);
  if (sel != "all") {
    std::vector<MixedAreaResult> picked;
    for (const auto& r : results)
      if (sel == method_name(r.method)) picked.push_back(r);
    if (picked.empty()) {
      bool known = false;
      for (auto m : {MixedAreaMethod::dilation, MixedAreaMethod::inclusion_exclusion, MixedAreaMethod::recursion,
                     MixedAreaMethod::minding, MixedAreaMethod::subdivision})
        known = known || sel == method_name(m);
      if (!known) throw UsageError("unknown method '" + sel + "'");
      throw PreconditionError("method " + sel + " does not apply to these polygons");
    }
    results = picked;
  }
  Json j = s.header();
  for (const auto& r : results) j[method_name(r.method)] = to_string(r.value);
  j["agree"] = methods_agree(results);
  return j;
}

inline Json cmd_subdivide(const Session& s, MixedSubdivision& sub, LatticePolygon& p1, LatticePolygon& p2) {
  s.require(2, "two polygons or polynomials");
  p1 = s.polygon(0);
  p2 = s.polygon(1);
  sub = build_subdivision(p1, p2);
  const ValidationReport v = validate_subdivision(sub, p1, p2);
  if (!v.ok()) throw InvariantError("subdivision failed validation: " + v.violations.front());
  Json j = s.header();
  j.update(to_json(sub));
  j["notes"] = v.notes;
  if (is_minding_form(p1) && p2.min_x() >= 0 && p2.min_y() == 0 && p2.contains({0, 0}))
    j["straightening"] = to_json(straighten_strips(sub, p1, p2));
  return j;
}

inline Json cmd_resultant(const Session& s) {
  s.require(2, "two polynomials f and theta");
  const Polynomial f = s.polynomial(0), theta = s.polynomial(1);
  const Variable elim = s.eliminate();
  const UnivariatePolynomial psi = resultant_polynomial(f, theta, elim);
  const char var = variable_name(other(elim));
  Json j = s.header();
  j["eliminate"] = std::string(1, variable_name(elim));
  j["psi"] = psi.to_string(var);
  j["primitive"] = psi.primitive_part().to_string(var);
  j["degree"] = *psi.degree();
  j["swap_identity"] = swap_identity_check(f, theta, elim);
  return j;
}

inline Json cmd_check(const Session& s) {
  s.require(2, "two polynomials f and theta");
  Json j = s.header();
  j.update(to_json(check_prediction(s.polynomial(0), s.polynomial(1), s.eliminate(), s.k_source())));
  return j;
}

inline Json cmd_bounds(const Session& s) {
  s.require(2, "two polynomials f and theta");
  const Polynomial f = s.polynomial(0), theta = s.polynomial(1);
  Json j = s.header();
  j.update(to_json(bounds_report(f, theta, s.eliminate())));
  j["resultant_degree"] = resultant_degree(f, theta, s.eliminate());
  return j;
}

inline std::string title_for(const Session& s, const std::string& what) {
  return what + " (seed " + std::to_string(s.config().seed) + ")";
}

inline std::string run(const RunConfiguration& cfg) {
  const Session s(cfg);
  if (cfg.format != "json" && cfg.format != "text" && cfg.format != "svg")
    throw UsageError("--format must be json, text or svg");
  const bool svg = cfg.format == "svg" || cfg.command == "svg";
  if (svg && cfg.command != "svg" && cfg.command != "subdivide")
    throw UsageError("--format svg applies to the svg and subdivide commands only");

  Json j;
  if (cfg.command == "parse") {
    j = cmd_parse(s);
  } else if (cfg.command == "predict") {
    j = cmd_predict(s);
  } else if (cfg.command == "mixed-area") {
    j = cmd_mixed_area(s);
  } else if (cfg.command == "subdivide") {
    MixedSubdivision sub;
    LatticePolygon p1, p2;
    j = cmd_subdivide(s, sub, p1, p2);
    if (svg) return render_subdivision_svg(sub, title_for(s, "mixed subdivision"));
  } else if (cfg.command == "resultant") {
    j = cmd_resultant(s);
  } else if (cfg.command == "check") {
    j = cmd_check(s);
  } else if (cfg.command == "bounds") {
    j = cmd_bounds(s);
  } else if (cfg.command == "svg") {
    for (std::size_t i = 0; i < s.count(); ++i)
      if (s.blank(i)) throw RenderError("nothing to render: input " + std::to_string(i + 1) + " is empty");
    if (s.count() == 1) {
      const LatticePolygon p = s.polygon(0);
      return render_polygon_svg(p, title_for(s, "Newton polygon"));
    }
    if (s.count() == 2) {
      const LatticePolygon p1 = s.polygon(0), p2 = s.polygon(1);
      return render_subdivision_svg(build_subdivision(p1, p2), title_for(s, "mixed subdivision"));
    }
    throw RenderError("nothing to render: svg expects one or two inputs");
  } else {
    throw UsageError("unknown command '" + cfg.command + "'");
  }
  return cfg.format == "text" ? text_lines(j) : j.dump(2) + "\n";
}

}  // namespace detail

inline CliResult run_cli(std::vector<std::string> args) {
  RunConfiguration cfg;
  CLI::App app{"Degree prediction for two-variable elimination, with exact checks", "minding"};
  app.set_help_flag("-h,--help", "Show help");
  app.require_subcommand(1, 1);
  app.allow_extras();
  const std::pair<const char*, const char*> commands[] = {
      {"parse", "Canonical form and support of each polynomial"},
      {"predict", "Degree of the final equation from the Newton polygons"},
      {"mixed-area", "Mixed area of two polygons by every applicable method"},
      {"subdivide", "Regular mixed subdivision and its strips"},
      {"resultant", "Exact resultant and the swap identity"},
      {"check", "Predicted against actual degree, with common factors"},
      {"bounds", "Bezout, Finck and Li-Wang bounds"},
      {"svg", "Draw a polygon, or the subdivision of a pair"},
  };
  for (const auto& [name, description] : commands) {
    auto* sub = app.add_subcommand(name, description);
    sub->allow_extras();
    sub->footer("Inputs: polynomials, JSON polygon literals, or @file");
    sub->add_flag("--pattern", cfg.pattern, "Expand (x^mu) coefficient blocks");
    sub->add_option("--seed", cfg.seed, "Seed for pattern coefficients");
    sub->add_option("--bound", cfg.bound, "Coefficient bound for patterns");
    sub->add_option("--eliminate", cfg.eliminate)->check(CLI::IsMember({"x", "y"}));
    sub->add_option("--method", cfg.method)
        ->check(CLI::IsMember({"all", "ie", "recursion", "dilation", "subdivision", "minding"}));
    sub->add_option("--k-source", cfg.k_source)->check(CLI::IsMember({"support", "polygon"}));
    sub->add_option("--format", cfg.format)->check(CLI::IsMember({"json", "text", "svg"}));
    sub->add_option("--out", cfg.out, "Write output to a file");
    sub->callback([&cfg, sub] {
      cfg.command = sub->get_name();
      for (auto& arg : sub->remaining()) {
        if (arg.size() > 2 && arg.rfind("--", 0) == 0) throw CLI::ExtrasError({arg});
        cfg.inputs.push_back(arg);
      }
    });
  }

  CliResult result;
  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
    for (auto& arg : app.remaining()) cfg.inputs.push_back(arg);
  } catch (const CLI::CallForHelp&) {
    result.out = app.help();
    return result;
  } catch (const CLI::ParseError& e) {
    result.code = parse_error;
    result.err = std::string("error: ") + e.what() + "\n";
    return result;
  }

  try {
    std::string output = detail::run(cfg);
    if (cfg.out.empty()) {
      result.out = std::move(output);
    } else {
      std::ofstream file(cfg.out, std::ios::binary);
      if (!file) throw UsageError("cannot write " + cfg.out);
      file << output;
    }
  } catch (const ParseError& e) {
    result.code = parse_error;
    result.err = std::string("parse error: ") + e.what() + "\n";
  } catch (const UsageError& e) {
    result.code = parse_error;
    result.err = std::string("error: ") + e.what() + "\n";
  } catch (const RenderError& e) {
    result.code = render;
    result.err = std::string("render error: ") + e.what() + "\n";
  } catch (const InvariantError& e) {
    result.code = internal;
    result.err = std::string("internal error: ") + e.what() + "\n";
  } catch (const std::invalid_argument& e) {
    result.code = precondition;
    result.err = std::string("precondition violated: ") + e.what() + "\n";
  } catch (const std::exception& e) {
    result.code = internal;
    result.err = std::string("internal error: ") + e.what() + "\n";
  }
  return result;
}

}  // namespace minding::cli

#endif  // MINDING_TOOLS_CLI_HPP

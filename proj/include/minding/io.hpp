#ifndef MINDING_IO_HPP
#define MINDING_IO_HPP

// JSON encodings of the library's reports. Arbitrary-precision integers and
// rationals are written as strings ("5", "-5/3"); small counts as numbers.

#include <json.hpp>

#include <string>
#include <vector>

#include "bounds.hpp"
#include "lattice.hpp"
#include "mixed_area.hpp"
#include "parser.hpp"
#include "puiseux.hpp"
#include "resultant.hpp"
#include "subdivision.hpp"

namespace minding {

using Json = nlohmann::json;

inline Json point_json(LatticePoint p) { return Json::array({p.x, p.y}); }
inline LatticePoint point_from_json(const Json& j) { return {j.at(0).get<std::int64_t>(), j.at(1).get<std::int64_t>()}; }

inline Json points_json(const std::vector<LatticePoint>& pts) {
  Json a = Json::array();
  for (auto p : pts) a.push_back(point_json(p));
  return a;
}
inline std::vector<LatticePoint> points_from_json(const Json& j) {
  std::vector<LatticePoint> out;
  for (const auto& p : j) out.push_back(point_from_json(p));
  return out;
}

inline Json to_json(const LatticePolygon& p) { return {{"vertices", points_json(p.vertices())}}; }

/// Accepts {"vertices": [...]} in canonical order; any other point list is
/// hulled.
inline LatticePolygon polygon_from_json(const Json& j) {
  if (j.is_object()) return LatticePolygon::from_canonical(points_from_json(j.at("vertices")));
  return convex_hull(points_from_json(j));
}

inline Json coefficients_json(const UnivariatePolynomial& u) {
  Json a = Json::array();
  for (const auto& c : u.coefficients()) a.push_back(c.str());
  return a;
}
inline UnivariatePolynomial coefficients_from_json(const Json& j) {
  std::vector<BigInt> v;
  for (const auto& c : j) v.emplace_back(c.get<std::string>());
  return UnivariatePolynomial(std::move(v));
}

inline Variable variable_from_string(const std::string& s) {
  if (s == "x") return Variable::x;
  if (s == "y") return Variable::y;
  throw std::invalid_argument("variable must be x or y, got '" + s + "'");
}

inline Json to_json(const PuiseuxClass& c) {
  return {{"h", to_string(c.h)},
          {"mult", c.multiplicity},
          {"edge", point_json(c.edge)},
          {"start", point_json(c.start)},
          {"edge_polynomial", coefficients_json(c.edge_polynomial)}};
}

inline PuiseuxClass puiseux_class_from_json(const Json& j) {
  PuiseuxClass c;
  c.h = parse_rational(j.at("h").get<std::string>());
  c.multiplicity = j.at("mult").get<std::int64_t>();
  c.edge = point_from_json(j.at("edge"));
  if (j.contains("start")) c.start = point_from_json(j.at("start"));
  if (j.contains("edge_polynomial")) c.edge_polynomial = coefficients_from_json(j.at("edge_polynomial"));
  return c;
}

inline Json to_json(const DegreeReport& r) {
  Json classes = Json::array();
  for (const auto& c : r.classes) classes.push_back(to_json(c));
  Json ks = Json::array();
  for (const auto& k : r.k_values) ks.push_back(to_string(k));
  return {{"eliminate", std::string(1, variable_name(r.eliminated))},
          {"m", r.m},
          {"n", r.n},
          {"b", r.b},
          {"classes", classes},
          {"k_values", ks},
          {"degree", r.degree},
          {"warnings", r.warnings}};
}

inline DegreeReport degree_report_from_json(const Json& j) {
  DegreeReport r;
  r.eliminated = variable_from_string(j.value("eliminate", std::string("y")));
  r.m = j.at("m").get<std::int64_t>();
  r.n = j.at("n").get<std::int64_t>();
  r.b = j.at("b").get<std::int64_t>();
  for (const auto& c : j.at("classes")) r.classes.push_back(puiseux_class_from_json(c));
  for (const auto& k : j.at("k_values")) r.k_values.push_back(parse_rational(k.get<std::string>()));
  r.degree = j.at("degree").get<std::int64_t>();
  r.warnings = j.value("warnings", std::vector<std::string>{});
  return r;
}

inline Json to_json(const ComparisonReport& r) {
  return {{"eliminate", std::string(1, variable_name(r.eliminated))},
          {"predicted", r.predicted},
          {"actual", r.actual},
          {"drop", r.drop},
          {"gcd_x", r.gcd_x.to_string('x')},
          {"gcd_y", r.gcd_y.to_string('y')},
          {"psi_divisibility", r.psi_divisibility},
          {"warnings", r.warnings}};
}

inline ComparisonReport comparison_report_from_json(const Json& j) {
  ComparisonReport r;
  r.eliminated = variable_from_string(j.value("eliminate", std::string("y")));
  r.predicted = j.at("predicted").get<std::int64_t>();
  r.actual = j.at("actual").get<std::int64_t>();
  r.drop = j.at("drop").get<std::int64_t>();
  r.gcd_x = parse_polynomial(j.at("gcd_x").get<std::string>()).coefficient_slice(Variable::y, 0);
  r.gcd_y = parse_polynomial(j.at("gcd_y").get<std::string>()).coefficient_slice(Variable::x, 0);
  r.psi_divisibility = j.at("psi_divisibility").get<int>();
  r.warnings = j.value("warnings", std::vector<std::string>{});
  return r;
}

inline Json to_json(const AccountingEntry& e) {
  return {{"variable", std::string(1, variable_name(e.variable))},
          {"generic_degree", e.generic_degree},
          {"degenerate_degree", e.degenerate_degree},
          {"escaped", e.escaped},
          {"absorbed_factor", e.absorbed_factor.to_string(variable_name(e.variable))},
          {"absorbed_multiplicity", e.absorbed_multiplicity},
          {"absorbed_roots", e.absorbed_roots},
          {"finite", e.finite}};
}

inline Json to_json(const FiniteSolutionSummary& s) {
  Json entries = Json::array();
  for (const auto& e : s.entries) entries.push_back(to_json(e));
  Json j = {{"entries", entries}, {"total_escaped", s.total_escaped}};
  j["finite"] = s.finite ? Json(*s.finite) : Json(nullptr);
  return j;
}

inline CellKind cell_kind_from_string(const std::string& s) {
  if (s == "unmixed-P1") return CellKind::unmixed_p1;
  if (s == "unmixed-P2") return CellKind::unmixed_p2;
  if (s == "mixed") return CellKind::mixed;
  throw std::invalid_argument("unknown cell kind '" + s + "'");
}

inline Json to_json(const MixedSubdivision& sub) {
  Json cells = Json::array();
  for (const auto& c : sub.cells) {
    cells.push_back({{"kind", cell_kind_name(c.kind)},
                     {"vertices", points_json(c.polygon.vertices())},
                     {"area", to_string(normalized_area(c.polygon))},
                     {"decomposition",
                      {{"p1_face", points_json(c.p1_face.vertices())}, {"p2_face", points_json(c.p2_face.vertices())}}}});
  }
  return {{"alpha", point_json(sub.alpha)}, {"cells", cells}};
}

inline MixedSubdivision subdivision_from_json(const Json& j) {
  MixedSubdivision sub;
  sub.alpha = point_from_json(j.at("alpha"));
  for (const auto& c : j.at("cells")) {
    SubdivisionCell cell;
    cell.kind = cell_kind_from_string(c.at("kind").get<std::string>());
    cell.polygon = LatticePolygon::from_canonical(points_from_json(c.at("vertices")));
    cell.p1_face = LatticePolygon::from_canonical(points_from_json(c.at("decomposition").at("p1_face")));
    cell.p2_face = LatticePolygon::from_canonical(points_from_json(c.at("decomposition").at("p2_face")));
    sub.cells.push_back(std::move(cell));
  }
  return sub;
}

inline Json to_json(const StraighteningResult& r) {
  Json strips = Json::array();
  for (const auto& s : r.strips) {
    Json cells = Json::array();
    for (auto c : s.cells) cells.push_back(c);
    strips.push_back({{"edge", point_json(s.edge.vector)},
                      {"ell", to_string(s.ell)},
                      {"area", to_string(s.area)},
                      {"cells", cells}});
  }
  Json j = {{"strips", strips}, {"warnings", r.warnings}};
  j["top_cell"] = r.top_cell ? Json(*r.top_cell) : Json(nullptr);
  j["top_cell_area"] = to_string(r.top_cell_area);
  return j;
}

inline Json to_json(const BoundsReport& b) {
  Json j = {{"bezout", b.bezout}, {"li_wang", b.li_wang}, {"mixed_area", to_string(b.mixed_area)},
            {"methods_agree", b.methods_agree}};
  j["finck"] = b.finck ? Json(*b.finck) : Json("n/a");
  return j;
}

inline BoundsReport bounds_report_from_json(const Json& j) {
  BoundsReport b;
  b.bezout = j.at("bezout").get<std::int64_t>();
  if (j.at("finck").is_number()) b.finck = j.at("finck").get<std::int64_t>();
  b.li_wang = j.at("li_wang").get<std::int64_t>();
  b.mixed_area = parse_rational(j.at("mixed_area").get<std::string>());
  b.methods_agree = j.at("methods_agree").get<bool>();
  return b;
}

}  // namespace minding

#endif  // MINDING_IO_HPP

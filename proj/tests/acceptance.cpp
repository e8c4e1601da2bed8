// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on failure.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "support.hpp"

using namespace minding;
using namespace minding::testing;

namespace {

class Check {
 public:
  void expect(bool ok, const std::string& what) {
    ++count_;
    if (!ok && failures_.size() < 5) failures_.push_back(what);
    if (!ok) ++failed_;
  }
  template <class A, class B>
  void equal(const A& got, const B& want, const std::string& what) {
    if (got == want) return expect(true, what);
    std::ostringstream s;
    s << what << ": got " << got << ", want " << want;
    expect(false, s.str());
  }
  bool ok() const { return failed_ == 0 && count_ > 0; }
  int count() const { return count_; }
  std::string summary() const {
    if (ok()) return std::to_string(count_) + " checks";
    std::string s = std::to_string(failed_) + "/" + std::to_string(count_) + " checks failed";
    for (const auto& f : failures_) s += "\n    " + f;
    return s;
  }

 private:
  int count_ = 0, failed_ = 0;
  std::vector<std::string> failures_;
};

std::multiset<std::string> strings(const Json& a) {
  std::multiset<std::string> out;
  for (const auto& v : a) out.insert(v.get<std::string>());
  return out;
}

Json run_json(const std::vector<std::string>& args, Check& c) {
  const auto r = cli::run_cli(args);
  c.equal(r.code, 0, args[0] + " exit code");
  if (r.code != 0) return Json::object();
  return Json::parse(r.out);
}

Rational mixed_cells(const MixedSubdivision& sub) {
  Rational t = 0;
  for (const auto& cell : sub.cells)
    if (cell.kind == CellKind::mixed) t += normalized_area(cell.polygon);
  return t;
}

Rational oracle_mixed_area(const LatticePolygon& p, const LatticePolygon& q) {
  return pick_area(minkowski_oracle(p, q)) - pick_area(p) - pick_area(q);
}

// 1: the worked example through the CLI, for many seeds.
void worked_example(Check& c) {
  const std::multiset<std::string> h_want{"1/2", "1/2", "-5/3", "-5/3", "-5/3"};
  const std::multiset<std::string> k_want{"11/2", "11/2", "5", "5", "5"};
  for (int seed = 0; seed < 24; ++seed) {
    const std::string s = std::to_string(seed), tag = "seed " + s;
    const Json p = run_json({"predict", "--pattern", kMindingF, kMindingTheta, "--seed", s}, c);
    if (p.empty()) continue;
    std::multiset<std::string> hs;
    for (const auto& cls : p["classes"])
      for (int i = 0; i < cls["mult"].get<int>(); ++i) hs.insert(cls["h"].get<std::string>());
    c.expect(hs == h_want, tag + ": h multiset");
    c.expect(strings(p["k_values"]) == k_want, tag + ": k multiset");
    c.equal(p["b"].get<int>(), 8, tag + ": b");
    c.equal(p["m"].get<int>(), 4, tag + ": m");
    c.equal(p["degree"].get<int>(), 58, tag + ": degree");

    const Json b = run_json({"bounds", "--pattern", kMindingF, kMindingTheta, "--seed", s}, c);
    c.equal(b.value("bezout", -1), 78, tag + ": bezout");
    c.equal(b.value("resultant_degree", -1), 58, tag + ": resultant degree");

    const Json k = run_json({"check", "--pattern", kMindingF, kMindingTheta, "--seed", s}, c);
    c.equal(k.value("actual", -1), 58, tag + ": check actual");
    c.equal(k.value("drop", -1), 0, tag + ": drop");

    const auto sys = minding_system(static_cast<std::uint64_t>(seed));
    c.equal(resultant_degree(sys.f, sys.theta), 58, tag + ": library resultant degree");
  }
}

// 2: five methods on the Minding pair, four methods on random pairs.
void cross_method(Check& c) {
  const auto results = all_mixed_areas(minding_p1(), minding_p2());
  c.equal(results.size(), 5u, "methods applicable to the Minding pair");
  for (const auto& r : results) c.equal(r.value, Rational(58), std::string("Minding pair ") + method_name(r.method));
  c.equal(oracle_mixed_area(minding_p1(), minding_p2()), Rational(58), "Minding pair oracle");

  std::mt19937_64 rng(20);
  for (int i = 0; i < 200; ++i) {
    const LatticePolygon p = random_polygon(rng), q = random_polygon(rng);
    const Rational ie = mixed_area_ie(p, q);
    const std::string tag = "pair " + std::to_string(i);
    c.equal(mixed_area_dilation(p, q), ie, tag + ": dilation");
    c.equal(mixed_area_recursion(p, q), ie, tag + ": recursion");
    c.equal(mixed_cells(build_subdivision(p, q)), ie, tag + ": subdivision");
    c.equal(oracle_mixed_area(p, q), ie, tag + ": oracle");
  }
}

// 3: strips of the Minding subdivision.
void straightening(Check& c) {
  const MixedSubdivision sub = build_subdivision(minding_p1(), minding_p2());
  c.expect(validate_subdivision(sub, minding_p1(), minding_p2()).ok(), "subdivision validates");
  const StraighteningResult r = straighten_strips(sub, minding_p1(), minding_p2());
  std::map<std::pair<std::int64_t, std::int64_t>, const StraightenedStrip*> by_edge;
  for (const auto& s : r.strips) by_edge[{s.edge.vector.x, s.edge.vector.y}] = &s;
  c.equal(r.strips.size(), 2u, "strip count");
  const auto* a = by_edge.count({-1, 2}) ? by_edge[{-1, 2}] : nullptr;
  const auto* b = by_edge.count({5, 3}) ? by_edge[{5, 3}] : nullptr;
  c.expect(a && b, "strips on edges (-1,2) and (5,3)");
  if (a) {
    c.equal(a->ell, Rational(11, 2), "ell on (-1,2)");
    c.equal(a->area, Rational(11), "area on (-1,2)");
  }
  if (b) {
    c.equal(b->ell, Rational(5), "ell on (5,3)");
    c.equal(b->area, Rational(15), "area on (5,3)");
  }
  c.equal(r.top_cell_area, Rational(32), "mb cell area");
  c.equal(mixed_cells(sub), Rational(58), "mixed-cell total");

  const Json j = run_json({"subdivide", "--pattern", kMindingF, kMindingTheta}, c);
  if (!j.empty()) c.equal(j["straightening"]["top_cell_area"].get<std::string>(), std::string("32"), "CLI top cell");
}

// 4: the second example, generic and with a = l = 0.
void second_example_degrees(Check& c) {
  std::mt19937_64 rng(40);
  for (int i = 0; i < 10; ++i) {
    std::mt19937_64 copy = rng;
    const System gen = second_example(rng, false);
    const System deg = second_example(copy, true);
    const std::string tag = "draw " + std::to_string(i);

    std::vector<ComparisonReport> g, d;
    for (Variable v : {Variable::y, Variable::x}) {
      g.push_back(check_prediction(gen.f, gen.theta, v));
      d.push_back(check_prediction(deg.f, deg.theta, v));
    }
    for (const auto& r : g) {
      c.equal(r.predicted, 26, tag + ": generic prediction");
      c.equal(r.actual, 26, tag + ": generic resultant");
    }
    c.equal(d[0].predicted, 25, tag + ": degenerate prediction in x");
    c.equal(d[0].actual, 25, tag + ": degenerate resultant in x");
    c.equal(d[1].predicted, 24, tag + ": degenerate prediction in y");
    c.equal(d[1].actual, 24, tag + ": degenerate resultant in y");

    const UnivariatePolynomial psi_x = resultant_polynomial(deg.f, deg.theta, Variable::y);
    const UnivariatePolynomial psi_y = resultant_polynomial(deg.f, deg.theta, Variable::x);
    c.expect(multiplicity_of(UnivariatePolynomial::monomial(1, 2), psi_x) >= 1, tag + ": x^2 divides psi_x");
    c.expect(multiplicity_of(UnivariatePolynomial::monomial(1, 1), psi_y) >= 1, tag + ": y divides psi_y");

    const FiniteSolutionSummary s = finite_solution_accounting(g, d);
    for (const auto& e : s.entries) {
      if (e.variable == Variable::x) c.equal(e.escaped, 1, tag + ": escapes in x");
      else c.equal(e.escaped, 2, tag + ": escapes in y");
    }
    c.equal(s.entries.size(), 2u, tag + ": accounting entries");
  }
}

// 5: Finck's rule on dense uniform-degree systems.
void finck(Check& c) {
  std::mt19937_64 rng(50);
  std::uniform_int_distribution<int> deg(1, 5), block(0, 6);
  for (int i = 0; i < 50; ++i) {
    const int m = deg(rng), n = deg(rng), mp = block(rng), np = block(rng);
    const std::uint64_t seed = rng() % 100000;
    const Polynomial f = parse_pattern(finck_pattern(m, mp), seed, 99);
    const Polynomial theta = parse_pattern(finck_pattern(n, np), seed + 1, 99);
    const std::int64_t want = m * np + n * mp;
    std::ostringstream tag;
    tag << "(m,n,m',n')=(" << m << "," << n << "," << mp << "," << np << ")";
    const FinckResult fr = finck_degree(f, theta);
    c.expect(fr.degree.has_value(), tag.str() + ": Finck applies");
    if (fr.degree) c.equal(*fr.degree, want, tag.str() + ": Finck degree");
    c.equal(minding_degree(f, theta).degree, want, tag.str() + ": Minding degree");
    c.equal(resultant_degree(f, theta), want, tag.str() + ": resultant degree");
  }
}

// 6: a shared edge face sends one root to infinity.
void root_at_infinity(Check& c) {
  std::mt19937_64 rng(60);
  for (int i = 0; i < 20; ++i) {
    const std::int64_t a = nonzero(rng), b = nonzero(rng), d = nonzero(rng);
    std::int64_t cc = nonzero(rng);
    while (cc == a) cc = nonzero(rng);  // a = c leaves f - theta constant: no solutions at all
    const System s = infinity_system(a, b, cc, d, false);
    const std::string tag = "draw " + std::to_string(i);
    const LatticePolygon p1 = convex_hull(s.f.support()), p2 = convex_hull(s.theta.support());
    c.equal(mixed_area_ie(p1, p2), Rational(13), tag + ": mixed area (IE)");
    c.equal(oracle_mixed_area(p1, p2), Rational(13), tag + ": mixed area (oracle)");
    const ComparisonReport r = check_prediction(s.f, s.theta);
    c.equal(r.predicted, 13, tag + ": prediction");
    c.equal(r.actual, 12, tag + ": resultant degree");
    c.equal(r.drop, 1, tag + ": drop");
    c.expect(!r.warnings.empty(), tag + ": genericity warning");
  }
}

// 7: oracles and identities.
void oracle_suite(Check& c) {
  std::mt19937_64 rng(70);
  int swaps = 0;
  while (swaps < 100) {
    const Polynomial f = random_polynomial(rng, 6, 4, swaps % 2 == 0), theta = random_polynomial(rng, 6, 4, swaps % 3 == 0);
    if (!f.degree_in(Variable::y).value_or(0) || !theta.degree_in(Variable::y).value_or(0)) continue;
    try {
      c.expect(swap_identity_check(f, theta), "swap identity " + f.to_string() + " / " + theta.to_string());
      ++swaps;
    } catch (const CommonFactorError&) {
    }
  }

  int laplace = 0;
  for (int i = 0; i < 600; ++i) {
    const Polynomial f = random_polynomial(rng, 6, 3, i % 3 != 0), theta = random_polynomial(rng, 6, 3, i % 2 == 0);
    const std::size_t m = f.degree_in(Variable::y).value_or(0), n = theta.degree_in(Variable::y).value_or(0);
    if (m + n == 0 || m + n > 4) continue;
    const UnivariatePolynomial symbolic = laplace_determinant(sylvester_oracle(f, theta));
    ++laplace;
    if (symbolic.is_zero()) {
      bool threw = false;
      try {
        resultant_polynomial(f, theta);
      } catch (const CommonFactorError&) {
        threw = true;
      }
      c.expect(threw, "vanishing determinant reported as a common factor");
      continue;
    }
    c.expect(resultant_polynomial(f, theta) == symbolic, "interpolation vs Laplace " + f.to_string() + " / " + theta.to_string());
  }
  c.expect(laplace >= 100, "at least 100 small systems against Laplace");

  int bounded = 0;
  while (bounded < 100) {
    const Polynomial f = random_polynomial(rng, 6, 4, true), theta = random_polynomial(rng, 6, 4, true);
    if (!theta.degree_in(Variable::y).value_or(0)) continue;
    try {
      const ComparisonReport r = check_prediction(f, theta);
      c.expect(r.actual <= bezout_bound(f, theta), "resultant degree <= Bezout");
      c.expect(r.drop >= 0, "drop >= 0");
      ++bounded;
    } catch (const CommonFactorError&) {
    }
  }

  int li_wang = 0, without_constant = 0;
  for (int i = 0; li_wang < 100; ++i) {
    const bool constant = i % 2 == 0;
    const Polynomial f = random_polynomial(rng, 5, 3, constant), theta = random_polynomial(rng, 5, 3, constant);
    const auto m = f.degree_in(Variable::y).value_or(0), n = theta.degree_in(Variable::y).value_or(0);
    if (!m || !n) continue;
    const UnivariatePolynomial g =
        univariate_gcd(f.coefficient_slice(Variable::y, m), theta.coefficient_slice(Variable::y, n));
    if (!g.is_constant()) continue;
    try {
      const std::int64_t actual = resultant_degree(f, theta);
      c.expect(li_wang_bound(f, theta) >= actual, "Li-Wang >= resultant degree " + f.to_string() + " / " + theta.to_string());
      c.expect(actual <= bezout_bound(f, theta), "resultant degree <= Bezout");
      ++li_wang;
      if (!constant) ++without_constant;
    } catch (const CommonFactorError&) {
    }
  }
  c.expect(without_constant >= 30, "at least 30 Li-Wang systems without constant terms");
}

// 8: properties of the mixed area and the degree formula.
void properties(Check& c) {
  std::mt19937_64 rng(80);
  for (int i = 0; i < 200; ++i) {
    const LatticePolygon p = random_polygon(rng, 12, 10, false), q = random_polygon(rng, 12, 10, false);
    const Rational m = mixed_area_ie(p, q);
    c.equal(mixed_area_ie(p, p), 2 * pick_area(p), "M(P,P) = 2 Area(P)");
    c.equal(mixed_area_recursion(p, p), 2 * normalized_area(p), "M(P,P) by recursion");
    for (std::int64_t lambda : {1, 2, 3}) {
      c.equal(mixed_area_ie(dilate(p, lambda), q), lambda * m, "M(lP,Q) = l M(P,Q)");
      c.equal(mixed_area_dilation(dilate(p, lambda), q), lambda * m, "M(lP,Q) by dilation");
    }
    c.equal(mixed_area_ie(q, p), m, "symmetry");
    c.equal(mixed_area_recursion(q, p), mixed_area_recursion(p, q), "symmetry by recursion");
    c.expect(is_integer(m), "integrality");
  }

  int fractional = 0;
  for (int i = 0; i < 200;) {
    const Polynomial f = random_polynomial(rng, 7, 6, true), theta = random_polynomial(rng, 7, 6, true);
    const auto n = theta.degree_in(Variable::y).value_or(0);
    if (!n) continue;
    ++i;
    std::int64_t mult = 0;
    for (const auto& cls : right_edge_classes(convex_hull(theta.support()))) mult += cls.multiplicity;
    c.equal(mult, static_cast<std::int64_t>(n), "sum of Puiseux multiplicities = deg_y theta");

    const DegreeReport r = minding_degree(f, theta);
    Rational sum = r.m * r.b;
    bool has_fraction = false;
    for (const auto& k : r.k_values) {
      sum += k;
      has_fraction = has_fraction || !is_integer(k);
    }
    if (has_fraction) ++fractional;
    c.expect(is_integer(sum), "m b + sum k is an integer");
    c.equal(sum, Rational(r.degree), "reported degree matches m b + sum k");
  }
  c.expect(fractional >= 20, "at least 20 instances with fractional k-values");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria{
      {"worked example through the CLI", worked_example},
      {"mixed-area cross-method agreement", cross_method},
      {"strip straightening", straightening},
      {"second example degrees and accounting", second_example_degrees},
      {"Finck's rule", finck},
      {"root at infinity", root_at_infinity},
      {"oracle and identity suite", oracle_suite},
      {"property suite", properties},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check c;
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[i].second(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s criterion %zu (%s): %s, %.2fs\n", c.ok() ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                c.summary().c_str(), secs);
    if (!c.ok()) ++failed;
  }
  return failed == 0 ? 0 : 1;
}

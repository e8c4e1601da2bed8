#ifndef MINDING_PUISEUX_HPP
#define MINDING_PUISEUX_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lattice.hpp"
#include "numeric.hpp"
#include "polynomial.hpp"

namespace minding {

/**
 * The roots y(x) = c x^h + (lower powers) of theta attached to one ascending
 * right-hand edge (n, m) of its Newton polygon: h = -n/m, m roots.
 */
struct PuiseuxClass {
  Rational h;
  std::int64_t multiplicity = 0;
  LatticePoint edge;   ///< edge vector (n, m), m > 0
  LatticePoint start;  ///< lower endpoint of the edge
  /// Restriction of theta to the edge as a polynomial in the leading
  /// coefficient c; empty until filled by edge_polynomial().
  UnivariatePolynomial edge_polynomial;

  friend bool operator==(const PuiseuxClass&, const PuiseuxClass&) = default;
};

/// Where k-values take their maximum.
enum class KSource { support, polygon };

struct DegreeReport {
  Variable eliminated = Variable::y;
  std::int64_t m = 0;
  std::int64_t n = 0;
  std::int64_t b = 0;
  std::vector<PuiseuxClass> classes;
  std::vector<Rational> k_values;  ///< one entry per root, n in total
  std::int64_t degree = 0;
  std::vector<std::string> warnings;

  friend bool operator==(const DegreeReport&, const DegreeReport&) = default;
};

/**
 * One class per counterclockwise edge of P2 with positive y-increment, from
 * the bottom of the polygon upwards. The multiplicities add up to the height
 * of P2.
 */
inline std::vector<PuiseuxClass> right_edge_classes(const LatticePolygon& p2) {
  if (p2.dimension() < 1) throw PreconditionError("Newton polygon of theta is a point: no roots to expand");
  if (p2.min_y() > 0)
    throw PreconditionError("Newton polygon of theta does not touch y = 0 (theta is divisible by the eliminated variable)");
  if (p2.min_x() < 0) throw PreconditionError("Newton polygon of theta is not in the first quadrant");

  const auto all = edges(p2);
  // Start from the edge leaving the lowest, rightmost vertex.
  std::size_t first = 0;
  for (std::size_t i = 0; i < all.size(); ++i) {
    const LatticePoint s = all[i].start, best = all[first].start;
    if (s.y < best.y || (s.y == best.y && s.x > best.x)) first = i;
  }
  std::vector<PuiseuxClass> out;
  for (std::size_t i = 0; i < all.size(); ++i) {
    const EdgeDatum& e = all[(first + i) % all.size()];
    if (e.vector.y <= 0) break;
    PuiseuxClass c;
    c.h = Rational(-e.vector.x, e.vector.y);
    c.multiplicity = e.vector.y;
    c.edge = e.vector;
    c.start = e.start;
    out.push_back(std::move(c));
  }
  return out;
}

/// Sum of coeff * c^i over the support points (j, i) of theta on the class's edge.
inline UnivariatePolynomial edge_polynomial(const Polynomial& theta, const PuiseuxClass& cls) {
  std::vector<BigInt> v;
  for (const auto& [e, coeff] : theta.terms()) {
    const LatticePoint q{e.x, e.y};
    const LatticePoint rel = q - cls.start;
    if (cross(cls.edge, rel) != 0) continue;
    if (rel.y < 0 || rel.y > cls.edge.y) continue;
    if (v.size() <= e.y) v.resize(e.y + 1);
    v[e.y] = coeff;
  }
  return UnivariatePolynomial(std::move(v));
}

/// max over (k, l) in source of k + l*h.
inline Rational k_value(std::span<const LatticePoint> source, const Rational& h) {
  if (source.empty()) throw std::invalid_argument("k_value over an empty point set");
  std::optional<Rational> best;
  for (auto p : source) {
    Rational v = Rational(p.x) + Rational(p.y) * h;
    if (!best || v > *best) best = std::move(v);
  }
  return *best;
}

namespace detail {

// Leading part of f along a branch y = c x^h: sum of A_{k,l} c^l over the
// support points attaining k + l*h = top.
inline UnivariatePolynomial branch_leading_polynomial(const Polynomial& f, const Rational& h, const Rational& top) {
  std::vector<BigInt> v;
  for (const auto& [e, coeff] : f.terms()) {
    if (Rational(e.x) + Rational(e.y) * h != top) continue;
    if (v.size() <= e.y) v.resize(e.y + 1);
    v[e.y] = coeff;
  }
  return UnivariatePolynomial(std::move(v));
}

}  // namespace detail

/**
 * Degree of the final equation psi obtained by eliminating `eliminate` from
 * f = 0 and theta = 0, as m*b + k_1 + ... + k_n.
 *
 * In the frame where the eliminated variable is called y: m and n are the
 * y-degrees of f and theta, b is the degree of the leading coefficient B_0 of
 * theta, and every root class of theta with leading exponent h contributes
 * its multiplicity times max(k + l*h) over the chosen point set of f.
 *
 * Both Newton polygons must contain the origin and theta must involve y.
 * When the Newton polygon of f lacks the point (0, m) the formula is still
 * evaluated but a warning notes that it need not equal the mixed area. A
 * second kind of warning flags classes on which the leading parts of f and
 * theta share a nonzero root, where the degree of psi may drop.
 */
inline DegreeReport minding_degree(const Polynomial& f_in, const Polynomial& theta_in, Variable eliminate = Variable::y,
                                   KSource k_source = KSource::support) {
  if (f_in.is_zero() || theta_in.is_zero()) throw PreconditionError("zero polynomial");
  const Polynomial f = eliminate == Variable::y ? f_in : f_in.swapped();
  const Polynomial theta = eliminate == Variable::y ? theta_in : theta_in.swapped();
  const char elim = variable_name(eliminate);

  DegreeReport r;
  r.eliminated = eliminate;
  r.m = *f.degree_in(Variable::y);
  r.n = *theta.degree_in(Variable::y);
  if (r.n == 0) throw PreconditionError(std::string("theta does not involve ") + elim + ": nothing to eliminate");

  const auto f_support = f.support();
  const auto theta_support = theta.support();
  const LatticePolygon p1 = convex_hull(f_support);
  const LatticePolygon p2 = convex_hull(theta_support);
  if (!p1.contains({0, 0})) throw PreconditionError("Newton polygon of f must contain the origin (nonzero constant term)");
  if (!p2.contains({0, 0})) throw PreconditionError("Newton polygon of theta must contain the origin (nonzero constant term)");
  if (!p1.contains({0, r.m}))
    r.warnings.push_back("Newton polygon of f lacks its top-left corner (0," + std::to_string(r.m) +
                         "): the degree formula need not equal the mixed area");

  const UnivariatePolynomial b0 = theta.coefficient_slice(Variable::y, static_cast<std::uint32_t>(r.n));
  r.b = static_cast<std::int64_t>(*b0.degree());

  const std::vector<LatticePoint> source = k_source == KSource::support ? f_support : lattice_points(p1);
  r.classes = right_edge_classes(p2);

  Rational total = Rational(r.m * r.b);
  std::int64_t roots = 0;
  for (auto& cls : r.classes) {
    cls.edge_polynomial = edge_polynomial(theta, cls);
    const Rational k = k_value(source, cls.h);
    for (std::int64_t j = 0; j < cls.multiplicity; ++j) r.k_values.push_back(k);
    total += k * cls.multiplicity;
    roots += cls.multiplicity;

    const Rational top = k_value(f_support, cls.h);
    const UnivariatePolynomial lead_f = detail::branch_leading_polynomial(f, cls.h, top).without_zero_roots();
    const UnivariatePolynomial lead_theta = cls.edge_polynomial.without_zero_roots();
    if (!lead_f.is_constant() && !lead_theta.is_constant() && !univariate_gcd(lead_f, lead_theta).is_constant()) {
      r.warnings.push_back("class h=" + to_string(cls.h) + ": leading parts of f and theta share a root (f: " +
                           lead_f.to_string('c') + ", theta: " + lead_theta.to_string('c') +
                           "); coefficients are not generic and the degree may drop");
    }
  }
  if (roots != r.n)
    throw InvariantError("root classes account for " + std::to_string(roots) + " roots, expected " + std::to_string(r.n));
  if (!is_integer(total)) throw InvariantError("degree formula produced a non-integer " + to_string(total));
  r.degree = to_int64(total);
  return r;
}

/// m*b + sum of multiplicity * max over P1 of (k + l*h): the mixed area of
/// a Minding-form P1 and a P2 containing the origin, via root classes.
inline Rational mixed_area_minding(const LatticePolygon& p1, const LatticePolygon& p2) {
  if (auto shape = is_minding_form(p1); !shape) throw PreconditionError("P1: " + shape.reason);
  if (p2.min_x() < 0 || p2.min_y() < 0) throw PreconditionError("P2: polygon is not in the first quadrant");
  if (!p2.contains({0, 0})) throw PreconditionError("P2: polygon does not contain the origin");
  const std::int64_t m = p1.max_y();
  const std::int64_t n = p2.max_y();
  if (p2.dimension() == 0) return 0;
  std::int64_t b = 0;
  for (auto v : p2.vertices())
    if (v.y == n) b = std::max(b, v.x);
  Rational total = Rational(m * b);
  const auto& verts = p1.vertices();
  for (const auto& cls : right_edge_classes(p2)) total += k_value(verts, cls.h) * cls.multiplicity;
  return total;
}

}  // namespace minding

#endif  // MINDING_PUISEUX_HPP

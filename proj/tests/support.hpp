#ifndef MINDING_TESTS_SUPPORT_HPP
#define MINDING_TESTS_SUPPORT_HPP

// Shared fixtures and brute-force oracles for the test suites. The oracles
// deliberately avoid the library's own algorithms: hulls of all pairwise
// sums, Pick's theorem on enumerated lattice points, and Laplace expansion.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "minding/minding.hpp"

namespace minding::testing {

// ---- worked systems --------------------------------------------------------

inline const std::string kMindingF = "(x^2)*y^4+(x^2)*y^3+(x^4)*y^2+(x^5)*y+(x^5)";
inline const std::string kMindingTheta = "(x^8)*y^5+(x^6)*y^4+(x^9)*y^3+(x^4)*y^2+(x^3)*y+(x^4)";

struct System {
  Polynomial f, theta;
};

inline System minding_system(std::uint64_t seed, std::uint64_t bound = 99) {
  return {parse_pattern(kMindingF, seed, bound), parse_pattern(kMindingTheta, seed + 1, bound)};
}

inline LatticePolygon minding_p1() { return convex_hull({{0, 0}, {5, 0}, {5, 1}, {2, 4}, {0, 4}}); }
inline LatticePolygon minding_p2() { return convex_hull({{0, 0}, {4, 0}, {9, 3}, {8, 5}, {0, 5}}); }

inline std::int64_t nonzero(std::mt19937_64& rng, std::int64_t bound = 99) {
  std::uniform_int_distribution<std::int64_t> d(1, bound);
  std::bernoulli_distribution sign(0.5);
  return sign(rng) ? d(rng) : -d(rng);
}

/// Second example: f = (a+bx^2)y^4+(c+ex)y^2+gx^3y+h+kx^2+lx^3,
/// theta = beta x^5 y^2+(gamma+delta x^2)y+lambda+mu x^4.
inline System second_example(std::mt19937_64& rng, bool degenerate) {
  auto c = [&] { return nonzero(rng); };
  auto t = [](std::int64_t coeff, std::uint32_t ex, std::uint32_t ey) { return Polynomial::monomial(coeff, ex, ey); };
  const std::int64_t a = degenerate ? 0 : c(), b = c(), cc = c(), e = c(), g = c(), h = c(), k = c();
  const std::int64_t l = degenerate ? 0 : c();
  const std::int64_t beta = c(), gamma = c(), delta = c(), lambda = c(), mu = c();
  Polynomial f = t(a, 0, 4) + t(b, 2, 4) + t(cc, 0, 2) + t(e, 1, 2) + t(g, 3, 1) + t(h, 0, 0) + t(k, 2, 0) + t(l, 3, 0);
  Polynomial theta = t(beta, 5, 2) + t(gamma, 0, 1) + t(delta, 2, 1) + t(lambda, 0, 0) + t(mu, 4, 0);
  return {f, theta};
}

/// f = a y^4 + x^2 y^3 + x^3 y^2 + b against theta = c y^4 + x^2 y^3 + x^e y^2 + d.
/// With e = 3 both share the face polynomial of the (1,1) edge and one root
/// goes to infinity; with e = 2 (generic_face) nothing degenerates.
inline System infinity_system(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d, bool generic_face) {
  Polynomial f = Polynomial::monomial(a, 0, 4) + Polynomial::monomial(1, 2, 3) + Polynomial::monomial(1, 3, 2) +
                 Polynomial::constant(b);
  Polynomial t = Polynomial::monomial(c, 0, 4) + Polynomial::monomial(1, 2, 3) +
                 Polynomial::monomial(1, generic_face ? 2 : 3, 2) + Polynomial::constant(d);
  return {f, t};
}

// ---- random generators -----------------------------------------------------

inline LatticePolygon random_polygon(std::mt19937_64& rng, int max_points = 12, int range = 10, bool two_dim = true) {
  std::uniform_int_distribution<int> count(1, max_points);
  std::uniform_int_distribution<std::int64_t> coord(0, range);
  for (;;) {
    std::vector<LatticePoint> pts(static_cast<std::size_t>(count(rng)));
    for (auto& p : pts) p = {coord(rng), coord(rng)};
    LatticePolygon hull = convex_hull(pts);
    if (!two_dim || hull.dimension() == 2) return hull;
  }
}

/// Sparse random polynomial with up to `terms` monomials of degree <= max_deg
/// in each variable.
inline Polynomial random_polynomial(std::mt19937_64& rng, int terms, std::uint32_t max_deg, bool constant_term,
                                    std::int64_t bound = 9) {
  std::uniform_int_distribution<std::uint32_t> exp(0, max_deg);
  std::uniform_int_distribution<int> count(1, terms);
  Polynomial p;
  const int n = count(rng);
  for (int i = 0; i < n; ++i) {
    std::uint32_t ex = exp(rng), ey = exp(rng);
    if (!constant_term && ex == 0 && ey == 0) ex = 1;
    p = p + Polynomial::monomial(nonzero(rng, bound), ex, ey);
  }
  if (constant_term)
    while (p.coefficient({0, 0}) == 0) p = p + Polynomial::constant(nonzero(rng, bound));
  if (p.is_zero()) p = Polynomial::monomial(1, 1, 1);
  return p;
}

/// Dense Finck-uniform pattern: every y-coefficient a full block of degree deg.
inline std::string finck_pattern(int y_degree, int deg) {
  std::string s;
  for (int i = y_degree; i >= 0; --i) {
    if (!s.empty()) s += "+";
    s += "(x^" + std::to_string(deg) + ")";
    if (i > 0) s += "*y^" + std::to_string(i);
  }
  return s;
}

// ---- oracles ---------------------------------------------------------------

inline LatticePolygon minkowski_oracle(const LatticePolygon& p, const LatticePolygon& q) {
  std::vector<LatticePoint> sums;
  for (auto a : p.vertices())
    for (auto b : q.vertices()) sums.push_back(a + b);
  return convex_hull(sums);
}

/// Pick's theorem on brute-force lattice point counts, doubled to stay integral.
inline Rational pick_area(const LatticePolygon& p) {
  if (p.dimension() < 2) return 0;
  std::int64_t interior = 0, boundary = 0;
  const auto& v = p.vertices();
  for (std::int64_t x = p.min_x(); x <= p.max_x(); ++x) {
    for (std::int64_t y = p.min_y(); y <= p.max_y(); ++y) {
      bool inside = true, on_edge = false;
      for (std::size_t i = 0; i < v.size(); ++i) {
        const LatticePoint a = v[i], b = v[(i + 1) % v.size()];
        const std::int64_t c = (b.x - a.x) * (y - a.y) - (b.y - a.y) * (x - a.x);
        if (c < 0) inside = false;
        if (c == 0) on_edge = true;
      }
      if (!inside) continue;
      if (on_edge) ++boundary;
      else ++interior;
    }
  }
  return Rational(2 * interior + boundary - 2, 2);
}

/// Sylvester matrix assembled directly from the y-slices of f and theta.
inline std::vector<std::vector<UnivariatePolynomial>> sylvester_oracle(const Polynomial& f, const Polynomial& theta) {
  const std::size_t m = *f.degree_in(Variable::y), n = *theta.degree_in(Variable::y);
  const std::size_t size = m + n;
  std::vector<std::vector<UnivariatePolynomial>> a(size, std::vector<UnivariatePolynomial>(size));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t i = 0; i <= m; ++i)
      a[r][r + i] = f.coefficient_slice(Variable::y, static_cast<std::uint32_t>(m - i));
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t j = 0; j <= n; ++j)
      a[n + r][r + j] = theta.coefficient_slice(Variable::y, static_cast<std::uint32_t>(n - j));
  return a;
}

/// Laplace expansion along the first row, over polynomial entries.
inline UnivariatePolynomial laplace_determinant(const std::vector<std::vector<UnivariatePolynomial>>& a) {
  const std::size_t n = a.size();
  if (n == 0) return UnivariatePolynomial::constant(1);
  if (n == 1) return a[0][0];
  UnivariatePolynomial total;
  for (std::size_t col = 0; col < n; ++col) {
    if (a[0][col].is_zero()) continue;
    std::vector<std::vector<UnivariatePolynomial>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<UnivariatePolynomial> row;
      for (std::size_t c = 0; c < n; ++c)
        if (c != col) row.push_back(a[r][c]);
      minor.push_back(std::move(row));
    }
    const UnivariatePolynomial term = a[0][col] * laplace_determinant(minor);
    total = col % 2 == 0 ? total + term : total - term;
  }
  return total;
}

}  // namespace minding::testing

#endif  // MINDING_TESTS_SUPPORT_HPP

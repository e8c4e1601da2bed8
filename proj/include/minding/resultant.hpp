#ifndef MINDING_RESULTANT_HPP
#define MINDING_RESULTANT_HPP

#include <cstdint>
#include <algorithm>
#include <future>
#include <optional>
#include <thread>
#include <span>
#include <string>
#include <vector>

#include "numeric.hpp"
#include "polynomial.hpp"
#include "puiseux.hpp"

namespace minding {

/// Raised when the resultant vanishes identically: f and theta share a
/// nonconstant common factor.
class CommonFactorError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/**
 * Sylvester matrix of f and theta with respect to the eliminated variable:
 * n shifted rows of (A_0 ... A_m) followed by m shifted rows of
 * (B_0 ... B_n), where A_i, B_j are the coefficient polynomials of the
 * descending powers.
 */
class SylvesterMatrix {
 public:
  SylvesterMatrix(const Polynomial& f, const Polynomial& theta, Variable eliminate) {
    if (f.is_zero() || theta.is_zero()) throw PreconditionError("zero polynomial");
    m_ = *f.degree_in(eliminate);
    n_ = *theta.degree_in(eliminate);
    if (m_ == 0 && n_ == 0)
      throw PreconditionError(std::string("neither polynomial involves ") + variable_name(eliminate));
    size_ = m_ + n_;
    entries_.assign(size_ * size_, UnivariatePolynomial{});
    for (std::size_t row = 0; row < n_; ++row)
      for (std::size_t i = 0; i <= m_; ++i)
        entries_[row * size_ + row + i] = f.coefficient_slice(eliminate, static_cast<std::uint32_t>(m_ - i));
    for (std::size_t row = 0; row < m_; ++row)
      for (std::size_t j = 0; j <= n_; ++j)
        entries_[(n_ + row) * size_ + row + j] = theta.coefficient_slice(eliminate, static_cast<std::uint32_t>(n_ - j));
  }

  std::size_t size() const { return size_; }
  std::size_t m() const { return m_; }
  std::size_t n() const { return n_; }
  const UnivariatePolynomial& at(std::size_t row, std::size_t col) const { return entries_[row * size_ + col]; }

  std::vector<BigInt> evaluate(const BigInt& point) const {
    std::vector<BigInt> out(entries_.size());
    for (std::size_t i = 0; i < entries_.size(); ++i) out[i] = entries_[i].evaluate(point);
    return out;
  }

 private:
  std::size_t m_ = 0, n_ = 0, size_ = 0;
  std::vector<UnivariatePolynomial> entries_;
};

/// Determinant of a square integer matrix (row-major) by Bareiss's
/// fraction-free elimination.
inline BigInt bareiss_determinant(std::vector<BigInt> a, std::size_t n) {
  if (n == 0) return 1;
  BigInt sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k * n + k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && a[swap_row * n + k] == 0) ++swap_row;
      if (swap_row == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(a[k * n + c], a[swap_row * n + c]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        a[i * n + j] = (a[i * n + j] * a[k * n + k] - a[i * n + k] * a[k * n + j]) / prev;
    }
    prev = a[k * n + k];
  }
  return sign * a[(n - 1) * n + (n - 1)];
}

/**
 * The unique polynomial of degree < xs.size() through (xs[i], ys[i]),
 * by Newton divided differences over the rationals. Throws if the result does
 * not have integer coefficients.
 */
inline UnivariatePolynomial interpolate(std::span<const BigInt> xs, std::span<const BigInt> ys) {
  const std::size_t n = xs.size();
  if (n != ys.size()) throw std::invalid_argument("interpolate: size mismatch");
  std::vector<Rational> dd(ys.begin(), ys.end());
  for (std::size_t level = 1; level < n; ++level)
    for (std::size_t i = n - 1; i >= level; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / Rational(xs[i] - xs[i - level]);
      if (i == level) break;
    }
  // Horner on the Newton form.
  std::vector<Rational> coeffs(1, n ? dd[n - 1] : Rational(0));
  for (std::size_t k = n - 1; k-- > 0;) {
    std::vector<Rational> next(coeffs.size() + 1);
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      next[i + 1] += coeffs[i];
      next[i] -= coeffs[i] * Rational(xs[k]);
    }
    next[0] += dd[k];
    coeffs = std::move(next);
  }
  std::vector<BigInt> out;
  out.reserve(coeffs.size());
  for (const auto& c : coeffs) {
    if (!is_integer(c)) throw InvariantError("interpolated resultant has a non-integer coefficient " + to_string(c));
    out.push_back(boost::multiprecision::numerator(c));
  }
  return UnivariatePolynomial(std::move(out));
}

/// Evaluation points 0, 1, -1, 2, -2, ...
inline std::vector<BigInt> evaluation_points(std::size_t count) {
  std::vector<BigInt> xs;
  xs.reserve(count);
  for (std::int64_t k = 0; xs.size() < count; ++k) {
    if (k == 0) {
      xs.emplace_back(0);
      continue;
    }
    xs.emplace_back(k);
    if (xs.size() < count) xs.emplace_back(-k);
  }
  return xs;
}

/**
 * det of the Sylvester matrix of (f, theta) with respect to `eliminate`, a
 * polynomial in the remaining variable. Every entry is evaluated at D + 1
 * integers, D = deg_x f * deg_y theta + deg_x theta * deg_y f (in the frame
 * where y is eliminated), the integer determinants are taken exactly, and
 * the results are interpolated. The evaluations run concurrently.
 */
inline UnivariatePolynomial resultant_polynomial(const Polynomial& f, const Polynomial& theta, Variable eliminate = Variable::y) {
  const SylvesterMatrix s(f, theta, eliminate);
  const Variable keep = other(eliminate);
  const std::size_t bound = std::size_t{*f.degree_in(keep)} * s.n() + std::size_t{*theta.degree_in(keep)} * s.m();
  const auto xs = evaluation_points(bound + 1);

  std::vector<BigInt> ys(xs.size());
  const std::size_t workers =
      std::max<std::size_t>(1, std::min<std::size_t>(xs.size(), std::thread::hardware_concurrency()));
  std::vector<std::future<void>> jobs;
  for (std::size_t w = 0; w < workers; ++w)
    jobs.push_back(std::async(std::launch::async, [&, w] {
      for (std::size_t i = w; i < xs.size(); i += workers) ys[i] = bareiss_determinant(s.evaluate(xs[i]), s.size());
    }));
  for (auto& j : jobs) j.get();

  UnivariatePolynomial psi = interpolate(xs, ys);
  if (psi.is_zero())
    throw CommonFactorError("resultant vanishes identically: f and theta share a nonconstant common factor");
  return psi;
}

inline std::int64_t resultant_degree(const Polynomial& f, const Polynomial& theta, Variable eliminate = Variable::y) {
  return static_cast<std::int64_t>(*resultant_polynomial(f, theta, eliminate).degree());
}

/// Res(f, theta) == (-1)^(mn) Res(theta, f), both determinants computed
/// separately.
inline bool swap_identity_check(const Polynomial& f, const Polynomial& theta, Variable eliminate = Variable::y) {
  const UnivariatePolynomial forward = resultant_polynomial(f, theta, eliminate);
  const UnivariatePolynomial backward = resultant_polynomial(theta, f, eliminate);
  const std::uint64_t mn = std::uint64_t{*f.degree_in(eliminate)} * *theta.degree_in(eliminate);
  return forward == (mn % 2 == 0 ? backward : -backward);
}

struct ComparisonReport {
  Variable eliminated = Variable::y;
  std::int64_t predicted = 0;
  std::int64_t actual = 0;
  std::int64_t drop = 0;
  UnivariatePolynomial gcd_x;  ///< gcd of the leading y-coefficients A_0, B_0 (polynomials in x)
  UnivariatePolynomial gcd_y;  ///< gcd of the leading x-coefficients alpha_0, beta_0 (polynomials in y)
  /// Multiplicity in psi of the common factor belonging to the eliminated
  /// variable (gcd_x when y is eliminated); 0 when that factor is constant.
  int psi_divisibility = 0;
  std::vector<std::string> warnings;

  const UnivariatePolynomial& common_factor() const { return eliminated == Variable::y ? gcd_x : gcd_y; }
  friend bool operator==(const ComparisonReport&, const ComparisonReport&) = default;
};

/// Predicted degree against the exact resultant degree, plus the
/// common-factor diagnostics of both leading coefficient pairs.
inline ComparisonReport check_prediction(const Polynomial& f, const Polynomial& theta, Variable eliminate = Variable::y,
                                         KSource k_source = KSource::support) {
  const DegreeReport prediction = minding_degree(f, theta, eliminate, k_source);
  const UnivariatePolynomial psi = resultant_polynomial(f, theta, eliminate);

  ComparisonReport r;
  r.eliminated = eliminate;
  r.predicted = prediction.degree;
  r.actual = static_cast<std::int64_t>(*psi.degree());
  r.drop = r.predicted - r.actual;
  r.warnings = prediction.warnings;
  auto leading_gcd = [&](Variable var) {
    return univariate_gcd(f.coefficient_slice(var, *f.degree_in(var)), theta.coefficient_slice(var, *theta.degree_in(var)));
  };
  r.gcd_x = leading_gcd(Variable::y);
  r.gcd_y = leading_gcd(Variable::x);
  const UnivariatePolynomial& g = r.common_factor();
  r.psi_divisibility = g.is_constant() ? 0 : multiplicity_of(g, psi);
  return r;
}

/// Bookkeeping of one final equation between a generic system and a
/// degeneration of it.
struct AccountingEntry {
  Variable variable = Variable::x;  ///< variable of the final equation
  std::int64_t generic_degree = 0;
  std::int64_t degenerate_degree = 0;
  std::int64_t escaped = 0;          ///< roots sent to infinity
  UnivariatePolynomial absorbed_factor;
  int absorbed_multiplicity = 0;
  std::int64_t absorbed_roots = 0;   ///< roots of psi coming from the common factor
  std::int64_t finite = 0;           ///< degenerate degree minus absorbed roots
  friend bool operator==(const AccountingEntry&, const AccountingEntry&) = default;
};

inline AccountingEntry finite_solution_accounting(const ComparisonReport& generic, const ComparisonReport& degenerate) {
  if (generic.eliminated != degenerate.eliminated)
    throw std::invalid_argument("reports eliminate different variables");
  AccountingEntry e;
  e.variable = other(generic.eliminated);
  e.generic_degree = generic.actual;
  e.degenerate_degree = degenerate.actual;
  e.escaped = generic.actual - degenerate.actual;
  e.absorbed_factor = degenerate.common_factor();
  e.absorbed_multiplicity = degenerate.psi_divisibility;
  e.absorbed_roots = e.absorbed_factor.is_constant()
                         ? 0
                         : static_cast<std::int64_t>(*e.absorbed_factor.degree()) * e.absorbed_multiplicity;
  e.finite = e.degenerate_degree - e.absorbed_roots;
  return e;
}

struct FiniteSolutionSummary {
  std::vector<AccountingEntry> entries;
  std::int64_t total_escaped = 0;
  /// Finite solutions of the degenerate system, when all final equations agree.
  std::optional<std::int64_t> finite;
};

/// Accounting over several final equations, matched by eliminated variable.
inline FiniteSolutionSummary finite_solution_accounting(std::span<const ComparisonReport> generic,
                                                        std::span<const ComparisonReport> degenerate) {
  if (generic.size() != degenerate.size()) throw std::invalid_argument("mismatched report lists");
  FiniteSolutionSummary s;
  for (const auto& g : generic) {
    const ComparisonReport* match = nullptr;
    for (const auto& d : degenerate)
      if (d.eliminated == g.eliminated) match = &d;
    if (!match) throw std::invalid_argument("no degenerate report eliminating the same variable");
    s.entries.push_back(finite_solution_accounting(g, *match));
    s.total_escaped += s.entries.back().escaped;
  }
  if (!s.entries.empty()) {
    s.finite = s.entries.front().finite;
    for (const auto& e : s.entries)
      if (e.finite != *s.finite) s.finite.reset();
  }
  return s;
}

}  // namespace minding

#endif  // MINDING_RESULTANT_HPP

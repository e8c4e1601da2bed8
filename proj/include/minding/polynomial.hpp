#ifndef MINDING_POLYNOMIAL_HPP
#define MINDING_POLYNOMIAL_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "numeric.hpp"
#include "point.hpp"

namespace minding {

enum class Variable { x, y };

inline char variable_name(Variable v) { return v == Variable::x ? 'x' : 'y'; }
inline Variable other(Variable v) { return v == Variable::x ? Variable::y : Variable::x; }

// ---------------------------------------------------------------------------
// UnivariatePolynomial
// ---------------------------------------------------------------------------

/**
 * Dense univariate polynomial with integer coefficients, stored from the
 * constant term upwards. The top stored coefficient is always nonzero; the
 * zero polynomial has no coefficients.
 */
class UnivariatePolynomial {
 public:
  UnivariatePolynomial() = default;
  explicit UnivariatePolynomial(std::vector<BigInt> coefficients) : coeffs_(std::move(coefficients)) {
    trim();
  }

  static UnivariatePolynomial constant(BigInt c) { return UnivariatePolynomial({std::move(c)}); }
  static UnivariatePolynomial monomial(BigInt c, std::size_t power) {
    std::vector<BigInt> v(power + 1);
    v[power] = std::move(c);
    return UnivariatePolynomial(std::move(v));
  }

  bool is_zero() const { return coeffs_.empty(); }
  std::optional<std::size_t> degree() const {
    if (coeffs_.empty()) return std::nullopt;
    return coeffs_.size() - 1;
  }
  bool is_constant() const { return coeffs_.size() <= 1; }

  const std::vector<BigInt>& coefficients() const { return coeffs_; }
  BigInt coefficient(std::size_t power) const { return power < coeffs_.size() ? coeffs_[power] : BigInt(0); }
  const BigInt& leading() const {
    if (coeffs_.empty()) throw std::domain_error("leading coefficient of the zero polynomial");
    return coeffs_.back();
  }
  /// Smallest power with a nonzero coefficient.
  std::size_t low_degree() const {
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      if (coeffs_[i] != 0) return i;
    return 0;
  }

  BigInt evaluate(const BigInt& at) const {
    BigInt acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
    return acc;
  }

  BigInt content() const {
    BigInt g = 0;
    for (const auto& c : coeffs_) g = boost::multiprecision::gcd(g, c);
    return g;
  }

  /// Content removed, leading coefficient made positive.
  UnivariatePolynomial primitive_part() const {
    if (is_zero()) return {};
    BigInt g = content();
    if (leading() < 0) g = -g;
    std::vector<BigInt> v(coeffs_);
    for (auto& c : v) c /= g;
    return UnivariatePolynomial(std::move(v));
  }

  /// Drops the factor t^low_degree().
  UnivariatePolynomial without_zero_roots() const {
    if (is_zero()) return {};
    return UnivariatePolynomial(std::vector<BigInt>(coeffs_.begin() + static_cast<std::ptrdiff_t>(low_degree()), coeffs_.end()));
  }

  friend UnivariatePolynomial operator+(const UnivariatePolynomial& a, const UnivariatePolynomial& b) {
    std::vector<BigInt> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] += b.coeffs_[i];
    return UnivariatePolynomial(std::move(v));
  }
  friend UnivariatePolynomial operator-(const UnivariatePolynomial& a) {
    std::vector<BigInt> v(a.coeffs_);
    for (auto& c : v) c = -c;
    return UnivariatePolynomial(std::move(v));
  }
  friend UnivariatePolynomial operator-(const UnivariatePolynomial& a, const UnivariatePolynomial& b) { return a + (-b); }
  friend UnivariatePolynomial operator*(const UnivariatePolynomial& a, const UnivariatePolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigInt> v(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return UnivariatePolynomial(std::move(v));
  }
  friend UnivariatePolynomial operator*(const BigInt& k, const UnivariatePolynomial& a) {
    return UnivariatePolynomial::constant(k) * a;
  }
  friend bool operator==(const UnivariatePolynomial&, const UnivariatePolynomial&) = default;

  std::string to_string(char var = 'x') const;

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<BigInt> coeffs_;
};

/**
 * Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b, computed over the
 * integers. b must be nonzero.
 */
inline UnivariatePolynomial pseudo_remainder(UnivariatePolynomial a, const UnivariatePolynomial& b) {
  const auto db = *b.degree();
  std::vector<BigInt> r = a.coefficients();
  const BigInt& lb = b.leading();
  while (!r.empty() && r.size() - 1 >= db) {
    const std::size_t shift = r.size() - 1 - db;
    const BigInt lr = r.back();
    for (auto& c : r) c *= lb;
    for (std::size_t i = 0; i <= db; ++i) r[i + shift] -= lr * b.coefficients()[i];
    while (!r.empty() && r.back() == 0) r.pop_back();
  }
  return UnivariatePolynomial(std::move(r));
}

/**
 * Exact quotient a / b when b divides a over the rationals and the quotient
 * has integer coefficients (always the case for primitive b, by Gauss's
 * lemma). Returns nullopt when b does not divide a.
 */
inline std::optional<UnivariatePolynomial> divide_exact(const UnivariatePolynomial& a, const UnivariatePolynomial& b) {
  if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
  if (a.is_zero()) return UnivariatePolynomial{};
  const auto db = *b.degree();
  if (*a.degree() < db) return std::nullopt;
  std::vector<BigInt> r = a.coefficients();
  std::vector<BigInt> q(r.size() - db);
  const BigInt& lb = b.leading();
  for (std::size_t k = q.size(); k-- > 0;) {
    const BigInt& top = r[k + db];
    if (top % lb != 0) return std::nullopt;
    q[k] = top / lb;
    for (std::size_t i = 0; i <= db; ++i) r[k + i] -= q[k] * b.coefficients()[i];
  }
  for (const auto& c : r)
    if (c != 0) return std::nullopt;
  return UnivariatePolynomial(std::move(q));
}

/// Primitive gcd with positive leading coefficient; computed by the
/// primitive polynomial remainder sequence.
inline UnivariatePolynomial univariate_gcd(const UnivariatePolynomial& u, const UnivariatePolynomial& v) {
  if (u.is_zero() && v.is_zero()) throw std::invalid_argument("gcd of two zero polynomials");
  UnivariatePolynomial a = u.primitive_part();
  UnivariatePolynomial b = v.primitive_part();
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (*a.degree() < *b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    UnivariatePolynomial r = pseudo_remainder(a, b).primitive_part();
    a = std::move(b);
    b = std::move(r);
  }
  return a.primitive_part();
}

/// Largest k with g^k dividing p. g must be nonconstant, p nonzero.
inline int multiplicity_of(const UnivariatePolynomial& g, UnivariatePolynomial p) {
  if (g.is_constant()) throw std::invalid_argument("multiplicity of a constant factor");
  if (p.is_zero()) throw std::invalid_argument("multiplicity in the zero polynomial");
  const UnivariatePolynomial gp = g.primitive_part();
  int k = 0;
  while (auto q = divide_exact(p, gp)) {
    p = std::move(*q);
    ++k;
  }
  return k;
}

namespace detail {

inline void append_term(std::ostringstream& os, bool first, const BigInt& c, const std::string& monomial) {
  BigInt mag = c < 0 ? BigInt(-c) : c;
  if (first) {
    if (c < 0) os << '-';
  } else {
    os << (c < 0 ? " - " : " + ");
  }
  if (monomial.empty()) {
    os << mag;
  } else {
    if (mag != 1) os << mag << '*';
    os << monomial;
  }
}

inline std::string power_string(char var, std::size_t e) {
  if (e == 0) return {};
  if (e == 1) return std::string(1, var);
  return std::string(1, var) + "^" + std::to_string(e);
}

}  // namespace detail

inline std::string UnivariatePolynomial::to_string(char var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    if (coeffs_[i] == 0) continue;
    detail::append_term(os, first, coeffs_[i], detail::power_string(var, i));
    first = false;
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Polynomial
// ---------------------------------------------------------------------------

/// Exponent pair of a monomial x^x * y^y.
struct Exponent {
  std::uint32_t x = 0;
  std::uint32_t y = 0;
  friend constexpr auto operator<=>(const Exponent&, const Exponent&) = default;
};

/**
 * Sparse bivariate polynomial in x and y with integer coefficients. Zero
 * coefficients are never stored, so equal polynomials have equal term maps.
 */
class Polynomial {
 public:
  using TermMap = std::map<Exponent, BigInt>;

  Polynomial() = default;

  static Polynomial constant(BigInt c) {
    Polynomial p;
    p.add_term({0, 0}, std::move(c));
    return p;
  }
  static Polynomial monomial(BigInt c, std::uint32_t ex, std::uint32_t ey) {
    Polynomial p;
    p.add_term({ex, ey}, std::move(c));
    return p;
  }
  static Polynomial from_terms(const std::vector<std::pair<Exponent, BigInt>>& terms) {
    Polynomial p;
    for (const auto& [e, c] : terms) p.add_term(e, c);
    return p;
  }
  /// Builds sum over k of slices[k](x) * y^k (or with the roles of x and y
  /// exchanged when var == x).
  static Polynomial from_slices(const std::vector<UnivariatePolynomial>& slices, Variable var) {
    Polynomial p;
    for (std::size_t k = 0; k < slices.size(); ++k) {
      const auto& cs = slices[k].coefficients();
      for (std::size_t j = 0; j < cs.size(); ++j) {
        if (cs[j] == 0) continue;
        auto kk = static_cast<std::uint32_t>(k);
        auto jj = static_cast<std::uint32_t>(j);
        p.add_term(var == Variable::y ? Exponent{jj, kk} : Exponent{kk, jj}, cs[j]);
      }
    }
    return p;
  }

  void add_term(Exponent e, const BigInt& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  BigInt coefficient(Exponent e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? BigInt(0) : it->second;
  }

  std::optional<std::uint32_t> degree_in(Variable var) const {
    if (terms_.empty()) return std::nullopt;
    std::uint32_t d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, var == Variable::x ? e.x : e.y);
    return d;
  }

  std::optional<std::uint32_t> total_degree() const {
    if (terms_.empty()) return std::nullopt;
    std::uint32_t d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e.x + e.y);
    return d;
  }

  /// The univariate polynomial (in the other variable) multiplying var^power.
  UnivariatePolynomial coefficient_slice(Variable var, std::uint32_t power) const {
    std::vector<BigInt> v;
    for (const auto& [e, c] : terms_) {
      const std::uint32_t here = var == Variable::x ? e.x : e.y;
      if (here != power) continue;
      const std::uint32_t other_exp = var == Variable::x ? e.y : e.x;
      if (v.size() <= other_exp) v.resize(other_exp + 1);
      v[other_exp] = c;
    }
    return UnivariatePolynomial(std::move(v));
  }

  /// Slices for powers 0..degree_in(var).
  std::vector<UnivariatePolynomial> slices(Variable var) const {
    std::vector<UnivariatePolynomial> out;
    if (auto d = degree_in(var)) {
      for (std::uint32_t k = 0; k <= *d; ++k) out.push_back(coefficient_slice(var, k));
    }
    return out;
  }

  /// Exponent pairs with nonzero coefficient, in lexicographic order.
  std::vector<LatticePoint> support() const {
    std::vector<LatticePoint> pts;
    pts.reserve(terms_.size());
    for (const auto& [e, c] : terms_) pts.push_back({e.x, e.y});
    std::sort(pts.begin(), pts.end());
    return pts;
  }

  /// The same polynomial with x and y exchanged.
  Polynomial swapped() const {
    Polynomial p;
    for (const auto& [e, c] : terms_) p.terms_.emplace(Exponent{e.y, e.x}, c);
    return p;
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    Polynomial r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e, c);
    return r;
  }
  friend Polynomial operator-(const Polynomial& a) {
    Polynomial r;
    for (const auto& [e, c] : a.terms_) r.terms_.emplace(e, -c);
    return r;
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial r;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) r.add_term({ea.x + eb.x, ea.y + eb.y}, ca * cb);
    return r;
  }
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  /// Canonical text: terms by descending power of y, then of x.
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    std::vector<std::pair<Exponent, const BigInt*>> order;
    for (const auto& [e, c] : terms_) order.emplace_back(e, &c);
    std::sort(order.begin(), order.end(), [](const auto& l, const auto& r) {
      if (l.first.y != r.first.y) return l.first.y > r.first.y;
      return l.first.x > r.first.x;
    });
    for (const auto& [e, c] : order) {
      std::string mono = detail::power_string('x', e.x);
      const std::string ypart = detail::power_string('y', e.y);
      if (!ypart.empty()) mono = mono.empty() ? ypart : mono + "*" + ypart;
      detail::append_term(os, first, *c, mono);
      first = false;
    }
    return os.str();
  }

 private:
  TermMap terms_;
};

inline std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_string(); }
inline std::ostream& operator<<(std::ostream& os, const UnivariatePolynomial& p) { return os << p.to_string(); }

}  // namespace minding

#endif  // MINDING_POLYNOMIAL_HPP

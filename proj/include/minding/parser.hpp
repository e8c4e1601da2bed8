#ifndef MINDING_PARSER_HPP
#define MINDING_PARSER_HPP

#include <cctype>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>

#include "polynomial.hpp"

namespace minding {

/// Syntax error with a 1-based column into the parsed text.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t column, const std::string& what)
      : std::runtime_error("column " + std::to_string(column) + ": " + what), column_(column) {}
  std::size_t column() const { return column_; }

 private:
  std::size_t column_;
};

/// Largest exponent accepted by the parser.
inline constexpr std::uint32_t kMaxExponent = 100000;

namespace detail {

/// Uniform over the nonzero integers in [-bound, bound], by rejection.
class NonzeroCoefficientSource {
 public:
  NonzeroCoefficientSource(std::uint64_t seed, std::uint64_t bound) : engine_(seed), bound_(bound) {
    if (bound == 0) throw std::invalid_argument("coefficient bound must be positive");
  }

  BigInt next() {
    const std::uint64_t span = 2 * bound_;
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
    std::uint64_t r;
    do {
      r = engine_();
    } while (r >= limit);
    r %= span;
    // 0..bound-1 -> -bound..-1, bound..2*bound-1 -> 1..bound
    if (r < bound_) return -BigInt(bound_ - r);
    return BigInt(r - bound_ + 1);
  }

 private:
  std::mt19937_64 engine_;
  std::uint64_t bound_;
};

class PolynomialParser {
 public:
  PolynomialParser(std::string_view text, NonzeroCoefficientSource* blocks) : text_(text), blocks_(blocks) {}

  Polynomial parse() {
    skip_space();
    if (pos_ == text_.size()) error("empty input");
    Polynomial result;
    bool negate = false;
    if (peek() == '+' || peek() == '-') {
      negate = peek() == '-';
      ++pos_;
    }
    Polynomial t = term();
    result = negate ? -t : t;
    for (;;) {
      skip_space();
      if (pos_ == text_.size()) break;
      const char op = peek();
      if (op != '+' && op != '-') error(std::string("expected '+' or '-', found '") + op + "'");
      ++pos_;
      Polynomial next = term();
      result = op == '+' ? result + next : result - next;
    }
    return result;
  }

 private:
  Polynomial term() {
    Polynomial p = factor();
    for (;;) {
      skip_space();
      if (pos_ < text_.size() && peek() == '*') {
        ++pos_;
        p = p * factor();
      } else {
        return p;
      }
    }
  }

  Polynomial factor() {
    skip_space();
    if (pos_ == text_.size()) error("unexpected end of input");
    const char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      return Polynomial::constant(BigInt(std::string(text_.substr(start, pos_ - start))));
    }
    if (c == 'x' || c == 'y') {
      ++pos_;
      const std::uint32_t e = optional_power();
      return c == 'x' ? Polynomial::monomial(1, e, 0) : Polynomial::monomial(1, 0, e);
    }
    if (c == '(') {
      const std::size_t open = pos_;
      ++pos_;
      skip_space();
      if (pos_ == text_.size() || peek() != 'x') error("expected 'x' in coefficient block");
      ++pos_;
      skip_space();
      if (pos_ == text_.size() || peek() != '^') error("expected '^' in coefficient block");
      ++pos_;
      const std::uint32_t mu = exponent();
      skip_space();
      if (pos_ == text_.size() || peek() != ')') error("expected ')' closing coefficient block");
      ++pos_;
      if (blocks_ == nullptr) error_at(open, "coefficient block '(x^" + std::to_string(mu) + ")' is only allowed in patterns");
      Polynomial block;
      for (std::uint32_t j = 0; j <= mu; ++j) block.add_term({j, 0}, blocks_->next());
      return block;
    }
    error(std::string("unexpected character '") + c + "'");
  }

  std::uint32_t optional_power() {
    skip_space();
    if (pos_ < text_.size() && peek() == '^') {
      ++pos_;
      return exponent();
    }
    return 1;
  }

  std::uint32_t exponent() {
    skip_space();
    if (pos_ == text_.size()) error("expected exponent");
    if (peek() == '-') error("negative exponent");
    if (!std::isdigit(static_cast<unsigned char>(peek()))) error("expected exponent");
    std::uint64_t v = 0;
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + static_cast<std::uint64_t>(peek() - '0');
      if (v > kMaxExponent) error_at(start, "exponent too large");
      ++pos_;
    }
    return static_cast<std::uint32_t>(v);
  }

  char peek() const { return text_[pos_]; }
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  [[noreturn]] void error(const std::string& what) const { throw ParseError(pos_ + 1, what); }
  [[noreturn]] void error_at(std::size_t at, const std::string& what) const { throw ParseError(at + 1, what); }

  std::string_view text_;
  std::size_t pos_ = 0;
  NonzeroCoefficientSource* blocks_;
};

}  // namespace detail

/**
 * Parses a polynomial in x and y with integer coefficients.
 *
 *   expr   := ['+'|'-'] term (('+'|'-') term)*
 *   term   := factor ('*' factor)*
 *   factor := INT | 'x' ['^' UINT] | 'y' ['^' UINT]
 *
 * Whitespace is ignored. Errors carry the column of the offending character.
 */
inline Polynomial parse_polynomial(std::string_view text) {
  return detail::PolynomialParser(text, nullptr).parse();
}

/**
 * Like parse_polynomial, but additionally accepts blocks "(x^mu)", each of
 * which expands to c_0 + c_1 x + ... + c_mu x^mu with every c_j drawn from
 * the nonzero integers in [-bound, bound]. Blocks are expanded left to right
 * from a single generator seeded with `seed`, so the result is a pure
 * function of (text, seed, bound) and every block has exact degree mu.
 */
inline Polynomial parse_pattern(std::string_view text, std::uint64_t seed, std::uint64_t bound) {
  detail::NonzeroCoefficientSource source(seed, bound);
  return detail::PolynomialParser(text, &source).parse();
}

}  // namespace minding

#endif  // MINDING_PARSER_HPP

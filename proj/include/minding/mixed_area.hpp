#ifndef MINDING_MIXED_AREA_HPP
#define MINDING_MIXED_AREA_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lattice.hpp"
#include "numeric.hpp"
#include "polynomial.hpp"

namespace minding {

enum class MixedAreaMethod { dilation, inclusion_exclusion, recursion, minding, subdivision };

inline const char* method_name(MixedAreaMethod m) {
  switch (m) {
    case MixedAreaMethod::dilation: return "dilation";
    case MixedAreaMethod::inclusion_exclusion: return "ie";
    case MixedAreaMethod::recursion: return "recursion";
    case MixedAreaMethod::minding: return "minding";
    case MixedAreaMethod::subdivision: return "subdivision";
  }
  return "?";
}

struct MixedAreaResult {
  Rational value;
  MixedAreaMethod method;
  friend bool operator==(const MixedAreaResult&, const MixedAreaResult&) = default;
};

/// Area(P + Q) - Area(P) - Area(Q).
inline Rational mixed_area_ie(const LatticePolygon& p, const LatticePolygon& q) {
  return normalized_area(minkowski_sum(p, q)) - normalized_area(p) - normalized_area(q);
}

/**
 * Sum over the edges F of Q of max over P of u . tilde_nu_F, where tilde_nu_F
 * is the outward normal of F scaled to its normalized length. A point Q has
 * no edges and gives 0.
 */
inline Rational mixed_area_recursion(const LatticePolygon& p, const LatticePolygon& q) {
  if (q.dimension() == 0) return 0;
  std::int64_t total = 0;
  for (const auto& e : edges(q)) {
    std::int64_t best = dot(p.vertices().front(), e.tilde_nu);
    for (auto u : p.vertices()) best = std::max(best, dot(u, e.tilde_nu));
    total += best;
  }
  return Rational(total);
}

/**
 * Coefficient of lambda*mu in Area(lambda P + mu Q), recovered from the
 * samples (1,1), (2,1), (1,2): with s = lambda^2 A + lambda mu M + mu^2 B,
 * M = 5 s(1,1) - s(2,1) - s(1,2).
 */
inline Rational mixed_area_dilation(const LatticePolygon& p, const LatticePolygon& q) {
  auto sample = [&](std::int64_t lambda, std::int64_t mu) {
    return normalized_area(minkowski_sum(dilate(p, lambda), dilate(q, mu)));
  };
  return 5 * sample(1, 1) - sample(2, 1) - sample(1, 2);
}

/// Product of total degrees.
inline std::int64_t bezout_bound(const Polynomial& f, const Polynomial& theta) {
  if (f.is_zero() || theta.is_zero()) throw PreconditionError("zero polynomial");
  return static_cast<std::int64_t>(*f.total_degree()) * static_cast<std::int64_t>(*theta.total_degree());
}

struct FinckResult {
  std::optional<std::int64_t> degree;          ///< m n' + n m' when applicable
  std::optional<std::int64_t> m_prime, n_prime;
  std::optional<std::size_t> offending_index;  ///< power of the eliminated variable
  std::string offending_polynomial;            ///< "f" or "theta"
  std::vector<std::size_t> ignored_f, ignored_theta;  ///< identically zero slices
  std::vector<std::string> warnings;
  bool applicable() const { return degree.has_value(); }
};

/**
 * Finck's rule: when every nonzero coefficient of f (as a polynomial in the
 * eliminated variable) has the same degree m' and every nonzero coefficient
 * of theta the same degree n', the final equation has degree m n' + n m'.
 * Identically zero coefficients are skipped and listed.
 */
inline FinckResult finck_degree(const Polynomial& f, const Polynomial& theta, Variable eliminate = Variable::y) {
  FinckResult r;
  if (f.is_zero() || theta.is_zero()) return r;
  auto uniform = [&](const Polynomial& p, const char* name, std::vector<std::size_t>& ignored) -> std::optional<std::int64_t> {
    std::optional<std::int64_t> deg;
    const auto slices = p.slices(eliminate);
    for (std::size_t k = 0; k < slices.size(); ++k) {
      const std::size_t index = slices.size() - 1 - k;  // A_index multiplies y^(m - index)
      const auto& s = slices[k];
      if (s.is_zero()) {
        ignored.push_back(index);
        continue;
      }
      const auto d = static_cast<std::int64_t>(*s.degree());
      if (deg && *deg != d) {
        if (!r.offending_index) {
          r.offending_index = index;
          r.offending_polynomial = name;
        }
        return std::nullopt;
      }
      deg = d;
    }
    return deg;
  };
  const auto mp = uniform(f, "f", r.ignored_f);
  const auto np = mp ? uniform(theta, "theta", r.ignored_theta) : std::nullopt;
  if (!r.ignored_f.empty() || !r.ignored_theta.empty())
    r.warnings.push_back("identically zero coefficients ignored");
  if (!mp || !np) return r;
  r.m_prime = mp;
  r.n_prime = np;
  const auto m = static_cast<std::int64_t>(*f.degree_in(eliminate));
  const auto n = static_cast<std::int64_t>(*theta.degree_in(eliminate));
  r.degree = m * *np + n * *mp;
  return r;
}

/// Newton polygon with the origin adjoined.
inline LatticePolygon hull_with_origin(const Polynomial& p) {
  auto pts = p.support();
  pts.push_back({0, 0});
  return convex_hull(pts);
}

/// Mixed area of the Newton polygons with the origin adjoined: a bound on the
/// number of isolated roots in the affine plane.
inline std::int64_t li_wang_bound(const Polynomial& f, const Polynomial& theta) {
  if (f.is_zero() || theta.is_zero()) throw PreconditionError("zero polynomial");
  return to_int64(mixed_area_ie(hull_with_origin(f), hull_with_origin(theta)));
}

}  // namespace minding

#endif  // MINDING_MIXED_AREA_HPP

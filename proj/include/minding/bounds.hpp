#ifndef MINDING_BOUNDS_HPP
#define MINDING_BOUNDS_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "lattice.hpp"
#include "mixed_area.hpp"
#include "polynomial.hpp"
#include "puiseux.hpp"
#include "subdivision.hpp"

namespace minding {

/// Every mixed-area method that applies to (P, Q). Dilation, inclusion-
/// exclusion and recursion always apply; the subdivision needs two
/// 2-dimensional polygons and the Minding route needs P in Minding form and
/// Q containing the origin.
inline std::vector<MixedAreaResult> all_mixed_areas(const LatticePolygon& p, const LatticePolygon& q) {
  std::vector<MixedAreaResult> out{
      {mixed_area_dilation(p, q), MixedAreaMethod::dilation},
      {mixed_area_ie(p, q), MixedAreaMethod::inclusion_exclusion},
      {mixed_area_recursion(p, q), MixedAreaMethod::recursion},
  };
  if (p.dimension() == 2 && q.dimension() == 2) {
    Rational total = 0;
    for (const auto& c : build_subdivision(p, q).cells)
      if (c.kind == CellKind::mixed) total += normalized_area(c.polygon);
    out.push_back({total, MixedAreaMethod::subdivision});
  }
  if (is_minding_form(p) && q.min_x() >= 0 && q.min_y() >= 0 && q.contains({0, 0}))
    out.push_back({mixed_area_minding(p, q), MixedAreaMethod::minding});
  return out;
}

inline bool methods_agree(const std::vector<MixedAreaResult>& results) {
  for (const auto& r : results)
    if (r.value != results.front().value) return false;
  return true;
}

struct BoundsReport {
  std::int64_t bezout = 0;
  std::optional<std::int64_t> finck;
  std::int64_t li_wang = 0;
  Rational mixed_area;
  bool methods_agree = false;
  friend bool operator==(const BoundsReport&, const BoundsReport&) = default;
};

/// Bezout, Finck and Li-Wang bounds together with the mixed area of the two
/// Newton polygons (checked across all applicable methods).
inline BoundsReport bounds_report(const Polynomial& f, const Polynomial& theta, Variable eliminate = Variable::y) {
  BoundsReport b;
  b.bezout = bezout_bound(f, theta);
  b.finck = finck_degree(f, theta, eliminate).degree;
  b.li_wang = li_wang_bound(f, theta);
  const auto results = all_mixed_areas(convex_hull(f.support()), convex_hull(theta.support()));
  b.mixed_area = results.front().value;
  b.methods_agree = methods_agree(results);
  return b;
}

}  // namespace minding

#endif  // MINDING_BOUNDS_HPP

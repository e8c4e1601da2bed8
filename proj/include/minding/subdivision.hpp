#ifndef MINDING_SUBDIVISION_HPP
#define MINDING_SUBDIVISION_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lattice.hpp"
#include "mixed_area.hpp"
#include "numeric.hpp"

namespace minding {

enum class CellKind { unmixed_p1, unmixed_p2, mixed };

inline const char* cell_kind_name(CellKind k) {
  switch (k) {
    case CellKind::unmixed_p1: return "unmixed-P1";
    case CellKind::unmixed_p2: return "unmixed-P2";
    case CellKind::mixed: return "mixed";
  }
  return "?";
}

/// A cell of a mixed subdivision together with the faces it is the sum of.
struct SubdivisionCell {
  LatticePolygon polygon;
  CellKind kind = CellKind::mixed;
  LatticePolygon p1_face;
  LatticePolygon p2_face;
  friend bool operator==(const SubdivisionCell&, const SubdivisionCell&) = default;
};

struct MixedSubdivision {
  std::vector<SubdivisionCell> cells;
  LatticePoint alpha;  ///< lifting of P1: p -> alpha . p; P2 is lifted to 0
  friend bool operator==(const MixedSubdivision&, const MixedSubdivision&) = default;
};

namespace detail {

inline LatticePoint inner_normal(const EdgeDatum& e) { return -e.primitive_normal; }

inline LatticePolygon segment(LatticePoint a, LatticePoint b) { return convex_hull({a, b}); }

inline LatticePolygon point_polygon(LatticePoint a) { return LatticePolygon::from_canonical({a}); }

inline LatticePoint argmin_vertex(const LatticePolygon& p, LatticePoint direction) {
  LatticePoint best = p.vertices().front();
  for (auto v : p.vertices())
    if (dot(v, direction) < dot(best, direction)) best = v;
  return best;
}

inline bool lifting_is_generic(const LatticePolygon& p1, const LatticePolygon& p2, LatticePoint alpha) {
  for (const auto* p : {&p1, &p2})
    for (const auto& e : edges(*p))
      if (dot(alpha, e.vector) == 0) return false;
  return true;
}

}  // namespace detail

/**
 * Regular mixed subdivision of P1 + P2 from the lifting p -> alpha . p on P1
 * and 0 on P2. Its cells are F1 + F2 where, for some direction w, F1 is the
 * face of P1 minimizing (w + alpha) . p and F2 the face of P2 minimizing
 * w . q. For alpha not orthogonal to any edge this gives P2 + argmin(alpha)
 * and P1 + argmax(alpha) as unmixed cells and a parallelogram E + F for each
 * edge pair whose inner normals satisfy alpha = s u_E - t u_F with s, t > 0.
 *
 * Without an explicit alpha, (1, N) is tried for N = 2, 4, 8, ... until the
 * lifting is generic.
 */
inline MixedSubdivision build_subdivision(const LatticePolygon& p1, const LatticePolygon& p2,
                                          std::optional<LatticePoint> alpha = std::nullopt) {
  if (p1.dimension() < 2) throw PreconditionError("P1 is not 2-dimensional");
  if (p2.dimension() < 2) throw PreconditionError("P2 is not 2-dimensional");

  LatticePoint a;
  if (alpha) {
    a = *alpha;
    if (!detail::lifting_is_generic(p1, p2, a))
      throw PreconditionError("lifting vector is orthogonal to an edge; choose a generic alpha");
  } else {
    constexpr int kMaxAttempts = 40;
    std::int64_t n = 2;
    int attempt = 0;
    for (; attempt < kMaxAttempts; ++attempt, n *= 2) {
      a = {1, n};
      if (detail::lifting_is_generic(p1, p2, a)) break;
    }
    if (attempt == kMaxAttempts) throw InvariantError("no generic lifting found");
  }

  MixedSubdivision sub;
  sub.alpha = a;
  const LatticePoint low1 = detail::argmin_vertex(p1, a);
  const LatticePoint high2 = detail::argmin_vertex(p2, -a);
  sub.cells.push_back({translate(p2, low1), CellKind::unmixed_p2, detail::point_polygon(low1), p2});

  const auto e1 = edges(p1);
  const auto e2 = edges(p2);
  for (const auto& e : e1) {
    const LatticePoint ue = detail::inner_normal(e);
    for (const auto& f : e2) {
      const LatticePoint minus_uf = -detail::inner_normal(f);
      const std::int64_t det = cross(ue, minus_uf);
      if (det == 0) continue;
      // alpha = s*ue + t*minus_uf
      const std::int64_t s_num = cross(a, minus_uf);
      const std::int64_t t_num = cross(ue, a);
      const bool positive = det > 0 ? (s_num > 0 && t_num > 0) : (s_num < 0 && t_num < 0);
      if (!positive) continue;
      const LatticePolygon ef = detail::segment(e.start, e.end());
      const LatticePolygon ff = detail::segment(f.start, f.end());
      sub.cells.push_back({minkowski_sum(ef, ff), CellKind::mixed, ef, ff});
    }
  }
  sub.cells.push_back({translate(p1, high2), CellKind::unmixed_p1, p1, detail::point_polygon(high2)});
  return sub;
}

struct ValidationReport {
  std::vector<std::string> violations;
  std::vector<std::string> notes;
  bool ok() const { return violations.empty(); }
};

namespace detail {

inline bool is_edge_of(const LatticePolygon& face, const LatticePolygon& p) {
  if (face.dimension() != 1) return false;
  for (const auto& e : edges(p))
    if (segment(e.start, e.end()) == face) return true;
  return false;
}

inline std::optional<LatticePoint> translation_between(const LatticePolygon& cell, const LatticePolygon& shape) {
  if (cell.size() != shape.size() || cell.empty()) return std::nullopt;
  const LatticePoint shift = cell.vertices().front() - shape.vertices().front();
  if (translate(shape, shift) != cell) return std::nullopt;
  return shift;
}

// Closed segment [a, b] (a == b allowed) on a common line.
struct Span {
  LatticePoint a, b;
};

inline std::vector<LatticePoint> points_on_line(const LatticePolygon& p, LatticePoint normal, std::int64_t level) {
  std::vector<LatticePoint> out;
  for (auto v : p.vertices())
    if (dot(v, normal) == level) out.push_back(v);
  std::sort(out.begin(), out.end());
  return out;
}

// The face of P cut out by its supporting line {normal . x = level}, as a
// polygon (point or segment).
inline LatticePolygon supporting_face(const LatticePolygon& p, LatticePoint normal, std::int64_t level) {
  auto pts = points_on_line(p, normal, level);
  return convex_hull(pts);
}

inline std::optional<LatticePolygon> intersect_collinear(const LatticePolygon& s, const LatticePolygon& t) {
  // Both are points or segments on one line; work in lexicographic order.
  const LatticePoint s0 = s.vertices().front(), s1 = s.vertices().back();
  const LatticePoint t0 = t.vertices().front(), t1 = t.vertices().back();
  const LatticePoint lo = std::max(s0, t0);
  const LatticePoint hi = std::min(s1, t1);
  if (hi < lo) return std::nullopt;
  return lo == hi ? point_polygon(lo) : segment(lo, hi);
}

inline bool is_face(const std::optional<LatticePolygon>& piece, const LatticePolygon& p) {
  if (!piece) return true;
  if (piece->dimension() == 0) {
    const auto& v = p.vertices();
    return std::find(v.begin(), v.end(), piece->vertices().front()) != v.end();
  }
  return is_edge_of(*piece, p);
}

// Empty when the interiors of a and b are disjoint and their intersection is
// a face of both; otherwise a description of the defect.
inline std::optional<std::string> face_intersection_defect(const LatticePolygon& a, const LatticePolygon& b) {
  for (const auto* host : {&a, &b}) {
    const LatticePolygon& other = host == &a ? b : a;
    for (const auto& e : edges(*host)) {
      const LatticePoint nu = e.primitive_normal;  // host lies in nu . x <= level
      const std::int64_t level = dot(e.start, nu);
      std::int64_t other_min = dot(other.vertices().front(), nu);
      for (auto v : other.vertices()) other_min = std::min(other_min, dot(v, nu));
      if (other_min < level) continue;
      if (other_min > level) return std::nullopt;  // strictly separated
      const LatticePolygon fa = supporting_face(a, nu, level);
      const LatticePolygon fb = supporting_face(b, nu, level);
      const auto meet = intersect_collinear(fa, fb);
      if (!is_face(meet, a) || !is_face(meet, b)) return std::string("intersection is not a face of both cells");
      return std::nullopt;
    }
  }
  return std::string("interiors overlap");
}

}  // namespace detail

/**
 * Checks a cell list against the definition of a mixed subdivision of
 * P1 + P2: cells cover the sum with total area Area(P1 + P2), any two cells
 * meet in a common face, there is exactly one translate of each of P1 and
 * P2, and every other cell is a parallelogram E + F for edges E of P1 and F of
 * P2. The mixed cells must add up to the mixed area.
 */
inline ValidationReport validate_subdivision(const MixedSubdivision& sub, const LatticePolygon& p1, const LatticePolygon& p2) {
  ValidationReport r;
  const LatticePolygon sum = minkowski_sum(p1, p2);

  Rational total = 0, mixed_total = 0;
  int unmixed1 = 0, unmixed2 = 0;
  for (std::size_t i = 0; i < sub.cells.size(); ++i) {
    const auto& c = sub.cells[i];
    const std::string tag = "cell " + std::to_string(i) + " (" + cell_kind_name(c.kind) + ")";
    const Rational area = normalized_area(c.polygon);
    total += area;
    for (auto v : c.polygon.vertices())
      if (!sum.contains(v)) {
        r.violations.push_back(tag + ": lies outside P1+P2");
        break;
      }
    if (c.polygon.dimension() < 2) {
      r.violations.push_back(tag + ": degenerate cell");
      continue;
    }
    if (minkowski_sum(c.p1_face, c.p2_face) != c.polygon)
      r.violations.push_back(tag + ": polygon differs from the sum of its faces");
    switch (c.kind) {
      case CellKind::unmixed_p1:
        ++unmixed1;
        if (!detail::translation_between(c.polygon, p1)) r.violations.push_back(tag + ": not a translate of P1");
        break;
      case CellKind::unmixed_p2:
        ++unmixed2;
        if (!detail::translation_between(c.polygon, p2)) r.violations.push_back(tag + ": not a translate of P2");
        break;
      case CellKind::mixed: {
        mixed_total += area;
        if (!detail::is_edge_of(c.p1_face, p1) || !detail::is_edge_of(c.p2_face, p2)) {
          r.violations.push_back(tag + ": not the sum of an edge of P1 and an edge of P2");
          break;
        }
        const LatticePoint e = c.p1_face.vertices()[1] - c.p1_face.vertices()[0];
        const LatticePoint f = c.p2_face.vertices()[1] - c.p2_face.vertices()[0];
        const std::int64_t det = cross(e, f);
        if (c.polygon.size() != 4 || Rational(det < 0 ? -det : det) != area)
          r.violations.push_back(tag + ": not a parallelogram of area |det(E,F)|");
        break;
      }
    }
  }
  if (unmixed1 != 1) r.violations.push_back("expected exactly one unmixed-P1 cell, found " + std::to_string(unmixed1));
  if (unmixed2 != 1) r.violations.push_back("expected exactly one unmixed-P2 cell, found " + std::to_string(unmixed2));
  if (total != normalized_area(sum))
    r.violations.push_back("cell areas sum to " + to_string(total) + ", Area(P1+P2) = " + to_string(normalized_area(sum)));
  const Rational mixed = mixed_area_ie(p1, p2);
  if (mixed_total != mixed)
    r.violations.push_back("mixed cells sum to " + to_string(mixed_total) + ", mixed area is " + to_string(mixed));

  for (std::size_t i = 0; i < sub.cells.size(); ++i)
    for (std::size_t j = i + 1; j < sub.cells.size(); ++j) {
      const auto& a = sub.cells[i].polygon;
      const auto& b = sub.cells[j].polygon;
      if (a.dimension() < 2 || b.dimension() < 2) continue;
      if (auto defect = detail::face_intersection_defect(a, b))
        r.violations.push_back("cells " + std::to_string(i) + " and " + std::to_string(j) + ": " + *defect);
    }
  return r;
}

/// Mixed cells over one ascending right edge F of P2, straightened to the
/// parallelogram [0, ell] + F of the same area.
struct StraightenedStrip {
  EdgeDatum edge;
  Rational ell;
  Rational area;
  std::vector<std::size_t> cells;
  friend bool operator==(const StraightenedStrip&, const StraightenedStrip&) = default;
};

struct StraighteningResult {
  std::vector<StraightenedStrip> strips;
  std::optional<std::size_t> top_cell;  ///< the mixed cell [0,b] x [n, n+m]
  Rational top_cell_area;
  std::vector<std::string> warnings;
};

/**
 * Groups the mixed cells by their P2 edge for every ascending right edge
 * (n_i, m_i) of P2; ell_i = (strip area) / m_i. When both polygons are in
 * Minding form the cell [0,b] x [n, n+m] is located as well.
 */
inline StraighteningResult straighten_strips(const MixedSubdivision& sub, const LatticePolygon& p1, const LatticePolygon& p2) {
  if (auto v = validate_subdivision(sub, p1, p2); !v.ok())
    throw PreconditionError("invalid subdivision: " + v.violations.front());

  StraighteningResult r;
  const auto all = edges(p2);
  std::size_t first = 0;
  for (std::size_t i = 0; i < all.size(); ++i) {
    const LatticePoint s = all[i].start, best = all[first].start;
    if (s.y < best.y || (s.y == best.y && s.x > best.x)) first = i;
  }
  for (std::size_t i = 0; i < all.size(); ++i) {
    const EdgeDatum& e = all[(first + i) % all.size()];
    if (e.vector.y <= 0) break;
    StraightenedStrip strip;
    strip.edge = e;
    const LatticePolygon face = detail::segment(e.start, e.end());
    for (std::size_t c = 0; c < sub.cells.size(); ++c) {
      const auto& cell = sub.cells[c];
      if (cell.kind != CellKind::mixed || cell.p2_face != face) continue;
      strip.cells.push_back(c);
      strip.area += normalized_area(cell.polygon);
    }
    strip.ell = strip.area / e.vector.y;
    r.strips.push_back(std::move(strip));
  }

  if (is_minding_form(p1) && is_minding_form(p2)) {
    const std::int64_t m = p1.max_y(), n = p2.max_y();
    std::int64_t b = 0;
    for (auto v : p2.vertices())
      if (v.y == n) b = std::max(b, v.x);
    r.top_cell_area = Rational(m * b);
    if (m > 0 && b > 0) {
      const LatticePolygon rect = convex_hull({{0, n}, {b, n}, {b, n + m}, {0, n + m}});
      for (std::size_t c = 0; c < sub.cells.size(); ++c)
        if (sub.cells[c].kind == CellKind::mixed && sub.cells[c].polygon == rect) r.top_cell = c;
      if (!r.top_cell) {
        for (std::size_t c = 0; c < sub.cells.size(); ++c)
          if (sub.cells[c].kind == CellKind::mixed && normalized_area(sub.cells[c].polygon) == r.top_cell_area &&
              translate(rect, sub.cells[c].polygon.vertices().front() - rect.vertices().front()) == sub.cells[c].polygon)
            r.top_cell = c;
        r.warnings.push_back(r.top_cell ? "the m*b cell appears translated from [0,b]x[n,n+m]"
                                        : "no mixed cell of the form [0,b]x[n,n+m]");
      }
    }
  }
  return r;
}

}  // namespace minding

#endif  // MINDING_SUBDIVISION_HPP

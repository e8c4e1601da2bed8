#ifndef MINDING_LATTICE_HPP
#define MINDING_LATTICE_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "numeric.hpp"
#include "point.hpp"

namespace minding {

/**
 * Convex lattice polygon. Vertices run counterclockwise from the
 * lexicographically smallest one, with no three consecutive vertices
 * collinear. Segments (two vertices) and points (one vertex) are allowed.
 */
class LatticePolygon {
 public:
  LatticePolygon() = default;

  /// Validates that `vertices` is already in canonical form.
  static LatticePolygon from_canonical(std::vector<LatticePoint> vertices) {
    if (vertices.empty()) throw std::invalid_argument("polygon needs at least one vertex");
    if (*std::min_element(vertices.begin(), vertices.end()) != vertices.front())
      throw std::invalid_argument("polygon must start at its lexicographically smallest vertex");
    if (vertices.size() == 2 && vertices[0] == vertices[1])
      throw std::invalid_argument("segment with coincident endpoints");
    if (vertices.size() >= 3) {
      const std::size_t n = vertices.size();
      for (std::size_t i = 0; i < n; ++i) {
        const LatticePoint a = vertices[i], b = vertices[(i + 1) % n], c = vertices[(i + 2) % n];
        if (cross(b - a, c - b) <= 0) throw std::invalid_argument("vertices are not strictly convex and counterclockwise");
      }
    }
    LatticePolygon p;
    p.vertices_ = std::move(vertices);
    return p;
  }

  const std::vector<LatticePoint>& vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  bool empty() const { return vertices_.empty(); }
  /// 0 for a point, 1 for a segment, 2 otherwise.
  int dimension() const { return vertices_.size() >= 3 ? 2 : static_cast<int>(vertices_.size()) - 1; }

  bool contains(LatticePoint q) const {
    const std::size_t n = vertices_.size();
    if (n == 0) return false;
    if (n == 1) return q == vertices_[0];
    if (n == 2) {
      const LatticePoint a = vertices_[0], b = vertices_[1];
      return cross(b - a, q - a) == 0 && dot(q - a, b - a) >= 0 && dot(q - b, a - b) >= 0;
    }
    for (std::size_t i = 0; i < n; ++i)
      if (cross(vertices_[(i + 1) % n] - vertices_[i], q - vertices_[i]) < 0) return false;
    return true;
  }

  std::int64_t min_x() const { return extreme([](LatticePoint p) { return p.x; }, false); }
  std::int64_t max_x() const { return extreme([](LatticePoint p) { return p.x; }, true); }
  std::int64_t min_y() const { return extreme([](LatticePoint p) { return p.y; }, false); }
  std::int64_t max_y() const { return extreme([](LatticePoint p) { return p.y; }, true); }

  friend bool operator==(const LatticePolygon&, const LatticePolygon&) = default;

 private:
  template <class Key>
  std::int64_t extreme(Key key, bool want_max) const {
    if (vertices_.empty()) throw std::domain_error("empty polygon");
    std::int64_t best = key(vertices_[0]);
    for (auto v : vertices_) best = want_max ? std::max(best, key(v)) : std::min(best, key(v));
    return best;
  }

  std::vector<LatticePoint> vertices_;
};

/// Canonical convex hull (Andrew's monotone chain, collinear points dropped).
inline LatticePolygon convex_hull(std::span<const LatticePoint> points) {
  if (points.empty()) throw std::invalid_argument("convex hull of an empty point set");
  std::vector<LatticePoint> pts(points.begin(), points.end());
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() <= 2) return LatticePolygon::from_canonical(pts);

  std::vector<LatticePoint> hull(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && cross(hull[k - 1] - hull[k - 2], p - hull[k - 2]) <= 0) --k;
    hull[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && cross(hull[k - 1] - hull[k - 2], pts[i] - hull[k - 2]) <= 0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  return LatticePolygon::from_canonical(std::move(hull));
}

inline LatticePolygon convex_hull(std::initializer_list<LatticePoint> points) {
  return convex_hull(std::span<const LatticePoint>(points.begin(), points.size()));
}

inline LatticePolygon translate(const LatticePolygon& p, LatticePoint by) {
  std::vector<LatticePoint> v = p.vertices();
  for (auto& q : v) q = q + by;
  return LatticePolygon::from_canonical(std::move(v));
}

/// lambda * P for an integer lambda >= 0.
inline LatticePolygon dilate(const LatticePolygon& p, std::int64_t lambda) {
  if (lambda < 0) throw std::invalid_argument("dilation factor must be nonnegative");
  if (lambda == 0) return LatticePolygon::from_canonical({{0, 0}});
  std::vector<LatticePoint> v = p.vertices();
  for (auto& q : v) q = lambda * q;
  return LatticePolygon::from_canonical(std::move(v));
}

/// Euclidean area (unit square = 1). Zero for points and segments.
inline Rational normalized_area(const LatticePolygon& p) {
  const auto& v = p.vertices();
  if (v.size() < 3) return 0;
  std::int64_t twice = 0;
  for (std::size_t i = 0; i < v.size(); ++i) twice += cross(v[i], v[(i + 1) % v.size()]);
  return Rational(twice, 2);
}

/// One counterclockwise edge of a polygon, polygon on the left.
struct EdgeDatum {
  LatticePoint start;
  LatticePoint vector;            ///< (n, m)
  LatticePoint primitive_normal;  ///< outward, primitive
  std::int64_t length = 0;        ///< normalized length gcd(|n|, |m|)
  LatticePoint tilde_nu;          ///< (m, -n) = length * primitive_normal

  LatticePoint end() const { return start + vector; }
  friend bool operator==(const EdgeDatum&, const EdgeDatum&) = default;
};

inline std::int64_t normalized_length(LatticePoint v) { return std::gcd(v.x < 0 ? -v.x : v.x, v.y < 0 ? -v.y : v.y); }

inline EdgeDatum make_edge(LatticePoint start, LatticePoint vec) {
  EdgeDatum e;
  e.start = start;
  e.vector = vec;
  e.length = normalized_length(vec);
  e.tilde_nu = {vec.y, -vec.x};
  e.primitive_normal = {e.tilde_nu.x / e.length, e.tilde_nu.y / e.length};
  return e;
}

/// Counterclockwise edge cycle; a segment yields both orientations.
inline std::vector<EdgeDatum> edges(const LatticePolygon& p) {
  const auto& v = p.vertices();
  if (v.size() < 2) throw std::invalid_argument("a point polygon has no edges");
  std::vector<EdgeDatum> out;
  out.reserve(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(make_edge(v[i], v[(i + 1) % v.size()] - v[i]));
  return out;
}

namespace detail {

// Position of a direction in the angular order starting at angle 0
// (positive x-axis) and running counterclockwise.
inline int half_plane(LatticePoint d) { return (d.y < 0 || (d.y == 0 && d.x < 0)) ? 1 : 0; }

inline bool angle_less(LatticePoint a, LatticePoint b) {
  const int ha = half_plane(a), hb = half_plane(b);
  if (ha != hb) return ha < hb;
  return cross(a, b) > 0;
}

inline std::size_t bottom_left_index(const std::vector<LatticePoint>& v) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < v.size(); ++i)
    if (v[i].y < v[best].y || (v[i].y == v[best].y && v[i].x < v[best].x)) best = i;
  return best;
}

// Edge vectors in counterclockwise order starting at the bottom-left vertex,
// so that their angles increase through [0, 2*pi).
inline std::vector<LatticePoint> edge_sequence(const LatticePolygon& p) {
  const auto& v = p.vertices();
  std::vector<LatticePoint> out;
  if (v.size() < 2) return out;
  const std::size_t s = bottom_left_index(v);
  for (std::size_t i = 0; i < v.size(); ++i) {
    const std::size_t a = (s + i) % v.size();
    out.push_back(v[(a + 1) % v.size()] - v[a]);
  }
  return out;
}

}  // namespace detail

/// Exact Minkowski sum by merging the two edge sequences in angular order.
inline LatticePolygon minkowski_sum(const LatticePolygon& p, const LatticePolygon& q) {
  if (p.empty() || q.empty()) throw std::invalid_argument("Minkowski sum of an empty polygon");
  const LatticePoint start = p.vertices()[detail::bottom_left_index(p.vertices())] +
                             q.vertices()[detail::bottom_left_index(q.vertices())];
  const auto ep = detail::edge_sequence(p);
  const auto eq = detail::edge_sequence(q);
  std::vector<LatticePoint> merged;
  merged.reserve(ep.size() + eq.size());
  std::merge(ep.begin(), ep.end(), eq.begin(), eq.end(), std::back_inserter(merged), detail::angle_less);

  std::vector<LatticePoint> pts{start};
  LatticePoint cur = start;
  for (auto d : merged) {
    cur = cur + d;
    pts.push_back(cur);
  }
  // The walk closes on itself; hull() drops the repeated start and merges
  // parallel consecutive edges into canonical form.
  return convex_hull(pts);
}

struct ShapeCheck {
  bool ok = true;
  std::string reason;
  explicit operator bool() const { return ok; }
};

/**
 * True when P lies in the first quadrant, contains the origin, and its
 * segment on the y-axis reaches the full height of P.
 */
inline ShapeCheck is_minding_form(const LatticePolygon& p) {
  if (p.empty()) return {false, "empty polygon"};
  if (p.min_x() < 0 || p.min_y() < 0) return {false, "polygon is not in the first quadrant"};
  if (!p.contains({0, 0})) return {false, "polygon does not contain the origin"};
  if (!p.contains({0, p.max_y()}))
    return {false, "left edge does not reach the full height " + std::to_string(p.max_y())};
  return {};
}

/// All lattice points of P (boundary and interior), lexicographically sorted.
inline std::vector<LatticePoint> lattice_points(const LatticePolygon& p) {
  std::vector<LatticePoint> out;
  if (p.empty()) return out;
  for (std::int64_t x = p.min_x(); x <= p.max_x(); ++x)
    for (std::int64_t y = p.min_y(); y <= p.max_y(); ++y)
      if (p.contains({x, y})) out.push_back({x, y});
  return out;
}

}  // namespace minding

#endif  // MINDING_LATTICE_HPP

#ifndef MINDING_POINT_HPP
#define MINDING_POINT_HPP

#include <compare>
#include <cstdint>
#include <ostream>

namespace minding {

struct LatticePoint {
  std::int64_t x = 0;
  std::int64_t y = 0;

  friend constexpr auto operator<=>(const LatticePoint&, const LatticePoint&) = default;

  friend constexpr LatticePoint operator+(LatticePoint a, LatticePoint b) { return {a.x + b.x, a.y + b.y}; }
  friend constexpr LatticePoint operator-(LatticePoint a, LatticePoint b) { return {a.x - b.x, a.y - b.y}; }
  friend constexpr LatticePoint operator-(LatticePoint a) { return {-a.x, -a.y}; }
  friend constexpr LatticePoint operator*(std::int64_t k, LatticePoint a) { return {k * a.x, k * a.y}; }

  friend std::ostream& operator<<(std::ostream& os, LatticePoint p) {
    return os << '(' << p.x << ',' << p.y << ')';
  }
};

constexpr std::int64_t dot(LatticePoint a, LatticePoint b) { return a.x * b.x + a.y * b.y; }
constexpr std::int64_t cross(LatticePoint a, LatticePoint b) { return a.x * b.y - a.y * b.x; }

}  // namespace minding

#endif  // MINDING_POINT_HPP

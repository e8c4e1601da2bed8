#ifndef MINDING_SVG_HPP
#define MINDING_SVG_HPP

#include <cstdint>
#include <iomanip>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "lattice.hpp"
#include "puiseux.hpp"
#include "subdivision.hpp"

namespace minding {

class RenderError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace svg {

inline constexpr int kPitch = 20;   // pixels per lattice unit
inline constexpr int kMargin = 2;   // lattice units around the drawing

struct Shape {
  LatticePolygon polygon;
  std::string fill;
  std::string label;
};

struct EdgeLabel {
  LatticePoint from, to;
  std::string text;
};

/// Fixed-layout SVG writer: identical input gives byte-identical output.
class Canvas {
 public:
  explicit Canvas(const std::vector<LatticePoint>& extent) {
    if (extent.empty()) throw RenderError("nothing to render");
    min_x_ = max_x_ = extent.front().x;
    min_y_ = max_y_ = extent.front().y;
    for (auto p : extent) {
      min_x_ = std::min(min_x_, p.x);
      max_x_ = std::max(max_x_, p.x);
      min_y_ = std::min(min_y_, p.y);
      max_y_ = std::max(max_y_, p.y);
    }
  }

  std::int64_t px(std::int64_t x) const { return (x - min_x_ + kMargin) * kPitch; }
  std::int64_t py(std::int64_t y) const { return (max_y_ - y + kMargin) * kPitch; }

  std::string render(const std::vector<Shape>& shapes, const std::vector<EdgeLabel>& edge_labels,
                     const std::string& title) const {
    const std::int64_t width = (max_x_ - min_x_ + 2 * kMargin) * kPitch;
    const std::int64_t height = (max_y_ - min_y_ + 2 * kMargin) * kPitch;
    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
       << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
    os << "<title>" << escape(title) << "</title>\n";
    os << "<rect x=\"0\" y=\"0\" width=\"" << width << "\" height=\"" << height << "\" fill=\"white\"/>\n";
    os << "<g fill=\"#bbbbbb\">\n";
    for (std::int64_t x = min_x_; x <= max_x_; ++x)
      for (std::int64_t y = min_y_; y <= max_y_; ++y)
        os << "<circle cx=\"" << px(x) << "\" cy=\"" << py(y) << "\" r=\"1.5\"/>\n";
    os << "</g>\n";
    for (const auto& s : shapes) {
      os << "<polygon points=\"";
      bool first = true;
      for (auto v : s.polygon.vertices()) {
        os << (first ? "" : " ") << px(v.x) << ',' << py(v.y);
        first = false;
      }
      os << "\" fill=\"" << s.fill << "\" fill-opacity=\"0.55\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
    }
    os << std::fixed << std::setprecision(1);
    for (const auto& s : shapes) {
      if (s.label.empty()) continue;
      const auto& v = s.polygon.vertices();
      double cx = 0, cy = 0;
      for (auto p : v) {
        cx += static_cast<double>(px(p.x));
        cy += static_cast<double>(py(p.y));
      }
      cx /= static_cast<double>(v.size());
      cy /= static_cast<double>(v.size());
      os << "<text x=\"" << cx << "\" y=\"" << cy
         << "\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"middle\">" << escape(s.label) << "</text>\n";
    }
    for (const auto& e : edge_labels) {
      const double mx = (static_cast<double>(px(e.from.x)) + static_cast<double>(px(e.to.x))) / 2 + 6;
      const double my = (static_cast<double>(py(e.from.y)) + static_cast<double>(py(e.to.y))) / 2;
      os << "<text x=\"" << mx << "\" y=\"" << my
         << "\" font-family=\"sans-serif\" font-size=\"11\" fill=\"#b00000\">" << escape(e.text) << "</text>\n";
    }
    os << "</svg>\n";
    return os.str();
  }

 private:
  static std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
      switch (c) {
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '&': out += "&amp;"; break;
        case '"': out += "&quot;"; break;
        default: out += c;
      }
    }
    return out;
  }

  std::int64_t min_x_ = 0, max_x_ = 0, min_y_ = 0, max_y_ = 0;
};

inline void add_extent(std::vector<LatticePoint>& extent, const LatticePolygon& p) {
  extent.insert(extent.end(), p.vertices().begin(), p.vertices().end());
}

}  // namespace svg

/// A single Newton polygon; when it can carry root classes, each ascending
/// right edge is labelled with its leading exponent h.
inline std::string render_polygon_svg(const LatticePolygon& p, const std::string& title = "Newton polygon") {
  if (p.empty()) throw RenderError("nothing to render: empty polygon");
  std::vector<LatticePoint> extent{{0, 0}};
  svg::add_extent(extent, p);
  std::vector<svg::EdgeLabel> labels;
  if (p.dimension() >= 1 && p.min_y() == 0 && p.min_x() >= 0) {
    for (const auto& c : right_edge_classes(p)) labels.push_back({c.start, c.start + c.edge, "h=" + to_string(c.h)});
  }
  const svg::Canvas canvas(extent);
  return canvas.render({{p, "#9ecae1", "area " + to_string(normalized_area(p))}}, labels, title);
}

/// All cells of a subdivision, coloured by kind and labelled with kind and
/// area; the right edges of the unmixed P2 cell carry their h values.
inline std::string render_subdivision_svg(const MixedSubdivision& sub, const std::string& title = "mixed subdivision") {
  if (sub.cells.empty()) throw RenderError("nothing to render: subdivision without cells");
  std::vector<LatticePoint> extent{{0, 0}};
  std::vector<svg::Shape> shapes;
  std::vector<svg::EdgeLabel> labels;
  Rational mixed_total = 0;
  for (const auto& c : sub.cells) {
    svg::add_extent(extent, c.polygon);
    const Rational area = normalized_area(c.polygon);
    std::string fill = "#fdd0a2";
    std::string label = "mixed " + to_string(area);
    if (c.kind == CellKind::unmixed_p1) {
      fill = "#c7e9c0";
      label = "P1 " + to_string(area);
    } else if (c.kind == CellKind::unmixed_p2) {
      fill = "#9ecae1";
      label = "P2 " + to_string(area);
      if (c.polygon.min_y() >= 0 && c.polygon.min_x() >= 0 && c.p2_face.min_y() == 0 && c.p2_face.min_x() >= 0) {
        const LatticePoint shift = c.p1_face.vertices().front();
        for (const auto& cls : right_edge_classes(c.p2_face))
          labels.push_back({cls.start + shift, cls.start + cls.edge + shift, "h=" + to_string(cls.h)});
      }
    } else {
      mixed_total += area;
    }
    shapes.push_back({c.polygon, fill, label});
  }
  const svg::Canvas canvas(extent);
  return canvas.render(shapes, labels, title + " (mixed cells total " + to_string(mixed_total) + ")");
}

}  // namespace minding

#endif  // MINDING_SVG_HPP

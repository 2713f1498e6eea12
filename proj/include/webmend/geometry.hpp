#pragma once

#include <algorithm>
#include <cmath>

namespace webmend {

// Axis-aligned rectangle in CSS px, y grows downward.
struct Rect {
  double x = 0;
  double y = 0;
  double w = 0;
  double h = 0;

  constexpr double left() const { return x; }
  constexpr double top() const { return y; }
  constexpr double right() const { return x + w; }
  constexpr double bottom() const { return y + h; }

  // Closed containment: touching edges count as inside.
  constexpr bool contains(const Rect& o) const {
    return o.left() >= left() && o.top() >= top() && o.right() <= right() && o.bottom() <= bottom();
  }

  constexpr bool operator==(const Rect&) const = default;
};

inline Rect united(const Rect& a, const Rect& b) {
  const double l = std::min(a.left(), b.left());
  const double t = std::min(a.top(), b.top());
  const double r = std::max(a.right(), b.right());
  const double btm = std::max(a.bottom(), b.bottom());
  return {l, t, r - l, btm - t};
}

// Area of the intersection, 0 when the rects are disjoint or only touch.
inline double overlap_area(const Rect& a, const Rect& b) {
  const double dx = std::min(a.right(), b.right()) - std::max(a.left(), b.left());
  const double dy = std::min(a.bottom(), b.bottom()) - std::max(a.top(), b.top());
  return (dx > 0 && dy > 0) ? dx * dy : 0.0;
}

// Euclidean distance between the nearest edges; 0 when the rects touch or overlap.
inline double edge_distance(const Rect& a, const Rect& b) {
  const double dx = std::max({0.0, b.left() - a.right(), a.left() - b.right()});
  const double dy = std::max({0.0, b.top() - a.bottom(), a.top() - b.bottom()});
  return std::hypot(dx, dy);
}

}  // namespace webmend

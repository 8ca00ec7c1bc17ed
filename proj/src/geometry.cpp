#include "nrd/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace nrd {

namespace {

// Points closer than this to a segment count as lying on the line.
constexpr double kOnLineTolerance = 1e-6;

constexpr double kDegreesPerRadian = 180.0 / std::numbers::pi;

}  // namespace

double distance(const Point& a, const Point& b) { return std::hypot(b.x - a.x, b.y - a.y); }

Bearing heading(const Point& a, const Point& b) {
  const double dx = b.x - a.x;
  const double dy = b.y - a.y;
  if (dx == 0.0 && dy == 0.0) {
    throw std::invalid_argument("heading: coincident points have no bearing");
  }
  double bearing = std::atan2(dx, dy) * kDegreesPerRadian;
  if (bearing < 0.0) {
    bearing += 360.0;
  }
  // -tiny + 360 rounds to 360
  return bearing >= 360.0 ? 0.0 : bearing;
}

SignedAngle normalize(double degrees) {
  double r = std::fmod(degrees, 360.0);
  if (r <= -180.0) {
    r += 360.0;
  } else if (r > 180.0) {
    r -= 360.0;
  }
  return r;
}

SignedAngle angle(const Point& tip1, const Point& tail, const Point& tip2) {
  return normalize(heading(tail, tip1) - heading(tail, tip2));
}

Polyline::Polyline(std::vector<Point> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.size() < 2) {
    throw std::invalid_argument("polyline needs at least two vertices");
  }
  cumulative_.reserve(vertices_.size());
  cumulative_.push_back(0.0);
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (!std::isfinite(vertices_[i].x) || !std::isfinite(vertices_[i].y)) {
      throw std::invalid_argument("polyline vertex has non-finite coordinates");
    }
    if (i == 0) {
      continue;
    }
    const double segment = distance(vertices_[i - 1], vertices_[i]);
    if (!(segment > 0.0)) {
      throw std::invalid_argument("polyline has a zero-length segment at vertex " +
                                  std::to_string(i));
    }
    cumulative_.push_back(cumulative_.back() + segment);
  }
}

Point Polyline::project(double d) const {
  if (!(d > 0.0)) {
    return vertices_.front();
  }
  if (d >= length()) {
    return vertices_.back();
  }
  // first vertex strictly beyond d
  const auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), d);
  const auto hi = static_cast<std::size_t>(it - cumulative_.begin());
  const std::size_t lo = hi - 1;
  const double t = (d - cumulative_[lo]) / (cumulative_[hi] - cumulative_[lo]);
  const Point& a = vertices_[lo];
  const Point& b = vertices_[hi];
  return {a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)};
}

Polyline::Foot Polyline::foot_on_segment(std::size_t segment, const Point& p) const {
  const Point& a = vertices_[segment];
  const Point& b = vertices_[segment + 1];
  const double ux = b.x - a.x;
  const double uy = b.y - a.y;
  const double seg_len = cumulative_[segment + 1] - cumulative_[segment];
  double t = ((p.x - a.x) * ux + (p.y - a.y) * uy) / (seg_len * seg_len);
  t = std::clamp(t, 0.0, 1.0);
  Point q{a.x + t * ux, a.y + t * uy};
  if (t == 1.0) {
    q = b;
  }
  return {q, cumulative_[segment] + t * seg_len, distance(p, q)};
}

Polyline::Foot Polyline::nearest(const Point& p) const {
  Foot best = foot_on_segment(0, p);
  for (std::size_t s = 1; s + 1 < vertices_.size(); ++s) {
    Foot f = foot_on_segment(s, p);
    if (f.distance < best.distance) {
      best = f;
    }
  }
  return best;
}

double Polyline::index(const Point& p) const {
  for (std::size_t s = 0; s + 1 < vertices_.size(); ++s) {
    const Foot f = foot_on_segment(s, p);
    if (f.distance <= kOnLineTolerance) {
      return f.arc_length;
    }
  }
  return nearest(p).arc_length;
}

Point Polyline::closest(const Point& p) const { return nearest(p).point; }

double Polyline::distance_to(const Point& p) const { return nearest(p).distance; }

Polyline Polyline::reversed() const {
  return Polyline(std::vector<Point>(vertices_.rbegin(), vertices_.rend()));
}

bool same_shape(const Polyline& a, const Polyline& b, double tolerance) {
  const auto va = a.vertices();
  const auto vb = b.vertices();
  if (va.size() != vb.size()) {
    return false;
  }
  for (std::size_t i = 0; i < va.size(); ++i) {
    if (distance(va[i], vb[i]) > tolerance) {
      return false;
    }
  }
  return true;
}

}  // namespace nrd

#pragma once

#include <span>
#include <vector>

namespace nrd {

/// Planar position in meters (x east, y north).
struct Point {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point&, const Point&) = default;
};

/// Degrees clockwise from north, in [0, 360).
using Bearing = double;
/// Degrees in (-180, 180].
using SignedAngle = double;

double distance(const Point& a, const Point& b);

/// Compass bearing of `b` seen from `a`. Throws std::invalid_argument when
/// the two points coincide.
Bearing heading(const Point& a, const Point& b);

/// Reduces any finite angle into (-180, 180].
SignedAngle normalize(double degrees);

/// Signed angle between the vectors tail->tip1 and tail->tip2, computed as
/// normalize(heading(tail, tip1) - heading(tail, tip2)). Negative when tip2
/// lies clockwise of tip1.
SignedAngle angle(const Point& tip1, const Point& tail, const Point& tip2);

/// A directed linestring indexed by arc length.
///
/// Construction rejects fewer than two vertices, non-finite coordinates and
/// zero-length segments, so cumulative lengths are strictly increasing.
class Polyline {
 public:
  explicit Polyline(std::vector<Point> vertices);

  std::span<const Point> vertices() const { return vertices_; }
  const Point& front() const { return vertices_.front(); }
  const Point& back() const { return vertices_.back(); }
  double length() const { return cumulative_.back(); }

  /// Point at arc length `d`, with `d` clamped to [0, length].
  Point project(double d) const;

  /// Arc length of `p` along the line. Off-line points resolve to their
  /// closest point; when the line passes through `p` more than once the
  /// smallest arc length wins.
  double index(const Point& p) const;

  /// Closest point of the line to `p`; ties go to the smallest arc length.
  Point closest(const Point& p) const;

  double distance_to(const Point& p) const;

  Polyline reversed() const;

 private:
  struct Foot {
    Point point;
    double arc_length;
    double distance;
  };
  Foot foot_on_segment(std::size_t segment, const Point& p) const;
  Foot nearest(const Point& p) const;

  std::vector<Point> vertices_;
  std::vector<double> cumulative_;
};

inline double length(const Polyline& line) { return line.length(); }
inline Point project(const Polyline& line, double d) { return line.project(d); }
inline double index(const Polyline& line, const Point& p) { return line.index(p); }
inline Point closest(const Polyline& line, const Point& p) { return line.closest(p); }
inline double distance_to_line(const Polyline& line, const Point& p) { return line.distance_to(p); }

/// True when both lines have the same vertex count and every vertex pair is
/// within `tolerance` meters.
bool same_shape(const Polyline& a, const Polyline& b, double tolerance);

}  // namespace nrd

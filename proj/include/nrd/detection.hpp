#pragma once

#include <vector>

#include "nrd/geometry.hpp"
#include "nrd/network.hpp"
#include "nrd/sign_inventory.hpp"

namespace nrd {

struct DetectionConfig {
  double node_radius = 15.0;
  double edge_radius = 10.0;
  double lookback = 10.0;
  double visibility_half_angle = 80.0;

  /// Throws std::invalid_argument unless every value is positive and the
  /// half angle is below 90 degrees.
  void validate() const;
};

/// A sign seen by one of the detectors, with the position it was seen from.
struct Detection {
  SignIndex sign = 0;
  Point observer;
};

/// Types answered by each detector; the two sets are disjoint.
bool detected_from_nodes(SignType type);
bool detected_along_edges(SignType type);

/// |normalize(heading(observer, sign) - azimuth)| <= half angle. An observer
/// standing on the sign sees it.
bool is_visible(const Point& observer, const Sign& sign, const DetectionConfig& cfg);

/// No-way and one-way signs within node_radius of the intersection that face it.
std::vector<Detection> detect_signs_from(const Node& node, const SignInventory& inventory,
                                         const DetectionConfig& cfg);

/// Turn signs beside the edge, seen from `lookback` meters before the point
/// of the edge closest to them. Signs whose closest point is an endpoint are
/// left to the intersection detector.
std::vector<Detection> detect_signs_along(const DirectedEdge& edge, const SignInventory& inventory,
                                          const DetectionConfig& cfg);

}  // namespace nrd

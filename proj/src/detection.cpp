#include "nrd/detection.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace nrd {

void DetectionConfig::validate() const {
  if (!(node_radius > 0.0) || !(edge_radius > 0.0) || !(lookback > 0.0) ||
      !(visibility_half_angle > 0.0)) {
    throw std::invalid_argument("detection thresholds must be positive");
  }
  if (!(visibility_half_angle < 90.0)) {
    throw std::invalid_argument("visibility half angle must be below 90 degrees");
  }
}

bool detected_from_nodes(SignType type) {
  switch (type) {
    case SignType::R101:
    case SignType::R400a:
    case SignType::R400b:
    case SignType::R400c:
      return true;
    default:
      return false;
  }
}

bool detected_along_edges(SignType type) {
  switch (type) {
    case SignType::R302:
    case SignType::R303:
    case SignType::R400d:
    case SignType::R400e:
      return true;
    default:
      return false;
  }
}

bool is_visible(const Point& observer, const Sign& sign, const DetectionConfig& cfg) {
  if (observer == sign.position) {
    return true;
  }
  return std::abs(normalize(heading(observer, sign.position) - sign.azimuth)) <=
         cfg.visibility_half_angle;
}

std::vector<Detection> detect_signs_from(const Node& node, const SignInventory& inventory,
                                         const DetectionConfig& cfg) {
  std::vector<Detection> found;
  for (SignIndex s : inventory.signs_within(node.position, cfg.node_radius)) {
    const Sign& sign = inventory.sign(s);
    if (detected_from_nodes(sign.type) && is_visible(node.position, sign, cfg)) {
      found.push_back({s, node.position});
    }
  }
  return found;
}

std::vector<Detection> detect_signs_along(const DirectedEdge& edge, const SignInventory& inventory,
                                          const DetectionConfig& cfg) {
  const Polyline& line = edge.geometry;
  std::vector<Detection> found;
  for (SignIndex s : inventory.signs_within_line(line, cfg.edge_radius)) {
    const Sign& sign = inventory.sign(s);
    if (!detected_along_edges(sign.type)) {
      continue;
    }
    const double sign_proj = line.index(line.closest(sign.position));
    if (sign_proj <= 0.0 || sign_proj >= line.length()) {
      continue;
    }
    const Point observer = line.project(std::max(0.0, sign_proj - cfg.lookback));
    if (is_visible(observer, sign, cfg)) {
      found.push_back({s, observer});
    }
  }
  return found;
}

}  // namespace nrd

#include "nrd/navigator.hpp"

#include <algorithm>
#include <stdexcept>

namespace nrd {

namespace {

bool restricted(const DerivationState& state, EdgeIndex current, EdgeIndex candidate) {
  return state.banned(candidate) || state.turn_forbidden(current, candidate);
}

}  // namespace

bool is_navigation_forbidden(const RoadGraph& graph, const DerivationState& state,
                             EdgeIndex current, EdgeIndex candidate) {
  if (restricted(state, current, candidate)) {
    return true;
  }
  if (graph.opposite_of(current) != candidate) {
    return false;
  }
  // U-turns only when nothing else is left.
  const auto& outgoing = graph.outgoing_edges(graph.edge(current).destination);
  return std::any_of(outgoing.begin(), outgoing.end(), [&](EdgeIndex other) {
    return other != candidate && !restricted(state, current, other);
  });
}

Navigator::Navigator(const RoadGraph& graph, const SignInventory& inventory, DetectionConfig cfg)
    : graph_(graph),
      inventory_(inventory),
      cfg_(cfg),
      state_(graph.edge_count(), inventory.size()) {
  cfg_.validate();
}

void Navigator::drive_from(EdgeIndex start) {
  if (start >= graph_.edge_count()) {
    throw std::out_of_range("start edge out of range");
  }
  if (!state_.visited(start)) {
    state_.mark_visited(start);
    frontier_.push_back(start);
  }
  while (!frontier_.empty()) {
    const EdgeIndex current = frontier_.front();
    frontier_.pop_front();
    ++pops_;
    step(current);
  }
}

void Navigator::step(EdgeIndex current) {
  const DirectedEdge& edge = graph_.edge(current);
  const Node& node = graph_.node(edge.destination);

  std::vector<SignIndex> signs;
  for (const auto& d : detect_signs_along(edge, inventory_, cfg_)) {
    signs.push_back(d.sign);
  }
  for (const auto& d : detect_signs_from(node, inventory_, cfg_)) {
    signs.push_back(d.sign);
  }
  std::sort(signs.begin(), signs.end());
  analyze_signs(graph_, inventory_, signs, current, state_, frontier_);

  for (EdgeIndex next : node.outgoing) {
    if (!state_.visited(next) && !is_navigation_forbidden(graph_, state_, current, next)) {
      state_.mark_visited(next);
      frontier_.push_back(next);
    }
  }
}

void Navigator::cover_remaining() {
  for (EdgeIndex e = 0; e < graph_.edge_count(); ++e) {
    if (!state_.visited(e) && !state_.banned(e)) {
      drive_from(e);
    }
  }
}

DerivationResult Navigator::result() const {
  DerivationResult r;
  for (SignIndex s = 0; s < state_.sign_count(); ++s) {
    if (const auto& rule = state_.rule_of(s)) {
      r.rules.push_back(*rule);
    }
  }
  for (EdgeIndex e = 0; e < graph_.edge_count(); ++e) {
    (state_.visited(e) ? r.visited_edges : r.unreached_edges).push_back(e);
    if (state_.banned(e)) {
      r.banned_edges.push_back(e);
    }
  }
  r.pops = pops_;
  return r;
}

DerivationResult assign_signs(const RoadGraph& graph, const SignInventory& inventory,
                              EdgeIndex start, const DetectionConfig& cfg) {
  Navigator nav(graph, inventory, cfg);
  nav.drive_from(start);
  return nav.result();
}

DerivationResult derive_rules(const RoadGraph& graph, const SignInventory& inventory,
                              const DetectionConfig& cfg, std::span<const EdgeIndex> starts,
                              bool cover_all) {
  if (starts.empty() && !cover_all) {
    throw std::invalid_argument("derive_rules needs a start edge or cover_all");
  }
  Navigator nav(graph, inventory, cfg);
  for (EdgeIndex s : starts) {
    nav.drive_from(s);
  }
  if (cover_all) {
    nav.cover_remaining();
  }
  return nav.result();
}

}  // namespace nrd

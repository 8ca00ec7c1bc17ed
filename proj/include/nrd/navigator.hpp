#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "nrd/detection.hpp"
#include "nrd/network.hpp"
#include "nrd/rule_engine.hpp"
#include "nrd/sign_inventory.hpp"

namespace nrd {

struct DerivationResult {
  std::vector<Rule> rules;                // installed rules, ascending by sign
  std::vector<EdgeIndex> visited_edges;   // ascending
  std::vector<EdgeIndex> unreached_edges; // ascending
  std::vector<EdgeIndex> banned_edges;    // ascending, bans in force at the end
  std::size_t pops = 0;                   // edges taken off the frontier
};

/// True if moving from `current` into `candidate` is not allowed: the
/// candidate is banned, a turn restriction covers the pair, or the candidate
/// is the U-turn while some other exit survives the first two checks.
bool is_navigation_forbidden(const RoadGraph& graph, const DerivationState& state,
                             EdgeIndex current, EdgeIndex candidate);

/// Simulated drive over one graph and sign inventory. State is shared by
/// every `drive_from` call on the same object.
class Navigator {
 public:
  Navigator(const RoadGraph& graph, const SignInventory& inventory, DetectionConfig cfg = {});

  /// Pushes `start` (unless already visited) and drives until the frontier
  /// is empty.
  void drive_from(EdgeIndex start);
  /// Restarts from the smallest unvisited, unbanned edge until none is left.
  void cover_remaining();

  const DerivationState& state() const { return state_; }
  DerivationResult result() const;

 private:
  void step(EdgeIndex current);

  const RoadGraph& graph_;
  const SignInventory& inventory_;
  DetectionConfig cfg_;
  DerivationState state_;
  Frontier frontier_;
  std::size_t pops_ = 0;
};

/// The NRD loop from a single start edge.
DerivationResult assign_signs(const RoadGraph& graph, const SignInventory& inventory,
                              EdgeIndex start, const DetectionConfig& cfg = {});

/// Runs assign_signs from each start in turn on shared state; with
/// `cover_all`, keeps restarting until every unbanned edge is visited.
/// Throws std::invalid_argument when `starts` is empty and `cover_all` is off.
DerivationResult derive_rules(const RoadGraph& graph, const SignInventory& inventory,
                              const DetectionConfig& cfg, std::span<const EdgeIndex> starts,
                              bool cover_all = false);

}  // namespace nrd

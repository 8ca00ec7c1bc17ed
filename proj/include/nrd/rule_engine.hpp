#pragma once

#include <deque>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <variant>
#include <vector>

#include "nrd/network.hpp"
#include "nrd/sign_inventory.hpp"

namespace nrd {

/// Global ban on entering one edge (R-101).
struct NoWayRule {
  EdgeIndex banned_edge = 0;
};

/// Global bans on every exit of an intersection but the mandated one
/// (R-400a/b/c).
struct OneWayRule {
  std::vector<EdgeIndex> banned_edges;  // ascending
  EdgeIndex chosen = 0;
};

/// Pairwise bans from one edge into a set of exits (R-302/R-303 ban one,
/// R-400d/R-400e ban all but the mandated turn).
struct NoTurnRule {
  EdgeIndex from = 0;
  std::vector<EdgeIndex> banned_to;  // ascending
};

struct Rule {
  std::variant<NoWayRule, OneWayRule, NoTurnRule> kind;
  SignIndex source_sign = 0;
  double score = 0.0;
};

/// Edges banned outright by a rule (empty for turn restrictions).
std::vector<EdgeIndex> globally_banned_edges(const Rule& rule);

struct ScoredEdge {
  EdgeIndex edge = 0;
  double score = 0.0;
};

using Frontier = std::deque<EdgeIndex>;

/// Mutable bookkeeping of one derivation run: visited flags, reference-counted
/// bans, turn restrictions and the rule held by every sign.
class DerivationState {
 public:
  DerivationState(std::size_t edge_count, std::size_t sign_count);

  bool visited(EdgeIndex e) const { return visited_.at(e) != 0; }
  void mark_visited(EdgeIndex e) { visited_.at(e) = 1; }

  bool banned(EdgeIndex e) const { return ban_count_.at(e) > 0; }
  int ban_count(EdgeIndex e) const { return ban_count_.at(e); }
  bool turn_forbidden(EdgeIndex from, EdgeIndex to) const;

  const std::optional<Rule>& rule_of(SignIndex s) const { return rules_.at(s); }
  std::size_t sign_count() const { return rules_.size(); }
  std::size_t edge_count() const { return visited_.size(); }

  /// Installs `rule` for its sign; the sign must not hold a rule.
  void install(Rule rule);
  /// Removes the sign's rule and returns the edges it stopped restricting:
  /// bans that dropped to zero and turn destinations no longer forbidden.
  std::vector<EdgeIndex> revoke(SignIndex s);

 private:
  std::vector<char> visited_;
  std::vector<int> ban_count_;
  std::map<std::pair<EdgeIndex, EdgeIndex>, int> turn_count_;
  std::vector<std::optional<Rule>> rules_;
};

// Scoring. Every function takes the exits of the reached intersection and
// returns the best one; ties go to the smaller edge id. `outgoing` must not
// be empty.

/// R-101: the exit most aligned with the node->sign direction; exits right
/// of the sign (angle below -10 degrees) lose a further 30 degrees.
ScoredEdge best_no_way_edge(const RoadGraph& graph, const Sign& sign, NodeIndex node,
                            std::span<const EdgeIndex> outgoing);

/// R-302/R-303: exit closest to a right (or left) turn from `current`.
ScoredEdge best_no_turn_edge(const RoadGraph& graph, const Sign& sign, EdgeIndex current,
                             std::span<const EdgeIndex> outgoing);

/// R-400a/b/c: exit closest to the mandated direction (azimuth +90, -90, +0).
ScoredEdge best_one_way_edge(const RoadGraph& graph, const Sign& sign, NodeIndex node,
                             std::span<const EdgeIndex> outgoing);

/// R-400d/e: same geometry as best_no_turn_edge; returns the mandated exit.
ScoredEdge best_must_turn_edge(const RoadGraph& graph, const Sign& sign, EdgeIndex current,
                               std::span<const EdgeIndex> outgoing);

/// Installs `candidate` if it beats the rule its sign already holds.
/// Replacing a rule frees its restrictions; freed edges that are unvisited
/// and not banned are marked visited and pushed onto the frontier.
/// Returns true when the candidate was installed.
bool associate_new_rule(DerivationState& state, Rule candidate, Frontier& frontier);

/// Scores each sign (ascending order) against the exits of `current`'s
/// destination and installs the resulting rules. Returns the rules held by
/// the processed signs afterwards.
std::vector<Rule> analyze_signs(const RoadGraph& graph, const SignInventory& inventory,
                                std::span<const SignIndex> signs, EdgeIndex current,
                                DerivationState& state, Frontier& frontier);

}  // namespace nrd

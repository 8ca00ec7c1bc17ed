#include "nrd/rule_engine.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace nrd {

namespace {

// Fixed distances used by the scoring geometry.
constexpr double kProbeDistance = 10.0;
constexpr double kRightSideThreshold = -10.0;
constexpr double kRightSidePenalty = 30.0;
constexpr double kNoWayBase = 90.0;
constexpr double kTurnBase = 60.0;
constexpr double kOneWayBase = 90.0;

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};

void require_outgoing(std::span<const EdgeIndex> outgoing) {
  if (outgoing.empty()) {
    throw std::invalid_argument("scoring needs at least one outgoing edge");
  }
}

// Point `d` meters along `line`, moved to the middle of the line if it lands
// on `anchor` (only possible for loop edges).
Point probe(const Polyline& line, double d, const Point& anchor) {
  Point p = line.project(d);
  if (p == anchor) {
    p = line.project(line.length() / 2.0);
  }
  return p;
}

template <class ScoreFn>
ScoredEdge argmax(std::span<const EdgeIndex> outgoing, ScoreFn&& score_of) {
  ScoredEdge best{outgoing.front(), -std::numeric_limits<double>::infinity()};
  for (EdgeIndex e : outgoing) {
    const double s = score_of(e);
    if (s > best.score) {
      best = {e, s};
    }
  }
  return best;
}

// Shared geometry of the turn signs: angle between the approach (tip on the
// current edge beside the sign) and the first 10 m of each exit, shifted by
// the turn offset so that the targeted turn scores highest.
ScoredEdge best_turn_edge(const RoadGraph& graph, const Sign& sign, EdgeIndex current,
                          std::span<const EdgeIndex> outgoing, double offset) {
  require_outgoing(outgoing);
  const DirectedEdge& approach = graph.edge(current);
  const Point& node = graph.node(approach.destination).position;
  const Polyline& line = approach.geometry;
  double sign_proj = line.index(line.closest(sign.position));
  if (sign_proj >= line.length()) {
    sign_proj = std::max(0.0, line.length() - kProbeDistance);
  }
  const Point back = probe(line, sign_proj, node);
  return argmax(outgoing, [&](EdgeIndex e) {
    const Point tip = probe(graph.edge(e).geometry, kProbeDistance, node);
    const double alpha = normalize(angle(back, node, tip) + offset);
    return kTurnBase - std::abs(alpha);
  });
}

std::vector<EdgeIndex> all_but(std::span<const EdgeIndex> outgoing, EdgeIndex keep) {
  std::vector<EdgeIndex> out;
  for (EdgeIndex e : outgoing) {
    if (e != keep) {
      out.push_back(e);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<EdgeIndex> globally_banned_edges(const Rule& rule) {
  return std::visit(Overloaded{
                        [](const NoWayRule& r) { return std::vector<EdgeIndex>{r.banned_edge}; },
                        [](const OneWayRule& r) { return r.banned_edges; },
                        [](const NoTurnRule&) { return std::vector<EdgeIndex>{}; },
                    },
                    rule.kind);
}

DerivationState::DerivationState(std::size_t edge_count, std::size_t sign_count)
    : visited_(edge_count, 0), ban_count_(edge_count, 0), rules_(sign_count) {}

bool DerivationState::turn_forbidden(EdgeIndex from, EdgeIndex to) const {
  const auto it = turn_count_.find({from, to});
  return it != turn_count_.end() && it->second > 0;
}

void DerivationState::install(Rule rule) {
  auto& slot = rules_.at(rule.source_sign);
  if (slot) {
    throw std::logic_error("sign already holds a rule");
  }
  for (EdgeIndex e : globally_banned_edges(rule)) {
    ++ban_count_.at(e);
  }
  if (const auto* turn = std::get_if<NoTurnRule>(&rule.kind)) {
    for (EdgeIndex to : turn->banned_to) {
      ++turn_count_[{turn->from, to}];
    }
  }
  slot = std::move(rule);
}

std::vector<EdgeIndex> DerivationState::revoke(SignIndex s) {
  auto& slot = rules_.at(s);
  std::vector<EdgeIndex> freed;
  if (!slot) {
    return freed;
  }
  for (EdgeIndex e : globally_banned_edges(*slot)) {
    if (--ban_count_.at(e) == 0) {
      freed.push_back(e);
    }
  }
  if (const auto* turn = std::get_if<NoTurnRule>(&slot->kind)) {
    for (EdgeIndex to : turn->banned_to) {
      const auto it = turn_count_.find({turn->from, to});
      if (--it->second == 0) {
        turn_count_.erase(it);
        freed.push_back(to);
      }
    }
  }
  slot.reset();
  return freed;
}

ScoredEdge best_no_way_edge(const RoadGraph& graph, const Sign& sign, NodeIndex node,
                            std::span<const EdgeIndex> outgoing) {
  require_outgoing(outgoing);
  const Point& origin = graph.node(node).position;
  if (sign.position == origin) {
    return {outgoing.front(), -std::numeric_limits<double>::infinity()};
  }
  return argmax(outgoing, [&](EdgeIndex e) {
    const Polyline& line = graph.edge(e).geometry;
    double sign_proj = line.index(line.closest(sign.position));
    if (sign_proj <= 0.0) {
      sign_proj = kProbeDistance;
    }
    double alpha = angle(sign.position, origin, probe(line, sign_proj, origin));
    if (alpha < kRightSideThreshold) {
      alpha -= kRightSidePenalty;
    }
    return kNoWayBase - std::abs(alpha);
  });
}

ScoredEdge best_no_turn_edge(const RoadGraph& graph, const Sign& sign, EdgeIndex current,
                             std::span<const EdgeIndex> outgoing) {
  switch (sign.type) {
    case SignType::R302:
      return best_turn_edge(graph, sign, current, outgoing, -90.0);
    case SignType::R303:
      return best_turn_edge(graph, sign, current, outgoing, 90.0);
    default:
      throw std::invalid_argument("best_no_turn_edge expects an R-302 or R-303 sign");
  }
}

ScoredEdge best_must_turn_edge(const RoadGraph& graph, const Sign& sign, EdgeIndex current,
                               std::span<const EdgeIndex> outgoing) {
  switch (sign.type) {
    case SignType::R400d:
      return best_turn_edge(graph, sign, current, outgoing, -90.0);
    case SignType::R400e:
      return best_turn_edge(graph, sign, current, outgoing, 90.0);
    default:
      throw std::invalid_argument("best_must_turn_edge expects an R-400d or R-400e sign");
  }
}

ScoredEdge best_one_way_edge(const RoadGraph& graph, const Sign& sign, NodeIndex node,
                             std::span<const EdgeIndex> outgoing) {
  require_outgoing(outgoing);
  double target = sign.azimuth;
  switch (sign.type) {
    case SignType::R400a:
      target += 90.0;
      break;
    case SignType::R400b:
      target -= 90.0;
      break;
    case SignType::R400c:
      break;
    default:
      throw std::invalid_argument("best_one_way_edge expects an R-400a, R-400b or R-400c sign");
  }
  const Point& origin = graph.node(node).position;
  return argmax(outgoing, [&](EdgeIndex e) {
    const Point tip = probe(graph.edge(e).geometry, kProbeDistance, origin);
    return kOneWayBase - std::abs(normalize(target - heading(origin, tip)));
  });
}

bool associate_new_rule(DerivationState& state, Rule candidate, Frontier& frontier) {
  if (!(candidate.score > 0.0)) {
    return false;
  }
  const auto& held = state.rule_of(candidate.source_sign);
  if (held) {
    if (!(candidate.score > held->score)) {
      return false;
    }
    for (EdgeIndex e : state.revoke(candidate.source_sign)) {
      if (!state.visited(e) && !state.banned(e)) {
        state.mark_visited(e);
        frontier.push_back(e);
      }
    }
  }
  state.install(std::move(candidate));
  return true;
}

std::vector<Rule> analyze_signs(const RoadGraph& graph, const SignInventory& inventory,
                                std::span<const SignIndex> signs, EdgeIndex current,
                                DerivationState& state, Frontier& frontier) {
  const NodeIndex node = graph.edge(current).destination;
  const auto& outgoing = graph.outgoing_edges(node);
  std::vector<Rule> held;
  if (outgoing.empty()) {
    return held;
  }
  for (SignIndex s : signs) {
    const Sign& sign = inventory.sign(s);
    std::optional<Rule> candidate;
    switch (sign.type) {
      case SignType::R101: {
        const auto best = best_no_way_edge(graph, sign, node, outgoing);
        candidate = Rule{NoWayRule{best.edge}, s, best.score};
        break;
      }
      case SignType::R302:
      case SignType::R303: {
        const auto best = best_no_turn_edge(graph, sign, current, outgoing);
        candidate = Rule{NoTurnRule{current, {best.edge}}, s, best.score};
        break;
      }
      case SignType::R400a:
      case SignType::R400b:
      case SignType::R400c: {
        const auto best = best_one_way_edge(graph, sign, node, outgoing);
        auto banned = all_but(outgoing, best.edge);
        if (!banned.empty()) {
          candidate = Rule{OneWayRule{std::move(banned), best.edge}, s, best.score};
        }
        break;
      }
      case SignType::R400d:
      case SignType::R400e: {
        const auto best = best_must_turn_edge(graph, sign, current, outgoing);
        auto banned = all_but(outgoing, best.edge);
        if (!banned.empty()) {
          candidate = Rule{NoTurnRule{current, std::move(banned)}, s, best.score};
        }
        break;
      }
    }
    if (candidate) {
      associate_new_rule(state, std::move(*candidate), frontier);
    }
  }
  for (SignIndex s : signs) {
    if (const auto& rule = state.rule_of(s)) {
      held.push_back(*rule);
    }
  }
  return held;
}

}  // namespace nrd

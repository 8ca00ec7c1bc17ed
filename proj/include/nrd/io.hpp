#pragma once

#include <filesystem>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "nrd/navigator.hpp"
#include "nrd/network.hpp"
#include "nrd/sign_inventory.hpp"

namespace nrd {

/// Unreadable files, malformed JSON/GeoJSON, missing or invalid fields.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Local equirectangular projection (meters) around a reference lon/lat.
class LocalProjection {
 public:
  LocalProjection(double lon0, double lat0);

  Point forward(double lon, double lat) const;
  std::pair<double, double> inverse(const Point& p) const;  // (lon, lat)

  double lon0() const { return lon0_; }
  double lat0() const { return lat0_; }

 private:
  double lon0_;
  double lat0_;
  double meters_per_degree_lon_;
  double meters_per_degree_lat_;
};

struct LoadedNetwork {
  RoadGraph graph;
  std::optional<LocalProjection> projection;  // set for lon/lat input
};

struct LoadedSigns {
  SignInventory inventory;
  std::vector<std::string> warnings;  // one per rejected feature
};

nlohmann::json read_json(const std::filesystem::path& path);
/// Writes `doc` pretty-printed with a trailing newline.
void write_json(const nlohmann::json& doc, const std::filesystem::path& path);

/// FeatureCollection of LineString edges {edge_id, source_node, target_node,
/// opposite_id?} and optional Point nodes {node_id}. Node positions missing
/// from the file are taken from the edge endpoints.
LoadedNetwork parse_network(const nlohmann::json& doc);
LoadedNetwork load_network(const std::filesystem::path& path);

/// FeatureCollection of Point signs {sign_id, type, azimuth}. Lon/lat sign
/// files need the projection of their network.
LoadedSigns parse_signs(const nlohmann::json& doc,
                        const std::optional<LocalProjection>& projection = std::nullopt);
LoadedSigns load_signs(const std::filesystem::path& path,
                       const std::optional<LocalProjection>& projection = std::nullopt);

// Serialized derivation output, keyed by ids.

struct NoWayEntry {
  EdgeId edge;
  SignId sign;
  double score = 0.0;
};

struct OneWayEntry {
  EdgeId chosen;
  std::vector<EdgeId> banned;
  SignId sign;
  double score = 0.0;
};

struct NoTurnEntry {
  EdgeId from;
  std::vector<EdgeId> banned_to;
  SignId sign;
  double score = 0.0;
};

struct RuleDocument {
  std::vector<NoWayEntry> no_way;
  std::vector<OneWayEntry> one_way;
  std::vector<NoTurnEntry> no_turn;
  std::vector<EdgeId> unreached;

  /// Edges banned by no-way and one-way entries.
  std::set<EdgeId> banned_edges() const;
  /// Every (from, to) pair forbidden by no-turn entries.
  std::set<std::pair<EdgeId, EdgeId>> turn_pairs() const;
};

RuleDocument to_document(const DerivationResult& result, const RoadGraph& graph,
                         const SignInventory& inventory);
nlohmann::json to_json(const RuleDocument& doc);
RuleDocument parse_rules(const nlohmann::json& doc);
void write_rules(const RuleDocument& doc, const std::filesystem::path& path);
RuleDocument read_rules(const std::filesystem::path& path);

struct GroundTruth {
  std::set<EdgeId> one_way_banned_edges;
  std::set<std::pair<EdgeId, EdgeId>> turn_restrictions;
};

nlohmann::json to_json(const GroundTruth& truth);
GroundTruth parse_truth(const nlohmann::json& doc);
GroundTruth read_truth(const std::filesystem::path& path);

struct FamilyAccuracy {
  std::size_t total_mapped = 0;
  std::size_t incorrect = 0;
  std::optional<double> accuracy;  // percent, two decimals; empty when nothing was mapped
};

struct AccuracyReport {
  FamilyAccuracy one_way;
  FamilyAccuracy turn_restrictions;
};

/// 100 * (total - incorrect) / total rounded to two decimals; nullopt for
/// total == 0. Throws std::invalid_argument when incorrect > total.
std::optional<double> accuracy_percent(std::size_t total, std::size_t incorrect);
/// "88.57", or "n/a".
std::string format_percent(const std::optional<double>& percent);

/// Scores derived rules against ground truth: one-way family compares
/// globally banned edges, turn family compares expanded (from, to) pairs.
/// With a graph, every id must resolve in it (InputError otherwise).
AccuracyReport validate(const RuleDocument& rules, const GroundTruth& truth,
                        const RoadGraph* graph = nullptr);
nlohmann::json to_json(const AccuracyReport& report);
/// Plain-text table, one line per rule family.
std::string format_report(const AccuracyReport& report);

/// GeoJSON overlay: edges with status visited/banned/unreached and signs
/// with their rule linkage. Coordinates go back to lon/lat when a
/// projection is given.
nlohmann::json render_overlay(const RuleDocument& rules, const RoadGraph& graph,
                              const SignInventory& inventory,
                              const std::optional<LocalProjection>& projection = std::nullopt);

}  // namespace nrd

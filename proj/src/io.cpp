#include "nrd/io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <numbers>
#include <sstream>

namespace nrd {

using nlohmann::json;

namespace {

constexpr double kEarthRadius = 6371008.8;  // mean radius, meters

std::string feature_label(std::size_t i) { return "feature " + std::to_string(i); }

const json& member(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object() || !obj.contains(key)) {
    throw InputError(where + ": missing '" + key + "'");
  }
  return obj.at(key);
}

std::string id_value(const json& v, const std::string& where) {
  if (v.is_string()) {
    return v.get<std::string>();
  }
  if (v.is_number_integer()) {
    return v.dump();
  }
  throw InputError(where + ": id must be a string or an integer");
}

double number_value(const json& v, const std::string& where) {
  if (!v.is_number()) {
    throw InputError(where + ": expected a number");
  }
  return v.get<double>();
}

const json& features_of(const json& doc) {
  if (!doc.is_object() || doc.value("type", "") != "FeatureCollection") {
    throw InputError("expected a GeoJSON FeatureCollection");
  }
  const json& features = member(doc, "features", "FeatureCollection");
  if (!features.is_array()) {
    throw InputError("'features' must be an array");
  }
  return features;
}

bool is_lonlat(const json& doc) {
  const std::string system = doc.value("coordinate_system", "planar");
  if (system == "planar") {
    return false;
  }
  if (system == "lonlat") {
    return true;
  }
  throw InputError("unknown coordinate_system '" + system + "'");
}

std::pair<double, double> raw_position(const json& coords, const std::string& where) {
  if (!coords.is_array() || coords.size() < 2) {
    throw InputError(where + ": position needs two coordinates");
  }
  return {number_value(coords[0], where), number_value(coords[1], where)};
}

json position_json(const Point& p, const std::optional<LocalProjection>& projection) {
  if (projection) {
    const auto [lon, lat] = projection->inverse(p);
    return json::array({lon, lat});
  }
  return json::array({p.x, p.y});
}

json ids_json(const std::vector<EdgeId>& ids) { return json(ids); }

std::vector<EdgeId> ids_from(const json& v, const std::string& where) {
  if (!v.is_array()) {
    throw InputError(where + ": expected an array of ids");
  }
  std::vector<EdgeId> out;
  for (const auto& item : v) {
    out.push_back(id_value(item, where));
  }
  return out;
}

}  // namespace

LocalProjection::LocalProjection(double lon0, double lat0)
    : lon0_(lon0),
      lat0_(lat0),
      meters_per_degree_lon_(kEarthRadius * std::numbers::pi / 180.0 *
                             std::cos(lat0 * std::numbers::pi / 180.0)),
      meters_per_degree_lat_(kEarthRadius * std::numbers::pi / 180.0) {}

Point LocalProjection::forward(double lon, double lat) const {
  return {(lon - lon0_) * meters_per_degree_lon_, (lat - lat0_) * meters_per_degree_lat_};
}

std::pair<double, double> LocalProjection::inverse(const Point& p) const {
  return {lon0_ + p.x / meters_per_degree_lon_, lat0_ + p.y / meters_per_degree_lat_};
}

json read_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw InputError("cannot open '" + path.string() + "'");
  }
  try {
    return json::parse(in);
  } catch (const json::parse_error& ex) {
    throw InputError("'" + path.string() + "' is not valid JSON: " + ex.what());
  }
}

void write_json(const json& doc, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw InputError("cannot write '" + path.string() + "'");
  }
  out << doc.dump(2) << '\n';
  if (!out) {
    throw InputError("failed writing '" + path.string() + "'");
  }
}

LoadedNetwork parse_network(const json& doc) {
  const json& features = features_of(doc);
  const bool lonlat = is_lonlat(doc);

  struct RawEdge {
    std::size_t feature;
    EdgeSpec spec;
    std::vector<std::pair<double, double>> coords;
    std::optional<EdgeId> opposite;
  };
  std::vector<RawEdge> raw_edges;
  std::map<NodeId, std::pair<double, double>> explicit_nodes;
  std::map<EdgeId, std::size_t> edge_feature;

  for (std::size_t i = 0; i < features.size(); ++i) {
    const std::string where = feature_label(i);
    const json& f = features[i];
    const json& geometry = member(f, "geometry", where);
    const json& props = member(f, "properties", where);
    const std::string type = member(geometry, "type", where).get<std::string>();
    const json& coords = member(geometry, "coordinates", where);
    if (type == "Point") {
      const NodeId id = id_value(member(props, "node_id", where), where);
      if (!explicit_nodes.emplace(id, raw_position(coords, where)).second) {
        throw InputError(where + ": duplicate node_id '" + id + "'");
      }
    } else if (type == "LineString") {
      RawEdge e;
      e.feature = i;
      e.spec.id = id_value(member(props, "edge_id", where), where);
      e.spec.source = id_value(member(props, "source_node", where), where);
      e.spec.destination = id_value(member(props, "target_node", where), where);
      if (props.contains("opposite_id") && !props.at("opposite_id").is_null()) {
        e.opposite = id_value(props.at("opposite_id"), where);
      }
      if (!coords.is_array() || coords.size() < 2) {
        throw InputError(where + ": LineString '" + e.spec.id + "' needs at least two positions");
      }
      for (const auto& c : coords) {
        e.coords.push_back(raw_position(c, where));
      }
      const auto [it, fresh] = edge_feature.emplace(e.spec.id, i);
      if (!fresh) {
        throw InputError("duplicate edge_id '" + e.spec.id + "' in " +
                         feature_label(it->second) + " and " + where);
      }
      raw_edges.push_back(std::move(e));
    } else {
      throw InputError(where + ": unsupported geometry type '" + type + "'");
    }
  }

  std::optional<LocalProjection> projection;
  if (lonlat) {
    double sum_lon = 0.0;
    double sum_lat = 0.0;
    std::size_t count = 0;
    for (const auto& e : raw_edges) {
      for (const auto& [lon, lat] : e.coords) {
        sum_lon += lon;
        sum_lat += lat;
        ++count;
      }
    }
    for (const auto& [id, pos] : explicit_nodes) {
      sum_lon += pos.first;
      sum_lat += pos.second;
      ++count;
    }
    projection.emplace(count ? sum_lon / count : 0.0, count ? sum_lat / count : 0.0);
  }
  auto to_point = [&](const std::pair<double, double>& c) {
    return projection ? projection->forward(c.first, c.second) : Point{c.first, c.second};
  };

  std::map<NodeId, Point> positions;
  for (const auto& [id, pos] : explicit_nodes) {
    positions.emplace(id, to_point(pos));
  }
  std::vector<EdgeSpec> edges;
  bool any_opposite = false;
  std::map<EdgeId, EdgeId> declared;
  for (auto& e : raw_edges) {
    for (const auto& c : e.coords) {
      e.spec.geometry.push_back(to_point(c));
    }
    positions.emplace(e.spec.source, e.spec.geometry.front());
    positions.emplace(e.spec.destination, e.spec.geometry.back());
    if (e.opposite) {
      any_opposite = true;
      declared.emplace(e.spec.id, *e.opposite);
    }
    edges.push_back(std::move(e.spec));
  }

  std::optional<OppositePairs> pairs;
  if (any_opposite) {
    pairs.emplace();
    for (const auto& [a, b] : declared) {
      const auto back = declared.find(b);
      if (back == declared.end() || back->second != a) {
        throw GraphError("edge '" + a + "' names '" + b +
                         "' as its opposite but the pairing is not symmetric");
      }
      if (a < b) {
        pairs->emplace_back(a, b);
      }
    }
  }

  std::vector<NodeSpec> nodes;
  for (const auto& [id, p] : positions) {
    nodes.push_back({id, p});
  }
  return LoadedNetwork{build_graph(std::move(nodes), std::move(edges), pairs), projection};
}

LoadedNetwork load_network(const std::filesystem::path& path) {
  return parse_network(read_json(path));
}

LoadedSigns parse_signs(const json& doc, const std::optional<LocalProjection>& projection) {
  const json& features = features_of(doc);
  const bool lonlat = is_lonlat(doc);
  if (lonlat && !projection) {
    throw InputError("lon/lat signs need a lon/lat network to share its projection");
  }
  if (!lonlat && projection) {
    throw InputError("planar signs cannot be combined with a lon/lat network");
  }
  std::vector<Sign> signs;
  std::vector<std::string> warnings;
  for (std::size_t i = 0; i < features.size(); ++i) {
    const std::string where = feature_label(i);
    const json& f = features[i];
    const json& geometry = member(f, "geometry", where);
    const json& props = member(f, "properties", where);
    if (member(geometry, "type", where) != "Point") {
      throw InputError(where + ": signs must be Point features");
    }
    const auto raw = raw_position(member(geometry, "coordinates", where), where);
    Sign sign;
    sign.id = id_value(member(props, "sign_id", where), where);
    const json& type = member(props, "type", where);
    if (!type.is_string()) {
      throw InputError(where + ": sign type must be a string");
    }
    const auto parsed = parse_sign_type(type.get<std::string>());
    if (!parsed) {
      warnings.push_back(where + " (sign '" + sign.id + "'): unknown type code '" +
                         type.get<std::string>() + "', sign skipped");
      continue;
    }
    sign.type = *parsed;
    double azimuth = number_value(member(props, "azimuth", where), where + " azimuth");
    azimuth = std::fmod(azimuth, 360.0);
    if (azimuth < 0.0) {
      azimuth += 360.0;
    }
    if (!(azimuth >= 0.0 && azimuth < 360.0)) {
      throw InputError(where + ": azimuth outside [0, 360)");
    }
    sign.azimuth = azimuth;
    sign.position = projection ? projection->forward(raw.first, raw.second)
                               : Point{raw.first, raw.second};
    signs.push_back(std::move(sign));
  }
  try {
    return LoadedSigns{SignInventory(std::move(signs)), std::move(warnings)};
  } catch (const InventoryError& ex) {
    throw InputError(ex.what());
  }
}

LoadedSigns load_signs(const std::filesystem::path& path,
                       const std::optional<LocalProjection>& projection) {
  return parse_signs(read_json(path), projection);
}

std::set<EdgeId> RuleDocument::banned_edges() const {
  std::set<EdgeId> out;
  for (const auto& r : no_way) {
    out.insert(r.edge);
  }
  for (const auto& r : one_way) {
    out.insert(r.banned.begin(), r.banned.end());
  }
  return out;
}

std::set<std::pair<EdgeId, EdgeId>> RuleDocument::turn_pairs() const {
  std::set<std::pair<EdgeId, EdgeId>> out;
  for (const auto& r : no_turn) {
    for (const auto& to : r.banned_to) {
      out.emplace(r.from, to);
    }
  }
  return out;
}

RuleDocument to_document(const DerivationResult& result, const RoadGraph& graph,
                         const SignInventory& inventory) {
  auto ids = [&](const std::vector<EdgeIndex>& edges) {
    std::vector<EdgeId> out;
    for (EdgeIndex e : edges) {
      out.push_back(graph.edge(e).id);
    }
    return out;
  };
  RuleDocument doc;
  for (const Rule& rule : result.rules) {
    const SignId& sign = inventory.sign(rule.source_sign).id;
    if (const auto* r = std::get_if<NoWayRule>(&rule.kind)) {
      doc.no_way.push_back({graph.edge(r->banned_edge).id, sign, rule.score});
    } else if (const auto* r = std::get_if<OneWayRule>(&rule.kind)) {
      doc.one_way.push_back({graph.edge(r->chosen).id, ids(r->banned_edges), sign, rule.score});
    } else if (const auto* r = std::get_if<NoTurnRule>(&rule.kind)) {
      doc.no_turn.push_back({graph.edge(r->from).id, ids(r->banned_to), sign, rule.score});
    }
  }
  doc.unreached = ids(result.unreached_edges);
  return doc;
}

json to_json(const RuleDocument& doc) {
  json out = {{"no_way", json::array()},
              {"one_way", json::array()},
              {"no_turn", json::array()},
              {"unreached", ids_json(doc.unreached)}};
  for (const auto& r : doc.no_way) {
    out["no_way"].push_back({{"edge", r.edge}, {"sign", r.sign}, {"score", r.score}});
  }
  for (const auto& r : doc.one_way) {
    out["one_way"].push_back({{"chosen", r.chosen},
                              {"banned", ids_json(r.banned)},
                              {"sign", r.sign},
                              {"score", r.score}});
  }
  for (const auto& r : doc.no_turn) {
    out["no_turn"].push_back({{"from", r.from},
                              {"banned_to", ids_json(r.banned_to)},
                              {"sign", r.sign},
                              {"score", r.score}});
  }
  return out;
}

RuleDocument parse_rules(const json& doc) {
  if (!doc.is_object()) {
    throw InputError("rule document must be a JSON object");
  }
  RuleDocument out;
  auto array_of = [&](const char* key) -> const json& {
    const json& v = member(doc, key, "rule document");
    if (!v.is_array()) {
      throw InputError(std::string("rule document: '") + key + "' must be an array");
    }
    return v;
  };
  for (const auto& r : array_of("no_way")) {
    out.no_way.push_back({id_value(member(r, "edge", "no_way"), "no_way"),
                          id_value(member(r, "sign", "no_way"), "no_way"),
                          number_value(member(r, "score", "no_way"), "no_way")});
  }
  for (const auto& r : array_of("one_way")) {
    out.one_way.push_back({id_value(member(r, "chosen", "one_way"), "one_way"),
                           ids_from(member(r, "banned", "one_way"), "one_way"),
                           id_value(member(r, "sign", "one_way"), "one_way"),
                           number_value(member(r, "score", "one_way"), "one_way")});
  }
  for (const auto& r : array_of("no_turn")) {
    out.no_turn.push_back({id_value(member(r, "from", "no_turn"), "no_turn"),
                           ids_from(member(r, "banned_to", "no_turn"), "no_turn"),
                           id_value(member(r, "sign", "no_turn"), "no_turn"),
                           number_value(member(r, "score", "no_turn"), "no_turn")});
  }
  out.unreached = ids_from(array_of("unreached"), "unreached");
  return out;
}

void write_rules(const RuleDocument& doc, const std::filesystem::path& path) {
  write_json(to_json(doc), path);
}

RuleDocument read_rules(const std::filesystem::path& path) {
  return parse_rules(read_json(path));
}

json to_json(const GroundTruth& truth) {
  json pairs = json::array();
  for (const auto& [from, to] : truth.turn_restrictions) {
    pairs.push_back(json::array({from, to}));
  }
  return {{"one_way_banned_edges", json(truth.one_way_banned_edges)},
          {"turn_restrictions", pairs}};
}

GroundTruth parse_truth(const json& doc) {
  if (!doc.is_object()) {
    throw InputError("ground truth must be a JSON object");
  }
  GroundTruth truth;
  for (const auto& id :
       ids_from(member(doc, "one_way_banned_edges", "ground truth"), "one_way_banned_edges")) {
    truth.one_way_banned_edges.insert(id);
  }
  const json& pairs = member(doc, "turn_restrictions", "ground truth");
  if (!pairs.is_array()) {
    throw InputError("ground truth: 'turn_restrictions' must be an array");
  }
  for (const auto& p : pairs) {
    if (!p.is_array() || p.size() != 2) {
      throw InputError("ground truth: each turn restriction is a [from, to] pair");
    }
    truth.turn_restrictions.emplace(id_value(p[0], "turn_restrictions"),
                                    id_value(p[1], "turn_restrictions"));
  }
  return truth;
}

GroundTruth read_truth(const std::filesystem::path& path) { return parse_truth(read_json(path)); }

std::optional<double> accuracy_percent(std::size_t total, std::size_t incorrect) {
  if (incorrect > total) {
    throw std::invalid_argument("more incorrect rules than mapped rules");
  }
  if (total == 0) {
    return std::nullopt;
  }
  const double raw = 100.0 * static_cast<double>(total - incorrect) / static_cast<double>(total);
  return std::round(raw * 100.0) / 100.0;
}

std::string format_percent(const std::optional<double>& percent) {
  if (!percent) {
    return "n/a";
  }
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(2);
  os << *percent;
  return os.str();
}

AccuracyReport validate(const RuleDocument& rules, const GroundTruth& truth,
                        const RoadGraph* graph) {
  if (graph) {
    auto check = [&](const EdgeId& id) {
      if (!graph->find_edge(id)) {
        throw InputError("edge id '" + id + "' does not resolve in the network");
      }
    };
    for (const auto& id : rules.banned_edges()) check(id);
    for (const auto& [from, to] : rules.turn_pairs()) {
      check(from);
      check(to);
    }
    for (const auto& id : truth.one_way_banned_edges) check(id);
    for (const auto& [from, to] : truth.turn_restrictions) {
      check(from);
      check(to);
    }
  }
  AccuracyReport report;
  const auto banned = rules.banned_edges();
  report.one_way.total_mapped = banned.size();
  for (const auto& id : banned) {
    if (!truth.one_way_banned_edges.contains(id)) {
      ++report.one_way.incorrect;
    }
  }
  const auto pairs = rules.turn_pairs();
  report.turn_restrictions.total_mapped = pairs.size();
  for (const auto& p : pairs) {
    if (!truth.turn_restrictions.contains(p)) {
      ++report.turn_restrictions.incorrect;
    }
  }
  for (FamilyAccuracy* f : {&report.one_way, &report.turn_restrictions}) {
    f->accuracy = accuracy_percent(f->total_mapped, f->incorrect);
  }
  return report;
}

json to_json(const AccuracyReport& report) {
  auto family = [](const FamilyAccuracy& f) {
    return json{{"total_mapped", f.total_mapped},
                {"incorrect", f.incorrect},
                {"accuracy", f.accuracy ? json(format_percent(f.accuracy)) : json(nullptr)}};
  };
  return {{"one_way", family(report.one_way)},
          {"turn_restrictions", family(report.turn_restrictions)}};
}

std::string format_report(const AccuracyReport& report) {
  std::ostringstream os;
  auto line = [&](const char* name, const FamilyAccuracy& f) {
    os << name << '\t' << f.total_mapped << '\t' << f.incorrect << '\t'
       << format_percent(f.accuracy) << (f.accuracy ? "%" : "") << '\n';
  };
  os << "rule type\ttotal mapped\tincorrect\taccuracy\n";
  line("one-way streets", report.one_way);
  line("turn restrictions", report.turn_restrictions);
  return os.str();
}

json render_overlay(const RuleDocument& rules, const RoadGraph& graph,
                    const SignInventory& inventory,
                    const std::optional<LocalProjection>& projection) {
  const auto banned = rules.banned_edges();
  const std::set<EdgeId> unreached(rules.unreached.begin(), rules.unreached.end());

  std::map<SignId, json> linkage;
  for (const auto& r : rules.no_way) {
    linkage[r.sign] = {{"kind", "no_way"}, {"edge", r.edge}, {"score", r.score}};
  }
  for (const auto& r : rules.one_way) {
    linkage[r.sign] = {
        {"kind", "one_way"}, {"chosen", r.chosen}, {"banned", r.banned}, {"score", r.score}};
  }
  for (const auto& r : rules.no_turn) {
    linkage[r.sign] = {
        {"kind", "no_turn"}, {"from", r.from}, {"banned_to", r.banned_to}, {"score", r.score}};
  }

  json features = json::array();
  for (const auto& edge : graph.edges()) {
    json coords = json::array();
    for (const Point& p : edge.geometry.vertices()) {
      coords.push_back(position_json(p, projection));
    }
    const char* status = banned.contains(edge.id)      ? "banned"
                         : unreached.contains(edge.id) ? "unreached"
                                                       : "visited";
    features.push_back({{"type", "Feature"},
                        {"geometry", {{"type", "LineString"}, {"coordinates", coords}}},
                        {"properties",
                         {{"edge_id", edge.id},
                          {"source_node", graph.node(edge.source).id},
                          {"target_node", graph.node(edge.destination).id},
                          {"status", status}}}});
  }
  for (const auto& sign : inventory.signs()) {
    const auto it = linkage.find(sign.id);
    features.push_back(
        {{"type", "Feature"},
         {"geometry", {{"type", "Point"}, {"coordinates", position_json(sign.position, projection)}}},
         {"properties",
          {{"sign_id", sign.id},
           {"type", std::string(to_code(sign.type))},
           {"azimuth", sign.azimuth},
           {"rule", it == linkage.end() ? json(nullptr) : it->second}}}});
  }
  json doc = {{"type", "FeatureCollection"}, {"features", features}};
  if (projection) {
    doc["coordinate_system"] = "lonlat";
  }
  return doc;
}

}  // namespace nrd

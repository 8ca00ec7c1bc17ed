// nrd: derive traffic rules from a road network and a sign inventory.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "nrd/detection.hpp"
#include "nrd/io.hpp"
#include "nrd/navigator.hpp"
#include "nrd/scenario.hpp"

namespace {

constexpr int kInputError = 1;
constexpr int kInternalError = 2;

struct DeriveOptions {
  std::string network;
  std::string signs;
  std::vector<std::string> start_edges;
  bool cover_all = false;
  bool strict = false;
  nrd::DetectionConfig cfg;
  std::string out;
  std::string overlay;
};

struct ValidateOptions {
  std::string rules;
  std::string truth;
  std::string network;
  std::string out;
};

struct ScenarioOptions {
  std::string name;
  nrd::ScenarioParams params;
  std::string out_dir;
};

struct RenderOptions {
  std::string rules;
  std::string network;
  std::string signs;
  std::string out;
};

nrd::LoadedSigns load_signs_reporting(const std::string& path,
                                      const nrd::LoadedNetwork& network, bool strict) {
  auto signs = nrd::load_signs(path, network.projection);
  for (const auto& w : signs.warnings) {
    std::cerr << "warning: " << w << '\n';
  }
  if (strict && !signs.warnings.empty()) {
    throw nrd::InputError(std::to_string(signs.warnings.size()) + " sign(s) rejected");
  }
  return signs;
}

int run_derive(const DeriveOptions& o) {
  o.cfg.validate();
  const auto network = nrd::load_network(o.network);
  const auto signs = load_signs_reporting(o.signs, network, o.strict);
  std::vector<nrd::EdgeIndex> starts;
  for (const auto& id : o.start_edges) {
    starts.push_back(network.graph.edge_index(id));
  }
  const auto result = nrd::derive_rules(network.graph, signs.inventory, o.cfg, starts, o.cover_all);
  const auto doc = nrd::to_document(result, network.graph, signs.inventory);
  nrd::write_rules(doc, o.out);
  if (!o.overlay.empty()) {
    nrd::write_json(nrd::render_overlay(doc, network.graph, signs.inventory, network.projection),
                    o.overlay);
  }
  std::cout << "rules: " << doc.no_way.size() << " no-way, " << doc.one_way.size()
            << " one-way, " << doc.no_turn.size() << " turn; visited "
            << result.visited_edges.size() << " of " << network.graph.edge_count()
            << " edges\n";
  return EXIT_SUCCESS;
}

int run_validate(const ValidateOptions& o) {
  const auto rules = nrd::read_rules(o.rules);
  const auto truth = nrd::read_truth(o.truth);
  std::optional<nrd::LoadedNetwork> network;
  if (!o.network.empty()) {
    network = nrd::load_network(o.network);
  }
  const auto report = nrd::validate(rules, truth, network ? &network->graph : nullptr);
  std::cout << nrd::format_report(report);
  if (!o.out.empty()) {
    nrd::write_json(nrd::to_json(report), o.out);
  }
  return EXIT_SUCCESS;
}

int run_scenario(const ScenarioOptions& o) {
  const auto scenario = nrd::make_scenario(o.name, o.params);
  nrd::write_scenario(scenario, o.out_dir);
  std::cout << "wrote " << scenario.name << " (" << scenario.edges.size() << " edges, "
            << scenario.signs.size() << " signs) to " << o.out_dir << '\n';
  return EXIT_SUCCESS;
}

int run_render(const RenderOptions& o) {
  const auto rules = nrd::read_rules(o.rules);
  const auto network = nrd::load_network(o.network);
  const auto signs = load_signs_reporting(o.signs, network, false);
  nrd::write_json(nrd::render_overlay(rules, network.graph, signs.inventory, network.projection),
                  o.out);
  return EXIT_SUCCESS;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Navigational rule derivation from traffic sign inventories"};
  app.require_subcommand(1);

  DeriveOptions derive;
  auto* d = app.add_subcommand("derive", "simulate navigation and derive traffic rules");
  d->add_option("--network", derive.network, "network GeoJSON")->required();
  d->add_option("--signs", derive.signs, "sign GeoJSON")->required();
  d->add_option("--start-edge", derive.start_edges, "edge id to start driving from (repeatable)");
  d->add_flag("--cover-all", derive.cover_all, "restart from unvisited edges until none remain");
  d->add_flag("--strict", derive.strict, "fail when any sign is rejected");
  d->add_option("--node-radius", derive.cfg.node_radius, "intersection detection radius (m)")
      ->capture_default_str();
  d->add_option("--edge-radius", derive.cfg.edge_radius, "along-edge detection radius (m)")
      ->capture_default_str();
  d->add_option("--lookback", derive.cfg.lookback, "observer distance behind a sign (m)")
      ->capture_default_str();
  d->add_option("--half-angle", derive.cfg.visibility_half_angle, "visibility half angle (deg)")
      ->capture_default_str();
  d->add_option("--out", derive.out, "rule document to write")->required();
  d->add_option("--overlay", derive.overlay, "optional GeoJSON overlay to write");

  ValidateOptions validate;
  auto* v = app.add_subcommand("validate", "measure rule accuracy against ground truth");
  v->add_option("--rules", validate.rules, "rule document")->required();
  v->add_option("--truth", validate.truth, "ground truth JSON")->required();
  v->add_option("--network", validate.network, "network GeoJSON to resolve ids against");
  v->add_option("--out", validate.out, "accuracy report JSON to write");

  ScenarioOptions scenario;
  auto* s = app.add_subcommand("scenario", "generate a synthetic scenario");
  s->add_option("--template", scenario.name, "grid | dead-end | twin-nodes | sample-town")
      ->required();
  s->add_option("--columns", scenario.params.columns, "grid columns")->capture_default_str();
  s->add_option("--rows", scenario.params.rows, "grid rows")->capture_default_str();
  s->add_option("--spacing", scenario.params.spacing, "street spacing (m)")->capture_default_str();
  s->add_option("--out-dir", scenario.out_dir, "output directory")->required();

  RenderOptions render;
  auto* r = app.add_subcommand("render", "write a GeoJSON overlay for a rule document");
  r->add_option("--rules", render.rules, "rule document")->required();
  r->add_option("--network", render.network, "network GeoJSON")->required();
  r->add_option("--signs", render.signs, "sign GeoJSON")->required();
  r->add_option("--out", render.out, "overlay GeoJSON to write")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? EXIT_SUCCESS : kInputError;
  }

  try {
    if (d->parsed()) {
      if (derive.start_edges.empty() && !derive.cover_all) {
        throw nrd::InputError("derive needs --start-edge or --cover-all");
      }
      return run_derive(derive);
    }
    if (v->parsed()) return run_validate(validate);
    if (s->parsed()) return run_scenario(scenario);
    if (r->parsed()) return run_render(render);
  } catch (const nrd::InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const nrd::GraphError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const nrd::InventoryError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternalError;
  }
  return kInternalError;
}

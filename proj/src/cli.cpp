#include "nsbox/cli.hpp"

#include <cmath>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "nsbox/box_io.hpp"
#include "nsbox/ic_bounds.hpp"
#include "nsbox/ic_game.hpp"
#include "nsbox/nonlocality.hpp"
#include "nsbox/polytope.hpp"
#include "nsbox/quantum.hpp"

namespace nsbox::cli {

namespace {

using nlohmann::json;

enum class Format { json, csv, text };

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

std::string fmt(double v) { return json(round_significant(v, 12)).dump(); }

std::string scalar_to_string(const json& j) {
  return j.is_string() ? j.get<std::string>() : j.dump();
}

void flatten(const json& j, const std::string& prefix,
             std::vector<std::pair<std::string, std::string>>& out) {
  if (j.is_object()) {
    for (const auto& [key, value] : j.items())
      flatten(value, prefix.empty() ? key : prefix + "." + key, out);
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i)
      flatten(j[i], prefix + "[" + std::to_string(i) + "]", out);
  } else {
    out.emplace_back(prefix, scalar_to_string(j));
  }
}

struct Report {
  std::string command;
  json inputs;
  json result;
  std::optional<CsvTable> table;
  int exit_code = 0;
};

void emit(const Report& report, Format format, std::ostream& out) {
  json full;
  full["command"] = report.command;
  full["inputs"] = report.inputs;
  full["result"] = report.result;
  full["version"] = kVersion;
  full = round_numbers(full, 12);

  switch (format) {
    case Format::json:
      out << full.dump(2) << "\n";
      break;
    case Format::text: {
      std::vector<std::pair<std::string, std::string>> lines;
      flatten(full, "", lines);
      for (const auto& [key, value] : lines) out << key << ": " << value << "\n";
      break;
    }
    case Format::csv: {
      CsvTable table;
      if (report.table) {
        table = *report.table;
      } else {
        table.header = {"key", "value"};
        std::vector<std::pair<std::string, std::string>> lines;
        flatten(full, "", lines);
        for (const auto& [key, value] : lines) table.rows.push_back({key, value});
      }
      for (std::size_t i = 0; i < table.header.size(); ++i)
        out << table.header[i] << (i + 1 < table.header.size() ? "," : "\n");
      for (const auto& row : table.rows)
        for (std::size_t i = 0; i < row.size(); ++i)
          out << row[i] << (i + 1 < row.size() ? "," : "\n");
      break;
    }
  }
}

json certificate_to_json(const NoSignallingCertificate& cert) {
  return {{"a_to_b_deviation", cert.a_to_b_deviation},
          {"b_to_a_deviation", cert.b_to_a_deviation},
          {"normalization_deviation", cert.normalization_deviation},
          {"min_entry", cert.min_entry},
          {"certified", cert.certified}};
}

json bound_to_json(const BoundResult& bound) {
  Behavior witness = bound.witness();
  return {{"value", bound.value},
          {"witness", decomposition_to_json(bound.witness_weights)},
          {"witness_Q", ic_stats(witness).Q},
          {"saturates_ic", bound.saturates_ic}};
}

json game_result_to_json(const GameResult& result) {
  json per_index = json::array();
  for (std::size_t k = 0; k < result.per_index_success.size(); ++k)
    per_index.push_back({{"index", k},
                         {"success", result.per_index_success[k]},
                         {"information_bits", result.per_index_information[k]}});
  return {{"per_index", per_index},
          {"total_information", result.total_information},
          {"message_bits", result.message_bits}};
}

void game_rows(CsvTable& table, double e1, double e2, const GameResult& result) {
  for (std::size_t k = 0; k < result.per_index_success.size(); ++k)
    table.rows.push_back({fmt(e1), fmt(e2), std::to_string(k),
                          fmt(result.per_index_success[k]),
                          fmt(result.per_index_information[k]),
                          fmt(result.total_information)});
}

std::vector<VertexId> support_by_name(const std::string& name) {
  if (name == "hardy") return hardy_face_vertices();
  if (name == "cabello") return cabello_vertex_set();
  std::vector<VertexId> all;
  for (const auto& [id, b] : enumerate_vertices()) all.push_back(id);
  return all;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"no-signalling box toolkit"};
  app.require_subcommand(1);

  std::string format_name = "json";
  std::string box_name;
  std::string support_name = "all";
  std::string constraint;
  std::string quantum_mode;
  double eps = kDefaultTolerance;
  int levels = 1;
  int grid = 5;
  int starts = 64;
  std::uint64_t mc_samples = 0;
  std::uint64_t seed = 0;
  bool full_bloch = false;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", format_name, "Output format")
        ->check(CLI::IsMember({"json", "csv", "text"}))
        ->capture_default_str();
    return sub;
  };
  auto add_box = [&](CLI::App* sub) {
    sub->add_option("--box", box_name,
                    "Builtin name (pr, white, local:abgd, nonlocal:abg, "
                    "hardy-ic-witness) or path to a box JSON file")
        ->required();
    return sub;
  };

  auto* vertices_cmd = add_common(app.add_subcommand(
      "vertices", "Enumerate the 24 extreme points of the no-signalling polytope"));
  auto* validate_cmd = add_box(add_common(
      app.add_subcommand("validate", "No-signalling certificate for a box")));
  validate_cmd->add_option("--eps", eps, "Certification tolerance")
      ->capture_default_str();
  auto* decompose_cmd = add_box(add_common(app.add_subcommand(
      "decompose", "Convex decomposition of a box over polytope vertices")));
  decompose_cmd->add_option("--support", support_name, "Vertex set to decompose over")
      ->check(CLI::IsMember({"all", "hardy", "cabello"}))
      ->capture_default_str();
  decompose_cmd->add_option("--eps", eps, "Feasibility tolerance")
      ->capture_default_str();
  auto* check_cmd = add_box(add_common(
      app.add_subcommand("check", "Hardy/Cabello certificate for a box")));
  check_cmd->add_option("--eps", eps, "Predicate tolerance")->capture_default_str();
  auto* chsh_cmd =
      add_box(add_common(app.add_subcommand("chsh", "CHSH value of a box")));
  auto* ic_stats_cmd = add_box(add_common(app.add_subcommand(
      "ic-stats", "P1, P2, E1, E2 and Q = E1^2+E2^2 for a box")));

  auto* hardy_max_cmd = add_common(app.add_subcommand(
      "hardy-max", "Maximum Hardy success under a constraint set"));
  hardy_max_cmd->add_option("--constraint", constraint, "ns or ic")
      ->check(CLI::IsMember({"ns", "ic"}))
      ->required();
  auto* cabello_max_cmd = add_common(app.add_subcommand(
      "cabello-max", "Maximum Cabello success under a constraint set"));
  cabello_max_cmd->add_option("--constraint", constraint, "ns or ic")
      ->check(CLI::IsMember({"ns", "ic"}))
      ->required();
  auto* chsh_max_cmd = add_common(
      app.add_subcommand("chsh-max", "Maximum CHSH value under a constraint set"));
  chsh_max_cmd->add_option("--constraint", constraint, "ns or ic")
      ->check(CLI::IsMember({"ns", "ic"}))
      ->required();

  auto* quantum_cmd = add_common(app.add_subcommand(
      "quantum-max", "Numeric two-qubit maximization of Hardy/Cabello success"));
  quantum_cmd->add_option("mode", quantum_mode, "hardy or cabello")
      ->check(CLI::IsMember({"hardy", "cabello"}))
      ->required();
  quantum_cmd->add_option("--starts", starts, "Multi-start count")
      ->capture_default_str();
  quantum_cmd->add_option("--seed", seed, "Base seed")->capture_default_str();
  quantum_cmd->add_flag("--full-bloch", full_bloch,
                        "Optimize over full Bloch-sphere measurement angles");

  auto* game_cmd = add_box(add_common(app.add_subcommand(
      "game", "Play the one-bit communication game over a shared box")));
  game_cmd->add_option("--levels", levels, "Pairing depth n (N = 2^n data bits)")
      ->capture_default_str();
  game_cmd->add_option("--mc", mc_samples,
                       "Monte Carlo sample count (0 = exact enumeration)")
      ->capture_default_str();
  game_cmd->add_option("--seed", seed, "Monte Carlo seed")->capture_default_str();

  auto* sweep_cmd = add_common(app.add_subcommand(
      "sweep", "Game information across an (E1, E2) grid of boxes"));
  sweep_cmd->add_option("--levels", levels, "Pairing depth")->capture_default_str();
  sweep_cmd->add_option("--grid", grid, "Grid points per axis")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    err << app.help();
    return 2;
  }

  Format format = format_name == "csv"    ? Format::csv
                  : format_name == "text" ? Format::text
                                          : Format::json;
  Report report;
  try {
    if (vertices_cmd->parsed()) {
      report.command = "vertices";
      report.inputs = json::object();
      json ids = json::array();
      int local_count = 0;
      int hardy_count = 0;
      CsvTable table;
      table.header = {"id", "kind", "hardy_face", "zero_constraints"};
      for (const auto& [id, behavior] : enumerate_vertices()) {
        bool zeros = behavior(1, 0, 1, 1) == 0.0 && behavior(0, 1, 1, 1) == 0.0;
        bool hardy_face = zeros && behavior(0, 0, 0, 0) == 0.0;
        local_count += id.is_local() ? 1 : 0;
        hardy_count += hardy_face ? 1 : 0;
        std::string kind = id.is_local() ? "local" : "nonlocal";
        ids.push_back({{"id", id.to_string()},
                       {"kind", kind},
                       {"hardy_face", hardy_face},
                       {"zero_constraints", zeros}});
        table.rows.push_back({id.to_string(), kind, hardy_face ? "true" : "false",
                              zeros ? "true" : "false"});
      }
      report.result = {{"count", 24},
                       {"local", local_count},
                       {"nonlocal", 24 - local_count},
                       {"hardy_face_count", hardy_count},
                       {"vertices", ids}};
      report.table = table;
    } else if (validate_cmd->parsed()) {
      report.command = "validate";
      report.inputs = {{"box", box_name}, {"eps", eps}};
      Behavior box = load_box(box_name);
      NoSignallingCertificate cert = validate(box, eps);
      report.result = {{"certificate", certificate_to_json(cert)}};
      report.exit_code = cert.certified ? 0 : 3;
    } else if (decompose_cmd->parsed()) {
      report.command = "decompose";
      report.inputs = {{"box", box_name}, {"support", support_name}, {"eps", eps}};
      Behavior box = load_box(box_name);
      ConvexDecomposition d = decompose(box, support_by_name(support_name), eps);
      report.result = {
          {"weights", decomposition_to_json(d)},
          {"reconstruction_error", max_entry_difference(d.reconstruct(), box)}};
    } else if (check_cmd->parsed()) {
      report.command = "check";
      report.inputs = {{"box", box_name}, {"eps", eps}};
      Behavior box = load_box(box_name);
      HardyCertificate cert = hardy_check(box, eps);
      report.result = {{"q1", cert.q1},
                       {"q4", cert.q4},
                       {"zero_residuals",
                        json::array({cert.zero_residuals[0], cert.zero_residuals[1]})},
                       {"hardy_holds", cert.hardy_holds},
                       {"cabello_holds", cert.cabello_holds},
                       {"hardy_success", hardy_success(box)},
                       {"cabello_success", cabello_success(box)}};
    } else if (chsh_cmd->parsed()) {
      report.command = "chsh";
      report.inputs = {{"box", box_name}};
      report.result = {{"value", chsh_value(load_box(box_name))}};
    } else if (ic_stats_cmd->parsed()) {
      report.command = "ic-stats";
      report.inputs = {{"box", box_name}};
      Behavior box = load_box(box_name);
      IcStatistics s = ic_stats(box);
      report.result = {{"P1", s.P1},   {"P2", s.P2}, {"E1", s.E1},
                       {"E2", s.E2},   {"Q", s.Q},
                       {"violates_ic_sufficient", violates_ic_sufficient(box)}};
    } else if (hardy_max_cmd->parsed()) {
      report.command = "hardy-max";
      report.inputs = {{"constraint", constraint}};
      BoundResult bound =
          constraint == "ns" ? max_hardy_no_signalling() : max_hardy_under_ic();
      report.result = bound_to_json(bound);
    } else if (cabello_max_cmd->parsed()) {
      report.command = "cabello-max";
      report.inputs = {{"constraint", constraint}};
      BoundResult bound = constraint == "ns" ? max_cabello_no_signalling()
                                             : max_cabello_under_ic();
      report.result = bound_to_json(bound);
    } else if (chsh_max_cmd->parsed()) {
      report.command = "chsh-max";
      report.inputs = {{"constraint", constraint}};
      if (constraint == "ns") {
        report.result = {{"value", max_chsh_in_disc(std::sqrt(2.0))},
                         {"E1", 1.0},
                         {"E2", 1.0}};
      } else {
        report.result = {{"value", max_chsh_under_ic()},
                         {"E1", 1.0 / std::sqrt(2.0)},
                         {"E2", 1.0 / std::sqrt(2.0)}};
      }
    } else if (quantum_cmd->parsed()) {
      report.command = "quantum-max";
      report.inputs = {{"mode", quantum_mode},
                       {"starts", starts},
                       {"seed", seed},
                       {"full_bloch", full_bloch}};
      OptimizerConfig config;
      config.starts = starts;
      config.seed = seed;
      config.full_bloch = full_bloch;
      QuantumOptimum optimum = quantum_mode == "hardy"
                                   ? optimize_hardy_quantum(config)
                                   : optimize_cabello_quantum(config);
      auto angles = [](const std::array<QubitMeasurement, 2>& pair) {
        return json::array({{{"theta", pair[0].theta}, {"phi", pair[0].phi}},
                            {{"theta", pair[1].theta}, {"phi", pair[1].phi}}});
      };
      double alpha = std::atan2(optimum.scenario.state.amplitudes[3].real(),
                                optimum.scenario.state.amplitudes[0].real());
      report.result = {{"value", optimum.value},
                       {"max_residual", optimum.max_residual},
                       {"schmidt_alpha", alpha},
                       {"alice", angles(optimum.scenario.alice)},
                       {"bob", angles(optimum.scenario.bob)},
                       {"behavior", behavior_to_json(optimum.behavior)},
                       {"Q", ic_stats(optimum.behavior).Q},
                       {"chsh", chsh_value(optimum.behavior)}};
    } else if (game_cmd->parsed()) {
      report.command = "game";
      report.inputs = {{"box", box_name},
                       {"levels", levels},
                       {"mc", mc_samples},
                       {"seed", seed}};
      GameConfig config;
      config.levels = levels;
      config.box = load_box(box_name);
      config.monte_carlo = mc_samples > 0;
      config.samples = mc_samples;
      config.seed = seed;
      GameResult result = play(config);
      IcStatistics s = ic_stats(config.box);
      report.result = game_result_to_json(result);
      report.result["E1"] = s.E1;
      report.result["E2"] = s.E2;
      report.result["levels"] = levels;
      CsvTable table;
      table.header = {"E1", "E2", "K", "success", "info_bits", "total_I"};
      game_rows(table, s.E1, s.E2, result);
      report.table = table;
    } else if (sweep_cmd->parsed()) {
      report.command = "sweep";
      report.inputs = {{"levels", levels}, {"grid", grid}};
      std::vector<SweepPoint> points = sweep_E_plane(grid, levels);
      json out_points = json::array();
      CsvTable table;
      table.header = {"E1", "E2", "K", "success", "info_bits", "total_I"};
      for (const auto& point : points) {
        json entry = game_result_to_json(point.result);
        entry["E1"] = point.e1;
        entry["E2"] = point.e2;
        out_points.push_back(std::move(entry));
        game_rows(table, point.e1, point.e2, point.result);
      }
      report.result = {{"levels", levels}, {"grid", grid}, {"points", out_points}};
      report.table = table;
    }
  } catch (const Error& e) {
    json error_report;
    error_report["command"] = report.command;
    error_report["error"] = {{"name", e.name()}, {"message", e.what()}};
    error_report["version"] = kVersion;
    out << error_report.dump(2) << "\n";
    return 3;
  }

  emit(report, format, out);
  return report.exit_code;
}

}  // namespace nsbox::cli

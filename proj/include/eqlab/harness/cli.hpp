#pragma once

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "eqlab/harness/experiments.hpp"

namespace eqlab::harness {

inline constexpr int kExitPass = 0;
inline constexpr int kExitCriterionFailure = 1;
inline constexpr int kExitUsage = 2;

namespace detail {

inline json load_config(const std::string& path) {
  if (path.empty()) return json::object();
  std::ifstream in(path);
  if (!in) throw ConfigError("cli-harness", "cannot open config file '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError("cli-harness", "config file '" + path + "' is not valid JSON: " + e.what());
  }
}

inline std::vector<PreparedRun> prepare(const std::string& command, const json& cfg) {
  std::vector<PreparedRun> runs;
  if (command != "all") {
    runs.push_back(find_experiment(command)(cfg));
    return runs;
  }
  if (!cfg.is_object()) throw ConfigError("cli-harness", "all: expected a JSON object keyed by experiment");
  for (const auto& [key, _] : cfg.items()) {
    if (!find_experiment(key)) throw ConfigError("cli-harness", "all: unknown experiment '" + key + "'");
  }
  for (const auto& [name, preparer] : experiments()) {
    runs.push_back(preparer(cfg.contains(name) ? cfg.at(name) : json::object()));
  }
  return runs;
}

inline ExperimentOutput execute(const PreparedRun& run) {
  const auto start = std::chrono::steady_clock::now();
  ExperimentOutput out = run.execute();
  out.summary.config = run.config;
  out.summary.artifacts = {run.name + ".csv", run.name + ".summary.json"};
  out.summary.duration_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

inline void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  out << content;
  if (!out) throw ConfigError("cli-harness", "cannot write '" + path.string() + "'");
}

}  // namespace detail

/// Entry point of the `eqlab` tool. Every experiment is validated and run
/// before anything is written, so a failing run leaves no partial output.
inline int run_cli(int argc, char** argv) {
  CLI::App app{"Equivalence-principle numerical laboratory"};
  app.require_subcommand(1);
  std::string config_path;
  std::string out_dir = "results";
  std::vector<CLI::App*> subs;
  std::vector<std::string> names;
  for (const auto& [name, _] : experiments()) names.push_back(name);
  names.push_back("all");
  for (const auto& name : names) {
    auto* sub = app.add_subcommand(name, name == "all" ? "run every experiment" : "run the " + name + " experiment");
    sub->add_option("--config", config_path, "JSON configuration file");
    sub->add_option("--out-dir", out_dir, "directory for CSV and JSON outputs");
    sub->add_flag("--seedless", "accepted for compatibility; every run is deterministic");
    subs.push_back(sub);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }
  std::string command;
  for (auto* sub : subs) {
    if (sub->parsed()) command = sub->get_name();
  }

  std::vector<ExperimentOutput> outputs;
  try {
    const auto runs = detail::prepare(command, detail::load_config(config_path));
    if (runs.size() == 1) {
      outputs.push_back(detail::execute(runs.front()));
    } else {
      std::vector<std::future<ExperimentOutput>> pending;
      for (const auto& run : runs) pending.push_back(std::async(std::launch::async, detail::execute, run));
      for (auto& f : pending) outputs.push_back(f.get());
    }

    namespace fs = std::filesystem;
    fs::create_directories(out_dir);
    json combined = json::array();
    for (const auto& o : outputs) {
      detail::write_file(fs::path(out_dir) / (o.summary.experiment + ".csv"), o.csv.str());
      detail::write_file(fs::path(out_dir) / (o.summary.experiment + ".summary.json"), o.summary.to_json().dump(2) + "\n");
      combined.push_back(o.summary.to_json());
    }
    if (command == "all") {
      bool ok = true;
      for (const auto& o : outputs) ok = ok && o.summary.passed();
      detail::write_file(fs::path(out_dir) / "all.summary.json",
                         json{{"experiment", "all"}, {"passed", ok}, {"runs", combined}}.dump(2) + "\n");
    }
  } catch (const Error& e) {
    std::cerr << "error " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "error [cli-harness]: " << e.what() << "\n";
    return kExitUsage;
  }

  bool all_passed = true;
  for (const auto& o : outputs) {
    for (const auto& c : o.summary.criteria) {
      std::printf("%-4s %-15s %-50s %s %s %s\n", c.passed ? "PASS" : "FAIL", o.summary.experiment.c_str(),
                  c.name.c_str(), format_number(c.measured).c_str(), c.relation.c_str(),
                  format_number(c.tolerance).c_str());
    }
    all_passed = all_passed && o.summary.passed();
  }
  return all_passed ? kExitPass : kExitCriterionFailure;
}

}  // namespace eqlab::harness

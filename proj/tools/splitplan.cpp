/* Copyright 2026 The Splitplan Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

// splitplan: partition planner and collaborative-inference simulator.
//
// Subcommands: plan, table4, simulate, compare, validate.
// Exit codes: 0 success, 1 usage error, 2 data/validation error,
// 3 no feasible partition.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "splitplan/bundled.hpp"
#include "splitplan/model_graph.hpp"
#include "splitplan/planner.hpp"
#include "splitplan/sim.hpp"
#include "splitplan/tensor_pipeline.hpp"
#include "splitplan/wireless.hpp"

namespace {

using nlohmann::json;
using namespace splitplan;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;
constexpr int kExitInfeasible = 3;

struct CommonOpts {
  std::string profile_path;  // empty = env override or bundled
  std::string net = "";
  std::string objective = "latency";
  double k_mobile = 1.0;
  double k_cloud = 1.0;
  std::string format = "text";
};

ModelProfile resolve_profile(const std::string& flag_value) {
  if (!flag_value.empty()) return load_profile(flag_value);
  if (const char* env = std::getenv("SPLITPLAN_PROFILE"); env != nullptr && *env != '\0') {
    return load_profile(env);
  }
  return bundled_profile();
}

// --net accepts a bundled name (3G, 4G, WiFi), a path to a network
// definition file with a single entry, or PATH:NAME to pick one entry.
NetworkModel resolve_network(const std::string& value) {
  for (const auto& net : bundled_networks()) {
    if (value == net.name || (value == "Wi-Fi" && net.name == "WiFi")) return net;
  }
  std::string path = value;
  std::string name;
  if (auto colon = value.rfind(':'); colon != std::string::npos && colon > 1) {
    path = value.substr(0, colon);
    name = value.substr(colon + 1);
  }
  std::vector<NetworkModel> nets = load_networks(path);
  if (name.empty()) {
    if (nets.size() != 1) {
      throw InvalidArgument("network file '" + path + "' defines " +
                            std::to_string(nets.size()) +
                            " networks; select one with --net PATH:NAME");
    }
    return nets.front();
  }
  for (const auto& net : nets) {
    if (net.name == name) return net;
  }
  throw InvalidArgument("network '" + name + "' not found in " + path);
}

std::string fmt1(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.1f", v);
  return buf;
}

json cost_to_json(const CostBreakdown& c) {
  return {{"tm_ms", c.tm_ms},
          {"tu_ms", c.tu_ms},
          {"tc_ms", c.tc_ms},
          {"pm_mw", c.pm_mw},
          {"pu_mw", c.pu_mw},
          {"latency_total_ms", c.latency_total_ms},
          {"energy_total_mj", c.energy_total_mj}};
}

int cmd_plan(const CommonOpts& opts) {
  ModelProfile profile = resolve_profile(opts.profile_path);
  NetworkModel net = resolve_network(opts.net.empty() ? "3G" : opts.net);
  Objective objective = objective_from_string(opts.objective);
  LoadState load{opts.k_mobile, opts.k_cloud};

  PartitionPlan plan = select_partition(profile, net, load, objective);
  const LayerProfile& layer = profile.layer_at(plan.layer_index);
  const std::int64_t payload = offloaded_bytes(layer, plan.d_r);
  const std::int64_t wire = payload + static_cast<std::int64_t>(kPacketHeaderBytes);

  if (opts.format == "json") {
    json doc = {{"profile", profile.model_name},
                {"network", net.name},
                {"objective", to_string(objective)},
                {"k_mobile", load.k_mobile},
                {"k_cloud", load.k_cloud},
                {"layer_index", plan.layer_index},
                {"layer_name", plan.layer_name},
                {"d_r", plan.d_r},
                {"accuracy", plan.accuracy},
                {"offloaded_bytes", payload},
                {"wire_bytes", wire},
                {"cost", cost_to_json(plan.cost)}};
    std::cout << doc.dump(2) << "\n";
    return kExitOk;
  }

  std::cout << "Profile:   " << profile.model_name << " (" << profile.layers.size()
            << " partition points)\n"
            << "Network:   " << net.name << " (" << net.uplink_mbps << " Mbps up)\n"
            << "Load:      k_mobile=" << load.k_mobile << " k_cloud=" << load.k_cloud << "\n"
            << "Objective: " << to_string(objective) << "\n\n"
            << "Best partition: After " << plan.layer_name << ", D_r=" << plan.d_r
            << "  (accuracy " << fmt1(plan.accuracy * 100.0) << "%)\n"
            << "  mobile compute: " << fmt1(plan.cost.tm_ms) << " ms @ " << fmt1(plan.cost.pm_mw)
            << " mW\n"
            << "  uplink:         " << fmt1(plan.cost.tu_ms) << " ms @ " << fmt1(plan.cost.pu_mw)
            << " mW  (" << wire << " B on the wire)\n"
            << "  cloud compute:  " << fmt1(plan.cost.tc_ms) << " ms\n"
            << "  total latency:  " << fmt1(plan.cost.latency_total_ms) << " ms\n"
            << "  mobile energy:  " << fmt1(plan.cost.energy_total_mj) << " mJ\n";
  return kExitOk;
}

int cmd_table4(const CommonOpts& opts) {
  ModelProfile profile = resolve_profile(opts.profile_path);
  std::vector<NetworkModel> nets;
  if (opts.net.empty()) {
    nets = bundled_networks();
  } else {
    nets.push_back(resolve_network(opts.net));
  }
  LoadState load{opts.k_mobile, opts.k_cloud};

  struct Row {
    std::string name;
    int d_r;
    double kb;
    std::vector<CostBreakdown> costs;
  };
  std::vector<Row> rows;
  for (const auto& layer : profile.layers) {
    auto d_r = min_dr(profile, layer.index);
    if (!d_r) continue;  // layers missing the target are not usable cut points
    Row row;
    row.name = layer.name;
    row.d_r = *d_r;
    row.kb = static_cast<double>(offloaded_bytes(layer, *d_r)) / 1000.0;
    for (const auto& net : nets) {
      row.costs.push_back(cost_of(profile, layer.index, *d_r, net, load));
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) {
    throw InfeasibleError("no feasible partition: every layer misses the accuracy target");
  }

  if (opts.format == "json") {
    json out = json::array();
    for (const auto& row : rows) {
      json entry = {{"layer", row.name},
                    {"d_r", row.d_r},
                    {"offloaded_kb", row.kb},
                    {"networks", json::object()}};
      for (size_t n = 0; n < nets.size(); ++n) {
        entry["networks"][nets[n].name] = {
            {"latency_ms", row.costs[n].latency_total_ms},
            {"energy_mj", row.costs[n].energy_total_mj}};
      }
      out.push_back(entry);
    }
    std::cout << out.dump(2) << "\n";
    return kExitOk;
  }

  std::printf("%-6s %4s %14s", "Layer", "D_r", "Offloaded (KB)");
  for (const auto& net : nets) {
    std::printf(" %12s %12s", (net.name + " lat(ms)").c_str(), (net.name + " E(mJ)").c_str());
  }
  std::printf("\n");
  for (const auto& row : rows) {
    std::printf("%-6s %4d %14s", row.name.c_str(), row.d_r, fmt1(row.kb).c_str());
    for (const auto& cost : row.costs) {
      std::printf(" %12s %12s", fmt1(cost.latency_total_ms).c_str(),
                  fmt1(cost.energy_total_mj).c_str());
    }
    std::printf("\n");
  }
  return kExitOk;
}

sim::SimConfig parse_sim_config_file(const std::string& path, const CommonOpts& opts) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("file not found: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  json doc;
  try {
    doc = json::parse(buf.str());
  } catch (const json::parse_error& e) {
    throw ParseError("sim config: malformed JSON: " + std::string(e.what()));
  }
  if (!doc.is_object()) throw ParseError("sim config: expected a JSON object");
  static const std::vector<std::string> known = {
      "profile", "net",      "objective",       "mode",          "query_count",
      "query_interarrival_ms", "k_mobile", "reselect_period_ms", "load_schedule"};
  for (const auto& item : doc.items()) {
    bool ok = false;
    for (const auto& k : known) ok = ok || k == item.key();
    if (!ok) throw ParseError("sim config: unknown key '" + item.key() + "'");
  }
  if (!doc.contains("net")) throw ParseError("sim config: missing key 'net'");

  sim::SimConfig cfg;
  // Flag > config file > environment > bundled.
  if (!opts.profile_path.empty()) {
    cfg.profile = load_profile(opts.profile_path);
  } else if (doc.contains("profile")) {
    cfg.profile = load_profile(doc.at("profile").get<std::string>());
  } else {
    cfg.profile = resolve_profile("");
  }
  cfg.net = resolve_network(doc.at("net").get<std::string>());
  if (doc.contains("objective")) {
    cfg.objective = objective_from_string(doc.at("objective").get<std::string>());
  }
  if (doc.contains("mode")) cfg.mode = sim::mode_from_string(doc.at("mode").get<std::string>());
  if (doc.contains("query_count")) cfg.query_count = doc.at("query_count").get<int>();
  if (doc.contains("query_interarrival_ms")) {
    cfg.query_interarrival_ms = doc.at("query_interarrival_ms").get<double>();
  }
  if (doc.contains("k_mobile")) cfg.k_mobile = doc.at("k_mobile").get<double>();
  if (doc.contains("reselect_period_ms")) {
    cfg.reselect_period_ms = doc.at("reselect_period_ms").get<double>();
  }
  if (doc.contains("load_schedule")) {
    const json& schedule = doc.at("load_schedule");
    if (!schedule.is_array()) throw ParseError("sim config: load_schedule must be an array");
    for (const auto& step : schedule) {
      if (!step.is_object() || !step.contains("time_ms") || !step.contains("k_cloud")) {
        throw ParseError("sim config: load_schedule entries need time_ms and k_cloud");
      }
      cfg.load_schedule.push_back(
          {step.at("time_ms").get<double>(), step.at("k_cloud").get<double>()});
    }
  }
  return cfg;
}

void print_summary_table(const sim::SummaryReport& s) {
  std::cout << "Simulation summary (" << sim::to_string(s.mode) << ", " << s.network << ", "
            << to_string(s.objective) << ", seed " << s.seed << ")\n"
            << "  queries:            " << s.query_count << "\n"
            << "  latency mean:       " << fmt1(s.mean_latency_ms) << " ms\n"
            << "  latency median:     " << fmt1(s.median_latency_ms) << " ms\n"
            << "  latency p95:        " << fmt1(s.p95_latency_ms) << " ms\n"
            << "  energy total:       " << fmt1(s.total_energy_mj) << " mJ\n"
            << "  energy mean:        " << fmt1(s.mean_energy_mj) << " mJ\n"
            << "  offloaded total:    " << s.total_offloaded_bytes << " B\n";
  if (s.mean_channel_compression_ratio > 0) {
    std::cout << "  channel compression (D/D_r):   " << fmt1(s.mean_channel_compression_ratio)
              << "x\n";
  }
  if (s.input_to_wire_ratio > 0) {
    std::cout << "  input-to-wire compression:     " << fmt1(s.input_to_wire_ratio) << "x\n";
  }
  std::cout << "  queries per partition:";
  for (const auto& [partition, count] : s.queries_per_partition) {
    std::cout << "  [" << (partition == 0 ? std::string("-") : "RB" + std::to_string(partition))
              << "] " << count;
  }
  std::cout << "\n";
}

int cmd_simulate(const std::string& config_path, std::uint64_t seed, const std::string& out_prefix,
                 const CommonOpts& opts) {
  sim::SimConfig cfg = parse_sim_config_file(config_path, opts);
  sim::SimTrace trace = sim::run(cfg, seed);
  sim::SummaryReport summary = sim::summarize(trace);

  const std::string trace_path = out_prefix + ".trace.jsonl";
  const std::string summary_path = out_prefix + ".summary.json";
  {
    std::ofstream out(trace_path, std::ios::binary);
    if (!out) throw Error("cannot write " + trace_path);
    out << sim::export_trace_jsonl(trace);
  }
  {
    std::ofstream out(summary_path, std::ios::binary);
    if (!out) throw Error("cannot write " + summary_path);
    out << sim::export_summary_json(summary) << "\n";
  }

  if (opts.format == "json") {
    std::cout << sim::export_summary_json(summary) << "\n";
  } else {
    print_summary_table(summary);
    std::cout << "trace:   " << trace_path << "\nsummary: " << summary_path << "\n";
  }
  return kExitOk;
}

json comparison_to_json(const sim::ComparisonReport& r) {
  auto row = [](const sim::BaselineRow& b) {
    return json{{"setup", b.setup},
                {"latency_ms", b.latency_ms},
                {"energy_mj", b.energy_mj},
                {"partition", b.partition},
                {"offloaded_bytes", b.offloaded_bytes},
                {"accuracy", b.accuracy}};
  };
  return {{"mobile_only", row(r.mobile_only)},
          {"cloud_only", row(r.cloud_only)},
          {"collaborative", row(r.collaborative)},
          {"latency_improvement_vs_cloud", r.latency_improvement_vs_cloud},
          {"energy_improvement_vs_cloud", r.energy_improvement_vs_cloud}};
}

int cmd_compare(const CommonOpts& opts, std::uint64_t seed, int query_count) {
  ModelProfile profile = resolve_profile(opts.profile_path);
  std::vector<NetworkModel> nets;
  if (opts.net.empty()) {
    nets = bundled_networks();  // fixed order: 3G, 4G, WiFi
  } else {
    nets.push_back(resolve_network(opts.net));
  }

  std::vector<sim::ComparisonReport> reports;
  for (const auto& net : nets) {
    sim::SimConfig cfg;
    cfg.profile = profile;
    cfg.net = net;
    cfg.objective = objective_from_string(opts.objective);
    cfg.query_count = query_count;
    cfg.query_interarrival_ms = 1e6;  // uncontended
    cfg.k_mobile = opts.k_mobile;
    if (opts.k_cloud > 1.0) cfg.load_schedule = {{0.0, opts.k_cloud}};
    reports.push_back(sim::compare_baselines(cfg, seed));
  }

  double ratio_sum = 0.0;
  for (const auto& r : reports) ratio_sum += r.latency_improvement_vs_cloud;
  const double avg_latency_improvement = ratio_sum / static_cast<double>(reports.size());

  if (opts.format == "json") {
    json doc = {{"profile", profile.model_name}, {"networks", json::object()}};
    for (size_t i = 0; i < nets.size(); ++i) {
      doc["networks"][nets[i].name] = comparison_to_json(reports[i]);
    }
    doc["average_latency_improvement_vs_cloud"] = avg_latency_improvement;
    std::cout << doc.dump(2) << "\n";
    return kExitOk;
  }

  std::printf("%-14s %-8s %12s %12s  %-18s %14s\n", "Setup", "Network", "Latency(ms)",
              "Energy(mJ)", "Partition", "Offloaded(B)");
  const auto& first = reports.front();
  std::printf("%-14s %-8s %12s %12s  %-18s %14lld\n", "mobile-only", "-",
              fmt1(first.mobile_only.latency_ms).c_str(), fmt1(first.mobile_only.energy_mj).c_str(),
              "-", static_cast<long long>(first.mobile_only.offloaded_bytes));
  for (size_t i = 0; i < nets.size(); ++i) {
    const auto& r = reports[i].cloud_only;
    std::printf("%-14s %-8s %12s %12s  %-18s %14lld\n", "cloud-only", nets[i].name.c_str(),
                fmt1(r.latency_ms).c_str(), fmt1(r.energy_mj).c_str(), r.partition.c_str(),
                static_cast<long long>(r.offloaded_bytes));
  }
  for (size_t i = 0; i < nets.size(); ++i) {
    const auto& r = reports[i].collaborative;
    std::printf("%-14s %-8s %12s %12s  %-18s %14lld\n", "collaborative", nets[i].name.c_str(),
                fmt1(r.latency_ms).c_str(), fmt1(r.energy_mj).c_str(), r.partition.c_str(),
                static_cast<long long>(r.offloaded_bytes));
  }
  std::printf("\n");
  for (size_t i = 0; i < nets.size(); ++i) {
    std::printf("%s: latency improvement %sx, energy improvement %sx over cloud-only\n",
                nets[i].name.c_str(), fmt1(reports[i].latency_improvement_vs_cloud).c_str(),
                fmt1(reports[i].energy_improvement_vs_cloud).c_str());
  }
  if (reports.size() > 1) {
    std::printf("average latency improvement across networks: %sx\n",
                fmt1(avg_latency_improvement).c_str());
  }
  return kExitOk;
}

int cmd_validate(const CommonOpts& opts) {
  // Parse without the usual throw-on-invalid so every violation is listed.
  std::string text;
  std::string source;
  if (!opts.profile_path.empty()) {
    source = opts.profile_path;
  } else if (const char* env = std::getenv("SPLITPLAN_PROFILE"); env != nullptr && *env != '\0') {
    source = env;
  }
  if (source.empty()) {
    text = bundled_profile_json();
    source = "<bundled>";
  } else {
    std::ifstream in(source, std::ios::binary);
    if (!in) throw ParseError("file not found: " + source);
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }

  ModelProfile profile;
  try {
    profile = parse_profile(text);
  } catch (const ValidationError& e) {
    std::cerr << source << ": " << e.what() << "\n";
    return kExitData;
  }
  // parse_profile validated already; re-run for the human-readable report.
  auto violations = profile_violations(profile);
  if (!violations.empty()) {
    for (const auto& v : violations) std::cerr << source << ": " << v << "\n";
    return kExitData;
  }
  std::cout << profile.layers.size() << " layers OK (" << profile.model_name << ")\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"DNN partition planner and collaborative-inference simulator"};
  app.require_subcommand(1);

  CommonOpts opts;
  std::uint64_t seed = 0;
  int compare_queries = 1;
  std::string sim_config_path;
  std::string out_prefix = "splitplan_sim";

  auto add_common = [&](CLI::App* cmd, bool with_net) {
    cmd->add_option("--profile", opts.profile_path,
                    "Profile file (default: $SPLITPLAN_PROFILE or the bundled profile)");
    if (with_net) {
      cmd->add_option("--net", opts.net, "Network name (3G|4G|WiFi) or definition file path");
    }
    cmd->add_option("--format", opts.format, "Output format: text|json")
        ->check(CLI::IsMember({"text", "json"}));
  };
  auto add_load = [&](CLI::App* cmd) {
    cmd->add_option("--objective", opts.objective, "latency|energy")
        ->check(CLI::IsMember({"latency", "energy"}));
    cmd->add_option("--k-mobile", opts.k_mobile, "Mobile load multiplier (>= 1.0)");
    cmd->add_option("--k-cloud", opts.k_cloud, "Cloud load multiplier (>= 1.0)");
  };

  CLI::App* plan = app.add_subcommand("plan", "Choose the best partition point");
  add_common(plan, true);
  add_load(plan);

  CLI::App* table4 = app.add_subcommand(
      "table4", "Per-partition latency/energy/offloaded-size table");
  add_common(table4, true);
  table4->add_option("--k-mobile", opts.k_mobile, "Mobile load multiplier");
  table4->add_option("--k-cloud", opts.k_cloud, "Cloud load multiplier");

  CLI::App* simulate = app.add_subcommand("simulate", "Run the discrete-event simulator");
  simulate->add_option("config", sim_config_path, "Simulation config file")->required();
  simulate->add_option("--seed", seed, "Simulation seed (default 0)");
  simulate->add_option("--out", out_prefix, "Output path prefix for trace/summary files");
  add_common(simulate, false);

  CLI::App* compare = app.add_subcommand(
      "compare", "Collaborative vs cloud-only vs mobile-only");
  add_common(compare, true);
  add_load(compare);
  compare->add_option("--queries", compare_queries, "Queries per mode (default 1)");
  compare->add_option("--seed", seed, "Simulation seed");

  CLI::App* validate = app.add_subcommand("validate", "Check a profile against all invariants");
  add_common(validate, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (plan->parsed()) return cmd_plan(opts);
    if (table4->parsed()) return cmd_table4(opts);
    if (simulate->parsed()) return cmd_simulate(sim_config_path, seed, out_prefix, opts);
    if (compare->parsed()) return cmd_compare(opts, seed, compare_queries);
    if (validate->parsed()) return cmd_validate(opts);
  } catch (const InfeasibleError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInfeasible;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitData;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitData;
  }
  return kExitUsage;
}

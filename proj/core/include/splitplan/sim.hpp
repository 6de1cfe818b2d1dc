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

#ifndef SPLITPLAN_SIM_HPP_
#define SPLITPLAN_SIM_HPP_

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "splitplan/model_graph.hpp"
#include "splitplan/planner.hpp"
#include "splitplan/wireless.hpp"

namespace splitplan::sim {

enum class Mode { kCollaborative, kCloudOnly, kMobileOnly };

std::string to_string(Mode mode);
Mode mode_from_string(const std::string& s);

// One step of the cloud-load schedule: k_cloud holds from time_ms onward.
struct LoadStep {
  double time_ms = 0.0;
  double k_cloud = 1.0;
};

struct SimConfig {
  ModelProfile profile;
  NetworkModel net;
  Objective objective = Objective::kLatency;
  Mode mode = Mode::kCollaborative;
  int query_count = 1;
  double query_interarrival_ms = 0.0;
  double k_mobile = 1.0;
  // How often the mobile pings the server for its load level. Plans are
  // refreshed only at ping instants, so queries can run under a stale plan.
  double reselect_period_ms = 100.0;
  std::vector<LoadStep> load_schedule;  // strictly increasing times; empty = k_cloud 1.0
};

// Cloud load multiplier in effect at time t (1.0 before the first step).
double k_cloud_at(const std::vector<LoadStep>& schedule, double time_ms);

// Everything recorded about one simulated query. Timestamps are
// non-decreasing; latency is result_return - arrival.
struct QueryRecord {
  int query_id = 0;
  int partition_index = 0;  // 0 for cloud-only / mobile-only
  int d_r = 0;
  int channels_at_partition = 0;
  double accuracy = 0.0;
  double arrival_ms = 0.0;
  double mobile_start_ms = 0.0;
  double mobile_end_ms = 0.0;
  double upload_start_ms = 0.0;
  double upload_end_ms = 0.0;
  double cloud_start_ms = 0.0;
  double cloud_end_ms = 0.0;
  double result_return_ms = 0.0;
  double latency_ms = 0.0;
  double energy_mj = 0.0;
  std::int64_t payload_bytes = 0;  // feature payload excluding packet header
  std::int64_t wire_bytes = 0;     // bytes actually sent
};

struct SimTrace {
  Mode mode = Mode::kCollaborative;
  std::string network;
  Objective objective = Objective::kLatency;
  std::uint64_t seed = 0;
  std::int64_t input_bytes = 0;
  std::vector<QueryRecord> queries;
};

// Deterministic single-threaded simulation of `query_count` inference
// queries. Each query's partition comes from the plan at the last ping
// before its start; its realized cloud time uses the load actually in
// effect when the cloud starts. Feature packets are synthesized, quantized
// and round-tripped through the wire codec, so byte counts are real.
SimTrace run(const SimConfig& cfg, std::uint64_t seed = 0);

struct SummaryReport {
  Mode mode = Mode::kCollaborative;
  std::string network;
  Objective objective = Objective::kLatency;
  std::uint64_t seed = 0;
  int query_count = 0;
  double mean_latency_ms = 0.0;
  double median_latency_ms = 0.0;
  double p95_latency_ms = 0.0;
  double total_energy_mj = 0.0;
  double mean_energy_mj = 0.0;
  std::map<int, int> queries_per_partition;  // partition index -> count
  std::int64_t total_offloaded_bytes = 0;
  // Channel-axis reduction D/D_r (the bottleneck's own metric) and the
  // end-to-end raw-input-to-wire-payload ratio; they are distinct.
  double mean_channel_compression_ratio = 0.0;
  double input_to_wire_ratio = 0.0;
};

// Aggregates a trace. Throws InvalidArgument on an empty trace.
SummaryReport summarize(const SimTrace& trace);

struct BaselineRow {
  std::string setup;  // "mobile-only" | "cloud-only" | "collaborative"
  double latency_ms = 0.0;
  double energy_mj = 0.0;
  std::string partition;         // "-" for the baselines
  std::int64_t offloaded_bytes = 0;
  double accuracy = 0.0;         // 0 when not applicable
};

struct ComparisonReport {
  BaselineRow mobile_only;
  BaselineRow cloud_only;
  BaselineRow collaborative;
  double latency_improvement_vs_cloud = 0.0;
  double energy_improvement_vs_cloud = 0.0;
};

// Runs all three execution modes under an otherwise identical config and
// reports absolute figures plus improvement ratios over cloud-only.
ComparisonReport compare_baselines(const SimConfig& cfg, std::uint64_t seed = 0);

// Line-delimited trace export: one JSON record per event, ordered by
// timestamp. Byte-identical for identical (config, seed).
std::string export_trace_jsonl(const SimTrace& trace);

// JSON document with the summary fields, consumed by the CLI.
std::string export_summary_json(const SummaryReport& report);

}  // namespace splitplan::sim

#endif  // SPLITPLAN_SIM_HPP_

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

#include "splitplan/sim.hpp"

#include <algorithm>
#include <cmath>

#include <json.hpp>

#include "splitplan/tensor_pipeline.hpp"

namespace splitplan::sim {
namespace {

using nlohmann::json;

void check_config(const SimConfig& cfg) {
  if (cfg.query_count < 1) throw InvalidArgument("query_count must be >= 1");
  if (cfg.query_interarrival_ms < 0) throw InvalidArgument("query_interarrival_ms must be >= 0");
  if (cfg.k_mobile < 1.0) throw InvalidArgument("k_mobile must be >= 1.0");
  if (cfg.reselect_period_ms <= 0) throw InvalidArgument("reselect_period_ms must be > 0");
  for (size_t i = 0; i < cfg.load_schedule.size(); ++i) {
    if (cfg.load_schedule[i].k_cloud < 1.0) {
      throw InvalidArgument("load_schedule k_cloud must be >= 1.0");
    }
    if (i > 0 && cfg.load_schedule[i - 1].time_ms >= cfg.load_schedule[i].time_ms) {
      throw InvalidArgument("load_schedule times must be strictly increasing");
    }
  }
}

double last_ping_before(double t, double period) {
  return std::floor(t / period) * period;
}

std::int64_t time_ns(double ms) { return std::llround(ms * 1e6); }

}  // namespace

std::string to_string(Mode mode) {
  switch (mode) {
    case Mode::kCollaborative: return "collaborative";
    case Mode::kCloudOnly: return "cloud-only";
    case Mode::kMobileOnly: return "mobile-only";
  }
  return "collaborative";
}

Mode mode_from_string(const std::string& s) {
  if (s == "collaborative") return Mode::kCollaborative;
  if (s == "cloud-only" || s == "cloud_only") return Mode::kCloudOnly;
  if (s == "mobile-only" || s == "mobile_only") return Mode::kMobileOnly;
  throw InvalidArgument("unknown simulation mode '" + s + "'");
}

double k_cloud_at(const std::vector<LoadStep>& schedule, double time_ms) {
  double k = 1.0;
  for (const auto& step : schedule) {
    if (step.time_ms <= time_ms) k = step.k_cloud;
  }
  return k;
}

SimTrace run(const SimConfig& cfg, std::uint64_t seed) {
  check_config(cfg);
  SimTrace trace;
  trace.mode = cfg.mode;
  trace.network = cfg.net.name;
  trace.objective = cfg.objective;
  trace.seed = seed;
  trace.input_bytes = cfg.profile.input_bytes;
  trace.queries.reserve(static_cast<size_t>(cfg.query_count));

  // One in-flight inference per device: the mobile is busy through the end
  // of its upload, the cloud through the end of its compute.
  double mobile_free = 0.0;
  double cloud_free = 0.0;
  std::map<double, PartitionPlan> plan_cache;  // keyed by k_cloud at ping

  for (int i = 0; i < cfg.query_count; ++i) {
    QueryRecord q;
    q.query_id = i;
    q.arrival_ms = static_cast<double>(i) * cfg.query_interarrival_ms;
    const double start = std::max(q.arrival_ms, mobile_free);

    switch (cfg.mode) {
      case Mode::kCollaborative: {
        const double ping = last_ping_before(start, cfg.reselect_period_ms);
        const double k_planned = k_cloud_at(cfg.load_schedule, ping);
        auto it = plan_cache.find(k_planned);
        if (it == plan_cache.end()) {
          it = plan_cache
                   .emplace(k_planned,
                            select_partition(cfg.profile, cfg.net,
                                             {cfg.k_mobile, k_planned}, cfg.objective))
                   .first;
        }
        const PartitionPlan& plan = it->second;
        const LayerProfile& layer = cfg.profile.layer_at(plan.layer_index);

        // Synthesize and actually transfer the reduced feature tensor.
        FeatureTensor reduced = random_tensor({layer.output_shape.height,
                                               layer.output_shape.width, plan.d_r},
                                              seed * 0x9E3779B97F4A7C15ull +
                                                  static_cast<std::uint64_t>(i));
        FeaturePacket packet = quantize(reduced, plan.layer_index);
        std::vector<std::uint8_t> wire = encode_packet(packet);
        if (decode_packet(wire) != packet) {
          throw Error("wire codec round-trip mismatch in simulator");
        }

        q.partition_index = plan.layer_index;
        q.d_r = plan.d_r;
        q.channels_at_partition = layer.output_shape.channels;
        q.accuracy = plan.accuracy;
        q.payload_bytes = static_cast<std::int64_t>(wire.size() - kPacketHeaderBytes);
        q.wire_bytes = static_cast<std::int64_t>(wire.size());

        q.mobile_start_ms = start;
        q.mobile_end_ms = q.mobile_start_ms + plan.cost.tm_ms;
        q.upload_start_ms = q.mobile_end_ms;
        q.upload_end_ms = q.upload_start_ms + plan.cost.tu_ms;
        q.cloud_start_ms = std::max(q.upload_end_ms, cloud_free);
        // The plan may be stale; the cloud runs at its actual current load.
        const double k_actual = k_cloud_at(cfg.load_schedule, q.cloud_start_ms);
        const double tc = cfg.profile.layer_at(plan.layer_index).cloud_latency_ms * k_actual;
        q.cloud_end_ms = q.cloud_start_ms + tc;
        q.result_return_ms = q.cloud_end_ms + cfg.net.downlink_overhead_ms;
        q.energy_mj = plan.cost.energy_total_mj + cfg.net.downlink_overhead_mj;
        mobile_free = q.upload_end_ms;
        cloud_free = q.cloud_end_ms;
        break;
      }
      case Mode::kCloudOnly: {
        q.payload_bytes = cfg.profile.input_bytes;
        q.wire_bytes = cfg.profile.input_bytes;  // raw input, no packet framing
        const double tu = uplink_time_ms(cfg.profile.input_bytes, cfg.net);
        q.mobile_start_ms = start;
        q.mobile_end_ms = start;
        q.upload_start_ms = start;
        q.upload_end_ms = q.upload_start_ms + tu;
        q.cloud_start_ms = std::max(q.upload_end_ms, cloud_free);
        // Full-network cloud time is approximated by the shallowest
        // partition point's cloud latency, the largest profiled value.
        const double k_actual = k_cloud_at(cfg.load_schedule, q.cloud_start_ms);
        const double tc = cfg.profile.layers.front().cloud_latency_ms * k_actual;
        q.cloud_end_ms = q.cloud_start_ms + tc;
        q.result_return_ms = q.cloud_end_ms + cfg.net.downlink_overhead_ms;
        q.energy_mj = tu * uplink_power_mw(cfg.net) / 1000.0 + cfg.net.downlink_overhead_mj;
        mobile_free = q.upload_end_ms;
        cloud_free = q.cloud_end_ms;
        break;
      }
      case Mode::kMobileOnly: {
        q.mobile_start_ms = start;
        q.mobile_end_ms = q.mobile_start_ms + cfg.profile.mobile_only_latency_ms * cfg.k_mobile;
        q.upload_start_ms = q.mobile_end_ms;
        q.upload_end_ms = q.mobile_end_ms;
        q.cloud_start_ms = q.mobile_end_ms;
        q.cloud_end_ms = q.mobile_end_ms;
        q.result_return_ms = q.mobile_end_ms;
        q.energy_mj = cfg.profile.mobile_only_energy_mj * cfg.k_mobile;
        mobile_free = q.mobile_end_ms;
        break;
      }
    }
    q.latency_ms = q.result_return_ms - q.arrival_ms;
    trace.queries.push_back(std::move(q));
  }
  return trace;
}

SummaryReport summarize(const SimTrace& trace) {
  if (trace.queries.empty()) throw InvalidArgument("cannot summarize an empty trace");
  SummaryReport report;
  report.mode = trace.mode;
  report.network = trace.network;
  report.objective = trace.objective;
  report.seed = trace.seed;
  report.query_count = static_cast<int>(trace.queries.size());

  std::vector<double> latencies;
  latencies.reserve(trace.queries.size());
  double channel_ratio_sum = 0.0;
  int channel_ratio_count = 0;
  for (const auto& q : trace.queries) {
    latencies.push_back(q.latency_ms);
    report.total_energy_mj += q.energy_mj;
    report.queries_per_partition[q.partition_index] += 1;
    report.total_offloaded_bytes += q.payload_bytes;
    if (q.channels_at_partition > 0 && q.d_r > 0) {
      channel_ratio_sum += static_cast<double>(q.channels_at_partition) / q.d_r;
      ++channel_ratio_count;
    }
  }
  std::sort(latencies.begin(), latencies.end());
  const size_t n = latencies.size();
  double sum = 0.0;
  for (double v : latencies) sum += v;
  report.mean_latency_ms = sum / static_cast<double>(n);
  report.median_latency_ms =
      n % 2 == 1 ? latencies[n / 2] : (latencies[n / 2 - 1] + latencies[n / 2]) / 2.0;
  const size_t rank = static_cast<size_t>(std::ceil(0.95 * static_cast<double>(n)));
  report.p95_latency_ms = latencies[std::max<size_t>(rank, 1) - 1];
  report.mean_energy_mj = report.total_energy_mj / static_cast<double>(n);
  if (channel_ratio_count > 0) {
    report.mean_channel_compression_ratio = channel_ratio_sum / channel_ratio_count;
  }
  if (report.total_offloaded_bytes > 0) {
    report.input_to_wire_ratio =
        static_cast<double>(trace.input_bytes) * static_cast<double>(n) /
        static_cast<double>(report.total_offloaded_bytes);
  }
  return report;
}

ComparisonReport compare_baselines(const SimConfig& cfg, std::uint64_t seed) {
  check_config(cfg);
  auto row_for = [&](Mode mode) {
    SimConfig mode_cfg = cfg;
    mode_cfg.mode = mode;
    SimTrace trace = run(mode_cfg, seed);
    SummaryReport s = summarize(trace);
    BaselineRow row;
    row.setup = to_string(mode);
    row.latency_ms = s.mean_latency_ms;
    row.energy_mj = s.mean_energy_mj;
    const QueryRecord& first = trace.queries.front();
    if (mode == Mode::kCollaborative) {
      row.partition = "After " + cfg.profile.layer_at(first.partition_index).name +
                      ", D_r=" + std::to_string(first.d_r);
      row.offloaded_bytes = first.payload_bytes;
      row.accuracy = first.accuracy;
    } else {
      row.partition = "-";
      row.offloaded_bytes = mode == Mode::kCloudOnly ? cfg.profile.input_bytes : 0;
    }
    return row;
  };

  ComparisonReport report;
  report.mobile_only = row_for(Mode::kMobileOnly);
  report.cloud_only = row_for(Mode::kCloudOnly);
  report.collaborative = row_for(Mode::kCollaborative);
  report.latency_improvement_vs_cloud =
      report.cloud_only.latency_ms / report.collaborative.latency_ms;
  report.energy_improvement_vs_cloud =
      report.cloud_only.energy_mj / report.collaborative.energy_mj;
  return report;
}

std::string export_trace_jsonl(const SimTrace& trace) {
  struct Event {
    std::int64_t time_ns;
    int query_id;
    int order;
    const char* kind;
    const QueryRecord* q;
  };
  static constexpr const char* kKinds[] = {"arrival",    "mobile_start", "mobile_end",
                                           "upload_start", "upload_end", "cloud_start",
                                           "cloud_end",  "result_return"};
  std::vector<Event> events;
  events.reserve(trace.queries.size() * 8);
  for (const auto& q : trace.queries) {
    const double times[] = {q.arrival_ms,      q.mobile_start_ms, q.mobile_end_ms,
                            q.upload_start_ms, q.upload_end_ms,   q.cloud_start_ms,
                            q.cloud_end_ms,    q.result_return_ms};
    for (int k = 0; k < 8; ++k) {
      events.push_back({time_ns(times[k]), q.query_id, k, kKinds[k], &q});
    }
  }
  std::stable_sort(events.begin(), events.end(), [](const Event& a, const Event& b) {
    if (a.time_ns != b.time_ns) return a.time_ns < b.time_ns;
    if (a.query_id != b.query_id) return a.query_id < b.query_id;
    return a.order < b.order;
  });

  std::string out;
  for (const auto& e : events) {
    json line = {{"time_ns", e.time_ns},
                 {"query", e.query_id},
                 {"event", e.kind},
                 {"partition", e.q->partition_index},
                 {"d_r", e.q->d_r}};
    if (e.order == 7) {
      line["latency_ms"] = e.q->latency_ms;
      line["energy_mj"] = e.q->energy_mj;
      line["payload_bytes"] = e.q->payload_bytes;
      line["wire_bytes"] = e.q->wire_bytes;
    }
    out += line.dump();
    out += '\n';
  }
  return out;
}

std::string export_summary_json(const SummaryReport& report) {
  json per_partition = json::object();
  for (const auto& [partition, count] : report.queries_per_partition) {
    per_partition[std::to_string(partition)] = count;
  }
  json doc = {{"mode", to_string(report.mode)},
              {"network", report.network},
              {"objective", splitplan::to_string(report.objective)},
              {"seed", report.seed},
              {"query_count", report.query_count},
              {"mean_latency_ms", report.mean_latency_ms},
              {"median_latency_ms", report.median_latency_ms},
              {"p95_latency_ms", report.p95_latency_ms},
              {"total_energy_mj", report.total_energy_mj},
              {"mean_energy_mj", report.mean_energy_mj},
              {"queries_per_partition", per_partition},
              {"total_offloaded_bytes", report.total_offloaded_bytes},
              {"mean_channel_compression_ratio", report.mean_channel_compression_ratio},
              {"input_to_wire_ratio", report.input_to_wire_ratio}};
  return doc.dump(2);
}

}  // namespace splitplan::sim

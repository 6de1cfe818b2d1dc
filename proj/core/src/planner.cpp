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

#include "splitplan/planner.hpp"

#include "splitplan/tensor_pipeline.hpp"

namespace splitplan {
namespace {

// Absorbs binary rounding in target - tolerance so a table entry equal to
// the threshold (e.g. 0.74 against 0.76 - 0.02) is always feasible.
constexpr double kAccuracyEps = 1e-9;

bool meets_threshold(double accuracy, const AccuracyTable& table) {
  return accuracy + kAccuracyEps >= table.threshold();
}

void check_load(const LoadState& load) {
  if (load.k_mobile < 1.0 || load.k_cloud < 1.0) {
    throw InvalidArgument("load multipliers must be >= 1.0");
  }
}

}  // namespace

std::string to_string(Objective objective) {
  return objective == Objective::kLatency ? "latency" : "energy";
}

Objective objective_from_string(const std::string& s) {
  if (s == "latency") return Objective::kLatency;
  if (s == "energy") return Objective::kEnergy;
  throw InvalidArgument("unknown objective '" + s + "' (expected latency or energy)");
}

std::optional<int> min_dr(const ModelProfile& profile, int layer_index) {
  const LayerProfile& layer = profile.layer_at(layer_index);
  auto it = profile.accuracy.table.find(layer.name);
  if (it == profile.accuracy.table.end() || it->second.empty()) {
    throw ValidationError("layer " + layer.name + " has no accuracy table");
  }
  // Linear search k = 1..C. The floor lookup is constant between stored
  // points, so the first feasible k always lands on a stored d_r.
  for (const auto& [d_r, accuracy] : it->second) {
    if (d_r > layer.output_shape.channels) break;
    if (meets_threshold(accuracy, profile.accuracy)) return d_r;
  }
  return std::nullopt;
}

CostBreakdown cost_of(const ModelProfile& profile, int layer_index, int d_r,
                      const NetworkModel& net, const LoadState& load) {
  check_load(load);
  const LayerProfile& layer = profile.layer_at(layer_index);
  const std::int64_t wire_bytes =
      offloaded_bytes(layer, d_r) + static_cast<std::int64_t>(kPacketHeaderBytes);

  CostBreakdown cost;
  cost.tm_ms = layer.mobile_latency_ms * load.k_mobile;
  cost.pm_mw = layer.mobile_power_mw;
  cost.tc_ms = layer.cloud_latency_ms * load.k_cloud;
  cost.tu_ms = uplink_time_ms(wire_bytes, net);
  cost.pu_mw = uplink_power_mw(net);
  cost.latency_total_ms = cost.tm_ms + cost.tu_ms + cost.tc_ms;
  cost.energy_total_mj = cost.tm_ms * cost.pm_mw / 1000.0 + cost.tu_ms * cost.pu_mw / 1000.0;
  return cost;
}

PartitionPlan select_partition(const ModelProfile& profile, const NetworkModel& net,
                               const LoadState& load, Objective objective) {
  check_load(load);
  std::optional<PartitionPlan> best;
  for (const auto& layer : profile.layers) {
    const auto d_r = min_dr(profile, layer.index);
    if (!d_r) continue;
    PartitionPlan plan;
    plan.layer_index = layer.index;
    plan.layer_name = layer.name;
    plan.d_r = *d_r;
    plan.accuracy = *profile.accuracy.lookup(layer.name, *d_r);
    plan.cost = cost_of(profile, layer.index, *d_r, net, load);
    plan.objective = objective;
    if (!best || plan.objective_value() < best->objective_value()) {
      best = std::move(plan);
    }
  }
  if (!best) {
    throw InfeasibleError("no feasible partition: every layer misses the accuracy target");
  }
  return *best;
}

PartitionPlan select_partition_bruteforce(const ModelProfile& profile, const NetworkModel& net,
                                          const LoadState& load, Objective objective,
                                          bool restrict_to_min_dr) {
  check_load(load);
  std::optional<PartitionPlan> best;
  for (const auto& layer : profile.layers) {
    auto it = profile.accuracy.table.find(layer.name);
    if (it == profile.accuracy.table.end() || it->second.empty()) {
      throw ValidationError("layer " + layer.name + " has no accuracy table");
    }
    bool layer_done = false;
    for (int d_r = 1; d_r <= layer.output_shape.channels && !layer_done; ++d_r) {
      const auto accuracy = profile.accuracy.lookup(layer.name, d_r);
      if (!accuracy || !meets_threshold(*accuracy, profile.accuracy)) continue;
      layer_done = restrict_to_min_dr;  // first feasible d_r only, when restricted
      PartitionPlan plan;
      plan.layer_index = layer.index;
      plan.layer_name = layer.name;
      plan.d_r = d_r;
      plan.accuracy = *accuracy;
      plan.cost = cost_of(profile, layer.index, d_r, net, load);
      plan.objective = objective;
      if (!best || plan.objective_value() < best->objective_value()) {
        best = std::move(plan);
      }
    }
  }
  if (!best) {
    throw InfeasibleError("no feasible partition: every layer misses the accuracy target");
  }
  return *best;
}

}  // namespace splitplan

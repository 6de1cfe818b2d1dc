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

#ifndef SPLITPLAN_PLANNER_HPP_
#define SPLITPLAN_PLANNER_HPP_

#include <optional>
#include <string>

#include "splitplan/model_graph.hpp"
#include "splitplan/wireless.hpp"

namespace splitplan {

enum class Objective { kLatency, kEnergy };

std::string to_string(Objective objective);
Objective objective_from_string(const std::string& s);

// Congestion multipliers; 1.0 is the uncongested baseline. Load scales
// compute latency multiplicatively and leaves power draw unchanged.
struct LoadState {
  double k_mobile = 1.0;
  double k_cloud = 1.0;
};

// Per-partition cost terms. Invariants, exactly as computed:
//   latency_total_ms = tm_ms + tu_ms + tc_ms
//   energy_total_mj  = tm_ms*pm_mw/1000 + tu_ms*pu_mw/1000
struct CostBreakdown {
  double tm_ms = 0.0;  // mobile compute incl. reduction unit
  double tu_ms = 0.0;  // uplink transfer (payload + packet header)
  double tc_ms = 0.0;  // restoration unit + remaining cloud layers
  double pm_mw = 0.0;
  double pu_mw = 0.0;
  double latency_total_ms = 0.0;
  double energy_total_mj = 0.0;
};

// A fully resolved split decision.
struct PartitionPlan {
  int layer_index = 0;
  std::string layer_name;
  int d_r = 0;
  double accuracy = 0.0;
  CostBreakdown cost;
  Objective objective = Objective::kLatency;

  double objective_value() const {
    return objective == Objective::kLatency ? cost.latency_total_ms : cost.energy_total_mj;
  }
};

// Smallest d_r at this partition point whose (floor-lookup) accuracy meets
// target - tolerance; nullopt when no table entry qualifies. Throws
// ValidationError when the layer has no accuracy table at all.
std::optional<int> min_dr(const ModelProfile& profile, int layer_index);

// Cost terms for cutting after layer_index with a d_r-channel bottleneck
// under the given network and load. The uplink charge covers the payload
// plus the packet header so planner and simulator account identical bytes.
CostBreakdown cost_of(const ModelProfile& profile, int layer_index, int d_r,
                      const NetworkModel& net, const LoadState& load);

// Full partitioning pass: per-layer minimum-d_r search, cost aggregation
// under load, then argmin over the chosen objective. Ties break toward the
// smaller layer index. Throws InfeasibleError when no layer qualifies.
PartitionPlan select_partition(const ModelProfile& profile, const NetworkModel& net,
                               const LoadState& load, Objective objective);

// Exhaustive-enumeration oracle over every accuracy-feasible (layer, d_r)
// pair. With restrict_to_min_dr it only considers each layer's minimum
// feasible d_r, mirroring select_partition's candidate set.
PartitionPlan select_partition_bruteforce(const ModelProfile& profile, const NetworkModel& net,
                                          const LoadState& load, Objective objective,
                                          bool restrict_to_min_dr = false);

}  // namespace splitplan

#endif  // SPLITPLAN_PLANNER_HPP_

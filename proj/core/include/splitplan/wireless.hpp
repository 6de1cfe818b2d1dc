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

#ifndef SPLITPLAN_WIRELESS_HPP_
#define SPLITPLAN_WIRELESS_HPP_

#include <cstdint>
#include <string>
#include <vector>

namespace splitplan {

// A wireless uplink: constant throughput plus the linear transmit-power
// regression P_u = alpha_u * t_u + beta (mW, with t_u in Mbps).
//
// The downlink of the final inference result is modeled as a fixed,
// configurable overhead; it defaults to zero and is charged only by the
// simulator's result-return step, never by the planner objectives.
struct NetworkModel {
  std::string name;
  double uplink_mbps = 0.0;
  double alpha_u_mw_per_mbps = 0.0;
  double beta_mw = 0.0;
  double downlink_overhead_ms = 0.0;
  double downlink_overhead_mj = 0.0;

  bool operator==(const NetworkModel&) const = default;
};

// Transfer time in milliseconds for `bytes` payload bytes. Zero bytes is
// zero time; linear in bytes.
double uplink_time_ms(std::int64_t bytes, const NetworkModel& net);

// Transmit power draw in mW while uploading: alpha_u * uplink_mbps + beta.
double uplink_power_mw(const NetworkModel& net);

// Mobile energy in millijoules spent uploading `bytes`.
double uplink_energy_mj(std::int64_t bytes, const NetworkModel& net);

// The three built-in networks (3G, 4G, Wi-Fi) with their measured
// throughput and power-regression parameters.
const std::vector<NetworkModel>& bundled_networks();

// Looks up a bundled network by case-sensitive name ("3G", "4G", "WiFi";
// "Wi-Fi" is accepted as an alias). Throws InvalidArgument when unknown.
const NetworkModel& bundled_network(const std::string& name);

// Parses a network definition file: a JSON array of objects with keys
// name, uplink_mbps, alpha_u_mw_per_mbps, beta_mw and optional
// downlink_overhead_ms / downlink_overhead_mj.
std::vector<NetworkModel> parse_networks(const std::string& json_text);
std::vector<NetworkModel> load_networks(const std::string& path);

}  // namespace splitplan

#endif  // SPLITPLAN_WIRELESS_HPP_

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

#include "splitplan/wireless.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "splitplan/errors.hpp"

namespace splitplan {
namespace {

using nlohmann::json;

void validate_network(const NetworkModel& net) {
  if (net.uplink_mbps <= 0) {
    throw ValidationError("network '" + net.name + "': uplink_mbps must be > 0");
  }
  if (net.alpha_u_mw_per_mbps < 0) {
    throw ValidationError("network '" + net.name + "': alpha_u_mw_per_mbps must be >= 0");
  }
  if (net.beta_mw < 0) {
    throw ValidationError("network '" + net.name + "': beta_mw must be >= 0");
  }
  if (net.downlink_overhead_ms < 0 || net.downlink_overhead_mj < 0) {
    throw ValidationError("network '" + net.name + "': downlink overhead must be >= 0");
  }
}

NetworkModel parse_network(const json& obj, const std::string& where) {
  if (!obj.is_object()) throw ParseError(where + ": expected an object");
  static const std::vector<std::string> required = {"name", "uplink_mbps",
                                                    "alpha_u_mw_per_mbps", "beta_mw"};
  static const std::vector<std::string> optional = {"downlink_overhead_ms",
                                                    "downlink_overhead_mj"};
  for (const auto& key : required) {
    if (!obj.contains(key)) throw ParseError(where + ": missing key '" + key + "'");
  }
  for (const auto& item : obj.items()) {
    bool known = false;
    for (const auto& k : required) known = known || k == item.key();
    for (const auto& k : optional) known = known || k == item.key();
    if (!known) throw ParseError(where + ": unknown key '" + item.key() + "'");
  }
  NetworkModel net;
  if (!obj.at("name").is_string()) throw ParseError(where + ".name: expected a string");
  net.name = obj.at("name").get<std::string>();
  auto num = [&](const std::string& key, double fallback, bool present) {
    if (!present) return fallback;
    if (!obj.at(key).is_number()) throw ParseError(where + "." + key + ": expected a number");
    return obj.at(key).get<double>();
  };
  net.uplink_mbps = num("uplink_mbps", 0, true);
  net.alpha_u_mw_per_mbps = num("alpha_u_mw_per_mbps", 0, true);
  net.beta_mw = num("beta_mw", 0, true);
  net.downlink_overhead_ms = num("downlink_overhead_ms", 0, obj.contains("downlink_overhead_ms"));
  net.downlink_overhead_mj = num("downlink_overhead_mj", 0, obj.contains("downlink_overhead_mj"));
  validate_network(net);
  return net;
}

}  // namespace

double uplink_time_ms(std::int64_t bytes, const NetworkModel& net) {
  if (bytes < 0) throw InvalidArgument("uplink_time_ms: negative byte count");
  return static_cast<double>(bytes) * 8.0 / (net.uplink_mbps * 1e6) * 1000.0;
}

double uplink_power_mw(const NetworkModel& net) {
  return net.alpha_u_mw_per_mbps * net.uplink_mbps + net.beta_mw;
}

double uplink_energy_mj(std::int64_t bytes, const NetworkModel& net) {
  return uplink_time_ms(bytes, net) / 1000.0 * uplink_power_mw(net);
}

const std::vector<NetworkModel>& bundled_networks() {
  static const std::vector<NetworkModel> nets = {
      {"3G", 1.1, 868.98, 817.88, 0.0, 0.0},
      {"4G", 5.85, 438.39, 1288.04, 0.0, 0.0},
      {"WiFi", 18.88, 283.17, 132.86, 0.0, 0.0},
  };
  return nets;
}

const NetworkModel& bundled_network(const std::string& name) {
  const std::string wanted = name == "Wi-Fi" ? "WiFi" : name;
  for (const auto& net : bundled_networks()) {
    if (net.name == wanted) return net;
  }
  throw InvalidArgument("unknown network '" + name + "' (bundled: 3G, 4G, WiFi)");
}

std::vector<NetworkModel> parse_networks(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("networks: malformed JSON: ") + e.what());
  }
  if (!doc.is_array()) throw ParseError("networks: expected a JSON array");
  std::vector<NetworkModel> nets;
  for (size_t i = 0; i < doc.size(); ++i) {
    nets.push_back(parse_network(doc[i], "networks[" + std::to_string(i) + "]"));
  }
  return nets;
}

std::vector<NetworkModel> load_networks(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("file not found: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_networks(buf.str());
}

}  // namespace splitplan

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

#include "splitplan/model_graph.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace splitplan {
namespace {

using nlohmann::json;

void require_keys(const json& obj, const std::string& where,
                  const std::vector<std::string>& required,
                  const std::vector<std::string>& optional = {}) {
  for (const auto& key : required) {
    if (!obj.contains(key)) {
      throw ParseError(where + ": missing key '" + key + "'");
    }
  }
  for (const auto& item : obj.items()) {
    const std::string& key = item.key();
    bool known = false;
    for (const auto& k : required) known = known || k == key;
    for (const auto& k : optional) known = known || k == key;
    if (!known) {
      throw ParseError(where + ": unknown key '" + key + "'");
    }
  }
}

double number_at(const json& obj, const std::string& where, const std::string& key) {
  const json& v = obj.at(key);
  if (!v.is_number()) {
    throw ParseError(where + "." + key + ": expected a number");
  }
  return v.get<double>();
}

std::int64_t integer_at(const json& obj, const std::string& where, const std::string& key) {
  const json& v = obj.at(key);
  if (!v.is_number_integer() && !v.is_number_unsigned()) {
    throw ParseError(where + "." + key + ": expected an integer");
  }
  return v.get<std::int64_t>();
}

std::string string_at(const json& obj, const std::string& where, const std::string& key) {
  const json& v = obj.at(key);
  if (!v.is_string()) {
    throw ParseError(where + "." + key + ": expected a string");
  }
  return v.get<std::string>();
}

LayerProfile parse_layer(const json& obj, const std::string& where) {
  if (!obj.is_object()) throw ParseError(where + ": expected an object");
  require_keys(obj, where,
               {"index", "name", "height", "width", "channels", "mobile_latency_ms",
                "mobile_power_mw", "cloud_latency_ms"});
  LayerProfile layer;
  layer.index = static_cast<int>(integer_at(obj, where, "index"));
  layer.name = string_at(obj, where, "name");
  layer.output_shape.height = static_cast<int>(integer_at(obj, where, "height"));
  layer.output_shape.width = static_cast<int>(integer_at(obj, where, "width"));
  layer.output_shape.channels = static_cast<int>(integer_at(obj, where, "channels"));
  layer.mobile_latency_ms = number_at(obj, where, "mobile_latency_ms");
  layer.mobile_power_mw = number_at(obj, where, "mobile_power_mw");
  layer.cloud_latency_ms = number_at(obj, where, "cloud_latency_ms");
  return layer;
}

AccuracyTable parse_accuracy(const json& obj) {
  if (!obj.is_object()) throw ParseError("accuracy: expected an object");
  require_keys(obj, "accuracy", {"target", "tolerance", "table"});
  AccuracyTable acc;
  acc.target = number_at(obj, "accuracy", "target");
  acc.tolerance = number_at(obj, "accuracy", "tolerance");
  const json& table = obj.at("table");
  if (!table.is_object()) throw ParseError("accuracy.table: expected an object");
  for (const auto& entry : table.items()) {
    const std::string where = "accuracy.table." + entry.key();
    if (!entry.value().is_object()) throw ParseError(where + ": expected an object");
    std::map<int, double> curve;
    for (const auto& point : entry.value().items()) {
      int d_r = 0;
      try {
        size_t pos = 0;
        d_r = std::stoi(point.key(), &pos);
        if (pos != point.key().size()) throw std::invalid_argument(point.key());
      } catch (const std::exception&) {
        throw ParseError(where + ": d_r key '" + point.key() + "' is not an integer");
      }
      if (!point.value().is_number()) {
        throw ParseError(where + "[" + point.key() + "]: expected a number");
      }
      curve[d_r] = point.value().get<double>();
    }
    acc.table[entry.key()] = std::move(curve);
  }
  return acc;
}

}  // namespace

std::optional<double> AccuracyTable::lookup(const std::string& layer_name, int d_r) const {
  auto it = table.find(layer_name);
  if (it == table.end()) return std::nullopt;
  const auto& curve = it->second;
  auto ub = curve.upper_bound(d_r);
  if (ub == curve.begin()) return std::nullopt;
  return std::prev(ub)->second;
}

const LayerProfile& ModelProfile::layer_at(int index) const {
  if (index < 1 || index > static_cast<int>(layers.size())) {
    throw InvalidArgument("layer index " + std::to_string(index) + " out of range 1.." +
                          std::to_string(layers.size()));
  }
  return layers[static_cast<size_t>(index - 1)];
}

ModelProfile parse_profile(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("profile: malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("profile: expected a JSON object");
  require_keys(doc, "profile",
               {"schema", "model_name", "input_bytes", "layers", "accuracy", "mobile_only"});
  const std::int64_t schema = integer_at(doc, "profile", "schema");
  if (schema != 1) {
    throw ParseError("profile.schema: unsupported version " + std::to_string(schema));
  }

  ModelProfile profile;
  profile.model_name = string_at(doc, "profile", "model_name");
  profile.input_bytes = integer_at(doc, "profile", "input_bytes");
  const json& layers = doc.at("layers");
  if (!layers.is_array()) throw ParseError("profile.layers: expected an array");
  for (size_t i = 0; i < layers.size(); ++i) {
    profile.layers.push_back(parse_layer(layers[i], "layers[" + std::to_string(i) + "]"));
  }
  profile.accuracy = parse_accuracy(doc.at("accuracy"));
  const json& mobile_only = doc.at("mobile_only");
  if (!mobile_only.is_object()) throw ParseError("mobile_only: expected an object");
  require_keys(mobile_only, "mobile_only", {"latency_ms", "energy_mj"});
  profile.mobile_only_latency_ms = number_at(mobile_only, "mobile_only", "latency_ms");
  profile.mobile_only_energy_mj = number_at(mobile_only, "mobile_only", "energy_mj");

  auto violations = profile_violations(profile);
  if (!violations.empty()) {
    std::string msg = "profile invalid:";
    for (const auto& v : violations) msg += "\n  " + v;
    throw ValidationError(msg);
  }
  return profile;
}

ModelProfile load_profile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ParseError("file not found: " + path);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_profile(buf.str());
}

std::string serialize_profile(const ModelProfile& profile) {
  json layers = json::array();
  for (const auto& layer : profile.layers) {
    layers.push_back({{"index", layer.index},
                      {"name", layer.name},
                      {"height", layer.output_shape.height},
                      {"width", layer.output_shape.width},
                      {"channels", layer.output_shape.channels},
                      {"mobile_latency_ms", layer.mobile_latency_ms},
                      {"mobile_power_mw", layer.mobile_power_mw},
                      {"cloud_latency_ms", layer.cloud_latency_ms}});
  }
  json table = json::object();
  for (const auto& [name, curve] : profile.accuracy.table) {
    json points = json::object();
    for (const auto& [d_r, acc] : curve) points[std::to_string(d_r)] = acc;
    table[name] = points;
  }
  json doc = {{"schema", 1},
              {"model_name", profile.model_name},
              {"input_bytes", profile.input_bytes},
              {"layers", layers},
              {"accuracy",
               {{"target", profile.accuracy.target},
                {"tolerance", profile.accuracy.tolerance},
                {"table", table}}},
              {"mobile_only",
               {{"latency_ms", profile.mobile_only_latency_ms},
                {"energy_mj", profile.mobile_only_energy_mj}}}};
  return doc.dump(2);
}

std::vector<std::string> profile_violations(const ModelProfile& profile) {
  std::vector<std::string> out;
  if (profile.input_bytes <= 0) {
    out.push_back("input_bytes: must be > 0, got " + std::to_string(profile.input_bytes));
  }
  if (profile.layers.empty()) {
    out.push_back("layers: must be non-empty");
  }
  for (size_t i = 0; i < profile.layers.size(); ++i) {
    const auto& layer = profile.layers[i];
    const std::string where = "layers[" + std::to_string(i) + "]";
    if (layer.index != static_cast<int>(i) + 1) {
      out.push_back(where + ".index: expected " + std::to_string(i + 1) + ", got " +
                    std::to_string(layer.index));
    }
    if (layer.name.empty()) out.push_back(where + ".name: must be non-empty");
    const auto& s = layer.output_shape;
    if (s.height < 1 || s.width < 1 || s.channels < 1) {
      out.push_back(where + ": height/width/channels must all be >= 1");
    }
    if (layer.mobile_latency_ms <= 0) out.push_back(where + ".mobile_latency_ms: must be > 0");
    if (layer.mobile_power_mw <= 0) out.push_back(where + ".mobile_power_mw: must be > 0");
    if (layer.cloud_latency_ms <= 0) out.push_back(where + ".cloud_latency_ms: must be > 0");
    if (i > 0 && profile.layers[i - 1].mobile_latency_ms >= layer.mobile_latency_ms) {
      out.push_back(where + ".mobile_latency_ms: cumulative mobile latency must be strictly " +
                    "increasing (" + std::to_string(profile.layers[i - 1].mobile_latency_ms) +
                    " >= " + std::to_string(layer.mobile_latency_ms) + ")");
    }
    for (size_t k = 0; k < i; ++k) {
      if (profile.layers[k].name == layer.name) {
        out.push_back(where + ".name: duplicate layer name '" + layer.name + "'");
      }
    }
  }
  const auto& acc = profile.accuracy;
  if (acc.target < 0 || acc.target > 1) out.push_back("accuracy.target: must lie in [0,1]");
  if (acc.tolerance < 0 || acc.tolerance > 1) {
    out.push_back("accuracy.tolerance: must lie in [0,1]");
  }
  for (const auto& [name, curve] : acc.table) {
    const std::string where = "accuracy.table." + name;
    const LayerProfile* layer = nullptr;
    for (const auto& l : profile.layers) {
      if (l.name == name) layer = &l;
    }
    if (layer == nullptr) {
      out.push_back(where + ": no layer with this name");
      continue;
    }
    double prev = -1.0;
    int prev_dr = 0;
    for (const auto& [d_r, a] : curve) {
      if (d_r < 1 || d_r > layer->output_shape.channels) {
        out.push_back(where + "[" + std::to_string(d_r) + "]: d_r outside 1.." +
                      std::to_string(layer->output_shape.channels));
      }
      if (a < 0 || a > 1) {
        out.push_back(where + "[" + std::to_string(d_r) + "]: accuracy outside [0,1]");
      }
      if (a < prev) {
        out.push_back(where + ": non-monotone accuracy, d_r " + std::to_string(prev_dr) + "->" +
                      std::to_string(d_r) + " drops " + std::to_string(prev) + "->" +
                      std::to_string(a));
      }
      prev = a;
      prev_dr = d_r;
    }
  }
  if (profile.mobile_only_latency_ms <= 0) out.push_back("mobile_only.latency_ms: must be > 0");
  if (profile.mobile_only_energy_mj <= 0) out.push_back("mobile_only.energy_mj: must be > 0");
  return out;
}

std::int64_t offloaded_bytes(const LayerProfile& layer, int d_r) {
  if (d_r < 1 || d_r > layer.output_shape.channels) {
    throw InvalidArgument("d_r " + std::to_string(d_r) + " out of range 1.." +
                          std::to_string(layer.output_shape.channels) + " for layer " +
                          layer.name);
  }
  return static_cast<std::int64_t>(layer.output_shape.height) * layer.output_shape.width * d_r;
}

double compression_ratio(const LayerProfile& layer, int d_r) {
  if (d_r < 1 || d_r > layer.output_shape.channels) {
    throw InvalidArgument("d_r " + std::to_string(d_r) + " out of range 1.." +
                          std::to_string(layer.output_shape.channels) + " for layer " +
                          layer.name);
  }
  return static_cast<double>(layer.output_shape.channels) / d_r;
}

}  // namespace splitplan

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

#ifndef SPLITPLAN_MODEL_GRAPH_HPP_
#define SPLITPLAN_MODEL_GRAPH_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "splitplan/errors.hpp"

namespace splitplan {

// Geometry of one feature tensor. The batch dimension is fixed to 1 and
// therefore not represented.
struct TensorShape {
  int height = 0;
  int width = 0;
  int channels = 0;

  std::int64_t element_count() const {
    return static_cast<std::int64_t>(height) * width * channels;
  }

  bool operator==(const TensorShape&) const = default;
};

// One candidate partition point of the profiled model.
//
// Latency and power figures are measured at load level 1.0 (uncongested).
// mobile_latency_ms is cumulative: all layers up to and including this
// point plus the channel-reduction unit. cloud_latency_ms covers the
// restoration unit plus every remaining layer.
struct LayerProfile {
  int index = 0;  // 1-based position among partition points
  std::string name;
  TensorShape output_shape;
  double mobile_latency_ms = 0.0;
  double mobile_power_mw = 0.0;
  double cloud_latency_ms = 0.0;

  bool operator==(const LayerProfile&) const = default;
};

// Sparse accuracy-vs-d_r map per partition point, plus the accuracy target
// the deployment must hold. Maps are non-decreasing in d_r; lookups between
// stored points fall back to the largest stored d_r <= query (pessimistic).
struct AccuracyTable {
  double target = 0.0;
  double tolerance = 0.0;
  std::map<std::string, std::map<int, double>> table;  // layer name -> d_r -> accuracy

  double threshold() const { return target - tolerance; }

  // Floor lookup; nullopt when no stored d_r <= query exists.
  std::optional<double> lookup(const std::string& layer_name, int d_r) const;

  bool operator==(const AccuracyTable&) const = default;
};

// Full profiled model: ordered partition points, accuracy data, and the
// mobile-only baseline constants. Immutable after load; safe to share
// across threads.
struct ModelProfile {
  std::string model_name;
  std::int64_t input_bytes = 0;
  std::vector<LayerProfile> layers;
  AccuracyTable accuracy;
  double mobile_only_latency_ms = 0.0;
  double mobile_only_energy_mj = 0.0;

  const LayerProfile& layer_at(int index) const;  // 1-based, throws InvalidArgument

  bool operator==(const ModelProfile&) const = default;
};

// Parses and validates a profile document (schema 1). Throws ParseError on
// malformed input, ValidationError listing every violated invariant.
ModelProfile parse_profile(const std::string& json_text);

// parse_profile over a file. A missing file reports "file not found".
ModelProfile load_profile(const std::string& path);

// Inverse of parse_profile; round-trips through parse_profile exactly.
std::string serialize_profile(const ModelProfile& profile);

// Every invariant violation in the profile, formatted as
// "<field>: <problem>". Empty means the profile is valid.
std::vector<std::string> profile_violations(const ModelProfile& profile);

// Payload bytes crossing the wire when cutting after `layer` with a
// d_r-channel bottleneck: height * width * d_r, one byte per element after
// 8-bit quantization. Excludes the packet header.
std::int64_t offloaded_bytes(const LayerProfile& layer, int d_r);

// Channel-axis compression ratio channels / d_r.
double compression_ratio(const LayerProfile& layer, int d_r);

}  // namespace splitplan

#endif  // SPLITPLAN_MODEL_GRAPH_HPP_

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

#ifndef SPLITPLAN_TESTS_TEST_UTIL_HPP_
#define SPLITPLAN_TESTS_TEST_UTIL_HPP_

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "splitplan/model_graph.hpp"
#include "splitplan/tensor_pipeline.hpp"
#include "splitplan/wireless.hpp"

namespace splitplan::testutil {

// A small hand-built profile: every layer feasible at the given d_r curve.
inline ModelProfile tiny_profile() {
  ModelProfile p;
  p.model_name = "tiny";
  p.input_bytes = 1000;
  p.layers = {
      {1, "L1", {10, 10, 8}, 1.0, 2000.0, 3.0},
      {2, "L2", {5, 5, 16}, 2.5, 2000.0, 2.0},
      {3, "L3", {5, 5, 16}, 4.0, 2000.0, 1.0},
  };
  p.accuracy.target = 0.9;
  p.accuracy.tolerance = 0.05;
  p.accuracy.table = {
      {"L1", {{1, 0.80}, {2, 0.86}, {4, 0.91}}},
      {"L2", {{1, 0.87}, {2, 0.92}}},
      {"L3", {{1, 0.86}, {2, 0.88}, {4, 0.93}}},
  };
  p.mobile_only_latency_ms = 12.0;
  p.mobile_only_energy_mj = 24.0;
  return p;
}

// Deterministic random profile for oracle-equivalence sweeps. Always has
// every layer's accuracy table present; feasibility is random.
inline ModelProfile random_profile(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> layer_count(1, 16);
  std::uniform_int_distribution<int> dim(1, 32);
  std::uniform_int_distribution<int> chan(2, 64);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  ModelProfile p;
  p.model_name = "random";
  p.input_bytes = 1 + static_cast<std::int64_t>(unit(rng) * 1e6);
  const int m = layer_count(rng);
  double cumulative = 0.0;
  for (int j = 1; j <= m; ++j) {
    cumulative += 0.05 + unit(rng) * 10.0;
    LayerProfile layer;
    layer.index = j;
    layer.name = "L" + std::to_string(j);
    layer.output_shape = {dim(rng), dim(rng), chan(rng)};
    layer.mobile_latency_ms = cumulative;
    layer.mobile_power_mw = 500.0 + unit(rng) * 5000.0;
    layer.cloud_latency_ms = 0.01 + unit(rng) * 5.0;
    p.layers.push_back(layer);
  }
  p.accuracy.target = 0.5 + unit(rng) * 0.4;
  p.accuracy.tolerance = unit(rng) * 0.1;
  for (const auto& layer : p.layers) {
    std::map<int, double> curve;
    const int channels = layer.output_shape.channels;
    std::uniform_int_distribution<int> point_count(1, 6);
    const int points = point_count(rng);
    std::vector<int> drs;
    std::uniform_int_distribution<int> dr_dist(1, channels);
    for (int i = 0; i < points; ++i) drs.push_back(dr_dist(rng));
    std::sort(drs.begin(), drs.end());
    drs.erase(std::unique(drs.begin(), drs.end()), drs.end());
    double acc = unit(rng) * 0.9;
    for (int d : drs) {
      curve[d] = acc;
      acc = std::min(1.0, acc + unit(rng) * 0.2);
    }
    p.accuracy.table[layer.name] = curve;
  }
  p.mobile_only_latency_ms = cumulative + 1.0;
  p.mobile_only_energy_mj = 10.0 + unit(rng) * 100.0;
  return p;
}

inline NetworkModel random_network(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  NetworkModel net;
  net.name = "rand";
  net.uplink_mbps = 0.2 + unit(rng) * 40.0;
  net.alpha_u_mw_per_mbps = unit(rng) * 1000.0;
  net.beta_mw = unit(rng) * 2000.0;
  return net;
}

// Naive per-pixel matrix-vector reference for conv1x1; intentionally the
// dumbest possible loop so it stays independent of the production path.
inline FeatureTensor conv1x1_reference(const FeatureTensor& input, const Conv1x1Weights& w) {
  FeatureTensor out;
  out.shape = {input.shape.height, input.shape.width, w.out_channels};
  out.data.assign(static_cast<size_t>(out.shape.element_count()), 0.0);
  for (int h = 0; h < input.shape.height; ++h) {
    for (int x = 0; x < input.shape.width; ++x) {
      for (int co = 0; co < w.out_channels; ++co) {
        double acc = w.bias[static_cast<size_t>(co)];
        for (int ci = 0; ci < w.in_channels; ++ci) {
          acc += w.weight(co, ci) * input.at(h, x, ci);
        }
        out.at(h, x, co) = acc;
      }
    }
  }
  return out;
}

}  // namespace splitplan::testutil

#endif  // SPLITPLAN_TESTS_TEST_UTIL_HPP_

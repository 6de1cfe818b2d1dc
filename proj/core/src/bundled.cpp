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

#include "splitplan/bundled.hpp"

namespace splitplan {

const std::string& bundled_profile_json() {
  static const std::string json_text = R"json(
{
  "schema": 1,
  "model_name": "resnet50-tx2",
  "input_bytes": 150528,
  "layers": [
    {"index": 1, "name": "RB1", "height": 56, "width": 56, "channels": 256,
     "mobile_latency_ms": 0.11, "mobile_power_mw": 3000.0, "cloud_latency_ms": 0.8},
    {"index": 2, "name": "RB2", "height": 56, "width": 56, "channels": 256,
     "mobile_latency_ms": 1.093, "mobile_power_mw": 3000.0, "cloud_latency_ms": 0.75},
    {"index": 3, "name": "RB3", "height": 56, "width": 56, "channels": 256,
     "mobile_latency_ms": 1.977, "mobile_power_mw": 3000.0, "cloud_latency_ms": 0.7},
    {"index": 4, "name": "RB4", "height": 28, "width": 28, "channels": 512,
     "mobile_latency_ms": 2.931, "mobile_power_mw": 3200.0, "cloud_latency_ms": 0.65},
    {"index": 5, "name": "RB5", "height": 28, "width": 28, "channels": 512,
     "mobile_latency_ms": 3.881, "mobile_power_mw": 3200.0, "cloud_latency_ms": 0.6},
    {"index": 6, "name": "RB6", "height": 28, "width": 28, "channels": 512,
     "mobile_latency_ms": 4.831, "mobile_power_mw": 3200.0, "cloud_latency_ms": 0.55},
    {"index": 7, "name": "RB7", "height": 28, "width": 28, "channels": 512,
     "mobile_latency_ms": 5.781, "mobile_power_mw": 3200.0, "cloud_latency_ms": 0.5},
    {"index": 8, "name": "RB8", "height": 14, "width": 14, "channels": 1024,
     "mobile_latency_ms": 6.741, "mobile_power_mw": 2400.0, "cloud_latency_ms": 0.45},
    {"index": 9, "name": "RB9", "height": 14, "width": 14, "channels": 1024,
     "mobile_latency_ms": 7.791, "mobile_power_mw": 2400.0, "cloud_latency_ms": 0.4},
    {"index": 10, "name": "RB10", "height": 14, "width": 14, "channels": 1024,
     "mobile_latency_ms": 8.674, "mobile_power_mw": 2400.0, "cloud_latency_ms": 0.35},
    {"index": 11, "name": "RB11", "height": 14, "width": 14, "channels": 1024,
     "mobile_latency_ms": 9.691, "mobile_power_mw": 2400.0, "cloud_latency_ms": 0.3},
    {"index": 12, "name": "RB12", "height": 14, "width": 14, "channels": 1024,
     "mobile_latency_ms": 10.441, "mobile_power_mw": 2400.0, "cloud_latency_ms": 0.25},
    {"index": 13, "name": "RB13", "height": 14, "width": 14, "channels": 1024,
     "mobile_latency_ms": 11.491, "mobile_power_mw": 2400.0, "cloud_latency_ms": 0.2},
    {"index": 14, "name": "RB14", "height": 7, "width": 7, "channels": 2048,
     "mobile_latency_ms": 12.355, "mobile_power_mw": 2200.0, "cloud_latency_ms": 0.15},
    {"index": 15, "name": "RB15", "height": 7, "width": 7, "channels": 2048,
     "mobile_latency_ms": 13.405, "mobile_power_mw": 2200.0, "cloud_latency_ms": 0.1},
    {"index": 16, "name": "RB16", "height": 7, "width": 7, "channels": 2048,
     "mobile_latency_ms": 14.321, "mobile_power_mw": 2200.0, "cloud_latency_ms": 0.05}
  ],
  "accuracy": {
    "target": 0.76,
    "tolerance": 0.02,
    "table": {
      "RB1": {"1": 0.741, "2": 0.748, "3": 0.752, "4": 0.755, "5": 0.757},
      "RB2": {"1": 0.742, "2": 0.749, "3": 0.753, "4": 0.756, "5": 0.758},
      "RB3": {"1": 0.744, "2": 0.75, "3": 0.754, "4": 0.757, "5": 0.758},
      "RB4": {"1": 0.731, "2": 0.743, "3": 0.749, "4": 0.753, "5": 0.756},
      "RB5": {"1": 0.728, "2": 0.744, "3": 0.75, "4": 0.754, "5": 0.756},
      "RB6": {"1": 0.725, "2": 0.742, "3": 0.748, "4": 0.752, "5": 0.755},
      "RB7": {"1": 0.721, "2": 0.741, "3": 0.747, "4": 0.751, "5": 0.754},
      "RB8": {"1": 0.672, "2": 0.705, "3": 0.722, "4": 0.733, "5": 0.74, "10": 0.753},
      "RB9": {"1": 0.668, "2": 0.701, "3": 0.719, "4": 0.731, "5": 0.741, "10": 0.754},
      "RB10": {"1": 0.663, "2": 0.697, "3": 0.716, "4": 0.729, "5": 0.74, "10": 0.752},
      "RB11": {"1": 0.659, "2": 0.694, "3": 0.714, "4": 0.727, "5": 0.741, "10": 0.753},
      "RB12": {"1": 0.654, "2": 0.69, "3": 0.711, "4": 0.726, "5": 0.74, "10": 0.752},
      "RB13": {"1": 0.65, "2": 0.687, "3": 0.709, "4": 0.724, "5": 0.741, "10": 0.754},
      "RB14": {"1": 0.589, "2": 0.631, "3": 0.666, "4": 0.694, "5": 0.715, "10": 0.743},
      "RB15": {"1": 0.584, "2": 0.627, "3": 0.663, "4": 0.691, "5": 0.712, "10": 0.742},
      "RB16": {"1": 0.578, "2": 0.622, "3": 0.659, "4": 0.688, "5": 0.71, "10": 0.741}
    }
  },
  "mobile_only": {"latency_ms": 15.7, "energy_mj": 20.5}
})json";
  return json_text;
}

const ModelProfile& bundled_profile() {
  static const ModelProfile profile = parse_profile(bundled_profile_json());
  return profile;
}

}  // namespace splitplan

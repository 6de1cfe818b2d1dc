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

#ifndef SPLITPLAN_BUNDLED_HPP_
#define SPLITPLAN_BUNDLED_HPP_

#include <string>

#include "splitplan/model_graph.hpp"

namespace splitplan {

// The built-in ResNet-50 / Jetson TX2-class deployment profile
// ("resnet50-tx2"), so planning and simulation work with zero setup.
// Compute latencies and power figures are modeled estimates fitted to
// published end-to-end measurements, not per-layer device measurements.
const std::string& bundled_profile_json();

// Parsed and validated copy of the bundled profile.
const ModelProfile& bundled_profile();

}  // namespace splitplan

#endif  // SPLITPLAN_BUNDLED_HPP_

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

#include <cmath>
#include <random>

#include <doctest.h>

#include "splitplan/bundled.hpp"
#include "test_util.hpp"

using namespace splitplan;

TEST_CASE("bundled profile loads with 16 residual blocks") {
  const ModelProfile& p = bundled_profile();
  REQUIRE(p.layers.size() == 16);
  CHECK(p.input_bytes == 150528);
  for (int j = 1; j <= 16; ++j) {
    CHECK(p.layer_at(j).name == "RB" + std::to_string(j));
  }
  CHECK(profile_violations(p).empty());
}

TEST_CASE("empty layer list is rejected") {
  ModelProfile p = testutil::tiny_profile();
  p.layers.clear();
  p.accuracy.table.clear();
  auto violations = profile_violations(p);
  REQUIRE(!violations.empty());
  CHECK(violations[0].find("layers") != std::string::npos);
  CHECK_THROWS_AS(parse_profile(serialize_profile(p)), ValidationError);
}

TEST_CASE("non-monotone accuracy map is rejected and names the layer") {
  ModelProfile p = testutil::tiny_profile();
  p.accuracy.table["L2"] = {{1, 0.75}, {2, 0.74}};
  try {
    parse_profile(serialize_profile(p));
    FAIL("expected ValidationError");
  } catch (const ValidationError& e) {
    const std::string what = e.what();
    CHECK(what.find("L2") != std::string::npos);
    CHECK(what.find("non-monotone") != std::string::npos);
  }
}

TEST_CASE("validation names the offending field") {
  ModelProfile p = testutil::tiny_profile();
  SUBCASE("non-positive latency") {
    p.layers[1].mobile_latency_ms = -2.0;
    auto v = profile_violations(p);
    REQUIRE(!v.empty());
    bool found = false;
    for (const auto& msg : v) found = found || msg.find("layers[1].mobile_latency_ms") == 0;
    CHECK(found);
  }
  SUBCASE("non-contiguous indices") {
    p.layers[2].index = 7;
    auto v = profile_violations(p);
    REQUIRE(!v.empty());
    CHECK(v[0].find("layers[2].index") != std::string::npos);
  }
  SUBCASE("decreasing cumulative mobile latency") {
    p.layers[2].mobile_latency_ms = p.layers[1].mobile_latency_ms - 1.0;
    auto v = profile_violations(p);
    REQUIRE(!v.empty());
    CHECK(v[0].find("strictly increasing") != std::string::npos);
  }
}

TEST_CASE("parse rejects malformed documents") {
  CHECK_THROWS_AS(parse_profile("not json"), ParseError);
  CHECK_THROWS_AS(parse_profile("[1,2,3]"), ParseError);

  const std::string base = serialize_profile(testutil::tiny_profile());
  SUBCASE("unknown top-level key") {
    std::string doc = base;
    doc.insert(doc.find('{') + 1, "\"surprise\": 1,");
    CHECK_THROWS_WITH_AS(parse_profile(doc),
                         doctest::Contains("unknown key 'surprise'"), ParseError);
  }
  SUBCASE("wrong schema version") {
    std::string doc = base;
    const auto pos = doc.find("\"schema\": 1");
    doc.replace(pos, 11, "\"schema\": 9");
    CHECK_THROWS_AS(parse_profile(doc), ParseError);
  }
}

TEST_CASE("offloaded_bytes matches the published payload sizes") {
  const ModelProfile& p = bundled_profile();
  CHECK(offloaded_bytes(p.layer_at(1), 1) == 3136);
  CHECK(offloaded_bytes(p.layer_at(8), 5) == 980);
  CHECK(offloaded_bytes(p.layer_at(14), 10) == 490);  // 7*7*10
  CHECK(offloaded_bytes(p.layer_at(4), 2) == 1568);
  CHECK_THROWS_AS(offloaded_bytes(p.layer_at(1), 0), InvalidArgument);
  CHECK_THROWS_AS(offloaded_bytes(p.layer_at(1), 257), InvalidArgument);
}

TEST_CASE("offloaded_bytes is linear and strictly increasing in d_r") {
  const ModelProfile& p = bundled_profile();
  for (const auto& layer : p.layers) {
    const std::int64_t unit = offloaded_bytes(layer, 1);
    std::int64_t prev = 0;
    for (int d_r = 1; d_r <= layer.output_shape.channels; d_r += 37) {
      const std::int64_t b = offloaded_bytes(layer, d_r);
      CHECK(b == unit * d_r);
      CHECK(b > prev);
      prev = b;
    }
  }
}

TEST_CASE("paper d_r choices reproduce the offloaded-data row to 0.1 KB") {
  const ModelProfile& p = bundled_profile();
  const int dr_by_layer[] = {1, 1, 1, 2, 2, 2, 2, 5, 5, 5, 5, 5, 5, 10, 10, 10};
  const double kb_row[] = {3.1, 3.1, 3.1, 1.6, 1.6, 1.6, 1.6, 1.0,
                           1.0, 1.0, 1.0, 1.0, 1.0, 0.5, 0.5, 0.5};
  for (int j = 1; j <= 16; ++j) {
    const double kb = static_cast<double>(offloaded_bytes(p.layer_at(j), dr_by_layer[j - 1])) / 1000.0;
    CHECK(std::round(kb * 10.0) / 10.0 == doctest::Approx(kb_row[j - 1]));
  }
}

TEST_CASE("compression_ratio is the channel-axis ratio") {
  const ModelProfile& p = bundled_profile();
  CHECK(compression_ratio(p.layer_at(1), 1) == 256.0);
  CHECK(compression_ratio(p.layer_at(8), 5) == doctest::Approx(204.8));
  for (const auto& layer : p.layers) {
    CHECK(compression_ratio(layer, layer.output_shape.channels) == 1.0);
  }
  CHECK_THROWS_AS(compression_ratio(p.layer_at(1), -1), InvalidArgument);
}

TEST_CASE("serialize -> parse round-trips to an identical profile") {
  const ModelProfile& bundled = bundled_profile();
  CHECK(parse_profile(serialize_profile(bundled)) == bundled);

  std::mt19937_64 rng(41);
  for (int i = 0; i < 25; ++i) {
    ModelProfile p = testutil::random_profile(rng);
    if (!profile_violations(p).empty()) continue;
    CHECK(parse_profile(serialize_profile(p)) == p);
  }
}

TEST_CASE("accuracy lookup falls back to the largest stored d_r below") {
  const ModelProfile p = testutil::tiny_profile();
  CHECK(p.accuracy.lookup("L1", 1) == 0.80);
  CHECK(p.accuracy.lookup("L1", 3) == 0.86);   // floor to d_r=2
  CHECK(p.accuracy.lookup("L1", 4) == 0.91);
  CHECK(p.accuracy.lookup("L1", 100) == 0.91); // floor to the last point
  CHECK(!p.accuracy.lookup("L1", 0).has_value());
  CHECK(!p.accuracy.lookup("nope", 3).has_value());
}

TEST_CASE("tensor shape element count") {
  TensorShape s{56, 56, 256};
  CHECK(s.element_count() == 802816);
  CHECK(TensorShape{1, 1, 1}.element_count() == 1);
}

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

#include <random>

#include <doctest.h>

#include "splitplan/errors.hpp"
#include "test_util.hpp"

using namespace splitplan;

namespace {
// Frozen from bytes*8/(Mbps*1e6)*1000 and alpha*Mbps+beta evaluated
// independently; tolerances are pure double-rounding slack.
constexpr double kEps = 1e-9;
}  // namespace

TEST_CASE("bundled networks equal the measured parameter table exactly") {
  const auto& nets = bundled_networks();
  REQUIRE(nets.size() == 3);
  CHECK(nets[0].name == "3G");
  CHECK(nets[0].uplink_mbps == 1.1);
  CHECK(nets[0].alpha_u_mw_per_mbps == 868.98);
  CHECK(nets[0].beta_mw == 817.88);
  CHECK(nets[1].name == "4G");
  CHECK(nets[1].uplink_mbps == 5.85);
  CHECK(nets[1].alpha_u_mw_per_mbps == 438.39);
  CHECK(nets[1].beta_mw == 1288.04);
  CHECK(nets[2].name == "WiFi");
  CHECK(nets[2].uplink_mbps == 18.88);
  CHECK(nets[2].alpha_u_mw_per_mbps == 283.17);
  CHECK(nets[2].beta_mw == 132.86);
  CHECK(bundled_network("Wi-Fi") == nets[2]);
  CHECK_THROWS_AS(bundled_network("5G"), InvalidArgument);
}

TEST_CASE("uplink_time matches hand-derived values") {
  const auto& g3 = bundled_network("3G");
  const auto& wifi = bundled_network("WiFi");
  CHECK(uplink_time_ms(150528, g3) == doctest::Approx(1094.749090909091).epsilon(kEps));
  CHECK(uplink_time_ms(3136, wifi) == doctest::Approx(1.3288135593220338).epsilon(kEps));
  CHECK(uplink_time_ms(0, g3) == 0.0);
  CHECK(uplink_time_ms(0, wifi) == 0.0);
  CHECK_THROWS_AS(uplink_time_ms(-1, g3), InvalidArgument);
}

TEST_CASE("uplink_power is the linear regression") {
  CHECK(uplink_power_mw(bundled_network("3G")) == doctest::Approx(1773.758).epsilon(kEps));
  CHECK(uplink_power_mw(bundled_network("WiFi")) == doctest::Approx(5479.1096).epsilon(kEps));
  NetworkModel constant{"c", 7.0, 0.0, 432.1};
  CHECK(uplink_power_mw(constant) == 432.1);
}

TEST_CASE("uplink_energy matches hand-derived values") {
  CHECK(uplink_energy_mj(150528, bundled_network("WiFi")) ==
        doctest::Approx(349.4743262155932).epsilon(kEps));
  CHECK(uplink_energy_mj(980, bundled_network("3G")) ==
        doctest::Approx(12.642057018181818).epsilon(kEps));
  CHECK(uplink_energy_mj(0, bundled_network("4G")) == 0.0);
}

TEST_CASE("uplink_time is linear in bytes") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::int64_t> bytes(0, 1 << 24);
  for (int i = 0; i < 200; ++i) {
    NetworkModel net = testutil::random_network(rng);
    const std::int64_t a = bytes(rng);
    const std::int64_t b = bytes(rng);
    CHECK(uplink_time_ms(a + b, net) ==
          doctest::Approx(uplink_time_ms(a, net) + uplink_time_ms(b, net)).epsilon(1e-12));
  }
}

TEST_CASE("doubling throughput halves transfer time") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 100; ++i) {
    NetworkModel net = testutil::random_network(rng);
    NetworkModel fast = net;
    fast.uplink_mbps *= 2.0;
    CHECK(uplink_time_ms(123457, fast) ==
          doctest::Approx(uplink_time_ms(123457, net) / 2.0).epsilon(1e-12));
  }
}

TEST_CASE("energy is exactly time x power / 1000") {
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<std::int64_t> bytes(0, 1 << 22);
  for (int i = 0; i < 200; ++i) {
    NetworkModel net = testutil::random_network(rng);
    const std::int64_t b = bytes(rng);
    CHECK(uplink_energy_mj(b, net) == uplink_time_ms(b, net) / 1000.0 * uplink_power_mw(net));
  }
}

TEST_CASE("network config files parse and validate") {
  const std::string good = R"([
    {"name": "LTE-A", "uplink_mbps": 12.5, "alpha_u_mw_per_mbps": 300.0, "beta_mw": 900.0},
    {"name": "sat", "uplink_mbps": 0.5, "alpha_u_mw_per_mbps": 0.0, "beta_mw": 2000.0,
     "downlink_overhead_ms": 5.0}
  ])";
  auto nets = parse_networks(good);
  REQUIRE(nets.size() == 2);
  CHECK(nets[0].name == "LTE-A");
  CHECK(nets[1].downlink_overhead_ms == 5.0);
  CHECK(nets[1].downlink_overhead_mj == 0.0);

  CHECK_THROWS_AS(parse_networks("{}"), ParseError);
  CHECK_THROWS_AS(parse_networks(R"([{"name":"x","uplink_mbps":1.0}])"), ParseError);
  CHECK_THROWS_AS(
      parse_networks(
          R"([{"name":"x","uplink_mbps":1.0,"alpha_u_mw_per_mbps":1.0,"beta_mw":1.0,"bogus":2}])"),
      ParseError);
  CHECK_THROWS_AS(
      parse_networks(
          R"([{"name":"x","uplink_mbps":0.0,"alpha_u_mw_per_mbps":1.0,"beta_mw":1.0}])"),
      ValidationError);
}

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

#include "splitplan/tensor_pipeline.hpp"

#include <cmath>
#include <cstring>
#include <fstream>
#include <sstream>

#include <Eigen/Core>
#include <json.hpp>

namespace splitplan {
namespace {

using nlohmann::json;
using RowMajorMatrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

void check_finite(const FeatureTensor& t) {
  for (double v : t.data) {
    if (!std::isfinite(v)) throw InvalidArgument("tensor contains a non-finite element");
  }
}

void check_tensor(const FeatureTensor& t) {
  if (t.shape.height < 1 || t.shape.width < 1 || t.shape.channels < 1) {
    throw InvalidArgument("tensor shape dimensions must all be >= 1");
  }
  if (static_cast<std::int64_t>(t.data.size()) != t.shape.element_count()) {
    throw InvalidArgument("tensor data length " + std::to_string(t.data.size()) +
                          " does not match shape element count " +
                          std::to_string(t.shape.element_count()));
  }
}

void check_weights(const Conv1x1Weights& w) {
  if (w.in_channels < 1 || w.out_channels < 1) {
    throw InvalidArgument("conv1x1 channel counts must be >= 1");
  }
  if (w.weights.size() != static_cast<size_t>(w.in_channels) * w.out_channels) {
    throw InvalidArgument("conv1x1 weight matrix size mismatch");
  }
  if (w.bias.size() != static_cast<size_t>(w.out_channels)) {
    throw InvalidArgument("conv1x1 bias size mismatch");
  }
  for (double v : w.weights) {
    if (!std::isfinite(v)) throw InvalidArgument("conv1x1 weights contain a non-finite value");
  }
  for (double v : w.bias) {
    if (!std::isfinite(v)) throw InvalidArgument("conv1x1 bias contains a non-finite value");
  }
}

void put_u16(std::uint8_t* out, std::uint16_t v) {
  out[0] = static_cast<std::uint8_t>(v & 0xFF);
  out[1] = static_cast<std::uint8_t>(v >> 8);
}

std::uint16_t get_u16(const std::uint8_t* p) {
  return static_cast<std::uint16_t>(p[0] | (p[1] << 8));
}

// splitmix64, mapped into [-amplitude, amplitude). Keeps synthetic data
// identical across platforms, unlike std:: distributions.
struct SplitMix64 {
  std::uint64_t state;
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }
  double uniform(double amplitude) {
    return (static_cast<double>(next() >> 11) * 0x1.0p-53 * 2.0 - 1.0) * amplitude;
  }
};

}  // namespace

FeatureTensor conv1x1(const FeatureTensor& input, const Conv1x1Weights& w) {
  check_tensor(input);
  check_weights(w);
  if (input.shape.channels != w.in_channels) {
    throw InvalidArgument("conv1x1: input has " + std::to_string(input.shape.channels) +
                          " channels but weights expect " + std::to_string(w.in_channels));
  }
  const Eigen::Index pixels =
      static_cast<Eigen::Index>(input.shape.height) * input.shape.width;

  FeatureTensor out;
  out.shape = {input.shape.height, input.shape.width, w.out_channels};
  out.data.resize(static_cast<size_t>(pixels) * w.out_channels);

  Eigen::Map<const RowMajorMatrix> in_mat(input.data.data(), pixels, w.in_channels);
  Eigen::Map<const RowMajorMatrix> weight_mat(w.weights.data(), w.out_channels, w.in_channels);
  Eigen::Map<const Eigen::VectorXd> bias_vec(w.bias.data(), w.out_channels);
  Eigen::Map<RowMajorMatrix> out_mat(out.data.data(), pixels, w.out_channels);

  out_mat.noalias() = in_mat * weight_mat.transpose();
  out_mat.rowwise() += bias_vec.transpose();
  return out;
}

FeaturePacket quantize(const FeatureTensor& t, int partition_index) {
  check_tensor(t);
  check_finite(t);
  FeaturePacket p;
  p.partition_index = partition_index;
  p.d_r = t.shape.channels;
  p.height = t.shape.height;
  p.width = t.shape.width;

  double max_abs = 0.0;
  for (double v : t.data) max_abs = std::max(max_abs, std::fabs(v));

  p.payload.resize(t.data.size());
  if (max_abs == 0.0) {
    p.scale = 0.0f;
    std::fill(p.payload.begin(), p.payload.end(), std::uint8_t{128});
    return p;
  }
  // The scale rides in the header as binary32, so quantize against the
  // binary32 value to keep the half-step error bound exact end to end.
  p.scale = static_cast<float>(max_abs / 127.0);
  const double scale = static_cast<double>(p.scale);
  for (size_t i = 0; i < t.data.size(); ++i) {
    const double code = std::round(t.data[i] / scale) + 128.0;
    p.payload[i] = static_cast<std::uint8_t>(std::clamp(code, 0.0, 255.0));
  }
  return p;
}

FeatureTensor dequantize(const FeaturePacket& p) {
  if (p.payload.size() !=
      static_cast<size_t>(p.height) * static_cast<size_t>(p.width) * static_cast<size_t>(p.d_r)) {
    throw InvalidArgument("packet payload length does not match its geometry");
  }
  FeatureTensor t;
  t.shape = {p.height, p.width, p.d_r};
  t.data.resize(p.payload.size());
  const double scale = static_cast<double>(p.scale);
  for (size_t i = 0; i < p.payload.size(); ++i) {
    t.data[i] = (static_cast<int>(p.payload[i]) - 128) * scale;
  }
  return t;
}

std::vector<std::uint8_t> encode_packet(const FeaturePacket& p) {
  if (p.height < 1 || p.width < 1 || p.d_r < 1) {
    throw InvalidArgument("packet geometry dimensions must all be >= 1");
  }
  if (p.height > 0xFFFF || p.width > 0xFFFF || p.d_r > 0xFFFF) {
    throw InvalidArgument("packet geometry dimension exceeds the u16 wire field");
  }
  if (p.partition_index < 0 || p.partition_index > 0xFF) {
    throw InvalidArgument("partition_index exceeds the u8 wire field");
  }
  const size_t expected =
      static_cast<size_t>(p.height) * static_cast<size_t>(p.width) * static_cast<size_t>(p.d_r);
  if (p.payload.size() != expected) {
    throw InvalidArgument("packet payload length does not match its geometry");
  }
  if (!std::isfinite(p.scale) || p.scale < 0.0f) {
    throw InvalidArgument("packet scale must be finite and >= 0");
  }

  std::vector<std::uint8_t> out(kPacketHeaderBytes + p.payload.size());
  std::memcpy(out.data(), kPacketMagic, 4);
  out[4] = kPacketVersion;
  out[5] = static_cast<std::uint8_t>(p.partition_index);
  put_u16(&out[6], static_cast<std::uint16_t>(p.d_r));
  put_u16(&out[8], static_cast<std::uint16_t>(p.height));
  put_u16(&out[10], static_cast<std::uint16_t>(p.width));
  static_assert(sizeof(float) == 4);
  std::memcpy(&out[12], &p.scale, 4);  // little-endian host assumed, checked in tests
  std::memcpy(out.data() + kPacketHeaderBytes, p.payload.data(), p.payload.size());
  return out;
}

FeaturePacket decode_packet(const std::vector<std::uint8_t>& bytes) {
  if (bytes.size() < kPacketHeaderBytes) {
    throw WireFormatError(WireFormatError::Kind::kTruncated,
                          "packet truncated: " + std::to_string(bytes.size()) +
                              " bytes, header needs " + std::to_string(kPacketHeaderBytes));
  }
  if (!std::equal(std::begin(kPacketMagic), std::end(kPacketMagic), bytes.begin())) {
    throw WireFormatError(WireFormatError::Kind::kBadMagic, "bad magic");
  }
  if (bytes[4] != kPacketVersion) {
    throw WireFormatError(WireFormatError::Kind::kUnsupportedVersion,
                          "unsupported version " + std::to_string(bytes[4]));
  }
  FeaturePacket p;
  p.partition_index = bytes[5];
  p.d_r = get_u16(&bytes[6]);
  p.height = get_u16(&bytes[8]);
  p.width = get_u16(&bytes[10]);
  std::memcpy(&p.scale, &bytes[12], 4);

  const size_t expected =
      static_cast<size_t>(p.height) * static_cast<size_t>(p.width) * static_cast<size_t>(p.d_r);
  const size_t actual = bytes.size() - kPacketHeaderBytes;
  if (p.height < 1 || p.width < 1 || p.d_r < 1) {
    throw WireFormatError(WireFormatError::Kind::kGeometryMismatch,
                          "geometry fields must all be >= 1");
  }
  if (actual < expected) {
    throw WireFormatError(WireFormatError::Kind::kTruncated,
                          "packet truncated: payload has " + std::to_string(actual) +
                              " bytes, geometry declares " + std::to_string(expected));
  }
  if (actual > expected) {
    throw WireFormatError(WireFormatError::Kind::kGeometryMismatch,
                          "payload length " + std::to_string(actual) +
                              " does not match declared geometry " + std::to_string(expected));
  }
  if (!std::isfinite(p.scale) || p.scale < 0.0f) {
    throw WireFormatError(WireFormatError::Kind::kBadScale,
                          "scale must be finite and >= 0");
  }
  p.payload.assign(bytes.begin() + kPacketHeaderBytes, bytes.end());
  return p;
}

FeatureTensor butterfly_forward(const FeatureTensor& input, const Conv1x1Weights& reduce_w,
                                const Conv1x1Weights& restore_w) {
  if (reduce_w.out_channels != restore_w.in_channels) {
    throw InvalidArgument("butterfly: reduction output channels " +
                          std::to_string(reduce_w.out_channels) +
                          " != restoration input channels " +
                          std::to_string(restore_w.in_channels));
  }
  if (restore_w.out_channels != input.shape.channels) {
    throw InvalidArgument("butterfly: restoration must restore the input channel count");
  }
  FeatureTensor reduced = conv1x1(input, reduce_w);
  FeaturePacket packet = quantize(reduced);
  FeatureTensor restored_input = dequantize(packet);
  return conv1x1(restored_input, restore_w);
}

Conv1x1Weights parse_conv_weights(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("weights: malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("weights: expected a JSON object");
  for (const auto& key : {"in_channels", "out_channels", "weights", "bias"}) {
    if (!doc.contains(key)) throw ParseError(std::string("weights: missing key '") + key + "'");
  }
  Conv1x1Weights w;
  w.in_channels = doc.at("in_channels").get<int>();
  w.out_channels = doc.at("out_channels").get<int>();
  if (!doc.at("weights").is_array() || !doc.at("bias").is_array()) {
    throw ParseError("weights: 'weights' and 'bias' must be arrays");
  }
  w.weights = doc.at("weights").get<std::vector<double>>();
  w.bias = doc.at("bias").get<std::vector<double>>();
  check_weights(w);
  return w;
}

Conv1x1Weights load_conv_weights(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("file not found: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_conv_weights(buf.str());
}

std::string serialize_conv_weights(const Conv1x1Weights& w) {
  json doc = {{"in_channels", w.in_channels},
              {"out_channels", w.out_channels},
              {"weights", w.weights},
              {"bias", w.bias}};
  return doc.dump(2);
}

Conv1x1Weights random_conv_weights(int in_channels, int out_channels, std::uint64_t seed) {
  Conv1x1Weights w;
  w.in_channels = in_channels;
  w.out_channels = out_channels;
  w.weights.resize(static_cast<size_t>(in_channels) * out_channels);
  w.bias.resize(static_cast<size_t>(out_channels));
  SplitMix64 rng{seed ^ 0xC0FFEEull};
  for (auto& v : w.weights) v = rng.uniform(1.0);
  for (auto& v : w.bias) v = rng.uniform(0.5);
  return w;
}

FeatureTensor random_tensor(const TensorShape& shape, std::uint64_t seed, double amplitude) {
  FeatureTensor t;
  t.shape = shape;
  t.data.resize(static_cast<size_t>(shape.element_count()));
  SplitMix64 rng{seed ^ 0xFEEDull};
  for (auto& v : t.data) v = rng.uniform(amplitude);
  return t;
}

}  // namespace splitplan

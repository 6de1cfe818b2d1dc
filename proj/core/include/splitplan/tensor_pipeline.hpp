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

#ifndef SPLITPLAN_TENSOR_PIPELINE_HPP_
#define SPLITPLAN_TENSOR_PIPELINE_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "splitplan/model_graph.hpp"

namespace splitplan {

// Dense feature tensor in row-major (height, width, channel) order, channel
// fastest. All elements must be finite.
struct FeatureTensor {
  TensorShape shape;
  std::vector<double> data;

  double at(int h, int w, int c) const {
    return data[(static_cast<size_t>(h) * shape.width + w) * shape.channels + c];
  }
  double& at(int h, int w, int c) {
    return data[(static_cast<size_t>(h) * shape.width + w) * shape.channels + c];
  }

  bool operator==(const FeatureTensor&) const = default;
};

// Weights of a 1x1 convolution: out_channels x in_channels matrix plus a
// per-output-channel bias. Used both for the channel-reduction unit
// (in=D, out=D_r) and the restoration unit (in=D_r, out=D).
struct Conv1x1Weights {
  int in_channels = 0;
  int out_channels = 0;
  std::vector<double> weights;  // row-major out x in
  std::vector<double> bias;     // out

  double weight(int out, int in) const {
    return weights[static_cast<size_t>(out) * in_channels + in];
  }

  bool operator==(const Conv1x1Weights&) const = default;
};

// The quantized feature tensor crossing the mobile->cloud boundary.
// Codes are symmetric 8-bit: code = round(x/scale) + 128, clamped to
// [0,255]; an all-zero tensor uses the scale = 0 convention.
struct FeaturePacket {
  int partition_index = 0;
  int d_r = 0;
  int height = 0;
  int width = 0;
  float scale = 0.0f;
  std::vector<std::uint8_t> payload;  // height*width*d_r codes, channel fastest

  bool operator==(const FeaturePacket&) const = default;
};

// Wire framing constants. Multi-byte integers are little-endian.
inline constexpr std::size_t kPacketHeaderBytes = 16;
inline constexpr std::uint8_t kPacketMagic[4] = {0x42, 0x46, 0x4C, 0x59};
inline constexpr std::uint8_t kPacketVersion = 1;

// Applies a 1x1 convolution: out[h,w,c'] = sum_c W[c',c]*in[h,w,c] + b[c'].
// Spatial dimensions are unchanged. Throws InvalidArgument on channel
// mismatch or inconsistent weight dimensions.
FeatureTensor conv1x1(const FeatureTensor& input, const Conv1x1Weights& w);

// Per-tensor symmetric linear quantization to 8-bit codes.
FeaturePacket quantize(const FeatureTensor& t, int partition_index = 0);

// Inverse of quantize up to the half-step rounding error.
FeatureTensor dequantize(const FeaturePacket& p);

// Serializes a packet to its bit-exact wire form (16-byte header + payload).
std::vector<std::uint8_t> encode_packet(const FeaturePacket& p);

// Parses wire bytes. Failure modes are distinct WireFormatError kinds:
// bad magic, unsupported version, truncated payload, geometry mismatch.
FeaturePacket decode_packet(const std::vector<std::uint8_t>& bytes);

// The full bottleneck forward pass: reduce -> quantize -> dequantize ->
// restore. Output shape equals input shape.
FeatureTensor butterfly_forward(const FeatureTensor& input, const Conv1x1Weights& reduce_w,
                                const Conv1x1Weights& restore_w);

// Weight file I/O (JSON: in_channels, out_channels, weights row-major
// out x in, bias).
Conv1x1Weights parse_conv_weights(const std::string& json_text);
Conv1x1Weights load_conv_weights(const std::string& path);
std::string serialize_conv_weights(const Conv1x1Weights& w);

// Deterministic pseudo-random weights for experiments and tests; no
// training happens in this project.
Conv1x1Weights random_conv_weights(int in_channels, int out_channels, std::uint64_t seed);
FeatureTensor random_tensor(const TensorShape& shape, std::uint64_t seed, double amplitude = 1.0);

}  // namespace splitplan

#endif  // SPLITPLAN_TENSOR_PIPELINE_HPP_

// Copyright (c) 2026, the isc authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

namespace isc::model {

struct InvalidConfig : std::runtime_error {
  explicit InvalidConfig(const std::string& what) : std::runtime_error(what) {}
};

/// Network hyperparameters. Defaults are the desk-scale setup; the
/// full-scale 12-block variant stays constructible by overriding
/// context_blocks and the widths.
struct ModelConfig {
  int encoder_channels = 64;
  std::array<int, 7> encoder_strides = {5, 2, 2, 2, 2, 2, 2};
  std::array<int, 7> encoder_kernels = {10, 3, 3, 3, 3, 2, 2};
  int context_blocks = 4;
  int model_dim = 64;
  int attention_heads = 4;
  int ffn_dim = 256;
  int quantizer_groups = 2;     // G
  int codebook_entries = 80;    // V per group
  int num_negatives = 20;       // K
  double temperature = 0.1;     // contrastive kappa
  double diversity_weight = 0.1;
  double mask_prob = 0.065;
  int mask_span = 5;

  /// Frame hop in samples (product of the strides).
  int frame_hop() const;
  /// Receptive field of one output frame, in samples.
  int receptive_field() const;
  /// Number of encoder output frames for an input of `samples` samples
  /// (0 when the input is below the receptive field).
  int frame_count(long samples) const;

  void validate() const;
};

inline int ModelConfig::frame_hop() const {
  int hop = 1;
  for (int s : encoder_strides) hop *= s;
  return hop;
}

inline int ModelConfig::receptive_field() const {
  // Walk the stack backwards: rf' = rf * stride + (kernel - stride).
  int rf = 1;
  for (int i = 6; i >= 0; --i)
    rf = rf * encoder_strides[static_cast<std::size_t>(i)] +
         (encoder_kernels[static_cast<std::size_t>(i)] -
          encoder_strides[static_cast<std::size_t>(i)]);
  return rf;
}

inline int ModelConfig::frame_count(long samples) const {
  long n = samples;
  for (int i = 0; i < 7; ++i) {
    const long k = encoder_kernels[static_cast<std::size_t>(i)];
    const long s = encoder_strides[static_cast<std::size_t>(i)];
    if (n < k) return 0;
    n = (n - k) / s + 1;
  }
  return static_cast<int>(n);
}

inline void ModelConfig::validate() const {
  if (frame_hop() != 320)
    throw InvalidConfig("encoder strides must multiply to 320, got " +
                        std::to_string(frame_hop()));
  if (model_dim <= 0 || attention_heads <= 0 ||
      model_dim % attention_heads != 0)
    throw InvalidConfig("model_dim must be divisible by attention_heads");
  if (quantizer_groups <= 0 || model_dim % quantizer_groups != 0)
    throw InvalidConfig("model_dim must be divisible by quantizer_groups");
  if (!(mask_prob > 0.0) || !(mask_prob < 1.0))
    throw InvalidConfig("mask_prob must lie in (0, 1)");
  if (mask_span < 1) throw InvalidConfig("mask_span must be >= 1");
  if (num_negatives < 1) throw InvalidConfig("num_negatives must be >= 1");
  if (temperature <= 0.0) throw InvalidConfig("temperature must be > 0");
  if (diversity_weight < 0.0)
    throw InvalidConfig("diversity_weight must be >= 0");
  if (encoder_channels <= 0 || context_blocks <= 0 || ffn_dim <= 0 ||
      codebook_entries <= 0)
    throw InvalidConfig("all widths must be positive");
}

}  // namespace isc::model

// Copyright (C) 2026 the depthwarp authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "dw/colormap.hpp"
#include "dw/geometry.hpp"

namespace dw {

/// Per-sequence log-space normalization. Depths are clipped to [near, far];
/// the min/max are taken over every valid pixel of the whole sequence.
/// Invalid pixels normalize as `far` (they carry mask 0 downstream). A
/// constant-depth sequence maps to 0.5 everywhere.
struct NormalizeLogResult {
    std::vector<GrayFrame> frames;
    double norm_min = 0.0;  // meters, after clipping
    double norm_max = 0.0;
};
NormalizeLogResult normalize_log(const std::vector<DepthFrame>& depth_video,
                                 double near = 0.5, double far = 100.0);

/// Streaming pieces of normalize_log, for callers that cannot hold a whole
/// sequence: feed per-frame raw min/max into lognorm_params, then map frames
/// one at a time. normalize_log is implemented on top of these.
struct LogNormParams {
    double norm_min = 0.0;
    double norm_max = 0.0;
};
LogNormParams lognorm_params(double raw_min, double raw_max, double near, double far);
GrayFrame normalize_log_frame(const DepthFrame& frame, const LogNormParams& params);
/// Raw (unclipped) min/max over a frame's valid pixels; +inf/-inf when none.
void frame_minmax(const DepthFrame& frame, double* mn, double* mx);

/// LUT colorization of a normalized frame. Out-of-range values are clamped
/// and counted into *clamped if given.
RgbFrame colorize(const GrayFrame& normalized, const ColormapLUT& lut,
                  uint64_t* clamped = nullptr);

struct AugmentParams {
    double scale = 1.0;
    double shift = 0.0;  // meters
};

/// The augment draw: one (scale, shift) pair per sequence from the seed;
/// draws that would push the sequence minimum non-positive are resampled
/// (bounded retries, then SamplingError).
AugmentParams draw_augment_params(double sequence_min, uint64_t seed,
                                  std::array<double, 2> scale_range,
                                  std::array<double, 2> shift_range);

/// d' = scale * d + shift over the whole sequence.
struct AugmentResult {
    std::vector<DepthFrame> frames;
    AugmentParams applied;
};
AugmentResult augment_scale_shift(const std::vector<DepthFrame>& depth_video,
                                  uint64_t seed,
                                  std::array<double, 2> scale_range,
                                  std::array<double, 2> shift_range);

inline constexpr std::array<double, 2> kDefaultAugmentScale = {0.8, 1.25};
inline constexpr std::array<double, 2> kDefaultAugmentShift = {-0.2, 0.2};

struct EncodeOptions {
    double near = 0.5;
    double far = 100.0;
    bool augment = false;
    uint64_t seed = 0;
    std::array<double, 2> scale_range = kDefaultAugmentScale;
    std::array<double, 2> shift_range = kDefaultAugmentShift;
};

struct EncodedDepthVideo {
    std::vector<RgbFrame> frames;
    double norm_min = 0.0;
    double norm_max = 0.0;
    std::optional<AugmentParams> augment;
    uint64_t clamped_pixels = 0;
};

/// (optional augment) -> clip -> log-normalize -> colormap.
EncodedDepthVideo encode_depth_video(const std::vector<DepthFrame>& depth_video,
                                     const ColormapLUT& lut,
                                     const EncodeOptions& opts = {});

}  // namespace dw

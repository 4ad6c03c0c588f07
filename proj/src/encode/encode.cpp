// Copyright (C) 2026 the depthwarp authors
// SPDX-License-Identifier: Apache-2.0
#include "dw/encode.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "dw/kernels/kernels.hpp"
#include "dw/rng.hpp"

namespace dw {

void frame_minmax(const DepthFrame& frame, double* mn, double* mx) {
    kernels::active_kernels().minmax_valid(frame.values.data(), frame.valid.data(),
                                           frame.values.size(), mn, mx);
}

LogNormParams lognorm_params(double raw_min, double raw_max, double near, double far) {
    if (!(near > 0.0) || !(far > near))
        throw ValidationError("normalize_log: require 0 < near < far");
    LogNormParams p;
    if (!(raw_min <= raw_max)) {
        // no valid pixel anywhere: degenerate, everything at the far plane
        p.norm_min = p.norm_max = far;
    } else {
        // clipping is monotone, so min/max over clipped values = clip(min/max)
        p.norm_min = std::clamp(raw_min, near, far);
        p.norm_max = std::clamp(raw_max, near, far);
    }
    return p;
}

GrayFrame normalize_log_frame(const DepthFrame& f, const LogNormParams& p) {
    const double log_min = std::log(p.norm_min);
    const double log_max = std::log(p.norm_max);
    const double range = log_max - log_min;
    const bool degenerate = !(range > 0.0);

    GrayFrame g(f.width, f.height);
    for (size_t i = 0; i < f.values.size(); ++i) {
        if (degenerate) {
            g.values[i] = 0.5;
            continue;
        }
        const double d =
            f.valid[i] ? std::clamp(f.values[i], p.norm_min, p.norm_max) : p.norm_max;
        // dividing by the range makes the endpoints land on 0 and 1 exactly
        // (x/x == 1); the clamp guards the last-ulp wobble of log
        g.values[i] = std::clamp((std::log(d) - log_min) / range, 0.0, 1.0);
    }
    return g;
}

NormalizeLogResult normalize_log(const std::vector<DepthFrame>& depth_video,
                                 double near, double far) {
    if (depth_video.empty()) throw NoDataError("normalize_log: empty sequence");

    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (const auto& f : depth_video) {
        double fl, fh;
        frame_minmax(f, &fl, &fh);
        lo = fl < lo ? fl : lo;
        hi = fh > hi ? fh : hi;
    }
    const LogNormParams params = lognorm_params(lo, hi, near, far);

    NormalizeLogResult out;
    out.norm_min = params.norm_min;
    out.norm_max = params.norm_max;
    out.frames.reserve(depth_video.size());
    for (const auto& f : depth_video) out.frames.push_back(normalize_log_frame(f, params));
    return out;
}

RgbFrame colorize(const GrayFrame& normalized, const ColormapLUT& lut, uint64_t* clamped) {
    RgbFrame out(normalized.width, normalized.height);
    uint64_t n_clamped = 0;
    for (size_t i = 0; i < normalized.values.size(); ++i) {
        double t = normalized.values[i];
        if (t < 0.0 || t > 1.0) {
            ++n_clamped;
            t = std::clamp(t, 0.0, 1.0);
        }
        const auto rgb = lut.sample(t);
        out.rgb[i * 3] = rgb[0];
        out.rgb[i * 3 + 1] = rgb[1];
        out.rgb[i * 3 + 2] = rgb[2];
    }
    if (clamped) *clamped += n_clamped;
    return out;
}

AugmentParams draw_augment_params(double sequence_min, uint64_t seed,
                                  std::array<double, 2> scale_range,
                                  std::array<double, 2> shift_range) {
    Rng rng(seed);
    AugmentParams params;
    constexpr int kMaxDraws = 64;
    for (int draw = 0; draw < kMaxDraws; ++draw) {
        params.scale = rng.uniform(scale_range[0], scale_range[1]);
        params.shift = rng.uniform(shift_range[0], shift_range[1]);
        if (!std::isfinite(sequence_min)) return params;  // nothing to violate
        if (params.scale * sequence_min + params.shift > 0.0) return params;
    }
    throw SamplingError(
        "augment_scale_shift: ranges keep producing non-positive depths "
        "(sequence min " + std::to_string(sequence_min) + ")");
}

AugmentResult augment_scale_shift(const std::vector<DepthFrame>& depth_video,
                                  uint64_t seed, std::array<double, 2> scale_range,
                                  std::array<double, 2> shift_range) {
    if (depth_video.empty()) throw NoDataError("augment_scale_shift: empty sequence");

    const auto& K = kernels::active_kernels();
    double seq_min = std::numeric_limits<double>::infinity();
    for (const auto& f : depth_video) {
        double lo, hi;
        K.minmax_valid(f.values.data(), f.valid.data(), f.values.size(), &lo, &hi);
        seq_min = lo < seq_min ? lo : seq_min;
    }

    AugmentResult out;
    out.applied = draw_augment_params(seq_min, seed, scale_range, shift_range);
    const AugmentParams params = out.applied;
    out.frames.reserve(depth_video.size());
    for (const auto& f : depth_video) {
        DepthFrame g(f.width, f.height);
        K.affine(f.values.data(), params.scale, params.shift, f.values.size(),
                 g.values.data());
        g.valid = f.valid;
        for (size_t i = 0; i < g.values.size(); ++i)
            if (!g.valid[i]) g.values[i] = 0.0;
        out.frames.push_back(std::move(g));
    }
    return out;
}

EncodedDepthVideo encode_depth_video(const std::vector<DepthFrame>& depth_video,
                                     const ColormapLUT& lut, const EncodeOptions& opts) {
    EncodedDepthVideo out;
    const std::vector<DepthFrame>* source = &depth_video;
    AugmentResult augmented;
    if (opts.augment) {
        augmented = augment_scale_shift(depth_video, opts.seed, opts.scale_range,
                                        opts.shift_range);
        out.augment = augmented.applied;
        source = &augmented.frames;
    }
    NormalizeLogResult norm = normalize_log(*source, opts.near, opts.far);
    out.norm_min = norm.norm_min;
    out.norm_max = norm.norm_max;
    out.frames.reserve(norm.frames.size());
    for (const auto& g : norm.frames) out.frames.push_back(colorize(g, lut, &out.clamped_pixels));
    return out;
}

}  // namespace dw

// Copyright (C) 2026 the depthwarp authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "dw/errors.hpp"

namespace dw {

/// Dense (batch, frames, spatial-tokens, channels) tensor used by the
/// training-math contracts. Layout is row-major over (b, f, s, d).
struct LatentTensor {
    int64_t b = 0, f = 0, s = 0, d = 0;
    std::vector<double> values;

    LatentTensor() = default;
    LatentTensor(int64_t b_, int64_t f_, int64_t s_, int64_t d_)
        : b(b_), f(f_), s(s_), d(d_), values(size_t(b_ * f_ * s_ * d_), 0.0) {
        if (b_ <= 0 || f_ <= 0 || s_ <= 0 || d_ <= 0)
            throw DimMismatchError("LatentTensor: dims must be positive");
    }

    bool same_dims(const LatentTensor& o) const {
        return b == o.b && f == o.f && s == o.s && d == o.d;
    }
    size_t index(int64_t bi, int64_t fi, int64_t si, int64_t di) const {
        return size_t(((bi * f + fi) * s + si) * d + di);
    }
    double& at(int64_t bi, int64_t fi, int64_t si, int64_t di) {
        return values[index(bi, fi, si, di)];
    }
    double at(int64_t bi, int64_t fi, int64_t si, int64_t di) const {
        return values[index(bi, fi, si, di)];
    }
};

/// x_t = (1 - t) * x + t * z, t in [0, 1].
LatentTensor noise_interp(const LatentTensor& x, const LatentTensor& z, double t);

/// Constant rectified-flow velocity target z - x.
LatentTensor velocity_target(const LatentTensor& x, const LatentTensor& z);

/// Frame-dimension concatenation, source stream first: (b,f,s,d) x2 ->
/// (b,2f,s,d). Slicing recovers both inputs bit-for-bit.
LatentTensor dual_stream_concat(const LatentTensor& x_s, const LatentTensor& x_t);

/// Inverse of dual_stream_concat: halves [0, f) and [f, 2f).
std::pair<LatentTensor, LatentTensor> dual_stream_split(const LatentTensor& x);

/// View-token injection into the noise latent: elementwise sum.
LatentTensor view_inject(const LatentTensor& x_t, const LatentTensor& x_v);

/// Loss weight over the diffusion timestep. The default is constant 1; the
/// logit-normal density is available as a documented option. The chosen
/// scheme is always reported alongside the value, never silently applied.
enum class WeightScheme { constant_one, logit_normal };
double loss_weight(double t, WeightScheme scheme, double mean = 0.0, double sigma = 1.0);

}  // namespace dw

// Copyright (C) 2026 the depthwarp authors
// SPDX-License-Identifier: Apache-2.0
#include "dw/sched.hpp"

#include <cmath>
#include <cstring>

#include "dw/kernels/kernels.hpp"

namespace dw {

namespace {

void require_same_dims(const LatentTensor& a, const LatentTensor& b, const char* op) {
    if (!a.same_dims(b)) throw DimMismatchError(std::string(op) + ": tensor dims differ");
}

}  // namespace

LatentTensor noise_interp(const LatentTensor& x, const LatentTensor& z, double t) {
    require_same_dims(x, z, "noise_interp");
    if (!(t >= 0.0 && t <= 1.0))
        throw ValidationError("noise_interp: t must be in [0, 1]");
    LatentTensor out(x.b, x.f, x.s, x.d);
    kernels::active_kernels().lerp(x.values.data(), z.values.data(), t, x.values.size(),
                                   out.values.data());
    return out;
}

LatentTensor velocity_target(const LatentTensor& x, const LatentTensor& z) {
    require_same_dims(x, z, "velocity_target");
    LatentTensor out(x.b, x.f, x.s, x.d);
    kernels::active_kernels().sub(z.values.data(), x.values.data(), x.values.size(),
                                  out.values.data());
    return out;
}

LatentTensor dual_stream_concat(const LatentTensor& x_s, const LatentTensor& x_t) {
    require_same_dims(x_s, x_t, "dual_stream_concat");
    LatentTensor out(x_s.b, 2 * x_s.f, x_s.s, x_s.d);
    const size_t block = size_t(x_s.f * x_s.s * x_s.d);  // one batch item's tokens
    for (int64_t bi = 0; bi < x_s.b; ++bi) {
        std::memcpy(out.values.data() + size_t(2 * bi) * block,
                    x_s.values.data() + size_t(bi) * block, block * sizeof(double));
        std::memcpy(out.values.data() + size_t(2 * bi + 1) * block,
                    x_t.values.data() + size_t(bi) * block, block * sizeof(double));
    }
    return out;
}

std::pair<LatentTensor, LatentTensor> dual_stream_split(const LatentTensor& x) {
    if (x.f % 2 != 0) throw DimMismatchError("dual_stream_split: odd frame dimension");
    LatentTensor a(x.b, x.f / 2, x.s, x.d), b(x.b, x.f / 2, x.s, x.d);
    const size_t block = size_t((x.f / 2) * x.s * x.d);
    for (int64_t bi = 0; bi < x.b; ++bi) {
        std::memcpy(a.values.data() + size_t(bi) * block,
                    x.values.data() + size_t(2 * bi) * block, block * sizeof(double));
        std::memcpy(b.values.data() + size_t(bi) * block,
                    x.values.data() + size_t(2 * bi + 1) * block, block * sizeof(double));
    }
    return {std::move(a), std::move(b)};
}

LatentTensor view_inject(const LatentTensor& x_t, const LatentTensor& x_v) {
    require_same_dims(x_t, x_v, "view_inject");
    LatentTensor out(x_t.b, x_t.f, x_t.s, x_t.d);
    kernels::active_kernels().add(x_t.values.data(), x_v.values.data(), x_t.values.size(),
                                  out.values.data());
    return out;
}

double loss_weight(double t, WeightScheme scheme, double mean, double sigma) {
    switch (scheme) {
        case WeightScheme::constant_one:
            return 1.0;
        case WeightScheme::logit_normal: {
            if (!(t > 0.0 && t < 1.0)) return 0.0;
            const double logit = std::log(t / (1.0 - t));
            const double z = (logit - mean) / sigma;
            constexpr double inv_sqrt_2pi = 0.3989422804014327;
            return inv_sqrt_2pi / (sigma * t * (1.0 - t)) * std::exp(-0.5 * z * z);
        }
    }
    return 1.0;
}

}  // namespace dw

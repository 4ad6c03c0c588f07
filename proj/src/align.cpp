// Copyright (C) 2026 the depthwarp authors
// SPDX-License-Identifier: Apache-2.0
#include "dw/align.hpp"

#include <cmath>
#include <string>

#include "dw/kernels/kernels.hpp"
#include "dw/parallel.hpp"

namespace dw {

namespace {

void kahan_add(double& sum, double& comp, double term) {
    double y = term - comp;
    double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
}

void check_shapes(const std::vector<DepthFrame>& relative,
                  const std::vector<DepthFrame>& metric) {
    if (relative.size() != metric.size())
        throw LengthMismatchError("fit_scale_shift: sequence lengths differ (" +
                                  std::to_string(relative.size()) + " vs " +
                                  std::to_string(metric.size()) + ")");
    for (size_t t = 0; t < relative.size(); ++t) {
        if (relative[t].width != metric[t].width || relative[t].height != metric[t].height)
            throw DimMismatchError("fit_scale_shift: frame " + std::to_string(t) +
                                   " dimensions differ");
    }
}

}  // namespace

AlignmentResult fit_scale_shift(const std::vector<DepthFrame>& relative,
                                const std::vector<DepthFrame>& metric,
                                const AlignOptions& opts) {
    check_shapes(relative, metric);
    const auto& K = kernels::active_kernels();
    const size_t nframes = relative.size();

    std::vector<kernels::AlignSums> partials(nframes);
    parallel_for(0, int64_t(nframes), opts.threads, [&](int64_t lo, int64_t hi) {
        for (int64_t t = lo; t < hi; ++t) {
            K.align_accumulate(relative[t].values.data(), relative[t].valid.data(),
                               metric[t].values.data(), metric[t].valid.data(),
                               relative[t].values.size(), opts.depth_min,
                               opts.depth_max, &partials[t]);
        }
    });

    // merge in fixed frame order so the result is partition-independent
    double su = 0, cu = 0, su2 = 0, cu2 = 0, sw = 0, cw = 0, suw = 0, cuw = 0;
    uint64_t n = 0;
    for (const auto& p : partials) {
        kahan_add(su, cu, p.su);
        kahan_add(su2, cu2, p.su2);
        kahan_add(sw, cw, p.sw);
        kahan_add(suw, cuw, p.suw);
        n += p.n;
    }

    if (n == 0) throw NoDataError("fit_scale_shift: no valid pixel pairs");
    const double dn = double(n);
    const double denom = dn * su2 - su * su;  // n^2 * Var(1/D)
    if (!(denom > 1e-12 * dn * su2))
        throw DegenerateFitError(
            "fit_scale_shift: inverse relative depth has no spread (needs >= 2 distinct values)");

    AlignmentResult res;
    res.s = (dn * suw - su * sw) / denom;
    res.b = (sw - res.s * su) / dn;
    res.n_pixels = n;

    // second pass for the residual; exact-fit inputs report exactly zero
    std::vector<kernels::ResidualSums> rparts(nframes);
    parallel_for(0, int64_t(nframes), opts.threads, [&](int64_t lo, int64_t hi) {
        for (int64_t t = lo; t < hi; ++t) {
            K.align_residual(relative[t].values.data(), relative[t].valid.data(),
                             metric[t].values.data(), metric[t].valid.data(),
                             relative[t].values.size(), opts.depth_min,
                             opts.depth_max, res.s, res.b, &rparts[t]);
        }
    });
    double sr2 = 0, cr2 = 0;
    for (const auto& p : rparts) kahan_add(sr2, cr2, p.sr2);
    res.residual = std::sqrt(std::max(0.0, sr2) / dn);
    return res;
}

DepthFrame apply_alignment(const DepthFrame& frame, const AlignmentResult& result) {
    DepthFrame out(frame.width, frame.height);
    kernels::active_kernels().align_apply(frame.values.data(), frame.valid.data(),
                                          frame.values.size(), result.s, result.b,
                                          out.values.data(), out.valid.data());
    return out;
}

}  // namespace dw

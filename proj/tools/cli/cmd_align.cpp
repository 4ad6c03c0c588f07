// Copyright (C) 2026 the depthwarp authors
// SPDX-License-Identifier: Apache-2.0
#include <fstream>

#include "cli/commands.hpp"
#include "cli/common.hpp"
#include "dw/align.hpp"

namespace dw::cli {

namespace {

std::vector<DepthFrame> load_depth_stream(const io::Manifest& m) {
    std::vector<DepthFrame> frames;
    frames.reserve(size_t(m.frames));
    for (size_t i = 0; i < size_t(m.frames); ++i) frames.push_back(read_depth_entry(m, i));
    return frames;
}

}  // namespace

int cmd_align(const AlignArgs& a) {
    const io::Manifest rel = io::load_manifest(a.relative_manifest);
    const io::Manifest met = io::load_manifest(a.metric_manifest);
    io::validate_manifest(rel);
    io::validate_manifest(met);

    progress("align", "frames=" + std::to_string(rel.frames));
    const std::vector<DepthFrame> relative = load_depth_stream(rel);
    const std::vector<DepthFrame> metric = load_depth_stream(met);

    AlignOptions opts;
    opts.threads = a.threads;
    const AlignmentResult r = fit_scale_shift(relative, metric, opts);
    progress("align", "s=" + std::to_string(r.s) + " b=" + std::to_string(r.b) +
                          " n=" + std::to_string(r.n_pixels));

    std::ofstream out(a.out_path);
    if (!out) throw FormatError(a.out_path + ": cannot open for writing");
    out << alignment_to_json(r.s, r.b, r.residual, r.n_pixels).dump(2) << "\n";
    return 0;
}

}  // namespace dw::cli

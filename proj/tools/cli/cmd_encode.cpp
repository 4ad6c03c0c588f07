// Copyright (C) 2026 the depthwarp authors
// SPDX-License-Identifier: Apache-2.0
#include <fstream>
#include <limits>

#include "cli/commands.hpp"
#include "cli/common.hpp"
#include "dw/encode.hpp"
#include "dw/io/png_io.hpp"
#include "dw/kernels/kernels.hpp"
#include "dw/parallel.hpp"

namespace dw::cli {

// Streaming: pass 1 finds the sequence min/max (and the augment draw), pass 2
// maps and writes frame by frame. Matches encode_depth_video bit for bit.
int cmd_encode(const EncodeArgs& a) {
    const io::Manifest depth_man = io::load_manifest(a.depth_manifest);
    io::validate_manifest(depth_man);
    const int n = depth_man.frames;

    const ColormapLUT lut =
        a.lut_file.empty() ? ColormapLUT::spectral_reversed() : ColormapLUT::from_file(a.lut_file);

    constexpr double kInf = std::numeric_limits<double>::infinity();
    std::vector<double> frame_min(size_t(n), kInf), frame_max(size_t(n), -kInf);
    parallel_for(0, n, a.threads, [&](int64_t lo, int64_t hi) {
        for (int64_t t = lo; t < hi; ++t) {
            const DepthFrame d = read_depth_entry(depth_man, size_t(t));
            frame_minmax(d, &frame_min[size_t(t)], &frame_max[size_t(t)]);
        }
    });
    double raw_min = kInf, raw_max = -kInf;
    for (int t = 0; t < n; ++t) {
        raw_min = frame_min[size_t(t)] < raw_min ? frame_min[size_t(t)] : raw_min;
        raw_max = frame_max[size_t(t)] > raw_max ? frame_max[size_t(t)] : raw_max;
    }

    AugmentParams aug;
    if (a.augment) {
        aug = draw_augment_params(raw_min, a.seed, a.scale_range, a.shift_range);
        // the augment rescales the sequence extrema as well
        raw_min = aug.scale * raw_min + aug.shift;
        raw_max = aug.scale * raw_max + aug.shift;
        progress("encode", "augment scale=" + std::to_string(aug.scale) +
                               " shift=" + std::to_string(aug.shift));
    }
    const LogNormParams params = lognorm_params(raw_min, raw_max, a.near, a.far);
    progress("encode", "norm_min=" + std::to_string(params.norm_min) +
                           " norm_max=" + std::to_string(params.norm_max));

    fs::create_directories(fs::path(a.out_dir) / "encoded");
    std::vector<std::string> files(static_cast<size_t>(n));
    std::vector<uint64_t> clamped(size_t(n), 0);
    const auto& KR = kernels::active_kernels();
    parallel_for(0, n, a.threads, [&](int64_t lo, int64_t hi) {
        for (int64_t t = lo; t < hi; ++t) {
            DepthFrame d = read_depth_entry(depth_man, size_t(t));
            if (a.augment) {
                KR.affine(d.values.data(), aug.scale, aug.shift, d.values.size(),
                          d.values.data());
                for (size_t i = 0; i < d.values.size(); ++i)
                    if (!d.valid[i]) d.values[i] = 0.0;
            }
            const GrayFrame g = normalize_log_frame(d, params);
            const RgbFrame rgb = colorize(g, lut, &clamped[size_t(t)]);
            const std::string name = seq_name("", int(t), 5, ".png");
            io::write_rgb_png(rgb, (fs::path(a.out_dir) / "encoded" / name).string());
            files[size_t(t)] = "encoded/" + name;
        }
    });
    uint64_t total_clamped = 0;
    for (uint64_t c : clamped) total_clamped += c;

    ordered_json sidecar;
    sidecar["norm_min"] = params.norm_min;
    sidecar["norm_max"] = params.norm_max;
    sidecar["near"] = a.near;
    sidecar["far"] = a.far;
    sidecar["lut"] = a.lut_file.empty() ? "spectral_reversed" : a.lut_file;
    sidecar["clamped_pixels"] = total_clamped;
    if (a.augment) {
        sidecar["augment"] = {{"scale", aug.scale}, {"shift", aug.shift}, {"seed", a.seed}};
    }
    {
        std::ofstream out((fs::path(a.out_dir) / "encoding.json").string());
        out << sidecar.dump(2) << "\n";
    }

    io::Manifest out_man;
    out_man.frames = n;
    out_man.width = depth_man.width;
    out_man.height = depth_man.height;
    out_man.streams["encoded"] = files;
    if (!a.mask_manifest.empty()) {
        const io::Manifest mask_man = io::load_manifest(a.mask_manifest);
        std::vector<std::string> masks;
        for (const auto& rel : mask_man.stream("mask"))
            masks.push_back(
                fs::relative(mask_man.resolve(rel), fs::path(a.out_dir)).string());
        out_man.streams["mask"] = masks;
    }
    out_man.provenance["encoding"] = sidecar;
    out_man.provenance["config_hash"] = io::config_hash_hex(sidecar);
    io::save_manifest(out_man, (fs::path(a.out_dir) / "manifest.json").string());
    return 0;
}

}  // namespace dw::cli

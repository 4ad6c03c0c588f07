// Copyright (C) 2026 the depthwarp authors
// SPDX-License-Identifier: Apache-2.0
#include <chrono>
#include <fstream>

#include "cli/commands.hpp"
#include "cli/common.hpp"
#include "dw/align.hpp"
#include "dw/rng.hpp"

namespace dw::cli {

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

// align -> warp (per target camera) -> encode (per target) -> optional
// metrics, all driven off a synth scene manifest. Every stage output chains
// the upstream config hash, so the whole run replays from manifests alone.
int cmd_pipeline(const PipelineArgs& a) {
    const auto t_start = std::chrono::steady_clock::now();

    std::ifstream scene_in((fs::path(a.scene_dir) / "scene.json").string());
    if (!scene_in)
        throw FormatError(a.scene_dir + "/scene.json: cannot open (expected a synth scene)");
    ordered_json scene;
    scene_in >> scene;
    const int source_cam = scene.at("source_cam").get<int>();
    const std::vector<std::string> cam_dirs =
        scene.at("cams").get<std::vector<std::string>>();

    const fs::path src_dir = fs::path(a.scene_dir) / cam_dirs.at(size_t(source_cam));
    const std::string src_manifest = (src_dir / "manifest.json").string();
    const std::string src_cams = (src_dir / "cams.json").string();

    ordered_json report;
    report["scene"] = a.scene_dir;
    ordered_json stages = ordered_json::array();

    // ---- align ----
    const fs::path align_dir = fs::path(a.out_dir) / "align";
    {
        const auto t0 = std::chrono::steady_clock::now();
        StageGuard guard(align_dir);
        AlignArgs args;
        args.relative_manifest =
            a.relative_manifest.empty() ? src_manifest : a.relative_manifest;
        args.metric_manifest = src_manifest;
        args.out_path = (align_dir / "alignment.json").string();
        args.threads = a.threads;
        if (cmd_align(args) != 0) throw Error("pipeline: align stage failed");
        guard.done();
        stages.push_back({{"stage", "align"}, {"seconds", seconds_since(t0)}});
    }

    // ---- warp: source depth into every target camera ----
    std::vector<std::string> warp_dirs;
    for (size_t c = 0; c < cam_dirs.size(); ++c) {
        if (int(c) == source_cam) continue;
        const auto t0 = std::chrono::steady_clock::now();
        const fs::path warp_dir = fs::path(a.out_dir) / "warp" / cam_dirs[c];
        StageGuard guard(warp_dir);
        WarpArgs args;
        args.depth_manifest = src_manifest;
        args.cams_src = src_cams;
        args.cams_tgt = (fs::path(a.scene_dir) / cam_dirs[c] / "cams.json").string();
        args.out_dir = warp_dir.string();
        args.alignment_json = (align_dir / "alignment.json").string();
        args.stretch_threshold = a.stretch_threshold;
        args.near = a.near;
        args.far = a.far;
        args.threads = a.threads;
        if (cmd_warp(args) != 0) throw Error("pipeline: warp stage failed");
        guard.done();
        warp_dirs.push_back(warp_dir.string());
        stages.push_back(
            {{"stage", "warp/" + cam_dirs[c]}, {"seconds", seconds_since(t0)}});
    }

    // ---- encode each warped stream ----
    std::vector<std::string> encode_dirs;
    {
        size_t w = 0;
        for (size_t c = 0; c < cam_dirs.size(); ++c) {
            if (int(c) == source_cam) continue;
            const auto t0 = std::chrono::steady_clock::now();
            const fs::path enc_dir = fs::path(a.out_dir) / "encode" / cam_dirs[c];
            StageGuard guard(enc_dir);
            EncodeArgs args;
            args.depth_manifest = (fs::path(warp_dirs[w]) / "manifest.json").string();
            args.mask_manifest = args.depth_manifest;
            args.out_dir = enc_dir.string();
            args.near = a.near;
            args.far = a.far;
            args.augment = a.augment;
            args.seed = mix_seed(a.seed, 7001 + w);
            args.threads = a.threads;
            if (cmd_encode(args) != 0) throw Error("pipeline: encode stage failed");
            guard.done();
            encode_dirs.push_back(enc_dir.string());
            stages.push_back(
                {{"stage", "encode/" + cam_dirs[c]}, {"seconds", seconds_since(t0)}});
            ++w;
        }
    }

    // ---- optional metrics against externally estimated cameras ----
    if (!a.est_cams.empty()) {
        const auto t0 = std::chrono::steady_clock::now();
        const fs::path mdir = fs::path(a.out_dir) / "metrics";
        StageGuard guard(mdir);
        MetricsArgs args;
        args.gt_cams = src_cams;
        args.est_cams = a.est_cams;
        args.align = a.metrics_align;
        args.out_path = (mdir / "report.json").string();
        if (cmd_metrics(args) != 0) throw Error("pipeline: metrics stage failed");
        guard.done();
        stages.push_back({{"stage", "metrics"}, {"seconds", seconds_since(t0)}});
    }

    // ---- pipeline summary manifest (deterministic; no timings inside) ----
    ordered_json summary;
    summary["version"] = "depthwarp/1";
    summary["kind"] = "pipeline";
    summary["scene"] = scene;
    ordered_json config;
    config["stretch_threshold"] = a.stretch_threshold;
    config["near"] = a.near;
    config["far"] = a.far;
    config["augment"] = a.augment;
    config["seed"] = a.seed;
    summary["config"] = config;
    summary["config_hash"] = io::config_hash_hex(config);
    ordered_json outs = ordered_json::array();
    for (const auto& d : warp_dirs)
        outs.push_back(fs::relative(d, a.out_dir).string());
    for (const auto& d : encode_dirs)
        outs.push_back(fs::relative(d, a.out_dir).string());
    summary["outputs"] = outs;
    {
        std::ofstream out((fs::path(a.out_dir) / "pipeline.json").string());
        out << summary.dump(2) << "\n";
    }

    if (!a.report_path.empty()) {
        report["stages"] = stages;
        report["total_seconds"] = seconds_since(t_start);
        report["threads"] = a.threads;
        std::ofstream out(a.report_path);
        if (!out) throw FormatError(a.report_path + ": cannot open for writing");
        out << report.dump(2) << "\n";
    }
    progress("pipeline", "done targets=" + std::to_string(warp_dirs.size()) +
                             " seconds=" + std::to_string(seconds_since(t_start)));
    return 0;
}

}  // namespace dw::cli

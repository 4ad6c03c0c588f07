// Copyright (C) 2026 the depthwarp authors
// SPDX-License-Identifier: Apache-2.0
#include <CLI11.hpp>

#include "cli/commands.hpp"
#include "dw/errors.hpp"

namespace dw::cli {

int run_cli(const std::vector<std::string>& args) {
    CLI::App app{"depthwarp: depth alignment, depth-to-mesh warping, depth encoding,\n"
                 "trajectory synthesis, camera metrics and a procedural multi-camera\n"
                 "synthetic dataset generator"};
    app.require_subcommand(1);

    int rc = 0;

    AlignArgs al;
    auto* align = app.add_subcommand(
        "align", "Fit the global inverse-depth scale/shift between two depth sequences");
    align->add_option("--relative", al.relative_manifest, "Manifest of the detailed relative depth (D)")
        ->required();
    align->add_option("--metric", al.metric_manifest, "Manifest of the camera-consistent metric depth (X)")
        ->required();
    align->add_option("--out", al.out_path, "Output alignment JSON {s, b, residual, n_pixels}")
        ->required();
    align->add_option("--threads", al.threads, "Worker threads (default: all cores, or DW_THREADS)");
    align->callback([&] { rc = cmd_align(al); });

    WarpArgs wa;
    auto* warp = app.add_subcommand(
        "warp", "Render a depth video's mesh under a target trajectory (depth + occlusion mask)");
    warp->add_option("--depth", wa.depth_manifest, "Source depth manifest")->required();
    warp->add_option("--cams-src", wa.cams_src, "Source camera file (JSON)")->required();
    warp->add_option("--cams-tgt", wa.cams_tgt, "Target camera file (JSON)")->required();
    warp->add_option("--out", wa.out_dir, "Output directory (depth PFM + mask PNG + manifest)")
        ->required();
    warp->add_option("--alignment", wa.alignment_json, "alignment.json to apply to the depth first");
    warp->add_option("--stretch-threshold", wa.stretch_threshold,
                     "Relative depth jump flagging stretched triangles (default 0.1)");
    warp->add_option("--near", wa.near, "Near plane, meters (default 0.5)");
    warp->add_option("--far", wa.far, "Far plane, meters (default 100)");
    warp->add_option("--dump-obj", wa.dump_obj_dir, "Debug: dump per-frame meshes as OBJ here");
    warp->add_option("--threads", wa.threads, "Worker threads");
    warp->callback([&] { rc = cmd_warp(wa); });

    EncodeArgs en;
    auto* encode = app.add_subcommand(
        "encode", "Clip, log-normalize and colormap a depth video into RGB frames");
    encode->add_option("--depth", en.depth_manifest, "Depth manifest to encode")->required();
    encode->add_option("--mask", en.mask_manifest, "Mask manifest carried alongside");
    encode->add_option("--out", en.out_dir, "Output directory")->required();
    encode->add_option("--near", en.near, "Near clip, meters (default 0.5)");
    encode->add_option("--far", en.far, "Far clip, meters (default 100)");
    encode->add_flag("--augment", en.augment, "Apply the random scale/shift augmentation");
    encode->add_option("--seed", en.seed, "Augmentation seed");
    encode->add_option("--scale-lo", en.scale_range[0], "Augment scale range low (default 0.8)");
    encode->add_option("--scale-hi", en.scale_range[1], "Augment scale range high (default 1.25)");
    encode->add_option("--shift-lo", en.shift_range[0], "Augment shift range low, meters (default -0.2)");
    encode->add_option("--shift-hi", en.shift_range[1], "Augment shift range high, meters (default 0.2)");
    encode->add_option("--lut", en.lut_file, "Colormap file (256 'r g b' lines); default embedded Spectral-reversed");
    encode->add_option("--threads", en.threads, "Worker threads");
    encode->callback([&] { rc = cmd_encode(en); });

    SampleTrajArgs tr;
    auto* traj = app.add_subcommand("sample-traj", "Sample random natural camera trajectories");
    traj->add_option("--lookat", tr.lookat, "Look-at point x,y,z (y-down world; default 0,-1.5,0)")
        ->delimiter(',');
    traj->add_option("--frames", tr.frames, "Poses per trajectory (default 81)");
    traj->add_option("--seed", tr.seed, "Base seed");
    traj->add_option("--count", tr.count, "Trajectories to emit (default 8)");
    traj->add_option("--out", tr.out, "Output camera file (count=1) or prefix")->required();
    traj->add_option("--res", tr.resolution, "Intrinsics resolution HxW (default 576x1024)");
    traj->add_option("--focal", tr.focal, "Focal length in pixels (default 500)");
    traj->add_option("--subject-height", tr.subject_height, "Look-at height above ground, meters (default 1.5)");
    traj->add_flag("--static-first", tr.first_static, "Make trajectory 0 a static camera");
    traj->callback([&] { rc = cmd_sample_traj(tr); });

    MetricsArgs me;
    auto* metrics = app.add_subcommand("metrics", "Camera accuracy: RotErr, TransErr, CamMC");
    metrics->add_option("--gt", me.gt_cams, "Ground-truth camera file")->required();
    metrics->add_option("--est", me.est_cams, "Estimated camera file")->required();
    metrics->add_option("--align", me.align, "Trajectory pre-alignment: none (raw) | sim7");
    metrics->add_option("--out", me.out_path, "Report JSON path")->required();
    metrics->callback([&] { rc = cmd_metrics(me); });

    SynthArgs sy;
    auto* synth = app.add_subcommand(
        "synth", "Procedural multi-camera synthetic dataset with exact ground-truth depth");
    synth->add_option("--scenes", sy.scenes, "Number of scenes");
    synth->add_option("--cams", sy.cams, "Cameras per scene (default 8)");
    synth->add_option("--frames", sy.frames, "Frames per video (default 33)");
    synth->add_option("--res", sy.resolution, "Resolution HxW (default 256x448)");
    synth->add_option("--seed", sy.seed, "Dataset seed");
    synth->add_option("--out", sy.out_dir, "Output dataset directory")->required();
    synth->add_option("--source", sy.source, "Source camera mode: static (default) | random");
    synth->add_option("--focal", sy.focal, "Focal length in pixels (default 0.9 * width)");
    synth->add_option("--threads", sy.threads, "Worker threads");
    synth->callback([&] { rc = cmd_synth(sy); });

    PipelineArgs pi;
    auto* pipeline = app.add_subcommand(
        "pipeline", "align -> warp -> encode (-> metrics) over one synth scene");
    pipeline->add_option("--scene", pi.scene_dir, "Scene directory from `synth`")->required();
    pipeline->add_option("--out", pi.out_dir, "Output directory")->required();
    pipeline->add_option("--relative", pi.relative_manifest,
                         "External relative-depth manifest for the align stage");
    pipeline->add_option("--est-cams", pi.est_cams, "Estimated cameras: adds the metrics stage");
    pipeline->add_option("--metrics-align", pi.metrics_align, "Metrics pre-alignment: none | sim7");
    pipeline->add_option("--report", pi.report_path, "Timing/summary JSON (outside the deterministic tree)");
    pipeline->add_option("--stretch-threshold", pi.stretch_threshold,
                         "Stretched-triangle threshold (default 0.1)");
    pipeline->add_option("--near", pi.near, "Near plane, meters (default 0.5)");
    pipeline->add_option("--far", pi.far, "Far plane, meters (default 100)");
    pipeline->add_flag("--augment", pi.augment, "Augment encoded depth");
    pipeline->add_option("--seed", pi.seed, "Pipeline seed");
    pipeline->add_option("--threads", pi.threads, "Worker threads");
    pipeline->callback([&] { rc = cmd_pipeline(pi); });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return rc;
}

}  // namespace dw::cli

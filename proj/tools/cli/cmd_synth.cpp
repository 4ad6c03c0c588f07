// Copyright (C) 2026 the depthwarp authors
// SPDX-License-Identifier: Apache-2.0
#include <fstream>

#include "cli/commands.hpp"
#include "cli/common.hpp"
#include "dw/io/camera_json.hpp"
#include "dw/io/pfm.hpp"
#include "dw/io/png_io.hpp"
#include "dw/parallel.hpp"
#include "dw/rng.hpp"
#include "dw/synth.hpp"
#include "dw/trajectory.hpp"

namespace dw::cli {

namespace {

const Vec3 kLookat{0.0, -1.5, 0.0};

}  // namespace

int cmd_synth(const SynthArgs& a) {
    if (a.cams < 2) throw ValidationError("synth: needs --cams >= 2");
    if (a.source != "static" && a.source != "random")
        throw ValidationError("synth: --source must be static or random");
    const auto [h, w] = parse_resolution(a.resolution);
    Intrinsics K;
    K.width = w;
    K.height = h;
    K.fx = K.fy = a.focal > 0.0 ? a.focal : 0.9 * w;
    K.cx = w / 2.0;
    K.cy = h / 2.0;
    K.validate();

    ordered_json scene_list = ordered_json::array();
    for (int s = 0; s < a.scenes; ++s) {
        const uint64_t scene_seed = mix_seed(a.seed, uint64_t(s));
        const SceneSpec scene = random_scene(scene_seed, a.frames);
        const std::string scene_name = seq_name("scene_", s, 4, "");
        const fs::path scene_dir = fs::path(a.out_dir) / scene_name;

        // cameras: 0 is the source (static by default), the rest move
        std::vector<std::vector<Pose>> cams;
        std::vector<ordered_json> cam_specs;
        for (int c = 0; c < a.cams; ++c) {
            const uint64_t start_seed = mix_seed(scene_seed, uint64_t(100 + 2 * c));
            const uint64_t path_seed = mix_seed(scene_seed, uint64_t(101 + 2 * c));
            const Pose start = sample_start(kLookat, 1.5, start_seed);
            const bool is_static = (c == 0 && a.source == "static");
            const SampledTrajectory traj =
                sample_trajectory(start, kLookat, a.frames, path_seed, {}, is_static);
            cams.push_back(traj.poses);
        }

        // streamed ground-truth render: rgb png + depth pfm per frame
        std::vector<std::vector<std::string>> rgb_files(size_t(a.cams)),
            depth_files(size_t(a.cams));
        for (int c = 0; c < a.cams; ++c) {
            const fs::path cam_dir = scene_dir / seq_name("cam_", c, 2, "");
            fs::create_directories(cam_dir / "rgb");
            fs::create_directories(cam_dir / "depth");
            rgb_files[size_t(c)].resize(size_t(a.frames));
            depth_files[size_t(c)].resize(size_t(a.frames));
        }
        const int64_t jobs = int64_t(a.cams) * a.frames;
        parallel_for(0, jobs, a.threads, [&](int64_t lo, int64_t hi) {
            for (int64_t j = lo; j < hi; ++j) {
                const int c = int(j / a.frames);
                const int f = int(j % a.frames);
                RgbFrame rgb;
                DepthFrame depth;
                render_frame(scene, f, cams[size_t(c)][size_t(f)], K, &rgb, &depth, 1);
                const fs::path cam_dir = scene_dir / seq_name("cam_", c, 2, "");
                const std::string rname = seq_name("rgb/", f, 5, ".png");
                const std::string dname = seq_name("depth/", f, 5, ".pfm");
                io::write_rgb_png(rgb, (cam_dir / rname).string());
                io::write_depth_pfm(depth, (cam_dir / dname).string());
                rgb_files[size_t(c)][size_t(f)] = rname;
                depth_files[size_t(c)][size_t(f)] = dname;
            }
        });
        for (int c = 0; c < a.cams; ++c) {
            const fs::path cam_dir = scene_dir / seq_name("cam_", c, 2, "");
            std::vector<io::CameraFrame> cam_frames;
            for (int f = 0; f < a.frames; ++f)
                cam_frames.push_back({f, cams[size_t(c)][size_t(f)], K});
            io::save_cameras(cam_frames, (cam_dir / "cams.json").string());

            io::Manifest man;
            man.frames = a.frames;
            man.width = K.width;
            man.height = K.height;
            man.streams["rgb"] = rgb_files[size_t(c)];
            man.streams["depth"] = depth_files[size_t(c)];
            man.camera_file = "cams.json";
            man.provenance["scene_seed"] = scene_seed;
            man.provenance["camera"] = c;
            io::save_manifest(man, (cam_dir / "manifest.json").string());
        }

        // per-scene manifest consumed by `pipeline`
        ordered_json sj;
        sj["version"] = "depthwarp/1";
        sj["kind"] = "scene";
        sj["frames"] = a.frames;
        sj["width"] = K.width;
        sj["height"] = K.height;
        sj["seed"] = scene_seed;
        sj["source_cam"] = 0;
        ordered_json cam_dirs = ordered_json::array();
        for (int c = 0; c < a.cams; ++c) cam_dirs.push_back(seq_name("cam_", c, 2, ""));
        sj["cams"] = cam_dirs;
        sj["convention"] = kCameraConvention;
        {
            std::ofstream out((scene_dir / "scene.json").string());
            out << sj.dump(2) << "\n";
        }
        scene_list.push_back(scene_name);
        progress("synth", "scene=" + std::to_string(s + 1) + "/" + std::to_string(a.scenes) +
                              " cams=" + std::to_string(a.cams) +
                              " frames=" + std::to_string(a.frames));
    }

    ordered_json pairs;
    pairs["version"] = "depthwarp/1";
    pairs["kind"] = "dataset";
    pairs["scenes"] = scene_list;
    pairs["cams_per_scene"] = a.cams;
    pairs["pairs_per_scene"] = a.cams - 1;
    pairs["frames"] = a.frames;
    pairs["resolution"] = a.resolution;
    pairs["seed"] = a.seed;
    pairs["source"] = a.source;
    pairs["config_hash"] = io::config_hash_hex(pairs);
    fs::create_directories(a.out_dir);
    std::ofstream out((fs::path(a.out_dir) / "pairs.json").string());
    out << pairs.dump(2) << "\n";
    return 0;
}

}  // namespace dw::cli

// Copyright (C) 2026 the depthwarp authors
// SPDX-License-Identifier: Apache-2.0
#include <fstream>

#include "cli/commands.hpp"
#include "cli/common.hpp"
#include "dw/io/camera_json.hpp"
#include "dw/rng.hpp"
#include "dw/trajectory.hpp"

namespace dw::cli {

namespace {

ordered_json spec_to_json(const TrajectorySpec& s) {
    ordered_json j;
    j["lookat"] = {s.lookat.x, s.lookat.y, s.lookat.z};
    j["start"] = {s.start.x, s.start.y, s.start.z};
    ordered_json wps = ordered_json::array();
    for (const auto& w : s.waypoints) wps.push_back({w.x, w.y, w.z});
    j["waypoints"] = wps;
    j["n_frames"] = s.n_frames;
    j["seed"] = s.seed;
    j["path_length"] = s.path_length;
    j["is_static"] = s.is_static;
    j["ranges"] = {{"dist_min", s.ranges.dist_min},
                   {"dist_max", s.ranges.dist_max},
                   {"start_offset_deg", s.ranges.start_offset_deg},
                   {"front_cone_deg", s.ranges.front_cone_deg},
                   {"path_scale_min", s.ranges.path_scale_min},
                   {"path_scale_max", s.ranges.path_scale_max},
                   {"pitch_limit_deg", s.ranges.pitch_limit_deg},
                   {"yaw_limit_deg", s.ranges.yaw_limit_deg},
                   {"max_step_deg", s.ranges.max_step_deg},
                   {"waypoints_min", s.ranges.waypoints_min},
                   {"waypoints_max", s.ranges.waypoints_max}};
    return j;
}

}  // namespace

int cmd_sample_traj(const SampleTrajArgs& a) {
    const auto [h, w] = parse_resolution(a.resolution);
    Intrinsics K;
    K.width = w;
    K.height = h;
    K.fx = K.fy = a.focal;
    K.cx = w / 2.0;
    K.cy = h / 2.0;
    K.validate();

    const Vec3 lookat{a.lookat[0], a.lookat[1], a.lookat[2]};
    ordered_json specs = ordered_json::array();

    for (int i = 0; i < a.count; ++i) {
        const uint64_t start_seed = mix_seed(a.seed, uint64_t(2 * i));
        const uint64_t path_seed = mix_seed(a.seed, uint64_t(2 * i + 1));
        const Pose start = sample_start(lookat, a.subject_height, start_seed);
        const bool is_static = a.first_static && i == 0;
        const SampledTrajectory traj =
            sample_trajectory(start, lookat, a.frames, path_seed, {}, is_static,
                              a.subject_height);

        std::vector<io::CameraFrame> cams;
        cams.reserve(traj.poses.size());
        for (size_t f = 0; f < traj.poses.size(); ++f)
            cams.push_back({int(f), traj.poses[f], K});

        std::string path = a.out;
        if (a.count > 1) {
            const fs::path base(a.out);
            const std::string stem =
                base.extension() == ".json" ? (base.parent_path() / base.stem()).string()
                                            : base.string();
            path = seq_name(stem + "_", i, 2, ".json");
        }
        fs::create_directories(fs::path(path).parent_path().empty()
                                   ? fs::path(".")
                                   : fs::path(path).parent_path());
        io::save_cameras(cams, path);
        ordered_json s = spec_to_json(traj.spec);
        s["camera_file"] = path;
        specs.push_back(s);
        progress("sample-traj", "trajectory=" + std::to_string(i + 1) + "/" +
                                    std::to_string(a.count) + " file=" + path);
    }

    // spec sidecar for reproducibility
    const fs::path base(a.out);
    const std::string spec_path =
        a.count > 1
            ? (base.extension() == ".json" ? (base.parent_path() / base.stem()).string()
                                           : base.string()) + "_specs.json"
            : base.string() + ".specs.json";
    std::ofstream out(spec_path);
    if (!out) throw FormatError(spec_path + ": cannot open for writing");
    out << specs.dump(2) << "\n";
    return 0;
}

}  // namespace dw::cli

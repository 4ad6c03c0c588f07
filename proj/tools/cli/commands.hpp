// Copyright (C) 2026 the depthwarp authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace dw::cli {

struct AlignArgs {
    std::string relative_manifest;
    std::string metric_manifest;
    std::string out_path;
    int threads = 0;
};
int cmd_align(const AlignArgs& a);

struct WarpArgs {
    std::string depth_manifest;
    std::string cams_src;
    std::string cams_tgt;
    std::string out_dir;
    std::string alignment_json;  // optional
    std::string dump_obj_dir;    // optional, debug
    double stretch_threshold = 0.1;
    double near = 0.5;
    double far = 100.0;
    int threads = 0;
};
int cmd_warp(const WarpArgs& a);

struct EncodeArgs {
    std::string depth_manifest;
    std::string mask_manifest;  // optional passthrough
    std::string out_dir;
    std::string lut_file;  // optional; default embedded spectral-reversed
    double near = 0.5;
    double far = 100.0;
    bool augment = false;
    uint64_t seed = 0;
    std::array<double, 2> scale_range = {0.8, 1.25};
    std::array<double, 2> shift_range = {-0.2, 0.2};
    int threads = 0;
};
int cmd_encode(const EncodeArgs& a);

struct SampleTrajArgs {
    std::array<double, 3> lookat = {0.0, -1.5, 0.0};
    int frames = 81;
    uint64_t seed = 0;
    int count = 8;
    std::string out;  // file for count==1, prefix otherwise
    std::string resolution = "576x1024";
    double focal = 500.0;
    double subject_height = 1.5;
    bool first_static = false;
};
int cmd_sample_traj(const SampleTrajArgs& a);

struct MetricsArgs {
    std::string gt_cams;
    std::string est_cams;
    std::string out_path;
    std::string align = "none";  // none | sim7
};
int cmd_metrics(const MetricsArgs& a);

struct SynthArgs {
    int scenes = 1;
    int cams = 8;
    int frames = 33;
    std::string resolution = "256x448";
    uint64_t seed = 0;
    std::string out_dir;
    std::string source = "static";  // static | random
    double focal = 0.0;             // 0 = derived from width
    int threads = 0;
};
int cmd_synth(const SynthArgs& a);

struct PipelineArgs {
    std::string scene_dir;
    std::string out_dir;
    std::string relative_manifest;  // optional external relative depth
    std::string est_cams;           // optional: metrics stage input
    std::string report_path;        // optional timing/summary JSON
    double stretch_threshold = 0.1;
    double near = 0.5;
    double far = 100.0;
    bool augment = false;
    uint64_t seed = 0;
    std::string metrics_align = "none";
    int threads = 0;
};
int cmd_pipeline(const PipelineArgs& a);

/// Full argv-style entry (excluding the program name); returns the exit code.
int run_cli(const std::vector<std::string>& args);

}  // namespace dw::cli

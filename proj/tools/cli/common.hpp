// Copyright (C) 2026 the depthwarp authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "dw/geometry.hpp"
#include "dw/io/manifest.hpp"

namespace dw::cli {

using ordered_json = nlohmann::ordered_json;
namespace fs = std::filesystem;

/// Structured progress line on stderr: "stage=<stage> <fields>".
void progress(const std::string& stage, const std::string& fields);

/// Reads one depth frame from a manifest's depth stream. PFM directly; PNG
/// entries are the 16-bit interop path and need `png16_scale` in provenance.
DepthFrame read_depth_entry(const io::Manifest& m, size_t index);

/// "HxW" (e.g. 576x1024) -> (height, width).
std::pair<int, int> parse_resolution(const std::string& text);

/// zero-padded numeric names: prefix + %0*d + ext
std::string seq_name(const std::string& prefix, int index, int pad, const std::string& ext);

ordered_json alignment_to_json(double s, double b, double residual, uint64_t n_pixels);

struct StageGuard {
    // drops a `.partial` marker for the stage; remove() on success, the
    // marker survives aborts for post-mortem
    fs::path marker;
    explicit StageGuard(const fs::path& stage_dir);
    void done();
};

}  // namespace dw::cli

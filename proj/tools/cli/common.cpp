// Copyright (C) 2026 the depthwarp authors
// SPDX-License-Identifier: Apache-2.0
#include "cli/common.hpp"

#include <cstdio>

#include "dw/io/pfm.hpp"
#include "dw/io/png_io.hpp"

namespace dw::cli {

void progress(const std::string& stage, const std::string& fields) {
    std::fprintf(stderr, "stage=%s %s\n", stage.c_str(), fields.c_str());
}

DepthFrame read_depth_entry(const io::Manifest& m, size_t index) {
    const auto& files = m.stream("depth");
    const fs::path p = m.resolve(files.at(index));
    if (p.extension() == ".pfm") return io::read_depth_pfm(p.string());
    if (p.extension() == ".png") {
        if (!m.provenance.contains("png16_scale"))
            throw ValidationError(p.string() +
                                  ": PNG depth needs 'png16_scale' (meters per unit) in the "
                                  "manifest provenance");
        return io::read_depth_png16(p.string(), m.provenance.at("png16_scale").get<double>());
    }
    throw ValidationError(p.string() + ": unsupported depth file type");
}

std::pair<int, int> parse_resolution(const std::string& text) {
    const auto x = text.find('x');
    if (x == std::string::npos)
        throw ValidationError("resolution must be HxW, e.g. 576x1024, got '" + text + "'");
    const int h = std::atoi(text.substr(0, x).c_str());
    const int w = std::atoi(text.substr(x + 1).c_str());
    if (h <= 0 || w <= 0) throw ValidationError("bad resolution '" + text + "'");
    return {h, w};
}

std::string seq_name(const std::string& prefix, int index, int pad, const std::string& ext) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%0*d", pad, index);
    return prefix + buf + ext;
}

ordered_json alignment_to_json(double s, double b, double residual, uint64_t n_pixels) {
    ordered_json j;
    j["s"] = s;
    j["b"] = b;
    j["residual"] = residual;
    j["n_pixels"] = n_pixels;
    return j;
}

StageGuard::StageGuard(const fs::path& stage_dir) {
    fs::create_directories(stage_dir);
    marker = stage_dir / ".partial";
    std::FILE* f = std::fopen(marker.string().c_str(), "w");
    if (f) std::fclose(f);
}

void StageGuard::done() {
    std::error_code ec;
    fs::remove(marker, ec);
}

}  // namespace dw::cli

// Copyright (C) 2026 the depthwarp authors
// SPDX-License-Identifier: Apache-2.0
#include <fstream>

#include "cli/commands.hpp"
#include "cli/common.hpp"
#include "dw/align.hpp"
#include "dw/io/camera_json.hpp"
#include "dw/io/obj.hpp"
#include "dw/io/pfm.hpp"
#include "dw/io/png_io.hpp"
#include "dw/mesh.hpp"
#include "dw/parallel.hpp"
#include "dw/raster.hpp"

namespace dw::cli {

int cmd_warp(const WarpArgs& a) {
    const io::Manifest depth_man = io::load_manifest(a.depth_manifest);
    io::validate_manifest(depth_man);
    const auto cams_src = io::load_cameras(a.cams_src);
    const auto cams_tgt = io::load_cameras(a.cams_tgt);
    if (int(cams_src.size()) != depth_man.frames || cams_tgt.size() != cams_src.size())
        throw LengthMismatchError("warp: depth frames (" + std::to_string(depth_man.frames) +
                                  "), source cams (" + std::to_string(cams_src.size()) +
                                  ") and target cams (" + std::to_string(cams_tgt.size()) +
                                  ") must agree");
    const Intrinsics K = io::shared_intrinsics(cams_src);
    if (K.width != depth_man.width || K.height != depth_man.height)
        throw ValidationError("warp: camera intrinsics resolution differs from depth frames");

    AlignmentResult alignment;  // identity unless provided
    bool have_alignment = false;
    if (!a.alignment_json.empty()) {
        std::ifstream in(a.alignment_json);
        if (!in) throw FormatError(a.alignment_json + ": cannot open");
        ordered_json j;
        in >> j;
        alignment.s = j.at("s").get<double>();
        alignment.b = j.at("b").get<double>();
        have_alignment = true;
    }

    fs::create_directories(fs::path(a.out_dir) / "depth");
    fs::create_directories(fs::path(a.out_dir) / "mask");
    if (!a.dump_obj_dir.empty()) fs::create_directories(a.dump_obj_dir);

    const int n = depth_man.frames;
    RenderOptions ropts;
    ropts.near = a.near;
    ropts.far = a.far;
    ropts.threads = 1;

    std::vector<std::string> depth_files(static_cast<size_t>(n)), mask_files(static_cast<size_t>(n));
    parallel_for(0, n, a.threads, [&](int64_t lo, int64_t hi) {
        for (int64_t t = lo; t < hi; ++t) {
            DepthFrame d = read_depth_entry(depth_man, size_t(t));
            if (have_alignment) d = apply_alignment(d, alignment);
            RenderOutput out;
            try {
                const WarpMesh mesh =
                    build_mesh(d, K, cams_src[size_t(t)].pose, a.stretch_threshold, int(t));
                if (!a.dump_obj_dir.empty())
                    io::write_obj(mesh, (fs::path(a.dump_obj_dir) /
                                         seq_name("mesh_", int(t), 5, ".obj")).string());
                out = render(mesh, K, cams_tgt[size_t(t)].pose, ropts);
            } catch (const EmptyMeshError&) {
                out.depth = DepthFrame(K.width, K.height);
                out.mask = MaskFrame(K.width, K.height, 0);
            }
            const std::string dname = seq_name("", int(t), 5, ".pfm");
            const std::string mname = seq_name("", int(t), 5, ".png");
            io::write_depth_pfm(out.depth,
                                (fs::path(a.out_dir) / "depth" / dname).string());
            io::write_mask_png(out.mask, (fs::path(a.out_dir) / "mask" / mname).string());
            depth_files[size_t(t)] = "depth/" + dname;
            mask_files[size_t(t)] = "mask/" + mname;
            progress("warp", "frame=" + std::to_string(t + 1) + "/" + std::to_string(n));
        }
    });

    ordered_json config;
    config["stretch_threshold"] = a.stretch_threshold;
    config["near"] = a.near;
    config["far"] = a.far;
    config["cams_src"] = a.cams_src;
    config["cams_tgt"] = a.cams_tgt;

    io::Manifest out_man;
    out_man.frames = n;
    out_man.width = K.width;
    out_man.height = K.height;
    out_man.streams["depth"] = depth_files;
    out_man.streams["mask"] = mask_files;
    const fs::path tgt_copy = fs::path(a.out_dir) / "cams_target.json";
    io::save_cameras(cams_tgt, tgt_copy.string());
    out_man.camera_file = "cams_target.json";
    out_man.provenance["config"] = config;
    out_man.provenance["config_hash"] = io::config_hash_hex(config);
    if (have_alignment)
        out_man.provenance["alignment"] =
            alignment_to_json(alignment.s, alignment.b, alignment.residual,
                              alignment.n_pixels);
    io::save_manifest(out_man, (fs::path(a.out_dir) / "manifest.json").string());
    return 0;
}

}  // namespace dw::cli

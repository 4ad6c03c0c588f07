// Copyright (C) 2026 the depthwarp authors
// SPDX-License-Identifier: Apache-2.0
#include <fstream>

#include "cli/commands.hpp"
#include "cli/common.hpp"
#include "dw/io/camera_json.hpp"
#include "dw/metrics.hpp"

namespace dw::cli {

int cmd_metrics(const MetricsArgs& a) {
    if (a.align != "none" && a.align != "sim7")
        throw ValidationError("metrics: --align must be none or sim7");
    const auto gt = io::poses_of(io::load_cameras(a.gt_cams));
    const auto est = io::poses_of(io::load_cameras(a.est_cams));
    const CameraAccuracyReport rep = camera_accuracy(gt, est, a.align == "sim7");

    ordered_json j;
    j["rot_err"] = rep.rot_err;
    j["trans_err"] = rep.trans_err;
    j["cam_mc"] = rep.cam_mc;
    j["n_frames"] = rep.n_frames;
    j["alignment_mode"] = rep.alignment_mode;
    // reserved for external neural metric tooling to merge into
    j["rs"] = nullptr;
    j["ifs"] = nullptr;
    j["mat_pix"] = nullptr;
    j["clip_v"] = nullptr;
    j["vbench"] = nullptr;

    std::ofstream out(a.out_path);
    if (!out) throw FormatError(a.out_path + ": cannot open for writing");
    out << j.dump(2) << "\n";
    progress("metrics", "rot_err=" + std::to_string(rep.rot_err) +
                            " trans_err=" + std::to_string(rep.trans_err) +
                            " cam_mc=" + std::to_string(rep.cam_mc));
    return 0;
}

}  // namespace dw::cli

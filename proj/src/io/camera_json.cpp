// Copyright (C) 2026 the depthwarp authors
// SPDX-License-Identifier: Apache-2.0
#include "dw/io/camera_json.hpp"

#include <fstream>

#include <json.hpp>

namespace dw::io {

using ordered_json = nlohmann::ordered_json;

std::vector<CameraFrame> load_cameras(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FormatError(path + ": cannot open");
    ordered_json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw FormatError(path + ": bad JSON (" + e.what() + ")");
    }
    if (!j.is_array() || j.empty()) throw FormatError(path + ": expected a non-empty array");

    std::vector<CameraFrame> cams;
    cams.reserve(j.size());
    for (const auto& o : j) {
        try {
            if (o.at("convention").get<std::string>() != kCameraConvention)
                throw FormatError(path + ": unsupported camera convention '" +
                                  o.at("convention").get<std::string>() + "', expected " +
                                  kCameraConvention);
            CameraFrame c;
            c.frame = o.at("frame").get<int>();
            const auto& r = o.at("rotation");
            const auto& t = o.at("translation");
            if (r.size() != 9 || t.size() != 3)
                throw FormatError(path + ": rotation/translation size mismatch");
            for (int i = 0; i < 9; ++i) c.pose.R.m[i] = r[i].get<double>();
            c.pose.t = {t[0].get<double>(), t[1].get<double>(), t[2].get<double>()};
            const auto& k = o.at("intrinsics");
            c.intrinsics.fx = k.at("fx").get<double>();
            c.intrinsics.fy = k.at("fy").get<double>();
            c.intrinsics.cx = k.at("cx").get<double>();
            c.intrinsics.cy = k.at("cy").get<double>();
            c.intrinsics.width = k.at("width").get<int>();
            c.intrinsics.height = k.at("height").get<int>();
            c.intrinsics.validate();
            if (!c.pose.is_orthonormal(1e-6))
                throw ValidationError(path + ": frame " + std::to_string(c.frame) +
                                      " rotation is not orthonormal");
            cams.push_back(c);
        } catch (const nlohmann::json::exception& e) {
            throw FormatError(path + ": bad camera entry (" + std::string(e.what()) + ")");
        }
    }
    return cams;
}

void save_cameras(const std::vector<CameraFrame>& cams, const std::string& path) {
    ordered_json j = ordered_json::array();
    for (const auto& c : cams) {
        ordered_json o;
        o["frame"] = c.frame;
        o["rotation"] = std::vector<double>(c.pose.R.m, c.pose.R.m + 9);
        o["translation"] = {c.pose.t.x, c.pose.t.y, c.pose.t.z};
        o["intrinsics"] = {{"fx", c.intrinsics.fx}, {"fy", c.intrinsics.fy},
                           {"cx", c.intrinsics.cx}, {"cy", c.intrinsics.cy},
                           {"width", c.intrinsics.width}, {"height", c.intrinsics.height}};
        o["convention"] = kCameraConvention;
        j.push_back(o);
    }
    std::ofstream out(path);
    if (!out) throw FormatError(path + ": cannot open for writing");
    out << j.dump(2) << "\n";
}

Intrinsics shared_intrinsics(const std::vector<CameraFrame>& cams) {
    if (cams.empty()) throw ValidationError("camera list is empty");
    const Intrinsics& k0 = cams.front().intrinsics;
    for (const auto& c : cams) {
        const Intrinsics& k = c.intrinsics;
        if (k.fx != k0.fx || k.fy != k0.fy || k.cx != k0.cx || k.cy != k0.cy ||
            k.width != k0.width || k.height != k0.height)
            throw ValidationError("camera intrinsics differ across frames");
    }
    return k0;
}

std::vector<Pose> poses_of(const std::vector<CameraFrame>& cams) {
    std::vector<Pose> out;
    out.reserve(cams.size());
    for (const auto& c : cams) out.push_back(c.pose);
    return out;
}

}  // namespace dw::io

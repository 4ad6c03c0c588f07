// Copyright (C) 2026 the depthwarp authors
// SPDX-License-Identifier: Apache-2.0
#include "dw/mesh.hpp"

#include <algorithm>

namespace dw {

namespace {

// max pairwise |d_i - d_j| / min(d_i, d_j) over a triangle's corner depths
// equals (max - min) / min
inline bool tri_stretched(double d0, double d1, double d2, double threshold) {
    const double lo = std::min(d0, std::min(d1, d2));
    const double hi = std::max(d0, std::max(d1, d2));
    return (hi - lo) / lo > threshold;
}

}  // namespace

WarpMesh build_mesh(const DepthFrame& depth, const Intrinsics& K, const Pose& pose,
                    double stretch_threshold, int source_frame) {
    K.validate();
    const int w = depth.width, h = depth.height;

    WarpMesh mesh;
    mesh.source_frame = source_frame;

    // vertex per valid pixel, unprojected at the pixel center
    std::vector<int32_t> vidx(size_t(w) * h, -1);
    mesh.vertices.reserve(depth.valid_count());
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            if (!depth.is_valid(x, y)) continue;
            vidx[depth.index(x, y)] = int32_t(mesh.vertices.size());
            Vec3 cam = unproject(double(x) + 0.5, double(y) + 0.5, depth.at(x, y), K);
            mesh.vertices.push_back(pose.to_world(cam));
        }
    }

    // two triangles per fully-valid quad, split along the \ diagonal;
    // topology depends only on validity, never on depth values
    for (int y = 0; y + 1 < h; ++y) {
        for (int x = 0; x + 1 < w; ++x) {
            const int32_t a = vidx[depth.index(x, y)];
            const int32_t b = vidx[depth.index(x + 1, y)];
            const int32_t c = vidx[depth.index(x, y + 1)];
            const int32_t d = vidx[depth.index(x + 1, y + 1)];
            if (a < 0 || b < 0 || c < 0 || d < 0) continue;
            const double da = depth.at(x, y), db = depth.at(x + 1, y);
            const double dc = depth.at(x, y + 1), dd = depth.at(x + 1, y + 1);

            const uint8_t s0 = tri_stretched(da, db, dd, stretch_threshold) ? 1 : 0;
            const uint8_t s1 = tri_stretched(da, dd, dc, stretch_threshold) ? 1 : 0;
            mesh.triangles.push_back({a, b, d});
            mesh.stretched.push_back(s0);
            mesh.triangles.push_back({a, d, c});
            mesh.stretched.push_back(s1);
        }
    }

    if (mesh.triangles.empty())
        throw EmptyMeshError("build_mesh: no fully-valid 2x2 pixel quad");
    return mesh;
}

}  // namespace dw

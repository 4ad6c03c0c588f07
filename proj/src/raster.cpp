// Copyright (C) 2026 the depthwarp authors
// SPDX-License-Identifier: Apache-2.0
#include "dw/raster.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>

#include "dw/kernels/kernels.hpp"
#include "dw/parallel.hpp"

namespace dw {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr size_t kTriChunk = 1 << 16;

struct TriRecord {
    kernels::TriSetup tri;
    int x0, x1, y0, y1;  // inclusive pixel bbox
};

struct ScreenVert {
    double u, v, iz;
};

// Screen-space setup from projected corners. Returns false for degenerate or
// non-finite triangles.
bool setup_triangle(const ScreenVert& p0, const ScreenVert& p1, const ScreenVert& p2,
                    int32_t index, int width, int height, TriRecord* out) {
    double area2 = (p1.u - p0.u) * (p2.v - p0.v) - (p1.v - p0.v) * (p2.u - p0.u);
    if (!(area2 != 0.0) || !std::isfinite(area2)) return false;

    kernels::TriSetup t;
    t.a0 = p1.v - p2.v;
    t.b0 = p2.u - p1.u;
    t.c0 = p1.u * p2.v - p2.u * p1.v;
    t.a1 = p2.v - p0.v;
    t.b1 = p0.u - p2.u;
    t.c1 = p2.u * p0.v - p0.u * p2.v;
    t.a2 = p0.v - p1.v;
    t.b2 = p1.u - p0.u;
    t.c2 = p0.u * p1.v - p1.u * p0.v;
    if (area2 < 0.0) {
        t.a0 = -t.a0; t.b0 = -t.b0; t.c0 = -t.c0;
        t.a1 = -t.a1; t.b1 = -t.b1; t.c1 = -t.c1;
        t.a2 = -t.a2; t.b2 = -t.b2; t.c2 = -t.c2;
        area2 = -area2;
    }
    t.inv_area2 = 1.0 / area2;
    t.iz0 = p0.iz;
    t.iz1 = p1.iz;
    t.iz2 = p2.iz;
    t.index = index;

    const double umin = std::min(p0.u, std::min(p1.u, p2.u));
    const double umax = std::max(p0.u, std::max(p1.u, p2.u));
    const double vmin = std::min(p0.v, std::min(p1.v, p2.v));
    const double vmax = std::max(p0.v, std::max(p1.v, p2.v));
    if (!std::isfinite(umin) || !std::isfinite(umax) || !std::isfinite(vmin) ||
        !std::isfinite(vmax))
        return false;

    out->x0 = std::max(0, int(std::ceil(umin - 0.5)));
    out->x1 = std::min(width - 1, int(std::floor(umax - 0.5)));
    out->y0 = std::max(0, int(std::ceil(vmin - 0.5)));
    out->y1 = std::min(height - 1, int(std::floor(vmax - 0.5)));
    if (out->x0 > out->x1 || out->y0 > out->y1) return false;
    out->tri = t;
    return true;
}

ScreenVert project_cam_vert(const Vec3& c, const Intrinsics& K) {
    // same expression order as the project_points kernel
    ScreenVert s;
    s.u = K.fx * c.x / c.z + K.cx;
    s.v = K.fy * c.y / c.z + K.cy;
    s.iz = 1.0 / c.z;
    return s;
}

// Sutherland-Hodgman against z = near; returns 0, 3 or 4 vertices.
int clip_near(const std::array<Vec3, 3>& in, double near, std::array<Vec3, 4>& out) {
    int m = 0;
    for (int i = 0; i < 3; ++i) {
        const Vec3& cur = in[i];
        const Vec3& nxt = in[(i + 1) % 3];
        const bool cin = cur.z > near;
        const bool nin = nxt.z > near;
        if (cin) out[m++] = cur;
        if (cin != nin) {
            const double s = (near - cur.z) / (nxt.z - cur.z);
            Vec3 p = cur + s * (nxt - cur);
            p.z = near;  // pin exactly onto the plane
            out[m++] = p;
        }
    }
    return m;
}

}  // namespace

RenderOutput render(const WarpMesh& mesh, const Intrinsics& K, const Pose& target_pose,
                    const RenderOptions& opts) {
    K.validate();
    if (!(opts.near > 0.0) || !(opts.far > opts.near))
        throw ValidationError("render: require 0 < near < far");

    const int w = K.width, h = K.height;
    RenderOutput out;
    out.depth = DepthFrame(w, h);
    out.mask = MaskFrame(w, h, 0);

    const size_t nv = mesh.vertices.size();
    const size_t nt = mesh.triangles.size();
    if (nt == 0) return out;

    const auto& KR = kernels::active_kernels();

    // vertices to SoA, then world -> camera -> screen in one pass
    std::vector<double> wx(nv), wy(nv), wz(nv);
    for (size_t i = 0; i < nv; ++i) {
        wx[i] = mesh.vertices[i].x;
        wy[i] = mesh.vertices[i].y;
        wz[i] = mesh.vertices[i].z;
    }
    std::vector<double> ccx(nv), ccy(nv), ccz(nv), su(nv), sv(nv), siz(nv);
    kernels::CamProjectParams P;
    const Mat3 rt = target_pose.R.transposed();
    for (int i = 0; i < 9; ++i) P.rt[i] = rt.m[i];
    P.tx = target_pose.t.x;
    P.ty = target_pose.t.y;
    P.tz = target_pose.t.z;
    P.fx = K.fx;
    P.fy = K.fy;
    P.cx = K.cx;
    P.cy = K.cy;
    KR.project_points(P, wx.data(), wy.data(), wz.data(), nv, ccx.data(), ccy.data(),
                      ccz.data(), su.data(), sv.data(), siz.data());

    std::vector<double> zbuf(size_t(w) * h, kInf);
    std::vector<int32_t> idx(size_t(w) * h, -1);

    // triangles stream through in fixed chunks; rows are split across
    // threads, and every thread walks the chunk in triangle order, so the
    // per-pixel winner is independent of the partition
    std::vector<TriRecord> recs;
    recs.reserve(std::min(nt, kTriChunk) * 2);
    const int threads = resolve_threads(opts.threads);

    for (size_t base = 0; base < nt; base += kTriChunk) {
        const size_t end = std::min(nt, base + kTriChunk);
        recs.clear();
        for (size_t ti = base; ti < end; ++ti) {
            const auto& tr = mesh.triangles[ti];
            const int32_t i0 = tr[0], i1 = tr[1], i2 = tr[2];
            const bool in0 = ccz[i0] > opts.near;
            const bool in1 = ccz[i1] > opts.near;
            const bool in2 = ccz[i2] > opts.near;
            TriRecord rec;
            if (in0 && in1 && in2) {
                ScreenVert p0{su[i0], sv[i0], siz[i0]};
                ScreenVert p1{su[i1], sv[i1], siz[i1]};
                ScreenVert p2{su[i2], sv[i2], siz[i2]};
                if (setup_triangle(p0, p1, p2, int32_t(ti), w, h, &rec))
                    recs.push_back(rec);
            } else if (in0 || in1 || in2) {
                std::array<Vec3, 3> cam = {Vec3{ccx[i0], ccy[i0], ccz[i0]},
                                           Vec3{ccx[i1], ccy[i1], ccz[i1]},
                                           Vec3{ccx[i2], ccy[i2], ccz[i2]}};
                std::array<Vec3, 4> poly;
                const int m = clip_near(cam, opts.near, poly);
                for (int k = 2; k < m; ++k) {
                    ScreenVert p0 = project_cam_vert(poly[0], K);
                    ScreenVert p1 = project_cam_vert(poly[k - 1], K);
                    ScreenVert p2 = project_cam_vert(poly[k], K);
                    if (setup_triangle(p0, p1, p2, int32_t(ti), w, h, &rec))
                        recs.push_back(rec);
                }
            }
        }
        if (recs.empty()) continue;
        parallel_for(0, h, threads, [&](int64_t yb0, int64_t yb1) {
            for (const TriRecord& r : recs) {
                const int ry0 = std::max(r.y0, int(yb0));
                const int ry1 = std::min(r.y1, int(yb1) - 1);
                for (int y = ry0; y <= ry1; ++y) {
                    KR.raster_span(r.tri, y, r.x0, r.x1 + 1, zbuf.data() + size_t(y) * w,
                                   idx.data() + size_t(y) * w);
                }
            }
        });
    }

    for (size_t p = 0; p < size_t(w) * h; ++p) {
        const int32_t win = idx[p];
        if (win < 0) continue;
        const double z = zbuf[p];
        out.depth.values[p] = z;
        out.depth.valid[p] = 1;
        if (!mesh.stretched[win] && z >= opts.near && z <= opts.far)
            out.mask.values[p] = 1;
    }
    if (opts.record_winners) out.winner = std::move(idx);
    return out;
}

std::vector<RenderOutput> warp_depth_sequence(const std::vector<DepthFrame>& depth_video,
                                              const Intrinsics& K,
                                              const std::vector<Pose>& source_poses,
                                              const std::vector<Pose>& target_poses,
                                              const WarpOptions& opts) {
    const size_t n = depth_video.size();
    if (source_poses.size() != n || target_poses.size() != n)
        throw LengthMismatchError(
            "warp_depth_sequence: depth/source/target lengths differ (" +
            std::to_string(n) + ", " + std::to_string(source_poses.size()) + ", " +
            std::to_string(target_poses.size()) + ")");

    std::vector<RenderOutput> outputs(n);
    RenderOptions ropts;
    ropts.near = opts.near;
    ropts.far = opts.far;
    ropts.threads = 1;
    parallel_for(0, int64_t(n), opts.threads, [&](int64_t lo, int64_t hi) {
        for (int64_t t = lo; t < hi; ++t) {
            try {
                WarpMesh mesh = build_mesh(depth_video[t], K, source_poses[t],
                                           opts.stretch_threshold, int(t));
                outputs[t] = render(mesh, K, target_poses[t], ropts);
            } catch (const EmptyMeshError&) {
                outputs[t].depth = DepthFrame(K.width, K.height);
                outputs[t].mask = MaskFrame(K.width, K.height, 0);
            }
        }
    });
    return outputs;
}

}  // namespace dw

// Copyright (C) 2026 the depthwarp authors
// SPDX-License-Identifier: Apache-2.0
#include "dw/metrics.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace dw {

namespace {

void require_lengths(const std::vector<Pose>& gt, const std::vector<Pose>& est,
                     const char* op) {
    if (gt.size() != est.size())
        throw LengthMismatchError(std::string(op) + ": trajectory lengths differ (" +
                                  std::to_string(gt.size()) + " vs " +
                                  std::to_string(est.size()) + ")");
}

// Jacobi eigensolver for a symmetric 4x4; returns eigenvalues (descending)
// and matching eigenvectors as columns of V.
void jacobi_eigen4(double a[4][4], double eval[4], double evec[4][4]) {
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) evec[i][j] = i == j ? 1.0 : 0.0;

    for (int sweep = 0; sweep < 64; ++sweep) {
        double off = 0.0;
        for (int p = 0; p < 4; ++p)
            for (int q = p + 1; q < 4; ++q) off += a[p][q] * a[p][q];
        if (off < 1e-30) break;
        for (int p = 0; p < 4; ++p) {
            for (int q = p + 1; q < 4; ++q) {
                if (a[p][q] == 0.0) continue;
                const double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                const double t = (theta >= 0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (int k = 0; k < 4; ++k) {
                    const double akp = a[k][p], akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for (int k = 0; k < 4; ++k) {
                    const double apk = a[p][k], aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
                for (int k = 0; k < 4; ++k) {
                    const double vkp = evec[k][p], vkq = evec[k][q];
                    evec[k][p] = c * vkp - s * vkq;
                    evec[k][q] = s * vkp + c * vkq;
                }
            }
        }
    }
    int order[4] = {0, 1, 2, 3};
    double ev[4] = {a[0][0], a[1][1], a[2][2], a[3][3]};
    std::sort(order, order + 4, [&](int i, int j) { return ev[i] > ev[j]; });
    double v[4][4];
    for (int c = 0; c < 4; ++c)
        for (int r = 0; r < 4; ++r) v[r][c] = evec[r][order[c]];
    for (int c = 0; c < 4; ++c) {
        eval[c] = ev[order[c]];
        for (int r = 0; r < 4; ++r) evec[r][c] = v[r][c];
    }
}

Mat3 quat_to_mat(double w, double x, double y, double z) {
    Mat3 r;
    r.m[0] = 1 - 2 * (y * y + z * z);
    r.m[1] = 2 * (x * y - w * z);
    r.m[2] = 2 * (x * z + w * y);
    r.m[3] = 2 * (x * y + w * z);
    r.m[4] = 1 - 2 * (x * x + z * z);
    r.m[5] = 2 * (y * z - w * x);
    r.m[6] = 2 * (x * z - w * y);
    r.m[7] = 2 * (y * z + w * x);
    r.m[8] = 1 - 2 * (x * x + y * y);
    return r;
}

}  // namespace

double rot_err(const std::vector<Pose>& gt, const std::vector<Pose>& est) {
    require_lengths(gt, est, "rot_err");
    double sum = 0.0;
    for (size_t i = 0; i < gt.size(); ++i) {
        const Mat3 rel = est[i].R * gt[i].R.transposed();
        // angle = atan2(sin, cos) with cos = (tr-1)/2 clamped; the sine from
        // the antisymmetric part vanishes exactly for identical rotations,
        // so identical trajectories report exactly zero
        const double c = std::clamp((rel.trace() - 1.0) / 2.0, -1.0, 1.0);
        const Vec3 axis2{rel.m[7] - rel.m[5], rel.m[2] - rel.m[6], rel.m[3] - rel.m[1]};
        const double s = std::min(1.0, 0.5 * axis2.norm());
        sum += std::atan2(s, c);
    }
    return sum;
}

double trans_err(const std::vector<Pose>& gt, const std::vector<Pose>& est) {
    require_lengths(gt, est, "trans_err");
    double sum = 0.0;
    for (size_t i = 0; i < gt.size(); ++i) sum += (est[i].t - gt[i].t).norm();
    return sum;
}

double cam_mc(const std::vector<Pose>& gt, const std::vector<Pose>& est) {
    require_lengths(gt, est, "cam_mc");
    double sum = 0.0;
    for (size_t i = 0; i < gt.size(); ++i) {
        const Mat3 dr = est[i].R - gt[i].R;
        const Vec3 dt = est[i].t - gt[i].t;
        double f = 0.0;
        for (double v : dr.m) f += v * v;
        f += dt.norm2();
        sum += std::sqrt(f);
    }
    return sum;
}

SimilarityTransform fit_similarity(const std::vector<Pose>& gt,
                                   const std::vector<Pose>& est) {
    require_lengths(gt, est, "fit_similarity");
    const size_t n = gt.size();
    if (n < 3) throw ValidationError("fit_similarity: needs >= 3 frames");

    Vec3 mu_g{}, mu_e{};
    for (size_t i = 0; i < n; ++i) {
        mu_g += gt[i].t;
        mu_e += est[i].t;
    }
    mu_g = mu_g / double(n);
    mu_e = mu_e / double(n);

    // Horn's unit-quaternion method on the centered translations
    double S[3][3] = {};
    double norm_e = 0.0;
    for (size_t i = 0; i < n; ++i) {
        const Vec3 e = est[i].t - mu_e;
        const Vec3 g = gt[i].t - mu_g;
        const double ev[3] = {e.x, e.y, e.z};
        const double gv[3] = {g.x, g.y, g.z};
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c) S[r][c] += ev[r] * gv[c];
        norm_e += e.norm2();
    }
    double N[4][4] = {
        {S[0][0] + S[1][1] + S[2][2], S[1][2] - S[2][1], S[2][0] - S[0][2], S[0][1] - S[1][0]},
        {S[1][2] - S[2][1], S[0][0] - S[1][1] - S[2][2], S[0][1] + S[1][0], S[2][0] + S[0][2]},
        {S[2][0] - S[0][2], S[0][1] + S[1][0], -S[0][0] + S[1][1] - S[2][2], S[1][2] + S[2][1]},
        {S[0][1] - S[1][0], S[2][0] + S[0][2], S[1][2] + S[2][1], -S[0][0] - S[1][1] + S[2][2]}};
    double eval[4], evec[4][4];
    jacobi_eigen4(N, eval, evec);

    SimilarityTransform T;
    T.rotation = quat_to_mat(evec[0][0], evec[1][0], evec[2][0], evec[3][0]);
    // collinear / coincident trajectories leave the top eigenvalue ambiguous
    const double scale_ref = std::max(std::abs(eval[0]), 1e-30);
    if (eval[0] - eval[1] <= 1e-9 * scale_ref || norm_e <= 0.0) T.degenerate = true;

    if (norm_e > 0.0) {
        double dot = 0.0;
        for (size_t i = 0; i < n; ++i) {
            const Vec3 e = est[i].t - mu_e;
            const Vec3 g = gt[i].t - mu_g;
            dot += g.dot(T.rotation * e);
        }
        T.scale = dot / norm_e;
        if (!(T.scale > 0.0)) T.scale = 1.0;  // pathological reflection-ish fit
    }
    T.translation = mu_g - T.scale * (T.rotation * mu_e);
    return T;
}

std::vector<Pose> apply_similarity(const SimilarityTransform& T,
                                   const std::vector<Pose>& est) {
    std::vector<Pose> out;
    out.reserve(est.size());
    for (const auto& p : est) {
        Pose q;
        q.R = T.rotation * p.R;
        q.t = T.scale * (T.rotation * p.t) + T.translation;
        out.push_back(q);
    }
    return out;
}

CameraAccuracyReport camera_accuracy(const std::vector<Pose>& gt,
                                     const std::vector<Pose>& est, bool align_sim7) {
    CameraAccuracyReport rep;
    rep.n_frames = gt.size();
    const std::vector<Pose>* e = &est;
    std::vector<Pose> aligned;
    if (align_sim7) {
        aligned = apply_similarity(fit_similarity(gt, est), est);
        e = &aligned;
        rep.alignment_mode = "sim7";
    }
    rep.rot_err = rot_err(gt, *e);
    rep.trans_err = trans_err(gt, *e);
    rep.cam_mc = cam_mc(gt, *e);
    return rep;
}

}  // namespace dw

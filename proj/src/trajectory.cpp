// Copyright (C) 2026 the depthwarp authors
// SPDX-License-Identifier: Apache-2.0
#include "dw/trajectory.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "dw/rng.hpp"

namespace dw {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kDegToRad = kPi / 180.0;

double smoothstep(double u) { return u * u * (3.0 - 2.0 * u); }

struct Spline {
    // Catmull-Rom as per-segment cubic Hermite; ends use reflected phantoms,
    // which keeps the curve symmetric under control-point reversal.
    std::vector<Vec3> p;  // deduplicated control points
    std::vector<Vec3> m;  // tangents

    static constexpr int kSub = 32;  // arc-length subintervals per segment
    std::vector<double> cum;         // cumulative arc length at subinterval ends
    double total = 0.0;

    explicit Spline(const std::vector<Vec3>& control) {
        for (const auto& c : control) {
            if (!p.empty() && (c - p.back()).norm2() == 0.0) continue;  // degenerate segment
            p.push_back(c);
        }
        const size_t n = p.size();
        if (n < 2) return;
        m.resize(n);
        for (size_t i = 0; i < n; ++i) {
            const Vec3& prev = i == 0 ? (2.0 * p[0] - p[1]) : p[i - 1];
            const Vec3& next = i + 1 == n ? (2.0 * p[n - 1] - p[n - 2]) : p[i + 1];
            m[i] = 0.5 * (next - prev);
        }
        build_arc_table();
    }

    Vec3 eval(size_t seg, double t) const {
        const double t2 = t * t, t3 = t2 * t;
        const double h00 = 2 * t3 - 3 * t2 + 1;
        const double h10 = t3 - 2 * t2 + t;
        const double h01 = -2 * t3 + 3 * t2;
        const double h11 = t3 - t2;
        return h00 * p[seg] + h10 * m[seg] + h01 * p[seg + 1] + h11 * m[seg + 1];
    }

    Vec3 deriv(size_t seg, double t) const {
        const double t2 = t * t;
        const double g00 = 6 * t2 - 6 * t;
        const double g10 = 3 * t2 - 4 * t + 1;
        const double g01 = -6 * t2 + 6 * t;
        const double g11 = 3 * t2 - 2 * t;
        return g00 * p[seg] + g10 * m[seg] + g01 * p[seg + 1] + g11 * m[seg + 1];
    }

    double speed(size_t seg, double t) const { return deriv(seg, t).norm(); }

    // 8-point Gauss-Legendre of |p'| over [a, b] of a segment
    double arc_gl8(size_t seg, double a, double b) const {
        static const double xs[8] = {-0.9602898564975363, -0.7966664774136267,
                                     -0.5255324099163290, -0.1834346424956498,
                                     0.1834346424956498,  0.5255324099163290,
                                     0.7966664774136267,  0.9602898564975363};
        static const double ws[8] = {0.1012285362903763, 0.2223810344533745,
                                     0.3137066458778873, 0.3626837833783620,
                                     0.3626837833783620, 0.3137066458778873,
                                     0.2223810344533745, 0.1012285362903763};
        const double half = 0.5 * (b - a);
        const double mid = 0.5 * (a + b);
        double s = 0.0;
        for (int i = 0; i < 8; ++i) s += ws[i] * speed(seg, mid + half * xs[i]);
        return s * half;
    }

    void build_arc_table() {
        const size_t segs = p.size() - 1;
        cum.assign(segs * kSub + 1, 0.0);
        size_t k = 1;
        double acc = 0.0;
        for (size_t s = 0; s < segs; ++s) {
            for (int j = 0; j < kSub; ++j, ++k) {
                const double a = double(j) / kSub;
                const double b = double(j + 1) / kSub;
                acc += arc_gl8(s, a, b);
                cum[k] = acc;
            }
        }
        total = acc;
    }

    Vec3 at_arc(double target) const {
        if (target <= 0.0) return p.front();
        if (target >= total) return p.back();
        const size_t hi =
            size_t(std::upper_bound(cum.begin(), cum.end(), target) - cum.begin());
        const size_t cell = std::min(hi - 1, cum.size() - 2);
        const size_t seg = cell / kSub;
        const double t0 = double(cell % kSub) / kSub;
        const double t1 = t0 + 1.0 / kSub;
        // Newton on g(t) = cum[cell] + integral(t0..t) - target
        double t = 0.5 * (t0 + t1);
        for (int it = 0; it < 6; ++it) {
            const double g = cum[cell] + arc_gl8(seg, t0, t) - target;
            const double v = speed(seg, t);
            if (v <= 0.0) break;
            t = std::clamp(t - g / v, t0, t1);
        }
        return eval(seg, t);
    }
};

struct TrajectoryStats {
    double pitch_range = 0.0, yaw_range = 0.0, max_step = 0.0;
    double min_y = 0.0;  // most negative = highest; y-down world
    double max_y = 0.0;
};

TrajectoryStats stats_of(const std::vector<Vec3>& positions,
                         const std::vector<Pose>& poses, const Vec3& lookat) {
    TrajectoryStats st;
    double pmin = 1e300, pmax = -1e300, ymin = 1e300, ymax = -1e300;
    double wmin = 1e300, wmax = -1e300;
    for (const auto& pos : positions) {
        const double pitch = position_pitch(pos, lookat);
        const double yaw = position_yaw(pos, lookat);
        pmin = std::min(pmin, pitch);
        pmax = std::max(pmax, pitch);
        wmin = std::min(wmin, yaw);
        wmax = std::max(wmax, yaw);
        ymin = std::min(ymin, pos.y);
        ymax = std::max(ymax, pos.y);
    }
    st.pitch_range = pmax - pmin;
    st.yaw_range = wmax - wmin;
    st.min_y = ymin;
    st.max_y = ymax;
    for (size_t i = 1; i < poses.size(); ++i)
        st.max_step = std::max(st.max_step, rotation_angle_between(poses[i - 1].R, poses[i].R));
    return st;
}

}  // namespace

double position_pitch(const Vec3& pos, const Vec3& lookat) {
    const Vec3 d = pos - lookat;
    const double n = d.norm();
    // y-down world: a camera above the look-at point has negative y
    return std::asin(std::clamp(-d.y / n, -1.0, 1.0));
}

double position_yaw(const Vec3& pos, const Vec3& lookat) {
    const Vec3 d = pos - lookat;
    return std::atan2(d.x, d.z);
}

Pose look_at_pose(const Vec3& eye, const Vec3& target) {
    const Vec3 forward = (target - eye).normalized();
    const Vec3 right_raw = kWorldDown.cross(forward);
    const double rn = right_raw.norm();
    if (!(rn > 1e-9))
        throw SamplingError("look_at_pose: view direction is vertical, roll undefined");
    const Vec3 right = right_raw / rn;
    const Vec3 down = forward.cross(right);
    Pose pose;
    pose.R = Mat3::from_columns(right, down, forward);
    pose.t = eye;
    return pose;
}

Pose sample_start(const Vec3& lookat, double subject_height, uint64_t seed,
                  const TrajectoryRanges& ranges) {
    Rng rng(seed);
    const double off = ranges.start_offset_deg * kDegToRad;
    const double cone = ranges.front_cone_deg * kDegToRad;
    const double ground_y = lookat.y + subject_height;

    for (int attempt = 0; attempt < 256; ++attempt) {
        const double r = rng.uniform(ranges.dist_min, ranges.dist_max);
        const double yaw = rng.uniform(-off, off);
        const double pitch = rng.uniform(-off, off);
        if (std::abs(yaw) > cone) continue;  // front-cone validation bound
        const Vec3 dir{std::sin(yaw) * std::cos(pitch), -std::sin(pitch),
                       std::cos(yaw) * std::cos(pitch)};
        const Vec3 pos = lookat + r * dir;
        if (pos.y >= ground_y) continue;  // below ground (y-down world)
        return look_at_pose(pos, lookat);
    }
    throw SamplingError("sample_start: no pose satisfied the constraints in 256 draws");
}

std::vector<Vec3> interpolate(const std::vector<Vec3>& control, int n_frames) {
    if (control.size() < 2)
        throw ValidationError("interpolate: needs >= 2 control points");
    if (n_frames < 2) throw ValidationError("interpolate: needs >= 2 frames");

    const Spline spline(control);
    std::vector<Vec3> out;
    out.reserve(n_frames);
    if (spline.p.size() < 2) {  // all control points coincide
        out.assign(n_frames, control.front());
        return out;
    }
    for (int k = 0; k < n_frames; ++k) {
        const double u = double(k) / double(n_frames - 1);
        out.push_back(spline.at_arc(smoothstep(u) * spline.total));
    }
    return out;
}

SampledTrajectory sample_trajectory(const Pose& start, const Vec3& lookat, int n_frames,
                                    uint64_t seed, const TrajectoryRanges& ranges,
                                    bool static_camera, double subject_height) {
    if (n_frames < 2) throw ValidationError("sample_trajectory: n_frames must be >= 2");

    SampledTrajectory out;
    out.spec.lookat = lookat;
    out.spec.start = start.t;
    out.spec.n_frames = n_frames;
    out.spec.seed = seed;
    out.spec.ranges = ranges;
    out.spec.is_static = static_camera;

    if (static_camera) {
        out.poses.assign(size_t(n_frames), start);
        return out;
    }

    Rng rng(seed);
    const double r0 = (start.t - lookat).norm();
    const double ground_y = lookat.y + subject_height;
    if (!(r0 > 0.0))
        throw SamplingError("sample_trajectory: start coincides with the look-at point");

    int rej_pitch = 0, rej_yaw = 0, rej_step = 0, rej_ground = 0, rej_other = 0;
    constexpr int kAttempts = 256;
    for (int attempt = 0; attempt < kAttempts; ++attempt) {
        const int k = int(rng.uniform_int(ranges.waypoints_min, ranges.waypoints_max));
        const double target_len =
            rng.uniform(ranges.path_scale_min, ranges.path_scale_max) * r0;

        // random walk, gently biased toward horizontal steps
        std::vector<Vec3> control = {start.t};
        Vec3 cur = start.t;
        for (int i = 0; i < k; ++i) {
            const double az = rng.uniform(0.0, 2.0 * kPi);
            const double el = rng.uniform(-kPi / 6.0, kPi / 6.0);
            const double len = rng.uniform(0.5, 1.5);
            const Vec3 step{std::cos(el) * std::sin(az) * len, -std::sin(el) * len,
                            std::cos(el) * std::cos(az) * len};
            cur += step;
            control.push_back(cur);
        }

        // Catmull-Rom is linear in its control points, so scaling the
        // waypoints about the start scales the arc length exactly
        Spline probe(control);
        if (!(probe.total > 0.0)) {
            ++rej_other;
            continue;
        }
        const double gamma = target_len / probe.total;
        for (size_t i = 1; i < control.size(); ++i)
            control[i] = start.t + gamma * (control[i] - start.t);

        std::vector<Vec3> positions;
        std::vector<Pose> poses;
        try {
            positions = interpolate(control, n_frames);
            poses.reserve(positions.size());
            for (const auto& pos : positions) poses.push_back(look_at_pose(pos, lookat));
        } catch (const Error&) {
            ++rej_other;
            continue;
        }

        const TrajectoryStats st = stats_of(positions, poses, lookat);
        if (st.max_y >= ground_y) { ++rej_ground; continue; }
        if (st.pitch_range > ranges.pitch_limit_deg * kDegToRad) { ++rej_pitch; continue; }
        if (st.yaw_range > ranges.yaw_limit_deg * kDegToRad) { ++rej_yaw; continue; }
        if (st.max_step > ranges.max_step_deg * kDegToRad) { ++rej_step; continue; }

        out.spec.waypoints.assign(control.begin() + 1, control.end());
        out.spec.path_length = target_len;
        out.poses = std::move(poses);
        return out;
    }
    throw SamplingError("sample_trajectory: retry budget exhausted after " +
                        std::to_string(kAttempts) + " draws (pitch " +
                        std::to_string(rej_pitch) + ", yaw " + std::to_string(rej_yaw) +
                        ", step " + std::to_string(rej_step) + ", ground " +
                        std::to_string(rej_ground) + ", other " +
                        std::to_string(rej_other) + ")");
}

}  // namespace dw

// Copyright (C) 2026 the depthwarp authors
// SPDX-License-Identifier: Apache-2.0
//
// Scalar/AVX2 equivalence. Raster, raycast, projection, elementwise and
// min/max variants must agree bit-for-bit; the Kahan accumulators stripe
// lanes, so they get a 1e-12 relative bound instead.
#include <doctest.h>

#include <cstring>
#include <limits>
#include <vector>

#include "dw/kernels/kernels.hpp"
#include "dw/rng.hpp"
#include "support/testutil.hpp"

using namespace dw;
namespace dk = dw::kernels;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

dk::TriSetup random_tri(Rng& rng) {
    dk::TriSetup t;
    const double u0 = rng.uniform(0, 64), v0 = rng.uniform(0, 64);
    const double u1 = rng.uniform(0, 64), v1 = rng.uniform(0, 64);
    const double u2 = rng.uniform(0, 64), v2 = rng.uniform(0, 64);
    t.a0 = v1 - v2; t.b0 = u2 - u1; t.c0 = u1 * v2 - u2 * v1;
    t.a1 = v2 - v0; t.b1 = u0 - u2; t.c1 = u2 * v0 - u0 * v2;
    t.a2 = v0 - v1; t.b2 = u1 - u0; t.c2 = u0 * v1 - u1 * v0;
    double area2 = (u1 - u0) * (v2 - v0) - (v1 - v0) * (u2 - u0);
    if (area2 < 0) {
        t.a0 = -t.a0; t.b0 = -t.b0; t.c0 = -t.c0;
        t.a1 = -t.a1; t.b1 = -t.b1; t.c1 = -t.c1;
        t.a2 = -t.a2; t.b2 = -t.b2; t.c2 = -t.c2;
        area2 = -area2;
    }
    t.inv_area2 = 1.0 / area2;
    t.iz0 = 1.0 / rng.uniform(1.0, 9.0);
    t.iz1 = 1.0 / rng.uniform(1.0, 9.0);
    t.iz2 = 1.0 / rng.uniform(1.0, 9.0);
    t.index = int32_t(rng.uniform_int(0, 1000));
    return t;
}

dk::FramePrims random_prims(Rng& rng) {
    dk::FramePrims fp;
    fp.has_ground = 1;
    fp.ground_y = 0.0;
    const int ns = int(rng.uniform_int(1, 3));
    for (int i = 0; i < ns; ++i) {
        fp.sx.push_back(rng.uniform(-2, 2));
        fp.sy.push_back(rng.uniform(-2.5, -0.5));
        fp.sz.push_back(rng.uniform(-1, 3));
        fp.sr.push_back(rng.uniform(0.2, 0.6));
    }
    const int nb = int(rng.uniform_int(0, 2));
    for (int i = 0; i < nb; ++i) {
        const double cx = rng.uniform(-2, 2), cy = rng.uniform(-2.0, -0.4),
                     cz = rng.uniform(-1, 3);
        const double hx = rng.uniform(0.1, 0.4), hy = rng.uniform(0.1, 0.4),
                     hz = rng.uniform(0.1, 0.4);
        fp.bx0.push_back(cx - hx); fp.bx1.push_back(cx + hx);
        fp.by0.push_back(cy - hy); fp.by1.push_back(cy + hy);
        fp.bz0.push_back(cz - hz); fp.bz1.push_back(cz + hz);
    }
    return fp;
}

dk::RayGrid random_grid(Rng& rng) {
    dk::RayGrid g;
    const Mat3 r = dwtest::random_rotation(rng);
    for (int i = 0; i < 9; ++i) g.r[i] = r.m[i];
    g.ox = rng.uniform(-1, 1);
    g.oy = rng.uniform(-3, -1);
    g.oz = rng.uniform(-6, -3);
    g.cx = 32.0 + rng.uniform(-1, 1);
    g.cy = 24.0 + rng.uniform(-1, 1);
    g.inv_fx = 1.0 / rng.uniform(40.0, 90.0);
    g.inv_fy = 1.0 / rng.uniform(40.0, 90.0);
    return g;
}

}  // namespace

TEST_SUITE("kernels") {

TEST_CASE("dispatch: active table resolves") {
    const auto& k = dk::active_kernels();
    CHECK(k.name != nullptr);
    if (dk::avx2_available()) CHECK(std::string(dk::avx2_kernels().name) == "avx2");
    CHECK(std::string(dk::scalar_kernels().name) == "scalar");
}

TEST_CASE("raster_span: scalar and avx2 are bit-identical on random spans") {
    if (!dk::avx2_available()) return;
    Rng rng(101);
    for (int iter = 0; iter < 400; ++iter) {
        const dk::TriSetup t = random_tri(rng);
        const int w = int(rng.uniform_int(1, 70));  // exercises every tail length
        const int y = int(rng.uniform_int(0, 63));
        std::vector<double> z0(w), z1(w);
        std::vector<int32_t> i0(w, -1), i1(w, -1);
        for (int x = 0; x < w; ++x) {
            z0[x] = rng.uniform01() < 0.3 ? kInf : rng.uniform(0.5, 10.0);
            z1[x] = z0[x];
        }
        dk::scalar_kernels().raster_span(t, y, 0, w, z0.data(), i0.data());
        dk::avx2_kernels().raster_span(t, y, 0, w, z1.data(), i1.data());
        CHECK(std::memcmp(z0.data(), z1.data(), size_t(w) * 8) == 0);
        CHECK(std::memcmp(i0.data(), i1.data(), size_t(w) * 4) == 0);
    }
}

TEST_CASE("project_points: scalar and avx2 are bit-identical") {
    if (!dk::avx2_available()) return;
    Rng rng(7);
    dk::CamProjectParams P;
    const Mat3 rt = dwtest::random_rotation(rng).transposed();
    for (int i = 0; i < 9; ++i) P.rt[i] = rt.m[i];
    P.tx = 0.3; P.ty = -1.2; P.tz = 0.7;
    P.fx = 80; P.fy = 75; P.cx = 32; P.cy = 24;
    const size_t n = 1003;
    std::vector<double> wx(n), wy(n), wz(n);
    for (size_t i = 0; i < n; ++i) {
        wx[i] = rng.uniform(-5, 5);
        wy[i] = rng.uniform(-5, 5);
        wz[i] = rng.uniform(-5, 5);
    }
    std::vector<double> a(n), b(n), c(n), d(n), e(n), f(n);
    std::vector<double> a2(n), b2(n), c2(n), d2(n), e2(n), f2(n);
    dk::scalar_kernels().project_points(P, wx.data(), wy.data(), wz.data(), n, a.data(),
                                        b.data(), c.data(), d.data(), e.data(), f.data());
    dk::avx2_kernels().project_points(P, wx.data(), wy.data(), wz.data(), n, a2.data(),
                                      b2.data(), c2.data(), d2.data(), e2.data(), f2.data());
    CHECK(std::memcmp(a.data(), a2.data(), n * 8) == 0);
    CHECK(std::memcmp(b.data(), b2.data(), n * 8) == 0);
    CHECK(std::memcmp(c.data(), c2.data(), n * 8) == 0);
    CHECK(std::memcmp(d.data(), d2.data(), n * 8) == 0);
    CHECK(std::memcmp(e.data(), e2.data(), n * 8) == 0);
    CHECK(std::memcmp(f.data(), f2.data(), n * 8) == 0);
}

TEST_CASE("raycast_span: scalar and avx2 are bit-identical") {
    if (!dk::avx2_available()) return;
    Rng rng(23);
    for (int iter = 0; iter < 60; ++iter) {
        const dk::FramePrims fp = random_prims(rng);
        const dk::RayGrid g = random_grid(rng);
        const int w = int(rng.uniform_int(1, 67));
        std::vector<double> t0(w), t1(w);
        std::vector<int32_t> p0(w), p1(w);
        for (int y = 0; y < 48; y += 5) {
            dk::scalar_kernels().raycast_span(fp, g, y, 0, w, t0.data(), p0.data());
            dk::avx2_kernels().raycast_span(fp, g, y, 0, w, t1.data(), p1.data());
            CHECK(std::memcmp(t0.data(), t1.data(), size_t(w) * 8) == 0);
            CHECK(std::memcmp(p0.data(), p1.data(), size_t(w) * 4) == 0);
        }
    }
}

TEST_CASE("align accumulate/residual: avx2 within 1e-12 relative of scalar") {
    if (!dk::avx2_available()) return;
    Rng rng(31);
    const size_t n = 4099;
    std::vector<double> d(n), x(n);
    std::vector<uint8_t> dv(n), xv(n);
    for (size_t i = 0; i < n; ++i) {
        d[i] = rng.uniform(0.5, 10.0);
        x[i] = rng.uniform(0.5, 10.0);
        dv[i] = rng.uniform01() < 0.9;
        xv[i] = rng.uniform01() < 0.9;
    }
    dk::AlignSums s0, s1;
    dk::scalar_kernels().align_accumulate(d.data(), dv.data(), x.data(), xv.data(), n,
                                          1e-4, 1e6, &s0);
    dk::avx2_kernels().align_accumulate(d.data(), dv.data(), x.data(), xv.data(), n,
                                        1e-4, 1e6, &s1);
    CHECK(s0.n == s1.n);
    CHECK(dwtest::rel_err(s1.su, s0.su) < 1e-12);
    CHECK(dwtest::rel_err(s1.su2, s0.su2) < 1e-12);
    CHECK(dwtest::rel_err(s1.sw, s0.sw) < 1e-12);
    CHECK(dwtest::rel_err(s1.suw, s0.suw) < 1e-12);

    dk::ResidualSums r0, r1;
    dk::scalar_kernels().align_residual(d.data(), dv.data(), x.data(), xv.data(), n, 1e-4,
                                        1e6, 1.2, -0.05, &r0);
    dk::avx2_kernels().align_residual(d.data(), dv.data(), x.data(), xv.data(), n, 1e-4,
                                      1e6, 1.2, -0.05, &r1);
    CHECK(r0.n == r1.n);
    CHECK(dwtest::rel_err(r1.sr2, r0.sr2) < 1e-12);
}

TEST_CASE("align_apply / minmax / elementwise: bit-identical") {
    if (!dk::avx2_available()) return;
    Rng rng(47);
    const size_t n = 2053;
    std::vector<double> d(n), z(n);
    std::vector<uint8_t> dv(n);
    for (size_t i = 0; i < n; ++i) {
        d[i] = rng.uniform(0.1, 20.0);
        z[i] = rng.uniform(0.1, 20.0);
        dv[i] = rng.uniform01() < 0.85;
        if (!dv[i]) d[i] = 0.0;
    }
    std::vector<double> o0(n), o1(n);
    std::vector<uint8_t> v0(n), v1(n);
    dk::scalar_kernels().align_apply(d.data(), dv.data(), n, 2.0, -0.3, o0.data(), v0.data());
    dk::avx2_kernels().align_apply(d.data(), dv.data(), n, 2.0, -0.3, o1.data(), v1.data());
    CHECK(std::memcmp(o0.data(), o1.data(), n * 8) == 0);
    CHECK(std::memcmp(v0.data(), v1.data(), n) == 0);

    double mn0, mx0, mn1, mx1;
    dk::scalar_kernels().minmax_valid(d.data(), dv.data(), n, &mn0, &mx0);
    dk::avx2_kernels().minmax_valid(d.data(), dv.data(), n, &mn1, &mx1);
    CHECK(mn0 == mn1);
    CHECK(mx0 == mx1);

    dk::scalar_kernels().lerp(d.data(), z.data(), 0.37, n, o0.data());
    dk::avx2_kernels().lerp(d.data(), z.data(), 0.37, n, o1.data());
    CHECK(std::memcmp(o0.data(), o1.data(), n * 8) == 0);
    dk::scalar_kernels().sub(d.data(), z.data(), n, o0.data());
    dk::avx2_kernels().sub(d.data(), z.data(), n, o1.data());
    CHECK(std::memcmp(o0.data(), o1.data(), n * 8) == 0);
    dk::scalar_kernels().add(d.data(), z.data(), n, o0.data());
    dk::avx2_kernels().add(d.data(), z.data(), n, o1.data());
    CHECK(std::memcmp(o0.data(), o1.data(), n * 8) == 0);
    dk::scalar_kernels().affine(d.data(), 1.7, -0.2, n, o0.data());
    dk::avx2_kernels().affine(d.data(), 1.7, -0.2, n, o1.data());
    CHECK(std::memcmp(o0.data(), o1.data(), n * 8) == 0);
}

TEST_CASE("minmax_valid: empty input gives +inf/-inf") {
    std::vector<double> v;
    std::vector<uint8_t> m;
    double lo, hi;
    dk::scalar_kernels().minmax_valid(v.data(), m.data(), 0, &lo, &hi);
    CHECK(lo == kInf);
    CHECK(hi == -kInf);
}

}  // TEST_SUITE

// Copyright (C) 2026 the depthwarp authors
// SPDX-License-Identifier: Apache-2.0
//
// Scalar reference kernels. The AVX2 variants mirror these expression by
// expression; keep operation order in sync with kernels_avx2.cpp.
#include <cmath>
#include <limits>

#include "dw/kernels/kernels.hpp"

namespace dw::kernels {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kRayTmin = 1e-9;

// x86 min/max semantics: second operand wins on NaN and on ties.
inline double vmin(double a, double b) { return a < b ? a : b; }
inline double vmax(double a, double b) { return a > b ? a : b; }

inline void kahan_add(double& sum, double& comp, double term) {
    double y = term - comp;
    double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
}

void raster_span_scalar(const TriSetup& t, int y, int x0, int x1, double* zrow,
                        int32_t* idxrow) {
    const double py = double(y) + 0.5;
    const double d0 = t.b0 * py + t.c0;
    const double d1 = t.b1 * py + t.c1;
    const double d2 = t.b2 * py + t.c2;
    for (int x = x0; x < x1; ++x) {
        const double px = double(x) + 0.5;
        const double e0 = t.a0 * px + d0;
        const double e1 = t.a1 * px + d1;
        const double e2 = t.a2 * px + d2;
        if (e0 >= 0.0 && e1 >= 0.0 && e2 >= 0.0) {
            const double izn = (e0 * t.iz0 + e1 * t.iz1 + e2 * t.iz2) * t.inv_area2;
            const double depth = 1.0 / izn;
            if (depth < zrow[x]) {
                zrow[x] = depth;
                idxrow[x] = t.index;
            }
        }
    }
}

void project_points_scalar(const CamProjectParams& P, const double* wx,
                           const double* wy, const double* wz, size_t n,
                           double* ccx, double* ccy, double* ccz, double* u,
                           double* v, double* iz) {
    for (size_t i = 0; i < n; ++i) {
        const double dx = wx[i] - P.tx;
        const double dy = wy[i] - P.ty;
        const double dz = wz[i] - P.tz;
        const double x = P.rt[0] * dx + P.rt[1] * dy + P.rt[2] * dz;
        const double y = P.rt[3] * dx + P.rt[4] * dy + P.rt[5] * dz;
        const double z = P.rt[6] * dx + P.rt[7] * dy + P.rt[8] * dz;
        ccx[i] = x;
        ccy[i] = y;
        ccz[i] = z;
        u[i] = P.fx * x / z + P.cx;
        v[i] = P.fy * y / z + P.cy;
        iz[i] = 1.0 / z;
    }
}

void raycast_span_scalar(const FramePrims& prims, const RayGrid& g, int y,
                         int x0, int x1, double* trow, int32_t* idrow) {
    const double py = double(y) + 0.5;
    const size_t ns = prims.sr.size();
    const size_t nb = prims.bx0.size();
    for (int x = x0; x < x1; ++x) {
        const double px = double(x) + 0.5;
        const double dcx = (px - g.cx) * g.inv_fx;
        const double dcy = (py - g.cy) * g.inv_fy;
        // world direction, camera-frame z component = 1
        const double dx = g.r[0] * dcx + g.r[1] * dcy + g.r[2];
        const double dy = g.r[3] * dcx + g.r[4] * dcy + g.r[5];
        const double dz = g.r[6] * dcx + g.r[7] * dcy + g.r[8];

        double best = kInf;
        int32_t id = -1;

        if (prims.has_ground) {
            const double t = (prims.ground_y - g.oy) / dy;
            bool inside = true;
            if (prims.ground_radius > 0.0) {
                const double hx = g.ox + t * dx;
                const double hz = g.oz + t * dz;
                inside = hx * hx + hz * hz <= prims.ground_radius * prims.ground_radius;
            }
            if (inside && t > kRayTmin && t < best) {
                best = t;
                id = 0;
            }
        }
        for (size_t s = 0; s < ns; ++s) {
            const double ocx = g.ox - prims.sx[s];
            const double ocy = g.oy - prims.sy[s];
            const double ocz = g.oz - prims.sz[s];
            const double a = dx * dx + dy * dy + dz * dz;
            const double hb = ocx * dx + ocy * dy + ocz * dz;
            const double c = ocx * ocx + ocy * ocy + ocz * ocz - prims.sr[s] * prims.sr[s];
            const double disc = hb * hb - a * c;
            const double sq = std::sqrt(disc);  // NaN when disc < 0; falls out below
            const double tn = (-hb - sq) / a;
            const double tf = (-hb + sq) / a;
            const double t = tn > kRayTmin ? tn : tf;
            if (t > kRayTmin && t < best) {
                best = t;
                id = int32_t(1 + s);
            }
        }
        for (size_t b = 0; b < nb; ++b) {
            const double t0x = (prims.bx0[b] - g.ox) / dx;
            const double t1x = (prims.bx1[b] - g.ox) / dx;
            const double t0y = (prims.by0[b] - g.oy) / dy;
            const double t1y = (prims.by1[b] - g.oy) / dy;
            const double t0z = (prims.bz0[b] - g.oz) / dz;
            const double t1z = (prims.bz1[b] - g.oz) / dz;
            const double tnear = vmax(vmax(vmin(t0x, t1x), vmin(t0y, t1y)), vmin(t0z, t1z));
            const double tfar = vmin(vmin(vmax(t0x, t1x), vmax(t0y, t1y)), vmax(t0z, t1z));
            const double t = tnear > kRayTmin ? tnear : tfar;
            if (tnear <= tfar && t > kRayTmin && t < best) {
                best = t;
                id = int32_t(1 + ns + b);
            }
        }
        trow[x] = best;
        idrow[x] = id;
    }
}

void align_accumulate_scalar(const double* d, const uint8_t* dv, const double* x,
                             const uint8_t* xv, size_t n, double lo, double hi,
                             AlignSums* out) {
    double su = 0, cu = 0, su2 = 0, cu2 = 0, sw = 0, cw = 0, suw = 0, cuw = 0;
    uint64_t count = 0;
    for (size_t i = 0; i < n; ++i) {
        if (dv[i] && xv[i] && d[i] > lo && d[i] < hi && x[i] > lo && x[i] < hi) {
            const double u = 1.0 / d[i];
            const double w = 1.0 / x[i];
            kahan_add(su, cu, u);
            kahan_add(su2, cu2, u * u);
            kahan_add(sw, cw, w);
            kahan_add(suw, cuw, u * w);
            ++count;
        }
    }
    out->su = su;
    out->su2 = su2;
    out->sw = sw;
    out->suw = suw;
    out->n = count;
}

void align_residual_scalar(const double* d, const uint8_t* dv, const double* x,
                           const uint8_t* xv, size_t n, double lo, double hi,
                           double s, double b, ResidualSums* out) {
    double sr2 = 0, cr2 = 0;
    uint64_t count = 0;
    for (size_t i = 0; i < n; ++i) {
        if (dv[i] && xv[i] && d[i] > lo && d[i] < hi && x[i] > lo && x[i] < hi) {
            const double u = 1.0 / d[i];
            const double w = 1.0 / x[i];
            const double r = w - s * u - b;
            kahan_add(sr2, cr2, r * r);
            ++count;
        }
    }
    out->sr2 = sr2;
    out->n = count;
}

void align_apply_scalar(const double* d, const uint8_t* dv, size_t n, double s,
                        double b, double* out, uint8_t* outv) {
    constexpr double kMax = std::numeric_limits<double>::max();
    for (size_t i = 0; i < n; ++i) {
        const double q = s / d[i] + b;
        const bool ok = dv[i] != 0 && q > 0.0 && q <= kMax;
        out[i] = ok ? 1.0 / q : 0.0;
        outv[i] = ok ? 1 : 0;
    }
}

void minmax_valid_scalar(const double* v, const uint8_t* valid, size_t n,
                         double* mn, double* mx) {
    double lo = kInf, hi = -kInf;
    for (size_t i = 0; i < n; ++i) {
        const double x = valid[i] ? v[i] : kInf;
        const double y = valid[i] ? v[i] : -kInf;
        lo = vmin(x, lo);
        hi = vmax(y, hi);
    }
    *mn = lo;
    *mx = hi;
}

void lerp_scalar(const double* x, const double* z, double t, size_t n, double* out) {
    const double s = 1.0 - t;
    for (size_t i = 0; i < n; ++i) out[i] = s * x[i] + t * z[i];
}

void sub_scalar(const double* a, const double* b, size_t n, double* out) {
    for (size_t i = 0; i < n; ++i) out[i] = a[i] - b[i];
}

void add_scalar(const double* a, const double* b, size_t n, double* out) {
    for (size_t i = 0; i < n; ++i) out[i] = a[i] + b[i];
}

void affine_scalar(const double* x, double a, double c, size_t n, double* out) {
    for (size_t i = 0; i < n; ++i) out[i] = a * x[i] + c;
}

}  // namespace

const KernelTable& scalar_kernels() {
    static const KernelTable table{
        "scalar",
        raster_span_scalar,
        project_points_scalar,
        raycast_span_scalar,
        align_accumulate_scalar,
        align_residual_scalar,
        align_apply_scalar,
        minmax_valid_scalar,
        lerp_scalar,
        sub_scalar,
        add_scalar,
        affine_scalar,
    };
    return table;
}

}  // namespace dw::kernels

// Copyright (C) 2026 the depthwarp authors
// SPDX-License-Identifier: Apache-2.0
//
// AVX2 kernel variants. Each mirrors the scalar reference expression by
// expression (same order, mul+add kept separate, x86 min/max semantics), so
// results are bit-identical except for the Kahan accumulators, which stripe
// four lanes and merge at the end. Compiled with -mavx2 only; runtime
// dispatch lives in kernels.cpp.
#include <immintrin.h>

#include <cmath>
#include <cstring>
#include <limits>

#include "dw/kernels/kernels.hpp"

namespace dw::kernels {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kRayTmin = 1e-9;

inline double vmin(double a, double b) { return a < b ? a : b; }
inline double vmax(double a, double b) { return a > b ? a : b; }

inline void kahan_add(double& sum, double& comp, double term) {
    double y = term - comp;
    double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
}

// low 4 bytes of dv+i -> per-lane all-ones/all-zeros 64-bit masks
inline __m256d load_mask4(const uint8_t* p) {
    int32_t raw;
    std::memcpy(&raw, p, 4);
    __m256i wide = _mm256_cvtepu8_epi64(_mm_cvtsi32_si128(raw));
    return _mm256_castsi256_pd(_mm256_cmpgt_epi64(wide, _mm256_setzero_si256()));
}

// 4x64-bit lane mask -> 4x32-bit lane mask (for epi32 blends/stores)
inline __m128i narrow_mask(__m256d m) {
    __m256i mi = _mm256_castpd_si256(m);
    __m256i packed = _mm256_permutevar8x32_epi32(mi, _mm256_setr_epi32(0, 2, 4, 6, 0, 0, 0, 0));
    return _mm256_castsi256_si128(packed);
}

inline __m256d kahan_add4(__m256d& sum, __m256d& comp, __m256d term) {
    __m256d y = _mm256_sub_pd(term, comp);
    __m256d t = _mm256_add_pd(sum, y);
    comp = _mm256_sub_pd(_mm256_sub_pd(t, sum), y);
    sum = t;
    return t;
}

void raster_span_avx2(const TriSetup& t, int y, int x0, int x1, double* zrow,
                      int32_t* idxrow) {
    const double py = double(y) + 0.5;
    const double d0 = t.b0 * py + t.c0;
    const double d1 = t.b1 * py + t.c1;
    const double d2 = t.b2 * py + t.c2;

    const __m256d va0 = _mm256_set1_pd(t.a0);
    const __m256d va1 = _mm256_set1_pd(t.a1);
    const __m256d va2 = _mm256_set1_pd(t.a2);
    const __m256d vd0 = _mm256_set1_pd(d0);
    const __m256d vd1 = _mm256_set1_pd(d1);
    const __m256d vd2 = _mm256_set1_pd(d2);
    const __m256d viz0 = _mm256_set1_pd(t.iz0);
    const __m256d viz1 = _mm256_set1_pd(t.iz1);
    const __m256d viz2 = _mm256_set1_pd(t.iz2);
    const __m256d vinv = _mm256_set1_pd(t.inv_area2);
    const __m256d off = _mm256_setr_pd(0.5, 1.5, 2.5, 3.5);
    const __m256d zero = _mm256_setzero_pd();
    const __m256d one = _mm256_set1_pd(1.0);
    const __m128i vidx = _mm_set1_epi32(t.index);

    int x = x0;
    for (; x + 4 <= x1; x += 4) {
        const __m256d px = _mm256_add_pd(_mm256_set1_pd(double(x)), off);
        const __m256d e0 = _mm256_add_pd(_mm256_mul_pd(va0, px), vd0);
        const __m256d e1 = _mm256_add_pd(_mm256_mul_pd(va1, px), vd1);
        const __m256d e2 = _mm256_add_pd(_mm256_mul_pd(va2, px), vd2);
        const __m256d cover = _mm256_and_pd(
            _mm256_and_pd(_mm256_cmp_pd(e0, zero, _CMP_GE_OQ),
                          _mm256_cmp_pd(e1, zero, _CMP_GE_OQ)),
            _mm256_cmp_pd(e2, zero, _CMP_GE_OQ));
        if (!_mm256_movemask_pd(cover)) continue;
        const __m256d izn = _mm256_mul_pd(
            _mm256_add_pd(_mm256_add_pd(_mm256_mul_pd(e0, viz0), _mm256_mul_pd(e1, viz1)),
                          _mm256_mul_pd(e2, viz2)),
            vinv);
        const __m256d depth = _mm256_div_pd(one, izn);
        const __m256d zold = _mm256_loadu_pd(zrow + x);
        const __m256d write =
            _mm256_and_pd(cover, _mm256_cmp_pd(depth, zold, _CMP_LT_OQ));
        if (!_mm256_movemask_pd(write)) continue;
        _mm256_maskstore_pd(zrow + x, _mm256_castpd_si256(write), depth);
        _mm_maskstore_epi32(idxrow + x, narrow_mask(write), vidx);
    }
    for (; x < x1; ++x) {
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

void project_points_avx2(const CamProjectParams& P, const double* wx,
                         const double* wy, const double* wz, size_t n,
                         double* ccx, double* ccy, double* ccz, double* u,
                         double* v, double* iz) {
    const __m256d tx = _mm256_set1_pd(P.tx), ty = _mm256_set1_pd(P.ty),
                  tz = _mm256_set1_pd(P.tz);
    const __m256d r0 = _mm256_set1_pd(P.rt[0]), r1 = _mm256_set1_pd(P.rt[1]),
                  r2 = _mm256_set1_pd(P.rt[2]), r3 = _mm256_set1_pd(P.rt[3]),
                  r4 = _mm256_set1_pd(P.rt[4]), r5 = _mm256_set1_pd(P.rt[5]),
                  r6 = _mm256_set1_pd(P.rt[6]), r7 = _mm256_set1_pd(P.rt[7]),
                  r8 = _mm256_set1_pd(P.rt[8]);
    const __m256d fx = _mm256_set1_pd(P.fx), fy = _mm256_set1_pd(P.fy),
                  cx = _mm256_set1_pd(P.cx), cy = _mm256_set1_pd(P.cy);
    const __m256d one = _mm256_set1_pd(1.0);

    size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d dx = _mm256_sub_pd(_mm256_loadu_pd(wx + i), tx);
        const __m256d dy = _mm256_sub_pd(_mm256_loadu_pd(wy + i), ty);
        const __m256d dz = _mm256_sub_pd(_mm256_loadu_pd(wz + i), tz);
        const __m256d x = _mm256_add_pd(
            _mm256_add_pd(_mm256_mul_pd(r0, dx), _mm256_mul_pd(r1, dy)),
            _mm256_mul_pd(r2, dz));
        const __m256d y = _mm256_add_pd(
            _mm256_add_pd(_mm256_mul_pd(r3, dx), _mm256_mul_pd(r4, dy)),
            _mm256_mul_pd(r5, dz));
        const __m256d z = _mm256_add_pd(
            _mm256_add_pd(_mm256_mul_pd(r6, dx), _mm256_mul_pd(r7, dy)),
            _mm256_mul_pd(r8, dz));
        _mm256_storeu_pd(ccx + i, x);
        _mm256_storeu_pd(ccy + i, y);
        _mm256_storeu_pd(ccz + i, z);
        _mm256_storeu_pd(u + i, _mm256_add_pd(_mm256_div_pd(_mm256_mul_pd(fx, x), z), cx));
        _mm256_storeu_pd(v + i, _mm256_add_pd(_mm256_div_pd(_mm256_mul_pd(fy, y), z), cy));
        _mm256_storeu_pd(iz + i, _mm256_div_pd(one, z));
    }
    for (; i < n; ++i) {
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

void raycast_span_avx2(const FramePrims& prims, const RayGrid& g, int y, int x0,
                       int x1, double* trow, int32_t* idrow) {
    const double py = double(y) + 0.5;
    const size_t ns = prims.sr.size();
    const size_t nb = prims.bx0.size();

    const __m256d vtmin = _mm256_set1_pd(kRayTmin);
    const __m256d off = _mm256_setr_pd(0.5, 1.5, 2.5, 3.5);
    const __m256d vcx = _mm256_set1_pd(g.cx), vcy = _mm256_set1_pd(g.cy);
    const __m256d vifx = _mm256_set1_pd(g.inv_fx), vify = _mm256_set1_pd(g.inv_fy);
    const __m256d vr0 = _mm256_set1_pd(g.r[0]), vr1 = _mm256_set1_pd(g.r[1]),
                  vr2 = _mm256_set1_pd(g.r[2]), vr3 = _mm256_set1_pd(g.r[3]),
                  vr4 = _mm256_set1_pd(g.r[4]), vr5 = _mm256_set1_pd(g.r[5]),
                  vr6 = _mm256_set1_pd(g.r[6]), vr7 = _mm256_set1_pd(g.r[7]),
                  vr8 = _mm256_set1_pd(g.r[8]);
    const __m256d vpy = _mm256_set1_pd(py);

    int x = x0;
    for (; x + 4 <= x1; x += 4) {
        const __m256d px = _mm256_add_pd(_mm256_set1_pd(double(x)), off);
        const __m256d dcx = _mm256_mul_pd(_mm256_sub_pd(px, vcx), vifx);
        const __m256d dcy = _mm256_mul_pd(_mm256_sub_pd(vpy, vcy), vify);
        const __m256d dx = _mm256_add_pd(
            _mm256_add_pd(_mm256_mul_pd(vr0, dcx), _mm256_mul_pd(vr1, dcy)), vr2);
        const __m256d dy = _mm256_add_pd(
            _mm256_add_pd(_mm256_mul_pd(vr3, dcx), _mm256_mul_pd(vr4, dcy)), vr5);
        const __m256d dz = _mm256_add_pd(
            _mm256_add_pd(_mm256_mul_pd(vr6, dcx), _mm256_mul_pd(vr7, dcy)), vr8);

        __m256d best = _mm256_set1_pd(kInf);
        __m128i id = _mm_set1_epi32(-1);

        if (prims.has_ground) {
            const double gnum = prims.ground_y - g.oy;
            const __m256d t = _mm256_div_pd(_mm256_set1_pd(gnum), dy);
            __m256d better = _mm256_and_pd(_mm256_cmp_pd(t, vtmin, _CMP_GT_OQ),
                                           _mm256_cmp_pd(t, best, _CMP_LT_OQ));
            if (prims.ground_radius > 0.0) {
                const __m256d hx =
                    _mm256_add_pd(_mm256_set1_pd(g.ox), _mm256_mul_pd(t, dx));
                const __m256d hz =
                    _mm256_add_pd(_mm256_set1_pd(g.oz), _mm256_mul_pd(t, dz));
                const __m256d r2 =
                    _mm256_add_pd(_mm256_mul_pd(hx, hx), _mm256_mul_pd(hz, hz));
                const double rr = prims.ground_radius * prims.ground_radius;
                better = _mm256_and_pd(
                    better, _mm256_cmp_pd(r2, _mm256_set1_pd(rr), _CMP_LE_OQ));
            }
            best = _mm256_blendv_pd(best, t, better);
            id = _mm_blendv_epi8(id, _mm_set1_epi32(0), narrow_mask(better));
        }
        for (size_t s = 0; s < ns; ++s) {
            const __m256d ocx = _mm256_set1_pd(g.ox - prims.sx[s]);
            const __m256d ocy = _mm256_set1_pd(g.oy - prims.sy[s]);
            const __m256d ocz = _mm256_set1_pd(g.oz - prims.sz[s]);
            const __m256d a = _mm256_add_pd(
                _mm256_add_pd(_mm256_mul_pd(dx, dx), _mm256_mul_pd(dy, dy)),
                _mm256_mul_pd(dz, dz));
            const __m256d hb = _mm256_add_pd(
                _mm256_add_pd(_mm256_mul_pd(ocx, dx), _mm256_mul_pd(ocy, dy)),
                _mm256_mul_pd(ocz, dz));
            const double c_s = (g.ox - prims.sx[s]) * (g.ox - prims.sx[s]) +
                               (g.oy - prims.sy[s]) * (g.oy - prims.sy[s]) +
                               (g.oz - prims.sz[s]) * (g.oz - prims.sz[s]) -
                               prims.sr[s] * prims.sr[s];
            const __m256d c = _mm256_set1_pd(c_s);
            const __m256d disc = _mm256_sub_pd(_mm256_mul_pd(hb, hb), _mm256_mul_pd(a, c));
            const __m256d sq = _mm256_sqrt_pd(disc);
            const __m256d nhb = _mm256_sub_pd(_mm256_setzero_pd(), hb);
            const __m256d tn = _mm256_div_pd(_mm256_sub_pd(nhb, sq), a);
            const __m256d tf = _mm256_div_pd(_mm256_add_pd(nhb, sq), a);
            const __m256d t =
                _mm256_blendv_pd(tf, tn, _mm256_cmp_pd(tn, vtmin, _CMP_GT_OQ));
            const __m256d better =
                _mm256_and_pd(_mm256_cmp_pd(t, vtmin, _CMP_GT_OQ),
                              _mm256_cmp_pd(t, best, _CMP_LT_OQ));
            best = _mm256_blendv_pd(best, t, better);
            id = _mm_blendv_epi8(id, _mm_set1_epi32(int(1 + s)), narrow_mask(better));
        }
        for (size_t b = 0; b < nb; ++b) {
            const __m256d t0x = _mm256_div_pd(_mm256_set1_pd(prims.bx0[b] - g.ox), dx);
            const __m256d t1x = _mm256_div_pd(_mm256_set1_pd(prims.bx1[b] - g.ox), dx);
            const __m256d t0y = _mm256_div_pd(_mm256_set1_pd(prims.by0[b] - g.oy), dy);
            const __m256d t1y = _mm256_div_pd(_mm256_set1_pd(prims.by1[b] - g.oy), dy);
            const __m256d t0z = _mm256_div_pd(_mm256_set1_pd(prims.bz0[b] - g.oz), dz);
            const __m256d t1z = _mm256_div_pd(_mm256_set1_pd(prims.bz1[b] - g.oz), dz);
            const __m256d tnear = _mm256_max_pd(
                _mm256_max_pd(_mm256_min_pd(t0x, t1x), _mm256_min_pd(t0y, t1y)),
                _mm256_min_pd(t0z, t1z));
            const __m256d tfar = _mm256_min_pd(
                _mm256_min_pd(_mm256_max_pd(t0x, t1x), _mm256_max_pd(t0y, t1y)),
                _mm256_max_pd(t0z, t1z));
            const __m256d t =
                _mm256_blendv_pd(tfar, tnear, _mm256_cmp_pd(tnear, vtmin, _CMP_GT_OQ));
            const __m256d better = _mm256_and_pd(
                _mm256_and_pd(_mm256_cmp_pd(tnear, tfar, _CMP_LE_OQ),
                              _mm256_cmp_pd(t, vtmin, _CMP_GT_OQ)),
                _mm256_cmp_pd(t, best, _CMP_LT_OQ));
            best = _mm256_blendv_pd(best, t, better);
            id = _mm_blendv_epi8(id, _mm_set1_epi32(int(1 + ns + b)), narrow_mask(better));
        }
        _mm256_storeu_pd(trow + x, best);
        _mm_storeu_si128(reinterpret_cast<__m128i*>(idrow + x), id);
    }
    if (x < x1) scalar_kernels().raycast_span(prims, g, y, x, x1, trow, idrow);
}

void align_accumulate_avx2(const double* d, const uint8_t* dv, const double* x,
                           const uint8_t* xv, size_t n, double lo, double hi,
                           AlignSums* out) {
    const __m256d vlo = _mm256_set1_pd(lo), vhi = _mm256_set1_pd(hi);
    const __m256d one = _mm256_set1_pd(1.0);
    __m256d su = _mm256_setzero_pd(), cu = _mm256_setzero_pd();
    __m256d su2 = _mm256_setzero_pd(), cu2 = _mm256_setzero_pd();
    __m256d sw = _mm256_setzero_pd(), cw = _mm256_setzero_pd();
    __m256d suw = _mm256_setzero_pd(), cuw = _mm256_setzero_pd();
    uint64_t count = 0;

    size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d dd = _mm256_loadu_pd(d + i);
        const __m256d xx = _mm256_loadu_pd(x + i);
        __m256d mask = _mm256_and_pd(load_mask4(dv + i), load_mask4(xv + i));
        mask = _mm256_and_pd(mask, _mm256_cmp_pd(dd, vlo, _CMP_GT_OQ));
        mask = _mm256_and_pd(mask, _mm256_cmp_pd(dd, vhi, _CMP_LT_OQ));
        mask = _mm256_and_pd(mask, _mm256_cmp_pd(xx, vlo, _CMP_GT_OQ));
        mask = _mm256_and_pd(mask, _mm256_cmp_pd(xx, vhi, _CMP_LT_OQ));
        const int bits = _mm256_movemask_pd(mask);
        if (!bits) continue;
        count += unsigned(__builtin_popcount(unsigned(bits)));
        const __m256d u = _mm256_and_pd(mask, _mm256_div_pd(one, dd));
        const __m256d w = _mm256_and_pd(mask, _mm256_div_pd(one, xx));
        kahan_add4(su, cu, u);
        kahan_add4(su2, cu2, _mm256_mul_pd(u, u));
        kahan_add4(sw, cw, w);
        kahan_add4(suw, cuw, _mm256_mul_pd(u, w));
    }

    // lane merge in fixed order, then the scalar tail
    alignas(32) double ls[4], lc[4];
    double msu = 0, mcu = 0, msu2 = 0, mcu2 = 0, msw = 0, mcw = 0, msuw = 0, mcuw = 0;
    auto merge = [&](const __m256d& s4, const __m256d& c4, double& ms, double& mc) {
        _mm256_store_pd(ls, s4);
        _mm256_store_pd(lc, c4);
        for (int k = 0; k < 4; ++k) {
            kahan_add(ms, mc, ls[k]);
            kahan_add(ms, mc, -lc[k]);
        }
    };
    merge(su, cu, msu, mcu);
    merge(su2, cu2, msu2, mcu2);
    merge(sw, cw, msw, mcw);
    merge(suw, cuw, msuw, mcuw);

    for (; i < n; ++i) {
        if (dv[i] && xv[i] && d[i] > lo && d[i] < hi && x[i] > lo && x[i] < hi) {
            const double u = 1.0 / d[i];
            const double w = 1.0 / x[i];
            kahan_add(msu, mcu, u);
            kahan_add(msu2, mcu2, u * u);
            kahan_add(msw, mcw, w);
            kahan_add(msuw, mcuw, u * w);
            ++count;
        }
    }
    out->su = msu;
    out->su2 = msu2;
    out->sw = msw;
    out->suw = msuw;
    out->n = count;
}

void align_residual_avx2(const double* d, const uint8_t* dv, const double* x,
                         const uint8_t* xv, size_t n, double lo, double hi,
                         double s, double b, ResidualSums* out) {
    const __m256d vlo = _mm256_set1_pd(lo), vhi = _mm256_set1_pd(hi);
    const __m256d one = _mm256_set1_pd(1.0);
    const __m256d vs = _mm256_set1_pd(s), vb = _mm256_set1_pd(b);
    __m256d sr = _mm256_setzero_pd(), cr = _mm256_setzero_pd();
    uint64_t count = 0;

    size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d dd = _mm256_loadu_pd(d + i);
        const __m256d xx = _mm256_loadu_pd(x + i);
        __m256d mask = _mm256_and_pd(load_mask4(dv + i), load_mask4(xv + i));
        mask = _mm256_and_pd(mask, _mm256_cmp_pd(dd, vlo, _CMP_GT_OQ));
        mask = _mm256_and_pd(mask, _mm256_cmp_pd(dd, vhi, _CMP_LT_OQ));
        mask = _mm256_and_pd(mask, _mm256_cmp_pd(xx, vlo, _CMP_GT_OQ));
        mask = _mm256_and_pd(mask, _mm256_cmp_pd(xx, vhi, _CMP_LT_OQ));
        const int bits = _mm256_movemask_pd(mask);
        if (!bits) continue;
        count += unsigned(__builtin_popcount(unsigned(bits)));
        const __m256d u = _mm256_div_pd(one, dd);
        const __m256d w = _mm256_div_pd(one, xx);
        const __m256d r = _mm256_sub_pd(_mm256_sub_pd(w, _mm256_mul_pd(vs, u)), vb);
        kahan_add4(sr, cr, _mm256_and_pd(mask, _mm256_mul_pd(r, r)));
    }

    alignas(32) double ls[4], lc[4];
    double msr = 0, mcr = 0;
    _mm256_store_pd(ls, sr);
    _mm256_store_pd(lc, cr);
    for (int k = 0; k < 4; ++k) {
        kahan_add(msr, mcr, ls[k]);
        kahan_add(msr, mcr, -lc[k]);
    }
    for (; i < n; ++i) {
        if (dv[i] && xv[i] && d[i] > lo && d[i] < hi && x[i] > lo && x[i] < hi) {
            const double u = 1.0 / d[i];
            const double w = 1.0 / x[i];
            const double r = w - s * u - b;
            kahan_add(msr, mcr, r * r);
            ++count;
        }
    }
    out->sr2 = msr;
    out->n = count;
}

void align_apply_avx2(const double* d, const uint8_t* dv, size_t n, double s,
                      double b, double* out, uint8_t* outv) {
    const __m256d vs = _mm256_set1_pd(s), vb = _mm256_set1_pd(b);
    const __m256d one = _mm256_set1_pd(1.0);
    const __m256d zero = _mm256_setzero_pd();
    const __m256d vmaxd = _mm256_set1_pd(std::numeric_limits<double>::max());

    size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d dd = _mm256_loadu_pd(d + i);
        const __m256d q = _mm256_add_pd(_mm256_div_pd(vs, dd), vb);
        __m256d ok = _mm256_and_pd(load_mask4(dv + i), _mm256_cmp_pd(q, zero, _CMP_GT_OQ));
        ok = _mm256_and_pd(ok, _mm256_cmp_pd(q, vmaxd, _CMP_LE_OQ));
        _mm256_storeu_pd(out + i, _mm256_and_pd(ok, _mm256_div_pd(one, q)));
        const int bits = _mm256_movemask_pd(ok);
        outv[i] = uint8_t(bits & 1);
        outv[i + 1] = uint8_t((bits >> 1) & 1);
        outv[i + 2] = uint8_t((bits >> 2) & 1);
        outv[i + 3] = uint8_t((bits >> 3) & 1);
    }
    if (i < n) scalar_kernels().align_apply(d + i, dv + i, n - i, s, b, out + i, outv + i);
}

void minmax_valid_avx2(const double* v, const uint8_t* valid, size_t n,
                       double* mn, double* mx) {
    __m256d vlo = _mm256_set1_pd(kInf);
    __m256d vhi = _mm256_set1_pd(-kInf);
    size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d mask = load_mask4(valid + i);
        const __m256d x = _mm256_loadu_pd(v + i);
        vlo = _mm256_min_pd(_mm256_blendv_pd(_mm256_set1_pd(kInf), x, mask), vlo);
        vhi = _mm256_max_pd(_mm256_blendv_pd(_mm256_set1_pd(-kInf), x, mask), vhi);
    }
    alignas(32) double lo4[4], hi4[4];
    _mm256_store_pd(lo4, vlo);
    _mm256_store_pd(hi4, vhi);
    double lo = kInf, hi = -kInf;
    for (int k = 0; k < 4; ++k) {
        lo = vmin(lo4[k], lo);
        hi = vmax(hi4[k], hi);
    }
    for (; i < n; ++i) {
        const double a = valid[i] ? v[i] : kInf;
        const double b = valid[i] ? v[i] : -kInf;
        lo = vmin(a, lo);
        hi = vmax(b, hi);
    }
    *mn = lo;
    *mx = hi;
}

void lerp_avx2(const double* x, const double* z, double t, size_t n, double* out) {
    const double s = 1.0 - t;
    const __m256d vs = _mm256_set1_pd(s), vt = _mm256_set1_pd(t);
    size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        _mm256_storeu_pd(out + i,
                         _mm256_add_pd(_mm256_mul_pd(vs, _mm256_loadu_pd(x + i)),
                                       _mm256_mul_pd(vt, _mm256_loadu_pd(z + i))));
    }
    for (; i < n; ++i) out[i] = s * x[i] + t * z[i];
}

void sub_avx2(const double* a, const double* b, size_t n, double* out) {
    size_t i = 0;
    for (; i + 4 <= n; i += 4)
        _mm256_storeu_pd(out + i, _mm256_sub_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i)));
    for (; i < n; ++i) out[i] = a[i] - b[i];
}

void add_avx2(const double* a, const double* b, size_t n, double* out) {
    size_t i = 0;
    for (; i + 4 <= n; i += 4)
        _mm256_storeu_pd(out + i, _mm256_add_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i)));
    for (; i < n; ++i) out[i] = a[i] + b[i];
}

void affine_avx2(const double* x, double a, double c, size_t n, double* out) {
    const __m256d va = _mm256_set1_pd(a), vc = _mm256_set1_pd(c);
    size_t i = 0;
    for (; i + 4 <= n; i += 4)
        _mm256_storeu_pd(out + i,
                         _mm256_add_pd(_mm256_mul_pd(va, _mm256_loadu_pd(x + i)), vc));
    for (; i < n; ++i) out[i] = a * x[i] + c;
}

}  // namespace

const KernelTable& avx2_kernels() {
    static const KernelTable table{
        "avx2",
        raster_span_avx2,
        project_points_avx2,
        raycast_span_avx2,
        align_accumulate_avx2,
        align_residual_avx2,
        align_apply_avx2,
        minmax_valid_avx2,
        lerp_avx2,
        sub_avx2,
        add_avx2,
        affine_avx2,
    };
    return table;
}

}  // namespace dw::kernels

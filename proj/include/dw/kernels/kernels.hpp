// Copyright (C) 2026 the depthwarp authors
// SPDX-License-Identifier: Apache-2.0
//
// Data-parallel inner loops, provided as scalar reference kernels plus AVX2
// variants selected at runtime. Except for the Kahan accumulators (lane
// striping reorders the additions), every variant pair is bit-identical to
// its scalar reference: same operation order, no FMA contraction, only
// exactly-rounded ops (+,-,*,/,sqrt,min,max,compare). The equivalence tests
// in tests/unit/test_kernels.cpp pin this down.
#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace dw::kernels {

// ---------------------------------------------------------------- raster ---

/// Screen-space triangle, set up once per triangle. Edge functions
/// e_i(x,y) = a_i*x + b_i*y + c_i are orientation-normalized so all three are
/// >= 0 inside.
struct TriSetup {
    double a0, b0, c0;
    double a1, b1, c1;
    double a2, b2, c2;
    double iz0, iz1, iz2;  // 1/z at the corners
    double inv_area2;      // 1 / (2 * area), after orientation normalization
    int32_t index;         // source triangle id; z ties keep the first writer
};

/// Fill pixels x in [x0, x1) of row y (pixel centers at +0.5); update
/// zrow/idxrow where the pixel is covered and the interpolated depth is
/// strictly nearer. Processing triangles in ascending index order makes
/// "strictly nearer" equivalent to the lowest-index tie-break.
using RasterSpanFn = void (*)(const TriSetup& tri, int y, int x0, int x1,
                              double* zrow, int32_t* idxrow);

/// World-space points -> target camera: camera coordinates plus pinhole
/// screen coordinates and inverse depth. Screen outputs are unusable where
/// cz <= 0; callers must route those through the clip path.
struct CamProjectParams {
    double rt[9];              // world-to-camera rotation (R^T), row-major
    double tx, ty, tz;         // camera origin in world
    double fx, fy, cx, cy;
};
using ProjectPointsFn = void (*)(const CamProjectParams& P, const double* wx,
                                 const double* wy, const double* wz, size_t n,
                                 double* ccx, double* ccy, double* ccz,
                                 double* u, double* v, double* iz);

// -------------------------------------------------------------- raycast ---

/// Analytic primitives of one frame, struct-of-arrays. Primitive ids:
/// ground plane = 0 (if present), spheres 1..ns, boxes ns+1..ns+nb.
struct FramePrims {
    int has_ground = 0;
    double ground_y = 0.0;
    double ground_radius = 0.0;  // finite disk about the origin; <= 0 = infinite
    std::vector<double> sx, sy, sz, sr;                    // spheres
    std::vector<double> bx0, by0, bz0, bx1, by1, bz1;      // axis-aligned boxes
};

struct RayGrid {
    double ox, oy, oz;   // camera origin, world
    double r[9];         // camera-to-world rotation, row-major
    double cx, cy, inv_fx, inv_fy;
};

/// Cast the rays of pixels x in [x0, x1) of row y. Writes the hit parameter
/// (camera-z depth, since the camera-frame direction has z = 1) and the
/// winning primitive id, -1 for a miss.
using RaycastSpanFn = void (*)(const FramePrims& prims, const RayGrid& grid,
                               int y, int x0, int x1, double* trow,
                               int32_t* idrow);

// ------------------------------------------------- inverse-depth fitting ---

struct AlignSums {
    double su = 0, su2 = 0, sw = 0, suw = 0;
    uint64_t n = 0;
};

/// Accumulate u = 1/d, w = 1/x over pixels valid in both frames with both
/// depths inside (lo, hi). Kahan-compensated.
using AlignAccumFn = void (*)(const double* d, const uint8_t* dv,
                              const double* x, const uint8_t* xv, size_t n,
                              double lo, double hi, AlignSums* out);

struct ResidualSums {
    double sr2 = 0;
    uint64_t n = 0;
};
using AlignResidualFn = void (*)(const double* d, const uint8_t* dv,
                                 const double* x, const uint8_t* xv, size_t n,
                                 double lo, double hi, double s, double b,
                                 ResidualSums* out);

/// out = 1/(s/d + b) where the input is valid and the inverse stays positive
/// and finite; other pixels become invalid (value 0).
using AlignApplyFn = void (*)(const double* d, const uint8_t* dv, size_t n,
                              double s, double b, double* out, uint8_t* outv);

// --------------------------------------------- reductions / elementwise ---

/// Min/max over valid entries; *mn = +inf and *mx = -inf when none.
using MinMaxValidFn = void (*)(const double* v, const uint8_t* valid, size_t n,
                               double* mn, double* mx);

using LerpFn = void (*)(const double* x, const double* z, double t, size_t n,
                        double* out);                                   // (1-t)*x + t*z
using SubFn = void (*)(const double* a, const double* b, size_t n, double* out);
using AddFn = void (*)(const double* a, const double* b, size_t n, double* out);
using AffineFn = void (*)(const double* x, double a, double c, size_t n,
                          double* out);                                 // a*x + c

// ------------------------------------------------------------- dispatch ---

struct KernelTable {
    const char* name;
    RasterSpanFn raster_span;
    ProjectPointsFn project_points;
    RaycastSpanFn raycast_span;
    AlignAccumFn align_accumulate;
    AlignResidualFn align_residual;
    AlignApplyFn align_apply;
    MinMaxValidFn minmax_valid;
    LerpFn lerp;
    SubFn sub;
    AddFn add;
    AffineFn affine;
};

const KernelTable& scalar_kernels();

/// True when the AVX2 variants are compiled in and the CPU supports them.
bool avx2_available();
const KernelTable& avx2_kernels();

/// Runtime selection: best available, or forced via DW_KERNELS=scalar|avx2.
const KernelTable& active_kernels();

}  // namespace dw::kernels

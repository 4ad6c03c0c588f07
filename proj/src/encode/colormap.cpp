// Copyright (C) 2026 the depthwarp authors
// SPDX-License-Identifier: Apache-2.0
#include "dw/colormap.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>

#include "dw/errors.hpp"

#include "spectral_lut.inc"

namespace dw {

const ColormapLUT& ColormapLUT::spectral_reversed() {
    static const ColormapLUT lut = [] {
        ColormapLUT l;
        for (int i = 0; i < 256; ++i)
            l.entries[i] = {kSpectralReversed[i][0], kSpectralReversed[i][1],
                            kSpectralReversed[i][2]};
        return l;
    }();
    return lut;
}

ColormapLUT ColormapLUT::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("colormap: cannot open " + path);
    ColormapLUT l;
    for (int i = 0; i < 256; ++i) {
        int r, g, b;
        if (!(in >> r >> g >> b))
            throw FormatError("colormap: expected 256 'r g b' lines in " + path);
        if (r < 0 || r > 255 || g < 0 || g > 255 || b < 0 || b > 255)
            throw FormatError("colormap: entry out of 8-bit range in " + path);
        l.entries[i] = {uint8_t(r), uint8_t(g), uint8_t(b)};
    }
    if (l.entries.front() == l.entries.back())
        throw FormatError("colormap: endpoints must be distinct");
    return l;
}

std::array<uint8_t, 3> ColormapLUT::sample(double t) const {
    t = std::clamp(t, 0.0, 1.0);
    const double x = t * 255.0;
    const int i = std::min(int(x), 254);
    const double f = x - i;
    std::array<uint8_t, 3> out;
    for (int c = 0; c < 3; ++c) {
        const double v = double(entries[i][c]) * (1.0 - f) + double(entries[i + 1][c]) * f;
        out[c] = uint8_t(std::lround(v));
    }
    return out;
}

double ColormapLUT::decode(uint8_t r, uint8_t g, uint8_t b) const {
    const double q[3] = {double(r), double(g), double(b)};
    double best_d2 = 1e300;
    double best_t = 0.0;
    for (int i = 0; i < 255; ++i) {
        double d[3], ap[3];
        double dd = 0.0, ad = 0.0;
        for (int c = 0; c < 3; ++c) {
            d[c] = double(entries[i + 1][c]) - double(entries[i][c]);
            ap[c] = q[c] - double(entries[i][c]);
            dd += d[c] * d[c];
            ad += ap[c] * d[c];
        }
        const double u = dd > 0.0 ? std::clamp(ad / dd, 0.0, 1.0) : 0.0;
        double r2 = 0.0;
        for (int c = 0; c < 3; ++c) {
            const double e = ap[c] - u * d[c];
            r2 += e * e;
        }
        if (r2 < best_d2) {
            best_d2 = r2;
            best_t = (double(i) + u) / 255.0;
        }
    }
    return best_t;
}

}  // namespace dw

// Copyright (C) 2026 the depthwarp authors
// SPDX-License-Identifier: Apache-2.0
#include "dw/io/pfm.hpp"

#include <bit>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <memory>
#include <vector>

namespace dw::io {

namespace {

struct FileCloser {
    void operator()(FILE* f) const {
        if (f) std::fclose(f);
    }
};
using FilePtr = std::unique_ptr<FILE, FileCloser>;

// one whitespace-delimited token, PFM-style (single whitespace separators)
bool read_token(FILE* f, char* buf, size_t cap) {
    size_t n = 0;
    int c;
    while ((c = std::fgetc(f)) != EOF) {
        if (c == ' ' || c == '\n' || c == '\r' || c == '\t') {
            if (n > 0) break;
            continue;
        }
        if (n + 1 >= cap) return false;
        buf[n++] = char(c);
    }
    buf[n] = '\0';
    return n > 0;
}

void parse_header(FILE* f, const std::string& path, int& w, int& h, double& scale) {
    char tok[64];
    if (!read_token(f, tok, sizeof tok)) throw FormatError(path + ": truncated PFM header");
    if (std::strcmp(tok, "PF") == 0)
        throw FormatError(path + ": color PFM (\"PF\") is unsupported, expected grayscale \"Pf\"");
    if (std::strcmp(tok, "Pf") != 0)
        throw FormatError(path + ": not a PFM file (bad magic '" + tok + "')");
    if (!read_token(f, tok, sizeof tok)) throw FormatError(path + ": missing PFM width");
    w = std::atoi(tok);
    if (!read_token(f, tok, sizeof tok)) throw FormatError(path + ": missing PFM height");
    h = std::atoi(tok);
    if (!read_token(f, tok, sizeof tok)) throw FormatError(path + ": missing PFM scale");
    scale = std::atof(tok);
    if (w <= 0 || h <= 0 || w > (1 << 20) || h > (1 << 20) ||
        int64_t(w) * int64_t(h) > int64_t(1) << 29)
        throw FormatError(path + ": unreasonable PFM dimensions");
    if (scale == 0.0) throw FormatError(path + ": zero PFM scale");
}

}  // namespace

PfmHeader probe_pfm(const std::string& path) {
    FilePtr f(std::fopen(path.c_str(), "rb"));
    if (!f) throw FormatError(path + ": cannot open");
    PfmHeader hdr;
    double scale;
    parse_header(f.get(), path, hdr.width, hdr.height, scale);
    return hdr;
}

DepthFrame read_depth_pfm(const std::string& path) {
    FilePtr f(std::fopen(path.c_str(), "rb"));
    if (!f) throw FormatError(path + ": cannot open");
    int w, h;
    double scale;
    parse_header(f.get(), path, w, h, scale);
    const bool big_endian = scale > 0.0;

    std::vector<float> row(static_cast<size_t>(w));
    DepthFrame out(w, h);
    // PFM stores the bottom row first
    for (int y = h - 1; y >= 0; --y) {
        if (std::fread(row.data(), sizeof(float), row.size(), f.get()) != row.size())
            throw FormatError(path + ": truncated PFM payload");
        for (int x = 0; x < w; ++x) {
            float v = row[x];
            if (big_endian) {
                uint32_t u = std::bit_cast<uint32_t>(v);
                u = __builtin_bswap32(u);
                v = std::bit_cast<float>(u);
            }
            if (v > 0.0f && std::isfinite(v)) out.set(x, y, double(v));
        }
    }
    return out;
}

void write_depth_pfm(const DepthFrame& frame, const std::string& path) {
    FilePtr f(std::fopen(path.c_str(), "wb"));
    if (!f) throw FormatError(path + ": cannot open for writing");
    std::fprintf(f.get(), "Pf\n%d %d\n-1.0\n", frame.width, frame.height);
    std::vector<float> row(static_cast<size_t>(frame.width));
    for (int y = frame.height - 1; y >= 0; --y) {
        for (int x = 0; x < frame.width; ++x)
            row[x] = frame.is_valid(x, y) ? float(frame.at(x, y)) : 0.0f;
        if (std::fwrite(row.data(), sizeof(float), row.size(), f.get()) != row.size())
            throw FormatError(path + ": short write");
    }
}

}  // namespace dw::io

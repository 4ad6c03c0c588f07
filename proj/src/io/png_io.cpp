// Copyright (C) 2026 the depthwarp authors
// SPDX-License-Identifier: Apache-2.0
#include "dw/io/png_io.hpp"

#include <png.h>

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

void png_error_fn(png_structp png, png_const_charp msg) {
    // stash the message; control returns via longjmp to the caller's setjmp
    auto* err = static_cast<std::string*>(png_get_error_ptr(png));
    if (err && err->empty()) *err = msg;
    png_longjmp(png, 1);
}

void png_warn_fn(png_structp, png_const_charp) {}

struct PngRead {
    png_structp png = nullptr;
    png_infop info = nullptr;
    std::string error;

    PngRead() {
        png = png_create_read_struct(PNG_LIBPNG_VER_STRING, &error, png_error_fn, png_warn_fn);
        if (png) info = png_create_info_struct(png);
    }
    ~PngRead() { png_destroy_read_struct(&png, &info, nullptr); }
};

struct PngWrite {
    png_structp png = nullptr;
    png_infop info = nullptr;
    std::string error;

    PngWrite() {
        png = png_create_write_struct(PNG_LIBPNG_VER_STRING, &error, png_error_fn, png_warn_fn);
        if (png) info = png_create_info_struct(png);
    }
    ~PngWrite() { png_destroy_write_struct(&png, &info); }
};

struct Decoded {
    int width = 0, height = 0, bit_depth = 0, color_type = 0, channels = 0;
    std::vector<uint8_t> bytes;  // raw rows, no transforms
};

// Reads the image without any format conversion; callers enforce the layout
// they need and report mismatches as FormatError.
Decoded read_png_raw(const std::string& path) {
    FilePtr f(std::fopen(path.c_str(), "rb"));
    if (!f) throw FormatError(path + ": cannot open");
    PngRead ctx;
    if (!ctx.png || !ctx.info) throw FormatError(path + ": libpng init failed");

    Decoded out;
    std::vector<png_bytep> row_ptrs;
    // only libpng calls between setjmp and the end of the block
    if (setjmp(png_jmpbuf(ctx.png))) {
        throw FormatError(path + ": PNG decode failed (" + ctx.error + ")");
    }
    png_init_io(ctx.png, f.get());
    png_read_info(ctx.png, ctx.info);
    out.width = int(png_get_image_width(ctx.png, ctx.info));
    out.height = int(png_get_image_height(ctx.png, ctx.info));
    out.bit_depth = png_get_bit_depth(ctx.png, ctx.info);
    out.color_type = png_get_color_type(ctx.png, ctx.info);
    if (png_get_interlace_type(ctx.png, ctx.info) != PNG_INTERLACE_NONE)
        png_set_interlace_handling(ctx.png);
    png_read_update_info(ctx.png, ctx.info);
    out.channels = png_get_channels(ctx.png, ctx.info);
    const size_t rowbytes = png_get_rowbytes(ctx.png, ctx.info);
    out.bytes.resize(rowbytes * size_t(out.height));
    row_ptrs.resize(out.height);
    for (int y = 0; y < out.height; ++y) row_ptrs[y] = out.bytes.data() + rowbytes * size_t(y);
    png_read_image(ctx.png, row_ptrs.data());
    png_read_end(ctx.png, nullptr);
    return out;
}

void write_png_rows(const std::string& path, int width, int height, int color_type,
                    const uint8_t* data, size_t rowbytes) {
    FilePtr f(std::fopen(path.c_str(), "wb"));
    if (!f) throw FormatError(path + ": cannot open for writing");
    PngWrite ctx;
    if (!ctx.png || !ctx.info) throw FormatError(path + ": libpng init failed");

    std::vector<png_bytep> row_ptrs(height);
    for (int y = 0; y < height; ++y)
        row_ptrs[y] = const_cast<png_bytep>(data + rowbytes * size_t(y));

    if (setjmp(png_jmpbuf(ctx.png))) {
        throw FormatError(path + ": PNG encode failed (" + ctx.error + ")");
    }
    png_init_io(ctx.png, f.get());
    // pinned filter + level keep the output byte-deterministic
    png_set_filter(ctx.png, 0, PNG_FILTER_NONE);
    png_set_compression_level(ctx.png, 6);
    png_set_IHDR(ctx.png, ctx.info, png_uint_32(width), png_uint_32(height), 8, color_type,
                 PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
    png_write_info(ctx.png, ctx.info);
    png_write_image(ctx.png, row_ptrs.data());
    png_write_end(ctx.png, nullptr);
}

}  // namespace

PngHeader probe_png(const std::string& path) {
    FilePtr f(std::fopen(path.c_str(), "rb"));
    if (!f) throw FormatError(path + ": cannot open");
    uint8_t buf[33];
    if (std::fread(buf, 1, sizeof buf, f.get()) != sizeof buf)
        throw FormatError(path + ": truncated PNG");
    static const uint8_t sig[8] = {0x89, 'P', 'N', 'G', '\r', '\n', 0x1a, '\n'};
    if (std::memcmp(buf, sig, 8) != 0) throw FormatError(path + ": not a PNG file");
    if (std::memcmp(buf + 12, "IHDR", 4) != 0) throw FormatError(path + ": missing IHDR");
    PngHeader h;
    h.width = int(buf[16]) << 24 | int(buf[17]) << 16 | int(buf[18]) << 8 | int(buf[19]);
    h.height = int(buf[20]) << 24 | int(buf[21]) << 16 | int(buf[22]) << 8 | int(buf[23]);
    h.bit_depth = buf[24];
    h.color_type = buf[25];
    return h;
}

RgbFrame read_rgb_png(const std::string& path) {
    Decoded d = read_png_raw(path);
    if (d.bit_depth != 8)
        throw FormatError(path + ": expected 8-bit PNG, got " + std::to_string(d.bit_depth) +
                          "-bit");
    if (d.color_type != PNG_COLOR_TYPE_RGB || d.channels != 3)
        throw FormatError(path + ": expected 8-bit RGB PNG");
    RgbFrame out(d.width, d.height);
    out.rgb = std::move(d.bytes);
    return out;
}

void write_rgb_png(const RgbFrame& frame, const std::string& path) {
    write_png_rows(path, frame.width, frame.height, PNG_COLOR_TYPE_RGB, frame.rgb.data(),
                   size_t(frame.width) * 3);
}

MaskFrame read_mask_png(const std::string& path) {
    Decoded d = read_png_raw(path);
    if (d.bit_depth != 8)
        throw FormatError(path + ": expected 8-bit PNG, got " + std::to_string(d.bit_depth) +
                          "-bit");
    if (d.color_type != PNG_COLOR_TYPE_GRAY || d.channels != 1)
        throw FormatError(path + ": expected 8-bit grayscale mask PNG");
    MaskFrame out(d.width, d.height);
    for (size_t i = 0; i < d.bytes.size(); ++i) {
        if (d.bytes[i] == 0)
            out.values[i] = 0;
        else if (d.bytes[i] == 255)
            out.values[i] = 1;
        else
            throw FormatError(path + ": mask pixel value " + std::to_string(d.bytes[i]) +
                              " is not in {0, 255}");
    }
    return out;
}

void write_mask_png(const MaskFrame& frame, const std::string& path) {
    std::vector<uint8_t> bytes(frame.values.size());
    for (size_t i = 0; i < bytes.size(); ++i) bytes[i] = frame.values[i] ? 255 : 0;
    write_png_rows(path, frame.width, frame.height, PNG_COLOR_TYPE_GRAY, bytes.data(),
                   size_t(frame.width));
}

DepthFrame read_depth_png16(const std::string& path, double meters_per_unit) {
    Decoded d = read_png_raw(path);
    if (d.bit_depth != 16 || d.color_type != PNG_COLOR_TYPE_GRAY || d.channels != 1)
        throw FormatError(path + ": expected 16-bit grayscale PNG");
    DepthFrame out(d.width, d.height);
    // PNG stores 16-bit samples big-endian
    for (size_t i = 0; i < out.values.size(); ++i) {
        const uint16_t raw = uint16_t(d.bytes[2 * i]) << 8 | uint16_t(d.bytes[2 * i + 1]);
        if (raw != 0) {
            out.values[i] = double(raw) * meters_per_unit;
            out.valid[i] = 1;
        }
    }
    return out;
}

}  // namespace dw::io

// Copyright (C) 2026 the depthwarp authors
// SPDX-License-Identifier: Apache-2.0
#include "dw/io/manifest.hpp"

#include <fstream>

#include "dw/io/pfm.hpp"
#include "dw/io/png_io.hpp"

namespace dw::io {

namespace fs = std::filesystem;
using ordered_json = nlohmann::ordered_json;

const std::vector<std::string>& Manifest::stream(const std::string& kind) const {
    auto it = streams.find(kind);
    if (it == streams.end())
        throw ValidationError("manifest: missing required stream '" + kind + "'");
    return it->second;
}

Manifest load_manifest(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FormatError(path + ": cannot open");
    ordered_json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw FormatError(path + ": bad JSON (" + e.what() + ")");
    }
    Manifest m;
    try {
        m.version = j.at("version").get<std::string>();
        if (m.version != "depthwarp/1")
            throw ValidationError(path + ": unknown manifest version '" + m.version + "'");
        m.frames = j.at("frames").get<int>();
        m.width = j.at("width").get<int>();
        m.height = j.at("height").get<int>();
        if (j.contains("streams"))
            for (const auto& [kind, files] : j.at("streams").items())
                m.streams[kind] = files.get<std::vector<std::string>>();
        if (j.contains("camera_file")) m.camera_file = j.at("camera_file").get<std::string>();
        if (j.contains("provenance")) m.provenance = j.at("provenance");
    } catch (const nlohmann::json::exception& e) {
        throw FormatError(path + ": bad manifest field (" + std::string(e.what()) + ")");
    }
    m.base_dir = fs::path(path).parent_path();
    return m;
}

void save_manifest(Manifest& m, const std::string& path) {
    ordered_json j;
    j["version"] = m.version;
    j["frames"] = m.frames;
    j["width"] = m.width;
    j["height"] = m.height;
    ordered_json streams = ordered_json::object();
    for (const auto& [kind, files] : m.streams) streams[kind] = files;
    j["streams"] = streams;
    if (!m.camera_file.empty()) j["camera_file"] = m.camera_file;
    if (!m.provenance.empty()) j["provenance"] = m.provenance;

    std::ofstream out(path);
    if (!out) throw FormatError(path + ": cannot open for writing");
    out << j.dump(2) << "\n";
    m.base_dir = fs::path(path).parent_path();
}

void validate_manifest(const Manifest& m) {
    if (m.frames <= 0 || m.width <= 0 || m.height <= 0)
        throw ValidationError("manifest: non-positive frames or resolution");
    for (const auto& [kind, files] : m.streams) {
        if (int(files.size()) != m.frames)
            throw ValidationError("manifest: stream '" + kind + "' lists " +
                                  std::to_string(files.size()) + " files, expected " +
                                  std::to_string(m.frames));
        for (const auto& rel : files) {
            const fs::path p = m.resolve(rel);
            if (!fs::exists(p))
                throw ValidationError("manifest: missing file " + p.string());
            int w = 0, h = 0;
            if (p.extension() == ".pfm") {
                const PfmHeader hdr = probe_pfm(p.string());
                w = hdr.width;
                h = hdr.height;
            } else if (p.extension() == ".png") {
                const PngHeader hdr = probe_png(p.string());
                w = hdr.width;
                h = hdr.height;
            } else {
                throw ValidationError("manifest: unsupported file type " + p.string());
            }
            if (w != m.width || h != m.height)
                throw ValidationError("manifest: " + p.string() + " is " + std::to_string(w) +
                                      "x" + std::to_string(h) + ", manifest declares " +
                                      std::to_string(m.width) + "x" + std::to_string(m.height));
        }
    }
    if (!m.camera_file.empty() && !fs::exists(m.resolve(m.camera_file)))
        throw ValidationError("manifest: missing camera file " +
                              m.resolve(m.camera_file).string());
}

uint64_t fnv1a64(std::string_view s) {
    uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

std::string config_hash_hex(const ordered_json& config) {
    const uint64_t h = fnv1a64(config.dump());
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

}  // namespace dw::io

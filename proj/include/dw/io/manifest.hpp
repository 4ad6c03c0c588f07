// Copyright (C) 2026 the depthwarp authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "dw/geometry.hpp"

namespace dw::io {

/// Frame-sequence manifest. Every pipeline stage reads its inputs through one
/// of these (no directory scans) and records provenance for replay. Stream
/// file paths are relative to the manifest's directory.
struct Manifest {
    std::string version = "depthwarp/1";
    int frames = 0;
    int width = 0;
    int height = 0;
    std::map<std::string, std::vector<std::string>> streams;  // rgb | depth | mask | encoded
    std::string camera_file;                                  // optional
    nlohmann::ordered_json provenance = nlohmann::ordered_json::object();

    std::filesystem::path base_dir;  // set on load / save, not serialized

    std::filesystem::path resolve(const std::string& rel) const { return base_dir / rel; }
    const std::vector<std::string>& stream(const std::string& kind) const;
    bool has_stream(const std::string& kind) const { return streams.count(kind) != 0; }
};

Manifest load_manifest(const std::string& path);
void save_manifest(Manifest& m, const std::string& path);

/// Existence, per-stream count == frames, and header-level resolution checks
/// for every referenced file. Throws ValidationError naming the first
/// offending path.
void validate_manifest(const Manifest& m);

/// FNV-1a 64 over the canonical dump; stable config fingerprint.
uint64_t fnv1a64(std::string_view s);
std::string config_hash_hex(const nlohmann::ordered_json& config);

}  // namespace dw::io

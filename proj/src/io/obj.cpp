// Copyright (C) 2026 the depthwarp authors
// SPDX-License-Identifier: Apache-2.0
#include "dw/io/obj.hpp"

#include <cinttypes>
#include <cstdio>
#include <memory>

#include "dw/errors.hpp"

namespace dw::io {

void write_obj(const WarpMesh& mesh, const std::string& path) {
    std::unique_ptr<FILE, int (*)(FILE*)> f(std::fopen(path.c_str(), "w"), std::fclose);
    if (!f) throw FormatError(path + ": cannot open for writing");
    std::fprintf(f.get(), "# depthwarp mesh, source frame %d\n", mesh.source_frame);
    for (const auto& v : mesh.vertices)
        std::fprintf(f.get(), "v %.17g %.17g %.17g\n", v.x, v.y, v.z);
    std::fprintf(f.get(), "o surface\n");
    for (size_t i = 0; i < mesh.triangles.size(); ++i) {
        if (mesh.stretched[i]) continue;
        const auto& t = mesh.triangles[i];
        std::fprintf(f.get(), "f %d %d %d\n", t[0] + 1, t[1] + 1, t[2] + 1);
    }
    std::fprintf(f.get(), "o stretched\n");
    for (size_t i = 0; i < mesh.triangles.size(); ++i) {
        if (!mesh.stretched[i]) continue;
        const auto& t = mesh.triangles[i];
        std::fprintf(f.get(), "f %d %d %d\n", t[0] + 1, t[1] + 1, t[2] + 1);
    }
}

}  // namespace dw::io

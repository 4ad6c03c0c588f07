// Copyright (C) 2026 the depthwarp authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>

#include "dw/mesh.hpp"

namespace dw::io {

/// Debug dump; not a pipeline format. Stretched triangles go into a second
/// object group so they can be toggled in a viewer.
void write_obj(const WarpMesh& mesh, const std::string& path);

}  // namespace dw::io

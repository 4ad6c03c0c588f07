// Copyright (C) 2026 the depthwarp authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace dw {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// geometry
struct BehindCameraError : Error { using Error::Error; };

// depth alignment
struct DegenerateFitError : Error { using Error::Error; };
struct NoDataError : Error { using Error::Error; };

// meshing / rendering
struct EmptyMeshError : Error { using Error::Error; };

// sequence contracts
struct LengthMismatchError : Error { using Error::Error; };
struct DimMismatchError : Error { using Error::Error; };

// randomized generators
struct SamplingError : Error { using Error::Error; };

// file formats and manifests
struct FormatError : Error { using Error::Error; };
struct ValidationError : Error { using Error::Error; };

}  // namespace dw

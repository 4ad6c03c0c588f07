// Copyright (C) 2026 the depthwarp authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <functional>

namespace dw {

/// Thread count resolution: explicit value > 0 wins, otherwise the DW_THREADS
/// environment variable, otherwise hardware concurrency.
int resolve_threads(int requested = 0);

/// Static block partition of [begin, end) across up to `threads` workers.
/// `fn(chunk_begin, chunk_end)` runs on disjoint ranges; outputs must go to
/// disjoint slots so the result is independent of the thread count.
void parallel_for(int64_t begin, int64_t end, int threads,
                  const std::function<void(int64_t, int64_t)>& fn);

}  // namespace dw

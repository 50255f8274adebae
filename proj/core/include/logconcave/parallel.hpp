// Copyright (C) 2026 The logconcave Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef LOGCONCAVE_PARALLEL_HPP_
#define LOGCONCAVE_PARALLEL_HPP_

#include <cstddef>
#include <functional>

namespace logconcave {

/// Runs fn(i) for i in [0, count) on up to `jobs` threads (0 = hardware
/// concurrency). The first exception thrown by any task is rethrown after
/// all workers have stopped.
void parallel_for(std::size_t count, unsigned jobs,
                  const std::function<void(std::size_t)>& fn);

unsigned resolve_jobs(unsigned jobs) noexcept;

}  // namespace logconcave

#endif  // LOGCONCAVE_PARALLEL_HPP_

// Copyright 2026 The qregret authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <functional>

namespace qregret {

/// Thread budget: min(hardware_concurrency, QREGRET_THREADS if set).
int default_thread_count();

/// Runs fn(i) for i in [0, n).  Tasks must be independent; callers that
/// need determinism should write results into index i's slot and reduce
/// sequentially afterwards.  The first exception thrown by any task is
/// rethrown after all workers join.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn,
                  int max_threads = 0);

}  // namespace qregret

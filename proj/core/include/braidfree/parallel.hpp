// Copyright 2026 The braidfree Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef BRAIDFREE_PARALLEL_HPP
#define BRAIDFREE_PARALLEL_HPP

#include <cstdint>
#include <functional>

namespace braidfree {

/// Environment variable holding the worker count for the harnesses.
inline constexpr const char* kWorkersEnv = "BRAIDFREE_WORKERS";

/// BRAIDFREE_WORKERS if set to a positive integer, else the hardware
/// concurrency (at least 1).
int worker_count();

/// Calls body(begin, end, worker) over disjoint chunks covering [0, count).
/// Chunks are handed out dynamically; `worker` is in [0, workers). The first
/// exception thrown by any body is rethrown after all workers stop.
void parallel_for(std::uint64_t count, std::uint64_t chunk,
                  const std::function<void(std::uint64_t, std::uint64_t, int)>& body, int workers = worker_count());

}  // namespace braidfree

#endif  // BRAIDFREE_PARALLEL_HPP

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

#include "braidfree/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace braidfree {

int worker_count() {
  if (const char* env = std::getenv(kWorkersEnv)) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<int>(std::min<long>(v, 1024));
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

void parallel_for(std::uint64_t count, std::uint64_t chunk,
                  const std::function<void(std::uint64_t, std::uint64_t, int)>& body, int workers) {
  if (count == 0) return;
  chunk = std::max<std::uint64_t>(chunk, 1);
  workers = static_cast<int>(std::clamp<std::uint64_t>(static_cast<std::uint64_t>(std::max(workers, 1)), 1,
                                                       (count + chunk - 1) / chunk));
  std::atomic<std::uint64_t> next{0};
  std::atomic<bool> stop{false};
  std::exception_ptr error;
  std::mutex error_mutex;

  auto run = [&](int worker) {
    while (!stop.load(std::memory_order_relaxed)) {
      const std::uint64_t begin = next.fetch_add(chunk);
      if (begin >= count) break;
      try {
        body(begin, std::min(count, begin + chunk), worker);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        stop = true;
      }
    }
  };

  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::jthread> threads;
    threads.reserve(workers);
    for (int w = 0; w < workers; ++w) threads.emplace_back(run, w);
  }
  if (error) std::rethrow_exception(error);
}

}  // namespace braidfree

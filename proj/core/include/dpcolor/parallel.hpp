// Copyright 2026 The dpcolor Authors
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

#ifndef DPCOLOR_PARALLEL_HPP_
#define DPCOLOR_PARALLEL_HPP_

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

namespace dpcolor {

struct ShardOptions {
  int workers = 1;
  std::uint64_t chunk = 1024;
};

// Smallest index in [0, count) at which a scan reports a failure.
//
// `make_scanner()` is called once per worker and must return a callable
// `std::optional<std::uint64_t>(std::uint64_t begin, std::uint64_t end)` that
// returns the first failing index of its range. Chunks are handed out in
// increasing order and a chunk is skipped only when it starts past the best
// failure found so far, so the answer does not depend on scheduling.
template <typename ScannerFactory>
std::optional<std::uint64_t> find_first_failure(std::uint64_t count,
                                                ScannerFactory&& make_scanner,
                                                ShardOptions options = {}) {
  constexpr std::uint64_t kNone = ~std::uint64_t{0};
  const std::uint64_t chunk = std::max<std::uint64_t>(options.chunk, 1);
  const std::uint64_t num_chunks = (count + chunk - 1) / chunk;
  const int workers = static_cast<int>(std::clamp<std::uint64_t>(
      static_cast<std::uint64_t>(std::max(options.workers, 1)), 1,
      std::max<std::uint64_t>(num_chunks, 1)));

  std::atomic<std::uint64_t> next{0};
  std::atomic<std::uint64_t> best{kNone};
  std::exception_ptr error;
  std::mutex error_mutex;

  auto work = [&] {
    try {
      auto scan = make_scanner();
      for (;;) {
        const std::uint64_t c = next.fetch_add(1);
        if (c >= num_chunks) return;
        const std::uint64_t begin = c * chunk;
        if (begin >= best.load()) return;
        const std::uint64_t end = std::min(count, begin + chunk);
        if (std::optional<std::uint64_t> hit = scan(begin, end)) {
          std::uint64_t seen = best.load();
          while (*hit < seen && !best.compare_exchange_weak(seen, *hit)) {
          }
          return;
        }
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(error_mutex);
      if (!error) error = std::current_exception();
      best.store(0);
    }
  };

  if (workers == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);
  }
  if (error) std::rethrow_exception(error);
  const std::uint64_t found = best.load();
  if (found == kNone) return std::nullopt;
  return found;
}

}  // namespace dpcolor

#endif  // DPCOLOR_PARALLEL_HPP_

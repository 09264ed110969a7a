/*
   Copyright 2026 The gtkit Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// Static round-robin work splitting. Callers write results into per-index
// slots, so the merged outcome does not depend on scheduling.

#ifndef GTKIT_PARALLEL_HPP
#define GTKIT_PARALLEL_HPP

#include <algorithm>
#include <cstddef>
#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace gtkit {

/// Runs body(worker, index) for every index < count on at most `jobs`
/// threads; worker w gets the indices congruent to w mod the worker count.
/// The first exception (by worker) is rethrown after all threads join.
inline void parallel_for(int jobs, std::size_t count, const std::function<void(int, std::size_t)>& body) {
  const int workers = static_cast<int>(std::max<std::size_t>(1, std::min<std::size_t>(jobs < 1 ? 1 : static_cast<std::size_t>(jobs), count)));
  if (workers == 1) {
    for (std::size_t i = 0; i < count; ++i) body(0, i);
    return;
  }
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(workers));
  std::vector<std::thread> threads;
  for (int w = 0; w < workers; ++w)
    threads.emplace_back([&, w] {
      try {
        for (std::size_t i = static_cast<std::size_t>(w); i < count; i += static_cast<std::size_t>(workers)) body(w, i);
      } catch (...) {
        errors[static_cast<std::size_t>(w)] = std::current_exception();
      }
    });
  for (auto& t : threads) t.join();
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace gtkit

#endif  // GTKIT_PARALLEL_HPP

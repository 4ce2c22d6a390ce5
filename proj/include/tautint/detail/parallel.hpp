#pragma once

#include <cstddef>
#include <thread>
#include <utility>
#include <vector>

namespace tautint::detail {

// Splits [0, count) into at most `jobs` contiguous chunks and runs
// worker(begin, end) per chunk, each on its own thread. Partials come back
// in chunk order; with exact arithmetic any fold of them is identical, so
// results never depend on the partitioning.
template <typename Partial, typename Worker>
std::vector<Partial> run_chunked(std::size_t count, int jobs, Worker&& worker) {
  if (jobs < 1) jobs = 1;
  const std::size_t chunks =
      std::min<std::size_t>(static_cast<std::size_t>(jobs),
                            count == 0 ? 1 : count);
  std::vector<Partial> partials(chunks);
  if (chunks == 1) {
    partials[0] = worker(std::size_t{0}, count);
    return partials;
  }
  std::vector<std::thread> threads;
  threads.reserve(chunks - 1);
  const std::size_t base = count / chunks;
  const std::size_t extra = count % chunks;
  std::size_t begin = 0;
  for (std::size_t c = 0; c < chunks; ++c) {
    const std::size_t end = begin + base + (c < extra ? 1 : 0);
    if (c + 1 == chunks) {
      partials[c] = worker(begin, end);
    } else {
      threads.emplace_back([&partials, &worker, c, begin, end] {
        partials[c] = worker(begin, end);
      });
    }
    begin = end;
  }
  for (auto& t : threads) t.join();
  return partials;
}

}  // namespace tautint::detail

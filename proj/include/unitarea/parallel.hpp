#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace unitarea {

// Splits [0, count) into contiguous blocks, runs block(begin, end) on up to
// `threads` workers and adds the partial results in block order. Integer sums
// are associative, so the result does not depend on scheduling.
template <class Block>
std::uint64_t parallel_sum(std::size_t count, unsigned threads, Block&& block) {
  const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(threads, count));
  if (workers == 1) return count == 0 ? 0 : block(std::size_t{0}, count);
  std::vector<std::uint64_t> partial(workers, 0);
  std::vector<std::exception_ptr> failure(workers);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  const std::size_t chunk = (count + workers - 1) / workers;
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t begin = std::min(count, w * chunk);
    const std::size_t end = std::min(count, begin + chunk);
    pool.emplace_back([&, w, begin, end] {
      try {
        partial[w] = begin < end ? block(begin, end) : 0;
      } catch (...) {
        failure[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& f : failure) {
    if (f) std::rethrow_exception(f);
  }
  std::uint64_t total = 0;
  for (auto v : partial) total += v;
  return total;
}

}  // namespace unitarea

#pragma once

#include <cstdint>
#include <vector>

#ifdef TRANSIT_HAVE_OPENMP
#include <omp.h>
#endif

namespace transit {

/// How a sweep is executed. `workers == 0` means the default worker count
/// (TRANSIT_WORKERS from the environment, else available parallelism).
struct ExecutionPolicy {
  bool parallel = true;
  int workers = 0;

  static ExecutionPolicy serial() { return {false, 1}; }
  static ExecutionPolicy with_workers(int n) { return {true, n}; }
};

/// Worker count from TRANSIT_WORKERS, else hardware parallelism (at least 1).
int default_worker_count();

int resolve_workers(const ExecutionPolicy& policy);

/// Splits [0, total) into contiguous chunks, runs `body(lo, hi)` on each chunk
/// and folds the per-chunk results left to right in chunk order with
/// `merge(acc, part)`. Chunk boundaries depend only on `total` and
/// `chunk_size`, so the result is identical for every worker count as long as
/// `merge` is associative.
template <class Acc, class Body, class Merge>
Acc reduce_chunks(std::uint64_t total, std::uint64_t chunk_size, const ExecutionPolicy& policy, Acc init, Body body,
                  Merge merge) {
  if (chunk_size == 0) chunk_size = 1;
  const std::uint64_t chunks = (total + chunk_size - 1) / chunk_size;
  std::vector<Acc> parts(static_cast<std::size_t>(chunks), init);
  const auto run_chunk = [&](std::int64_t c) {
    const std::uint64_t lo = static_cast<std::uint64_t>(c) * chunk_size;
    const std::uint64_t hi = lo + chunk_size < total ? lo + chunk_size : total;
    parts[static_cast<std::size_t>(c)] = body(lo, hi);
  };
#ifdef TRANSIT_HAVE_OPENMP
  if (policy.parallel && chunks > 1) {
    const int workers = resolve_workers(policy);
#pragma omp parallel for schedule(dynamic, 1) num_threads(workers)
    for (std::int64_t c = 0; c < static_cast<std::int64_t>(chunks); ++c) run_chunk(c);
  } else {
    for (std::int64_t c = 0; c < static_cast<std::int64_t>(chunks); ++c) run_chunk(c);
  }
#else
  (void)policy;
  for (std::int64_t c = 0; c < static_cast<std::int64_t>(chunks); ++c) run_chunk(c);
#endif
  Acc acc = std::move(init);
  for (auto& part : parts) merge(acc, std::move(part));
  return acc;
}

}  // namespace transit

#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "tensorval/mc.hpp"

namespace tensorval::detail {

/// Running mean and sum of squared deviations of a fixed-width sample vector.
struct RunningStats {
  std::int64_t count = 0;
  std::vector<double> mean;
  std::vector<double> m2;

  explicit RunningStats(int width = 0) : mean(width, 0.0), m2(width, 0.0) {}
  void add(std::span<const double> x);
  /// Pairwise combination; merging in a fixed order gives fixed results.
  void merge(const RunningStats& o);
};

/// Writes one sample (width values) into out; must be safe to call concurrently.
using SampleFn = std::function<void(Rng&, std::vector<double>&)>;

std::int64_t batch_count(const McOptions& opt);
RunningStats run_batch(const SampleFn& fn, int width, const McOptions& opt, std::int64_t batch);

/// Batches distributed over OpenMP threads, merged in batch order.
RunningStats run_batches_parallel(const SampleFn& fn, int width, const McOptions& opt);
/// Reference implementation: the same batches evaluated one after another.
RunningStats run_batches_serial(const SampleFn& fn, int width, const McOptions& opt);

}  // namespace tensorval::detail

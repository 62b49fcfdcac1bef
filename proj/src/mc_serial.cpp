#include <algorithm>
#include <stdexcept>

#include "mc_internal.hpp"

namespace tensorval::detail {

void RunningStats::add(std::span<const double> x) {
  ++count;
  const double inv = 1.0 / static_cast<double>(count);
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double delta = x[i] - mean[i];
    mean[i] += delta * inv;
    m2[i] += delta * (x[i] - mean[i]);
  }
}

void RunningStats::merge(const RunningStats& o) {
  if (o.count == 0) return;
  if (count == 0) {
    *this = o;
    return;
  }
  const double na = static_cast<double>(count), nb = static_cast<double>(o.count);
  const double n = na + nb;
  for (std::size_t i = 0; i < mean.size(); ++i) {
    const double delta = o.mean[i] - mean[i];
    mean[i] += delta * nb / n;
    m2[i] += o.m2[i] + delta * delta * na * nb / n;
  }
  count += o.count;
}

std::int64_t batch_count(const McOptions& opt) {
  if (opt.samples < 1) throw std::invalid_argument("Monte Carlo: sample count must be positive");
  if (opt.batch_size < 1) throw std::invalid_argument("Monte Carlo: batch size must be positive");
  return (opt.samples + opt.batch_size - 1) / opt.batch_size;
}

RunningStats run_batch(const SampleFn& fn, int width, const McOptions& opt, std::int64_t batch) {
  const std::int64_t begin = batch * opt.batch_size;
  const std::int64_t end = std::min<std::int64_t>(begin + opt.batch_size, opt.samples);
  Rng rng(opt.seed, static_cast<std::uint64_t>(batch));
  RunningStats stats(width);
  std::vector<double> x(width);
  for (std::int64_t i = begin; i < end; ++i) {
    std::fill(x.begin(), x.end(), 0.0);
    fn(rng, x);
    stats.add(x);
  }
  return stats;
}

RunningStats run_batches_serial(const SampleFn& fn, int width, const McOptions& opt) {
  const std::int64_t nb = batch_count(opt);
  RunningStats total(width);
  for (std::int64_t b = 0; b < nb; ++b) total.merge(run_batch(fn, width, opt, b));
  return total;
}

}  // namespace tensorval::detail

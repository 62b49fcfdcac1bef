#include <omp.h>

#include <cstdlib>
#include <exception>
#include <string>

#include "mc_internal.hpp"

namespace tensorval {

int default_workers() {
  if (const char* env = std::getenv("TENSORVAL_WORKERS")) {
    try {
      const int w = std::stoi(env);
      if (w > 0) return w;
    } catch (const std::exception&) {
    }
  }
  return omp_get_max_threads();
}

namespace detail {

RunningStats run_batches_parallel(const SampleFn& fn, int width, const McOptions& opt) {
  const std::int64_t nb = batch_count(opt);
  const int workers = opt.workers > 0 ? opt.workers : default_workers();
  std::vector<RunningStats> parts(nb);
  std::exception_ptr failure;

#pragma omp parallel for schedule(dynamic, 1) num_threads(workers)
  for (std::int64_t b = 0; b < nb; ++b) {
    try {
      parts[b] = run_batch(fn, width, opt, b);
    } catch (...) {
#pragma omp critical(tensorval_mc_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);

  RunningStats total(width);
  for (const auto& p : parts) total.merge(p);
  return total;
}

}  // namespace detail
}  // namespace tensorval

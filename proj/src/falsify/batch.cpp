#include "rsstl/falsify/batch.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace rsstl::falsify {

sim::ScenarioParams batch_scenario(std::uint64_t seed, std::size_t index, const sim::ScenarioBox& box) {
  sim::SplitMix64 rng(sim::SplitMix64::derive(seed, index));
  return sim::sample_scenario(rng, box);
}

void parallel_for(std::size_t n, unsigned jobs, const std::function<void(std::size_t)>& body) {
  const auto workers = static_cast<std::size_t>(std::max(1u, jobs));
  if (workers == 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto work = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= n || failed.load()) return;
      try {
        body(i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        failed = true;
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < std::min(workers, n); ++w) pool.emplace_back(work);
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

std::vector<SearchRecord> uniform_batch(std::size_t n, std::uint64_t seed, const ObjectiveSpec& obj, unsigned jobs) {
  if (n == 0) throw std::invalid_argument("uniform_batch: n must be at least 1");
  const ScenarioEvaluator eval(obj);
  std::vector<SearchRecord> out(n);
  parallel_for(n, jobs, [&](std::size_t i) {
    out[i] = eval.evaluate(batch_scenario(seed, i, obj.box), i);
    out[i].accepted = true;
  });
  return out;
}

} // namespace rsstl::falsify

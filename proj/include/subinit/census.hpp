#pragma once

// Sampling census of the secondary fan of A(I): random integer weights are
// grouped by the maximal cells of subd_w A(I), and each class is tested for
// exactness of both bounds at its first sample.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <exception>
#include <map>
#include <mutex>
#include <random>
#include <thread>
#include <vector>

#include "subinit/bounds.hpp"
#include "subinit/fixtures.hpp"

namespace subinit {

/// Worker count: SUBINIT_THREADS if set to a positive integer, otherwise the
/// hardware concurrency.
inline std::size_t worker_count() {
  if (const char* env = std::getenv("SUBINIT_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

/// Runs fn(i) for i in [0, count) on up to `threads` workers. The first
/// exception thrown by any call is rethrown.
template <class Fn>
void parallel_for(std::size_t count, std::size_t threads, Fn&& fn) {
  threads = std::max<std::size_t>(1, std::min(threads, count));
  if (threads == 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < threads; ++t)
    pool.emplace_back([&] {
      for (std::size_t i; (i = next.fetch_add(1)) < count;) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!error) error = std::current_exception();
          next = count;
        }
      }
    });
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

struct CensusOptions {
  std::size_t samples = 1000;
  long range = 1000;
  std::uint64_t seed = 1;
  bool include_nongeneric = false;
  std::size_t threads = 0;  // 0: worker_count()
};

struct CensusClass {
  Signature signature;
  WeightVector representative;  // the first sample with this signature
  std::size_t first_sample = 0;
  std::size_t count = 0;
  bool omega = false;
  bool omega_star = false;
  bool is_triangulation = false;
};

struct CensusResult {
  std::vector<CensusClass> classes;  // sorted by signature
  std::size_t samples_drawn = 0;
  std::uint64_t seed = 0;

  std::size_t triangulations() const {
    return static_cast<std::size_t>(std::count_if(classes.begin(), classes.end(),
                                                  [](const CensusClass& c) { return c.is_triangulation; }));
  }
  std::size_t omega_triangulations() const {
    return static_cast<std::size_t>(std::count_if(
        classes.begin(), classes.end(), [](const CensusClass& c) { return c.is_triangulation && c.omega; }));
  }
  const CensusClass* find(const Signature& s) const {
    auto it = std::lower_bound(classes.begin(), classes.end(), s,
                               [](const CensusClass& c, const Signature& k) { return c.signature < k; });
    return it != classes.end() && it->signature == s ? &*it : nullptr;
  }
};

/// The weights a census draws, in sample order: `samples` vectors uniform
/// in [0, range]^E, then (for the non-generic pass) samples/10 vectors
/// uniform in [0, 2]^E.
inline std::vector<WeightVector> census_weights(std::size_t n, const CensusOptions& opt) {
  std::mt19937_64 rng(opt.seed);
  std::vector<WeightVector> ws;
  for (std::size_t i = 0; i < opt.samples; ++i) ws.push_back(random_weight(n, 0, opt.range, rng));
  if (opt.include_nongeneric)
    for (std::size_t i = 0; i < opt.samples / 10; ++i) ws.push_back(random_weight(n, 0, 2, rng));
  return ws;
}

inline CensusResult census(const BoundsContext& ctx, const CensusOptions& opt) {
  if (!ctx.ideal().is_standard_homogeneous()) throw PreconditionError("census requires a homogeneous ideal");
  std::size_t threads = opt.threads ? opt.threads : worker_count();
  auto weights = census_weights(ctx.nvars(), opt);
  std::vector<Signature> sigs(weights.size());
  parallel_for(weights.size(), threads, [&](std::size_t i) { sigs[i] = ctx.engine().maximal_cells(weights[i]); });

  std::map<Signature, CensusClass> by_sig;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    auto [it, fresh] = by_sig.try_emplace(sigs[i]);
    if (fresh) {
      it->second.signature = sigs[i];
      it->second.representative = weights[i];
      it->second.first_sample = i;
    }
    ++it->second.count;
  }
  CensusResult res;
  res.samples_drawn = weights.size();
  res.seed = opt.seed;
  for (auto& [s, c] : by_sig) res.classes.push_back(std::move(c));

  std::size_t full_rank = static_cast<std::size_t>(ctx.engine().affine_dimension()) + 1;
  parallel_for(res.classes.size(), threads, [&](std::size_t k) {
    auto& c = res.classes[k];
    auto rep = sandwich(ctx, c.representative);
    c.omega = rep.lower_exact;
    c.omega_star = rep.upper_exact;
    c.is_triangulation = std::all_of(c.signature.begin(), c.signature.end(),
                                     [&](Cell m) { return m.size() == full_rank; });
  });
  return res;
}

inline CensusResult census(const Ideal& ideal, const CensusOptions& opt) { return census(BoundsContext(ideal), opt); }

}  // namespace subinit

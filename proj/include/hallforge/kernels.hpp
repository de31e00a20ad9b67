#pragma once

#include <cmath>
#include <cstdint>
#include <exception>
#include <functional>
#include <map>
#include <string>

#include "hallforge/error.hpp"
#include "hallforge/parallel.hpp"
#include "hallforge/presentation.hpp"

namespace hallforge {

// Hot loops of the Hall product computations.  Each has a serial and an
// OpenMP path; results are identical (tallies are merged, not ordered).

inline std::uint64_t checked_power(int q, int k, int max_bits, const char* what) {
  if (k * std::log2(static_cast<double>(q)) > max_bits)
    throw ResourceError(std::string(what) + ": 2^" + std::to_string(max_bits) + " enumeration bound exceeded (" +
                        std::to_string(q) + "^" + std::to_string(k) + ")");
  std::uint64_t n = 1;
  for (int i = 0; i < k; ++i) n *= static_cast<std::uint64_t>(q);
  return n;
}

/// Counts cocycles by the class of the middle term they produce.
template <class Key>
std::map<Key, std::uint64_t> tally_extensions(const ExtensionSpace& ext, const Fq& f, int max_bits, Exec exec,
                                              const std::function<Key(const Rep&)>& key_of) {
  const int k = ext.cocycle_dim();
  const std::uint64_t total = checked_power(f.q(), k, max_bits, "cocycle enumeration");
  auto digits = [&](std::uint64_t idx, std::vector<std::uint8_t>& c) {
    for (int i = 0; i < k; ++i) {
      c[i] = static_cast<std::uint8_t>(idx % f.q());
      idx /= f.q();
    }
  };
  std::map<Key, std::uint64_t> out;
  if (!run_parallel(exec)) {
    std::vector<std::uint8_t> c(k);
    for (std::uint64_t i = 0; i < total; ++i) {
      digits(i, c);
      ++out[key_of(ext.middle(f, c))];
    }
    return out;
  }
  const auto n = static_cast<long long>(total);
  std::exception_ptr error;
#pragma omp parallel
  {
    std::map<Key, std::uint64_t> local;
    std::vector<std::uint8_t> c(k);
#pragma omp for schedule(dynamic, 16)
    for (long long i = 0; i < n; ++i) {
      try {
        digits(static_cast<std::uint64_t>(i), c);
        ++local[key_of(ext.middle(f, c))];
      } catch (...) {
#pragma omp critical(hallforge_kernel_error)
        if (!error) error = std::current_exception();
      }
    }
#pragma omp critical(hallforge_kernel_merge)
    for (const auto& [key, cnt] : local) out[key] += cnt;
  }
  if (error) std::rethrow_exception(error);
  return out;
}

/// Number of subrepresentations (sub, quotient) accepted by pred.
inline std::uint64_t count_subobjects(const SubobjectEnumerator& en, Exec exec,
                                      const std::function<bool(const Rep&, const Rep&)>& pred) {
  std::uint64_t count = 0;
  if (!run_parallel(exec)) {
    Rep sub, quot;
    for (std::uint64_t i = 0; i < en.size(); ++i)
      if (en.get(i, sub, quot) && pred(sub, quot)) ++count;
    return count;
  }
  const auto n = static_cast<long long>(en.size());
  std::exception_ptr error;
#pragma omp parallel reduction(+ : count)
  {
    Rep sub, quot;
#pragma omp for schedule(dynamic, 16)
    for (long long i = 0; i < n; ++i) {
      try {
        if (en.get(static_cast<std::uint64_t>(i), sub, quot) && pred(sub, quot)) ++count;
      } catch (...) {
#pragma omp critical(hallforge_kernel_error)
        if (!error) error = std::current_exception();
      }
    }
  }
  if (error) std::rethrow_exception(error);
  return count;
}

}  // namespace hallforge

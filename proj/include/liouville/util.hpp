#pragma once

#include <atomic>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <exception>
#include <functional>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace liouville {

using u8 = std::uint8_t;
using i8 = std::int8_t;
using u32 = std::uint32_t;
using i64 = std::int64_t;
using u64 = std::uint64_t;

/// Thrown when an allocation or other resource request cannot be satisfied.
class resource_error : public std::runtime_error {
 public:
  explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

/// Floor of sqrt(n), exact for the full 64-bit range.
inline u64 isqrt(u64 n) {
  if (n == 0) return 0;
  u64 r = static_cast<u64>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && r > n / r) --r;
  while (r + 1 <= n / (r + 1)) ++r;
  return r;
}

inline std::optional<u64> checked_mul(u64 a, u64 b) {
  u64 out = 0;
  if (__builtin_mul_overflow(a, b, &out)) return std::nullopt;
  return out;
}

/// a * b^e, or nullopt on 64-bit overflow.
inline std::optional<u64> checked_mul_pow(u64 a, u64 b, u32 e) {
  u64 acc = a;
  for (u32 i = 0; i < e; ++i) {
    auto m = checked_mul(acc, b);
    if (!m) return std::nullopt;
    acc = *m;
  }
  return acc;
}

/// Worker count used when an operation is called with threads == 0:
/// LIOUVILLE_THREADS if set to a positive integer, else the hardware count.
inline unsigned default_thread_count() {
  if (const char* env = std::getenv("LIOUVILLE_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && v >= 1 && v <= 4096) return static_cast<unsigned>(v);
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? hw : 1;
}

/// Runs fn(block_index, lo, hi) over consecutive fixed-size blocks of
/// [begin, end). Block boundaries depend only on block_size, never on the
/// worker count, so per-block results collected by the caller are
/// schedule-independent. Rethrows the first worker exception.
inline void for_each_block(u64 begin, u64 end, u64 block_size, unsigned threads,
                           const std::function<void(std::size_t, u64, u64)>& fn) {
  if (begin >= end) return;
  if (block_size == 0) throw std::invalid_argument("for_each_block: block_size must be positive");
  const u64 span = end - begin;
  const std::size_t nblocks = static_cast<std::size_t>((span + block_size - 1) / block_size);
  if (threads == 0) threads = default_thread_count();
  if (threads <= 1 || nblocks == 1) {
    for (std::size_t b = 0; b < nblocks; ++b) {
      const u64 lo = begin + static_cast<u64>(b) * block_size;
      const u64 hi = std::min(end, lo + block_size);
      fn(b, lo, hi);
    }
    return;
  }
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr first_error;
  std::atomic_flag error_claim = ATOMIC_FLAG_INIT;
  auto worker = [&] {
    for (;;) {
      const std::size_t b = next.fetch_add(1, std::memory_order_relaxed);
      if (b >= nblocks || failed.load(std::memory_order_relaxed)) return;
      const u64 lo = begin + static_cast<u64>(b) * block_size;
      const u64 hi = std::min(end, lo + block_size);
      try {
        fn(b, lo, hi);
      } catch (...) {
        if (!error_claim.test_and_set()) first_error = std::current_exception();
        failed.store(true, std::memory_order_relaxed);
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  const unsigned n = static_cast<unsigned>(std::min<std::size_t>(threads, nblocks));
  pool.reserve(n);
  for (unsigned t = 0; t < n; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace liouville

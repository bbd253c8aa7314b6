#pragma once

#include <algorithm>
#include <numeric>
#include <utility>
#include <vector>

#include "liouville/util.hpp"

namespace liouville {

/// Prime factorization of n: (prime, exponent) pairs with strictly ascending
/// primes and every exponent >= 1. n == 1 has an empty factor list.
struct Factorization {
  u64 n = 1;
  std::vector<std::pair<u64, u32>> factors;

  /// Number of prime factors counted with multiplicity.
  u64 omega() const {
    u64 t = 0;
    for (const auto& [p, e] : factors) t += e;
    return t;
  }

  bool squarefree() const {
    for (const auto& [p, e] : factors)
      if (e > 1) return false;
    return true;
  }
};

/// Smallest-prime-factor table covering 2 <= n <= limit. Entries are stored
/// as 32-bit values (4 bytes per integer), which bounds limit at 2^32 - 1;
/// a table to 10^8 needs ~400 MB. Immutable after construction.
class SpfTable {
 public:
  static constexpr u64 kMaxLimit = (u64(1) << 32) - 1;

  explicit SpfTable(u64 limit) : limit_(limit) {
    if (limit < 2) throw std::invalid_argument("SpfTable: limit must be >= 2");
    if (limit > kMaxLimit) throw std::invalid_argument("SpfTable: limit exceeds 2^32 - 1");
    try {
      spf_.assign(static_cast<std::size_t>(limit) + 1, 0);
    } catch (const std::bad_alloc&) {
      throw resource_error("SpfTable: failed to allocate " +
                           std::to_string((limit + 1) * sizeof(u32)) + " bytes");
    }
    for (u64 i = 2; i <= limit; ++i) {
      if (spf_[static_cast<std::size_t>(i)] != 0) continue;
      for (u64 j = i; j <= limit; j += i) {
        u32& slot = spf_[static_cast<std::size_t>(j)];
        if (slot == 0) slot = static_cast<u32>(i);
      }
    }
  }

  u64 limit() const { return limit_; }

  u64 spf(u64 n) const {
    if (n < 2 || n > limit_) throw std::invalid_argument("SpfTable::spf: n out of range");
    return spf_[static_cast<std::size_t>(n)];
  }

  bool is_prime(u64 n) const { return n >= 2 && spf(n) == n; }

 private:
  u64 limit_;
  std::vector<u32> spf_;
};

inline SpfTable build_spf_table(u64 limit) { return SpfTable(limit); }

/// Factorizes n. Uses the table when it covers n, otherwise falls back to
/// trial division by 2, 3 and the 6k+-1 wheel, so single large values (up to
/// ~10^15 comfortably) never require a sieve.
inline Factorization factorize(u64 n, const SpfTable* table = nullptr) {
  if (n == 0) throw std::invalid_argument("factorize: n must be positive");
  Factorization f;
  f.n = n;
  if (n == 1) return f;
  if (table != nullptr && n <= table->limit()) {
    u64 m = n;
    while (m > 1) {
      const u64 p = table->spf(m);
      u32 e = 0;
      while (m % p == 0) {
        m /= p;
        ++e;
      }
      f.factors.emplace_back(p, e);
    }
    return f;
  }
  u64 m = n;
  auto strip = [&](u64 p) {
    u32 e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    if (e > 0) f.factors.emplace_back(p, e);
  };
  strip(2);
  strip(3);
  for (u64 d = 5; d <= m / d; d += 6) {
    strip(d);
    if (d + 2 <= m / (d + 2)) strip(d + 2);
  }
  if (m > 1) f.factors.emplace_back(m, 1);
  return f;
}

/// Liouville lambda(n) = (-1)^Omega(n); lambda(1) = +1.
inline int lambda(u64 n, const SpfTable* table = nullptr) {
  return factorize(n, table).omega() % 2 == 0 ? +1 : -1;
}

/// Dense table of lambda values over [start, start + size - 1].
struct LambdaTable {
  u64 start = 1;
  std::vector<i8> values;

  u64 size() const { return values.size(); }
  u64 last() const { return start + values.size() - 1; }
  bool contains(u64 n) const { return n >= start && n - start < values.size(); }

  int at(u64 n) const {
    if (!contains(n)) throw std::invalid_argument("LambdaTable::at: n outside table");
    return values[static_cast<std::size_t>(n - start)];
  }

  i64 sum() const {
    i64 s = 0;
    for (i8 v : values) s += v;
    return s;
  }
};

/// Primes <= n in ascending order.
inline std::vector<u64> primes_up_to(u64 n) {
  std::vector<u64> primes;
  if (n < 2) return primes;
  std::vector<u8> composite(static_cast<std::size_t>(n) + 1, 0);
  for (u64 i = 2; i <= n; ++i) {
    if (composite[static_cast<std::size_t>(i)]) continue;
    primes.push_back(i);
    if (i <= n / i)
      for (u64 j = i * i; j <= n; j += i) composite[static_cast<std::size_t>(j)] = 1;
  }
  return primes;
}

struct SegmentOptions {
  u64 cap = u64(1) << 24;    // max entries per call; larger ranges must be chunked by the caller
  u64 block = u64(1) << 20;  // internal sieve block, also the unit of parallel work
  unsigned threads = 0;      // 0 = default_thread_count()
};

namespace detail {

/// Sieves lambda over [lo, hi); `primes` must contain every prime <= sqrt(hi-1).
/// Copies the residuals, divides out each prime with multiplicity counting and
/// classifies a leftover residual > 1 as one extra prime factor.
inline void lambda_block(u64 lo, u64 hi, const std::vector<u64>& primes, i8* out) {
  const std::size_t len = static_cast<std::size_t>(hi - lo);
  std::vector<u64> residual(len);
  std::iota(residual.begin(), residual.end(), lo);
  std::vector<u8> parity(len, 0);
  for (u64 p : primes) {
    const u64 first = ((lo + p - 1) / p) * p;
    for (u64 m = first; m < hi; m += p) {
      const std::size_t i = static_cast<std::size_t>(m - lo);
      u64 r = residual[i];
      u8 flips = 0;
      do {
        r /= p;
        flips ^= 1;
      } while (r % p == 0);
      residual[i] = r;
      parity[i] ^= flips;
    }
  }
  for (std::size_t i = 0; i < len; ++i) {
    const u8 par = parity[i] ^ (residual[i] > 1 ? 1 : 0);
    out[i] = par ? i8(-1) : i8(+1);
  }
}

}  // namespace detail

/// Lambda values for the inclusive window [a, b], computed at sieve speed.
/// The window length must not exceed opt.cap; internally the work is split
/// into fixed blocks that may run on several threads, and the merged result
/// is independent of scheduling.
inline LambdaTable lambda_segment(u64 a, u64 b, const SegmentOptions& opt = {}) {
  if (a == 0 || a > b) throw std::invalid_argument("lambda_segment: need 1 <= a <= b");
  const u64 len = b - a + 1;
  if (len > opt.cap)
    throw std::invalid_argument("lambda_segment: window of " + std::to_string(len) +
                                " entries exceeds the segment cap of " + std::to_string(opt.cap));
  LambdaTable table;
  table.start = a;
  try {
    table.values.resize(static_cast<std::size_t>(len));
  } catch (const std::bad_alloc&) {
    throw resource_error("lambda_segment: failed to allocate " + std::to_string(len) + " bytes");
  }
  const std::vector<u64> primes = primes_up_to(isqrt(b));
  i8* out = table.values.data();
  for_each_block(a, b + 1, opt.block, opt.threads, [&](std::size_t, u64 lo, u64 hi) {
    detail::lambda_block(lo, hi, primes, out + (lo - a));
  });
  return table;
}

}  // namespace liouville

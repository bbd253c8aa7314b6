#pragma once

#include <vector>

#include "liouville/factor.hpp"

namespace liouville {

struct DoublingResult {
  LambdaTable table;            // extended table over [1, target]
  std::vector<u64> new_primes;  // gap-detected primes in (N, target]
};

/// Extends a correct lambda table over [1, N] to [1, target] (N < target <=
/// 2N, default 2N) using only multiplicativity and gap detection, with no
/// factorization: every m in (N, target] that can be written m = n*q with
/// 1 < n, q <= N gets lambda(n)*lambda(q) -- any witness gives the same value
/// -- and every m left uncovered has no divisor pair inside [2, N], which for
/// m <= 2N forces m prime (its smallest prime factor would be <= sqrt(m) <= N
/// and the cofactor <= m/2 <= N), so lambda(m) = -1.
inline DoublingResult double_lambda(const LambdaTable& input, u64 target = 0) {
  if (input.start != 1) throw std::invalid_argument("double_lambda: table must start at 1");
  const u64 n_known = input.size();
  if (n_known < 2) throw std::invalid_argument("double_lambda: table must cover at least [1, 2]");
  if (target == 0) target = 2 * n_known;
  if (target <= n_known || target > 2 * n_known)
    throw std::invalid_argument("double_lambda: target must lie in (N, 2N]");

  DoublingResult result;
  result.table.start = 1;
  result.table.values = input.values;
  result.table.values.resize(static_cast<std::size_t>(target), 0);
  std::vector<i8>& lam = result.table.values;
  std::vector<u8> covered(static_cast<std::size_t>(target - n_known), 0);

  const u64 root = isqrt(target);
  for (u64 n = 2; n <= root && n <= n_known; ++n) {
    const u64 q_lo = std::max(n, n_known / n + 1);
    const u64 q_hi = std::min(n_known, target / n);
    for (u64 q = q_lo; q <= q_hi; ++q) {
      const u64 m = n * q;  // n_known < m <= target by the q bounds
      lam[static_cast<std::size_t>(m - 1)] =
          static_cast<i8>(lam[static_cast<std::size_t>(n - 1)] * lam[static_cast<std::size_t>(q - 1)]);
      covered[static_cast<std::size_t>(m - n_known - 1)] = 1;
    }
  }
  for (u64 m = n_known + 1; m <= target; ++m) {
    if (!covered[static_cast<std::size_t>(m - n_known - 1)]) {
      lam[static_cast<std::size_t>(m - 1)] = -1;
      result.new_primes.push_back(m);
    }
  }
  return result;
}

struct GeneratedTable {
  LambdaTable table;        // lambda over [1, N]
  std::vector<u64> primes;  // every prime <= N, discovered en route (seeded with 2)
};

/// Grows lambda from the seed [lambda(1) = +1, lambda(2) = -1] by repeated
/// doubling until N is reached; the last step shrinks to min(2N', N). The
/// result matches a sieve entrywise and the discovered primes are exactly the
/// primes <= N.
inline GeneratedTable generate_to(u64 N) {
  if (N < 2) throw std::invalid_argument("generate_to: N must be >= 2");
  GeneratedTable out;
  out.table.start = 1;
  out.table.values = {+1, -1};
  out.primes = {2};
  while (out.table.size() < N) {
    const u64 target = std::min(2 * out.table.size(), N);
    DoublingResult step = double_lambda(out.table, target);
    out.table = std::move(step.table);
    out.primes.insert(out.primes.end(), step.new_primes.begin(), step.new_primes.end());
  }
  return out;
}

}  // namespace liouville

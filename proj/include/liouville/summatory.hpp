#pragma once

#include <cstdio>
#include <fstream>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "liouville/towers.hpp"

namespace liouville {

/// Peak bookkeeping for the tower computation of L(N): every integer 1..N is
/// exactly one peak of one tower wave, so positive + negative = N and
/// positive - negative = L(N).
struct PeakCount {
  u64 n = 0;
  u64 positive = 0;
  u64 negative = 0;
};

struct SummatoryOptions {
  unsigned threads = 0;
  u64 chunk = u64(1) << 24;           // entries per sieve call
  std::string checkpoint_path;        // empty = no checkpointing
  u64 checkpoint_stride = 10'000'000; // "N,L" line written whenever N crosses a stride
  std::function<void(u64, i64)> progress;  // invoked after each completed chunk
};

namespace detail {

/// Last usable "N,L" checkpoint line with N <= target, if any. Malformed
/// lines (e.g. a torn final write) are skipped.
inline std::optional<std::pair<u64, i64>> read_checkpoint(const std::string& path, u64 target) {
  std::ifstream in(path);
  if (!in) return std::nullopt;
  std::optional<std::pair<u64, i64>> best;
  std::string line;
  while (std::getline(in, line)) {
    unsigned long long n = 0;
    long long l = 0;
    if (std::sscanf(line.c_str(), "%llu,%lld", &n, &l) != 2) continue;
    if (n >= 1 && n <= target) best = {static_cast<u64>(n), static_cast<i64>(l)};
  }
  return best;
}

inline void append_checkpoint(const std::string& path, u64 n, i64 l) {
  std::ofstream out(path, std::ios::app);
  if (!out) throw resource_error("summatory_L: cannot open checkpoint file " + path);
  out << n << "," << l << "\n";
}

}  // namespace detail

/// Exact L(N) = sum of lambda(n) for n <= N, computed over chunked sieve
/// segments. With a checkpoint path the partial sums are appended as plain
/// "N,L" lines at every stride boundary (and at completion), and a later call
/// resumes from the last usable line; the result is identical either way.
inline i64 summatory_L(u64 N, const SummatoryOptions& opt = {}) {
  if (N == 0) throw std::invalid_argument("summatory_L: N must be positive");
  u64 done = 0;
  i64 total = 0;
  const bool checkpointing = !opt.checkpoint_path.empty();
  if (checkpointing) {
    if (opt.checkpoint_stride == 0)
      throw std::invalid_argument("summatory_L: checkpoint stride must be positive");
    if (auto resume = detail::read_checkpoint(opt.checkpoint_path, N)) {
      done = resume->first;
      total = resume->second;
    }
  }
  SegmentOptions seg;
  seg.cap = opt.chunk;
  seg.threads = opt.threads;
  while (done < N) {
    u64 next = std::min(N, done + opt.chunk);
    if (checkpointing) {
      const u64 boundary = (done / opt.checkpoint_stride + 1) * opt.checkpoint_stride;
      next = std::min(next, boundary);
    }
    total += lambda_segment(done + 1, next, seg).sum();
    done = next;
    if (checkpointing && (done % opt.checkpoint_stride == 0 || done == N))
      detail::append_checkpoint(opt.checkpoint_path, done, total);
    if (opt.progress) opt.progress(done, total);
  }
  return total;
}

/// Sum of lambda over the window [n0, n0 + len - 1].
inline i64 summatory_range(u64 n0, u64 len, unsigned threads = 0) {
  if (n0 == 0 || len == 0) throw std::invalid_argument("summatory_range: need n0 >= 1, len >= 1");
  SegmentOptions seg;
  seg.threads = threads;
  i64 total = 0;
  u64 done = 0;
  while (done < len) {
    const u64 step = std::min(seg.cap, len - done);
    total += lambda_segment(n0 + done, n0 + done + step - 1, seg).sum();
    done += step;
  }
  return total;
}

/// L(N) computed the tower way: every tower with base <= N contributes
/// lambda(base) when its member count below N is odd and 0 when even (the
/// member lambdas alternate), plus the constant +1 of the trivial tower at
/// n = 1. Returns the identical L(N) together with the peak counts.
inline std::pair<i64, PeakCount> summatory_by_towers(u64 N, const SpfTable* table = nullptr) {
  if (N == 0) throw std::invalid_argument("summatory_by_towers: N must be positive");
  PeakCount peaks;
  peaks.n = N;
  peaks.positive = 1;  // the trivial tower's single peak at n = 1
  i64 total = 1;
  if (N == 1) return {total, peaks};
  std::optional<SpfTable> local;
  if (table == nullptr || table->limit() < N) {
    local.emplace(N);
    table = &*local;
  }
  for (const auto& [label, count] : towers_up_to(N, table)) {
    const int base_lambda = lambda(base_of(label, table).first, table);
    const u64 positives = base_lambda > 0 ? (count + 1) / 2 : count / 2;
    peaks.positive += positives;
    peaks.negative += count - positives;
    if (count % 2 == 1) total += base_lambda;
  }
  return {total, peaks};
}

/// One tower's rectangular wave clipped to n <= N: the cumulative
/// contribution after each member, alternating between lambda(base) and 0.
struct WaveTrace {
  TowerLabel label;
  std::vector<std::pair<u64, int>> steps;  // (member n, cumulative after it)
};

inline WaveTrace wave_trace(const TowerLabel& label, u64 N, const SpfTable* table = nullptr) {
  WaveTrace trace;
  trace.label = label;
  const std::vector<u64> members = members_up_to(label, N, table);
  if (members.empty()) return trace;
  const int base_lambda = lambda(members.front(), table);
  trace.steps.reserve(members.size());
  for (std::size_t i = 0; i < members.size(); ++i)
    trace.steps.emplace_back(members[i], i % 2 == 0 ? base_lambda : 0);
  return trace;
}

}  // namespace liouville

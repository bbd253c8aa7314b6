#pragma once

#include <cmath>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "liouville/reference_tables.hpp"
#include "liouville/summatory.hpp"

namespace liouville {

/// An integer window [start, start + length - 1] tagged with how it was
/// constructed. For a perfect square N = k^2 the canonical test windows are
/// S-(N) = [N - k + 1, N] and S+(N) = [N + 1, N + k], both of length k.
struct SegmentSpec {
  u64 start = 1;
  u64 length = 1;
  SegmentKind kind = SegmentKind::arbitrary;

  u64 last() const { return start + length - 1; }
};

/// S-(k^2): the k integers ending at k^2.
inline SegmentSpec s_minus_segment(u64 k) {
  if (k < 1) throw std::invalid_argument("s_minus_segment: k must be >= 1");
  return SegmentSpec{k * k - k + 1, k, SegmentKind::s_minus};
}

/// S+(k^2): the k integers after k^2.
inline SegmentSpec s_plus_segment(u64 k) {
  if (k < 1) throw std::invalid_argument("s_plus_segment: k must be >= 1");
  return SegmentSpec{k * k + 1, k, SegmentKind::s_plus};
}

/// One scored window: its lambda partial sum and the one-degree-of-freedom
/// goodness-of-fit value chi2 = L^2 / length against the fair-coin
/// expectation.
struct ChiSquareRow {
  SegmentSpec spec;
  i64 L = 0;
  double chi2 = 0.0;
};

inline ChiSquareRow chi_square_segment(const SegmentSpec& spec, unsigned threads = 0) {
  if (spec.start == 0 || spec.length == 0)
    throw std::invalid_argument("chi_square_segment: need start >= 1 and length >= 1");
  ChiSquareRow row;
  row.spec = spec;
  row.L = summatory_range(spec.start, spec.length, threads);
  const double l = static_cast<double>(row.L);
  row.chi2 = l * l / static_cast<double>(spec.length);
  return row;
}

/// chi2 from head/tail counts: (P-E)^2/E + (M-E)^2/E with E = (P+M)/2, which
/// algebraically equals (P-M)^2 / (P+M).
inline double chi_square_from_counts(u64 heads, u64 tails) {
  if (heads + tails == 0)
    throw std::invalid_argument("chi_square_from_counts: need at least one toss");
  const double e = static_cast<double>(heads + tails) / 2.0;
  const double dp = static_cast<double>(heads) - e;
  const double dm = static_cast<double>(tails) - e;
  return (dp * dp + dm * dm) / e;
}

/// Scans a lambda table for eventual periodicity: the smallest period sigma
/// (ties broken by the smallest offset t) such that the sequence repeats with
/// period sigma everywhere past offset t, with at least two full periods
/// inside the table. Returns (t, sigma) or nothing.
inline std::optional<std::pair<u64, u64>> cycle_scan(const LambdaTable& table, u64 max_offset,
                                                     u64 max_period) {
  if (max_period == 0) throw std::invalid_argument("cycle_scan: max_period must be >= 1");
  const u64 len = table.size();
  if (len < 2 * (max_offset + max_period))
    throw std::invalid_argument("cycle_scan: table must cover at least 2*(max_offset+max_period)");
  const i8* v = table.values.data();
  for (u64 sigma = 1; sigma <= max_period; ++sigma) {
    u64 t = 0;
    for (u64 i = len - sigma; i-- > 0;) {
      if (v[i] != v[i + sigma]) {
        t = i + 1;
        break;
      }
    }
    if (t <= max_offset && len - t >= 2 * sigma) return std::make_pair(t, sigma);
  }
  return std::nullopt;
}

/// One row of a rendered report. `computed` distinguishes rows evaluated here
/// from rows merely cited from the reference data (reported, not recomputed).
struct ReportRow {
  int no = 0;
  SegmentKind kind = SegmentKind::arbitrary;
  u64 from = 0;
  u64 to = 0;
  i64 L = 0;
  double chi2 = 0.0;
  bool computed = false;
};

/// Expected mean chi2 for a fair coin: with |L| ~ sqrt(2/pi) * sqrt(len),
/// L^2/len averages to 2/pi. Reported next to table means, never asserted.
inline constexpr double kCoinTossMeanChi2 = 0.63661977236758134;

struct TableReport {
  std::string id;
  std::string title;
  std::vector<ReportRow> rows;
  double mean_chi2 = 0.0;          // mean over the emitted rows
  double reference_mean = 0.0;     // as printed upstream (NaN if none)
  double coin_reference = kCoinTossMeanChi2;
  std::string note;
};

struct TableReportOptions {
  bool slow = false;       // compute the expensive rows too (1.4 windows, 3.1 beyond 10^8)
  u64 prefix_budget = 0;   // largest full-prefix N recomputed; 0 = 10^8, or 10^9 with slow
  unsigned threads = 0;
  std::function<void(u64, i64)> progress;  // forwarded to long L(N) runs
};

/// Reproduces one of the built-in reference tables. Window rows are
/// recomputed by sieving; full-prefix rows are recomputed when N is within
/// budget (10^8 by default, 10^9 with `slow`) and cited otherwise, flagged
/// per row via `computed`. Rows are emitted in reference order and the mean
/// is taken over the emitted chi2 values.
inline TableReport table_report(const std::string& id, const TableReportOptions& opt = {}) {
  const ReferenceTable* ref = find_reference_table(id);
  if (ref == nullptr) throw std::invalid_argument("table_report: unknown table id " + id);
  TableReport report;
  report.id = ref->id;
  report.title = ref->title;
  report.reference_mean = ref->mean_chi2;
  report.note = ref->note;

  // Budget rules: every window row is cheap except the 1.4 set, which is
  // opt-in by convention; prefix rows cost a full L(N) run.
  const u64 prefix_budget =
      opt.prefix_budget != 0 ? opt.prefix_budget : (opt.slow ? 1'000'000'000ull : 100'000'000ull);
  const bool windows_allowed = opt.slow || id != "1.4";

  // Prefix rows ascend, so one pass with running sums covers them all.
  u64 prefix_done = 0;
  i64 prefix_sum = 0;

  double chi2_sum = 0.0;
  for (const ReferenceRow& row : ref->rows) {
    ReportRow out;
    out.no = row.no;
    out.kind = row.kind;
    out.from = row.from;
    out.to = row.to;
    const u64 length = row.to - row.from + 1;
    bool compute = false;
    if (row.kind == SegmentKind::full_prefix) {
      compute = row.to <= prefix_budget;
    } else {
      compute = windows_allowed;
    }
    if (compute) {
      if (row.kind == SegmentKind::full_prefix) {
        SegmentOptions seg;
        seg.threads = opt.threads;
        while (prefix_done < row.to) {
          const u64 hi = std::min(row.to, prefix_done + seg.cap);
          prefix_sum += lambda_segment(prefix_done + 1, hi, seg).sum();
          prefix_done = hi;
          if (opt.progress) opt.progress(prefix_done, prefix_sum);
        }
        out.L = prefix_sum;
      } else {
        out.L = summatory_range(row.from, length, opt.threads);
      }
      out.computed = true;
    } else {
      out.L = row.L;
      out.computed = false;
    }
    const double l = static_cast<double>(out.L);
    out.chi2 = l * l / static_cast<double>(length);
    chi2_sum += out.chi2;
    report.rows.push_back(out);
  }
  report.mean_chi2 = chi2_sum / static_cast<double>(report.rows.size());
  return report;
}

}  // namespace liouville

#pragma once

#include <cmath>
#include <complex>

#include "liouville/summatory.hpp"

namespace liouville {

using complex_t = std::complex<double>;

namespace detail {

inline void require_finite(complex_t s, const char* who) {
  if (!std::isfinite(s.real()) || !std::isfinite(s.imag()))
    throw std::invalid_argument(std::string(who) + ": s must be finite");
}

inline bool is_real(complex_t s) { return s.imag() == 0.0; }

/// x^(-s) on the principal branch; x > 0.
inline complex_t power_neg(double x, complex_t s) {
  if (is_real(s)) return {std::pow(x, -s.real()), 0.0};
  return std::exp(-s * std::log(x));
}

}  // namespace detail

/// Riemann zeta for Re(s) > 1 by direct summation of `terms` leading terms
/// plus the Euler-Maclaurin tail
///   M^(1-s)/(s-1) - M^(-s)/2 + s*M^(-s-1)/12 - s(s+1)(s+2)*M^(-s-3)/720,
/// whose truncation error is O(|s|^5 M^(-Re(s)-5)) -- far below 1e-8 in
/// relative terms for Re(s) >= 1.5 at the default term count.
inline complex_t zeta_direct_with_tail(complex_t s, u64 terms = 0) {
  detail::require_finite(s, "zeta_direct_with_tail");
  if (s.real() <= 1.0) throw std::domain_error("zeta_direct_with_tail: requires Re(s) > 1");
  if (terms == 0) terms = 1000 + static_cast<u64>(4.0 * std::abs(s.imag()));
  const double M = static_cast<double>(terms);
  complex_t acc = 0.0;
  for (u64 n = 1; n <= terms; ++n) acc += detail::power_neg(static_cast<double>(n), s);
  const complex_t m_to_minus_s = detail::power_neg(M, s);
  acc += m_to_minus_s * M / (s - 1.0);
  acc -= m_to_minus_s / 2.0;
  acc += s * m_to_minus_s / (M * 12.0);
  acc -= s * (s + 1.0) * (s + 2.0) * m_to_minus_s / (M * M * M * 720.0);
  return acc;
}

/// Reference value F(s) = zeta(2s) / zeta(s), usable for Re(s) > 1.
inline complex_t zeta_ratio_reference(complex_t s) {
  detail::require_finite(s, "zeta_ratio_reference");
  if (s.real() <= 1.0) throw std::domain_error("zeta_ratio_reference: requires Re(s) > 1");
  return zeta_direct_with_tail(2.0 * s) / zeta_direct_with_tail(s);
}

/// Partial sum of lambda(n)/n^s for n <= N, in ascending order of n. The
/// series carries meaning for Re(s) > 1; smaller real parts are accepted
/// (the caller may warn) since partial sums are always finite. A purely real
/// s runs entirely in real arithmetic, so passing s+0i is bit-identical to
/// the real path.
inline complex_t F_direct(complex_t s, u64 N, const SegmentOptions& opt = {}) {
  detail::require_finite(s, "F_direct");
  if (N == 0) throw std::invalid_argument("F_direct: N must be positive");
  SegmentOptions seg = opt;
  const bool real_path = detail::is_real(s);
  const double sr = s.real();
  double real_acc = 0.0;
  complex_t acc = 0.0;
  u64 done = 0;
  while (done < N) {
    const u64 hi = std::min(N, done + seg.cap);
    const LambdaTable table = lambda_segment(done + 1, hi, seg);
    for (u64 n = done + 1; n <= hi; ++n) {
      const double lam = table.at(n);
      if (real_path)
        real_acc += lam * std::pow(static_cast<double>(n), -sr);
      else
        acc += lam * detail::power_neg(static_cast<double>(n), s);
    }
    done = hi;
  }
  return real_path ? complex_t{real_acc, 0.0} : acc;
}

/// Exact sum of one tower's full sub-series: the member lambdas alternate, so
///   sum_{j>=kappa} lambda(m p^j u) / (m p^j u)^s
///     = lambda(base)/base^s * 1/(1 + p^(-s)),
/// the alternating geometric tail in closed form. Requires Re(s) > 0 for the
/// geometric series to converge.
inline complex_t tower_subseries(const TowerLabel& label, complex_t s,
                                 const SpfTable* table = nullptr) {
  detail::require_finite(s, "tower_subseries");
  if (s.real() <= 0.0) throw std::domain_error("tower_subseries: requires Re(s) > 0");
  validate_label(label, table);
  if (label.trivial())
    throw std::invalid_argument("tower_subseries: the trivial tower has no sub-series");
  const u64 base = base_of(label, table).first;
  const int base_lambda = lambda(base, table);
  const complex_t denom = 1.0 + detail::power_neg(static_cast<double>(label.p), s);
  if (std::abs(denom) < 1e-12)
    throw std::domain_error("tower_subseries: 1 + p^(-s) vanishes (singular point)");
  if (detail::is_real(s)) {
    const double v = base_lambda * std::pow(static_cast<double>(base), -s.real()) / denom.real();
    return {v, 0.0};
  }
  return static_cast<double>(base_lambda) * detail::power_neg(static_cast<double>(base), s) / denom;
}

enum class TowerSumMode {
  closed_tail,  // each tower contributes its full sub-series in closed form
  truncated,    // each tower contributes only members <= the bound
};

/// F(s) assembled tower by tower: the n = 1 term plus one contribution per
/// tower with base <= base_bound, ascending by base. In truncated mode each
/// included tower is cut at members <= base_bound, which makes the covered
/// integer set exactly {1..base_bound} -- the same terms as F_direct in a
/// different order. In closed_tail mode every included tower contributes its
/// infinite sub-series, which is the better approximation of F(s) itself.
inline complex_t F_by_towers(complex_t s, u64 base_bound,
                             TowerSumMode mode = TowerSumMode::closed_tail,
                             const SpfTable* table = nullptr) {
  detail::require_finite(s, "F_by_towers");
  if (base_bound < 2) throw std::invalid_argument("F_by_towers: base_bound must be >= 2");
  std::optional<SpfTable> local;
  if (table == nullptr || table->limit() < base_bound) {
    local.emplace(base_bound);
    table = &*local;
  }
  const bool real_path = detail::is_real(s);
  const double sr = s.real();
  double real_acc = 1.0;
  complex_t acc = 1.0;
  for (const auto& [label, count] : towers_up_to(base_bound, table)) {
    if (mode == TowerSumMode::closed_tail) {
      const complex_t term = tower_subseries(label, s, table);
      if (real_path)
        real_acc += term.real();
      else
        acc += term;
      continue;
    }
    const auto [base, kappa] = base_of(label, table);
    int sign = lambda(base, table);
    u64 member = base;
    for (u64 i = 0; i < count; ++i) {
      if (real_path)
        real_acc += sign * std::pow(static_cast<double>(member), -sr);
      else
        acc += static_cast<double>(sign) * detail::power_neg(static_cast<double>(member), s);
      sign = -sign;
      member *= label.p;  // count members all fit below base_bound
    }
  }
  return real_path ? complex_t{real_acc, 0.0} : acc;
}

/// Heuristic width of the critical line from the law of the iterated
/// logarithm: log log log n / log n (natural logs), defined for n > e^e.
inline double critical_line_width_from_log(double log_n) {
  if (!(log_n > std::exp(1.0)))
    throw std::domain_error("critical_line_width: requires n > e^e");
  return std::log(std::log(log_n)) / log_n;
}

inline double critical_line_width(double n) {
  if (!(n > std::exp(std::exp(1.0))))
    throw std::domain_error("critical_line_width: requires n > e^e");
  return critical_line_width_from_log(std::log(n));
}

}  // namespace liouville

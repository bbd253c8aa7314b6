#pragma once

#include <algorithm>
#include <bit>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "liouville/factor.hpp"

namespace liouville {

/// Unique label of an integer n = m * p^k * u, where p is the largest prime
/// whose exponent is >= 2 (Class I) or, for squarefree n, the largest prime
/// factor with k = 1 and u = 1 (Class II). m carries the smaller primes with
/// their exponents, u the larger primes (squarefree). n = 1 is labeled by the
/// trivial triad (1, 1^0, 1).
struct Triad {
  u64 m = 1;
  u64 p = 1;
  u32 k = 0;
  u64 u = 1;

  bool operator==(const Triad&) const = default;
  bool trivial() const { return p == 1; }
  /// Class II integers are squarefree; everything with k >= 2 is Class I.
  bool class_two() const { return k == 1; }
};

/// Exponent-free projection (m, p, u) of a triad. It names the tower
/// P_{m;p;u} = { m * p^j * u : j >= kappa }, whose members strictly increase
/// and whose lambda values alternate in sign. kappa is 1 when u == 1 and m is
/// squarefree (the base is then Class II) and 2 otherwise.
struct TowerLabel {
  u64 m = 1;
  u64 p = 1;
  u64 u = 1;

  bool operator==(const TowerLabel&) const = default;
  bool trivial() const { return p == 1; }
};

inline constexpr Triad kTrivialTriad{1, 1, 0, 1};
inline constexpr TowerLabel kTrivialTower{1, 1, 1};

/// Labels an integer. Rule: if any prime divides n at least twice, p is the
/// largest such prime and u collects the (necessarily single-exponent) larger
/// primes; otherwise n is squarefree, p is its largest prime factor and u = 1.
inline Triad triad_of(u64 n, const SpfTable* table = nullptr) {
  if (n == 0) throw std::invalid_argument("triad_of: n must be positive");
  if (n == 1) return kTrivialTriad;
  const Factorization f = factorize(n, table);
  std::size_t idx = f.factors.size();
  for (std::size_t i = f.factors.size(); i-- > 0;) {
    if (f.factors[i].second >= 2) {
      idx = i;
      break;
    }
  }
  Triad t;
  if (idx == f.factors.size()) {
    const u64 p = f.factors.back().first;
    t = Triad{n / p, p, 1, 1};
  } else {
    t.p = f.factors[idx].first;
    t.k = f.factors[idx].second;
    for (std::size_t i = 0; i < idx; ++i)
      for (u32 j = 0; j < f.factors[i].second; ++j) t.m *= f.factors[i].first;
    for (std::size_t i = idx + 1; i < f.factors.size(); ++i) t.u *= f.factors[i].first;
  }
  return t;
}

namespace detail {

inline bool is_prime_value(u64 p, const SpfTable* table) {
  if (p < 2) return false;
  if (table != nullptr && p <= table->limit()) return table->spf(p) == p;
  const Factorization f = factorize(p);
  return f.factors.size() == 1 && f.factors[0].second == 1;
}

}  // namespace detail

/// Checks the label invariants: p prime (or the trivial label), every prime
/// factor of m below p, u squarefree with every prime factor above p.
/// Throws std::invalid_argument naming the violated clause.
inline void validate_label(const TowerLabel& l, const SpfTable* table = nullptr) {
  if (l.trivial()) {
    if (l.m != 1 || l.u != 1)
      throw std::invalid_argument("tower label: p = 1 is only allowed in the trivial label (1,1,1)");
    return;
  }
  if (l.m == 0 || l.u == 0) throw std::invalid_argument("tower label: m and u must be positive");
  if (!detail::is_prime_value(l.p, table)) throw std::invalid_argument("tower label: p must be prime");
  if (l.m > 1) {
    const Factorization fm = factorize(l.m, table);
    if (fm.factors.back().first >= l.p)
      throw std::invalid_argument("tower label: every prime factor of m must be < p");
  }
  if (l.u > 1) {
    const Factorization fu = factorize(l.u, table);
    if (fu.factors.front().first <= l.p)
      throw std::invalid_argument("tower label: every prime factor of u must be > p");
    if (!fu.squarefree()) throw std::invalid_argument("tower label: u must be squarefree");
  }
}

/// Reconstructs m * p^k * u from a validated triad. Rejects triads violating
/// the labeling invariants and detects 64-bit overflow.
inline u64 integer_of(const Triad& t, const SpfTable* table = nullptr) {
  if (t == kTrivialTriad) return 1;
  validate_label(TowerLabel{t.m, t.p, t.u}, table);
  if (t.k == 0) throw std::invalid_argument("triad: k = 0 is only allowed in the trivial triad");
  if (t.u != 1 && t.k < 2) throw std::invalid_argument("triad: u != 1 requires k >= 2");
  if (t.k == 1) {
    // Class II: the whole integer m*p is squarefree, so m itself must be.
    if (t.m > 1 && !factorize(t.m, table).squarefree())
      throw std::invalid_argument("triad: k = 1 requires a squarefree m");
  }
  auto base = checked_mul_pow(t.m, t.p, t.k);
  std::optional<u64> n = base ? checked_mul(*base, t.u) : std::nullopt;
  if (!n) throw std::range_error("integer_of: m * p^k * u overflows 64 bits");
  return *n;
}

/// Tower membership of n (n = 1 maps to the trivial tower).
inline TowerLabel tower_of(u64 n, const SpfTable* table = nullptr) {
  const Triad t = triad_of(n, table);
  return TowerLabel{t.m, t.p, t.u};
}

/// Base exponent kappa of a tower: 1 when u == 1 and m is squarefree (the
/// base integer is then Class II), else 2. The trivial tower has kappa = 0.
inline u32 kappa_of(const TowerLabel& l, const SpfTable* table = nullptr) {
  if (l.trivial()) return 0;
  if (l.u == 1 && (l.m == 1 || factorize(l.m, table).squarefree())) return 1;
  return 2;
}

/// Smallest member of the tower together with its exponent kappa.
inline std::pair<u64, u32> base_of(const TowerLabel& l, const SpfTable* table = nullptr) {
  validate_label(l, table);
  if (l.trivial()) return {1, 0};
  const u32 kappa = kappa_of(l, table);
  auto b = checked_mul_pow(l.m, l.p, kappa);
  std::optional<u64> base = b ? checked_mul(*b, l.u) : std::nullopt;
  if (!base) throw std::range_error("base_of: tower base overflows 64 bits");
  return {*base, kappa};
}

/// All tower members m * p^j * u <= N (j >= kappa), ascending. Empty when the
/// base already exceeds N.
inline std::vector<u64> members_up_to(const TowerLabel& l, u64 N, const SpfTable* table = nullptr) {
  validate_label(l, table);
  std::vector<u64> members;
  if (l.trivial()) {
    if (N >= 1) members.push_back(1);
    return members;
  }
  u64 member = base_of(l, table).first;
  while (member <= N) {
    members.push_back(member);
    auto next = checked_mul(member, l.p);
    if (!next) break;
    member = *next;
  }
  return members;
}

namespace detail {

/// Label, base integer and kappa of n >= 2 in one factorization pass.
struct TowerAssignment {
  TowerLabel label;
  u64 base = 0;
  u32 kappa = 0;
};

inline TowerAssignment assign_tower(u64 n, const SpfTable* table) {
  const Factorization f = factorize(n, table);
  std::size_t idx = f.factors.size();
  for (std::size_t i = f.factors.size(); i-- > 0;) {
    if (f.factors[i].second >= 2) {
      idx = i;
      break;
    }
  }
  TowerAssignment a;
  if (idx == f.factors.size()) {
    // squarefree n: Class II base of its tower, kappa = 1, base = n itself
    const u64 p = f.factors.back().first;
    a.label = TowerLabel{n / p, p, 1};
    a.kappa = 1;
    a.base = n;
    return a;
  }
  u64 m = 1, u = 1;
  bool m_squarefree = true;
  for (std::size_t i = 0; i < idx; ++i) {
    if (f.factors[i].second > 1) m_squarefree = false;
    for (u32 j = 0; j < f.factors[i].second; ++j) m *= f.factors[i].first;
  }
  for (std::size_t i = idx + 1; i < f.factors.size(); ++i) u *= f.factors[i].first;
  const u64 p = f.factors[idx].first;
  a.label = TowerLabel{m, p, u};
  a.kappa = (u == 1 && m_squarefree) ? 1 : 2;
  a.base = m * u;
  for (u32 j = 0; j < a.kappa; ++j) a.base *= p;  // base <= n, no overflow
  return a;
}

}  // namespace detail

/// Groups the integers 2..N by tower and counts members per tower. Returned
/// in canonical order, ascending by base integer; counts sum to N - 1.
inline std::vector<std::pair<TowerLabel, u64>> towers_up_to(u64 N, const SpfTable* table = nullptr) {
  if (N < 2) throw std::invalid_argument("towers_up_to: N must be >= 2");
  std::optional<SpfTable> local;
  if (table == nullptr || table->limit() < N) {
    local.emplace(N);
    table = &*local;
  }
  struct Entry {
    TowerLabel label;
    u64 count = 0;
  };
  std::unordered_map<u64, Entry> by_base;
  by_base.reserve(static_cast<std::size_t>(N / 2 + 16));
  for (u64 n = 2; n <= N; ++n) {
    const detail::TowerAssignment a = detail::assign_tower(n, table);
    Entry& e = by_base[a.base];
    e.label = a.label;
    ++e.count;
  }
  std::vector<std::pair<u64, Entry>> flat(by_base.begin(), by_base.end());
  std::sort(flat.begin(), flat.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  std::vector<std::pair<TowerLabel, u64>> out;
  out.reserve(flat.size());
  for (auto& [base, e] : flat) out.emplace_back(e.label, e.count);
  return out;
}

/// The unique partner of opposite lambda, defined by the 2-adic valuation v
/// of n: doubling when v is even, halving when v is odd. An involution with
/// lambda(twin(n)) = -lambda(n); in particular 1 <-> 2.
inline u64 twin_integer(u64 n) {
  if (n == 0) throw std::invalid_argument("twin_integer: n must be positive");
  const unsigned v = static_cast<unsigned>(std::countr_zero(n));
  if (v % 2 == 0) {
    auto d = checked_mul(n, 2);
    if (!d) throw std::range_error("twin_integer: 2n overflows 64 bits");
    return *d;
  }
  return n / 2;
}

/// Twin tower of a label with p >= 3: m is doubled or halved by the 2-adic
/// rule, which flips the lambda of the base. (1,2,1) pairs with the trivial
/// tower and vice versa. Labels with p = 2 and u != 1 are rejected: doubling
/// m = 1 would put the prime 2 into m, which the label invariant forbids, and
/// no alternative pairing is defined.
inline TowerLabel twin_tower(const TowerLabel& l, const SpfTable* table = nullptr) {
  validate_label(l, table);
  if (l.trivial()) return TowerLabel{1, 2, 1};
  if (l.p == 2) {
    if (l == TowerLabel{1, 2, 1}) return kTrivialTower;
    throw std::domain_error(
        "twin_tower: no twin is defined for towers with p = 2 and u != 1; doubling m = 1 "
        "would give m the prime factor 2 = p, which the label invariant forbids");
  }
  const unsigned v = static_cast<unsigned>(std::countr_zero(l.m));
  u64 m2;
  if (v % 2 == 0) {
    auto d = checked_mul(l.m, 2);
    if (!d) throw std::range_error("twin_tower: 2m overflows 64 bits");
    m2 = *d;
  } else {
    m2 = l.m / 2;
  }
  return TowerLabel{m2, l.p, l.u};
}

/// Serialization used by the CLI and CSV output.
inline std::string format_label(const TowerLabel& l) {
  return std::to_string(l.m) + ":" + std::to_string(l.p) + ":" + std::to_string(l.u);
}

inline TowerLabel parse_label(const std::string& text) {
  TowerLabel l;
  u64* parts[3] = {&l.m, &l.p, &l.u};
  std::size_t pos = 0;
  for (int i = 0; i < 3; ++i) {
    if (pos >= text.size()) throw std::invalid_argument("parse_label: expected m:p:u");
    std::size_t used = 0;
    *parts[i] = std::stoull(text.substr(pos), &used);
    pos += used;
    if (i < 2) {
      if (pos >= text.size() || text[pos] != ':')
        throw std::invalid_argument("parse_label: expected m:p:u");
      ++pos;
    }
  }
  if (pos != text.size()) throw std::invalid_argument("parse_label: trailing characters");
  return l;
}

}  // namespace liouville

#include "qgordon/qcomb.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace qgordon {

namespace {

std::mutex binom_mu;
std::vector<std::vector<QPoly>> binom_rows;  // binom_rows[L][a] = [L, a]_q

std::mutex multi_mu;
std::map<std::tuple<long long, long long, int, int>, QPoly> multi_cache;

std::mutex capped_mu;
std::map<std::tuple<long long, long long, int, int, long long>, QPoly> capped_cache;

void check_multinomial_domain(long long L, int p, int k) {
  if (k < 1) throw std::invalid_argument("q_multinomial: k must be >= 1");
  if (L < 0) throw std::invalid_argument("q_multinomial: L must be >= 0");
  if (p < 0 || p > k) throw std::invalid_argument("q_multinomial: need 0 <= p <= k");
}

// Product dropping all exponents above cap (cap < 0 means no cap).
QPoly mul_capped(const QPoly& a, const QPoly& b, long long cap) {
  if (cap < 0) return a * b;
  if (a.is_zero() || b.is_zero()) return QPoly();
  long long lo = a.min_exp() + b.min_exp();
  if (lo > cap) return QPoly();
  long long hi = std::min(cap, a.max_exp() + b.max_exp());
  std::vector<Int> c(static_cast<size_t>(hi - lo + 1));
  for (long long i = a.min_exp(); i <= a.max_exp(); ++i) {
    Int ca = a.coeff(i);
    if (ca == 0) continue;
    long long jhi = std::min(b.max_exp(), hi - i);
    for (long long j = b.min_exp(); j <= jhi; ++j) {
      Int cb = b.coeff(j);
      if (cb == 0) continue;
      c[static_cast<size_t>(i + j - lo)] += ca * cb;
    }
  }
  return QPoly(lo, std::move(c));
}

// Sum over chains L >= j_1 >= ... >= j_k >= 0 with sum a (the defining
// representation). Exponents above cap are discarded when cap >= 0.
QPoly q_multinomial_sum(long long L, long long a, int p, int k, long long cap) {
  if (a < 0 || a > static_cast<long long>(k) * L) return QPoly();
  QPoly acc;
  std::vector<long long> j(static_cast<size_t>(k) + 1);
  j[0] = L;
  // Depth-first over levels 1..k; term carries the partial exponent and the
  // partial binomial product.
  auto rec = [&](auto&& self, int level, long long remaining, long long exp,
                 const QPoly& prod) -> void {
    if (prod.is_zero()) return;
    long long prev = j[static_cast<size_t>(level) - 1];
    if (level == k) {
      if (remaining > prev) return;
      long long jl = remaining;
      long long add_exp = (level >= k - p + 1) ? -jl : 0;
      if (level >= 2) add_exp += (L - prev) * jl;
      acc += mul_capped(prod, gaussian_binomial(prev, jl), cap).shifted(exp + add_exp);
      return;
    }
    int levels_left = k - level + 1;
    long long lo = (remaining + levels_left - 1) / levels_left;  // j_l >= ceil
    long long hi = std::min(prev, remaining);
    for (long long jl = lo; jl <= hi; ++jl) {
      j[static_cast<size_t>(level)] = jl;
      long long add_exp = (level >= k - p + 1) ? -jl : 0;
      if (level >= 2) add_exp += (L - prev) * jl;
      self(self, level + 1, remaining - jl, exp + add_exp,
           mul_capped(prod, gaussian_binomial(prev, jl), cap));
    }
  };
  rec(rec, 1, a, 0, QPoly::one());
  return acc;
}

}  // namespace

QPoly gaussian_binomial(long long L, long long a) {
  if (L < 0 || a < 0 || a > L) return QPoly();
  std::scoped_lock lock(binom_mu);
  while (static_cast<long long>(binom_rows.size()) <= L) {
    long long n = static_cast<long long>(binom_rows.size());
    std::vector<QPoly> row(static_cast<size_t>(n) + 1);
    row[0] = QPoly::one();
    row[static_cast<size_t>(n)] = QPoly::one();
    for (long long b = 1; b < n; ++b) {
      const auto& prev = binom_rows[static_cast<size_t>(n) - 1];
      row[static_cast<size_t>(b)] =
          prev[static_cast<size_t>(b)] + prev[static_cast<size_t>(b) - 1].shifted(n - b);
    }
    binom_rows.push_back(std::move(row));
  }
  return binom_rows[static_cast<size_t>(L)][static_cast<size_t>(a)];
}

QPoly q_multinomial(long long L, long long a, int p, int k) {
  check_multinomial_domain(L, p, k);
  if (a < 0 || a > static_cast<long long>(k) * L) return QPoly();
  auto key = std::make_tuple(L, a, p, k);
  {
    std::scoped_lock lock(multi_mu);
    auto it = multi_cache.find(key);
    if (it != multi_cache.end()) return it->second;
  }
  QPoly val = q_multinomial_sum(L, a, p, k, -1);
  std::scoped_lock lock(multi_mu);
  return multi_cache.emplace(key, std::move(val)).first->second;
}

QPoly q_multinomial_capped(long long L, long long a, int p, int k, long long cap) {
  check_multinomial_domain(L, p, k);
  if (a < 0 || a > static_cast<long long>(k) * L) return QPoly();
  auto key = std::make_tuple(L, a, p, k, cap);
  {
    std::scoped_lock lock(capped_mu);
    auto it = capped_cache.find(key);
    if (it != capped_cache.end()) return it->second;
  }
  QPoly val = q_multinomial_sum(L, a, p, k, cap);
  std::scoped_lock lock(capped_mu);
  return capped_cache.emplace(key, std::move(val)).first->second;
}

QPoly q_multinomial_tilde(long long L, long long a, int p, int k) {
  check_multinomial_domain(L, p, k);
  if (a < 0 || a > static_cast<long long>(k) * L) return QPoly();
  QPoly acc;
  std::vector<long long> N(static_cast<size_t>(k) + 1);
  N[0] = L;
  auto rec = [&](auto&& self, int level, long long remaining, long long exp,
                 const QPoly& prod) -> void {
    if (prod.is_zero()) return;
    long long prev = N[static_cast<size_t>(level) - 1];
    if (level == k) {
      if (remaining > prev) return;
      long long nl = remaining;
      long long e = exp + nl * nl + (level >= k - p + 1 ? nl : 0);
      acc += (prod * gaussian_binomial(prev, nl)).shifted(e);
      return;
    }
    int levels_left = k - level + 1;
    long long lo = (remaining + levels_left - 1) / levels_left;
    long long hi = std::min(prev, remaining);
    for (long long nl = lo; nl <= hi; ++nl) {
      N[static_cast<size_t>(level)] = nl;
      long long add = nl * nl + (level >= k - p + 1 ? nl : 0);
      self(self, level + 1, remaining - nl, exp + add, prod * gaussian_binomial(prev, nl));
    }
  };
  rec(rec, 1, a, 0, QPoly::one());
  return acc;
}

Int classical_multinomial(long long L, long long a, int k) {
  if (k < 0 || L < 0) throw std::invalid_argument("classical_multinomial: bad domain");
  if (a < 0 || a > static_cast<long long>(k) * L) return 0;
  std::vector<Int> row(1, 1);
  for (long long step = 0; step < L; ++step) {
    std::vector<Int> next(row.size() + static_cast<size_t>(k));
    for (size_t i = 0; i < row.size(); ++i)
      for (int d = 0; d <= k; ++d) next[i + static_cast<size_t>(d)] += row[i];
    row = std::move(next);
  }
  return row[static_cast<size_t>(a)];
}

bool check_symmetry(long long L, long long a, int p, int k) {
  QPoly lhs = q_multinomial(L, a, p, k);
  QPoly rhs =
      q_multinomial(L, static_cast<long long>(k) * L - a, k - p, k)
          .shifted((static_cast<long long>(k) - p) * L - a);
  return lhs == rhs;
}

bool check_frec(long long L, long long a, int p, int k) {
  if (L < 1) throw std::invalid_argument("check_frec: L must be >= 1");
  QPoly lhs = q_multinomial(L, a, p, k);
  QPoly rhs;
  for (int m = 0; m <= k - p; ++m)
    rhs += q_multinomial(L - 1, a - m, m, k).shifted(static_cast<long long>(m) * (L - 1));
  for (int m = k - p + 1; m <= k; ++m)
    rhs += q_multinomial(L - 1, a - m, m, k)
               .shifted(L * static_cast<long long>(k - p) - m);
  return lhs == rhs;
}

bool check_taut(long long L, long long a, int p, int k) {
  if (p < -1 || p > k - 1) throw std::invalid_argument("check_taut: need -1 <= p <= k-1");
  auto M = [&](long long aa, int pp) {
    return pp < 0 ? QPoly() : q_multinomial(L, aa, pp, k);
  };
  long long b = static_cast<long long>(k) * L - a - p - 1;
  QPoly lhs = M(a, p) + M(b, p + 1).shifted(L);
  QPoly rhs = M(b, p) + M(a, p + 1).shifted(L);
  return lhs == rhs;
}

bool check_qrec(long long L, long long a, int p, int k) {
  if (L < 1) throw std::invalid_argument("check_qrec: L must be >= 1");
  QPoly lhs = q_multinomial(L, a, p, k);
  QPoly rhs;
  long long kL = static_cast<long long>(k) * L;
  for (int m = 0; m <= k; ++m) {
    bool same_parity = ((m + p + k) % 2) == 0;
    if (same_parity && m <= k - p) {
      rhs += q_multinomial(L - 1, a - (m - p + k) / 2, m, k)
                 .shifted(static_cast<long long>(m) * (L - 1));
    }
    if (!same_parity && m <= k - p - 1) {
      rhs += q_multinomial(L - 1, kL - a - (m + p + k + 1) / 2, m, k)
                 .shifted(static_cast<long long>(m) * (L - 1));
    }
    if (same_parity && m >= k - p + 2) {
      rhs += q_multinomial(L - 1, a - (m - p + k) / 2, m, k)
                 .shifted(((2 * L - 1) * static_cast<long long>(k - p) - m) / 2);
    }
    if (!same_parity && m >= k - p + 1) {
      rhs += q_multinomial(L - 1, kL - a - (m + p - k - 1) / 2, m, k)
                 .shifted(kL + ((2 * L + 1) * static_cast<long long>(k - p) - m + 1) / 2 -
                          2 * a);
    }
  }
  return lhs == rhs;
}

bool check_pr(long long L, long long a, int p, int k, int r) {
  if (L < 1) throw std::invalid_argument("check_pr: L must be >= 1");
  if (r < 0 || r > p) throw std::invalid_argument("check_pr: need 0 <= r <= p");
  QPoly lhs = q_multinomial(L, a, p, k);
  long long kL = static_cast<long long>(k) * L;
  QPoly bracket;
  for (int m = 0; m <= p - 1; ++m) {
    long long drop = (m <= p - r - 1) ? static_cast<long long>(r) * L
                                      : static_cast<long long>(p - m) * L;
    QPoly factor = QPoly::one() - QPoly::monomial(1, drop);
    bracket += (factor * q_multinomial(L - 1, kL - a - m, m, k))
                   .shifted(static_cast<long long>(m) * (L - 1));
  }
  QPoly rhs = q_multinomial(L, a, p - r, k) +
              bracket.shifted(static_cast<long long>(k - p) * L - a);
  return lhs == rhs;
}

bool check_t2(long long L, long long a, int M, int k) {
  if (M < 0 || M > k) throw std::invalid_argument("check_t2: need 0 <= M <= k");
  long long kL = static_cast<long long>(k) * L;
  QPoly lhs, rhs;
  for (int m = 0; m <= M; ++m) {
    lhs += q_multinomial(L, a - m, m, k).shifted(static_cast<long long>(m) * L);
    rhs += q_multinomial(L, kL - a - m + M, m, k).shifted(static_cast<long long>(m) * L);
  }
  return lhs == rhs;
}

std::vector<QPoly> andrews_generating_polynomial(int k, long long L) {
  if (k < 0 || L < 0) throw std::invalid_argument("andrews polynomial: bad domain");
  if (k == 0) return {QPoly::one()};
  std::vector<QPoly> result(static_cast<size_t>(k) * L + 1);
  for (long long a = 0; a <= L; ++a) {
    std::vector<QPoly> sub = andrews_generating_polynomial(k - 1, a);
    QPoly head = gaussian_binomial(L, a).shifted(a * (a - 1) / 2);
    for (size_t b = 0; b < sub.size(); ++b) {
      if (sub[b].is_zero()) continue;
      // substitution x -> x q^L scales the x^b coefficient by q^{Lb}
      result[static_cast<size_t>(a) + b] +=
          head * sub[b].shifted(L * static_cast<long long>(b));
    }
  }
  return result;
}

bool check_andrews_closed_form(int k, long long L) {
  std::vector<QPoly> p = andrews_generating_polynomial(k, L);
  for (long long a = 0; a <= static_cast<long long>(k) * L; ++a) {
    QPoly expect = q_multinomial(L, a, 0, k).shifted(a * (a - 1) / 2);
    if (p[static_cast<size_t>(a)] != expect) return false;
  }
  return true;
}

}  // namespace qgordon

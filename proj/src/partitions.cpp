#include "qgordon/partitions.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

namespace qgordon {

Int partition_weight(const Partition& p) {
  Int w = 0;
  for (long long part : p) w += part;
  return w;
}

Partition conjugate(const Partition& p) {
  if (p.empty()) return {};
  Partition c(static_cast<size_t>(p[0]));
  for (size_t j = 0; j < c.size(); ++j) {
    long long col = static_cast<long long>(j) + 1;
    c[j] = static_cast<long long>(
        std::count_if(p.begin(), p.end(), [&](long long part) { return part >= col; }));
  }
  return c;
}

void enumerate_frequency_partitions(int k, int i, int iprime, long long L,
                                    const std::function<void(const FrequencyVector&)>& emit) {
  if (k < 1 || i < 1 || i > k + 1 || iprime < 1 || iprime > k + 1)
    throw std::invalid_argument("enumerate_frequency_partitions: bad parameters");
  if (L < 0) throw std::invalid_argument("enumerate_frequency_partitions: L must be >= 0");
  if (L <= 1) {
    emit(FrequencyVector{});
    return;
  }
  FrequencyVector f(static_cast<size_t>(L) - 1);
  auto rec = [&](auto&& self, long long j) -> void {
    if (j == L) {
      emit(f);
      return;
    }
    long long cap = k;
    if (j == 1) cap = std::min<long long>(cap, i - 1);
    if (j == L - 1) cap = std::min<long long>(cap, iprime - 1);
    if (j > 1) cap = std::min(cap, k - f[static_cast<size_t>(j) - 2]);
    for (long long v = 0; v <= cap; ++v) {
      f[static_cast<size_t>(j) - 1] = v;
      self(self, j + 1);
    }
  };
  rec(rec, 1);
}

namespace {
std::mutex gen_mu;
std::map<std::tuple<int, int, int, long long>, QPoly> gen_cache;
}  // namespace

QPoly gen_func_bruteforce(int k, int i, int iprime, long long L) {
  if (L == 0) return (i == iprime) ? QPoly::one() : QPoly::zero();
  auto key = std::make_tuple(k, i, iprime, L);
  {
    std::scoped_lock lock(gen_mu);
    auto it = gen_cache.find(key);
    if (it != gen_cache.end()) return it->second;
  }
  std::map<long long, Int> by_weight;
  enumerate_frequency_partitions(k, i, iprime, L, [&](const FrequencyVector& f) {
    long long w = 0;
    for (size_t j = 0; j < f.size(); ++j) w += (static_cast<long long>(j) + 1) * f[j];
    by_weight[w] += 1;
  });
  long long lo = by_weight.begin()->first;
  long long hi = by_weight.rbegin()->first;
  std::vector<Int> coeffs(static_cast<size_t>(hi - lo + 1));
  for (const auto& [w, c] : by_weight) coeffs[static_cast<size_t>(w - lo)] = c;
  QPoly val(lo, std::move(coeffs));
  std::scoped_lock lock(gen_mu);
  return gen_cache.emplace(key, std::move(val)).first->second;
}

namespace {
// Boundary values making the row-removal recurrence consistent with the
// delta initial condition: iterating the recurrence down from the true
// L >= 2 values forces G_1 = [i + i' >= k + 2] and G_0 = delta_{i,i'},
// which differ from the literal path counts at L <= 1.
QPoly grec_value(int k, int i, int iprime, long long L) {
  if (L == 0) return (i == iprime) ? QPoly::one() : QPoly::zero();
  if (L == 1) return (i + iprime >= k + 2) ? QPoly::one() : QPoly::zero();
  return gen_func_bruteforce(k, i, iprime, L);
}
}  // namespace

bool check_grec(int k, int i, int iprime, long long L) {
  if (L < 1) throw std::invalid_argument("check_grec: L must be >= 1");
  QPoly lhs = grec_value(k, i, iprime, L);
  QPoly rhs;
  for (int l = 0; l <= iprime - 1; ++l)
    rhs += grec_value(k, i, k - l + 1, L - 1).shifted(static_cast<long long>(l) * (L - 1));
  return lhs == rhs;
}

long long durfee_square_size(const Partition& p) {
  long long d = 0;
  while (d < static_cast<long long>(p.size()) && p[static_cast<size_t>(d)] >= d + 1) ++d;
  return d;
}

long long durfee_rectangle_size(const Partition& p) {
  // largest d with at least d+1 rows of length >= d; d = 0 always qualifies
  long long d = 0;
  while (d + 1 < static_cast<long long>(p.size()) && p[static_cast<size_t>(d) + 1] >= d + 1) ++d;
  return d;
}

std::vector<long long> dissect(const Partition& p, int k, int i) {
  if (k < 1 || i < 1 || i > k + 1) throw std::invalid_argument("dissect: bad parameters");
  std::vector<long long> sizes;
  Partition cur = p;
  for (int l = 1; l <= k; ++l) {
    long long d;
    long long consumed;
    if (l <= i - 1) {
      d = durfee_square_size(cur);
      consumed = d;
    } else {
      d = durfee_rectangle_size(cur);
      consumed = d + 1;
    }
    sizes.push_back(d);
    consumed = std::min(consumed, static_cast<long long>(cur.size()));
    cur = Partition(cur.begin() + consumed, cur.end());
  }
  return sizes;
}

bool is_admissible(const Partition& p, int k, int i, long long L, long long a) {
  if (k < 1 || i < 1 || i > k + 1) throw std::invalid_argument("is_admissible: bad parameters");
  if (!p.empty() && p[0] > L) return false;
  Partition cur = p;
  long long total = 0;
  for (int l = 1; l <= k; ++l) {
    if (l <= i - 1) {
      long long d = durfee_square_size(cur);
      total += d;
      cur = Partition(cur.begin() + d, cur.end());
    } else {
      long long d = durfee_rectangle_size(cur);
      total += d;
      if (d == 0) {
        // a width-0 rectangle admits nothing at or below it
        if (!cur.empty()) return false;
        continue;
      }
      // last row of the d x (d+1) rectangle must be a part of exactly d nodes
      if (cur[static_cast<size_t>(d)] != d) return false;
      cur = Partition(cur.begin() + d + 1, cur.end());
    }
  }
  if (!cur.empty()) return false;
  return total == a;
}

void enumerate_box_partitions(long long max_part, long long max_rows,
                              const std::function<void(const Partition&)>& emit) {
  if (max_part < 0 || max_rows < 0)
    throw std::invalid_argument("enumerate_box_partitions: bad box");
  Partition cur;
  auto rec = [&](auto&& self, long long largest) -> void {
    emit(cur);
    if (static_cast<long long>(cur.size()) == max_rows) return;
    for (long long part = largest; part >= 1; --part) {
      cur.push_back(part);
      self(self, part);
      cur.pop_back();
    }
  };
  rec(rec, max_part);
}

QPoly gen_func_admissible(int k, int i, long long L, long long a) {
  if (L < 0 || a < 0) throw std::invalid_argument("gen_func_admissible: bad domain");
  std::map<long long, Int> by_weight;
  // Admissible partitions have at most a + k rows: a rows from the block
  // sizes plus one extra row per nonempty rectangle.
  enumerate_box_partitions(L, a + k, [&](const Partition& p) {
    if (!is_admissible(p, k, i, L, a)) return;
    long long w = 0;
    for (long long part : p) w += part;
    by_weight[w] += 1;
  });
  QPoly acc;
  for (const auto& [w, c] : by_weight) acc += QPoly::monomial(c, w);
  return acc;
}

Partition add_column(const Partition& p, long long a) {
  if (a < 0 || static_cast<long long>(p.size()) > a)
    throw std::invalid_argument("add_column: partition has more than a parts");
  Partition out(static_cast<size_t>(a));
  for (size_t j = 0; j < out.size(); ++j)
    out[j] = (j < p.size() ? p[j] : 0) + 1;
  return out;
}

Partition remove_column(const Partition& p) {
  Partition out;
  for (long long part : p)
    if (part > 1) out.push_back(part - 1);
  return out;
}

std::vector<long long> successive_ranks(const Partition& p) {
  Partition c = conjugate(p);
  long long d = durfee_square_size(p);
  std::vector<long long> ranks(static_cast<size_t>(d));
  for (long long j = 0; j < d; ++j)
    ranks[static_cast<size_t>(j)] = p[static_cast<size_t>(j)] - c[static_cast<size_t>(j)];
  return ranks;
}

QPoly gen_func_rank_restricted(int k, int i, long long L) {
  if (k < 1 || i < 1 || i > k + 1) throw std::invalid_argument("rank restricted: bad parameters");
  if (L < k - i + 1) throw std::invalid_argument("rank restricted: need L >= k-i+1");
  long long max_part = (L + k - i + 2) / 2;
  long long max_rows = (L - k + i - 1) / 2;
  std::map<long long, Int> by_weight;
  enumerate_box_partitions(max_part, max_rows, [&](const Partition& p) {
    for (long long r : successive_ranks(p))
      if (r < 2 - i || r > 2 * k - i + 1) return;
    long long w = 0;
    for (long long part : p) w += part;
    by_weight[w] += 1;
  });
  QPoly acc;
  for (const auto& [w, c] : by_weight) acc += QPoly::monomial(c, w);
  return acc;
}

}  // namespace qgordon

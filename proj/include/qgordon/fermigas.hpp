#pragma once

#include <functional>

#include "qgordon/qpoly.hpp"

namespace qgordon {

/// Path of the one-dimensional lattice gas on L sites: column heights
/// f_1..f_{L-1} with f_1 <= i-1, f_{L-1} <= i'-1 and f_j + f_{j+1} <= k.
struct LatticePath {
  long long L = 1;
  std::vector<long long> f;  // f[j-1] = f_j, size L-1

  long long height(long long x) const {  // 0 outside 1..L-1
    return (x >= 1 && x <= static_cast<long long>(f.size())) ? f[static_cast<size_t>(x) - 1]
                                                             : 0;
  }
  long long weight() const {
    long long w = 0;
    for (size_t j = 0; j < f.size(); ++j) w += (static_cast<long long>(j) + 1) * f[j];
    return w;
  }
  bool operator==(const LatticePath&) const = default;
};

/// Charge content of a path: n[t-1] = number of particles of charge t,
/// t = 1..k.
struct ParticleContent {
  std::vector<long long> n;

  long long total() const {
    long long s = 0;
    for (long long v : n) s += v;
    return s;
  }
  bool operator==(const ParticleContent&) const = default;
};

/// Inverse of the Cartan-type matrix C = 2*Id - I, where I is the incidence
/// matrix of the A_k chain with an extra loop at node k. The inverse has the
/// integer entries min(s, t).
long long cartan_inverse_entry(long long s, long long t);

/// n^T C^{-1} v for vectors indexed 1..k.
long long cartan_inverse_form(const std::vector<long long>& n, const std::vector<long long>& v);

/// Capacity m_t of charge-t particle motion for content n on L sites with
/// boundary parameters (i, i'):
/// m_t = (L-2)t + min(t,i-1) + min(t,i'-1) - 2 sum_s min(t,s) n_s.
std::vector<long long> motion_capacities(const ParticleContent& content, int k, long long L,
                                         int i, int iprime);

/// The minimal-weight path of the given content: descending charges packed
/// to the left as single columns on odd sites, then each charge-t particle
/// shifted max(0, t-i+1) elementary moves to clear the f_1 <= i-1 boundary.
/// Its weight is n^T C^{-1} (n + e_k - e_{i-1}).
/// Throws std::invalid_argument for unrealizable content.
LatticePath minimal_path(const ParticleContent& content, int k, long long L, int i);

/// Generating term of all paths with fixed content:
/// Z = q^{n^T C^{-1} (n + e_k - e_{i-1})} prod_t Bin(n_t + m_t, n_t),
/// zero whenever some capacity m_t is negative.
QPoly partition_function(const ParticleContent& content, int k, long long L, int i, int iprime);

/// Streams every path of the given content exactly once, by applying all
/// admissible move sequences e_1 >= e_2 >= ... (per charge, ascending
/// charges, rightmost particle first) to the minimal path.
void generate_paths(const ParticleContent& content, int k, long long L, int i, int iprime,
                    const std::function<void(const LatticePath&)>& emit);

struct ReductionResult {
  ParticleContent content;
  /// moves[t-1][l-1] = number of elementary moves of the l-th particle of
  /// charge t (l = 1 is the rightmost) relative to the minimal path.
  std::vector<std::vector<long long>> moves;
};

/// Reduces a path to its minimal configuration by reverse moves (descending
/// charges, leftmost particle of each charge first), returning the content
/// and the move counts. The path must satisfy the (k, i) constraints.
ReductionResult reduce_to_minimal(const LatticePath& path, int k, int i = -1);

}  // namespace qgordon

#include "qgordon/fermigas.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

#include "qgordon/qcomb.hpp"

namespace qgordon {

long long cartan_inverse_entry(long long s, long long t) { return std::min(s, t); }

long long cartan_inverse_form(const std::vector<long long>& n, const std::vector<long long>& v) {
  if (n.size() != v.size()) throw std::invalid_argument("cartan form: size mismatch");
  long long acc = 0;
  for (size_t s = 0; s < n.size(); ++s)
    for (size_t t = 0; t < v.size(); ++t)
      acc += n[s] * v[t] *
             cartan_inverse_entry(static_cast<long long>(s) + 1, static_cast<long long>(t) + 1);
  return acc;
}

std::vector<long long> motion_capacities(const ParticleContent& content, int k, long long L,
                                         int i, int iprime) {
  if (static_cast<int>(content.n.size()) != k)
    throw std::invalid_argument("motion_capacities: content size must be k");
  std::vector<long long> m(static_cast<size_t>(k));
  for (long long t = 1; t <= k; ++t) {
    long long acc = (L - 2) * t + std::min<long long>(t, i - 1) + std::min<long long>(t, iprime - 1);
    for (long long s = 1; s <= k; ++s)
      acc -= 2 * std::min(t, s) * content.n[static_cast<size_t>(s) - 1];
    m[static_cast<size_t>(t) - 1] = acc;
  }
  return m;
}

namespace {

// A particle is tracked as the column pair (x, x+1) carrying its charge:
// f_x + f_{x+1} = t throughout its motion.
struct Particle {
  long long t;
  long long x;
};

long long height(const std::vector<long long>& f, long long x) {
  return (x >= 1 && x <= static_cast<long long>(f.size())) ? f[static_cast<size_t>(x) - 1] : 0;
}

void bump(std::vector<long long>& f, long long x, long long delta) {
  f.at(static_cast<size_t>(x) - 1) += delta;
}

struct Transfer {
  long long from;
  long long to;
  bool slides;  // whether the pair position changes with the transfer
};

void check_local(const std::vector<long long>& f, long long x, int k) {
  for (long long j = std::max<long long>(1, x - 1); j <= x; ++j)
    if (height(f, j) + height(f, j + 1) > k)
      throw std::logic_error("fermi gas: adjacent heights exceed k after a move");
}

// One elementary move of particle p to the right; the pair advances when the
// two columns ahead already carry the full charge. Returns the transfer
// performed, or nothing when the particle is blocked.
std::optional<Transfer> forward_once(std::vector<long long>& f, long long L, int k, int iprime,
                                     Particle& p) {
  long long x = p.x, t = p.t;
  auto cap_ok = [&](long long col) {
    return col == L - 1 ? height(f, col) + 1 <= iprime - 1 : true;
  };
  if (x + 2 <= L - 1 && height(f, x + 1) + height(f, x + 2) == t) {
    if (height(f, x + 1) >= 1 && height(f, x + 2) + 1 + height(f, x + 3) <= t && cap_ok(x + 2)) {
      bump(f, x + 1, -1);
      bump(f, x + 2, +1);
      p.x = x + 1;
      check_local(f, x + 2, k);
      return Transfer{x + 1, x + 2, true};
    }
    return std::nullopt;
  }
  if (x + 1 <= L - 1 && height(f, x) >= 1 && height(f, x + 1) + 1 + height(f, x + 2) <= t &&
      cap_ok(x + 1)) {
    bump(f, x, -1);
    bump(f, x + 1, +1);
    check_local(f, x + 1, k);
    return Transfer{x, x + 1, false};
  }
  return std::nullopt;
}

void undo_transfer(std::vector<long long>& f, const Transfer& tr, Particle& p) {
  bump(f, tr.from, +1);
  bump(f, tr.to, -1);
  if (tr.slides) p.x -= 1;
}

// Mirror image of forward_once: one elementary move to the left, respecting
// the boundary cap f_1 <= i-1.
bool backward_once(std::vector<long long>& f, int k, int i, Particle& p) {
  long long x = p.x, t = p.t;
  auto cap_ok = [&](long long col) { return col == 1 ? height(f, 1) + 1 <= i - 1 : true; };
  if (x - 1 >= 1 && height(f, x - 1) + height(f, x) == t) {
    if (height(f, x) >= 1 && height(f, x - 2) + height(f, x - 1) + 1 <= t && cap_ok(x - 1)) {
      bump(f, x, -1);
      bump(f, x - 1, +1);
      p.x = x - 1;
      check_local(f, x - 1, k);
      return true;
    }
    return false;
  }
  if (height(f, x + 1) >= 1 && height(f, x - 1) + height(f, x) + 1 <= t && cap_ok(x)) {
    bump(f, x + 1, -1);
    bump(f, x, +1);
    check_local(f, x, k);
    return true;
  }
  return false;
}

// Minimal path construction; particles[t-1] lists the charge-t particles
// ordered rightmost first (label l = 1 first).
LatticePath build_minimal(const ParticleContent& content, int k, long long L, int i,
                          std::vector<std::vector<Particle>>& particles) {
  if (static_cast<int>(content.n.size()) != k)
    throw std::invalid_argument("minimal_path: content size must be k");
  if (i < 1 || i > k + 1) throw std::invalid_argument("minimal_path: need 1 <= i <= k+1");
  for (long long v : content.n)
    if (v < 0) throw std::invalid_argument("minimal_path: negative multiplicity");
  if (2 * content.total() > L)
    throw std::invalid_argument("minimal_path: unrealizable content (too many particles)");
  LatticePath path;
  path.L = L;
  path.f.assign(static_cast<size_t>(std::max<long long>(L - 1, 0)), 0);
  particles.assign(static_cast<size_t>(k), {});
  long long pos = 1;
  for (long long t = k; t >= 1; --t) {
    for (long long c = 0; c < content.n[static_cast<size_t>(t) - 1]; ++c) {
      path.f[static_cast<size_t>(pos) - 1] = t;
      particles[static_cast<size_t>(t) - 1].push_back(Particle{t, pos});
      pos += 2;
    }
    // rightmost particle carries label 1
    std::reverse(particles[static_cast<size_t>(t) - 1].begin(),
                 particles[static_cast<size_t>(t) - 1].end());
  }
  // Clear the f_1 <= i-1 boundary: every charge-t particle makes
  // max(0, t-i+1) elementary moves, ascending charges, rightmost first.
  for (long long t = 1; t <= k; ++t) {
    long long shift = std::max<long long>(0, t - i + 1);
    for (Particle& p : particles[static_cast<size_t>(t) - 1]) {
      for (long long s = 0; s < shift; ++s) {
        if (!forward_once(path.f, L, k, k + 1, p))
          throw std::invalid_argument("minimal_path: unrealizable content (boundary shift blocked)");
      }
    }
  }
  return path;
}

std::vector<long long> unit_vector_form(const ParticleContent& content, int k, int i) {
  // v = n + e_k - e_{i-1}, with e_0 the zero vector
  std::vector<long long> v = content.n;
  v[static_cast<size_t>(k) - 1] += 1;
  if (i >= 2) v[static_cast<size_t>(i) - 2] -= 1;
  return v;
}

}  // namespace

LatticePath minimal_path(const ParticleContent& content, int k, long long L, int i) {
  std::vector<std::vector<Particle>> particles;
  LatticePath path = build_minimal(content, k, L, i, particles);
  if (path.weight() != cartan_inverse_form(content.n, unit_vector_form(content, k, i)))
    throw std::logic_error("minimal_path: weight does not match the quadratic form");
  return path;
}

QPoly partition_function(const ParticleContent& content, int k, long long L, int i, int iprime) {
  std::vector<long long> m = motion_capacities(content, k, L, i, iprime);
  QPoly z = QPoly::one();
  for (int t = 1; t <= k; ++t) {
    long long mt = m[static_cast<size_t>(t) - 1];
    long long nt = content.n[static_cast<size_t>(t) - 1];
    if (nt == 0) continue;  // no charge-t particles, so m_t is not required
    if (mt < 0) return QPoly();
    z *= gaussian_binomial(nt + mt, nt);
  }
  return z.shifted(cartan_inverse_form(content.n, unit_vector_form(content, k, i)));
}

void generate_paths(const ParticleContent& content, int k, long long L, int i, int iprime,
                    const std::function<void(const LatticePath&)>& emit) {
  std::vector<long long> m = motion_capacities(content, k, L, i, iprime);
  for (int t = 1; t <= k; ++t)
    if (content.n[static_cast<size_t>(t) - 1] > 0 && m[static_cast<size_t>(t) - 1] < 0) return;
  std::vector<std::vector<Particle>> particles;
  LatticePath path = build_minimal(content, k, L, i, particles);
  if (height(path.f, L - 1) > iprime - 1)
    throw std::logic_error("generate_paths: minimal path violates the right boundary");
  // Depth-first over admissible move counts m_t >= e_1 >= e_2 >= ... >= 0.
  auto rec = [&](auto&& self, int t, size_t l, long long cap) -> void {
    if (t > k) {
      emit(path);
      return;
    }
    auto& charge_particles = particles[static_cast<size_t>(t) - 1];
    if (l == charge_particles.size()) {
      self(self, t + 1, 0, t < k ? m[static_cast<size_t>(t)] : 0);
      return;
    }
    Particle& p = charge_particles[l];
    std::vector<Transfer> done;
    self(self, t, l + 1, 0);
    for (long long e = 1; e <= cap; ++e) {
      auto tr = forward_once(path.f, L, k, iprime, p);
      if (!tr) throw std::logic_error("generate_paths: admissible move blocked");
      done.push_back(*tr);
      self(self, t, l + 1, e);
    }
    for (auto it = done.rbegin(); it != done.rend(); ++it) undo_transfer(path.f, *it, p);
  };
  rec(rec, 1, 0, k >= 1 ? m[0] : 0);
}

ReductionResult reduce_to_minimal(const LatticePath& path, int k, int i) {
  if (i < 0) i = k + 1;
  ReductionResult res;
  res.content.n.assign(static_cast<size_t>(k), 0);
  res.moves.assign(static_cast<size_t>(k), {});
  std::vector<long long> f = path.f;
  const long long L = path.L;
  long long frontier = 0;
  for (long long t = k; t >= 1; --t) {
    std::vector<long long> counts;  // leftmost particle first
    for (;;) {
      long long found = 0;
      for (long long x = frontier + 1; x <= L - 1; ++x) {
        if (height(f, x) + height(f, x + 1) == t) {
          found = x;
          break;
        }
      }
      if (found == 0) break;
      Particle p{t, found};
      long long moves = 0;
      // A height profile can support the same pair at two adjacent columns
      // (e.g. f = (1,1,...) read as (1,2) or (2,3) for charge 2). Motion can
      // block under the wrong reading, so after every blocked run the pair is
      // re-registered at the leftmost equivalent column before retrying.
      for (;;) {
        while (backward_once(f, k, i, p)) ++moves;
        if (p.x - 1 > frontier && height(f, p.x - 1) + height(f, p.x) == t) {
          p.x -= 1;
          continue;
        }
        break;
      }
      counts.push_back(moves);
      res.content.n[static_cast<size_t>(t) - 1] += 1;
      frontier = height(f, p.x + 1) > 0 ? p.x + 1 : p.x;
    }
    // counts were collected with descending labels; store with l = 1 first
    std::reverse(counts.begin(), counts.end());
    res.moves[static_cast<size_t>(t) - 1] = std::move(counts);
  }
  for (long long x = frontier + 1; x <= L - 1; ++x)
    if (height(f, x) != 0)
      throw std::logic_error("reduce_to_minimal: residual heights after reduction");
  return res;
}

}  // namespace qgordon

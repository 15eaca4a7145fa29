#pragma once

#include "qgordon/qpoly.hpp"

namespace qgordon {

/// Gaussian binomial coefficient [L, a]_q; zero unless 0 <= a <= L.
/// Computed by the Pascal-type recurrence and memoized globally
/// (thread safe).
QPoly gaussian_binomial(long long L, long long a);

/// q-multinomial coefficient with superscript p:
/// sum over L >= j_1 >= ... >= j_k >= 0 with j_1 + ... + j_k = a of
///   q^{sum_{l<k} (L - j_l) j_{l+1} - (j_{k-p+1} + ... + j_k)}
///   [L, j_1][j_1, j_2]...[j_{k-1}, j_k].
/// Zero unless 0 <= a <= kL. Requires 0 <= p <= k, k >= 1, L >= 0.
/// Memoized globally (thread safe).
QPoly q_multinomial(long long L, long long a, int p, int k);

/// Same sum as q_multinomial but with every exponent above cap discarded
/// during the computation; the result agrees with the full coefficient list
/// of q_multinomial up to q^cap. Intended for large-L series comparisons.
QPoly q_multinomial_capped(long long L, long long a, int p, int k, long long cap);

/// The reciprocal companion q^{-aL} M(L,a,p,k; 1/q), computed directly from
/// its quadratic-exponent sum representation:
/// sum over L >= N_1 >= ... >= N_k >= 0, sum N = a of
///   q^{N_1^2 + ... + N_k^2 + N_{k-p+1} + ... + N_k}
///   [L, N_1][N_1, N_2]...[N_{k-1}, N_k].
QPoly q_multinomial_tilde(long long L, long long a, int p, int k);

/// Coefficient of x^a in (1 + x + ... + x^k)^L.
Int classical_multinomial(long long L, long long a, int k);

/// M(L,a,p) = q^{(k-p)L - a} M(L, kL-a, k-p) for 0 <= p <= k.
bool check_symmetry(long long L, long long a, int p, int k);

/// Mixed-superscript recurrence in L:
/// M(L,a,p) = sum_{m=0}^{k-p} q^{m(L-1)} M(L-1, a-m, m)
///          + sum_{m=k-p+1}^{k} q^{L(k-p)-m} M(L-1, a-m, m).   Requires L >= 1.
bool check_frec(long long L, long long a, int p, int k);

/// Tautological four-term relation for p = -1..k-1 (M with superscript -1 is 0):
/// M(L,a,p) + q^L M(L, kL-a-p-1, p+1) = M(L, kL-a-p-1, p) + q^L M(L,a,p+1).
bool check_taut(long long L, long long a, int p, int k);

/// Parity-split recurrence in L with four sums. Requires L >= 1.
bool check_qrec(long long L, long long a, int p, int k);

/// Superscript-lowering relation, 0 <= r <= p:
/// M(L,a,p) = M(L,a,p-r) + q^{L(k-p)-a} [
///   sum_{m=0}^{p-r-1} (1 - q^{rL}) q^{m(L-1)} M(L-1, kL-a-m, m)
/// + sum_{m=p-r}^{p-1} (1 - q^{(p-m)L}) q^{m(L-1)} M(L-1, kL-a-m, m) ].
/// Requires L >= 1.
bool check_pr(long long L, long long a, int p, int k, int r);

/// Telescoped relation, 0 <= M <= k:
/// sum_{m=0}^{M} q^{mL} M(L, a-m, m) = sum_{m=0}^{M} q^{mL} M(L, kL-a-m+M, m).
bool check_t2(long long L, long long a, int M, int k);

/// The two-variable polynomial p_{k,L}(x) defined by
/// p_{k,L}(x) = sum_{a=0}^{L} x^a q^{a(a-1)/2} [L, a] p_{k-1,a}(x q^L),
/// p_{0,L}(x) = 1, returned as the vector of q-coefficients of x^0, x^1, ...
std::vector<QPoly> andrews_generating_polynomial(int k, long long L);

/// Coefficient of x^a in p_{k,L}(x) equals q^{a(a-1)/2} M(L, a, 0, k) for all a.
bool check_andrews_closed_form(int k, long long L);

}  // namespace qgordon

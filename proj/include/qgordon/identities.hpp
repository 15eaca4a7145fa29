#pragma once

#include <string>

#include "qgordon/qpoly.hpp"

namespace qgordon {

/// Parameters of the polynomial identities. The multinomial base is ell
/// (ell = k for the main theorems, ell = 1 for the binomial finitization).
struct GordonParams {
  int k = 1;
  int i = 1;
  int iprime = 1;
  long long L = 0;
  int ell = 1;
};

/// Structural validity of the index ranges (independent of L).
void validate_params(const GordonParams& p);

/// The inequality ell*L >= k + ell - i - i' + 2 under which the identities
/// are claimed.
bool in_domain(const GordonParams& p);

struct RSLabels {
  int r;  // ell - i' + 1, in 0..ell
  int s;  // odd, in 1..2k+1
};
RSLabels rs_labels(const GordonParams& p);

/// Alternating j-sum of base-ell q-multinomials with superscript r; the
/// parity of r against ell*L + k selects between the two argument forms.
QPoly boson_polynomial(const GordonParams& p);

/// Truncation of boson_polynomial to order q^cap, computed with capped
/// multinomials (usable at large L where the full polynomial is infeasible).
TruncatedSeries boson_series(const GordonParams& p, long long cap);

/// Quadratic-exponent sum over particle contents n >= 0:
/// sum q^{n^T C^{-1} (n + e_k - e_{i-1})} prod_j Bin(n_j + m_j, n_j)
/// with m = C^{-1}(b - 2n), b = (L-1) e_ell + e_{i-1} + e_{i'-1} - e_k;
/// terms with any m_j < 0 contribute zero.
QPoly fermion_polynomial(const GordonParams& p);

/// The binomial finitization
/// sum_j (-1)^j q^{j((2k+3)(j+1)-2i)/2} Bin(L, floor((L-k+i-1-(2k+3)j)/2)).
QPoly fq_rhs(int k, int i, long long L);

/// Both sides of the Durfee-sum identity; lhs is the polynomial
/// sum_{a=0}^{kL} tilde-M(L,a,k-i+1,k) (full support of a), the rhs is
/// compared after cross-multiplication:
///   lhs * (q)_{2L} == [sum_j (-1)^j q^{j((2k+3)(j+1)-2i)/2} Bin(2L, L+j)] * (q)_L.
QPoly e7_lhs(int k, int i, long long L);
bool e7_check(int k, int i, long long L);

/// Coefficient agreement up to q^N between boson_polynomial(k,i,k+1,L),
/// triple_product_form(k,i) and restricted_product_series(2k+3,{0,i,2k+3-i}).
bool andrews_limit_check(int k, int i, long long N, long long L);

/// The q -> 1/q dual series pair, graded in t = q^{1/(4 ell)} and truncated
/// at grade N (exponent N/(4 ell) in q).
GradedSeries dual_lhs(int k, int ell, int i, int iprime, long long N);
GradedSeries dual_rhs(int k, int ell, int i, int iprime, long long N);

/// Verification suites ----------------------------------------------------

struct SuiteGrid {
  int k_max = 3;
  long long L_max = 10;
  long long N = 20;
  int workers = 1;
  nlohmann::json to_json() const;
};

struct Witness {
  nlohmann::json params;
  nlohmann::json lhs;
  nlohmann::json rhs;
};

struct IdentityReport {
  std::string suite;
  SuiteGrid grid;
  long long points_checked = 0;
  bool pass = false;
  std::vector<Witness> witnesses;
  nlohmann::json notes;      // suite-specific extra results (report-only runs)
  long long elapsed_ms = 0;  // not serialized; reports are byte-reproducible

  nlohmann::json to_json() const;
};

/// Names of the public verification suites, in stable order.
const std::vector<std::string>& suite_names();

/// Runs a named suite over the grid. The internal name "self-test-corrupt"
/// runs a deliberately corrupted comparison and must fail with one witness.
IdentityReport run_suite(const std::string& name, const SuiteGrid& grid);

}  // namespace qgordon

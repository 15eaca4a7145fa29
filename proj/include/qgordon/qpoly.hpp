#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include <json.hpp>

namespace qgordon {

using Int = boost::multiprecision::cpp_int;

/// Laurent polynomial in the formal variable q with arbitrary-precision
/// integer coefficients. Values are immutable once constructed; all
/// arithmetic is exact. The zero polynomial is the unique empty
/// representation, and the first and last stored coefficients of a nonzero
/// polynomial are nonzero (canonical form).
class QPoly {
 public:
  QPoly() = default;
  QPoly(long long min_exp, std::vector<Int> coeffs);

  static QPoly zero() { return QPoly(); }
  static QPoly one() { return monomial(1, 0); }
  static QPoly monomial(Int c, long long exp);

  bool is_zero() const { return coeffs_.empty(); }
  /// Lowest exponent with nonzero coefficient. Precondition: !is_zero().
  long long min_exp() const { return min_exp_; }
  /// Highest exponent with nonzero coefficient. Precondition: !is_zero().
  long long max_exp() const {
    return min_exp_ + static_cast<long long>(coeffs_.size()) - 1;
  }
  /// Coefficient of q^exp (zero outside the stored range).
  Int coeff(long long exp) const;
  const std::vector<Int>& coeffs() const { return coeffs_; }

  /// Multiplication by the monomial q^exp.
  QPoly shifted(long long exp) const;
  /// q^d * p(1/q): sends each exponent e to d - e. An involution for fixed d.
  QPoly reciprocal(long long d) const;
  /// Value at q = 1 (sum of coefficients).
  Int eval_at_one() const;

  friend QPoly operator+(const QPoly& a, const QPoly& b);
  friend QPoly operator-(const QPoly& a, const QPoly& b);
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  QPoly operator-() const;
  QPoly& operator+=(const QPoly& b) { return *this = *this + b; }
  QPoly& operator-=(const QPoly& b) { return *this = *this - b; }
  QPoly& operator*=(const QPoly& b) { return *this = *this * b; }
  bool operator==(const QPoly& b) const = default;

  /// Human-readable rendering with ascending exponents, e.g. "1 + q + 2*q^2".
  std::string str() const;
  /// {"min_exp": int, "coeffs": [decimal strings]}.
  nlohmann::json to_json() const;
  static QPoly from_json(const nlohmann::json& j);

 private:
  void trim();

  long long min_exp_ = 0;
  std::vector<Int> coeffs_;  // coefficient of q^(min_exp_ + idx)
};

/// Power series in q truncated at a fixed order N: exponents above N are
/// discarded by every operation. Coefficients are exact integers.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(long long order)
      : coeffs_(static_cast<size_t>(order) + 1) {}
  TruncatedSeries(long long order, std::vector<Int> coeffs);

  static TruncatedSeries one(long long order);
  /// Truncation of a polynomial. Negative exponents are rejected.
  static TruncatedSeries from_poly(const QPoly& p, long long order);

  long long order() const { return static_cast<long long>(coeffs_.size()) - 1; }
  const Int& coeff(long long n) const { return coeffs_.at(static_cast<size_t>(n)); }
  Int& coeff(long long n) { return coeffs_.at(static_cast<size_t>(n)); }
  const std::vector<Int>& coeffs() const { return coeffs_; }

  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  TruncatedSeries& operator+=(const TruncatedSeries& b) { return *this = *this + b; }
  TruncatedSeries& operator*=(const TruncatedSeries& b) { return *this = *this * b; }
  bool operator==(const TruncatedSeries& b) const = default;

  /// Multiplicative inverse to the same order; the constant term must be +-1.
  TruncatedSeries inverse() const;

  std::string str() const;

 private:
  std::vector<Int> coeffs_;  // q^0 .. q^N
};

/// Truncated series in t = q^(1/D) for a positive integer denominator D,
/// with an optional leading offset: the series is t^offset * body, where the
/// offset may be negative. Two graded series are equal iff their coefficients
/// agree at every exponent up to the common truncation order after rescaling
/// to the least common denominator.
class GradedSeries {
 public:
  GradedSeries(long long denominator, TruncatedSeries body);
  GradedSeries(long long denominator, long long offset, TruncatedSeries body);

  long long denominator() const { return denominator_; }
  long long offset() const { return offset_; }
  const TruncatedSeries& body() const { return body_; }
  /// Coefficient at t-exponent e (zero outside the stored window).
  const Int& coeff_at(long long e) const;
  /// Largest stored t-exponent, offset + body order.
  long long top() const { return offset_ + body_.order(); }

  /// Same series expressed in t = q^(1/(D*factor)).
  GradedSeries rescaled(long long factor) const;
  bool equals(const GradedSeries& other) const;
  /// If *this == q^(num/den) * other coefficient-by-coefficient up to the
  /// common truncation, returns the reduced exponent (num, den); otherwise
  /// nothing. Equal series give (0, 1).
  std::optional<std::pair<long long, long long>> monomial_quotient(
      const GradedSeries& other) const;

  std::string str() const;

 private:
  long long denominator_;
  long long offset_ = 0;
  TruncatedSeries body_;
};

/// (q)_n = prod_{j=1}^n (1 - q^j), with (q)_0 = 1.
QPoly pochhammer(long long n);

/// Truncation to order N of prod (1 - q^j)^{-1} over j >= 1 with
/// j mod modulus not in excluded_residues. An empty allowed residue set
/// yields the constant series 1.
TruncatedSeries restricted_product_series(long long modulus,
                                          const std::set<long long>& excluded_residues,
                                          long long order);

/// Truncation to order N of the triple-product rewriting
/// (q)_inf^{-1} sum_j (-1)^j q^{j((2k+3)(j+1)-2i)/2}.
TruncatedSeries triple_product_form(int k, int i, long long order);

/// Truncation to order N of 1/(q)_inf.
TruncatedSeries inverse_euler_series(long long order);

/// Truncation to order N of 1/(q)_n.
TruncatedSeries inverse_pochhammer_series(long long n, long long order);

/// Exponent reversal e -> d - e; see QPoly::reciprocal.
QPoly reciprocal_transform(const QPoly& p, long long d);

}  // namespace qgordon

#include "qgordon/qpoly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qgordon {

QPoly::QPoly(long long min_exp, std::vector<Int> coeffs)
    : min_exp_(min_exp), coeffs_(std::move(coeffs)) {
  trim();
}

QPoly QPoly::monomial(Int c, long long exp) {
  if (c == 0) return QPoly();
  QPoly p;
  p.min_exp_ = exp;
  p.coeffs_ = {std::move(c)};
  return p;
}

void QPoly::trim() {
  size_t lead = 0;
  while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
  size_t tail = coeffs_.size();
  while (tail > lead && coeffs_[tail - 1] == 0) --tail;
  if (lead == tail) {
    coeffs_.clear();
    min_exp_ = 0;
    return;
  }
  if (lead > 0 || tail < coeffs_.size()) {
    coeffs_ = std::vector<Int>(coeffs_.begin() + lead, coeffs_.begin() + tail);
    min_exp_ += static_cast<long long>(lead);
  }
}

Int QPoly::coeff(long long exp) const {
  if (is_zero() || exp < min_exp_ || exp > max_exp()) return 0;
  return coeffs_[static_cast<size_t>(exp - min_exp_)];
}

QPoly QPoly::shifted(long long exp) const {
  QPoly p = *this;
  if (!p.is_zero()) p.min_exp_ += exp;
  return p;
}

QPoly QPoly::reciprocal(long long d) const {
  if (is_zero()) return QPoly();
  std::vector<Int> rev(coeffs_.rbegin(), coeffs_.rend());
  return QPoly(d - max_exp(), std::move(rev));
}

Int QPoly::eval_at_one() const {
  Int s = 0;
  for (const Int& c : coeffs_) s += c;
  return s;
}

QPoly operator+(const QPoly& a, const QPoly& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  long long lo = std::min(a.min_exp_, b.min_exp_);
  long long hi = std::max(a.max_exp(), b.max_exp());
  std::vector<Int> c(static_cast<size_t>(hi - lo + 1));
  for (size_t i = 0; i < a.coeffs_.size(); ++i)
    c[static_cast<size_t>(a.min_exp_ - lo) + i] += a.coeffs_[i];
  for (size_t i = 0; i < b.coeffs_.size(); ++i)
    c[static_cast<size_t>(b.min_exp_ - lo) + i] += b.coeffs_[i];
  return QPoly(lo, std::move(c));
}

QPoly QPoly::operator-() const {
  QPoly p = *this;
  for (Int& c : p.coeffs_) c = -c;
  return p;
}

QPoly operator-(const QPoly& a, const QPoly& b) { return a + (-b); }

QPoly operator*(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return QPoly();
  std::vector<Int> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (size_t j = 0; j < b.coeffs_.size(); ++j) {
      if (b.coeffs_[j] == 0) continue;
      c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return QPoly(a.min_exp_ + b.min_exp_, std::move(c));
}

namespace {

void append_term(std::ostringstream& out, bool& first, const Int& c, long long e,
                 const std::string& var) {
  Int abs_c = c < 0 ? Int(-c) : c;
  if (first) {
    if (c < 0) out << "-";
    first = false;
  } else {
    out << (c < 0 ? " - " : " + ");
  }
  if (e == 0) {
    out << abs_c;
    return;
  }
  if (abs_c != 1) out << abs_c << "*";
  out << var;
  if (e != 1) out << "^" << e;
}

}  // namespace

std::string QPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    append_term(out, first, coeffs_[i], min_exp_ + static_cast<long long>(i), "q");
  }
  return out.str();
}

nlohmann::json QPoly::to_json() const {
  nlohmann::json j;
  j["min_exp"] = min_exp_;
  auto arr = nlohmann::json::array();
  for (const Int& c : coeffs_) arr.push_back(c.str());
  j["coeffs"] = std::move(arr);
  return j;
}

QPoly QPoly::from_json(const nlohmann::json& j) {
  std::vector<Int> coeffs;
  for (const auto& s : j.at("coeffs")) coeffs.emplace_back(s.get<std::string>());
  return QPoly(j.at("min_exp").get<long long>(), std::move(coeffs));
}

TruncatedSeries::TruncatedSeries(long long order, std::vector<Int> coeffs)
    : coeffs_(std::move(coeffs)) {
  if (order < 0) throw std::invalid_argument("series order must be nonnegative");
  coeffs_.resize(static_cast<size_t>(order) + 1);
}

TruncatedSeries TruncatedSeries::one(long long order) {
  TruncatedSeries s(order);
  s.coeffs_[0] = 1;
  return s;
}

TruncatedSeries TruncatedSeries::from_poly(const QPoly& p, long long order) {
  if (!p.is_zero() && p.min_exp() < 0)
    throw std::invalid_argument("cannot truncate a polynomial with negative exponents");
  TruncatedSeries s(order);
  if (!p.is_zero()) {
    long long hi = std::min(order, p.max_exp());
    for (long long e = p.min_exp(); e <= hi; ++e) s.coeffs_[static_cast<size_t>(e)] = p.coeff(e);
  }
  return s;
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.order() != b.order()) throw std::invalid_argument("series order mismatch");
  TruncatedSeries s = a;
  for (size_t i = 0; i < s.coeffs_.size(); ++i) s.coeffs_[i] += b.coeffs_[i];
  return s;
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.order() != b.order()) throw std::invalid_argument("series order mismatch");
  TruncatedSeries s = a;
  for (size_t i = 0; i < s.coeffs_.size(); ++i) s.coeffs_[i] -= b.coeffs_[i];
  return s;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.order() != b.order()) throw std::invalid_argument("series order mismatch");
  TruncatedSeries s(a.order());
  for (size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (size_t j = 0; i + j < s.coeffs_.size(); ++j) {
      if (b.coeffs_[j] == 0) continue;
      s.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return s;
}

TruncatedSeries TruncatedSeries::inverse() const {
  const Int& c0 = coeffs_[0];
  if (c0 != 1 && c0 != -1)
    throw std::invalid_argument("series inverse requires constant term +-1");
  TruncatedSeries inv(order());
  inv.coeffs_[0] = c0;  // 1/c0 = c0 for units
  for (size_t n = 1; n < coeffs_.size(); ++n) {
    Int acc = 0;
    for (size_t j = 1; j <= n; ++j) acc += coeffs_[j] * inv.coeffs_[n - j];
    inv.coeffs_[n] = -acc * c0;
  }
  return inv;
}

std::string TruncatedSeries::str() const {
  std::ostringstream out;
  bool first = true;
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    append_term(out, first, coeffs_[i], static_cast<long long>(i), "q");
  }
  if (first) out << "0";
  out << " + O(q^" << order() + 1 << ")";
  return out.str();
}

GradedSeries::GradedSeries(long long denominator, TruncatedSeries body)
    : denominator_(denominator), body_(std::move(body)) {
  if (denominator_ <= 0) throw std::invalid_argument("denominator must be positive");
}

GradedSeries::GradedSeries(long long denominator, long long offset, TruncatedSeries body)
    : denominator_(denominator), offset_(offset), body_(std::move(body)) {
  if (denominator_ <= 0) throw std::invalid_argument("denominator must be positive");
}

const Int& GradedSeries::coeff_at(long long e) const {
  static const Int zero = 0;
  if (e < offset_ || e > top()) return zero;
  return body_.coeff(e - offset_);
}

GradedSeries GradedSeries::rescaled(long long factor) const {
  if (factor <= 0) throw std::invalid_argument("rescale factor must be positive");
  TruncatedSeries b(body_.order() * factor + factor - 1);
  for (long long n = 0; n <= body_.order(); ++n) b.coeff(n * factor) = body_.coeff(n);
  return GradedSeries(denominator_ * factor, offset_ * factor, std::move(b));
}

namespace {
std::pair<GradedSeries, GradedSeries> common_denominator(const GradedSeries& a,
                                                         const GradedSeries& b) {
  long long g = std::gcd(a.denominator(), b.denominator());
  long long l = a.denominator() / g * b.denominator();
  return {a.rescaled(l / a.denominator()), b.rescaled(l / b.denominator())};
}
}  // namespace

bool GradedSeries::equals(const GradedSeries& other) const {
  auto [a, b] = common_denominator(*this, other);
  long long hi = std::min(a.top(), b.top());
  for (long long e = std::min(a.offset(), b.offset()); e <= hi; ++e)
    if (a.coeff_at(e) != b.coeff_at(e)) return false;
  return true;
}

std::optional<std::pair<long long, long long>> GradedSeries::monomial_quotient(
    const GradedSeries& other) const {
  auto [a, b] = common_denominator(*this, other);
  auto leading = [](const GradedSeries& s) -> std::optional<long long> {
    for (long long e = s.offset(); e <= s.top(); ++e)
      if (s.coeff_at(e) != 0) return e;
    return std::nullopt;
  };
  auto la = leading(a), lb = leading(b);
  if (!la && !lb) return std::make_pair(0LL, 1LL);
  if (!la || !lb) return std::nullopt;
  long long shift = *la - *lb;
  long long span = std::min(a.top() - *la, b.top() - *lb);
  for (long long e = 0; e <= span; ++e)
    if (a.coeff_at(*la + e) != b.coeff_at(*lb + e)) return std::nullopt;
  long long g = std::gcd(std::abs(shift), a.denominator());
  return std::make_pair(shift / g, a.denominator() / g);
}

std::string GradedSeries::str() const {
  std::ostringstream out;
  bool first = true;
  const auto& c = body_.coeffs();
  for (size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    long long num = offset_ + static_cast<long long>(i);
    long long g = std::gcd(num, denominator_);
    long long rn = num / g, rd = denominator_ / g;
    Int abs_c = c[i] < 0 ? Int(-c[i]) : c[i];
    if (first) {
      if (c[i] < 0) out << "-";
      first = false;
    } else {
      out << (c[i] < 0 ? " - " : " + ");
    }
    if (num == 0) {
      out << abs_c;
      continue;
    }
    if (abs_c != 1) out << abs_c << "*";
    if (rd == 1) {
      out << "q";
      if (rn != 1) out << "^" << rn;
    } else {
      out << "q^(" << rn << "/" << rd << ")";
    }
  }
  if (first) out << "0";
  out << " + O(q^(" << top() + 1 << "/" << denominator_ << "))";
  return out.str();
}

QPoly pochhammer(long long n) {
  if (n < 0) throw std::invalid_argument("pochhammer index must be nonnegative");
  QPoly p = QPoly::one();
  for (long long j = 1; j <= n; ++j)
    p *= QPoly::one() - QPoly::monomial(1, j);
  return p;
}

TruncatedSeries restricted_product_series(long long modulus,
                                          const std::set<long long>& excluded_residues,
                                          long long order) {
  if (modulus < 1) throw std::invalid_argument("modulus must be positive");
  // Unbounded knapsack over the allowed part sizes.
  TruncatedSeries s = TruncatedSeries::one(order);
  for (long long part = 1; part <= order; ++part) {
    if (excluded_residues.count(part % modulus)) continue;
    for (long long n = part; n <= order; ++n) s.coeff(n) += s.coeff(n - part);
  }
  return s;
}

TruncatedSeries inverse_euler_series(long long order) {
  return restricted_product_series(1, {}, order);
}

TruncatedSeries inverse_pochhammer_series(long long n, long long order) {
  if (n < 0) throw std::invalid_argument("pochhammer index must be nonnegative");
  // Partitions with parts of size at most n.
  TruncatedSeries s = TruncatedSeries::one(order);
  for (long long part = 1; part <= std::min(n, order); ++part)
    for (long long m = part; m <= order; ++m) s.coeff(m) += s.coeff(m - part);
  return s;
}

TruncatedSeries triple_product_form(int k, int i, long long order) {
  if (k < 1 || i < 1 || i > k + 1) throw std::invalid_argument("need 1 <= i <= k+1");
  QPoly alt = QPoly::zero();
  const long long m = 2 * k + 3;
  for (long long j = -(order + m);; ++j) {
    // j((2k+3)(j+1) - 2i)/2 is integral since (2k+3)(j+1) - 2i = j mod 2.
    long long num = j * (m * (j + 1) - 2 * i);
    long long e = num / 2;
    if (j > 0 && e > order) break;
    if (e <= order && e >= 0)
      alt += QPoly::monomial((j % 2 == 0) ? 1 : -1, e);
  }
  return inverse_euler_series(order) * TruncatedSeries::from_poly(alt, order);
}

QPoly reciprocal_transform(const QPoly& p, long long d) { return p.reciprocal(d); }

}  // namespace qgordon

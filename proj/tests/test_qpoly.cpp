#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qgordon/qpoly.hpp"

using namespace qgordon;

namespace {
QPoly from_coeffs(long long min_exp, std::vector<long long> v) {
  std::vector<Int> c(v.begin(), v.end());
  return QPoly(min_exp, std::move(c));
}
}  // namespace

TEST_CASE("QPoly construction and canonical form") {
  CHECK(QPoly::zero().is_zero());
  CHECK(QPoly::one() == QPoly::monomial(1, 0));
  // leading/trailing zeros are trimmed
  QPoly p = from_coeffs(-1, {0, 1, 1, 0});
  CHECK(p.min_exp() == 0);
  CHECK(p.max_exp() == 1);
  CHECK(p.coeff(0) == 1);
  CHECK(p.coeff(1) == 1);
  CHECK(p.coeff(5) == 0);
  CHECK(p.coeff(-3) == 0);
  // a vector of zeros collapses to the zero polynomial
  CHECK(from_coeffs(2, {0, 0}).is_zero());
}

TEST_CASE("QPoly arithmetic") {
  QPoly one_plus_q = from_coeffs(0, {1, 1});
  CHECK(one_plus_q * one_plus_q == from_coeffs(0, {1, 2, 1}));
  CHECK((QPoly::zero() * one_plus_q).is_zero());
  // q^-1 (1+q) * q = 1+q
  CHECK(one_plus_q.shifted(-1) * QPoly::monomial(1, 1) == one_plus_q);
  CHECK(one_plus_q - one_plus_q == QPoly::zero());
  CHECK(-one_plus_q == from_coeffs(0, {-1, -1}));
  CHECK(one_plus_q + (-one_plus_q) == QPoly::zero());
  QPoly p = from_coeffs(-2, {1, 0, 3});
  CHECK(p.eval_at_one() == 4);
  CHECK(p.shifted(2) == from_coeffs(0, {1, 0, 3}));
}

TEST_CASE("QPoly reciprocal is an exponent reversal and an involution") {
  QPoly self = from_coeffs(0, {1, 1});
  CHECK(reciprocal_transform(self, 1) == self);
  QPoly p = from_coeffs(0, {1, 2, 0, 1});
  CHECK(reciprocal_transform(p, 3) == from_coeffs(0, {1, 0, 2, 1}));
  for (long long d : {-1, 0, 2, 5})
    CHECK(reciprocal_transform(reciprocal_transform(p, d), d) == p);
  CHECK(p.reciprocal(3) == reciprocal_transform(p, 3));
}

TEST_CASE("QPoly rendering and JSON round trip") {
  QPoly p = from_coeffs(0, {1, 1, 2});
  CHECK(p.str() == "1 + q + 2*q^2");
  CHECK(QPoly::from_json(p.to_json()) == p);
  QPoly laurent = from_coeffs(-1, {1, 0, -3});
  CHECK(QPoly::from_json(laurent.to_json()) == laurent);
  CHECK(QPoly::from_json(QPoly::zero().to_json()).is_zero());
}

TEST_CASE("pochhammer") {
  CHECK(pochhammer(0) == QPoly::one());
  CHECK(pochhammer(1) == from_coeffs(0, {1, -1}));
  // frozen oracle: (1-q)(1-q^2) = 1 - q - q^2 + q^3
  CHECK(pochhammer(2) == from_coeffs(0, {1, -1, -1, 1}));
  CHECK(pochhammer(5) == pochhammer(4) * from_coeffs(0, {1, 0, 0, 0, 0, -1}));
}

TEST_CASE("TruncatedSeries arithmetic and inverse") {
  TruncatedSeries a = TruncatedSeries::from_poly(pochhammer(3), 10);
  TruncatedSeries inv = a.inverse();
  CHECK(a * inv == TruncatedSeries::one(10));
  CHECK(inverse_pochhammer_series(3, 10) == inv);
  // 1/(q)_inf starts with the partition numbers
  TruncatedSeries euler = inverse_euler_series(8);
  std::vector<long long> partitions = {1, 1, 2, 3, 5, 7, 11, 15, 22};
  for (long long n = 0; n <= 8; ++n) CHECK(euler.coeff(n) == partitions[(size_t)n]);
}

TEST_CASE("restricted_product_series oracles") {
  // partitions into parts congruent to +-1 mod 5
  TruncatedSeries s = restricted_product_series(5, {0, 2, 3}, 5);
  std::vector<long long> expect = {1, 1, 1, 1, 2, 2};
  for (long long n = 0; n <= 5; ++n) CHECK(s.coeff(n) == expect[(size_t)n]);
  // partitions into odd parts
  TruncatedSeries odd = restricted_product_series(2, {0}, 4);
  std::vector<long long> expect_odd = {1, 1, 1, 2, 2};
  for (long long n = 0; n <= 4; ++n) CHECK(odd.coeff(n) == expect_odd[(size_t)n]);
  // every residue excluded: empty product
  CHECK(restricted_product_series(3, {0, 1, 2}, 6) == TruncatedSeries::one(6));
}

TEST_CASE("triple_product_form matches the restricted products") {
  CHECK(triple_product_form(1, 2, 10) == restricted_product_series(5, {0, 2, 3}, 10));
  CHECK(triple_product_form(2, 3, 8) == restricted_product_series(7, {0, 3, 4}, 8));
  CHECK(triple_product_form(3, 1, 0) == TruncatedSeries::one(0));
}

TEST_CASE("GradedSeries rescaling, equality, monomial quotients") {
  // q + q^2 at two different grain sizes
  TruncatedSeries body(8);
  body.coeff(4) = 1;
  body.coeff(8) = 1;
  GradedSeries a(4, body);
  TruncatedSeries body2(16);
  body2.coeff(8) = 1;
  body2.coeff(16) = 1;
  GradedSeries b(8, body2);
  CHECK(a.equals(b));
  CHECK(b.equals(a));
  CHECK(a.rescaled(2).denominator() == 8);
  CHECK(a.rescaled(2).equals(a));
  auto same = a.monomial_quotient(b);
  REQUIRE(same.has_value());
  CHECK(same->first == 0);
  CHECK(same->second == 1);
  // q^(1/2) * a differs by exactly that monomial
  GradedSeries c(4, 2, body);
  auto shift = c.monomial_quotient(a);
  REQUIRE(shift.has_value());
  CHECK(shift->first == 1);
  CHECK(shift->second == 2);
  CHECK_FALSE(c.equals(a));
  // structurally different series have no quotient
  TruncatedSeries body3(8);
  body3.coeff(4) = 1;
  body3.coeff(8) = 2;
  CHECK_FALSE(a.monomial_quotient(GradedSeries(4, body3)).has_value());
}

TEST_CASE("GradedSeries supports negative leading offsets") {
  TruncatedSeries body(4);
  body.coeff(0) = 1;
  body.coeff(4) = 1;
  GradedSeries a(4, -4, body);  // q^-1 + 1
  CHECK(a.offset() == -4);
  CHECK(a.coeff_at(-4) == 1);
  CHECK(a.coeff_at(0) == 1);
  CHECK(a.coeff_at(2) == 0);
  CHECK(a.top() == 0);
}

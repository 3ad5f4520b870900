#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>

#include "qdual/residue.hpp"

using namespace qdual;

namespace {

const Rational kOne(1);

IntegrandSpec<Rational> spec237(int d, int l) {
  IntegrandSpec<Rational> s;
  s.point = make_parameter_point<Rational>(Rational(1, 2),
                                           {Rational(2), Rational(3), Rational(7)}, 8);
  s.r = 2;
  s.d = d;
  s.l = l;
  return s;
}

}  // namespace

TEST_CASE("integrand f: d=1 closed form and pole errors") {
  auto s = spec237(1, 0);
  const Rational q = s.point.q, x1 = s.point.x[0], x2 = s.point.x[1], x3 = s.point.x[2];
  std::array<Rational, 1> w{Rational(5)};
  Rational expected = (kOne / w[0]) / ((kOne - q) * (kOne - x1 / w[0]) *
                                       (kOne - x2 / w[0]) * (kOne - q * w[0] / x3));
  CHECK(integrand_f<Rational>(s, w) == expected);

  std::array<Rational, 1> at_pole{x1};
  CHECK_THROWS_AS(integrand_f<Rational>(s, at_pole), std::domain_error);
  std::array<Rational, 1> at_outer_pole{x3 / q};
  CHECK_THROWS_AS(integrand_f<Rational>(s, at_outer_pole), std::domain_error);
}

TEST_CASE("integrand f: symmetric in its arguments and matches the d=2 product form") {
  auto s = spec237(2, 0);
  const Rational q = s.point.q, x1 = s.point.x[0], x2 = s.point.x[1], x3 = s.point.x[2];
  std::array<Rational, 2> w{Rational(5), Rational(11)};
  std::array<Rational, 2> wr{Rational(11), Rational(5)};
  Rational v = integrand_f<Rational>(s, w);
  CHECK(v == integrand_f<Rational>(s, wr));

  // product form: 1/(2(1-q)^2) prod_{i!=j} (1 - w_i/w_j)/(1 - q w_i/w_j)
  //               prod_i w_i^{-1} / ((1-x1/w_i)(1-x2/w_i)(1-q w_i/x3))
  Rational disp = kOne / (Rational(2) * (kOne - q) * (kOne - q));
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      if (i == j) continue;
      disp = disp * (kOne - w[static_cast<size_t>(i)] / w[static_cast<size_t>(j)]) /
             (kOne - q * w[static_cast<size_t>(i)] / w[static_cast<size_t>(j)]);
    }
  for (int i = 0; i < 2; ++i) {
    Rational wi = w[static_cast<size_t>(i)];
    disp = disp / (wi * (kOne - x1 / wi) * (kOne - x2 / wi) * (kOne - q * wi / x3));
  }
  CHECK(v == disp);
}

TEST_CASE("residue summands reproduce the worked d=1 closed forms") {
  auto s = spec237(1, 0);
  const Rational q = s.point.q, x1 = s.point.x[0], x2 = s.point.x[1], x3 = s.point.x[2];
  // d! = 1 here
  CHECK(residue_summand_E(s, Composition({1, 0})) ==
        kOne / ((kOne - q) * (kOne - x2 / x1) * (kOne - q * x1 / x3)));
  CHECK(residue_summand_E(s, Composition({0, 1})) ==
        kOne / ((kOne - q) * (kOne - x1 / x2) * (kOne - q * x2 / x3)));
  CHECK(residue_summand_F(s, Composition({1})) ==
        -kOne / ((kOne - q) * (kOne - q * x1 / x3) * (kOne - q * x2 / x3)));
}

TEST_CASE("residue summands reproduce the worked d=2 closed forms") {
  auto s = spec237(2, 0);
  const Rational q = s.point.q, x1 = s.point.x[0], x2 = s.point.x[1], x3 = s.point.x[2];
  const Rational q2 = q * q;
  const Rational two(2);

  Rational e20 = two * residue_summand_E(s, Composition({2, 0}));
  CHECK(e20 == kOne / ((kOne - q) * (kOne - q) * (kOne + q) * (kOne - q2 * x1 / x3) *
                       (kOne - q * x1 / x3) * (kOne - x2 / (q * x1)) * (kOne - x2 / x1)));

  Rational e11 = two * residue_summand_E(s, Composition({1, 1}));
  CHECK(e11 == kOne / ((kOne - q) * (kOne - q) * (kOne - q * x1 / x2) * (kOne - q * x2 / x1) *
                       (kOne - q * x1 / x3) * (kOne - q * x2 / x3)));

  Rational e02 = two * residue_summand_E(s, Composition({0, 2}));
  CHECK(e02 == kOne / ((kOne - q) * (kOne - q) * (kOne + q) * (kOne - x1 / (q * x2)) *
                       (kOne - q2 * x2 / x3) * (kOne - x1 / x2) * (kOne - q * x2 / x3)));

  // type 2 of the reversed contour: (-1)^2 2! F_{(2)}
  Rational f2 = two * residue_summand_F(s, Composition({2}));
  CHECK(f2 == kOne / ((kOne + q) * (kOne - q) * (kOne - q) * (kOne - q2 * x1 / x3) *
                      (kOne - q * x1 / x3) * (kOne - q2 * x2 / x3) * (kOne - q * x2 / x3)));

  CHECK_THROWS_AS(residue_summand_E(s, Composition({1, 0})), std::invalid_argument);
  CHECK_THROWS_AS(residue_summand_F(s, Composition({1, 1})), std::invalid_argument);
}

TEST_CASE("per-composition equivalence with the A-side summand") {
  for (int d = 0; d <= 4; ++d)
    for (int l : {-1, 0, 1, 2}) {
      auto s = spec237(d, l);
      IndexSubset I = IndexSubset::prefix(3, 2);
      const Rational fact(static_cast<long>(factorial_ll(d)));
      for (const Composition& c : weak_compositions(d, 2))
        CHECK(fact * residue_summand_E(s, c) == a_summand(s.point, I, l, c));
    }
}

TEST_CASE("assembly contracts: E_d = A_d, F_d = (-1)^d B_d, orientation") {
  for (std::uint64_t seed = 0; seed < 3; ++seed) {
    auto pt = sample_rational_point(4, 7, derive_seed(55, seed));
    for (int r : {1, 2, 3})
      for (int d = 0; d <= 3; ++d)
        for (int l = 1 - r; l <= 4 - r - 1; ++l) {
          IntegrandSpec<Rational> s{pt, r, d, l};
          IndexSubset I = IndexSubset::prefix(4, r);
          Rational e = assemble_E(s);
          Rational f = assemble_F(s);
          CHECK(e == a_sum(pt, I, l, d));
          Rational sign = d % 2 == 0 ? kOne : -kOne;
          CHECK(sign * f == b_sum(pt, I.complement(), -l, d));
          CHECK(e == sign * f);  // the interior identity, composed
        }
  }
  // d = 0 normalization
  auto s0 = spec237(0, 1);
  CHECK(assemble_E(s0) == kOne);
  CHECK(assemble_F(s0) == kOne);
  CHECK(residue_summand_E(s0, Composition({0, 0})) == kOne);
  CHECK(residue_summand_F(s0, Composition({0})) == kOne);
}

TEST_CASE("P_d: convention, worked value, bridge identity") {
  Rational q(3, 7);
  CHECK(p_norm(0, q) == kOne);
  CHECK(p_norm(1, q) == kOne);
  CHECK(p_norm(2, q) * qfactorial(q, 2) == (kOne - q) * (kOne - q));
  // P_2/(1-q)^2 = 1/((1-q)(1-q^2))
  CHECK(p_norm(2, q) / ((kOne - q) * (kOne - q)) ==
        kOne / ((kOne - q) * (kOne - q * q)));
  const Rational one_minus_q = kOne - q;
  for (int d = 0; d <= 10; ++d) {
    Rational lhs = p_norm(d, q) / field_pow(one_minus_q, d) * qfactorial(q, d);
    CHECK(lhs == kOne);
  }
  PrimeField qp(17, 61);
  for (int d = 0; d <= 10; ++d) {
    PrimeField one(1, 61);
    PrimeField diff = one - qp;
    CHECK(p_norm(d, qp) / field_pow(diff, d) * qfactorial(qp, d) == one);
  }
}

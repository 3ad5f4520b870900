/**
 * @file residue.hpp
 * @brief Independent verification path: the symmetric integrand f, the
 *        closed-form iterated-residue summands E_d / F_d, and their assembly.
 *
 * The A-side set is the prefix {1..r}. Contracts (exact, per degree):
 *   assemble_E == a_sum(x, {1..r}, l, d)
 *   assemble_F == (-1)^d * b_sum(x, {r+1..n}, -l, d)
 * which compose to the interior duality identity when l lies in the window.
 */
#pragma once

#include <span>
#include <stdexcept>

#include "qdual/compositions.hpp"
#include "qdual/duality.hpp"
#include "qdual/qseries.hpp"
#include "qdual/sampling.hpp"

namespace qdual {

template <FieldScalar T>
struct IntegrandSpec {
  ParameterPoint<T> point;
  int r = 1;  // A-side set {1..r}
  int d = 1;
  int l = 0;
};

template <FieldScalar T>
void validate_spec(const IntegrandSpec<T>& spec) {
  if (spec.r < 1 || spec.r >= spec.point.n)
    throw std::invalid_argument("IntegrandSpec: need 1 <= r <= n-1");
  if (spec.d < 0) throw std::invalid_argument("IntegrandSpec: d < 0");
}

inline long long factorial_ll(int d) {
  if (d < 0 || d > 20) throw std::invalid_argument("factorial_ll: d out of [0,20]");
  long long f = 1;
  for (int k = 2; k <= d; ++k) f *= k;
  return f;
}

/// f(w_1..w_d) = 1/((1-q)^d d!) * prod_{i != j} (w_i - w_j)/(w_i - q w_j)
///   * prod_i w_i^{l-1} / (prod_{j<=r} (1 - x_j/w_i) * prod_{j>r} (1 - q w_i/x_j)).
template <FieldScalar T>
T integrand_f(const IntegrandSpec<T>& spec, std::span<const T> w) {
  validate_spec(spec);
  const int d = static_cast<int>(w.size());
  if (d != spec.d) throw std::invalid_argument("integrand_f: |w| != d");
  const ParameterPoint<T>& pt = spec.point;
  const T one = one_like(pt.q);
  const T one_minus_q = one - pt.q;
  T acc = field_pow(one_minus_q, -static_cast<long long>(d)) /
          scalar_from_int(factorial_ll(d), pt.q);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      if (i == j) continue;
      T den = w[i] - pt.q * w[j];
      if (is_zero(den)) throw std::domain_error("integrand_f: w_i = q*w_j pole");
      acc = acc * (w[i] - w[j]) / den;
    }
  }
  for (int i = 0; i < d; ++i) {
    if (is_zero(w[i])) throw std::domain_error("integrand_f: w_i = 0");
    T den = one;
    for (int j = 1; j <= spec.r; ++j) {
      T factor = one - pt.x[j - 1] / w[i];
      if (is_zero(factor)) throw std::domain_error("integrand_f: w_i = x_j pole");
      den = den * factor;
    }
    for (int j = spec.r + 1; j <= pt.n; ++j) {
      T factor = one - pt.q * w[i] / pt.x[j - 1];
      if (is_zero(factor)) throw std::domain_error("integrand_f: w_i = x_j/q pole");
      den = den * factor;
    }
    acc = acc * field_pow(w[i], spec.l - 1) / den;
  }
  return acc;
}

/// E_{d⃗} for a composition over {1..r}, assembled as E1*E2*E3 / d!:
///   E1 = prod_{i<=r, j>r} 1/(q x_ij; q)_{d_i}
///   E2 = prod_i 1/(q;q)_{d_i}
///   E3 = prod_i x_i^{l d_i} q^{l d_i(d_i-1)/2} * prod_{i != j} 1/(q^{d_ij+1} x_ij; q)_{d_j}
/// so that d! * E_{d⃗} is exactly the per-type residue closed form.
template <FieldScalar T>
T residue_summand_E(const IntegrandSpec<T>& spec, const Composition& c) {
  validate_spec(spec);
  if (c.size() != spec.r || c.degree() != spec.d)
    throw std::invalid_argument("residue_summand_E: composition shape mismatch");
  const ParameterPoint<T>& pt = spec.point;
  const T one = one_like(pt.q);
  T e1 = one;
  for (int i = 1; i <= spec.r; ++i)
    for (int j = spec.r + 1; j <= pt.n; ++j) {
      T arg = pt.q * (pt.x[i - 1] / pt.x[j - 1]);
      e1 = e1 / qpochhammer(arg, pt.q, c.part(i));
    }
  T e2 = one;
  for (int i = 1; i <= spec.r; ++i) e2 = e2 / qfactorial(pt.q, c.part(i));
  T e3 = one;
  for (int i = 1; i <= spec.r; ++i) {
    long long di = c.part(i);
    e3 = e3 * field_pow(pt.x[i - 1], spec.l * di) *
         field_pow(pt.q, spec.l * di * (di - 1) / 2);
  }
  for (int i = 1; i <= spec.r; ++i)
    for (int j = 1; j <= spec.r; ++j) {
      if (i == j) continue;
      T arg = field_pow(pt.q, c.difference(i, j) + 1) * (pt.x[i - 1] / pt.x[j - 1]);
      e3 = e3 / qpochhammer(arg, pt.q, c.part(j));
    }
  return e1 * e2 * e3 / scalar_from_int(factorial_ll(spec.d), pt.q);
}

/// F_{d⃗} for a composition over {r+1..n}; carries the (-1)^d of the reversed
/// contour and the same 1/d! normalization as residue_summand_E.
template <FieldScalar T>
T residue_summand_F(const IntegrandSpec<T>& spec, const Composition& c) {
  validate_spec(spec);
  const int m = spec.point.n - spec.r;
  if (c.size() != m || c.degree() != spec.d)
    throw std::invalid_argument("residue_summand_F: composition shape mismatch");
  const ParameterPoint<T>& pt = spec.point;
  const T one = one_like(pt.q);
  // part a of c belongs to index i = r + a
  auto part_of = [&](int i) { return c.part(i - spec.r); };
  T num = one;
  for (int i = spec.r + 1; i <= pt.n; ++i) {
    long long di = part_of(i);
    num = num * field_pow(pt.x[i - 1], spec.l * di) *
          field_pow(pt.q, -spec.l * di * (di + 1) / 2);
  }
  if (spec.d % 2 != 0) num = -num;
  T den = one;
  for (int i = spec.r + 1; i <= pt.n; ++i) den = den * qfactorial(pt.q, part_of(i));
  for (int i = spec.r + 1; i <= pt.n; ++i)
    for (int j = spec.r + 1; j <= pt.n; ++j) {
      if (i == j) continue;
      T arg = field_pow(pt.q, part_of(i) - part_of(j) + 1) * (pt.x[j - 1] / pt.x[i - 1]);
      den = den * qpochhammer(arg, pt.q, part_of(j));
    }
  for (int i = spec.r + 1; i <= pt.n; ++i)
    for (int j = 1; j <= spec.r; ++j) {
      T arg = pt.q * (pt.x[j - 1] / pt.x[i - 1]);
      den = den * qpochhammer(arg, pt.q, part_of(i));
    }
  return num / den / scalar_from_int(factorial_ll(spec.d), pt.q);
}

/// E_d = sum over |d⃗| = d of d! E_{d⃗}.
template <FieldScalar T>
T assemble_E(const IntegrandSpec<T>& spec) {
  validate_spec(spec);
  const T fact = scalar_from_int(factorial_ll(spec.d), spec.point.q);
  T acc = zero_like(spec.point.q);
  for (const Composition& c : weak_compositions(spec.d, spec.r))
    acc = acc + fact * residue_summand_E(spec, c);
  return acc;
}

/// F_d = sum over |d⃗'| = d of d! F_{d⃗'}; equals (-1)^d B_d(x, I^c, -l).
template <FieldScalar T>
T assemble_F(const IntegrandSpec<T>& spec) {
  validate_spec(spec);
  const T fact = scalar_from_int(factorial_ll(spec.d), spec.point.q);
  T acc = zero_like(spec.point.q);
  for (const Composition& c : weak_compositions(spec.d, spec.point.n - spec.r))
    acc = acc + fact * residue_summand_F(spec, c);
  return acc;
}

/// P_d, the literal double product (d > 1) with P_0 = P_1 = 1; satisfies
/// P_d/(1-q)^d = 1/(q;q)_d.
template <FieldScalar T>
T p_norm(int d, const T& q) {
  if (d < 0) throw std::invalid_argument("p_norm: d < 0");
  const T one = one_like(q);
  if (d <= 1) return one;
  T acc = one;
  for (int i = 1; i <= d; ++i)
    for (int j = 1; j <= d; ++j) {
      if (i == j || i - j == -1) continue;
      T den = one - field_pow(q, i - j + 1);
      if (is_zero(den)) throw std::domain_error("p_norm: root-of-unity pole");
      acc = acc * (one - field_pow(q, i - j)) / den;
    }
  const T qinv_factor = one - field_pow(q, -1);
  for (int i = 2; i <= d; ++i) {
    T den = one - field_pow(q, 1 - i);
    if (is_zero(den)) throw std::domain_error("p_norm: root-of-unity pole");
    acc = acc * qinv_factor / den;
  }
  return acc;
}

}  // namespace qdual

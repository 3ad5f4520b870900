/**
 * @file qseries.hpp
 * @brief q-Pochhammer symbol with the three-case integer-subscript convention,
 *        plus the level-weight monomials of the A/B numerators.
 *
 * Convention:
 *   (a;q)_d = (1-a)(1-qa)...(1-q^{d-1}a)          d > 0
 *           = 1                                   d = 0
 *           = 1 / [(1-q^{-1}a)...(1-q^{-(-d)}a)]  d < 0
 */
#pragma once

#include <stdexcept>
#include <string>

#include "qdual/fields.hpp"

namespace qdual {

// Vanishing factor 1 - q^k a. Payload records (a, q, k) with k the exponent of
// the offending factor (so a guard audit can reconstruct it exactly).
class PoleError : public std::domain_error {
 public:
  PoleError(const std::string& what, std::string a, std::string q, long long k)
      : std::domain_error(what + " [factor 1 - q^" + std::to_string(k) +
                          "*a, a=" + a + ", q=" + q + "]"),
        a_(std::move(a)),
        q_(std::move(q)),
        k_(k) {}

  const std::string& a_str() const { return a_; }
  const std::string& q_str() const { return q_; }
  long long k() const { return k_; }

 private:
  std::string a_, q_;
  long long k_;
};

template <FieldScalar T>
T qpochhammer(const T& a, const T& q, long long d) {
  if (is_zero(q)) throw std::domain_error("qpochhammer: q = 0");
  const T one = one_like(q);
  T acc = one;
  if (d == 0) return acc;
  if (d > 0) {
    T qk = one;  // q^k
    for (long long k = 0; k < d; ++k) {
      T factor = one - qk * a;
      if (is_zero(factor))
        throw PoleError("qpochhammer: vanishing factor", scalar_to_string(a),
                        scalar_to_string(q), k);
      acc = acc * factor;
      qk = qk * q;
    }
    return acc;
  }
  const T qinv = one / q;
  T qk = one;  // q^{-k}
  for (long long k = 1; k <= -d; ++k) {
    qk = qk * qinv;
    T factor = one - qk * a;
    if (is_zero(factor))
      throw PoleError("qpochhammer: vanishing denominator factor",
                      scalar_to_string(a), scalar_to_string(q), -k);
    acc = acc * factor;
  }
  return one / acc;
}

/// (q;q)_d for d >= 0; pole error iff q is a root of unity of order <= d.
template <FieldScalar T>
T qfactorial(const T& q, long long d) {
  if (d < 0) throw std::invalid_argument("qfactorial: d must be non-negative");
  return qpochhammer(q, q, d);
}

/// (x^{d_i} q^{d_i(d_i-1)/2})^l — per-factor numerator of the A-sum.
template <FieldScalar T>
T level_weight_A(const T& x, const T& q, long long d_i, long long l) {
  T base = field_pow(x, d_i) * field_pow(q, d_i * (d_i - 1) / 2);
  return field_pow(base, l);
}

/// (x^{-d_i} q^{d_i(d_i+1)/2})^l — per-factor numerator of the B-sum.
template <FieldScalar T>
T level_weight_B(const T& x, const T& q, long long d_i, long long l) {
  T base = field_pow(x, -d_i) * field_pow(q, d_i * (d_i + 1) / 2);
  return field_pow(base, l);
}

}  // namespace qdual

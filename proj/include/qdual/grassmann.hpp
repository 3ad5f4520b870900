/**
 * @file grassmann.hpp
 * @brief Torus fixed points of Gr(r,n), the complement bijection between the
 *        fixed points of Gr(r,n) and Gr(n-r,n), restricted vertex coefficients
 *        with level structure, determinant-line weights, and the three-regime
 *        level-correspondence verifier.
 *
 * Fixed points are r-subsets I of [n]; restriction substitutes the torus
 * characters Lambda_i for the tautological classes. The restricted coefficient
 * formulas are implemented per-fixed-point (the unrestricted series is never
 * represented symbolically). Contracts:
 *   restricted_I_primal(Lambda, I, l, d)  == a_sum(Lambda, I, l, d)
 *   restricted_I_dual(Lambda, J, l, d)    == b_sum(Lambda, J, -l, d)
 * via an independently grouped evaluation (shared q-Pochhammer layer only).
 */
#pragma once

#include <vector>

#include "qdual/duality.hpp"

namespace qdual {

enum class Side { primal, dual };

struct FixedPoint {
  IndexSubset subset;
  Side side = Side::primal;
};

/// All r-subsets of [n] in lexicographic order; count C(n,r).
inline std::vector<IndexSubset> fixed_point_subsets(int n, int r) {
  if (r < 1 || r >= n) throw std::invalid_argument("fixed_point_subsets: need 0 < r < n");
  std::vector<IndexSubset> out;
  std::vector<int> cur(static_cast<size_t>(r));
  for (int i = 0; i < r; ++i) cur[static_cast<size_t>(i)] = i + 1;
  for (;;) {
    out.emplace_back(n, cur);
    int i = r - 1;
    while (i >= 0 && cur[static_cast<size_t>(i)] == n - r + i + 1) --i;
    if (i < 0) break;
    ++cur[static_cast<size_t>(i)];
    for (int j = i + 1; j < r; ++j)
      cur[static_cast<size_t>(j)] = cur[static_cast<size_t>(j - 1)] + 1;
  }
  return out;
}

/// The duality bijection: subset complement plus side swap; an involution.
inline FixedPoint dual_fixed_point(const FixedPoint& fp) {
  return FixedPoint{fp.subset.complement(),
                    fp.side == Side::primal ? Side::dual : Side::primal};
}

template <FieldScalar T>
struct GrassmannCase {
  ParameterPoint<T> weights;  // Lambda_1..Lambda_n
  int r = 1;
  int d = 0;
  LevelSpec level;
};

template <FieldScalar T>
GrassmannCase<T> make_grassmann_case(ParameterPoint<T> weights, int r, int d, int l) {
  if (r < 1 || r >= weights.n)
    throw std::invalid_argument("GrassmannCase: need 0 < r < n");
  if (d < 0 || weights.guard_depth < d + 1)
    throw std::invalid_argument("GrassmannCase: guard_depth must be >= d + 1");
  LevelSpec level = LevelSpec::classify(weights.n, r, l);
  return GrassmannCase<T>{std::move(weights), r, d, level};
}

/// i*_I of the degree-d primal coefficient with level l:
///   sum over |d_I| = d of prod_{i in I} [
///     1/prod_{j in I} (q^{d_i-d_j+1} L_ij; q)_{d_j}
///     * (L_i^{d_i} q^{d_i(d_i-1)/2})^l / prod_{j in I^c} (q L_ij; q)_{d_i} ].
template <FieldScalar T>
T restricted_I_primal(const ParameterPoint<T>& lam, const IndexSubset& I, int l, int d) {
  const auto& mem = I.members();
  const int r = I.size();
  T total = zero_like(lam.q);
  for (const Composition& c : weak_compositions(d, r)) {
    T term = one_like(lam.q);
    for (int a = 0; a < r; ++a) {
      const int i = mem[static_cast<size_t>(a)];
      const long long di = c.part(a + 1);
      T den = one_like(lam.q);
      for (int b = 0; b < r; ++b) {
        const int j = mem[static_cast<size_t>(b)];
        T arg = field_pow(lam.q, c.difference(a + 1, b + 1) + 1) *
                (lam.x[i - 1] / lam.x[j - 1]);
        den = den * qpochhammer(arg, lam.q, c.part(b + 1));
      }
      T base = field_pow(lam.x[i - 1], di) * field_pow(lam.q, di * (di - 1) / 2);
      T num = field_pow(base, l);
      for (int j = 1; j <= lam.n; ++j) {
        if (I.contains(j)) continue;
        T arg = lam.q * (lam.x[i - 1] / lam.x[j - 1]);
        den = den * qpochhammer(arg, lam.q, di);
      }
      term = term * num / den;
    }
    total = total + term;
  }
  return total;
}

/// i*_J of the degree-d dual coefficient carrying level -l on the dual side:
/// same per-point grouping with transposed ratios L_ji and numerator
/// (L_i^{d_i} q^{-d_i(d_i+1)/2})^l.
template <FieldScalar T>
T restricted_I_dual(const ParameterPoint<T>& lam, const IndexSubset& J, int l, int d) {
  const auto& mem = J.members();
  const int m = J.size();
  T total = zero_like(lam.q);
  for (const Composition& c : weak_compositions(d, m)) {
    T term = one_like(lam.q);
    for (int a = 0; a < m; ++a) {
      const int i = mem[static_cast<size_t>(a)];
      const long long di = c.part(a + 1);
      T den = one_like(lam.q);
      for (int b = 0; b < m; ++b) {
        const int j = mem[static_cast<size_t>(b)];
        T arg = field_pow(lam.q, c.difference(a + 1, b + 1) + 1) *
                (lam.x[j - 1] / lam.x[i - 1]);
        den = den * qpochhammer(arg, lam.q, c.part(b + 1));
      }
      T base = field_pow(lam.x[i - 1], di) * field_pow(lam.q, -di * (di + 1) / 2);
      T num = field_pow(base, l);
      for (int j = 1; j <= lam.n; ++j) {
        if (J.contains(j)) continue;
        T arg = lam.q * (lam.x[j - 1] / lam.x[i - 1]);
        den = den * qpochhammer(arg, lam.q, di);
      }
      term = term * num / den;
    }
    total = total + term;
  }
  return total;
}

/// Restriction of the determinant line of the tautological bundle:
/// primal I -> prod_{i in I} Lambda_i, dual J -> prod_{i in J} Lambda_i^{-1}.
template <FieldScalar T>
T det_weight(const ParameterPoint<T>& lam, const FixedPoint& fp) {
  T acc = one_like(lam.q);
  for (int i : fp.subset.members()) {
    if (fp.side == Side::primal)
      acc = acc * lam.x[i - 1];
    else
      acc = acc / lam.x[i - 1];
  }
  return acc;
}

/// Upper-boundary coefficient at fixed point I (l = n-r):
///   (-1)^{(n-r)s} / ((q;q)_s q^{s(d-s+n-r)}) * det_weight(psi(I))^{-s}.
template <FieldScalar T>
T level_correction_upper(const ParameterPoint<T>& lam, const IndexSubset& I, int d, int s) {
  const int k = lam.n - I.size();
  T num = field_pow(det_weight(lam, dual_fixed_point(FixedPoint{I, Side::primal})),
                    -static_cast<long long>(s));
  if ((static_cast<long long>(k) * s) % 2 != 0) num = -num;
  return num / (qfactorial(lam.q, s) * field_pow(lam.q, static_cast<long long>(s) * (d - s + k)));
}

/// Lower-boundary coefficient at fixed point I (l = -r):
///   (-1)^{rs} / ((q;q)_s q^{s(d-s)}) * det_weight(I)^{-s}.
template <FieldScalar T>
T level_correction_lower(const ParameterPoint<T>& lam, const IndexSubset& I, int d, int s) {
  T num = field_pow(det_weight(lam, FixedPoint{I, Side::primal}),
                    -static_cast<long long>(s));
  if ((static_cast<long long>(I.size()) * s) % 2 != 0) num = -num;
  return num / (qfactorial(lam.q, s) * field_pow(lam.q, static_cast<long long>(s) * (d - s)));
}

/// Both case-split routes for the telescoped product equal
/// 1/(q^{d_ij+1} x; q)_{d_j}.
template <FieldScalar T>
Verdict<T> telescope_lemma_check(const T& x, const T& q, int di, int dj) {
  if (di < 0 || dj < 0) throw std::invalid_argument("telescope_lemma_check: negative d");
  const T one = one_like(q);
  const int dij = di - dj;
  T lhs = one;
  if (di >= dj) {
    T num = one, den = one;
    for (int k = 1; k <= dij; ++k) num = num * (one - field_pow(q, k) * x);
    for (int k = 1; k <= di; ++k) den = den * (one - field_pow(q, k) * x);
    lhs = num / den;
  } else {
    T prod = one;
    for (int k = dij + 1; k <= 0; ++k) prod = prod * (one - field_pow(q, k) * x);
    for (int k = 1; k <= di; ++k) prod = prod * (one - field_pow(q, k) * x);
    lhs = one / prod;
  }
  Verdict<T> v;
  v.lhs = lhs;
  T rhs_arg = field_pow(q, dij + 1) * x;
  v.rhs = one / qpochhammer(rhs_arg, q, dj);
  v.equal = (v.lhs == v.rhs);
  return v;
}

template <FieldScalar T>
struct FixedPointVerdict {
  IndexSubset subset;
  bool equal = false;
  T lhs{};
  T rhs{};
};

/// One verdict per primal fixed point I:
///   interior:  primal(I,d)    == dual(psi(I),d)
///   l = n-r:   primal(I,d)    == sum_s C_s(I,s) dual(psi(I),d-s)
///   l = -r:    dual(psi(I),d) == sum_s D_s(I,s) primal(I,d-s)
template <FieldScalar T>
std::vector<FixedPointVerdict<T>> verify_level_correspondence(const GrassmannCase<T>& gc) {
  if (gc.level.regime == LevelRegime::out_of_range)
    throw RegimeError("verify_level_correspondence: level out of range");
  const ParameterPoint<T>& lam = gc.weights;
  const int l = gc.level.l;
  std::vector<FixedPointVerdict<T>> out;
  for (const IndexSubset& I : fixed_point_subsets(lam.n, gc.r)) {
    const IndexSubset J = I.complement();
    FixedPointVerdict<T> v{I, false, zero_like(lam.q), zero_like(lam.q)};
    switch (gc.level.regime) {
      case LevelRegime::interior:
        v.lhs = restricted_I_primal(lam, I, l, gc.d);
        v.rhs = restricted_I_dual(lam, J, l, gc.d);
        break;
      case LevelRegime::upper_boundary:
        v.lhs = restricted_I_primal(lam, I, l, gc.d);
        for (int s = 0; s <= gc.d; ++s)
          v.rhs = v.rhs + level_correction_upper(lam, I, gc.d, s) *
                              restricted_I_dual(lam, J, l, gc.d - s);
        break;
      default:  // lower_boundary
        v.lhs = restricted_I_dual(lam, J, l, gc.d);
        for (int s = 0; s <= gc.d; ++s)
          v.rhs = v.rhs + level_correction_lower(lam, I, gc.d, s) *
                              restricted_I_primal(lam, I, l, gc.d - s);
        break;
    }
    v.equal = (v.lhs == v.rhs);
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace qdual

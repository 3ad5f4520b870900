/**
 * @file duality.hpp
 * @brief The two q-Pochhammer sums A_d and B_d, the boundary correction
 *        coefficients, and the three-regime identity checkers.
 *
 * With x_ij := x_i/x_j and d_ij := d_i - d_j, for an index subset I of [n]:
 *
 *   A_d(x, I, l) = sum over |d_I| = d of
 *       (prod_{i in I} x_i^{d_i} q^{d_i(d_i-1)/2})^l
 *       / [ prod_{i,j in I} (q^{d_ij+1} x_ij; q)_{d_j}
 *           * prod_{i in I, j in I^c} (q x_ij; q)_{d_i} ]
 *
 *   B_d is the same shape with numerator exponents (-d_i, d_i(d_i+1)/2) and
 *   every ratio transposed (x_ji in place of x_ij).
 *
 * The identity A_d(x, I, l) = B_d(x, I^c, -l) holds exactly on the interior
 * level window 1-|I| <= l <= n-|I|-1; at the window's endpoints it acquires
 * the C_s / D_s correction sums implemented below.
 */
#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "qdual/compositions.hpp"
#include "qdual/qseries.hpp"
#include "qdual/sampling.hpp"

namespace qdual {

// Nonempty proper subset of [n], members sorted, 1-based.
class IndexSubset {
 public:
  IndexSubset(int n, std::vector<int> members) : n_(n), members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    if (members_.empty() || static_cast<int>(members_.size()) >= n_)
      throw std::invalid_argument("IndexSubset: need 0 < |I| < n");
    for (size_t k = 0; k < members_.size(); ++k) {
      if (members_[k] < 1 || members_[k] > n_)
        throw std::invalid_argument("IndexSubset: member out of [1,n]");
      if (k > 0 && members_[k] == members_[k - 1])
        throw std::invalid_argument("IndexSubset: duplicate member");
    }
  }

  /// The prefix subset {1, ..., r}.
  static IndexSubset prefix(int n, int r) {
    std::vector<int> m(static_cast<size_t>(r));
    for (int i = 0; i < r; ++i) m[static_cast<size_t>(i)] = i + 1;
    return IndexSubset(n, std::move(m));
  }

  int n() const { return n_; }
  int size() const { return static_cast<int>(members_.size()); }
  const std::vector<int>& members() const { return members_; }

  bool contains(int i) const {
    return std::binary_search(members_.begin(), members_.end(), i);
  }

  IndexSubset complement() const {
    std::vector<int> c;
    c.reserve(static_cast<size_t>(n_ - size()));
    for (int i = 1; i <= n_; ++i)
      if (!contains(i)) c.push_back(i);
    return IndexSubset(n_, std::move(c));
  }

  std::string to_string() const {
    std::string s = "{";
    for (size_t k = 0; k < members_.size(); ++k) {
      if (k) s += ",";
      s += std::to_string(members_[k]);
    }
    return s + "}";
  }

  bool operator==(const IndexSubset&) const = default;

 private:
  int n_;
  std::vector<int> members_;
};

enum class LevelRegime { interior, upper_boundary, lower_boundary, out_of_range };

inline const char* to_string(LevelRegime r) {
  switch (r) {
    case LevelRegime::interior: return "interior";
    case LevelRegime::upper_boundary: return "upper_boundary";
    case LevelRegime::lower_boundary: return "lower_boundary";
    default: return "out_of_range";
  }
}

// Level l classified against the window 1-r <= l <= n-r-1 and its endpoints.
struct LevelSpec {
  int l = 0;
  LevelRegime regime = LevelRegime::out_of_range;

  static LevelSpec classify(int n, int r, int l) {
    LevelSpec spec;
    spec.l = l;
    if (l >= 1 - r && l <= n - r - 1)
      spec.regime = LevelRegime::interior;
    else if (l == n - r)
      spec.regime = LevelRegime::upper_boundary;
    else if (l == -r)
      spec.regime = LevelRegime::lower_boundary;
    else
      spec.regime = LevelRegime::out_of_range;
    return spec;
  }
};

struct RegimeError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

template <FieldScalar T>
struct DualityCase {
  ParameterPoint<T> point;
  IndexSubset subset;  // I
  int d = 0;
  LevelSpec level;
};

template <FieldScalar T>
DualityCase<T> make_duality_case(ParameterPoint<T> point, IndexSubset subset, int d, int l) {
  if (point.n != subset.n())
    throw std::invalid_argument("DualityCase: point.n != subset n");
  if (d < 0) throw std::invalid_argument("DualityCase: d < 0");
  if (point.guard_depth < d + 1)
    throw std::invalid_argument("DualityCase: guard_depth must be >= d + 1");
  LevelSpec level = LevelSpec::classify(point.n, subset.size(), l);
  return DualityCase<T>{std::move(point), std::move(subset), d, level};
}

// ---- A / B sums -------------------------------------------------------------

/// One summand of A_d, for the composition aligned with I.members().
template <FieldScalar T>
T a_summand(const ParameterPoint<T>& pt, const IndexSubset& I, int l,
            const Composition& c) {
  const auto& mem = I.members();
  const int r = I.size();
  const T one = one_like(pt.q);
  T num = one;
  for (int a = 0; a < r; ++a) {
    int i = mem[static_cast<size_t>(a)];
    num = num * level_weight_A(pt.x[i - 1], pt.q, c.part(a + 1), l);
  }
  T den = one;
  for (int a = 0; a < r; ++a) {
    int i = mem[static_cast<size_t>(a)];
    for (int b = 0; b < r; ++b) {
      int j = mem[static_cast<size_t>(b)];
      T arg = field_pow(pt.q, c.difference(a + 1, b + 1) + 1) * (pt.x[i - 1] / pt.x[j - 1]);
      den = den * qpochhammer(arg, pt.q, c.part(b + 1));
    }
    for (int j = 1; j <= pt.n; ++j) {
      if (I.contains(j)) continue;
      T arg = pt.q * (pt.x[i - 1] / pt.x[j - 1]);
      den = den * qpochhammer(arg, pt.q, c.part(a + 1));
    }
  }
  return num / den;
}

/// One summand of B_d: numerator via level_weight_B, all ratios transposed.
template <FieldScalar T>
T b_summand(const ParameterPoint<T>& pt, const IndexSubset& I, int l,
            const Composition& c) {
  const auto& mem = I.members();
  const int r = I.size();
  const T one = one_like(pt.q);
  T num = one;
  for (int a = 0; a < r; ++a) {
    int i = mem[static_cast<size_t>(a)];
    num = num * level_weight_B(pt.x[i - 1], pt.q, c.part(a + 1), l);
  }
  T den = one;
  for (int a = 0; a < r; ++a) {
    int i = mem[static_cast<size_t>(a)];
    for (int b = 0; b < r; ++b) {
      int j = mem[static_cast<size_t>(b)];
      T arg = field_pow(pt.q, c.difference(a + 1, b + 1) + 1) * (pt.x[j - 1] / pt.x[i - 1]);
      den = den * qpochhammer(arg, pt.q, c.part(b + 1));
    }
    for (int j = 1; j <= pt.n; ++j) {
      if (I.contains(j)) continue;
      T arg = pt.q * (pt.x[j - 1] / pt.x[i - 1]);
      den = den * qpochhammer(arg, pt.q, c.part(a + 1));
    }
  }
  return num / den;
}

template <FieldScalar T>
T a_sum(const ParameterPoint<T>& pt, const IndexSubset& I, int l, int d) {
  T acc = zero_like(pt.q);
  for (const Composition& c : weak_compositions(d, I.size()))
    acc = acc + a_summand(pt, I, l, c);
  return acc;
}

template <FieldScalar T>
T b_sum(const ParameterPoint<T>& pt, const IndexSubset& I, int l, int d) {
  T acc = zero_like(pt.q);
  for (const Composition& c : weak_compositions(d, I.size()))
    acc = acc + b_summand(pt, I, l, c);
  return acc;
}

template <FieldScalar T>
T a_sum(const DualityCase<T>& c) {
  return a_sum(c.point, c.subset, c.level.l, c.d);
}
template <FieldScalar T>
T b_sum(const DualityCase<T>& c) {
  return b_sum(c.point, c.subset, c.level.l, c.d);
}

// ---- boundary coefficients --------------------------------------------------

/// C_s for the upper boundary l = n-r, I the A-side subset:
///   (-1)^{(n-r)s} * prod_{i in I^c} x_i^s / ((q;q)_s q^{s(d-s+n-r)}).
/// The product runs over the complement, per the limit computation (the
/// corollary's own set-argument notation is an erratum).
template <FieldScalar T>
T boundary_c(const ParameterPoint<T>& pt, const IndexSubset& I, int d, int s) {
  if (s < 0 || s > d) throw std::invalid_argument("boundary_c: s out of [0,d]");
  const int k = pt.n - I.size();  // |I^c|
  T num = one_like(pt.q);
  for (int i = 1; i <= pt.n; ++i)
    if (!I.contains(i)) num = num * field_pow(pt.x[i - 1], s);
  if ((static_cast<long long>(k) * s) % 2 != 0) num = -num;
  T den = qfactorial(pt.q, s) * field_pow(pt.q, static_cast<long long>(s) * (d - s + k));
  return num / den;
}

/// D_s for the lower boundary l = -r:
///   (-1)^{rs} * prod_{i in I} x_i^{-s} / ((q;q)_s q^{s(d-s)}).
template <FieldScalar T>
T boundary_d(const ParameterPoint<T>& pt, const IndexSubset& I, int d, int s) {
  if (s < 0 || s > d) throw std::invalid_argument("boundary_d: s out of [0,d]");
  T num = one_like(pt.q);
  for (int i : I.members()) num = num * field_pow(pt.x[i - 1], -static_cast<long long>(s));
  if ((static_cast<long long>(I.size()) * s) % 2 != 0) num = -num;
  T den = qfactorial(pt.q, s) * field_pow(pt.q, static_cast<long long>(s) * (d - s));
  return num / den;
}

// ---- verifiers --------------------------------------------------------------

template <FieldScalar T>
struct Verdict {
  bool equal = false;
  T lhs{};
  T rhs{};
};

/// A_d(x, I, l) = B_d(x, I^c, -l); requires interior l.
template <FieldScalar T>
Verdict<T> verify_interior(const DualityCase<T>& c) {
  if (c.level.regime != LevelRegime::interior)
    throw RegimeError("verify_interior: level regime is not interior");
  Verdict<T> v;
  v.lhs = a_sum(c);
  v.rhs = b_sum(c.point, c.subset.complement(), -c.level.l, c.d);
  v.equal = (v.lhs == v.rhs);
  return v;
}

/// A_d(x, I, l) = sum_{s=0}^{d} C_s B_{d-s}(x, I^c, -l) at l = n-r.
template <FieldScalar T>
Verdict<T> verify_upper_boundary(const DualityCase<T>& c) {
  if (c.level.regime != LevelRegime::upper_boundary)
    throw RegimeError("verify_upper_boundary: level is not l = n-r");
  const IndexSubset comp = c.subset.complement();
  Verdict<T> v;
  v.lhs = a_sum(c);
  v.rhs = zero_like(c.point.q);
  for (int s = 0; s <= c.d; ++s)
    v.rhs = v.rhs + boundary_c(c.point, c.subset, c.d, s) *
                        b_sum(c.point, comp, -c.level.l, c.d - s);
  v.equal = (v.lhs == v.rhs);
  return v;
}

/// B_d(x, I^c, -l) = sum_{s=0}^{d} D_s A_{d-s}(x, I, l) at l = -r.
template <FieldScalar T>
Verdict<T> verify_lower_boundary(const DualityCase<T>& c) {
  if (c.level.regime != LevelRegime::lower_boundary)
    throw RegimeError("verify_lower_boundary: level is not l = -r");
  const IndexSubset comp = c.subset.complement();
  Verdict<T> v;
  v.lhs = b_sum(c.point, comp, -c.level.l, c.d);
  v.rhs = zero_like(c.point.q);
  for (int s = 0; s <= c.d; ++s)
    v.rhs = v.rhs + boundary_d(c.point, c.subset, c.d, s) *
                        a_sum(c.point, c.subset, c.level.l, c.d - s);
  v.equal = (v.lhs == v.rhs);
  return v;
}

/// n = 3 identity: sum over d1+d2 = d of
///   (q;q)_d / ((q;q)_{d1}(q;q)_{d2})
///   * prod_{i != j in {1,2}} (q^{d_i+1} x_{i3}; q)_{d-d_i} / (q^{d_ij+1} x_ij; q)_{d_j}
/// equals 1.
template <FieldScalar T>
Verdict<T> corollary_unity(const ParameterPoint<T>& pt, int d) {
  if (pt.n != 3) throw std::invalid_argument("corollary_unity: requires n = 3");
  if (d < 1) throw std::invalid_argument("corollary_unity: requires d >= 1");
  const T one = one_like(pt.q);
  T total = zero_like(pt.q);
  const T qqd = qfactorial(pt.q, d);
  for (int d1 = 0; d1 <= d; ++d1) {
    const int d2 = d - d1;
    const int dd[2] = {d1, d2};
    T term = qqd / (qfactorial(pt.q, d1) * qfactorial(pt.q, d2));
    for (int i = 1; i <= 2; ++i) {
      const int j = 3 - i;
      const int di = dd[i - 1], dj = dd[j - 1];
      T num_arg = field_pow(pt.q, di + 1) * (pt.x[i - 1] / pt.x[2]);
      T den_arg = field_pow(pt.q, di - dj + 1) * (pt.x[i - 1] / pt.x[j - 1]);
      term = term * qpochhammer(num_arg, pt.q, d - di) / qpochhammer(den_arg, pt.q, dj);
    }
    total = total + term;
  }
  Verdict<T> v;
  v.lhs = total;
  v.rhs = one;
  v.equal = (v.lhs == v.rhs);
  return v;
}

}  // namespace qdual

/**
 * @file sampling.hpp
 * @brief Generic evaluation points (q, x_1..x_n) avoiding the pole loci
 *        q^k = 1 and x_i/x_j = q^k up to a guard depth K.
 *
 * The identities under test are rational-function identities, so one generic
 * point per trial suffices; the guards make every q-Pochhammer factor that can
 * appear at degree <= K - 1 provably nonzero.
 */
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "qdual/fields.hpp"

namespace qdual {

template <FieldScalar T>
struct ParameterPoint {
  int n = 0;
  T q{};
  std::vector<T> x;
  int guard_depth = 1;  // K
};

struct FieldTooSmallError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// splitmix64: tiny, fully specified, identical on every platform.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t state_;
};

/// Unbiased draw in [0, bound).
inline std::uint64_t draw_below(SplitMix64& g, std::uint64_t bound) {
  std::uint64_t threshold = (std::uint64_t{0} - bound) % bound;
  for (;;) {
    std::uint64_t r = g.next();
    if (r >= threshold) return r % bound;
  }
}

/// Stable per-trial seed derivation (order-independent, parallel-safe).
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  SplitMix64 g(seed ^ (0xA24BAED4963EE407ull * (index + 1)));
  g.next();
  return g.next();
}

/// All ParameterPoint invariants, checked literally: q != 0, q^k != 1 for
/// 1 <= k <= K, x_i != 0, and x_i/x_j != q^k for i != j, |k| <= K.
template <FieldScalar T>
bool guards_ok(const ParameterPoint<T>& pt) {
  const int K = pt.guard_depth;
  const T one = one_like(pt.q);
  if (is_zero(pt.q)) return false;
  T qk = one;
  for (int k = 1; k <= K; ++k) {
    qk = qk * pt.q;
    if (qk == one) return false;
  }
  for (const T& xi : pt.x)
    if (is_zero(xi)) return false;
  std::vector<T> powers;  // q^k for k = -K..K
  powers.reserve(2 * K + 1);
  for (int k = -K; k <= K; ++k) powers.push_back(field_pow(pt.q, k));
  for (int i = 0; i < pt.n; ++i) {
    for (int j = 0; j < pt.n; ++j) {
      if (i == j) continue;
      T ratio = pt.x[i] / pt.x[j];
      for (const T& p : powers)
        if (ratio == p) return false;
    }
  }
  return true;
}

template <FieldScalar T>
void check_guards(const ParameterPoint<T>& pt) {
  if (!guards_ok(pt))
    throw std::invalid_argument("ParameterPoint violates pole guards at depth " +
                                std::to_string(pt.guard_depth));
}

/// Explicit point for tests and hand cases; validates guards.
template <FieldScalar T>
ParameterPoint<T> make_parameter_point(T q, std::vector<T> x, int guard_depth) {
  ParameterPoint<T> pt;
  pt.n = static_cast<int>(x.size());
  pt.q = std::move(q);
  pt.x = std::move(x);
  pt.guard_depth = guard_depth;
  check_guards(pt);
  return pt;
}

inline constexpr int kSampleAttempts = 512;

/// Deterministic rational point: q = a/b with a != b, coordinates small
/// rationals; retries the whole point until the guards pass.
ParameterPoint<Rational> sample_rational_point(int n, int guard_depth,
                                               std::uint64_t seed);

/// Deterministic F_p point. Requires p prime and p > 2*guard_depth; raises
/// FieldTooSmallError when the guards cannot be met (tiny moduli).
ParameterPoint<PrimeField> sample_prime_point(int n, int guard_depth,
                                              std::uint64_t seed, std::uint64_t p);

}  // namespace qdual

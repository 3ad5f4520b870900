#include "qdual/sampling.hpp"

namespace qdual {

ParameterPoint<Rational> sample_rational_point(int n, int guard_depth,
                                               std::uint64_t seed) {
  if (n < 2 || guard_depth < 1)
    throw std::invalid_argument("sample_rational_point: need n >= 2, guard_depth >= 1");
  SplitMix64 g(seed);
  for (int attempt = 0; attempt < kSampleAttempts; ++attempt) {
    long num = 2 + static_cast<long>(draw_below(g, 18));  // [2,19]
    long den = 2 + static_cast<long>(draw_below(g, 18));
    if (num == den) continue;  // |q| = 1 never admissible
    ParameterPoint<Rational> pt;
    pt.n = n;
    pt.guard_depth = guard_depth;
    pt.q = Rational(num, den);
    pt.q.canonicalize();
    pt.x.reserve(n);
    for (int i = 0; i < n; ++i) {
      long a = 1 + static_cast<long>(draw_below(g, 60));  // [1,60]
      long b = 1 + static_cast<long>(draw_below(g, 6));   // [1,6]
      Rational xi(a, b);
      xi.canonicalize();
      pt.x.push_back(xi);
    }
    if (guards_ok(pt)) return pt;
  }
  throw FieldTooSmallError("sample_rational_point: guards unsatisfied after " +
                           std::to_string(kSampleAttempts) + " attempts");
}

ParameterPoint<PrimeField> sample_prime_point(int n, int guard_depth,
                                              std::uint64_t seed, std::uint64_t p) {
  if (n < 2 || guard_depth < 1)
    throw std::invalid_argument("sample_prime_point: need n >= 2, guard_depth >= 1");
  if (!is_prime_u64(p))
    throw std::invalid_argument("sample_prime_point: modulus " + std::to_string(p) +
                                " is not prime");
  if (p <= 2 * static_cast<std::uint64_t>(guard_depth))
    throw FieldTooSmallError("sample_prime_point: modulus " + std::to_string(p) +
                             " too small for guard depth " + std::to_string(guard_depth));
  SplitMix64 g(seed);
  for (int attempt = 0; attempt < kSampleAttempts; ++attempt) {
    ParameterPoint<PrimeField> pt;
    pt.n = n;
    pt.guard_depth = guard_depth;
    pt.q = PrimeField(1 + draw_below(g, p - 1), p);
    pt.x.reserve(n);
    for (int i = 0; i < n; ++i) pt.x.emplace_back(1 + draw_below(g, p - 1), p);
    if (guards_ok(pt)) return pt;
  }
  throw FieldTooSmallError("sample_prime_point: field F_" + std::to_string(p) +
                           " too small to satisfy guards at depth " +
                           std::to_string(guard_depth));
}

}  // namespace qdual

/**
 * @file fields.hpp
 * @brief Exact scalar arithmetic: arbitrary-precision rationals (GMP) and
 *        word-size prime fields, behind one generic scalar interface.
 *
 * Every engine routine is a template over a scalar type T supporting exact
 * +,-,*,/ plus the helpers one_like/zero_like/scalar_from_int/is_zero below.
 * std::complex<double> also satisfies the interface; it is used only by the
 * numeric contour oracle.
 */
#pragma once

#include <gmpxx.h>

#include <complex>
#include <concepts>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>

namespace qdual {

using Rational = mpq_class;

/// Largest prime below 2^61 is 2^61 - 1 (Mersenne); products of two residues
/// fit in unsigned __int128 with room to spare.
inline constexpr std::uint64_t kFp61Prime = (std::uint64_t{1} << 61) - 1;

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t p);

/// Deterministic Miller-Rabin, valid for all 64-bit inputs.
bool is_prime_u64(std::uint64_t n);

// Element of F_p. Each value carries its modulus; mixing moduli throws.
class PrimeField {
 public:
  PrimeField() = default;
  PrimeField(std::uint64_t value, std::uint64_t p) : v_(value % p), p_(p) {}

  static PrimeField from_int(long long value, std::uint64_t p) {
    long long r = value % static_cast<long long>(p);
    if (r < 0) r += static_cast<long long>(p);
    return PrimeField(static_cast<std::uint64_t>(r), p);
  }

  std::uint64_t value() const { return v_; }
  std::uint64_t modulus() const { return p_; }

  PrimeField operator-() const { return PrimeField(v_ == 0 ? 0 : p_ - v_, p_); }

  PrimeField inverse() const {
    if (v_ == 0) throw std::domain_error("PrimeField: inverse of zero");
    return PrimeField(mod_pow(v_, p_ - 2, p_), p_);
  }

  friend PrimeField operator+(const PrimeField& a, const PrimeField& b) {
    std::uint64_t p = require_same(a, b);
    std::uint64_t s = a.v_ + b.v_;  // p < 2^63, no overflow
    if (s >= p) s -= p;
    return PrimeField(s, p);
  }
  friend PrimeField operator-(const PrimeField& a, const PrimeField& b) {
    std::uint64_t p = require_same(a, b);
    return PrimeField(a.v_ >= b.v_ ? a.v_ - b.v_ : a.v_ + p - b.v_, p);
  }
  friend PrimeField operator*(const PrimeField& a, const PrimeField& b) {
    std::uint64_t p = require_same(a, b);
    unsigned __int128 prod = static_cast<unsigned __int128>(a.v_) * b.v_;
    return PrimeField(static_cast<std::uint64_t>(prod % p), p);
  }
  friend PrimeField operator/(const PrimeField& a, const PrimeField& b) {
    require_same(a, b);
    return a * b.inverse();
  }
  friend bool operator==(const PrimeField& a, const PrimeField& b) {
    return require_same(a, b), a.v_ == b.v_;
  }
  friend bool operator!=(const PrimeField& a, const PrimeField& b) { return !(a == b); }

 private:
  static std::uint64_t require_same(const PrimeField& a, const PrimeField& b) {
    if (a.p_ == 0 || a.p_ != b.p_)
      throw std::logic_error("PrimeField: mixed or unset moduli");
    return a.p_;
  }

  std::uint64_t v_ = 0;
  std::uint64_t p_ = 0;
};

// ---- generic scalar helpers -------------------------------------------------

inline Rational one_like(const Rational&) { return Rational(1); }
inline Rational zero_like(const Rational&) { return Rational(0); }
inline Rational scalar_from_int(long long v, const Rational&) {
  return Rational(static_cast<long>(v));
}
inline bool is_zero(const Rational& a) { return sgn(a) == 0; }
inline std::string scalar_to_string(const Rational& a) { return a.get_str(); }

inline PrimeField one_like(const PrimeField& a) { return PrimeField(1, a.modulus()); }
inline PrimeField zero_like(const PrimeField& a) { return PrimeField(0, a.modulus()); }
inline PrimeField scalar_from_int(long long v, const PrimeField& like) {
  return PrimeField::from_int(v, like.modulus());
}
inline bool is_zero(const PrimeField& a) { return a.value() == 0; }
inline std::string scalar_to_string(const PrimeField& a) {
  return std::to_string(a.value()) + " (mod " + std::to_string(a.modulus()) + ")";
}

inline std::complex<double> one_like(const std::complex<double>&) { return {1.0, 0.0}; }
inline std::complex<double> zero_like(const std::complex<double>&) { return {0.0, 0.0}; }
inline std::complex<double> scalar_from_int(long long v, const std::complex<double>&) {
  return {static_cast<double>(v), 0.0};
}
inline bool is_zero(const std::complex<double>& a) { return a == std::complex<double>{}; }
inline std::string scalar_to_string(const std::complex<double>& a) {
  std::ostringstream os;
  os.precision(17);
  os << a.real() << (a.imag() < 0 ? "-" : "+") << std::abs(a.imag()) << "i";
  return os.str();
}

template <typename T>
concept FieldScalar = requires(const T& a, const T& b) {
  { a + b } -> std::convertible_to<T>;
  { a - b } -> std::convertible_to<T>;
  { a* b } -> std::convertible_to<T>;
  { a / b } -> std::convertible_to<T>;
  { -a } -> std::convertible_to<T>;
  { one_like(a) } -> std::convertible_to<T>;
  { zero_like(a) } -> std::convertible_to<T>;
  { is_zero(a) } -> std::convertible_to<bool>;
};

/// Exact integer power by square-and-multiply; a^0 = 1 for every a.
/// Negative exponents invert first; zero base with k < 0 is a domain error.
template <FieldScalar T>
T field_pow(const T& base, long long k) {
  T acc = one_like(base);
  if (k == 0) return acc;
  T b = base;
  if (k < 0) {
    if (is_zero(base))
      throw std::domain_error("field_pow: zero base with negative exponent");
    b = acc / base;
  }
  auto e = k < 0 ? std::uint64_t{0} - static_cast<std::uint64_t>(k)
                 : static_cast<std::uint64_t>(k);
  while (e > 0) {
    if (e & 1) acc = acc * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return acc;
}

// Runtime field choice, parsed from "rational" | "fp61" | "fp:<prime>".
struct FieldSelector {
  enum class Kind { rational, prime };
  Kind kind = Kind::rational;
  std::uint64_t prime = 0;

  static FieldSelector parse(const std::string& s);
  std::string name() const;
};

}  // namespace qdual

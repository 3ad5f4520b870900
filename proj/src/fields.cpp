#include "qdual/fields.hpp"

namespace qdual {

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  unsigned __int128 acc = 1;
  unsigned __int128 b = base % p;
  while (exp > 0) {
    if (exp & 1) acc = acc * b % p;
    b = b * b % p;
    exp >>= 1;
  }
  return static_cast<std::uint64_t>(acc);
}

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // these witnesses are deterministic for all n < 2^64
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::uint64_t x = mod_pow(a % n, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = static_cast<std::uint64_t>(static_cast<unsigned __int128>(x) * x % n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

FieldSelector FieldSelector::parse(const std::string& s) {
  FieldSelector sel;
  if (s == "rational") {
    sel.kind = Kind::rational;
    return sel;
  }
  if (s == "fp61") {
    sel.kind = Kind::prime;
    sel.prime = kFp61Prime;
    return sel;
  }
  if (s.rfind("fp:", 0) == 0) {
    std::uint64_t p = 0;
    try {
      size_t pos = 0;
      p = std::stoull(s.substr(3), &pos);
      if (pos != s.size() - 3) throw std::invalid_argument(s);
    } catch (const std::exception&) {
      throw std::invalid_argument("field selector: bad prime in '" + s + "'");
    }
    if (p < 3 || p >= (std::uint64_t{1} << 63) || !is_prime_u64(p))
      throw std::invalid_argument("field selector: '" + s +
                                  "' is not an odd prime below 2^63");
    sel.kind = Kind::prime;
    sel.prime = p;
    return sel;
  }
  throw std::invalid_argument("field selector: expected rational | fp61 | fp:<prime>, got '" +
                              s + "'");
}

std::string FieldSelector::name() const {
  if (kind == Kind::rational) return "rational";
  if (prime == kFp61Prime) return "fp61";
  return "fp:" + std::to_string(prime);
}

}  // namespace qdual

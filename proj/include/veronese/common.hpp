#pragma once
// Shared exact-arithmetic primitives and error types.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace veronese {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// A requested computation would exceed a configured feasibility guard.
// Callers (notably the CLI) treat this as "infeasible", not as a bug.
struct GuardExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Exact integer power.
inline BigInt ipow(const BigInt& base, unsigned e) {
  BigInt r = 1, b = base;
  for (; e; e >>= 1) {
    if (e & 1) r *= b;
    b *= b;
  }
  return r;
}

// Quotient of an exactly divisible pair; throws if the division has remainder.
inline BigInt exact_div(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("exact_div: zero divisor");
  BigInt q = num / den;
  if (q * den != num)
    throw std::domain_error("exact_div: " + num.str() + " not divisible by " + den.str());
  return q;
}

inline BigInt binomial(uint64_t n, uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (uint64_t i = 1; i <= k; ++i) r = exact_div(r * BigInt(n - k + i), BigInt(i));
  return r;
}

// FNV-1a, used for stable content fingerprints in report metadata (not security).
inline uint64_t fnv1a64(const void* data, size_t len, uint64_t h = 0xcbf29ce484222325ull) {
  const auto* p = static_cast<const unsigned char*>(data);
  for (size_t i = 0; i < len; ++i) {
    h ^= p[i];
    h *= 0x100000001b3ull;
  }
  return h;
}

}  // namespace veronese

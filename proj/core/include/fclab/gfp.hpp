#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace fclab {

/// Arithmetic in the prime field GF(p), p < 2^31.  Elements are canonical
/// representatives in [0, p).
class PrimeField {
 public:
  explicit PrimeField(std::uint64_t p) : p_(p) {
    if (!is_prime(p)) throw std::invalid_argument("field order is not prime: " + std::to_string(p));
    if (p >= (std::uint64_t{1} << 31)) throw std::invalid_argument("field order too large");
  }

  std::uint64_t p() const { return p_; }

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    std::uint64_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return a >= b ? a - b : a + p_ - b; }
  std::uint64_t neg(std::uint64_t a) const { return a == 0 ? 0 : p_ - a; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return (a * b) % p_; }

  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const {
    std::uint64_t r = 1;
    a %= p_;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }

  std::uint64_t inv(std::uint64_t a) const {
    if (a % p_ == 0) throw std::domain_error("inverse of zero");
    return pow(a, p_ - 2);
  }

  /// Reduce a signed integer into [0, p).
  std::uint64_t from_int(long long v) const {
    long long m = v % static_cast<long long>(p_);
    if (m < 0) m += static_cast<long long>(p_);
    return static_cast<std::uint64_t>(m);
  }

  static bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q = 2; q * q <= n; ++q)
      if (n % q == 0) return false;
    return true;
  }

 private:
  std::uint64_t p_;
};

/// Deterministic 64-bit generator (splitmix64).  All randomness in the
/// library derives from explicit seeds through this type, so runs are
/// reproducible across platforms; std::uniform_int_distribution is avoided
/// on purpose because its output is implementation-defined.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform-ish value in [0, n); the modulo bias is irrelevant here (draws
  /// only feed genericity, never statistics).
  std::uint64_t below(std::uint64_t n) { return next() % n; }

  /// Nonzero field element.
  std::uint64_t nonzero(const PrimeField& F) { return 1 + below(F.p() - 1); }

 private:
  std::uint64_t state_;
};

/// Stable 64-bit hash used for derived seeds and cache keys (FNV-1a).
inline std::uint64_t fnv1a64(const std::string& s, std::uint64_t h = 0xcbf29ce484222325ULL) {
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

inline long long binomial_ll(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  long long r = 1;
  for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace fclab

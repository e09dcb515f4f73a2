#include "qres/modular.hpp"

#include <ostream>
#include <string>
#include <utility>

#include "qres/error.hpp"

namespace qres {

Modulus::Modulus(std::uint64_t n) : n_(n) {
  if (n < 3 || n % 2 == 0 || n >= kMaxModulus) {
    throw DomainError("modulus must be odd with 3 <= n < 2^62, got " + std::to_string(n));
  }
}

std::uint64_t Modulus::reduce(std::int64_t x) const noexcept {
  if (x >= 0) return static_cast<std::uint64_t>(x) % n_;
  // -(x+1) avoids overflow at INT64_MIN
  const std::uint64_t r = static_cast<std::uint64_t>(-(x + 1)) % n_;
  return n_ - 1 - r;
}

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t n) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % n);
}

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t n) {
  std::uint64_t r = 1 % n;
  b %= n;
  while (e != 0) {
    if (e & 1) r = mulmod(r, b, n);
    b = mulmod(b, b, n);
    e >>= 1;
  }
  return r;
}

bool miller_rabin_witness(std::uint64_t n, std::uint64_t a, std::uint64_t d, int s) {
  std::uint64_t x = powmod(a, d, n);
  if (x == 1 || x == n - 1) return false;
  for (int r = 1; r < s; ++r) {
    x = mulmod(x, x, n);
    if (x == n - 1) return false;
  }
  return true;
}

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // This base set is exact below 3.3 * 10^24.
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (miller_rabin_witness(n, a, d, s)) return false;
  }
  return true;
}

OddPrime::OddPrime(std::uint64_t p) : Modulus(p >= 3 && p % 2 == 1 ? p : 3) {
  if (p < 3 || p % 2 == 0 || p >= kMaxPrime || !is_prime(p)) {
    throw DomainError("expected an odd prime below 2^31, got " + std::to_string(p));
  }
  mod4_ = static_cast<std::uint8_t>(p % 4);
  mod8_ = static_cast<std::uint8_t>(p % 8);
  mod12_ = static_cast<std::uint8_t>(p % 12);
  mod20_ = static_cast<std::uint8_t>(p % 20);
  mod24_ = static_cast<std::uint8_t>(p % 24);
}

Sign::Sign(int v) : v_(static_cast<std::int8_t>(v)) {
  if (v < -1 || v > 1) throw DomainError("sign must be -1, 0 or 1, got " + std::to_string(v));
}

std::ostream& operator<<(std::ostream& os, Sign s) { return os << s.value(); }

std::ostream& operator<<(std::ostream& os, const Residue& r) {
  return os << r.value << " (mod " << r.modulus << ")";
}

std::uint64_t pow_residue(std::uint64_t base, std::uint64_t exp, const Modulus& m) noexcept {
  return powmod(base, exp, m.value());
}

Residue mod_pow(std::int64_t base, std::uint64_t exp, const Modulus& m) {
  return {powmod(m.reduce(base), exp, m.value()), m.value()};
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) noexcept {
  while (b != 0) {
    const std::uint64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

Residue mod_inv(std::int64_t a, const Modulus& m) {
  const std::int64_t n = static_cast<std::int64_t>(m.value());
  std::int64_t r0 = n;
  std::int64_t r1 = static_cast<std::int64_t>(m.reduce(a));
  std::int64_t t0 = 0;
  std::int64_t t1 = 1;
  while (r1 != 0) {
    const std::int64_t q = r0 / r1;
    std::int64_t tmp = r0 - q * r1;
    r0 = r1;
    r1 = tmp;
    tmp = t0 - q * t1;
    t0 = t1;
    t1 = tmp;
  }
  if (r0 != 1) {
    throw NotInvertible(std::to_string(a) + " is not invertible mod " + std::to_string(m.value()));
  }
  return {m.reduce(t0), m.value()};
}

Sign jacobi(std::int64_t x, const Modulus& n) noexcept {
  std::uint64_t a = n.reduce(x);
  std::uint64_t m = n.value();
  int result = 1;
  while (a != 0) {
    while ((a & 1) == 0) {
      a >>= 1;
      const std::uint64_t r = m & 7;
      if (r == 3 || r == 5) result = -result;
    }
    std::swap(a, m);
    if ((a & 3) == 3 && (m & 3) == 3) result = -result;
    a %= m;
  }
  return m == 1 ? Sign(result) : Sign::zero();
}

Sign euler_criterion(std::int64_t x, const OddPrime& p) noexcept {
  const std::uint64_t e = powmod(p.reduce(x), p.half(), p.value());
  if (e == 0) return Sign::zero();
  return e == 1 ? Sign::plus() : Sign::minus();
}

Residue rational_residue(std::int64_t a, std::int64_t b, const Modulus& n) {
  const Residue inv = mod_inv(b, n);
  return {n.mul(n.reduce(a), inv.value), n.value()};
}

Residue factorial_mod(std::uint64_t m, const Modulus& p) noexcept {
  std::uint64_t r = 1;
  for (std::uint64_t k = 2; k <= m && r != 0; ++k) r = p.mul(r, k % p.value());
  return {r, p.value()};
}

Residue double_factorial_mod(std::uint64_t m, const Modulus& p) noexcept {
  std::uint64_t r = 1;
  for (std::uint64_t k = m; k >= 2 && r != 0; k -= 2) r = p.mul(r, k % p.value());
  return {r, p.value()};
}

Residue binom_mod(std::uint64_t n, std::uint64_t k, const Modulus& m) {
  if (k > n) {
    throw DomainError("binom_mod: k = " + std::to_string(k) + " exceeds n = " + std::to_string(n));
  }
  if (k > n - k) k = n - k;
  std::uint64_t num = 1;
  std::uint64_t den = 1;
  for (std::uint64_t i = 0; i < k; ++i) {
    num = m.mul(num, (n - i) % m.value());
    den = m.mul(den, (i + 1) % m.value());
  }
  if (gcd_u64(den, m.value()) != 1) {
    throw DomainError("binom_mod: " + std::to_string(k) + "! is not invertible mod " +
                      std::to_string(m.value()));
  }
  const Residue inv = mod_inv(static_cast<std::int64_t>(den), m);
  return {m.mul(num, inv.value), m.value()};
}

}  // namespace qres

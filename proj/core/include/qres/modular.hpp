#pragma once

// Exact modular arithmetic on 64-bit words.
//
// Bounds: a Modulus is odd, >= 3 and < 2^62; products of two residues are
// formed in unsigned __int128, so nothing overflows. An OddPrime is further
// restricted to p < 2^31 so that p^2 is itself a valid Modulus (the mod p^2
// binomial checks) and so brute-force loops can form i*j in plain 64-bit.

#include <compare>
#include <cstdint>
#include <iosfwd>

namespace qres {

__extension__ using u128 = unsigned __int128;

inline constexpr std::uint64_t kMaxModulus = std::uint64_t{1} << 62;
inline constexpr std::uint64_t kMaxPrime = std::uint64_t{1} << 31;

class Modulus {
 public:
  /// Throws DomainError unless n is odd, 3 <= n < 2^62.
  explicit Modulus(std::uint64_t n);

  [[nodiscard]] constexpr std::uint64_t value() const noexcept { return n_; }

  /// Canonical representative of x in [0, n).
  [[nodiscard]] std::uint64_t reduce(std::int64_t x) const noexcept;

  [[nodiscard]] std::uint64_t mul(std::uint64_t a, std::uint64_t b) const noexcept {
    return static_cast<std::uint64_t>(static_cast<u128>(a) * b % n_);
  }
  [[nodiscard]] std::uint64_t add(std::uint64_t a, std::uint64_t b) const noexcept {
    const std::uint64_t s = a + b;
    return s >= n_ ? s - n_ : s;
  }
  [[nodiscard]] std::uint64_t sub(std::uint64_t a, std::uint64_t b) const noexcept {
    return a >= b ? a - b : a + (n_ - b);
  }
  [[nodiscard]] std::uint64_t neg(std::uint64_t a) const noexcept { return a == 0 ? 0 : n_ - a; }

  friend bool operator==(const Modulus&, const Modulus&) = default;

 private:
  std::uint64_t n_;
};

/// Deterministic Miller-Rabin, exact for all n < 2^64.
[[nodiscard]] bool is_prime(std::uint64_t n) noexcept;

/// An odd prime p < 2^31 with its small residue classes cached.
class OddPrime : public Modulus {
 public:
  /// Throws DomainError unless p is an odd prime below 2^31.
  explicit OddPrime(std::uint64_t p);

  [[nodiscard]] std::uint64_t mod4() const noexcept { return mod4_; }
  [[nodiscard]] std::uint64_t mod8() const noexcept { return mod8_; }
  [[nodiscard]] std::uint64_t mod12() const noexcept { return mod12_; }
  [[nodiscard]] std::uint64_t mod20() const noexcept { return mod20_; }
  [[nodiscard]] std::uint64_t mod24() const noexcept { return mod24_; }
  /// (p - 1) / 2
  [[nodiscard]] std::uint64_t half() const noexcept { return value() / 2; }

 private:
  std::uint8_t mod4_, mod8_, mod12_, mod20_, mod24_;
};

/// A value in {-1, 0, +1}.
class Sign {
 public:
  /// Defaults to +1, the value of an empty product.
  constexpr Sign() noexcept = default;
  /// Throws DomainError for anything but -1, 0, 1.
  explicit Sign(int v);

  static constexpr Sign plus() noexcept { return Sign(Raw{1}); }
  static constexpr Sign minus() noexcept { return Sign(Raw{-1}); }
  static constexpr Sign zero() noexcept { return Sign(Raw{0}); }
  /// (-1)^e for any integer exponent, negative included.
  static constexpr Sign parity(std::int64_t e) noexcept {
    return (e % 2 == 0) ? plus() : minus();
  }

  [[nodiscard]] constexpr int value() const noexcept { return v_; }
  [[nodiscard]] constexpr bool is_zero() const noexcept { return v_ == 0; }

  /// The sign as a residue mod m: -1 maps to m - 1.
  [[nodiscard]] std::uint64_t to_residue(const Modulus& m) const noexcept {
    return v_ >= 0 ? static_cast<std::uint64_t>(v_) : m.value() - 1;
  }

  constexpr Sign operator-() const noexcept { return Sign(Raw{-v_}); }
  friend constexpr Sign operator*(Sign a, Sign b) noexcept { return Sign(Raw{a.v_ * b.v_}); }
  Sign& operator*=(Sign o) noexcept {
    v_ *= o.v_;
    return *this;
  }
  friend constexpr bool operator==(Sign, Sign) = default;

 private:
  struct Raw {
    int v;
  };
  constexpr explicit Sign(Raw r) noexcept : v_(static_cast<std::int8_t>(r.v)) {}
  std::int8_t v_ = 1;
};

std::ostream& operator<<(std::ostream& os, Sign s);

/// An integer in [0, modulus).
struct Residue {
  std::uint64_t value = 0;
  std::uint64_t modulus = 1;

  friend bool operator==(const Residue&, const Residue&) = default;
};

std::ostream& operator<<(std::ostream& os, const Residue& r);

[[nodiscard]] Residue mod_pow(std::int64_t base, std::uint64_t exp, const Modulus& m);
/// Same, with the base already reduced.
[[nodiscard]] std::uint64_t pow_residue(std::uint64_t base, std::uint64_t exp, const Modulus& m) noexcept;

/// Throws NotInvertible when gcd(a, m) != 1.
[[nodiscard]] Residue mod_inv(std::int64_t a, const Modulus& m);

/// Jacobi symbol (x/n) by the binary algorithm; negative x allowed.
[[nodiscard]] Sign jacobi(std::int64_t x, const Modulus& n) noexcept;

/// Legendre symbol (x/p).
[[nodiscard]] inline Sign legendre(std::int64_t x, const OddPrime& p) noexcept { return jacobi(x, p); }

/// Legendre symbol via Euler's criterion x^((p-1)/2); the independent route to legendre().
[[nodiscard]] Sign euler_criterion(std::int64_t x, const OddPrime& p) noexcept;

/// {a/b}_n: the r in [0, n) with b*r == a (mod n). Throws NotInvertible.
[[nodiscard]] Residue rational_residue(std::int64_t a, std::int64_t b, const Modulus& n);

[[nodiscard]] Residue factorial_mod(std::uint64_t m, const Modulus& p) noexcept;

/// m!! = m (m-2) (m-4) ... down to 1 or 2, with 0!! = 1.
[[nodiscard]] Residue double_factorial_mod(std::uint64_t m, const Modulus& p) noexcept;

/// C(n, k) mod m. Throws DomainError if k > n or k! is not invertible mod m.
[[nodiscard]] Residue binom_mod(std::uint64_t n, std::uint64_t k, const Modulus& m);

[[nodiscard]] std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) noexcept;

/// Floor division toward negative infinity.
[[nodiscard]] constexpr std::int64_t floor_div(std::int64_t a, std::int64_t b) noexcept {
  const std::int64_t q = a / b;
  return (a % b != 0 && ((a < 0) != (b < 0))) ? q - 1 : q;
}

/// Ceiling division toward positive infinity.
[[nodiscard]] constexpr std::int64_t ceil_div(std::int64_t a, std::int64_t b) noexcept {
  return -floor_div(-a, b);
}

}  // namespace qres

#include "qres/products.hpp"

#include <string>

#include "qres/error.hpp"

namespace qres {

namespace {

// Per-prime reduction of the form coefficients and the square table.
struct ReducedForm {
  std::uint64_t a, b, c;
  std::vector<std::uint64_t> csq;  // c j^2 mod p
  std::vector<std::uint64_t> asq;  // a i^2 mod p

  ReducedForm(const QuadraticForm& f, const OddPrime& p, std::uint64_t limit)
      : a(p.reduce(f.a)), b(p.reduce(f.b)), c(p.reduce(f.c)), csq(limit + 1), asq(limit + 1) {
    for (std::uint64_t k = 1; k <= limit; ++k) {
      const std::uint64_t k2 = k * k % p.value();
      asq[k] = a * k2 % p.value();
      csq[k] = c * k2 % p.value();
    }
  }

  [[nodiscard]] std::uint64_t at(std::uint64_t i, std::uint64_t j, std::uint64_t pv) const noexcept {
    std::uint64_t v = asq[i] + (b * i % pv) * j % pv + csq[j];
    if (v >= pv) v -= pv;
    if (v >= pv) v -= pv;
    return v;
  }
};

void accumulate(ProductValue& acc, std::uint64_t factor, std::uint64_t pv) {
  ++acc.total;
  if (factor == 0) {
    ++acc.skipped;
    return;
  }
  acc.value.value = acc.value.value * factor % pv;
}

ProductValue empty_product(const OddPrime& p) { return {{1, p.value()}, 0, 0}; }

void require_above_three(const OddPrime& p, const char* what) {
  if (p.value() <= 3) throw DomainError(std::string(what) + " requires p > 3");
}

}  // namespace

LegendreTable::LegendreTable(const OddPrime& p) : p_(p), symbols_(p.value(), -1) {
  const std::uint64_t pv = p.value();
  symbols_[0] = 0;
  for (std::uint64_t k = 1; k <= p.half(); ++k) symbols_[k * k % pv] = 1;
}

ProductValue product_S(const QuadraticForm& f, const OddPrime& p) {
  const std::uint64_t pv = p.value();
  const ReducedForm rf(f, p, pv - 1);
  ProductValue acc = empty_product(p);
  for (std::uint64_t i = 1; i < pv; ++i) {
    for (std::uint64_t j = i + 1; j < pv; ++j) accumulate(acc, rf.at(i, j, pv), pv);
  }
  return acc;
}

ProductValue product_T(const QuadraticForm& f, const OddPrime& p) {
  const std::uint64_t pv = p.value();
  const std::uint64_t h = p.half();
  const ReducedForm rf(f, p, h);
  ProductValue acc = empty_product(p);
  for (std::uint64_t i = 1; i <= h; ++i) {
    for (std::uint64_t j = 1; j <= h; ++j) accumulate(acc, rf.at(i, j, pv), pv);
  }
  return acc;
}

ProductValue product_braces(std::int64_t a, std::int64_t b, const OddPrime& p) {
  const std::uint64_t pv = p.value();
  const std::uint64_t ar = p.reduce(a);
  const std::uint64_t br = p.reduce(b);
  if (p.mul(ar, br) != pv - 1) {
    throw DomainError("product_braces requires ab == -1 (mod " + std::to_string(pv) + ")");
  }
  const std::uint64_t h = p.half();
  ProductValue acc = empty_product(p);
  for (std::uint64_t i = 1; i <= h; ++i) {
    for (std::uint64_t j = 1; j <= h; ++j) {
      ++acc.total;
      const std::uint64_t t1 = p.sub(i, ar * j % pv);
      const std::uint64_t t2 = p.sub(i, br * j % pv);
      if (t1 == 0 || t2 == 0) {
        ++acc.skipped;
        continue;
      }
      acc.value.value = acc.value.value * (t1 * t2 % pv) % pv;
    }
  }
  return acc;
}

DoubleFactorialProducts double_factorial_products(const OddPrime& p) {
  require_above_three(p, "double_factorial_products");
  const std::uint64_t pv = p.value();
  const std::uint64_t h = p.half();
  ProductValue plus = empty_product(p);
  ProductValue minus = empty_product(p);
  for (std::uint64_t i = 1; i <= h; ++i) {
    for (std::uint64_t j = 1; j <= h; ++j) {
      accumulate(plus, (2 * i + j) % pv, pv);
      accumulate(minus, p.reduce(static_cast<std::int64_t>(2 * i) - static_cast<std::int64_t>(j)), pv);
    }
  }
  const std::uint64_t a = p.mul(double_factorial_mod(h, p).value, plus.value.value);
  const std::uint64_t b = p.mul(double_factorial_mod(h - 1, p).value, minus.value.value);
  return {{a, pv}, {b, pv}};
}

Sign symbol_product_quadratic(const QuadraticForm& f, const LegendreTable& table, TriangleRange range) {
  const OddPrime& p = table.prime();
  const std::uint64_t pv = p.value();
  const std::uint64_t h = p.half();
  const ReducedForm rf(f, p, h);
  const auto sym = table.raw();
  const std::uint64_t offset = range == TriangleRange::strict_upper ? 1 : 0;
  std::uint64_t negatives = 0;
  for (std::uint64_t i = 1; i <= h; ++i) {
    for (std::uint64_t j = i + offset; j <= h; ++j) negatives += sym[rf.at(i, j, pv)] < 0;
  }
  return Sign::parity(static_cast<std::int64_t>(negatives));
}

Sign symbol_product_quadratic(const QuadraticForm& f, const OddPrime& p, TriangleRange range) {
  return symbol_product_quadratic(f, LegendreTable(p), range);
}

Sign symbol_product_linear(std::int64_t r, std::int64_t s, const LegendreTable& table, LinearRange range) {
  const OddPrime& p = table.prime();
  const std::uint64_t h = p.half();
  const std::uint64_t rr = p.reduce(r);
  const std::uint64_t sr = p.reduce(s);
  const auto sym = table.raw();
  std::uint64_t negatives = 0;
  std::uint64_t row = 0;  // r i mod p
  for (std::uint64_t i = 1; i <= h; ++i) {
    row = p.add(row, rr);
    const std::uint64_t j0 = range == LinearRange::strict_upper ? i + 1 : 1;
    if (j0 > h) continue;
    std::uint64_t v = p.add(row, p.mul(j0, sr));
    for (std::uint64_t j = j0; j <= h; ++j) {
      negatives += sym[v] < 0;
      v = p.add(v, sr);
    }
  }
  return Sign::parity(static_cast<std::int64_t>(negatives));
}

Sign symbol_product_linear(std::int64_t r, std::int64_t s, const OddPrime& p, LinearRange range) {
  return symbol_product_linear(r, s, LegendreTable(p), range);
}

ProductValue product_background(const OddPrime& p, BackgroundProduct which) {
  if (p.value() < 5) throw DomainError("product_background requires p >= 5");
  const std::uint64_t pv = p.value();
  const std::uint64_t h = p.half();
  std::vector<std::uint64_t> sq(h + 1);
  for (std::uint64_t k = 1; k <= h; ++k) sq[k] = k * k % pv;
  ProductValue acc = empty_product(p);
  switch (which) {
    case BackgroundProduct::squares_diff_triangular:
      for (std::uint64_t i = 1; i <= h; ++i)
        for (std::uint64_t j = i + 1; j <= h; ++j) accumulate(acc, p.sub(sq[j], sq[i]), pv);
      break;
    case BackgroundProduct::squares_diff_full:
      for (std::uint64_t i = 1; i <= h; ++i)
        for (std::uint64_t j = 1; j <= h; ++j) accumulate(acc, p.sub(sq[i], sq[j]), pv);
      break;
    case BackgroundProduct::sum_squares_triangular:
      for (std::uint64_t i = 1; i <= h; ++i)
        for (std::uint64_t j = i + 1; j <= h; ++j) accumulate(acc, p.add(sq[i], sq[j]), pv);
      break;
  }
  return acc;
}

std::uint64_t qr_count_interval(const LegendreTable& table, std::int64_t lo, std::int64_t hi, Sign sign) {
  const auto pv = static_cast<std::int64_t>(table.prime().value());
  if (lo < 1 || hi < lo || hi >= pv) {
    throw DomainError("qr_count_interval: need 1 <= lo <= hi < p, got [" + std::to_string(lo) + ", " +
                      std::to_string(hi) + "]");
  }
  if (sign.is_zero()) throw DomainError("qr_count_interval: sign must be +1 or -1");
  return qr_count_range(table, lo, hi, sign);
}

std::uint64_t qr_count_interval(const OddPrime& p, std::int64_t lo, std::int64_t hi, Sign sign) {
  return qr_count_interval(LegendreTable(p), lo, hi, sign);
}

std::uint64_t qr_count_range(const LegendreTable& table, std::int64_t lo, std::int64_t hi, Sign sign) {
  const auto pv = static_cast<std::int64_t>(table.prime().value());
  if (lo < 1) lo = 1;
  if (hi > pv - 1) hi = pv - 1;
  const auto sym = table.raw();
  std::uint64_t count = 0;
  for (std::int64_t k = lo; k <= hi; ++k) count += sym[static_cast<std::size_t>(k)] == sign.value();
  return count;
}

std::uint64_t qr_count_below(const LegendreTable& table, std::int64_t num, std::int64_t den, Sign sign) {
  const auto pv = static_cast<std::int64_t>(table.prime().value());
  // largest k with k * den < p * num
  const std::int64_t hi = floor_div(pv * num - 1, den);
  return qr_count_range(table, 1, hi, sign);
}

}  // namespace qres

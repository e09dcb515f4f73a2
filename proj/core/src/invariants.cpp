#include "qres/invariants.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "qres/error.hpp"

namespace qres {

namespace {

void require_mod4(const OddPrime& p, std::uint64_t r, const char* what) {
  if (p.mod4() != r) {
    throw DomainError(std::string(what) + " requires p == " + std::to_string(r) + " (mod 4), got p = " +
                      std::to_string(p.value()));
  }
}

std::uint64_t isqrt(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

std::int64_t mod_floor(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace

ClassNumber h_minus_4p(const LegendreTable& table) {
  const OddPrime& p = table.prime();
  require_mod4(p, 1, "h_minus_4p");
  const std::uint64_t nonres = qr_count_below(table, 1, 4, Sign::minus());
  const auto h = static_cast<std::int64_t>(p.half()) - 4 * static_cast<std::int64_t>(nonres);
  if (h < 1) throw IntegrityError("h(-4p) came out non-positive for p = " + std::to_string(p.value()));
  return {-4 * static_cast<std::int64_t>(p.value()), static_cast<std::uint64_t>(h)};
}

ClassNumber h_minus_4p(const OddPrime& p) { return h_minus_4p(LegendreTable(p)); }

ClassNumber h_minus_3p(const LegendreTable& table) {
  const OddPrime& p = table.prime();
  require_mod4(p, 1, "h_minus_3p");
  const auto pos = static_cast<std::int64_t>(qr_count_below(table, 1, 3, Sign::plus()));
  const auto neg = static_cast<std::int64_t>(qr_count_below(table, 1, 3, Sign::minus()));
  const std::int64_t h = 2 * (pos - neg);
  if (h < 1) throw IntegrityError("h(-3p) came out non-positive for p = " + std::to_string(p.value()));
  return {-3 * static_cast<std::int64_t>(p.value()), static_cast<std::uint64_t>(h)};
}

ClassNumber h_minus_3p(const OddPrime& p) { return h_minus_3p(LegendreTable(p)); }

Sign mordell_sign(const OddPrime& p) {
  require_mod4(p, 3, "mordell_sign");
  if (p.value() <= 3) throw DomainError("mordell_sign requires p > 3");
  const std::uint64_t f = factorial_mod(p.half(), p).value;
  if (f == 1) return Sign::plus();
  if (f == p.value() - 1) return Sign::minus();
  throw IntegrityError("((p-1)/2)! is not +/-1 mod " + std::to_string(p.value()));
}

ClassNumber h_minus_p(const LegendreTable& table) {
  const OddPrime& p = table.prime();
  require_mod4(p, 3, "h_minus_p");
  if (p.value() <= 3) throw DomainError("h_minus_p requires p > 3");
  const auto pos = static_cast<std::int64_t>(qr_count_range(table, 1, static_cast<std::int64_t>(p.half()), Sign::plus()));
  const auto neg = static_cast<std::int64_t>(qr_count_range(table, 1, static_cast<std::int64_t>(p.half()), Sign::minus()));
  const std::int64_t sum = pos - neg;
  const std::int64_t den = 2 - table[2].value();
  if (sum <= 0 || sum % den != 0) {
    throw IntegrityError("character sum " + std::to_string(sum) + " not a positive multiple of " +
                         std::to_string(den) + " for p = " + std::to_string(p.value()));
  }
  return {-static_cast<std::int64_t>(p.value()), static_cast<std::uint64_t>(sum / den)};
}

ClassNumber h_minus_p(const OddPrime& p) { return h_minus_p(LegendreTable(p)); }

TwoSquares two_square_decomposition(const OddPrime& p) {
  require_mod4(p, 1, "two_square_decomposition");
  const std::uint64_t pv = p.value();
  const std::uint64_t z = factorial_mod(p.half(), p).value;  // z^2 == -1

  // Euclid on (p, z) until the remainder drops below sqrt(p).
  const std::uint64_t root = isqrt(pv);
  std::uint64_t r0 = pv;
  std::uint64_t r1 = z;
  while (r1 > root) {
    const std::uint64_t t = r0 % r1;
    r0 = r1;
    r1 = t;
  }
  const std::uint64_t a = r1;
  const std::uint64_t rest = pv - a * a;
  const std::uint64_t b = isqrt(rest);
  if (b * b != rest) throw IntegrityError("descent did not produce a sum of two squares for p = " + std::to_string(pv));

  auto odd = static_cast<std::int64_t>(a % 2 == 1 ? a : b);
  auto even = static_cast<std::int64_t>(a % 2 == 1 ? b : a);
  if (mod_floor(odd, 4) != 1) odd = -odd;
  // y is +/- z x; pick the sign that makes it z x.
  if (p.reduce(even) != p.mul(z, p.reduce(odd))) even = -even;
  if (p.reduce(even) != p.mul(z, p.reduce(odd))) {
    throw IntegrityError("two-square normalization failed for p = " + std::to_string(pv));
  }
  return {pv, odd, even};
}

std::vector<VerificationRecord> background_checks(const LegendreTable& table) {
  const OddPrime& p = table.prime();
  require_mod4(p, 1, "background_checks");
  const std::uint64_t pv = p.value();
  const std::uint64_t quarter = (pv - 1) / 4;
  const TwoSquares ts = two_square_decomposition(p);
  const std::uint64_t fact = factorial_mod(p.half(), p).value;
  const std::uint64_t two_q = pow_residue(2, quarter, p);
  const std::uint64_t res_below_quarter = qr_count_below(table, 1, 4, Sign::plus());
  const std::uint64_t nonres_below_quarter = qr_count_below(table, 1, 4, Sign::minus());
  const auto as_int = [](std::uint64_t v) { return static_cast<std::int64_t>(v); };
  const Params none;

  std::vector<VerificationRecord> out;
  out.push_back(make_record("bg.dirichlet2", pv, none, two_q == 1 ? 1 : 0, ts.y % 8 == 0 ? 1 : 0));

  const std::int64_t burde_target = mod_floor((quarter % 2 == 0 ? 1 : -1) - 1, 8);
  out.push_back(make_record("bg.burde", pv, none, res_below_quarter % 2 == 0 ? 1 : 0,
                            mod_floor(ts.y, 8) == burde_target ? 1 : 0));

  std::uint64_t wc = Sign::parity(as_int(nonres_below_quarter)).to_residue(p);
  if (p.mod8() == 5) wc = p.mul(wc, fact);
  out.push_back(make_record("bg.williams", pv, none, as_int(two_q), as_int(wc)));

  const std::uint64_t central = binom_mod(p.half(), quarter, p).value;
  out.push_back(make_record("bg.gauss", pv, none, as_int(central), as_int(p.reduce(2 * ts.x))));

  const Modulus p2(pv * pv);
  const std::uint64_t central_p2 = binom_mod(p.half(), quarter, p2).value;
  const std::uint64_t lead = p2.mul(p2.add(pow_residue(2, pv - 1, p2), 1), mod_inv(2, p2).value);
  const std::uint64_t two_x = p2.reduce(2 * ts.x);
  const std::uint64_t corr = p2.sub(two_x, p2.mul(pv, mod_inv(static_cast<std::int64_t>(two_x), p2).value));
  out.push_back(make_record("bg.cde", pv, none, as_int(central_p2), as_int(p2.mul(lead, corr))));

  if (pv > 3) {
    const std::uint64_t lhs = pow_residue(p.reduce(-3), quarter, p);
    const auto h = static_cast<std::int64_t>(h_minus_3p(table).h);
    std::int64_t rhs = -1;  // stays -1 if the exponent is not an integer
    if (p.mod12() == 1 && h % 4 == 0) {
      rhs = as_int(Sign::parity(h / 4).to_residue(p));
    } else if (p.mod12() == 5 && (h - 2) % 4 == 0) {
      rhs = as_int(p.mul(Sign::parity((h - 2) / 4).to_residue(p), fact));
    }
    out.push_back(make_record("bg.lerch", pv, {{"h3p", h}}, as_int(lhs), rhs));
  }
  return out;
}

std::vector<VerificationRecord> background_checks(const OddPrime& p) {
  return background_checks(LegendreTable(p));
}

}  // namespace qres

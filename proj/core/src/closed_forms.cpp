#include "qres/closed_forms.hpp"

#include <string>

#include "qres/error.hpp"
#include "qres/invariants.hpp"
#include "qres/lucas.hpp"

namespace qres {

namespace {

// legendre of a product of residues already in [0, p)
Sign sym(const OddPrime& p, std::initializer_list<std::uint64_t> factors) {
  std::uint64_t v = 1;
  for (std::uint64_t f : factors) v = p.mul(v, f);
  return legendre(static_cast<std::int64_t>(v), p);
}

ClosedFormResult of_sign(Sign s, const OddPrime& p, std::string_view label) {
  return {{s.to_residue(p), p.value()}, label, std::nullopt};
}

ClosedFormResult of_value(std::uint64_t v, const OddPrime& p, std::string_view label) {
  return {{v, p.value()}, label, std::nullopt};
}

void require_delta(Sign delta) {
  if (delta.is_zero()) throw DomainError("delta must be +1 or -1");
}

// k in {0, 1} with r == (-1)^k ((p-1)/2)! (mod p)
int factorial_sign_index(std::uint64_t r, std::uint64_t fact, const OddPrime& p) {
  if (r == fact) return 0;
  if (r == p.neg(fact)) return 1;
  throw Unreachable("residue " + std::to_string(r) + " is not +/-((p-1)/2)! mod " + std::to_string(p.value()));
}

}  // namespace

ClosedFormResult closed_S(const QuadraticForm& f, const OddPrime& p) {
  const std::uint64_t a = p.reduce(f.a);
  const std::uint64_t b = p.reduce(f.b);
  const std::uint64_t c = p.reduce(f.c);
  const std::uint64_t s = p.add(p.add(a, b), c);

  if (a != 0 && c != 0 && s != 0) {
    const std::uint64_t disc = p.sub(p.mul(b, b), p.mul(4, p.mul(a, c)));
    if (disc == 0) return of_sign(sym(p, {a, s}), p, s_case::kDiscZero);
    return of_sign(-sym(p, {a, c, s, disc}), p, s_case::kDiscNonzero);
  }

  const bool za = a == 0;
  const bool zb = b == 0;
  const bool zc = c == 0;
  const std::uint64_t bc = p.add(b, c);
  const std::uint64_t ab = p.add(a, b);
  const std::uint64_t amc = p.sub(a, c);

  if (za && zb && zc) {
    return {{0, p.value()}, s_case::kAllZero, Residue{1, p.value()}};
  }
  if (!za && zb && zc) return of_sign(-sym(p, {p.neg(a)}), p, s_case::kOnlyA);
  if (za && !zb && zc) return of_sign(-sym(p, {b}), p, s_case::kOnlyB);
  if (za && zb && !zc) return of_sign(-sym(p, {p.neg(c)}), p, s_case::kOnlyC);
  if (za && !zb && !zc && bc == 0) return of_sign(-sym(p, {c}), p, s_case::kAZeroBcOpposite);
  if (!za && !zb && ab == 0 && zc) return of_sign(-sym(p, {a}), p, s_case::kCZeroAbOpposite);
  if (!za && !zc && amc == 0 && s == 0) return of_sign(-sym(p, {p.neg(a)}), p, s_case::kAEqualsC);
  if (!za && !zc && amc != 0 && s == 0) return of_sign(sym(p, {p.neg(a), c}), p, s_case::kSumZero);
  if (!za && !zb && ab != 0 && zc) return of_sign(sym(p, {p.neg(a), ab}), p, s_case::kCZero);
  if (za && !zb && !zc && bc != 0) return of_sign(sym(p, {p.neg(c), bc}), p, s_case::kAZero);

  throw CaseFallthrough("closed_S: no case for (" + std::to_string(f.a) + ", " + std::to_string(f.b) + ", " +
                        std::to_string(f.c) + ") mod " + std::to_string(p.value()));
}

ClosedFormResult closed_braces(std::int64_t a_in, std::int64_t b_in, const OddPrime& p) {
  const std::uint64_t a = p.reduce(a_in);
  const std::uint64_t b = p.reduce(b_in);
  if (p.mul(a, b) != p.value() - 1) {
    throw DomainError("closed_braces requires ab == -1 (mod " + std::to_string(p.value()) + ")");
  }
  // The symbol side gives -{a, b}_p; negate it.
  if (p.mod4() == 3) return of_sign(-sym(p, {a, p.sub(a, b)}), p, "p=3(4)");
  if (a != b) return of_sign(-sym(p, {p.sub(a, b)}), p, "p=1(4),a!=b");

  const std::uint64_t fact = factorial_mod(p.half(), p).value;
  const auto pv = static_cast<std::int64_t>(p.value());
  if (p.mod8() == 1) {
    return of_value(p.mul(Sign::parity((pv + 7) / 8).to_residue(p), fact), p, "a=b,p=1(8)");
  }
  const int k = factorial_sign_index(a, fact, p);
  return of_sign(Sign::parity(k + (pv - 5) / 8), p, "a=b,p=5(8)");
}

ClosedFormResult closed_T_general(std::int64_t A, const OddPrime& p) {
  const std::uint64_t a = p.reduce(A);
  const std::uint64_t disc = p.add(p.mul(a, a), 4 % p.value());
  const auto pv = static_cast<std::int64_t>(p.value());
  const std::uint64_t inv2 = (p.value() + 1) / 2;

  if (disc == 0) {
    if (p.mod4() != 1) {
      throw Unreachable("p | A^2 + 4 with p == 3 (mod 4), p = " + std::to_string(p.value()));
    }
    const std::uint64_t fact = factorial_mod(p.half(), p).value;
    const int k = factorial_sign_index(p.mul(a, inv2), fact, p);
    if (p.mod8() == 1) {
      return of_value(p.mul(Sign::parity((pv + 7) / 8).to_residue(p), fact), p, "p|disc,p=1(8)");
    }
    return of_sign(Sign::parity(k + (pv - 5) / 8), p, "p|disc,p=5(8)");
  }

  const Sign ds = legendre(static_cast<std::int64_t>(disc), p);
  if (ds == Sign::plus()) {
    if (p.mod4() == 1) return of_value(p.neg(pow_residue(disc, p.value() / 4, p)), p, "residue,p=1(4)");
    const std::uint64_t u = lucas_pair_mod(A, (p.value() - 1) / 2, p).u.value;
    const std::uint64_t v = p.mul(p.mul(pow_residue(disc, (p.value() + 1) / 4, p), u), inv2);
    return of_value(p.neg(v), p, "residue,p=3(4)");
  }
  const std::uint64_t neg_disc = p.neg(disc);
  if (p.mod4() == 1) return of_value(pow_residue(neg_disc, p.value() / 4, p), p, "nonresidue,p=1(4)");
  const std::uint64_t u = lucas_pair_mod(A, (p.value() + 1) / 2, p).u.value;
  return of_value(p.mul(p.mul(pow_residue(neg_disc, (p.value() + 1) / 4, p), u), inv2), p, "nonresidue,p=3(4)");
}

ClosedFormResult closed_T_fibonacci(const OddPrime& p) {
  if (p.value() == 5) throw DomainError("closed_T_fibonacci is undefined at p = 5");
  const auto pv = static_cast<std::int64_t>(p.value());
  const std::uint64_t e = p.value() / 4;
  switch (p.mod20()) {
    case 1:
    case 9:
      return of_value(p.neg(pow_residue(5, e, p)), p, "p=1,9(20)");
    case 13:
    case 17:
      return of_value(pow_residue(p.reduce(-5), e, p), p, "p=13,17(20)");
    case 3:
    case 7:
      return of_sign(Sign::parity(floor_div(pv - 10, 20)), p, "p=3,7(20)");
    default:  // 11, 19
      return of_sign(Sign::parity(floor_div(pv - 5, 10)), p, "p=11,19(20)");
  }
}

ClosedFormResult closed_T_pell(const OddPrime& p) {
  const auto pv = static_cast<std::int64_t>(p.value());
  const std::uint64_t e = p.value() / 4;
  switch (p.mod8()) {
    case 1:
      return of_value(p.neg(pow_residue(2, e, p)), p, "p=1(8)");
    case 5:
      return of_value(pow_residue(2, e, p), p, "p=5(8)");
    case 3:
      return of_sign(Sign::parity((pv - 3) / 8), p, "p=3(8)");
    default:
      return of_sign(Sign::parity((pv - 7) / 8), p, "p=7(8)");
  }
}

ClosedFormResult closed_T_form252(Sign delta, const OddPrime& p) {
  require_delta(delta);
  if (p.value() <= 3) throw DomainError("closed_T_form252 requires p > 3");
  const auto pv = static_cast<std::int64_t>(p.value());
  if (p.mod4() == 1) return of_sign(Sign::parity(floor_div(pv + 11, 12)), p, "p=1(4)");

  // (6/p) delta 2^delta 3^-delta C^(-2 delta), C = binom((p-3)/2, (p-3)/4)
  const std::uint64_t central = binom_mod((p.value() - 3) / 2, (p.value() - 3) / 4, p).value;
  const std::uint64_t inv3 = mod_inv(3, p).value;
  const std::uint64_t inv_c = mod_inv(static_cast<std::int64_t>(central), p).value;
  std::uint64_t v = legendre(6, p).to_residue(p);
  v = p.mul(v, delta.to_residue(p));
  if (delta == Sign::plus()) {
    v = p.mul(v, p.mul(2, inv3));
    v = p.mul(v, p.mul(inv_c, inv_c));
  } else {
    v = p.mul(v, p.mul(3, (p.value() + 1) / 2));
    v = p.mul(v, p.mul(central, central));
  }
  return of_value(v, p, "p=3(4)");
}

Sign closed_triangle_linear(Sign delta, const LegendreTable& table) {
  require_delta(delta);
  const OddPrime& p = table.prime();
  if (p.value() <= 3) throw DomainError("closed_triangle_linear requires p > 3");
  const auto pv = static_cast<std::int64_t>(p.value());
  if (p.mod4() == 1) {
    return Sign::parity(static_cast<std::int64_t>(qr_count_below(table, 1, 4, delta)));
  }
  if (p.mod8() == 3) return Sign::parity((pv - 3) / 8);
  // (-1)^{(h(-p)+1)/2} is the Mordell sign
  return Sign::parity((pv + 1) / 8) * mordell_sign(p);
}

Sign closed_triangle_linear(Sign delta, const OddPrime& p) { return closed_triangle_linear(delta, LegendreTable(p)); }

}  // namespace qres

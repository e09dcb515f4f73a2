#include "qres/conjectures.hpp"

#include <string>

#include "qres/error.hpp"
#include "qres/invariants.hpp"

namespace qres {

namespace {

constexpr std::array<std::string_view, 10> kNames = {"7.1", "7.2", "7.3", "7.4", "7.5",
                                                     "7.6", "7.7", "7.8", "7.9", "7.10"};

void require_admissible(Conjecture c, Sign delta, const OddPrime& p) {
  if (p.value() < conjecture_min_prime(c)) {
    throw DomainError("conjecture " + std::string(conjecture_name(c)) + " requires p >= " +
                      std::to_string(conjecture_min_prime(c)));
  }
  if (delta.is_zero()) throw DomainError("delta must be +1 or -1");
}

Sign par(std::int64_t e) { return Sign::parity(e); }
Sign par(std::uint64_t e) { return Sign::parity(static_cast<std::int64_t>(e)); }

// |{1 <= k < p/den : (k/p) = s}|
std::uint64_t below(const LegendreTable& t, std::int64_t den, Sign s) { return qr_count_below(t, 1, den, s); }

// (-1)^{(h(-p)+1)/2}
Sign h_plus(const OddPrime& p) { return mordell_sign(p); }
// (-1)^{(h(-p)-1)/2}
Sign h_minus(const OddPrime& p) { return -mordell_sign(p); }

[[noreturn]] void uncovered(Conjecture c, const OddPrime& p, std::uint64_t modulus) {
  throw DomainError("no arm of conjecture " + std::string(conjecture_name(c)) + " covers p == " +
                    std::to_string(p.value() % modulus) + " (mod " + std::to_string(modulus) + ")");
}

bool in(std::uint64_t r, std::initializer_list<std::uint64_t> set) {
  for (std::uint64_t v : set)
    if (v == r) return true;
  return false;
}

}  // namespace

Conjecture parse_conjecture(std::string_view id) {
  if (id.starts_with("conj")) id.remove_prefix(4);
  for (std::size_t i = 0; i < kNames.size(); ++i) {
    if (kNames[i] == id) return kAllConjectures[i];
  }
  throw UnknownItem("unknown conjecture id '" + std::string(id) + "'");
}

std::string_view conjecture_name(Conjecture c) noexcept { return kNames[static_cast<std::size_t>(c)]; }

bool conjecture_uses_delta(Conjecture c) noexcept { return c != Conjecture::c7_5; }

std::uint64_t conjecture_min_prime(Conjecture c) noexcept { return c == Conjecture::c7_8 ? 7 : 5; }

Sign conjecture_lhs(Conjecture c, Sign delta, const LegendreTable& t) {
  const OddPrime& p = t.prime();
  require_admissible(c, delta, p);
  const std::int64_t d = delta.value();
  const auto quad = [&](std::int64_t a, std::int64_t b, std::int64_t cc) {
    return symbol_product_quadratic({a, b, cc}, t, TriangleRange::strict_upper);
  };
  const auto lin = [&](std::int64_t r) { return symbol_product_linear(r, d, t, LinearRange::full_square); };
  const bool up = delta == Sign::plus();

  switch (c) {
    case Conjecture::c7_1: return quad(2, 5 * d, 2);
    case Conjecture::c7_2: return quad(1, d, 1);
    case Conjecture::c7_3: return quad(1, 3 * d, 1);
    case Conjecture::c7_4: return quad(1, 4 * d, 1);
    case Conjecture::c7_5: return symbol_product_quadratic({4, 0, 1}, t, TriangleRange::upper_with_diagonal);
    case Conjecture::c7_6: return up ? par(below(t, 3, Sign::minus())) * lin(3) : lin(3);
    case Conjecture::c7_7: return lin(4);
    case Conjecture::c7_8: return up ? par(below(t, 10, Sign::minus())) * lin(5) : lin(5);
    case Conjecture::c7_9: return lin(6);
    case Conjecture::c7_10: return up ? par(below(t, 4, Sign::minus())) * lin(8) : lin(8);
  }
  throw UnknownItem("unknown conjecture");
}

Sign conjecture_rhs(Conjecture c, Sign delta, const LegendreTable& t) {
  const OddPrime& p = t.prime();
  require_admissible(c, delta, p);
  const auto pv = static_cast<std::int64_t>(p.value());
  const bool up = delta == Sign::plus();
  const std::uint64_t m8 = p.mod8();
  const std::uint64_t m12 = p.mod12();
  const std::uint64_t m20 = p.mod20();
  const std::uint64_t m24 = p.mod24();

  switch (c) {
    case Conjecture::c7_1: {
      const int sum = legendre(-1, p).value() + legendre(2, p).value() + legendre(6, p).value() -
                      jacobi(pv, Modulus(3)).value();
      return legendre(delta.value(), p) * Sign(sum / 2);
    }
    case Conjecture::c7_2:
      if (up) return in(m24, {5, 11}) ? Sign::minus() : Sign::plus();
      return in(m24, {5, 7}) ? Sign::minus() : Sign::plus();
    case Conjecture::c7_3:
      if (up) return in(p.value() % 40, {19, 23, 27, 31}) ? Sign::minus() : Sign::plus();
      return in(m20, {7, 19}) ? Sign::minus() : Sign::plus();
    case Conjecture::c7_4: {
      const Sign sd = delta;
      if (m24 == 1) return Sign::plus();
      if (m24 == 17) return par(below(t, 4, Sign::minus()));
      if (m24 == 7) return sd * par(static_cast<std::int64_t>(below(t, 12, Sign::minus())) - 1);
      if (m24 == 19) return sd * par(below(t, 12, Sign::minus())) * h_minus(p);
      uncovered(c, p, 24);
    }
    case Conjecture::c7_5:
      return in(m20, {1, 7, 9, 19}) ? Sign::plus() : Sign::minus();
    case Conjecture::c7_6: {
      const std::uint64_t n3 = below(t, 3, Sign::minus());
      if (up) return in(m12, {1, 11}) ? Sign::plus() : par(pv / 12);
      switch (m12) {
        case 1: return par(n3 + (p.value() - 1) / 12);
        case 5: return par(static_cast<std::int64_t>(n3) - 1);
        case 7: return par(below(t, 6, Sign::plus()) + (p.value() + 1) / 4);
        default: return Sign::minus();
      }
    }
    case Conjecture::c7_7:
      if (up) {
        if (p.mod4() == 1) return Sign::plus();
        if (m8 == 3) return h_minus(p) * par(pv / 8);
        return par(below(t, 4, Sign::minus()));
      }
      return p.mod4() == 1 ? par((pv - 1) / 4) : par(pv / 8);
    case Conjecture::c7_8: {
      if (up) {
        if (in(m20, {1, 19, 3, 17})) return par(floor_div(pv + 1, 10));
        if (in(m20, {7, 13})) return par(pv / 20);
        return par(floor_div(pv + 9, 20));  // +/-9
      }
      const std::uint64_t n10 = below(t, 10, Sign::minus());
      if (in(m20, {3, 7})) return h_plus(p);
      if (m20 == 11) return par((pv + 9) / 20);
      if (m20 == 19) return par(n10) * h_minus(p);
      if (in(m20, {1, 17})) return par(n10) * par(floor_div(pv + 3, 20));
      return par(n10) * par(floor_div(pv - 3, 10));  // -7, 9
    }
    case Conjecture::c7_9: {
      if (up) {
        if (m24 == 1) return par(below(t, 12, Sign::minus()));
        if (in(m24, {5, 17, 13})) {
          // ceil((p+3)/4) <= k <= floor((p+1)/3)
          return par(qr_count_range(t, ceil_div(pv + 3, 4), floor_div(pv + 1, 3), Sign::minus()));
        }
        if (in(m24, {23, 19})) return h_plus(p) * par(floor_div(pv + 1, 24));
        return par(pv / 24 - 1);  // 7, 11
      }
      // (p+2)/4 < k < p/3
      return par(qr_count_range(t, floor_div(pv + 2, 4) + 1, floor_div(pv - 1, 3), Sign::plus()));
    }
    case Conjecture::c7_10:
      if (up) return m8 == 7 ? par((pv + 1) / 8) : Sign::plus();
      if (p.mod4() == 1) return par(below(t, 4, Sign::plus()));
      if (m8 == 3) return h_plus(p) * par((pv - 3) / 8);
      return Sign::minus();
  }
  throw UnknownItem("unknown conjecture");
}

Sign conjecture_rhs(Conjecture c, Sign delta, const OddPrime& p) { return conjecture_rhs(c, delta, LegendreTable(p)); }

ClosedFormResult conjecture_residue_rhs(Sign delta, const OddPrime& p) {
  if (delta.is_zero()) throw DomainError("delta must be +1 or -1");
  if (p.mod12() != 1) throw DomainError("residue companion of 7.4 requires p == 1 (mod 12)");
  return {{p.neg(pow_residue(3, p.value() / 4, p)), p.value()}, "p=1(12)", std::nullopt};
}

}  // namespace qres

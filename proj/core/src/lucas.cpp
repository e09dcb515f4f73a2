#include "qres/lucas.hpp"

#include <bit>
#include <string>

#include "qres/error.hpp"

namespace qres {

namespace {

std::uint64_t discriminant(std::int64_t A, const OddPrime& p) {
  const std::uint64_t a = p.reduce(A);
  return p.add(p.mul(a, a), 4 % p.value());
}

void require_nondegenerate(std::int64_t A, const OddPrime& p) {
  if (discriminant(A, p) == 0) {
    throw DomainError("p = " + std::to_string(p.value()) + " divides A^2 + 4 for A = " +
                      std::to_string(A));
  }
}

}  // namespace

LucasPair lucas_pair_mod(std::int64_t A, std::uint64_t n, const OddPrime& p) {
  const std::uint64_t a = p.reduce(A);
  const std::uint64_t d = discriminant(A, p);
  const std::uint64_t inv2 = (p.value() + 1) / 2;
  const std::uint64_t two = 2 % p.value();

  // Invariant: (u, v) = (u_m, v_m) for m = the bits of n consumed so far.
  std::uint64_t u = 0;
  std::uint64_t v = two;
  std::uint64_t m = 0;
  for (int bit = std::bit_width(n) - 1; bit >= 0; --bit) {
    // m -> 2m: u_{2m} = u_m v_m, v_{2m} = v_m^2 - 2(-1)^m
    const std::uint64_t u2 = p.mul(u, v);
    const std::uint64_t vv = p.mul(v, v);
    const std::uint64_t v2 = (m & 1) ? p.add(vv, two) : p.sub(vv, two);
    u = u2;
    v = v2;
    m *= 2;
    if ((n >> bit) & 1) {
      // m -> m+1: u' = (A u + v)/2, v' = (D u + A v)/2
      const std::uint64_t un = p.mul(p.add(p.mul(a, u), v), inv2);
      const std::uint64_t vn = p.mul(p.add(p.mul(d, u), p.mul(a, v)), inv2);
      u = un;
      v = vn;
      m += 1;
    }
  }
  return {A, n, {u, p.value()}, {v, p.value()}};
}

std::vector<VerificationRecord> entry_point_checks(std::int64_t A, const OddPrime& p) {
  require_nondegenerate(A, p);
  const std::uint64_t d = discriminant(A, p);
  const int sym = legendre(static_cast<std::int64_t>(d), p).value();
  const std::uint64_t index = static_cast<std::uint64_t>(static_cast<std::int64_t>(p.value()) - sym);

  std::vector<VerificationRecord> out;
  const LucasPair full = lucas_pair_mod(A, index, p);
  out.push_back(make_record("lem4.1", p.value(), {{"A", A}, {"part", 1}}, static_cast<std::int64_t>(full.u.value), 0));

  const LucasPair half = lucas_pair_mod(A, index / 2, p);
  const bool divides = half.v.value == 0;
  const bool minus_one_nonresidue = legendre(-1, p) == Sign::minus();
  out.push_back(make_record("lem4.1", p.value(), {{"A", A}, {"part", 2}}, divides ? 1 : 0, minus_one_nonresidue ? 1 : 0));
  return out;
}

Sign half_index_sign(std::int64_t A, const OddPrime& p) {
  require_nondegenerate(A, p);
  const std::uint64_t d = discriminant(A, p);
  const std::int64_t sym = legendre(static_cast<std::int64_t>(d), p).value();
  const std::int64_t pv = static_cast<std::int64_t>(p.value());

  std::uint64_t u = 0;
  std::uint64_t target = 0;
  if (p.mod4() == 1) {
    u = lucas_pair_mod(A, static_cast<std::uint64_t>((pv + sym) / 2), p).u.value;
    target = pow_residue(d, p.value() / 4, p);
  } else {
    u = lucas_pair_mod(A, static_cast<std::uint64_t>((pv - sym) / 2), p).u.value;
    target = p.mul(2, pow_residue(d, (p.value() - 3) / 4, p));
  }
  if (u == target) return Sign::plus();
  if (u == p.neg(target)) return Sign::minus();
  throw Inconsistent("half-index sign: u = " + std::to_string(u) + " is not +/-" + std::to_string(target) +
                     " mod " + std::to_string(p.value()));
}

}  // namespace qres

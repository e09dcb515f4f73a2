#include "qres/gauss_lemma.hpp"

#include <cassert>
#include <initializer_list>
#include <string>

#include "qres/error.hpp"

namespace qres {

namespace {

void require_coprime(std::int64_t v, const Modulus& n, const char* what) {
  if (gcd_u64(n.reduce(v), n.value()) != 1) {
    throw DomainError(std::string(what) + ": gcd(" + std::to_string(v) + ", " +
                      std::to_string(n.value()) + ") != 1");
  }
}

// {k y}_n for k = 1 .. (n-1)/2, stepped by addition.
template <typename Fn>
void walk_half_range(std::uint64_t y, const Modulus& n, Fn&& fn) {
  const std::uint64_t half = n.value() / 2;
  std::uint64_t r = 0;
  for (std::uint64_t k = 1; k <= half; ++k) {
    r = n.add(r, y);
    assert(r != 0);
    fn(k, r);
  }
}

bool above(std::uint64_t r, const Modulus& n) { return 2 * r > n.value(); }

}  // namespace

HalfRangeCount count_above_half(std::int64_t x, const Modulus& n) {
  require_coprime(x, n, "count_above_half");
  HalfRangeCount c{0, x, n.value(), CountKind::above_half};
  walk_half_range(n.reduce(x), n, [&](std::uint64_t, std::uint64_t r) {
    if (above(r, n)) ++c.count;
  });
  return c;
}

HalfRangeCount count_exceeds_index(std::int64_t x, const Modulus& n) {
  require_coprime(x, n, "count_exceeds_index");
  HalfRangeCount c{0, x, n.value(), CountKind::exceeds_index};
  walk_half_range(n.reduce(x), n, [&](std::uint64_t k, std::uint64_t r) {
    if (r > k) ++c.count;
  });
  return c;
}

HalfRangeCount joint_count(std::int64_t x, const Modulus& n, JointMode mode) {
  require_coprime(x, n, "joint_count");
  require_coprime(1 - x, n, "joint_count");
  const std::uint64_t y0 = n.reduce(x);
  const std::uint64_t y1 = n.reduce(1 - x);
  const std::uint64_t half = n.value() / 2;
  HalfRangeCount c{0, x, n.value(), CountKind::both_above};
  switch (mode) {
    case JointMode::both_above: c.kind = CountKind::both_above; break;
    case JointMode::both_below: c.kind = CountKind::both_below; break;
    case JointMode::first_above_second_below: c.kind = CountKind::first_above_second_below; break;
    case JointMode::second_above_first_below: c.kind = CountKind::second_above_first_below; break;
  }
  for (std::uint64_t k = 1; k <= half; ++k) {
    const bool a0 = above(n.mul(k, y0), n);
    const bool a1 = above(n.mul(k, y1), n);
    bool hit = false;
    switch (mode) {
      case JointMode::both_above: hit = a0 && a1; break;
      case JointMode::both_below: hit = !a0 && !a1; break;
      case JointMode::first_above_second_below: hit = a0 && !a1; break;
      case JointMode::second_above_first_below: hit = !a0 && a1; break;
    }
    if (hit) ++c.count;
  }
  return c;
}

GaussCounts gauss_counts(std::int64_t x, const Modulus& n) {
  require_coprime(x, n, "gauss_counts");
  const std::uint64_t y0 = n.reduce(x);
  const std::uint64_t y1 = n.reduce(1 - x);
  const std::uint64_t half = n.value() / 2;
  GaussCounts g;
  std::uint64_t r0 = 0;
  std::uint64_t r1 = 0;
  for (std::uint64_t k = 1; k <= half; ++k) {
    r0 = n.add(r0, y0);
    r1 = n.add(r1, y1);
    const bool a0 = r0 > half;
    const bool a1 = r1 > half;
    g.above_half += a0;
    g.exceeds_index += r0 > k;
    g.both_above += a0 && a1;
    g.both_below += !a0 && !a1;
    g.first_above_second_below += a0 && !a1;
    g.second_above_first_below += !a0 && a1;
  }
  return g;
}

std::vector<IdentitySides> gauss_jenkins_sides(std::int64_t x, const Modulus& n) {
  const GaussCounts g = gauss_counts(x, n);
  const auto par = [](std::uint64_t c) { return Sign::parity(static_cast<std::int64_t>(c)); };
  std::vector<IdentitySides> out;
  out.push_back({2, par(g.above_half), jacobi(x, n)});
  if (gcd_u64(n.reduce(1 - x), n.value()) != 1) return out;

  // Each right-hand side is one symbol of a product formed mod n.
  const auto sym = [&](std::initializer_list<std::int64_t> factors) {
    std::uint64_t v = 1;
    for (std::int64_t f : factors) v = n.mul(v, n.reduce(f));
    return jacobi(static_cast<std::int64_t>(v), n);
  };
  out.push_back({3, par(g.exceeds_index), sym({2, x, 1 - x})});
  out.push_back({4, par(g.both_above), sym({2})});
  out.push_back({5, par(g.both_below), sym({2, x, x - 1})});
  out.push_back({6, par(g.first_above_second_below), sym({2, x})});
  return out;
}

std::vector<VerificationRecord> verify_gauss_jenkins_identities(std::int64_t x, const Modulus& n) {
  std::vector<VerificationRecord> out;
  for (const IdentitySides& s : gauss_jenkins_sides(x, n)) {
    out.push_back(make_record("thm1.1", n.value(), {{"eq", s.eq}, {"x", x}},
                              s.count_side.value(), s.symbol_side.value()));
  }
  return out;
}

}  // namespace qres

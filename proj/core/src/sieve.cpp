#include "qres/sieve.hpp"

#include <algorithm>
#include <string>

#include "qres/error.hpp"
#include "qres/modular.hpp"

namespace qres {

namespace {

constexpr std::uint64_t kSegment = 1 << 15;

std::vector<std::uint64_t> small_primes(std::uint64_t limit) {
  std::vector<bool> composite(limit + 1, false);
  std::vector<std::uint64_t> out;
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
  }
  return out;
}

}  // namespace

std::vector<std::uint64_t> sieve_primes(std::uint64_t lo, std::uint64_t hi) {
  if (lo < 2 || hi <= lo || hi > kMaxPrime) {
    throw DomainError("sieve_primes: need 2 <= lo < hi <= 2^31, got [" + std::to_string(lo) + ", " +
                      std::to_string(hi) + ")");
  }
  std::uint64_t root = 1;
  while (root * root < hi) ++root;
  const std::vector<std::uint64_t> base = small_primes(root);

  std::vector<std::uint64_t> out;
  std::vector<char> marks(kSegment);
  for (std::uint64_t start = lo; start < hi; start += kSegment) {
    const std::uint64_t end = std::min(start + kSegment, hi);
    std::fill(marks.begin(), marks.end(), 1);
    for (std::uint64_t q : base) {
      if (q * q >= end) break;
      std::uint64_t first = std::max(q * q, (start + q - 1) / q * q);
      for (std::uint64_t m = first; m < end; m += q) marks[m - start] = 0;
    }
    for (std::uint64_t n = start; n < end; ++n) {
      if (marks[n - start] && n >= 2) out.push_back(n);
    }
  }
  return out;
}

}  // namespace qres

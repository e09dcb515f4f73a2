#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace qres {

/// Ordered key -> integer parameters of one check (A, a, b, c, delta, x, ...).
using Params = std::vector<std::pair<std::string, std::int64_t>>;

/// One checked identity: an oracle side against a closed-form side.
///
/// `ok` holds iff lhs and rhs agree under the item's comparison. Residues are
/// stored canonically in [0, modulus) and signs as -1/0/+1, so plain equality
/// is the comparison for every item.
struct VerificationRecord {
  std::string item;
  std::uint64_t p = 0;
  Params params;
  std::int64_t lhs = 0;
  std::int64_t rhs = 0;
  bool ok = false;
  std::int64_t elapsed_us = 0;
};

inline VerificationRecord make_record(std::string item, std::uint64_t p, Params params,
                                      std::int64_t lhs, std::int64_t rhs) {
  VerificationRecord r;
  r.item = std::move(item);
  r.p = p;
  r.params = std::move(params);
  r.lhs = lhs;
  r.rhs = rhs;
  r.ok = lhs == rhs;
  return r;
}

}  // namespace qres

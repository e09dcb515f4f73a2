#pragma once

// Prime-sweep harness. Items are registered in one table (id -> admissibility,
// default grid, check routine); a sweep runs every (item, modulus, grid point)
// over a worker pool, one modulus per task, and sorts the records before
// returning so output never depends on scheduling.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qres/record.hpp"

namespace qres {

/// Per-key value lists that replace an item's default grid, parsed from
/// "A=-3..3;delta=1;a=0,1,2". Keys: x, a, b, c, A, delta.
struct GridSpec {
  std::map<std::string, std::vector<std::int64_t>, std::less<>> values;

  /// Throws DomainError on malformed input.
  static GridSpec parse(std::string_view text);
  [[nodiscard]] const std::vector<std::int64_t>* find(std::string_view key) const;
};

struct SweepConfig {
  /// Item ids; "all" expands to every registered item.
  std::vector<std::string> targets{"all"};
  std::uint64_t min = 3;
  /// Exclusive upper bound.
  std::uint64_t max = 2000;
  GridSpec grid;
  unsigned jobs = 1;
  /// Extends conjecture items to p < 13000.
  bool deep = false;
  /// Fill elapsed_us; off by default so reports are byte-reproducible.
  bool timing = false;
};

inline constexpr std::uint64_t kDeepConjectureBound = 13000;

struct SkipRecord {
  std::string item;
  std::uint64_t p = 0;
  Params params;
  std::string reason;
};

struct ItemSummary {
  std::string item;
  std::uint64_t pass = 0;
  std::uint64_t fail = 0;
  std::uint64_t skip = 0;
};

struct SweepResult {
  std::vector<VerificationRecord> records;
  std::vector<SkipRecord> skips;
  std::vector<ItemSummary> summary;

  [[nodiscard]] std::uint64_t failures() const noexcept;
};

/// Registered item ids in registry order.
[[nodiscard]] std::vector<std::string_view> item_ids();
[[nodiscard]] bool is_known_item(std::string_view id) noexcept;

/// Records for one grid point. For thm1.1, p is the odd modulus n and the
/// grid point is {x}. Throws UnknownItem or DomainError.
[[nodiscard]] std::vector<VerificationRecord> verify_target(std::string_view item, std::uint64_t p,
                                                            const Params& grid_point);

/// Throws UnknownItem for unknown targets and DomainError for a bad range.
[[nodiscard]] SweepResult run_sweep(const SweepConfig& config);

}  // namespace qres

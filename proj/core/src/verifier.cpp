#include "qres/verifier.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <functional>
#include <numeric>
#include <set>
#include <thread>

#include "qres/closed_forms.hpp"
#include "qres/conjectures.hpp"
#include "qres/error.hpp"
#include "qres/gauss_lemma.hpp"
#include "qres/invariants.hpp"
#include "qres/lucas.hpp"
#include "qres/modular.hpp"
#include "qres/products.hpp"
#include "qres/sieve.hpp"

namespace qres {

namespace {

constexpr std::string_view kJenkinsItem = "thm1.1";
// Above this bound thm1.2 and thm1.3 fall back to their reduced grids.
constexpr std::uint64_t kFullGridBound = 199;

struct Context {
  explicit Context(std::uint64_t prime)
      : p(prime), table(p), fact(factorial_mod(p.half(), p).value) {}

  OddPrime p;
  LegendreTable table;
  std::uint64_t fact;  // ((p-1)/2)! mod p
};

struct Outcome {
  std::vector<VerificationRecord> records;
  std::vector<SkipRecord> skips;
  std::vector<SkipRecord> errors;
};

using Grid = std::vector<Params>;

struct ItemDef {
  std::string id;
  bool conjecture = false;
  // Empty string means admissible; otherwise the skip reason.
  std::function<std::string(const OddPrime&)> admissible;
  std::function<Grid(const Context&, const GridSpec&)> grid;
  std::function<void(const Context&, const Params&, Outcome&)> run;
};

std::int64_t param(const Params& params, std::string_view key) {
  for (const auto& [k, v] : params) {
    if (k == key) return v;
  }
  throw DomainError("missing grid parameter '" + std::string(key) + "'");
}

std::int64_t as_int(std::uint64_t v) { return static_cast<std::int64_t>(v); }

std::vector<std::int64_t> range(std::int64_t lo, std::int64_t hi) {
  std::vector<std::int64_t> v(static_cast<std::size_t>(hi - lo + 1));
  std::iota(v.begin(), v.end(), lo);
  return v;
}

std::vector<std::int64_t> values_or(const GridSpec& spec, std::string_view key, std::vector<std::int64_t> fallback) {
  if (const auto* v = spec.find(key)) return *v;
  return fallback;
}

Grid single_key_grid(std::string_view key, const std::vector<std::int64_t>& values) {
  Grid g;
  for (std::int64_t v : values) g.push_back({{std::string(key), v}});
  return g;
}

Grid no_params(const Context&, const GridSpec&) { return {Params{}}; }

Grid delta_grid(const Context&, const GridSpec& spec) {
  return single_key_grid("delta", values_or(spec, "delta", {1, -1}));
}

Grid lucas_grid(const Context&, const GridSpec& spec) { return single_key_grid("A", values_or(spec, "A", range(-8, 8))); }

std::string always(const OddPrime&) { return {}; }

std::function<std::string(const OddPrime&)> at_least(std::uint64_t bound) {
  return [bound](const OddPrime& p) {
    return p.value() >= bound ? std::string{} : "requires p >= " + std::to_string(bound);
  };
}

std::string only_one_mod_four(const OddPrime& p) {
  return p.mod4() == 1 ? std::string{} : "requires p == 1 (mod 4)";
}

Sign delta_of(const Params& params) { return Sign(static_cast<int>(param(params, "delta"))); }

void push(Outcome& out, const Context& c, std::string_view item, Params params, std::int64_t lhs, std::int64_t rhs) {
  out.records.push_back(make_record(std::string(item), c.p.value(), std::move(params), lhs, rhs));
}

void skip(Outcome& out, std::string_view item, std::uint64_t p, Params params, std::string reason) {
  out.skips.push_back({std::string(item), p, std::move(params), std::move(reason)});
}

// ---- quadratic-form products --------------------------------------------

Grid forms_grid(const Context& c, const GridSpec& spec) {
  const bool overridden = spec.find("a") || spec.find("b") || spec.find("c");
  Grid g;
  if (overridden || c.p.value() <= kFullGridBound) {
    const auto as = values_or(spec, "a", range(-6, 6));
    const auto bs = values_or(spec, "b", range(-6, 6));
    const auto cs = values_or(spec, "c", range(-6, 6));
    for (auto a : as)
      for (auto b : bs)
        for (auto cc : cs) g.push_back({{"a", a}, {"b", b}, {"c", cc}});
    return g;
  }
  // One representative per branch of the case table.
  static constexpr std::int64_t kForms[][3] = {
      {1, 1, 1}, {1, 3, 2}, {1, 2, 1},  {0, 0, 0},  {1, 0, 0},  {0, 1, 0}, {0, 0, 1},
      {0, 1, -1}, {1, -1, 0}, {1, -2, 1}, {1, -3, 2}, {1, 1, 0}, {0, 1, 1},
  };
  for (const auto& f : kForms) g.push_back({{"a", f[0]}, {"b", f[1]}, {"c", f[2]}});
  return g;
}

void run_closed_S(const Context& c, const Params& params, Outcome& out) {
  const QuadraticForm f{param(params, "a"), param(params, "b"), param(params, "c")};
  const ProductValue brute = product_S(f, c.p);
  const ClosedFormResult closed = closed_S(f, c.p);
  if (closed.convention_value) {
    skip(out, "thm1.2", c.p.value(), params,
         "degenerate-all-zero: every factor vanishes, omitting them leaves " + std::to_string(brute.value.value) + ", stated value is " +
             std::to_string(closed.value.value));
    return;
  }
  push(out, c, "thm1.2", params, as_int(brute.value.value), as_int(closed.value.value));
}

Grid braces_grid(const Context& c, const GridSpec& spec) {
  const std::uint64_t pv = c.p.value();
  std::vector<std::int64_t> as;
  if (const auto* v = spec.find("a")) {
    as = *v;
  } else if (pv <= kFullGridBound) {
    as = range(1, as_int(pv) - 1);
  } else {
    std::set<std::int64_t> picks{1, 2, 3, as_int(pv) - 1};
    if (c.p.mod4() == 1) {
      picks.insert(as_int(c.fact));
      picks.insert(as_int(pv - c.fact));
    }
    as.assign(picks.begin(), picks.end());
  }
  return single_key_grid("a", as);
}

void run_braces(const Context& c, const Params& params, Outcome& out) {
  const std::int64_t a = param(params, "a");
  if (c.p.reduce(a) == 0) {
    skip(out, "thm1.3", c.p.value(), params, "p | a, so ab == -1 has no solution");
    return;
  }
  const auto b = as_int(c.p.neg(mod_inv(a, c.p).value));
  Params full = params;
  full.emplace_back("b", b);
  const ProductValue brute = product_braces(a, b, c.p);
  const ClosedFormResult closed = closed_braces(a, b, c.p);
  push(out, c, "thm1.3", std::move(full), as_int(brute.value.value), as_int(closed.value.value));
}

void run_T_general(const Context& c, const Params& params, Outcome& out) {
  const std::int64_t A = param(params, "A");
  const ProductValue brute = product_T({1, -A, -1}, c.p);
  push(out, c, "thm1.4", params, as_int(brute.value.value), as_int(closed_T_general(A, c.p).value.value));
}

void run_T_special(const Context& c, const Params&, Outcome& out) {
  if (c.p.value() == 5) {
    skip(out, "thm1.5", 5, {{"part", 1}}, "Fibonacci form is covered by thm1.4 at p = 5");
  } else {
    push(out, c, "thm1.5", {{"part", 1}}, as_int(product_T({1, -1, -1}, c.p).value.value),
         as_int(closed_T_fibonacci(c.p).value.value));
  }
  push(out, c, "thm1.5", {{"part", 2}}, as_int(product_T({1, -2, -1}, c.p).value.value),
       as_int(closed_T_pell(c.p).value.value));
}

void run_form252(const Context& c, const Params& params, Outcome& out) {
  const Sign d = delta_of(params);
  push(out, c, "thm1.6", params, as_int(product_T({2, 5 * d.value(), 2}, c.p).value.value),
       as_int(closed_T_form252(d, c.p).value.value));
}

void run_triangle(const Context& c, const Params& params, Outcome& out) {
  const Sign d = delta_of(params);
  push(out, c, "thm1.7", params, symbol_product_linear(d.value(), 1, c.table, LinearRange::strict_upper).value(),
       closed_triangle_linear(d, c.table).value());
}

// ---- fixed-prime identities ---------------------------------------------

void run_factorial_square(const Context& c, const Params&, Outcome& out) {
  const auto pv = as_int(c.p.value());
  push(out, c, "lem3.1", {{"part", 1}}, as_int(c.p.mul(c.fact, c.fact)),
       as_int(Sign::parity((pv + 1) / 2).to_residue(c.p)));
  if (pv < 5) {
    skip(out, "lem3.1", c.p.value(), {{"part", 2}}, "triangle is empty for p = 3");
    return;
  }
  const ProductValue tri = product_background(c.p, BackgroundProduct::squares_diff_triangular);
  const std::uint64_t expected = c.p.mod4() == 1 ? c.p.neg(c.fact) : 1;
  push(out, c, "lem3.1", {{"part", 2}}, as_int(tri.value.value), as_int(expected));
}

void run_root_count(const Context& c, const Params&, Outcome& out) {
  const HalfRangeCount count = count_above_half(as_int(c.fact), c.p);
  push(out, c, "lem3.3", {}, as_int(count.count), as_int(c.p.value() / 4));
}

void run_full_square_difference(const Context& c, const Params&, Outcome& out) {
  const ProductValue full = product_background(c.p, BackgroundProduct::squares_diff_full);
  push(out, c, "disp3.4", {}, as_int(full.value.value), as_int((-legendre(2, c.p)).to_residue(c.p)));
}

void run_entry_point(const Context& c, const Params& params, Outcome& out) {
  const std::int64_t A = param(params, "A");
  try {
    for (auto& r : entry_point_checks(A, c.p)) out.records.push_back(std::move(r));
  } catch (const DomainError& e) {
    skip(out, "lem4.1", c.p.value(), params, e.what());
  }
}

void run_half_index(const Context& c, const Params& params, Outcome& out) {
  const std::int64_t A = param(params, "A");
  try {
    const Sign s = half_index_sign(A, c.p);
    push(out, c, "lem4.3", {{"A", A}, {"sign", s.value()}}, 1, 1);
  } catch (const Inconsistent&) {
    push(out, c, "lem4.3", {{"A", A}, {"sign", 0}}, 0, 1);
  } catch (const DomainError& e) {
    skip(out, "lem4.3", c.p.value(), params, e.what());
  }
}

void run_double_factorial(const Context& c, const Params&, Outcome& out) {
  const DoubleFactorialProducts d = double_factorial_products(c.p);
  const std::uint64_t a = d.plus.value;
  const std::uint64_t b = d.minus.value;
  const std::uint64_t m2 = legendre(-2, c.p).to_residue(c.p);
  push(out, c, "lem6.1", {{"part", 1}}, as_int(c.p.mul(a, a)), 1);
  push(out, c, "lem6.1", {{"part", 2}}, as_int(c.p.mul(b, b)), 1);
  push(out, c, "lem6.1", {{"part", 3}}, as_int(a), as_int(c.p.mul(m2, b)));
  push(out, c, "lem6.1", {{"part", 4}}, as_int(c.p.mul(a, b)), as_int(m2));
}

void run_background(const Context& c, const Params&, Outcome& out) {
  const auto pv = as_int(c.p.value());
  if (c.p.mod4() == 1) {
    std::int64_t arm = 1;
    for (VerificationRecord& r : background_checks(c.table)) {
      r.params.insert(r.params.begin(), {"arm", arm++});
      r.item = "background";
      out.records.push_back(std::move(r));
    }
    // Lerch's formula restated through the non-residue count below p/3
    const std::uint64_t lhs = pow_residue(c.p.reduce(-3), c.p.value() / 4, c.p);
    std::uint64_t rhs = Sign::parity(as_int(qr_count_below(c.table, 1, 3, Sign::minus()))).to_residue(c.p);
    if (c.p.mod12() == 5) rhs = c.p.mul(rhs, c.fact);
    push(out, c, "background", {{"arm", 9}}, as_int(lhs), as_int(rhs));
  } else {
    skip(out, "background", c.p.value(), {{"arm", 1}}, "quartic-residue arms require p == 1 (mod 4)");
  }
  const ProductValue sums = product_background(c.p, BackgroundProduct::sum_squares_triangular);
  const Sign expected = c.p.mod4() == 1 ? Sign::parity(floor_div(pv - 5, 8)) : Sign::parity(floor_div(pv + 1, 8));
  push(out, c, "background", {{"arm", 7}}, as_int(sums.value.value), as_int(expected.to_residue(c.p)));
  const Sign symbols = symbol_product_quadratic({1, 0, 1}, c.table, TriangleRange::strict_upper);
  const Sign expected_symbols = c.p.mod4() == 1 ? Sign::plus() : Sign::parity(floor_div(pv + 1, 8));
  push(out, c, "background", {{"arm", 8}}, symbols.value(), expected_symbols.value());
}

// ---- conjectures ----------------------------------------------------------

std::function<void(const Context&, const Params&, Outcome&)> conjecture_runner(Conjecture conj, std::string item) {
  return [conj, item](const Context& c, const Params& params, Outcome& out) {
    const Sign d = delta_of(params);
    if (conj == Conjecture::c7_4 && c.p.mod12() == 1) {
      Params residue_params = params;
      residue_params.emplace_back("part", 1);
      push(out, c, item, std::move(residue_params), as_int(product_T({1, 4 * d.value(), 1}, c.p).value.value),
           as_int(conjecture_residue_rhs(d, c.p).value.value));
    }
    Params symbol_params = params;
    if (conj == Conjecture::c7_4) symbol_params.emplace_back("part", 2);
    Sign rhs;
    try {
      rhs = conjecture_rhs(conj, d, c.table);
    } catch (const DomainError& e) {
      skip(out, item, c.p.value(), std::move(symbol_params), e.what());
      return;
    }
    push(out, c, item, std::move(symbol_params), conjecture_lhs(conj, d, c.table).value(), rhs.value());
  };
}

std::vector<ItemDef> build_registry() {
  std::vector<ItemDef> r;
  // thm1.1 runs over odd moduli and is dispatched separately; its row keeps the order.
  r.push_back({std::string(kJenkinsItem), false, always, no_params, nullptr});
  r.push_back({"thm1.2", false, always, forms_grid, run_closed_S});
  r.push_back({"thm1.3", false, always, braces_grid, run_braces});
  r.push_back({"thm1.4", false, always, lucas_grid, run_T_general});
  r.push_back({"thm1.5", false, always, no_params, run_T_special});
  r.push_back({"thm1.6", false, at_least(5), delta_grid, run_form252});
  r.push_back({"thm1.7", false, at_least(5), delta_grid, run_triangle});
  r.push_back({"lem3.1", false, always, no_params, run_factorial_square});
  r.push_back({"lem3.3", false, only_one_mod_four, no_params, run_root_count});
  r.push_back({"disp3.4", false, at_least(5), no_params, run_full_square_difference});
  r.push_back({"lem4.1", false, always, lucas_grid, run_entry_point});
  r.push_back({"lem4.3", false, always, lucas_grid, run_half_index});
  r.push_back({"lem6.1", false, at_least(5), no_params, run_double_factorial});
  r.push_back({"background", false, at_least(5), no_params, run_background});
  for (Conjecture conj : kAllConjectures) {
    std::string id = "conj" + std::string(conjecture_name(conj));
    auto grid = conjecture_uses_delta(conj)
                    ? std::function<Grid(const Context&, const GridSpec&)>(delta_grid)
                    : [](const Context&, const GridSpec& spec) {
                        return single_key_grid("delta", values_or(spec, "delta", {1}));
                      };
    r.push_back({id, true, at_least(conjecture_min_prime(conj)), std::move(grid), conjecture_runner(conj, id)});
  }
  return r;
}

const std::vector<ItemDef>& registry() {
  static const std::vector<ItemDef> reg = build_registry();
  return reg;
}

std::size_t item_index(std::string_view id) {
  const auto& reg = registry();
  for (std::size_t i = 0; i < reg.size(); ++i) {
    if (reg[i].id == id) return i;
  }
  throw UnknownItem("unknown item '" + std::string(id) + "'");
}

// ---- Jenkins identities over odd moduli -----------------------------------

void run_jenkins_point(const Modulus& n, std::int64_t x, Outcome& out) {
  if (gcd_u64(n.reduce(x), n.value()) != 1) {
    skip(out, kJenkinsItem, n.value(), {{"x", x}}, "gcd(x, n) != 1");
    return;
  }
  for (auto& r : verify_gauss_jenkins_identities(x, n)) out.records.push_back(std::move(r));
}

// Default grid: every x in [1, n). One record per identity with
// lhs = admissible x count and rhs = count where the identity held; each
// failing x also gets its own record.
void run_jenkins_all(const Modulus& n, Outcome& out) {
  std::array<std::int64_t, 7> checked{};
  std::array<std::int64_t, 7> held{};
  const auto nv = static_cast<std::int64_t>(n.value());
  for (std::int64_t x = 1; x < nv; ++x) {
    if (gcd_u64(static_cast<std::uint64_t>(x), n.value()) != 1) continue;
    for (const IdentitySides& s : gauss_jenkins_sides(x, n)) {
      ++checked[static_cast<std::size_t>(s.eq)];
      if (s.count_side == s.symbol_side) {
        ++held[static_cast<std::size_t>(s.eq)];
      } else {
        out.records.push_back(make_record(std::string(kJenkinsItem), n.value(), {{"eq", s.eq}, {"x", x}},
                                          s.count_side.value(), s.symbol_side.value()));
      }
    }
  }
  for (int eq = 2; eq <= 6; ++eq) {
    const auto e = static_cast<std::size_t>(eq);
    out.records.push_back(make_record(std::string(kJenkinsItem), n.value(), {{"eq", eq}}, checked[e], held[e]));
  }
}

// ---- sweep driver ---------------------------------------------------------

struct Plan {
  std::vector<std::size_t> items;  // registry indices, sorted
  bool jenkins = false;
  std::uint64_t min = 3;
  std::uint64_t max = 0;
  std::uint64_t conj_max = 0;
};

void run_prime_item(const ItemDef& def, const Context& ctx, const GridSpec& spec, bool timing, Outcome& out) {
  if (std::string reason = def.admissible(ctx.p); !reason.empty()) {
    skip(out, def.id, ctx.p.value(), {}, std::move(reason));
    return;
  }
  for (const Params& point : def.grid(ctx, spec)) {
    const std::size_t first = out.records.size();
    const auto t0 = std::chrono::steady_clock::now();
    try {
      def.run(ctx, point, out);
    } catch (const DomainError& e) {
      skip(out, def.id, ctx.p.value(), point, e.what());
    } catch (const std::exception& e) {
      out.errors.push_back({std::string(def.id), ctx.p.value(), point, e.what()});
      out.records.push_back(make_record(std::string(def.id), ctx.p.value(), point, 0, 1));
    }
    if (timing) {
      const auto us = std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - t0);
      for (std::size_t i = first; i < out.records.size(); ++i) out.records[i].elapsed_us = us.count();
    }
  }
}

Outcome run_modulus(std::uint64_t n, const Plan& plan, const GridSpec& spec, bool timing) {
  Outcome out;
  if (plan.jenkins && n < plan.max && n >= plan.min) {
    const Modulus mod(n);
    const auto t0 = std::chrono::steady_clock::now();
    if (const auto* xs = spec.find("x")) {
      for (std::int64_t x : *xs) run_jenkins_point(mod, x, out);
    } else {
      run_jenkins_all(mod, out);
    }
    if (timing) {
      const auto us = std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - t0);
      for (auto& r : out.records) r.elapsed_us = us.count();
    }
  }
  if (!is_prime(n)) return out;

  std::optional<Context> ctx;
  const auto& reg = registry();
  for (std::size_t idx : plan.items) {
    const ItemDef& def = reg[idx];
    if (def.id == kJenkinsItem) continue;
    const std::uint64_t bound = def.conjecture ? plan.conj_max : plan.max;
    if (n >= bound || n < plan.min) continue;
    if (!ctx) ctx.emplace(n);
    run_prime_item(def, *ctx, spec, timing, out);
  }
  return out;
}

bool params_less(const Params& a, const Params& b) { return a < b; }

}  // namespace

// ---- GridSpec ---------------------------------------------------------------

GridSpec GridSpec::parse(std::string_view text) {
  GridSpec spec;
  auto to_int = [&](std::string_view s) -> std::int64_t {
    try {
      std::size_t used = 0;
      const std::string str(s);
      const std::int64_t v = std::stoll(str, &used);
      if (used != str.size()) throw DomainError("");
      return v;
    } catch (const std::exception&) {
      throw DomainError("bad grid value '" + std::string(s) + "'");
    }
  };
  while (!text.empty()) {
    const std::size_t semi = text.find(';');
    std::string_view entry = text.substr(0, semi);
    text = semi == std::string_view::npos ? std::string_view{} : text.substr(semi + 1);
    if (entry.empty()) continue;
    const std::size_t eq = entry.find('=');
    if (eq == std::string_view::npos || eq == 0) throw DomainError("grid entry needs key=values: '" + std::string(entry) + "'");
    const std::string key(entry.substr(0, eq));
    static const std::set<std::string, std::less<>> kKeys{"x", "a", "b", "c", "A", "delta"};
    if (!kKeys.contains(key)) throw DomainError("unknown grid key '" + key + "'");
    std::string_view list = entry.substr(eq + 1);
    std::vector<std::int64_t>& out = spec.values[key];
    out.clear();
    while (!list.empty()) {
      const std::size_t comma = list.find(',');
      std::string_view item = list.substr(0, comma);
      list = comma == std::string_view::npos ? std::string_view{} : list.substr(comma + 1);
      if (const std::size_t dots = item.find(".."); dots != std::string_view::npos) {
        const std::int64_t lo = to_int(item.substr(0, dots));
        const std::int64_t hi = to_int(item.substr(dots + 2));
        if (hi < lo) throw DomainError("empty grid range '" + std::string(item) + "'");
        for (std::int64_t v = lo; v <= hi; ++v) out.push_back(v);
      } else {
        out.push_back(to_int(item));
      }
    }
    if (out.empty()) throw DomainError("grid key '" + key + "' has no values");
    if (key == "delta") {
      for (std::int64_t d : out)
        if (d != 1 && d != -1) throw DomainError("delta must be 1 or -1");
    }
  }
  return spec;
}

const std::vector<std::int64_t>* GridSpec::find(std::string_view key) const {
  const auto it = values.find(key);
  return it == values.end() ? nullptr : &it->second;
}

std::uint64_t SweepResult::failures() const noexcept {
  return static_cast<std::uint64_t>(
      std::count_if(records.begin(), records.end(), [](const VerificationRecord& r) { return !r.ok; }));
}

std::vector<std::string_view> item_ids() {
  std::vector<std::string_view> ids;
  for (const ItemDef& def : registry()) ids.push_back(def.id);
  return ids;
}

bool is_known_item(std::string_view id) noexcept {
  for (const ItemDef& def : registry()) {
    if (def.id == id) return true;
  }
  return false;
}

std::vector<VerificationRecord> verify_target(std::string_view item, std::uint64_t p, const Params& grid_point) {
  const ItemDef& def = registry()[item_index(item)];
  Outcome out;
  if (def.id == kJenkinsItem) {
    const Modulus n(p);
    const std::int64_t x = param(grid_point, "x");
    if (gcd_u64(n.reduce(x), n.value()) != 1) throw DomainError("gcd(x, n) != 1");
    return verify_gauss_jenkins_identities(x, n);
  }
  const Context ctx(p);
  if (std::string reason = def.admissible(ctx.p); !reason.empty()) throw DomainError(def.id + ": " + reason);
  def.run(ctx, grid_point, out);
  if (out.records.empty() && !out.skips.empty()) throw DomainError(out.skips.front().reason);
  return std::move(out.records);
}

SweepResult run_sweep(const SweepConfig& config) {
  if (config.min < 3 || config.max <= config.min || config.max > kMaxPrime) {
    throw DomainError("sweep range must satisfy 3 <= min < max <= 2^31");
  }
  Plan plan;
  std::set<std::size_t> chosen;
  for (const std::string& t : config.targets) {
    if (t == "all") {
      for (std::size_t i = 0; i < registry().size(); ++i) chosen.insert(i);
    } else {
      chosen.insert(item_index(t));
    }
  }
  plan.items.assign(chosen.begin(), chosen.end());
  plan.jenkins = chosen.contains(item_index(kJenkinsItem));
  plan.min = config.min;
  plan.max = config.max;
  plan.conj_max = config.deep ? std::max(config.max, kDeepConjectureBound) : config.max;
  const bool any_conj = std::any_of(plan.items.begin(), plan.items.end(),
                                    [](std::size_t i) { return registry()[i].conjecture; });
  const std::uint64_t upper = any_conj ? std::max(plan.max, plan.conj_max) : plan.max;

  std::vector<std::uint64_t> moduli;
  if (plan.jenkins) {
    for (std::uint64_t n = plan.min | 1; n < plan.max; n += 2) moduli.push_back(n);
    if (upper > plan.max) {
      for (std::uint64_t q : sieve_primes(plan.max, upper)) moduli.push_back(q);
    }
  } else {
    moduli = sieve_primes(std::max<std::uint64_t>(plan.min, 3), upper);
    std::erase(moduli, 2);
  }
  // Larger moduli cost more; hand them out first so the tail stays short.
  std::vector<std::size_t> order(moduli.size());
  std::iota(order.begin(), order.end(), 0);
  std::reverse(order.begin(), order.end());

  std::vector<Outcome> outcomes(moduli.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < order.size(); k = next++) {
      const std::size_t i = order[k];
      outcomes[i] = run_modulus(moduli[i], plan, config.grid, config.timing);
    }
  };
  const unsigned jobs = std::max(1u, config.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(jobs);
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
  }

  SweepResult result;
  std::vector<SkipRecord> errors;
  for (Outcome& o : outcomes) {
    std::move(o.records.begin(), o.records.end(), std::back_inserter(result.records));
    std::move(o.skips.begin(), o.skips.end(), std::back_inserter(result.skips));
    std::move(o.errors.begin(), o.errors.end(), std::back_inserter(errors));
  }
  std::stable_sort(result.records.begin(), result.records.end(),
                   [](const VerificationRecord& a, const VerificationRecord& b) {
                     const std::size_t ia = item_index(a.item);
                     const std::size_t ib = item_index(b.item);
                     if (ia != ib) return ia < ib;
                     if (a.p != b.p) return a.p < b.p;
                     return params_less(a.params, b.params);
                   });
  std::stable_sort(result.skips.begin(), result.skips.end(), [](const SkipRecord& a, const SkipRecord& b) {
    const std::size_t ia = item_index(a.item);
    const std::size_t ib = item_index(b.item);
    if (ia != ib) return ia < ib;
    if (a.p != b.p) return a.p < b.p;
    return params_less(a.params, b.params);
  });
  for (SkipRecord& e : errors) {
    e.reason = "error: " + e.reason;
    result.skips.push_back(std::move(e));
  }

  for (std::size_t idx : plan.items) {
    ItemSummary s{std::string(registry()[idx].id), 0, 0, 0};
    for (const auto& r : result.records) {
      if (r.item == s.item) (r.ok ? s.pass : s.fail)++;
    }
    for (const auto& k : result.skips) {
      if (k.item == s.item) ++s.skip;
    }
    result.summary.push_back(std::move(s));
  }
  return result;
}

}  // namespace qres

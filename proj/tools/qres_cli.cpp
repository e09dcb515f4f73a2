// qres: command-line front end for the residue-product library.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "qres/closed_forms.hpp"
#include "qres/conjectures.hpp"
#include "qres/error.hpp"
#include "qres/gauss_lemma.hpp"
#include "qres/invariants.hpp"
#include "qres/lucas.hpp"
#include "qres/modular.hpp"
#include "qres/products.hpp"
#include "qres/report.hpp"
#include "qres/verifier.hpp"

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

std::vector<std::int64_t> split_ints(const std::string& text, std::size_t want, const char* what) {
  std::vector<std::int64_t> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    try {
      std::size_t used = 0;
      const std::string piece = text.substr(pos, comma - pos);
      out.push_back(std::stoll(piece, &used));
      if (used != piece.size()) throw std::invalid_argument(piece);
    } catch (const std::exception&) {
      throw qres::DomainError(std::string(what) + " must be " + std::to_string(want) + " comma-separated integers");
    }
    pos = comma + 1;
  }
  if (out.size() != want) {
    throw qres::DomainError(std::string(what) + " must be " + std::to_string(want) + " comma-separated integers");
  }
  return out;
}

qres::QuadraticForm parse_form(const std::string& text) {
  const auto v = split_ints(text, 3, "--form");
  return {v[0], v[1], v[2]};
}

void print_value(const std::string& what, const qres::ProductValue& v) {
  std::cout << what << " = " << v.value.value << " (mod " << v.value.modulus << ")";
  if (v.skipped != 0) std::cout << "  [" << v.skipped << " of " << v.total << " factors zero, omitted]";
  std::cout << '\n';
}

void print_closed(const std::string& what, const qres::ClosedFormResult& r) {
  std::cout << what << " = " << r.value.value << " (mod " << r.value.modulus << ")";
  if (!r.label.empty()) std::cout << "  [" << r.label << "]";
  if (r.convention_value) std::cout << "  empty-product convention gives " << r.convention_value->value;
  std::cout << '\n';
}

std::string form_text(const qres::QuadraticForm& f) {
  return "(" + std::to_string(f.a) + "," + std::to_string(f.b) + "," + std::to_string(f.c) + ")";
}

void print_records(const std::vector<qres::VerificationRecord>& records) {
  qres::emit_report(records, qres::ReportFormat::json_lines, std::cout);
}

int count_failures(const std::vector<qres::VerificationRecord>& records) {
  for (const auto& r : records)
    if (!r.ok) return kExitFail;
  return 0;
}

unsigned default_jobs() {
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quadratic-residue products: brute-force oracles, closed forms and prime sweeps"};
  app.require_subcommand(1);

  // symbol
  std::int64_t sym_x = 0;
  std::uint64_t sym_n = 0;
  auto* symbol = app.add_subcommand("symbol", "Jacobi symbol (x/n); Euler criterion too when n is prime");
  symbol->add_option("--x", sym_x, "numerator")->required();
  symbol->add_option("--n", sym_n, "odd modulus >= 3")->required();

  // gauss
  std::int64_t g_x = 0;
  std::uint64_t g_n = 0;
  std::string g_mode = "all";
  auto* gauss = app.add_subcommand("gauss", "half-range counts and their symbol identities");
  gauss->add_option("--x", g_x)->required();
  gauss->add_option("--n", g_n, "odd modulus >= 3")->required();
  gauss->add_option("--mode", g_mode, "all|above|index|both-above|both-below|above-below|below-above")
      ->check(CLI::IsMember({"all", "above", "index", "both-above", "both-below", "above-below", "below-above"}));

  // lucas
  std::int64_t l_A = 1;
  std::uint64_t l_n = 0, l_p = 0;
  auto* lucas = app.add_subcommand("lucas", "u_n(A,-1), v_n(A,-1) mod p with entry-point checks");
  lucas->add_option("--A", l_A)->required();
  lucas->add_option("--n", l_n)->required();
  lucas->add_option("--p", l_p)->required();

  // product
  std::string pr_kind, pr_form, pr_pair, pr_rs, pr_range = "strict", pr_which = "triangular";
  std::uint64_t pr_p = 0;
  auto* product = app.add_subcommand("product", "brute-force products mod p");
  product->add_option("kind", pr_kind)
      ->required()
      ->check(CLI::IsMember({"S", "T", "braces", "lemma61", "background", "symquad", "symlin"}));
  product->add_option("--p", pr_p)->required();
  product->add_option("--form", pr_form, "a,b,c");
  product->add_option("--pair", pr_pair, "a,b with ab == -1 mod p");
  product->add_option("--rs", pr_rs, "r,s for the linear symbol product");
  product->add_option("--range", pr_range, "symquad: strict|diagonal, symlin: full|strict")
      ->check(CLI::IsMember({"strict", "diagonal", "full"}));
  product->add_option("--which", pr_which, "background: triangular|full|sums")
      ->check(CLI::IsMember({"triangular", "full", "sums"}));

  // closed
  std::string cl_kind, cl_form, cl_pair, cl_id;
  std::uint64_t cl_p = 0;
  std::int64_t cl_A = 1;
  int cl_delta = 1;
  auto* closed = app.add_subcommand("closed", "closed-form evaluations mod p");
  closed->add_option("kind", cl_kind)
      ->required()
      ->check(CLI::IsMember({"S", "T", "braces", "fib", "pell", "252", "triangle", "conj"}));
  closed->add_option("--p", cl_p)->required();
  closed->add_option("--form", cl_form, "a,b,c for S");
  closed->add_option("--pair", cl_pair, "a,b for braces");
  closed->add_option("--A", cl_A, "T: the form is (1,-A,-1)");
  closed->add_option("--delta", cl_delta, "sign choice")->check(CLI::IsMember({1, -1}));
  closed->add_option("--id", cl_id, "conjecture id, e.g. 7.3");

  // classnum
  std::string cn_kind;
  std::uint64_t cn_p = 0;
  auto* classnum = app.add_subcommand("classnum", "class numbers h(-4p), h(-3p), h(-p) and the factorial sign");
  classnum->add_option("kind", cn_kind)->required()->check(CLI::IsMember({"h4p", "h3p", "hp", "mordell"}));
  classnum->add_option("--p", cn_p)->required();

  std::uint64_t dec_p = 0;
  auto* decompose = app.add_subcommand("decompose", "p = x^2 + y^2 with x == 1 mod 4, y == ((p-1)/2)! x mod p");
  decompose->add_option("--p", dec_p)->required();

  std::uint64_t bg_p = 0;
  auto* background = app.add_subcommand("background", "classical quartic-residue congruences for p == 1 mod 4");
  background->add_option("--p", bg_p)->required();

  // verify / sweep
  std::vector<std::string> v_targets;
  std::uint64_t v_min = 3, v_max = 2000;
  std::string v_grid, v_format = "json-lines", v_out, v_summary;
  unsigned v_jobs = default_jobs();
  bool v_deep = false, v_timing = false;
  auto add_sweep_options = [&](CLI::App* cmd) {
    cmd->add_option("--min", v_min, "smallest modulus (inclusive)");
    cmd->add_option("--max", v_max, "upper bound (exclusive)");
    cmd->add_option("--grid", v_grid, "key=v1,v2,lo..hi;key=...  keys: x a b c A delta");
    cmd->add_option("--jobs", v_jobs, "worker threads")->envname("QRES_JOBS")->check(CLI::PositiveNumber);
    cmd->add_option("--format", v_format)->check(CLI::IsMember({"json-lines", "csv"}));
    cmd->add_option("--out", v_out, "report file (default stdout)");
    cmd->add_option("--summary", v_summary, "also write the summary to this file");
    cmd->add_flag("--deep", v_deep, "extend conjecture items to p < 13000");
    cmd->add_flag("--timing", v_timing, "fill elapsed_us (makes reports run-dependent)");
  };
  auto* verify = app.add_subcommand("verify", "check items over a range and emit a report");
  verify->add_option("--target", v_targets, "comma-separated item ids or 'all'")->required()->delimiter(',');
  add_sweep_options(verify);
  auto* sweep = app.add_subcommand("sweep", "verify --target all");
  add_sweep_options(sweep);

  auto* items = app.add_subcommand("items", "list item ids in report order");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*symbol) {
      const qres::Modulus n(sym_n);
      std::cout << "jacobi(" << sym_x << "/" << sym_n << ") = " << qres::jacobi(sym_x, n) << '\n';
      if (qres::is_prime(sym_n) && sym_n < qres::kMaxPrime) {
        const qres::OddPrime p(sym_n);
        std::cout << "euler  " << sym_x << "^((p-1)/2) = " << qres::euler_criterion(sym_x, p) << '\n';
      }
      return 0;
    }

    if (*gauss) {
      const qres::Modulus n(g_n);
      const auto show = [&](const char* name, const qres::HalfRangeCount& c) {
        std::cout << name << " = " << c.count << '\n';
      };
      using qres::JointMode;
      if (g_mode == "all" || g_mode == "above") show("above_half", qres::count_above_half(g_x, n));
      if (g_mode == "all" || g_mode == "index") show("exceeds_index", qres::count_exceeds_index(g_x, n));
      const bool joint_ok = qres::gcd_u64(n.reduce(g_x), g_n) == 1 && qres::gcd_u64(n.reduce(1 - g_x), g_n) == 1;
      if (joint_ok) {
        if (g_mode == "all" || g_mode == "both-above") show("both_above", qres::joint_count(g_x, n, JointMode::both_above));
        if (g_mode == "all" || g_mode == "both-below") show("both_below", qres::joint_count(g_x, n, JointMode::both_below));
        if (g_mode == "all" || g_mode == "above-below")
          show("first_above_second_below", qres::joint_count(g_x, n, JointMode::first_above_second_below));
        if (g_mode == "all" || g_mode == "below-above")
          show("second_above_first_below", qres::joint_count(g_x, n, JointMode::second_above_first_below));
      } else if (g_mode != "all" && g_mode != "above" && g_mode != "index") {
        throw qres::DomainError("joint counts need gcd(x(1-x), n) = 1");
      }
      if (qres::gcd_u64(n.reduce(g_x), g_n) != 1) throw qres::DomainError("gcd(x, n) != 1");
      const auto records = qres::verify_gauss_jenkins_identities(g_x, n);
      print_records(records);
      return count_failures(records);
    }

    if (*lucas) {
      const qres::OddPrime p(l_p);
      const qres::LucasPair pair = qres::lucas_pair_mod(l_A, l_n, p);
      std::cout << "u_" << l_n << " = " << pair.u.value << "\nv_" << l_n << " = " << pair.v.value << "  (mod " << l_p
                << ")\n";
      const auto records = qres::entry_point_checks(l_A, p);
      print_records(records);
      try {
        std::cout << "half-index sign = " << qres::half_index_sign(l_A, p) << '\n';
      } catch (const qres::Inconsistent& e) {
        std::cout << "half-index sign: none (" << e.what() << ")\n";
        return kExitFail;
      }
      return count_failures(records);
    }

    if (*product) {
      const qres::OddPrime p(pr_p);
      if (pr_kind == "S" || pr_kind == "T") {
        if (pr_form.empty()) throw qres::DomainError("--form a,b,c is required");
        const auto f = parse_form(pr_form);
        print_value(pr_kind + "_" + std::to_string(pr_p) + form_text(f),
                    pr_kind == "S" ? qres::product_S(f, p) : qres::product_T(f, p));
      } else if (pr_kind == "braces") {
        if (pr_pair.empty()) throw qres::DomainError("--pair a,b is required");
        const auto ab = split_ints(pr_pair, 2, "--pair");
        print_value("{" + std::to_string(ab[0]) + "," + std::to_string(ab[1]) + "}_" + std::to_string(pr_p),
                    qres::product_braces(ab[0], ab[1], p));
      } else if (pr_kind == "lemma61") {
        const auto d = qres::double_factorial_products(p);
        std::cout << "A_p = " << d.plus.value << "\nB_p = " << d.minus.value << "  (mod " << pr_p << ")\n";
      } else if (pr_kind == "background") {
        const auto which = pr_which == "full"   ? qres::BackgroundProduct::squares_diff_full
                           : pr_which == "sums" ? qres::BackgroundProduct::sum_squares_triangular
                                                : qres::BackgroundProduct::squares_diff_triangular;
        print_value(pr_which, qres::product_background(p, which));
      } else if (pr_kind == "symquad") {
        if (pr_form.empty()) throw qres::DomainError("--form a,b,c is required");
        const auto f = parse_form(pr_form);
        const auto range = pr_range == "diagonal" ? qres::TriangleRange::upper_with_diagonal
                                                  : qres::TriangleRange::strict_upper;
        std::cout << "prod symbols " << form_text(f) << " = " << qres::symbol_product_quadratic(f, p, range) << '\n';
      } else {
        if (pr_rs.empty()) throw qres::DomainError("--rs r,s is required");
        const auto rs = split_ints(pr_rs, 2, "--rs");
        const auto range = pr_range == "full" ? qres::LinearRange::full_square : qres::LinearRange::strict_upper;
        std::cout << "prod symbols (" << rs[0] << "i+" << rs[1]
                  << "j) = " << qres::symbol_product_linear(rs[0], rs[1], p, range) << '\n';
      }
      return 0;
    }

    if (*closed) {
      const qres::OddPrime p(cl_p);
      const qres::Sign delta(cl_delta);
      const std::string ps = std::to_string(cl_p);
      if (cl_kind == "S") {
        if (cl_form.empty()) throw qres::DomainError("--form a,b,c is required");
        const auto f = parse_form(cl_form);
        print_closed("S_" + ps + form_text(f), qres::closed_S(f, p));
      } else if (cl_kind == "T") {
        print_closed("T_" + ps + "(1," + std::to_string(-cl_A) + ",-1)", qres::closed_T_general(cl_A, p));
      } else if (cl_kind == "braces") {
        if (cl_pair.empty()) throw qres::DomainError("--pair a,b is required");
        const auto ab = split_ints(cl_pair, 2, "--pair");
        print_closed("{" + std::to_string(ab[0]) + "," + std::to_string(ab[1]) + "}_" + ps,
                     qres::closed_braces(ab[0], ab[1], p));
      } else if (cl_kind == "fib") {
        print_closed("T_" + ps + "(1,-1,-1)", qres::closed_T_fibonacci(p));
      } else if (cl_kind == "pell") {
        print_closed("T_" + ps + "(1,-2,-1)", qres::closed_T_pell(p));
      } else if (cl_kind == "252") {
        print_closed("T_" + ps + "(2," + std::to_string(5 * cl_delta) + ",2)", qres::closed_T_form252(delta, p));
      } else if (cl_kind == "triangle") {
        std::cout << "prod symbols (" << cl_delta << "i+j) over i<j = " << qres::closed_triangle_linear(delta, p) << '\n';
      } else {
        if (cl_id.empty()) throw qres::DomainError("--id is required for conj");
        const qres::Conjecture c = qres::parse_conjecture(cl_id);
        const qres::LegendreTable table(p);
        std::cout << "conjecture " << qres::conjecture_name(c) << " delta=" << cl_delta
                  << "  rhs = " << qres::conjecture_rhs(c, delta, table)
                  << "  brute = " << qres::conjecture_lhs(c, delta, table) << '\n';
        if (c == qres::Conjecture::c7_4 && p.mod12() == 1) {
          print_closed("T_" + ps + "(1," + std::to_string(4 * cl_delta) + ",1)", qres::conjecture_residue_rhs(delta, p));
        }
      }
      return 0;
    }

    if (*classnum) {
      const qres::OddPrime p(cn_p);
      if (cn_kind == "mordell") {
        std::cout << "((p-1)/2)! mod " << cn_p << " = " << qres::mordell_sign(p) << '\n';
        return 0;
      }
      const qres::ClassNumber h = cn_kind == "h4p" ? qres::h_minus_4p(p)
                                  : cn_kind == "h3p" ? qres::h_minus_3p(p)
                                                     : qres::h_minus_p(p);
      std::cout << "h(" << h.discriminant << ") = " << h.h << '\n';
      return 0;
    }

    if (*decompose) {
      const auto d = qres::two_square_decomposition(qres::OddPrime(dec_p));
      std::cout << dec_p << " = (" << d.x << ")^2 + (" << d.y << ")^2\n";
      return 0;
    }

    if (*background) {
      const auto records = qres::background_checks(qres::OddPrime(bg_p));
      print_records(records);
      return count_failures(records);
    }

    if (*items) {
      for (auto id : qres::item_ids()) std::cout << id << '\n';
      return 0;
    }

    // verify / sweep
    qres::SweepConfig config;
    config.targets = *sweep ? std::vector<std::string>{"all"} : v_targets;
    for (const auto& t : config.targets) {
      if (t != "all" && !qres::is_known_item(t)) throw qres::UnknownItem("unknown item '" + t + "'");
    }
    config.min = v_min;
    config.max = v_max;
    config.grid = qres::GridSpec::parse(v_grid);
    config.jobs = v_jobs;
    config.deep = v_deep;
    config.timing = v_timing;
    const qres::ReportFormat format = qres::parse_report_format(v_format);

    std::ofstream file;
    if (!v_out.empty()) {
      file.open(v_out, std::ios::binary);
      if (!file) throw qres::DomainError("cannot open '" + v_out + "' for writing");
    }
    const qres::SweepResult result = qres::run_sweep(config);
    qres::emit_report(result.records, format, v_out.empty() ? std::cout : file);
    qres::emit_summary(result, std::cerr);
    if (!v_summary.empty()) {
      std::ofstream s(v_summary);
      qres::emit_summary(result, s);
    }
    return qres::sweep_exit_code(result);
  } catch (const qres::DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const qres::UnknownItem& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFail;
  }
}

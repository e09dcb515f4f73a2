#include <gtest/gtest.h>

#include <set>
#include <sstream>

#include "oracle.hpp"
#include "qres/error.hpp"
#include "qres/report.hpp"
#include "qres/sieve.hpp"
#include "qres/verifier.hpp"

using namespace qres;

namespace {

std::string render(const SweepResult& r, ReportFormat f) {
  std::ostringstream os;
  emit_report(r.records, f, os);
  return os.str();
}

}  // namespace

TEST(Sieve, Examples) {
  EXPECT_EQ(sieve_primes(3, 10), (std::vector<std::uint64_t>{3, 5, 7}));
  EXPECT_EQ(sieve_primes(13000, 13010), (std::vector<std::uint64_t>{13001, 13003, 13007, 13009}));
  EXPECT_EQ(sieve_primes(2, 3), (std::vector<std::uint64_t>{2}));
  EXPECT_THROW((void)sieve_primes(1, 10), DomainError);
  EXPECT_THROW((void)sieve_primes(10, 10), DomainError);
  EXPECT_THROW((void)sieve_primes(2, (1ULL << 31) + 1), DomainError);
}

TEST(Sieve, MatchesTrialDivisionAcrossSegments) {
  const auto got = sieve_primes(2, 200000);
  const auto want = oracle::primes(2, 200000);
  ASSERT_EQ(got.size(), want.size());
  for (std::size_t i = 0; i < got.size(); ++i) ASSERT_EQ(got[i], static_cast<std::uint64_t>(want[i]));
  const auto top = sieve_primes((1ULL << 31) - 100, 1ULL << 31);
  EXPECT_EQ(top.back(), 2147483647ULL);
}

TEST(Grid, Parse) {
  const GridSpec g = GridSpec::parse("a=1,2;A=-2..1;delta=-1");
  EXPECT_EQ(*g.find("a"), (std::vector<std::int64_t>{1, 2}));
  EXPECT_EQ(*g.find("A"), (std::vector<std::int64_t>{-2, -1, 0, 1}));
  EXPECT_EQ(*g.find("delta"), (std::vector<std::int64_t>{-1}));
  EXPECT_EQ(g.find("x"), nullptr);
  EXPECT_TRUE(GridSpec::parse("").values.empty());
  EXPECT_THROW((void)GridSpec::parse("q=1"), DomainError);
  EXPECT_THROW((void)GridSpec::parse("a=3..1"), DomainError);
  EXPECT_THROW((void)GridSpec::parse("a=x"), DomainError);
  EXPECT_THROW((void)GridSpec::parse("delta=2"), DomainError);
}

TEST(VerifyTarget, Examples) {
  auto one = [](std::string_view item, std::uint64_t p, const Params& params) {
    const auto records = verify_target(item, p, params);
    EXPECT_EQ(records.size(), 1u);
    return records.at(0);
  };
  const auto t = one("thm1.4", 13, {{"A", 1}});
  EXPECT_EQ(t.lhs, 5);
  EXPECT_EQ(t.rhs, 5);
  EXPECT_TRUE(t.ok);
  const auto c = one("conj7.1", 7, {{"delta", 1}});
  EXPECT_EQ(c.lhs, -1);
  EXPECT_EQ(c.rhs, -1);
  const auto s = one("thm1.2", 5, {{"a", 1}, {"b", 0}, {"c", 5}});
  EXPECT_EQ(s.lhs, 4);
  EXPECT_EQ(s.rhs, 4);
  EXPECT_THROW((void)verify_target("thm9.9", 7, {}), UnknownItem);
  EXPECT_THROW((void)verify_target("lem3.3", 7, {}), DomainError);
  EXPECT_EQ(verify_target("thm1.1", 9, {{"x", 2}}).size(), 5u);
}

TEST(Registry, OrderAndMembership) {
  const auto ids = item_ids();
  ASSERT_EQ(ids.size(), 24u);
  EXPECT_EQ(ids.front(), "thm1.1");
  EXPECT_EQ(ids.back(), "conj7.10");
  EXPECT_TRUE(is_known_item("background"));
  EXPECT_FALSE(is_known_item("conj7.11"));
}

TEST(Sweep, ConjectureAndTheoremRangesClean) {
  SweepConfig cfg;
  cfg.targets = {"conj7.2"};
  cfg.min = 5;
  cfg.max = 2000;
  EXPECT_EQ(run_sweep(cfg).failures(), 0u);
  cfg.targets = {"thm1.5"};
  cfg.min = 3;
  const auto r = run_sweep(cfg);
  EXPECT_EQ(r.failures(), 0u);
  EXPECT_GT(r.records.size(), 500u);
}

TEST(Sweep, DeterministicAcrossWorkerCounts) {
  SweepConfig cfg;
  cfg.min = 3;
  cfg.max = 50;
  cfg.jobs = 1;
  const auto a = run_sweep(cfg);
  cfg.jobs = 8;
  const auto b = run_sweep(cfg);
  EXPECT_EQ(render(a, ReportFormat::json_lines), render(b, ReportFormat::json_lines));
  EXPECT_EQ(render(a, ReportFormat::csv), render(b, ReportFormat::csv));
  EXPECT_EQ(a.failures(), 0u);
}

TEST(Sweep, EveryItemPrimePairAccountedFor) {
  SweepConfig cfg;
  cfg.min = 3;
  cfg.max = 120;
  const auto r = run_sweep(cfg);
  std::set<std::pair<std::string, std::uint64_t>> seen;
  for (const auto& rec : r.records) seen.emplace(rec.item, rec.p);
  for (const auto& s : r.skips) seen.emplace(s.item, s.p);
  for (auto p : sieve_primes(3, 120))
    for (auto id : item_ids()) EXPECT_TRUE(seen.contains({std::string(id), p})) << id << " " << p;
  for (std::uint64_t n = 3; n < 120; n += 2) EXPECT_TRUE(seen.contains({"thm1.1", n})) << n;
}

TEST(Sweep, RecordsSortedByItemThenPrime) {
  SweepConfig cfg;
  cfg.targets = {"thm1.7", "lem3.1"};
  cfg.max = 60;
  cfg.jobs = 3;
  const auto r = run_sweep(cfg);
  ASSERT_FALSE(r.records.empty());
  EXPECT_EQ(r.records.front().item, "thm1.7");
  EXPECT_EQ(r.records.back().item, "lem3.1");
  for (std::size_t i = 1; i < r.records.size(); ++i) {
    if (r.records[i].item == r.records[i - 1].item) EXPECT_LE(r.records[i - 1].p, r.records[i].p);
  }
}

TEST(Sweep, RejectsBadConfig) {
  SweepConfig cfg;
  cfg.min = 2;
  EXPECT_THROW((void)run_sweep(cfg), DomainError);
  cfg.min = 3;
  cfg.targets = {"nope"};
  EXPECT_THROW((void)run_sweep(cfg), UnknownItem);
}

TEST(Report, Formats) {
  std::vector<VerificationRecord> one{make_record("thm1.4", 13, {{"A", 1}}, 5, 5)};
  std::ostringstream js, csv, empty;
  emit_report(one, ReportFormat::json_lines, js);
  EXPECT_EQ(js.str(), R"({"item":"thm1.4","p":13,"params":{"A":1},"lhs":5,"rhs":5,"ok":true,"elapsed_us":0})" "\n");
  emit_report(one, ReportFormat::csv, csv);
  EXPECT_EQ(csv.str(), "item,p,params,lhs,rhs,ok,elapsed_us\nthm1.4,13,A=1,5,5,true,0\n");
  emit_report({}, ReportFormat::json_lines, empty);
  EXPECT_TRUE(empty.str().empty());
  EXPECT_EQ(parse_report_format("csv"), ReportFormat::csv);
  EXPECT_THROW((void)parse_report_format("xml"), DomainError);
}

TEST(Report, CsvFlattensParams) {
  std::vector<VerificationRecord> rec{make_record("thm1.2", 7, {{"a", 1}, {"b", -2}, {"c", 3}}, 1, 6)};
  std::ostringstream os;
  emit_report(rec, ReportFormat::csv, os);
  EXPECT_NE(os.str().find("thm1.2,7,a=1;b=-2;c=3,1,6,false,0\n"), std::string::npos);
}

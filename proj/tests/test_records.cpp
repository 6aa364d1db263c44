#include <doctest.h>

#include <string>

#include "schubert/sweep.hpp"

using namespace schubert;

namespace {

std::string stream_of(const SweepResult& res) {
  std::string s;
  for (const SweepRecord& r : res.records) {
    s += r.to_line();
    s += '\n';
  }
  return s;
}

}  // namespace

TEST_CASE("record lines round-trip losslessly") {
  RootSystem rs = build_root_system(CartanType::make('B', 2));
  BruhatContext ctx(rs);
  for (const WeylElement& w : generate_group(rs)) {
    Verdict v = is_smooth(rs, ctx, w);
    SweepRecord rec = SweepRecord::from_verdict(rs, v);
    SweepRecord back = SweepRecord::from_line(rec.to_line());
    CHECK(back == rec);
    CHECK(back.to_line() == rec.to_line());
  }
}

TEST_CASE("inapplicable records omit the condition fields") {
  RootSystem rs = build_root_system(CartanType::make('G', 2));
  BruhatContext ctx(rs);
  Verdict v = is_smooth(rs, ctx, from_word(rs, {1, 2}));
  SweepRecord rec = SweepRecord::from_verdict(rs, v);
  CHECK_FALSE(rec.has_conditions);
  std::string line = rec.to_line();
  CHECK(line.find("palindromic") == std::string::npos);
  CHECK(line.find("poincare") == std::string::npos);
  CHECK(line.find("CRITERION_INAPPLICABLE") != std::string::npos);
  CHECK(SweepRecord::from_line(line) == rec);
}

TEST_CASE("field order in a record line is pinned") {
  RootSystem rs = build_root_system(CartanType::make('A', 2));
  BruhatContext ctx(rs);
  Verdict v = is_smooth(rs, ctx, from_word(rs, {1, 2}));
  std::string line = SweepRecord::from_verdict(rs, v).to_line();
  const char* fields[] = {"\"type\"",        "\"rank\"",       "\"word\"",
                          "\"length\"",      "\"poincare\"",   "\"palindromic\"",
                          "\"curve_roots\"", "\"hull_violations\"", "\"verdict\""};
  size_t prev = 0;
  for (const char* f : fields) {
    size_t pos = line.find(f);
    REQUIRE(pos != std::string::npos);
    CHECK(pos > prev);
    prev = pos;
  }
  CHECK(line.front() == '{');
  CHECK(line.back() == '}');
  CHECK(line.find('\n') == std::string::npos);
}

TEST_CASE("sweep records are ordered by length then canonical word") {
  RootSystem rs = build_root_system(CartanType::make('B', 2));
  SweepResult res = run_sweep(rs);
  REQUIRE(res.records.size() == 8);
  for (size_t i = 1; i < res.records.size(); ++i) {
    const SweepRecord& a = res.records[i - 1];
    const SweepRecord& b = res.records[i];
    CHECK((a.length < b.length || (a.length == b.length && a.word < b.word)));
  }
  CHECK(res.records.front().word.empty());
  CHECK(res.records.back().word == std::vector<int>{2, 1, 2, 1});
}

TEST_CASE("sweep summaries count the verdict lines") {
  RootSystem a2 = build_root_system(CartanType::make('A', 2));
  SweepResult res = run_sweep(a2);
  CHECK(res.summary.total == 6);
  CHECK(res.summary.smooth == 6);
  CHECK(res.summary.singular == 0);

  RootSystem a3 = build_root_system(CartanType::make('A', 3));
  SweepResult res3 = run_sweep(a3);
  CHECK(res3.summary.total == 24);
  CHECK(res3.summary.smooth == 22);
  CHECK(res3.summary.singular == 2);

  std::string line = res3.summary.to_line('A', 3);
  CHECK(line.find("\"summary\"") != std::string::npos);
  CHECK(line.find("\"total\":24") != std::string::npos);
}

TEST_CASE("sweep output is byte-identical across job counts") {
  for (const char* name : {"B3", "D4"}) {
    RootSystem rs = build_root_system(CartanType::make(name[0], name[1] - '0'));
    CAPTURE(name);
    SweepOptions serial, parallel;
    serial.jobs = 1;
    parallel.jobs = 3;
    SweepResult a = run_sweep(rs, serial);
    SweepResult b = run_sweep(rs, parallel);
    CHECK(stream_of(a) == stream_of(b));
    CHECK(a.summary.total == b.summary.total);
    CHECK(a.summary.smooth == b.summary.smooth);
  }
}

TEST_CASE("G2 sweeps demand the explicit override") {
  RootSystem rs = build_root_system(CartanType::make('G', 2));
  CHECK_THROWS_AS(run_sweep(rs), std::invalid_argument);

  SweepOptions allow;
  allow.allow_g2 = true;
  SweepResult res = run_sweep(rs, allow);
  CHECK(res.summary.total == 12);
  CHECK(res.summary.conditions_only == 12);
  CHECK(res.summary.smooth == 0);
  for (const SweepRecord& rec : res.records) {
    CHECK(rec.verdict == "CONDITIONS_ONLY");
    CHECK(rec.has_conditions);  // values are present, they just claim nothing
  }
}

TEST_CASE("type-A oracle report") {
  RootSystem rs = build_root_system(CartanType::make('A', 3));
  OracleReport rep = run_type_a_oracle(rs);
  CHECK(rep.total == 24);
  CHECK(rep.mismatches == 0);
  CHECK(rep.smooth == 22);
  CHECK(rep.mismatch_by_length.empty());

  RootSystem b2 = build_root_system(CartanType::make('B', 2));
  CHECK_THROWS_AS(run_type_a_oracle(b2), std::invalid_argument);
}

#include "schubert/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

#include <json.hpp>

#include "schubert/errors.hpp"

namespace schubert {

namespace {

std::vector<std::vector<int>> roots_to_coords(const std::vector<Root>& roots) {
  std::vector<std::vector<int>> out;
  out.reserve(roots.size());
  for (const Root& r : roots) out.push_back(r.coords());
  return out;
}

}  // namespace

SweepRecord SweepRecord::from_verdict(const RootSystem& rs, const Verdict& v) {
  SweepRecord rec;
  rec.type = rs.type.letter;
  rec.rank = rs.type.rank;
  rec.word = v.word;
  rec.length = v.length;
  rec.verdict = std::string(to_string(v.status));
  rec.has_conditions = v.palindromic.has_value();
  if (rec.has_conditions) {
    rec.poincare = v.poincare.coeffs;
    rec.palindromic = *v.palindromic;
    rec.curve_roots = roots_to_coords(v.curve_roots);
    rec.hull_violations = roots_to_coords(v.hull_violations);
  }
  return rec;
}

std::string SweepRecord::to_line() const {
  nlohmann::ordered_json j;
  j["type"] = std::string(1, type);
  j["rank"] = rank;
  j["word"] = word;
  j["length"] = length;
  if (has_conditions) {
    j["poincare"] = poincare;
    j["palindromic"] = palindromic;
    j["curve_roots"] = curve_roots;
    j["hull_violations"] = hull_violations;
  }
  j["verdict"] = verdict;
  return j.dump();
}

SweepRecord SweepRecord::from_line(const std::string& line) {
  nlohmann::ordered_json j = nlohmann::ordered_json::parse(line);
  SweepRecord rec;
  std::string t = j.at("type").get<std::string>();
  if (t.size() != 1) throw std::invalid_argument("record: bad type field");
  rec.type = t[0];
  rec.rank = j.at("rank").get<int>();
  rec.word = j.at("word").get<std::vector<int>>();
  rec.length = j.at("length").get<int>();
  rec.has_conditions = j.contains("palindromic");
  if (rec.has_conditions) {
    rec.poincare = j.at("poincare").get<std::vector<int64_t>>();
    rec.palindromic = j.at("palindromic").get<bool>();
    rec.curve_roots = j.at("curve_roots").get<std::vector<std::vector<int>>>();
    rec.hull_violations = j.at("hull_violations").get<std::vector<std::vector<int>>>();
  }
  rec.verdict = j.at("verdict").get<std::string>();
  return rec;
}

std::string SweepSummary::to_line(char type, int rank) const {
  nlohmann::ordered_json j;
  j["summary"]["type"] = std::string(1, type);
  j["summary"]["rank"] = rank;
  j["summary"]["total"] = total;
  j["summary"]["smooth"] = smooth;
  j["summary"]["singular"] = singular;
  j["summary"]["conditions_only"] = conditions_only;
  return j.dump();
}

std::vector<WeylElement> sorted_group(const RootSystem& rs, size_t group_budget) {
  std::vector<WeylElement> group = generate_group(rs, group_budget);
  SCHUBERT_CHECK(group.size() == weyl_order(rs.type),
                 "generated group size disagrees with |W|");
  std::vector<std::vector<int>> words(group.size());
  std::vector<size_t> idx(group.size());
  for (size_t i = 0; i < group.size(); ++i) {
    words[i] = reduced_word(group[i]);
    idx[i] = i;
  }
  std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) {
    if (group[a].len != group[b].len) return group[a].len < group[b].len;
    return words[a] < words[b];
  });
  std::vector<WeylElement> out;
  out.reserve(group.size());
  for (size_t i : idx) out.push_back(group[i]);
  return out;
}

SweepResult run_sweep(const RootSystem& rs, const SweepOptions& opts) {
  if (rs.type.letter == 'G' && !opts.allow_g2)
    throw std::invalid_argument(
        "the criterion does not characterize smoothness for G2; pass allow_g2 to emit "
        "condition values");

  std::vector<WeylElement> elements = sorted_group(rs, opts.group_budget);
  SweepResult res;
  res.records.resize(elements.size());

  EvalOptions eval;
  eval.allow_g2 = opts.allow_g2;
  eval.interval_budget = opts.interval_budget;

  const int jobs = std::max(1, opts.jobs);
  std::atomic<size_t> cursor{0};
  std::mutex err_mu;
  std::exception_ptr first_error;

  auto worker = [&]() {
    BruhatContext ctx(rs);  // per-worker memo; outputs do not depend on it
    for (;;) {
      size_t i = cursor.fetch_add(1);
      if (i >= elements.size()) return;
      try {
        Verdict v = is_smooth(rs, ctx, elements[i], eval);
        res.records[i] = SweepRecord::from_verdict(rs, v);
      } catch (...) {
        std::lock_guard<std::mutex> lock(err_mu);
        if (!first_error) first_error = std::current_exception();
        cursor.store(elements.size());
        return;
      }
    }
  };

  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (first_error) std::rethrow_exception(first_error);

  for (const SweepRecord& rec : res.records) {
    ++res.summary.total;
    if (rec.verdict == "SMOOTH") ++res.summary.smooth;
    else if (rec.verdict == "SINGULAR") ++res.summary.singular;
    else if (rec.verdict == "CONDITIONS_ONLY") ++res.summary.conditions_only;
  }
  return res;
}

OracleReport run_type_a_oracle(const RootSystem& rs, const SweepOptions& opts) {
  if (rs.type.letter != 'A')
    throw std::invalid_argument("the pattern oracle exists only for type A");
  std::vector<WeylElement> elements = sorted_group(rs, opts.group_budget);
  BruhatContext ctx(rs);
  EvalOptions eval;
  eval.interval_budget = opts.interval_budget;

  OracleReport rep;
  for (const WeylElement& w : elements) {
    Verdict v = is_smooth(rs, ctx, w, eval);
    bool criterion_smooth = v.status == Status::Smooth;
    bool oracle_smooth = smooth_by_pattern(weyl_to_permutation(rs, w));
    ++rep.total;
    if (criterion_smooth) ++rep.smooth;
    if (criterion_smooth != oracle_smooth) {
      ++rep.mismatches;
      ++rep.mismatch_by_length[w.len];
    }
  }
  return rep;
}

}  // namespace schubert

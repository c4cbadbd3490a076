#include "wlp/verifier.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <regex>
#include <stdexcept>
#include <unordered_map>

#include "wlp/constructions.hpp"

namespace wlp {

namespace {

using Clock = std::chrono::steady_clock;

std::int64_t elapsed_since(Clock::time_point start, const VerifyOptions& options) {
  if (!options.timing) return 0;
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (const auto& p : parts) {
    if (!out.empty()) out += sep;
    out += p;
  }
  return out;
}

}  // namespace

std::string to_string(Outcome outcome) {
  switch (outcome) {
    case Outcome::ConstructedAndFailed: return "constructed-and-failed";
    case Outcome::AllOrbitsHaveWLP: return "all-orbits-have-wlp";
    case Outcome::Skipped: return "skipped";
    case Outcome::Discrepancy: return "discrepancy";
  }
  return "unknown";
}

std::int64_t CampaignReport::count(Outcome outcome) const {
  return std::count_if(entries.begin(), entries.end(), [&](const MuOutcome& e) { return e.outcome == outcome; });
}

MuOutcome verify_existence(int n, int d, std::int64_t mu, const VerifyOptions& options) {
  const auto start = Clock::now();
  MuOutcome row;
  row.n = n;
  row.d = d;
  row.mu = mu;
  const Construction c = construct_failing_ideal(n, d, mu);
  row.recipe = c.family + ": " + join(c.derivation, " -> ");
  row.detail = format_ideal(c.ideal);
  const WlpReport report = wlp_report(c.ideal, options.rank);
  row.certified = report.certified();
  if (report.has_wlp()) {
    row.outcome = Outcome::Discrepancy;
    row.detail = "constructed ideal has the WLP: " + row.detail;
  } else if (c.expected) {
    const int k = c.expected->degree;
    const bool fails_there = std::find(report.failing_degrees.begin(), report.failing_degrees.end(), k) !=
                             report.failing_degrees.end();
    if (!fails_there) {
      row.outcome = Outcome::Discrepancy;
      row.detail = "expected failure in degree " + std::to_string(k) + " not observed: " + row.detail;
    } else {
      const FailureMode observed = classify_failure(report.record(k));
      row.failure_degree = k;
      row.mode = observed;
      if (c.expected->mode && !mode_matches(*c.expected->mode, observed)) {
        row.outcome = Outcome::Discrepancy;
        row.detail = "expected " + to_string(*c.expected->mode) + " failure, observed " + to_string(observed) + ": " +
                     row.detail;
      } else {
        row.outcome = Outcome::ConstructedAndFailed;
      }
    }
  } else {
    row.outcome = Outcome::ConstructedAndFailed;
    row.failure_degree = report.failure_degree();
    row.mode = report.failure_mode();
  }
  row.elapsed_ms = elapsed_since(start, options);
  return row;
}

std::vector<MuOutcome> verify_existence(int n, int d, const VerifyOptions& options) {
  std::vector<MuOutcome> out;
  for (auto mu : sigma(n, d).elements()) out.push_back(verify_existence(n, d, mu, options));
  return out;
}

OrbitEnumeration enumerate_orbits(int n, int d, std::int64_t mu, std::int64_t cap) {
  std::vector<Monomial> others;
  for (const auto& m : enumerate_monomials(n, d)) {
    if (!m.pure_power_index()) others.push_back(m);
  }
  const int total = static_cast<int>(others.size());
  const std::int64_t k = mu - n;
  if (k < 0 || k > total) {
    throw DomainError("no artinian ideal with " + std::to_string(mu) + " generators of degree " + std::to_string(d) +
                      " in " + std::to_string(n) + " variables");
  }
  if (total > 63) throw DomainError("orbit enumeration supports at most 63 non-pure-power monomials");

  std::unordered_map<Monomial, int, MonomialHash> index;
  for (int i = 0; i < total; ++i) index.emplace(others[static_cast<std::size_t>(i)], i);
  std::vector<int> sigma_perm(static_cast<std::size_t>(n));
  std::iota(sigma_perm.begin(), sigma_perm.end(), 0);
  std::vector<std::vector<int>> images;
  do {
    std::vector<int> img(static_cast<std::size_t>(total));
    for (int i = 0; i < total; ++i) img[static_cast<std::size_t>(i)] = index.at(permute(others[static_cast<std::size_t>(i)], sigma_perm));
    bool identity = true;
    for (int i = 0; i < total; ++i) identity = identity && img[static_cast<std::size_t>(i)] == i;
    if (!identity) images.push_back(std::move(img));
  } while (std::next_permutation(sigma_perm.begin(), sigma_perm.end()));

  auto apply = [&](const std::vector<int>& img, std::uint64_t mask) {
    std::uint64_t out = 0;
    for (std::uint64_t rest = mask; rest; rest &= rest - 1) out |= std::uint64_t{1} << img[static_cast<std::size_t>(__builtin_ctzll(rest))];
    return out;
  };

  OrbitEnumeration result;
  result.raw_count = binomial(total, k);
  const auto pure = pure_powers(n, d);
  const std::uint64_t last = ((std::uint64_t{1} << k) - 1) << (total - k);
  std::vector<std::uint64_t> orbit;
  for (std::uint64_t mask = k == 0 ? 0 : (std::uint64_t{1} << k) - 1;;) {
    bool minimal = true;
    orbit.assign(1, mask);
    for (const auto& img : images) {
      const std::uint64_t image = apply(img, mask);
      if (image < mask) {
        minimal = false;
        break;
      }
      orbit.push_back(image);
    }
    if (minimal) {
      if (static_cast<std::int64_t>(result.representatives.size()) >= cap) {
        result.capped = true;
        break;
      }
      std::sort(orbit.begin(), orbit.end());
      result.orbit_size_total += std::unique(orbit.begin(), orbit.end()) - orbit.begin();
      std::vector<Monomial> gens = pure;
      for (std::uint64_t rest = mask; rest; rest &= rest - 1) gens.push_back(others[static_cast<std::size_t>(__builtin_ctzll(rest))]);
      result.representatives.push_back(MonomialIdeal::equigenerated(n, std::move(gens)));
    }
    if (mask == last) break;
    // Next mask with the same popcount.
    const std::uint64_t low = mask & (~mask + 1);
    const std::uint64_t ripple = mask + low;
    mask = ripple | (((ripple ^ mask) >> 2) / low);
  }
  return result;
}

MuOutcome verify_sharpness(int n, int d, std::int64_t mu, const VerifyOptions& options) {
  if (sigma(n, d).contains(mu)) throw std::invalid_argument("verify_sharpness: mu lies in sigma(n,d)");
  const auto start = Clock::now();
  MuOutcome row;
  row.n = n;
  row.d = d;
  row.mu = mu;
  row.recipe = "exhaustive";
  const OrbitEnumeration orbits = enumerate_orbits(n, d, mu, options.orbit_cap);
  row.orbit_count = static_cast<std::int64_t>(orbits.representatives.size());
  if (orbits.capped) {
    row.outcome = Outcome::Skipped;
    row.detail = "more than " + std::to_string(options.orbit_cap) + " orbits (" + std::to_string(orbits.raw_count) +
                 " generator sets)";
    row.elapsed_ms = elapsed_since(start, options);
    return row;
  }
  if (orbits.orbit_size_total != orbits.raw_count) {
    row.outcome = Outcome::Discrepancy;
    row.detail = "orbit sizes sum to " + std::to_string(orbits.orbit_size_total) + ", expected " +
                 std::to_string(orbits.raw_count);
    row.elapsed_ms = elapsed_since(start, options);
    return row;
  }
  const auto& reps = orbits.representatives;
  std::vector<char> ok(reps.size(), 1);
  RankOptions inner = options.rank;
  inner.parallel = false;
#pragma omp parallel for schedule(dynamic)
  for (std::size_t r = 0; r < reps.size(); ++r) ok[r] = has_wlp(reps[r], inner) ? 1 : 0;
  auto bad = std::find(ok.begin(), ok.end(), 0);
  if (bad != ok.end()) {
    const auto& ideal = reps[static_cast<std::size_t>(bad - ok.begin())];
    row.outcome = Outcome::Discrepancy;
    const WlpReport report = wlp_report(ideal, options.rank);
    row.failure_degree = report.failure_degree();
    row.mode = report.failure_mode();
    row.certified = report.certified();
    row.detail = "fails the WLP: " + format_ideal(ideal);
  } else {
    row.outcome = Outcome::AllOrbitsHaveWLP;
    row.certified = true;
    row.detail = std::to_string(orbits.raw_count) + " generator sets";
  }
  row.elapsed_ms = elapsed_since(start, options);
  return row;
}

GlueCheck glue_condition_check(const MonomialIdeal& k, int j, const RankOptions& options) {
  const int n = k.num_vars();
  const Monomial xj = Monomial::variable(n, j);
  GlueCheck g;
  std::vector<Monomial> gens = k.generators();
  gens.push_back(xj);
  g.i_ideal = MonomialIdeal::general(n, std::move(gens));
  g.j_ideal = colon(k, xj);
  g.i_table = hilbert_table(g.i_ideal);
  g.j_table = hilbert_table(g.j_ideal);
  g.i_has_wlp = has_wlp(g.i_ideal, options);
  g.j_has_wlp = has_wlp(g.j_ideal, options);
  g.implications_hold = true;
  const int top = std::max(g.i_table.socle_degree(), g.j_table.socle_degree()) + 1;
  for (int i = 0; i <= top; ++i) {
    const auto a = g.i_table.at(i);
    const auto b = g.i_table.at(i + 1);
    const auto p = g.j_table.at(i - 1);
    const auto q = g.j_table.at(i);
    if ((a < b && !(p <= q)) || (a > b && !(p >= q))) {
      g.implications_hold = false;
      g.violating_degree = i;
      break;
    }
  }
  return g;
}

CampaignReport run_campaign_pair(int n, int d, const VerifyOptions& options) {
  const auto start = Clock::now();
  CampaignReport report;
  report.n = n;
  report.d = d;
  const IntegerSet s = sigma(n, d);
  const std::int64_t top = binomial(n + d - 1, d);
  const auto count = static_cast<std::size_t>(top - n + 1);
  report.entries.resize(count);
#pragma omp parallel for schedule(dynamic)
  for (std::size_t k = 0; k < count; ++k) {
    const std::int64_t mu = n + static_cast<std::int64_t>(k);
    try {
      report.entries[k] = s.contains(mu) ? verify_existence(n, d, mu, options) : verify_sharpness(n, d, mu, options);
    } catch (const std::exception& e) {
      MuOutcome row;
      row.n = n;
      row.d = d;
      row.mu = mu;
      row.outcome = Outcome::Discrepancy;
      row.detail = e.what();
      report.entries[k] = row;
    }
  }
  report.elapsed_ms = elapsed_since(start, options);
  return report;
}

std::vector<CampaignReport> run_campaign(const std::vector<std::pair<int, int>>& pairs, const VerifyOptions& options) {
  std::vector<CampaignReport> out;
  for (const auto& [n, d] : pairs) out.push_back(run_campaign_pair(n, d, options));
  return out;
}

std::vector<std::pair<int, int>> default_campaign_pairs() {
  return {{3, 2}, {3, 3}, {3, 4}, {3, 5}, {4, 2}, {4, 3}, {4, 4}, {5, 2}, {5, 3}, {6, 2}};
}

std::vector<std::pair<int, int>> parse_pairs(const std::string& text) {
  static const std::regex pair_re(R"(\s*\(\s*(\d+)\s*,\s*(\d+)\s*\)\s*(,|$))");
  std::vector<std::pair<int, int>> out;
  auto it = text.cbegin();
  std::smatch m;
  while (it != text.cend()) {
    if (!std::regex_search(it, text.cend(), m, pair_re, std::regex_constants::match_continuous)) {
      throw std::invalid_argument("cannot parse pairs near '" + std::string(it, text.cend()) + "'");
    }
    out.emplace_back(std::stoi(m[1].str()), std::stoi(m[2].str()));
    it = m[0].second;
  }
  if (out.empty()) throw std::invalid_argument("no (n,d) pairs given");
  return out;
}

nlohmann::json to_json(const MuOutcome& row) {
  nlohmann::json j;
  j["pair"] = {row.n, row.d};
  j["mu"] = row.mu;
  j["outcome"] = to_string(row.outcome);
  j["recipe"] = row.recipe;
  j["failure_degree"] = row.failure_degree ? nlohmann::json(*row.failure_degree) : nlohmann::json(nullptr);
  j["mode"] = row.mode ? nlohmann::json(to_string(*row.mode)) : nlohmann::json(nullptr);
  j["certified"] = row.certified;
  j["orbit_count"] = row.orbit_count;
  j["elapsed_ms"] = row.elapsed_ms;
  j["detail"] = row.detail;
  return j;
}

nlohmann::json to_json(const CampaignReport& report) {
  nlohmann::json j;
  j["pair"] = {report.n, report.d};
  j["sigma"] = sigma(report.n, report.d).to_string();
  j["entries"] = nlohmann::json::array();
  for (const auto& e : report.entries) j["entries"].push_back(to_json(e));
  j["totals"] = {{"constructed_and_failed", report.count(Outcome::ConstructedAndFailed)},
                 {"all_orbits_have_wlp", report.count(Outcome::AllOrbitsHaveWLP)},
                 {"skipped", report.count(Outcome::Skipped)},
                 {"discrepancy", report.count(Outcome::Discrepancy)}};
  j["elapsed_ms"] = report.elapsed_ms;
  return j;
}

nlohmann::json to_json(const std::vector<CampaignReport>& reports) {
  nlohmann::json j;
  j["campaign"] = nlohmann::json::array();
  for (const auto& r : reports) j["campaign"].push_back(to_json(r));
  return j;
}

}  // namespace wlp

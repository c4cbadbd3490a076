// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 on any FAIL.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "wlp/catalog.hpp"
#include "wlp/constructions.hpp"
#include "wlp/engine.hpp"
#include "wlp/hilbert.hpp"
#include "wlp/inverse.hpp"
#include "wlp/verifier.hpp"

using namespace wlp;

namespace {

using Clock = std::chrono::steady_clock;

struct Check {
  bool ok = true;
  std::vector<std::string> notes;
  std::vector<std::string> failures;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      failures.push_back(what);
    }
  }
  void note(const std::string& s) { notes.push_back(s); }
};

// Ideals whose multiplication-map ranks were computed; criterion 7 revisits them.
std::vector<MonomialIdeal> g_seen;

void remember(const MonomialIdeal& ideal) {
  if (std::find(g_seen.begin(), g_seen.end(), ideal) == g_seen.end()) g_seen.push_back(ideal);
}

bool fails_at(const WlpReport& r, int degree) {
  return std::find(r.failing_degrees.begin(), r.failing_degrees.end(), degree) != r.failing_degrees.end();
}

std::string show(const std::vector<std::int64_t>& v) {
  std::ostringstream out;
  out << "[";
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
  return out.str() + "]";
}

MonomialIdeal tensor_general(const MonomialIdeal& a, const MonomialIdeal& b) {
  const int n = a.num_vars() + b.num_vars();
  std::vector<Monomial> gens;
  for (const auto& g : a.generators()) gens.push_back(g.embedded(n, 0));
  for (const auto& g : b.generators()) gens.push_back(g.embedded(n, a.num_vars()));
  return MonomialIdeal::general(n, std::move(gens));
}

// A in three variables fails by surjectivity; C = A tensor k[y1,y2]/(y1^5,y2^5) fails by injectivity.
MonomialIdeal algebra_a() { return parse_ideal("x1^5,x2^5,x3^5,x1^3*x2*x3,x1^3*x2^2,x1^4*x2,x1^4*x3"); }
MonomialIdeal algebra_c() { return tensor_ideal(algebra_a(), MonomialIdeal::equigenerated(2, pure_powers(2, 5))); }

MonomialIdeal split_five(int d) { return split_aci_five(d).ideal; }

MonomialIdeal split_three(int d) {
  auto gens = pure_powers(3, d);
  gens.push_back(Monomial{d / 2, (d + 1) / 2, 0});
  return MonomialIdeal::equigenerated(3, gens);
}

Check criterion1() {
  Check c;
  const auto t58 = hilbert_table(split_five(6));
  c.require(t58.at(11) == 639 && t58.at(12) == 642,
            "split five-variable ideal: HF(11), HF(12) = " + std::to_string(t58.at(11)) + ", " + std::to_string(t58.at(12)));
  const auto t59 = hilbert_table(quartic_five().ideal);
  c.require(t59.at(6) == 120 && t59.at(7) == 124,
            "quartic ideal: HF(6), HF(7) = " + std::to_string(t59.at(6)) + ", " + std::to_string(t59.at(7)));
  const auto ta = hilbert_table(algebra_a());
  const std::vector<std::int64_t> a_expected = {1, 3, 6, 10, 15, 14, 13, 10, 6, 3, 1};
  c.require(ta.values() == a_expected, "A series " + show(ta.values()));
  const auto tc = hilbert_table(algebra_c());
  const std::vector<std::int64_t> c_prefix = {1, 5, 15, 35, 70, 117, 171, 223, 261, 272, 257};
  const std::vector<std::int64_t> c_head(tc.values().begin(), tc.values().begin() + 11);
  c.require(c_head == c_prefix, "C series prefix " + show(c_head));
  c.require(tc == convolve(ta, hilbert_table(MonomialIdeal::equigenerated(2, pure_powers(2, 5)))),
            "C series is not the product series");
  const auto q = lefschetz_quotient_series(algebra_c(), {RankPolicy::Certified});
  const std::vector<std::int64_t> q_expected = {1, 4, 10, 20, 35, 47, 54, 52, 38, 13};
  c.require(q.values() == q_expected, "C/(l) series " + show(q.values()));
  c.note("HF 639/642, 120/124; A, C, C/(l) series match, T^9 coefficient " + std::to_string(q.at(9)));
  remember(algebra_c());
  return c;
}

Check criterion2() {
  Check c;
  const RankOptions certified{RankPolicy::Certified};
  {
    const auto r = wlp_report(parse_ideal("x1^3,x2^3,x3^3,x1*x2*x3"), certified);
    c.require(r.failure_degree() == 2, "Togliatti does not fail first at degree 2");
    c.require(r.certified(), "Togliatti report not certified");
  }
  for (int n = 3; n <= 5; ++n) {
    const auto ideal = product_aci(n).ideal;
    const auto r = wlp_report(ideal, certified);
    const int k = static_cast<int>(binomial(n, 2)) - 1;
    c.require(fails_at(r, k) && mode_matches(FailureMode::Surjectivity, classify_failure(r.record(k))),
              "product ideal n=" + std::to_string(n) + " does not fail by surjectivity at " + std::to_string(k));
    c.require(r.certified(), "product ideal report not certified");
    remember(ideal);
  }
  {
    const auto ideal = split_five(6);
    const auto r = wlp_report(ideal, certified);
    c.require(fails_at(r, 11), "split five-variable ideal (d=6) does not fail at 11");
    c.require(r.certified(), "split five-variable report not certified");
    c.note("d=6 split ideal failing degrees start at " + std::to_string(r.failure_degree().value_or(-1)));
    remember(ideal);
  }
  {
    const auto ideal = quartic_five().ideal;
    const auto r = wlp_report(ideal, certified);
    c.require(fails_at(r, 6) && classify_failure(r.record(6)) == FailureMode::Injectivity,
              "quartic ideal does not fail by injectivity at 6");
    c.require(r.certified(), "quartic report not certified");
    remember(ideal);
  }
  {
    const auto r = wlp_report(algebra_a(), certified);
    c.require(fails_at(r, 4) && classify_failure(r.record(4)) == FailureMode::Surjectivity,
              "A does not fail by surjectivity at 4");
    remember(algebra_a());
  }
  {
    const auto r = wlp_report(algebra_c(), certified);
    c.require(fails_at(r, 8) && classify_failure(r.record(8)) == FailureMode::Injectivity,
              "C does not fail by injectivity at 8");
    c.require(r.certified(), "C report not certified");
  }
  c.note("all verdicts under the certified policy");
  return c;
}

Check criterion3() {
  Check c;
  std::size_t checked = 0;
  for (const auto& family : dual_witness_catalog()) {
    for (const auto& [n, d] : family.grid) {
      const auto con = family.build(n, d);
      c.require(!con.dual_witnesses.empty(), family.name + " has no witness");
      for (const auto& f : con.dual_witnesses) {
        ++checked;
        const bool ok = !f.is_zero() && in_inverse_system(con.ideal, f, true) &&
                        (!con.expected || f.degree() == con.expected->degree + 1);
        c.require(ok, family.name + " fails at n=" + std::to_string(n) + ", d=" + std::to_string(d));
      }
    }
  }
  const auto q = quartic_five();
  const std::vector<Monomial> certificates = {Monomial{2, 3, 0, 0, 2}, Monomial{1, 0, 1, 2, 3}, Monomial{2, 0, 0, 3, 2},
                                              Monomial{2, 0, 2, 0, 3}, Monomial{2, 2, 0, 0, 3}};
  c.require(q.dual_witnesses.size() == 5, "quartic witness count");
  for (std::size_t k = 0; k < 5 && k < q.dual_witnesses.size(); ++k) {
    for (std::size_t w = 0; w < q.dual_witnesses.size(); ++w) {
      const bool present = q.dual_witnesses[w].coefficient(certificates[k]) != 0;
      c.require(present == (w == k), "certificate " + to_string(certificates[k], 'X') + " does not occur uniquely in witness " +
                                         std::to_string(k + 1));
    }
  }
  c.require(polynomial_rank(q.dual_witnesses) == 5, "quartic witnesses are dependent");
  for (int d = 2; d <= 8; ++d) {
    const auto t = two_corners(d);
    c.require(t.primal_witnesses.size() == 1 && primal_kernel_check(t.ideal, t.primal_witnesses[0]) &&
                  nonzero_in_quotient(t.ideal, t.primal_witnesses[0]),
              "two-corner primal witness fails at d=" + std::to_string(d));
  }
  c.note(std::to_string(checked) + " catalog witnesses, 5 uniqueness certificates, primal witness for d=2..8");
  return c;
}

Check criterion4() {
  Check c;
  for (int d = 5; d <= 12; ++d) {
    const auto t = hilbert_table(split_aci_four(d).ideal);
    const auto diff = t.at(2 * d - 3) - t.at(2 * d - 2);
    c.require(diff == 2 * d - 9, "four-variable split ideal d=" + std::to_string(d) + ": difference " + std::to_string(diff));
  }
  for (int d = 5; d <= 11; d += 2) {
    const int t = (3 * d - 3) / 2;
    const auto table = hilbert_table(split_three(d));
    c.require(table.at(t - 1) > table.at(t), "three-variable ideal d=" + std::to_string(d) + " has no strict drop at " +
                                                 std::to_string(t));
  }
  int cis = 0;
  for (int n = 2; n <= 5; ++n) {
    for (int d = 2; d <= 5; ++d) {
      ++cis;
      const auto t = hilbert_table(MonomialIdeal::equigenerated(n, pure_powers(n, d)));
      const int top = n * (d - 1);
      const int lo = top / 2;
      const int hi = (top + 1) / 2;
      bool ok = t.socle_degree() == top;
      for (int i = 0; i < lo; ++i) ok = ok && t.at(i) < t.at(i + 1);
      for (int i = lo; i < hi; ++i) ok = ok && t.at(i) == t.at(i + 1);
      for (int i = hi; i < top; ++i) ok = ok && t.at(i) > t.at(i + 1);
      for (int i = 0; i <= top; ++i) ok = ok && t.at(i) == t.at(top - i);
      c.require(ok, "complete intersection shape fails for n=" + std::to_string(n) + ", d=" + std::to_string(d));
    }
  }
  c.note("d=5..12 drops, d=5,7,9,11 strict drops, " + std::to_string(cis) + " complete intersections");
  return c;
}

Check criterion5() {
  Check c;
  // Failing factors and peak factors, any generator degrees.
  const std::vector<MonomialIdeal> failing = {parse_ideal("x1^3,x2^3,x3^3,x1*x2*x3"),
                                              injectivity_ideal(4, 2).ideal,
                                              surjectivity_ideal(3, 3).ideal,
                                              two_corners(3).ideal};
  const std::vector<MonomialIdeal> peaked = {parse_ideal("x1^2,x2^2"), parse_ideal("x1^3,x2^3"),
                                             parse_ideal("x1^4,x2^4"), parse_ideal("x1^2,x2^2,x3^2,x4^2"),
                                             parse_ideal("x1^3,x2^3,x1*x2^2")};
  int pairs = 0;
  for (const auto& a : failing) {
    const auto ra = wlp_report(a);
    for (const auto& b : peaked) {
      const auto peaks = isolated_peaks(hilbert_table(b));
      c.require(!peaks.empty(), "peak factor without isolated peak");
      const auto ideal = tensor_general(a, b);
      const auto r = wlp_report(ideal);
      for (int i : ra.failing_degrees) {
        for (int j : peaks) {
          ++pairs;
          c.require(fails_at(r, i + j), "tensor law fails: " + format_ideal(a) + " (degree " + std::to_string(i) +
                                            ") with " + format_ideal(b) + " (peak " + std::to_string(j) + ")");
        }
      }
      remember(ideal);
    }
  }
  // Witness composition through the square lift.
  const std::vector<Construction> bases = {product_aci(3), injectivity_ideal(3, 4), surjectivity_ideal(4, 3),
                                           two_corners(3), cubic_five(false)};
  int witnesses = 0;
  for (const auto& base : bases) {
    const auto lifted = extend_by_ci_square(base);
    for (const auto& f : lifted.primal_witnesses) {
      ++witnesses;
      c.require(primal_kernel_check(lifted.ideal, f) && nonzero_in_quotient(lifted.ideal, f) &&
                    f.degree() == lifted.expected->degree,
                "lifted primal witness fails for " + base.family);
    }
    for (const auto& f : lifted.dual_witnesses) {
      ++witnesses;
      c.require(in_inverse_system(lifted.ideal, f, true) && f.degree() == lifted.expected->degree + 1,
                "lifted dual witness fails for " + base.family);
    }
    const auto r = wlp_report(lifted.ideal);
    c.require(fails_at(r, lifted.expected->degree), "lifted " + base.family + " does not fail where predicted");
    remember(lifted.ideal);
  }
  // x1^4*g1 and x1^3*x2*g1 span the degree 8 kernel of C.
  {
    const auto ideal = algebra_c();
    const int n = 5;
    Polynomial g1(n);
    for (int k = 0; k <= 4; ++k) {
      std::vector<int> e = {0, 0, 0, 4 - k, k};
      g1 += Polynomial::term(Monomial(std::span<const int>(e)), k % 2 ? -1 : 1);
    }
    const auto f1 = Polynomial::term(Monomial{4, 0, 0, 0, 0}) * g1;
    const auto f2 = Polynomial::term(Monomial{3, 1, 0, 0, 0}) * g1;
    const auto kernel = primal_kernel_basis(ideal, 8);
    c.require(kernel.size() == 2, "C kernel in degree 8 has dimension " + std::to_string(kernel.size()));
    c.require(primal_kernel_check(ideal, f1) && primal_kernel_check(ideal, f2), "f1*g1 or f2*g1 not in the kernel");
    std::vector<Polynomial> all = kernel;
    all.push_back(f1);
    all.push_back(f2);
    c.require(polynomial_rank(all) == 2 && polynomial_rank(std::vector<Polynomial>{f1, f2}) == 2,
              "f1*g1, f2*g1 do not span the kernel");
  }
  const auto control = wlp_report(parse_ideal("x1^3,x2^3,x3^3,x1*x2*x3,x4^3"), {RankPolicy::Certified});
  c.require(control.has_wlp(), "Togliatti tensor k[y]/(y^3) fails the WLP");
  remember(control.ideal);
  c.note(std::to_string(pairs) + " degree pairs, " + std::to_string(witnesses) +
         " lifted witnesses, negative control has the WLP");
  return c;
}

Check criterion6() {
  Check c;
  VerifyOptions options;
  std::int64_t confirmed = 0, sharp = 0, skipped = 0, bad = 0;
  for (const auto& [n, d] : default_campaign_pairs()) {
    const auto report = run_campaign_pair(n, d, options);
    const std::int64_t interval = binomial(n + d - 1, d) - n + 1;
    c.require(static_cast<std::int64_t>(report.entries.size()) == interval, "campaign accounting");
    for (const auto& e : report.entries) {
      const bool in_sigma = sigma(n, d).contains(e.mu);
      switch (e.outcome) {
        case Outcome::ConstructedAndFailed:
          ++confirmed;
          c.require(in_sigma, "constructed row outside sigma");
          remember(construct_failing_ideal(n, d, e.mu).ideal);
          break;
        case Outcome::AllOrbitsHaveWLP: ++sharp; break;
        case Outcome::Skipped: {
          ++skipped;
          // Close the gap with a larger cap.
          VerifyOptions wide = options;
          wide.orbit_cap = 10'000'000;
          const auto full = verify_sharpness(n, d, e.mu, wide);
          c.require(full.outcome == Outcome::AllOrbitsHaveWLP,
                    "(" + std::to_string(n) + "," + std::to_string(d) + "," + std::to_string(e.mu) + ") beyond cap: " +
                        to_string(full.outcome));
          c.note("(" + std::to_string(n) + "," + std::to_string(d) + "," + std::to_string(e.mu) + ") skipped at cap, " +
                 std::to_string(full.orbit_count) + " orbits verified separately");
          break;
        }
        case Outcome::Discrepancy:
          ++bad;
          c.require(false, "discrepancy at (" + std::to_string(n) + "," + std::to_string(d) + "," +
                               std::to_string(e.mu) + "): " + e.detail);
          break;
      }
    }
  }
  const std::vector<std::tuple<int, int, std::int64_t>> named = {{4, 3, 5}, {5, 2, 8}, {6, 2, 10}};
  for (const auto& [n, d, mu] : named) {
    const auto row = verify_sharpness(n, d, mu, options);
    c.require(row.outcome == Outcome::AllOrbitsHaveWLP, "named sharpness case failed");
    if (n == 6) c.note("(6,2,10) has " + std::to_string(row.orbit_count) + " orbits");
  }
  for (int d = 2; d <= 8; ++d) {
    if (d % 6 == 3) continue;
    const auto row = verify_sharpness(3, d, 4, options);
    c.require(row.outcome == Outcome::AllOrbitsHaveWLP, "ternary almost complete intersection d=" + std::to_string(d));
  }
  c.note(std::to_string(confirmed) + " constructed, " + std::to_string(sharp) + " sharp, " + std::to_string(skipped) +
         " skipped, " + std::to_string(bad) + " counterexamples");
  return c;
}

Check criterion7() {
  Check c;
  std::size_t maps = 0;
  for (const auto& ideal : g_seen) {
    const auto r = wlp_report(ideal);
    for (int j = 1; j <= r.table.socle_degree(); ++j) {
      const auto& rec = r.record(j - 1);
      const auto mult = mult_map_matrix(ideal, j - 1);
      const auto dp = differentiation_matrix(ideal, j, DualBasis::DividedPower);
      c.require(dp == mult.transposed(), "divided-power matrix is not the transpose for " + format_ideal(ideal));
      const auto dual_rank = rank(differentiation_matrix(ideal, j, DualBasis::Monomial),
                                  {RankPolicy::Auto, mix_seed(0, static_cast<std::uint64_t>(j - 1))});
      c.require(static_cast<std::int64_t>(dual_rank.rank) == rec.rank,
                "rank mismatch in degree " + std::to_string(j) + " for " + format_ideal(ideal));
      ++maps;
    }
  }
  c.note(std::to_string(g_seen.size()) + " ideals, " + std::to_string(maps) + " maps");
  return c;
}

Check criterion8() {
  Check c;
  int pairs = 0;
  for (int n = 3; n <= 12; ++n) {
    for (int d = 2; n + d <= 14; ++d) {
      if (n == 3 && d == 2) continue;
      ++pairs;
      const auto s = surjectivity_ideal(n, d);
      c.require(s.mu == beta(n, d), "annihilator count " + std::to_string(s.mu) + " != beta(" + std::to_string(n) + "," +
                                        std::to_string(d) + ") = " + std::to_string(beta(n, d)));
    }
  }
  c.note(std::to_string(pairs) + " pairs");
  return c;
}

Check criterion9() {
  Check c;
  const auto con = construct_failing_ideal(8, 4, 13);
  c.require(con.expected && con.expected->degree == 9, "expected failure degree is not 9");
  const RankOptions fast{RankPolicy::Fast, 2024};
  const auto r = wlp_report(con.ideal, fast);
  c.require(fails_at(r, 9), "(8,4,13) does not fail at degree 9");
  const auto m = mult_map_matrix(con.ideal, 9);
  const auto res = rank(m, {RankPolicy::Fast, mix_seed(2024, 9)});
  c.require(res.certification == Certification::Probabilistic && res.primes.size() == 2 && res.primes[0] != res.primes[1],
            "degree 9 rank not accepted by two-prime agreement");
  c.require(static_cast<std::int64_t>(res.rank) == r.record(9).rank, "degree 9 rank differs between runs");
  c.note("degree 9 map " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + ", rank " +
         std::to_string(res.rank) + " < " + std::to_string(std::min(m.rows(), m.cols())) + ", primes " +
         std::to_string(res.primes.at(0)) + ", " + std::to_string(res.primes.at(1)));
  return c;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Check()>>> criteria = {
      {"golden Hilbert values", criterion1},  {"WLP verdicts", criterion2},
      {"witness suite", criterion3},          {"Hilbert identities", criterion4},
      {"tensor laws", criterion5},            {"existence and sharpness campaign", criterion6},
      {"transpose-rank duality", criterion7}, {"annihilator count equals beta", criterion8},
      {"(8,4,13) end to end", criterion9}};
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const auto start = Clock::now();
    Check c;
    try {
      c = criteria[k].second();
    } catch (const std::exception& e) {
      c.require(false, std::string("exception: ") + e.what());
    }
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
    std::cout << (c.ok ? "PASS " : "FAIL ") << k + 1 << " " << criteria[k].first << " (" << ms << " ms)";
    for (const auto& s : c.notes) std::cout << "; " << s;
    std::cout << "\n";
    for (const auto& f : c.failures) std::cout << "    " << f << "\n";
    std::cout.flush();
    if (!c.ok) ++failed;
  }
  return failed == 0 ? 0 : 1;
}

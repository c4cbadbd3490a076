#include <omp.h>

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <json.hpp>
#include <map>
#include <sstream>

#include "wlp/catalog.hpp"
#include "wlp/constructions.hpp"
#include "wlp/engine.hpp"
#include "wlp/hilbert.hpp"
#include "wlp/inverse.hpp"
#include "wlp/verifier.hpp"

namespace {

using nlohmann::json;
using namespace wlp;

constexpr int kExitDomain = 1;
constexpr int kExitDiscrepancy = 2;
constexpr int kExitUsage = 64;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Globals {
  std::string policy = "auto";
  std::uint64_t seed = 0;
  std::string format = "human";
  std::string out;
};

RankOptions rank_options(const Globals& g) {
  static const std::map<std::string, RankPolicy> policies = {
      {"auto", RankPolicy::Auto}, {"fast", RankPolicy::Fast}, {"certified", RankPolicy::Certified}};
  RankOptions o;
  o.policy = policies.at(g.policy);
  o.seed = g.seed;
  return o;
}

// Writes to --out when given, stdout otherwise.
void emit(const Globals& g, const std::string& text) {
  if (g.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(g.out);
  if (!file) throw std::runtime_error("cannot write " + g.out);
  file << text;
}

void emit_json(const Globals& g, const json& j) { emit(g, j.dump(2) + "\n"); }

MonomialIdeal read_ideal(const std::string& text, int vars) {
  return vars > 0 ? parse_ideal(text, vars) : parse_ideal(text);
}

json table_json(const HilbertTable& t) { return t.values(); }

std::string verdict_line(const WlpReport& r) {
  if (r.has_wlp()) return "HAS the WLP";
  const int k = *r.failure_degree();
  const auto& rec = r.record(k);
  std::ostringstream out;
  out << "FAILS at degree " << k << " (rank " << rec.rank << "/" << rec.expected_rank << ", "
      << to_string(classify_failure(rec)) << ")";
  return out.str();
}

json report_json(const WlpReport& r) {
  json j;
  j["ideal"] = format_ideal(r.ideal);
  j["num_vars"] = r.ideal.num_vars();
  j["hilbert"] = table_json(r.table);
  j["has_wlp"] = r.has_wlp();
  j["failure_degree"] = r.failure_degree() ? json(*r.failure_degree()) : json(nullptr);
  j["mode"] = r.failure_mode() ? json(to_string(*r.failure_mode())) : json(nullptr);
  j["failing_degrees"] = r.failing_degrees;
  j["certified"] = r.certified();
  j["verdict"] = verdict_line(r);
  j["records"] = json::array();
  for (const auto& rec : r.records) {
    j["records"].push_back({{"degree", rec.degree},
                            {"dim_source", rec.dim_source},
                            {"dim_target", rec.dim_target},
                            {"rank", rec.rank},
                            {"expected_rank", rec.expected_rank},
                            {"maximal", rec.maximal},
                            {"certification", rec.certification == Certification::Exact ? "exact" : "probabilistic"}});
  }
  return j;
}

std::string report_text(const WlpReport& r) {
  std::ostringstream out;
  out << "ideal: " << format_ideal(r.ideal) << "\n";
  out << "hilbert series: " << hilbert_series_string(r.table) << "\n";
  out << std::setw(5) << "deg" << std::setw(10) << "dim_i" << std::setw(10) << "dim_i+1" << std::setw(10) << "rank"
      << std::setw(10) << "expected" << "  status\n";
  for (const auto& rec : r.records) {
    out << std::setw(5) << rec.degree << std::setw(10) << rec.dim_source << std::setw(10) << rec.dim_target
        << std::setw(10) << rec.rank << std::setw(10) << rec.expected_rank << "  "
        << (rec.maximal ? "ok" : "FAIL " + to_string(classify_failure(rec)))
        << (rec.certification == Certification::Exact ? "" : " (probabilistic)") << "\n";
  }
  out << verdict_line(r) << "\n";
  return out.str();
}

json construction_json(const Construction& c) {
  json j;
  j["family"] = c.family;
  j["n"] = c.n;
  j["d"] = c.d;
  j["mu"] = c.mu;
  j["params"] = c.params;
  j["ideal"] = format_ideal(c.ideal);
  j["description"] = c.description;
  j["derivation"] = c.derivation;
  if (c.expected) {
    j["expected_failure"] = {{"degree", c.expected->degree},
                             {"mode", c.expected->mode ? json(to_string(*c.expected->mode)) : json(nullptr)}};
  } else {
    j["expected_failure"] = "verify by scan";
  }
  j["primal_witnesses"] = json::array();
  for (const auto& f : c.primal_witnesses) j["primal_witnesses"].push_back(f.to_string('x'));
  j["dual_witnesses"] = json::array();
  for (const auto& f : c.dual_witnesses) j["dual_witnesses"].push_back(f.to_string());
  return j;
}

std::string construction_text(const Construction& c) {
  std::ostringstream out;
  out << "ideal: " << format_ideal(c.ideal) << "\n";
  out << "family: " << c.family << " (n=" << c.n << ", d=" << c.d << ", mu=" << c.mu << ")\n";
  out << "description: " << c.description << "\n";
  out << "derivation:";
  for (const auto& s : c.derivation) out << "\n  " << s;
  out << "\n";
  if (c.expected) {
    out << "expected failure degree " << c.expected->degree;
    if (c.expected->mode) out << " (" << to_string(*c.expected->mode) << ")";
    out << "\n";
  } else {
    out << "expected failure: verify by scan\n";
  }
  for (const auto& f : c.primal_witnesses) out << "primal witness: " << f.to_string('x') << "\n";
  for (const auto& f : c.dual_witnesses) out << "dual witness: " << f.to_string() << "\n";
  return out.str();
}

int run(int argc, char** argv) {
  if (const char* threads = std::getenv("WLP_THREADS")) {
    const int t = std::atoi(threads);
    if (t > 0) omp_set_num_threads(t);
  }

  CLI::App app{"Weak Lefschetz property of artinian monomial algebras"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--policy", g.policy, "rank policy")
      ->check(CLI::IsMember({"auto", "fast", "certified"}))
      ->capture_default_str();
  app.add_option("--seed", g.seed, "seed for the fast policy")->capture_default_str();
  app.add_option("--format", g.format, "output format")
      ->check(CLI::IsMember({"human", "json"}))
      ->capture_default_str();
  app.add_option("--out", g.out, "write output to this file");

  int vars = 0;
  std::string ideal_text;
  int n = 0, d = 0, degree = 0;

  auto* hilbert = app.add_subcommand("hilbert", "Hilbert series of S/I");
  hilbert->add_option("ideal", ideal_text, "generators, e.g. \"x1^2,x2^2,x1*x2\"")->required();
  hilbert->add_option("--vars", vars, "number of variables (default: largest index)");

  auto* wlp_cmd = app.add_subcommand("wlp", "decide the WLP of S/I");
  wlp_cmd->add_option("ideal", ideal_text)->required();
  wlp_cmd->add_option("--vars", vars, "number of variables");

  auto* construct = app.add_subcommand("construct", "failing ideal with mu generators, or a named family");
  std::string family;
  std::vector<int> params;
  bool check = false;
  construct->add_option("params", params, "n d mu, or the family's parameters with --family");
  construct->add_option("--family", family, "family tag");
  construct->add_flag("--check", check, "also decide the WLP of the result");
  bool list_families = false;
  construct->add_flag("--list", list_families, "list family tags and their parameters");

  auto* sigma_cmd = app.add_subcommand("sigma", "generator counts admitting a failing ideal");
  sigma_cmd->add_option("n", n)->required();
  sigma_cmd->add_option("d", d)->required();

  auto* kernel = app.add_subcommand("inverse-kernel", "kernel of l acting on the inverse system in one degree");
  kernel->add_option("ideal", ideal_text)->required();
  kernel->add_option("degree", degree)->required();
  kernel->add_option("--vars", vars, "number of variables");
  bool dump_basis = false;
  kernel->add_flag("--basis", dump_basis, "print a basis");

  auto* witness = app.add_subcommand("witness", "dual witnesses of a catalog family and their membership");
  std::string witness_family;
  witness->add_option("family", witness_family, "catalog family name")->required();
  witness->add_option("n", n)->required();
  witness->add_option("d", d)->required();

  auto* verify = app.add_subcommand("verify", "existence and sharpness campaign");
  std::string pairs_text;
  VerifyOptions vopts;
  bool no_timing = false;
  verify->add_option("--pairs", pairs_text, "e.g. \"(3,3),(4,2)\"; default set when omitted");
  verify->add_option("--orbit-cap", vopts.orbit_cap, "skip when more orbits than this")->capture_default_str();
  verify->add_flag("--no-timing", no_timing, "report elapsed_ms as 0");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  const RankOptions ropts = rank_options(g);
  const bool as_json = g.format == "json";

  if (*hilbert) {
    const MonomialIdeal ideal = read_ideal(ideal_text, vars);
    const HilbertTable t = hilbert_table(ideal);
    if (as_json) {
      emit_json(g, {{"ideal", format_ideal(ideal)}, {"hilbert", table_json(t)}, {"series", hilbert_series_string(t)}});
    } else {
      emit(g, hilbert_series_string(t) + "\n");
    }
  } else if (*wlp_cmd) {
    const WlpReport r = wlp_report(read_ideal(ideal_text, vars), ropts);
    if (as_json) {
      emit_json(g, report_json(r));
    } else {
      emit(g, report_text(r));
    }
  } else if (*construct) {
    if (list_families) {
      std::string text;
      for (const auto& tag : family_tags()) text += tag + " " + family_usage(tag) + "\n";
      emit(g, text);
      return 0;
    }
    Construction c;
    if (!family.empty()) {
      c = construct_family(family, params);
    } else {
      if (params.size() != 3) throw UsageError("construct takes n d mu (or --family TAG params...)");
      c = construct_failing_ideal(params[0], params[1], params[2]);
    }
    json j = construction_json(c);
    std::string text = construction_text(c);
    if (check) {
      const WlpReport r = wlp_report(c.ideal, ropts);
      j["report"] = report_json(r);
      text += verdict_line(r) + "\n";
    }
    emit(g, as_json ? j.dump(2) + "\n" : text);
  } else if (*sigma_cmd) {
    const IntegerSet s = sigma(n, d);
    if (as_json) {
      emit_json(g, {{"n", n}, {"d", d}, {"alpha", s.lo}, {"beta", s.hi}, {"exclusions", s.exclusions},
                    {"sigma", s.to_string()}, {"elements", s.elements()}});
    } else {
      emit(g, s.to_string() + "\n");
    }
  } else if (*kernel) {
    const MonomialIdeal ideal = read_ideal(ideal_text, vars);
    const auto basis = inverse_kernel_basis(ideal, degree);
    json j = {{"ideal", format_ideal(ideal)}, {"degree", degree}, {"dimension", basis.size()}};
    std::string text = "kernel dimension " + std::to_string(basis.size()) + "\n";
    if (dump_basis) {
      j["basis"] = json::array();
      for (const auto& f : basis) {
        j["basis"].push_back(f.to_string());
        text += f.to_string() + "\n";
      }
    }
    emit(g, as_json ? j.dump(2) + "\n" : text);
  } else if (*witness) {
    const auto catalog = dual_witness_catalog();
    auto it = std::find_if(catalog.begin(), catalog.end(), [&](const auto& f) { return f.name == witness_family; });
    if (it == catalog.end()) {
      std::string names;
      for (const auto& f : catalog) names += " " + f.name;
      throw UsageError("unknown witness family '" + witness_family + "'; known:" + names);
    }
    if (std::find(it->grid.begin(), it->grid.end(), std::make_pair(n, d)) == it->grid.end()) {
      throw DomainError("(n,d) = (" + std::to_string(n) + "," + std::to_string(d) + ") is outside the range of " +
                        it->name);
    }
    const Construction c = it->build(n, d);
    json j = {{"family", it->name}, {"formula", it->formula}, {"ideal", format_ideal(c.ideal)}};
    j["witnesses"] = json::array();
    std::string text = "ideal: " + format_ideal(c.ideal) + "\n";
    bool all = true;
    for (const auto& f : c.dual_witnesses) {
      const bool ok = in_inverse_system(c.ideal, f, true);
      all = all && ok;
      j["witnesses"].push_back({{"polynomial", f.to_string()}, {"degree", f.degree()}, {"in_inverse_system", ok}});
      text += f.to_string() + "\n  " + (ok ? "in" : "NOT in") + " the inverse system of I + (l)\n";
    }
    emit(g, as_json ? j.dump(2) + "\n" : text);
    return all ? 0 : kExitDiscrepancy;
  } else if (*verify) {
    vopts.rank = ropts;
    vopts.timing = !no_timing;
    const auto pairs = pairs_text.empty() ? default_campaign_pairs() : parse_pairs(pairs_text);
    const auto reports = run_campaign(pairs, vopts);
    std::int64_t discrepancies = 0;
    for (const auto& r : reports) discrepancies += r.count(Outcome::Discrepancy);
    if (as_json || !g.out.empty()) {
      emit_json(g, to_json(reports));
    }
    if (!as_json) {
      std::ostringstream out;
      for (const auto& r : reports) {
        out << "(" << r.n << "," << r.d << ") sigma " << sigma(r.n, r.d).to_string() << ": "
            << r.count(Outcome::ConstructedAndFailed) << " constructed, " << r.count(Outcome::AllOrbitsHaveWLP)
            << " sharp, " << r.count(Outcome::Skipped) << " skipped, " << r.count(Outcome::Discrepancy)
            << " discrepancies\n";
        for (const auto& e : r.entries) {
          if (e.outcome == Outcome::Skipped || e.outcome == Outcome::Discrepancy) {
            out << "  mu=" << e.mu << " " << to_string(e.outcome) << ": " << e.detail << "\n";
          }
        }
      }
      std::cout << out.str();
    }
    return discrepancies == 0 ? 0 : kExitDiscrepancy;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    std::cerr << "parse error at position " << e.position() << ": " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  }
}

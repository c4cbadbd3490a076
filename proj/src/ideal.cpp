#include "wlp/ideal.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace wlp {

namespace {

void check_generators(int num_vars, const std::vector<Monomial>& generators) {
  if (num_vars < 1 || num_vars > kMaxVariables) {
    throw std::invalid_argument("ideal: variable count must lie in [1, " + std::to_string(kMaxVariables) + "]");
  }
  if (generators.empty()) throw std::invalid_argument("ideal: empty generator list");
  for (const auto& g : generators) {
    if (g.num_vars() != num_vars) throw std::invalid_argument("ideal: generator in the wrong ring");
    if (g.degree() == 0) throw std::invalid_argument("ideal: unit ideal is not supported");
  }
}

}  // namespace

MonomialIdeal MonomialIdeal::equigenerated(int num_vars, std::vector<Monomial> generators) {
  check_generators(num_vars, generators);
  const int d = generators.front().degree();
  for (const auto& g : generators) {
    if (g.degree() != d) {
      throw std::invalid_argument("ideal: mixed generator degrees " + std::to_string(d) + " and " +
                                  std::to_string(g.degree()));
    }
  }
  std::sort(generators.begin(), generators.end(), CanonicalOrder{});
  if (std::adjacent_find(generators.begin(), generators.end()) != generators.end()) {
    throw std::invalid_argument("ideal: duplicate generator");
  }
  MonomialIdeal ideal;
  ideal.n_ = num_vars;
  ideal.degree_ = d;
  ideal.generators_ = std::move(generators);
  return ideal;
}

MonomialIdeal MonomialIdeal::general(int num_vars, std::vector<Monomial> generators) {
  check_generators(num_vars, generators);
  std::sort(generators.begin(), generators.end(), CanonicalOrder{});
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
  // Canonical order is degree-descending; a divisor has degree <= its multiple.
  std::vector<Monomial> minimal;
  for (std::size_t i = 0; i < generators.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < generators.size() && !redundant; ++j) {
      redundant = j != i && generators[j].degree() < generators[i].degree() &&
                  generators[j].divides(generators[i]);
    }
    if (!redundant) minimal.push_back(generators[i]);
  }
  MonomialIdeal ideal;
  ideal.n_ = num_vars;
  ideal.generators_ = std::move(minimal);
  const int d = ideal.generators_.front().degree();
  const bool same = std::all_of(ideal.generators_.begin(), ideal.generators_.end(),
                                [d](const Monomial& g) { return g.degree() == d; });
  if (same) ideal.degree_ = d;
  return ideal;
}

int MonomialIdeal::degree() const {
  if (!degree_) throw std::logic_error("ideal: not equigenerated");
  return *degree_;
}

bool MonomialIdeal::contains(const Monomial& m) const {
  return std::any_of(generators_.begin(), generators_.end(), [&](const Monomial& g) { return g.divides(m); });
}

std::vector<std::optional<int>> MonomialIdeal::exponent_bounds() const {
  std::vector<std::optional<int>> bounds(static_cast<std::size_t>(n_));
  for (const auto& g : generators_) {
    if (auto i = g.pure_power_index()) {
      auto& b = bounds[static_cast<std::size_t>(*i)];
      const int cand = g.degree() - 1;
      if (!b || cand < *b) b = cand;
    }
  }
  return bounds;
}

bool MonomialIdeal::is_artinian() const {
  const auto bounds = exponent_bounds();
  return std::all_of(bounds.begin(), bounds.end(), [](const auto& b) { return b.has_value(); });
}

int MonomialIdeal::top_degree_bound() const {
  if (!is_artinian()) throw DomainError("ideal is not artinian");
  int total = 0;
  for (const auto& b : exponent_bounds()) total += *b;
  return total;
}

DegreeBasis quotient_basis(const MonomialIdeal& ideal, int degree) {
  DegreeBasis basis{degree, {}};
  if (degree < 0) return basis;
  std::vector<int> bounds;
  bounds.reserve(static_cast<std::size_t>(ideal.num_vars()));
  for (const auto& b : ideal.exponent_bounds()) bounds.push_back(b ? *b : degree);
  const auto& gens = ideal.generators();
  for_each_bounded_monomial(ideal.num_vars(), degree, bounds, [&](const Monomial& m) {
    for (const auto& g : gens) {
      if (g.divides(m)) return;
    }
    basis.monomials.push_back(m);
  });
  return basis;
}

MonomialIdeal permute_ideal(const MonomialIdeal& ideal, std::span<const int> sigma) {
  const int n = ideal.num_vars();
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  if (static_cast<int>(sigma.size()) != n) throw std::invalid_argument("permute_ideal: wrong permutation size");
  for (int s : sigma) {
    if (s < 0 || s >= n || seen[static_cast<std::size_t>(s)]) throw std::invalid_argument("permute_ideal: not a bijection");
    seen[static_cast<std::size_t>(s)] = true;
  }
  std::vector<Monomial> gens;
  gens.reserve(ideal.num_generators());
  for (const auto& g : ideal.generators()) gens.push_back(permute(g, sigma));
  return ideal.is_equigenerated() ? MonomialIdeal::equigenerated(n, std::move(gens))
                                  : MonomialIdeal::general(n, std::move(gens));
}

MonomialIdeal canonical_form(const MonomialIdeal& ideal) {
  const int n = ideal.num_vars();
  if (n > 8) throw DomainError("canonical_form: brute force over n! permutations refused for n > 8");
  std::vector<int> sigma(static_cast<std::size_t>(n));
  std::iota(sigma.begin(), sigma.end(), 0);
  std::vector<Monomial> best = ideal.generators();
  std::vector<Monomial> candidate(best.size(), Monomial(n));
  const CanonicalOrder before;
  while (std::next_permutation(sigma.begin(), sigma.end())) {
    for (std::size_t k = 0; k < best.size(); ++k) candidate[k] = permute(ideal.generators()[k], sigma);
    std::sort(candidate.begin(), candidate.end(), before);
    if (std::lexicographical_compare(candidate.begin(), candidate.end(), best.begin(), best.end(), before)) {
      best = candidate;
    }
  }
  return ideal.is_equigenerated() ? MonomialIdeal::equigenerated(n, std::move(best))
                                  : MonomialIdeal::general(n, std::move(best));
}

MonomialIdeal ideal_sum(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.num_vars() != b.num_vars()) throw std::invalid_argument("ideal_sum: rings differ");
  std::vector<Monomial> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return MonomialIdeal::general(a.num_vars(), std::move(gens));
}

MonomialIdeal colon(const MonomialIdeal& ideal, const Monomial& m) {
  std::vector<Monomial> gens;
  for (const auto& g : ideal.generators()) {
    // g / gcd(g, m)
    std::vector<int> e(static_cast<std::size_t>(ideal.num_vars()));
    for (int i = 0; i < ideal.num_vars(); ++i) e[static_cast<std::size_t>(i)] = std::max(0, g[i] - m[i]);
    gens.emplace_back(std::span<const int>(e));
  }
  for (const auto& g : gens) {
    if (g.degree() == 0) throw DomainError("colon: m lies in the ideal, colon is the unit ideal");
  }
  return MonomialIdeal::general(ideal.num_vars(), std::move(gens));
}

std::vector<Monomial> pure_powers(int num_vars, int degree) {
  std::vector<Monomial> out;
  for (int i = 0; i < num_vars; ++i) out.push_back(Monomial::pure_power(num_vars, i, degree));
  return out;
}

ParseError::ParseError(const std::string& message, std::size_t position)
    : std::invalid_argument(message + " at position " + std::to_string(position)), position_(position) {}

namespace {

class IdealParser {
 public:
  explicit IdealParser(const std::string& text) : text_(text) {}

  struct Term {
    std::vector<std::pair<int, int>> factors;  // (variable index 0-based, exponent)
    std::size_t position;
  };

  std::vector<Term> parse() {
    std::vector<Term> terms;
    skip_space();
    if (pos_ == text_.size()) throw ParseError("empty ideal", pos_);
    while (true) {
      terms.push_back(parse_term());
      skip_space();
      if (pos_ == text_.size()) break;
      if (text_[pos_] != ',') throw ParseError("expected ','", pos_);
      ++pos_;
    }
    return terms;
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  int parse_int() {
    skip_space();
    const std::size_t start = pos_;
    long value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + (text_[pos_] - '0');
      if (value > 1'000'000) throw ParseError("number too large", start);
      ++pos_;
    }
    if (pos_ == start) throw ParseError("expected a number", start);
    return static_cast<int>(value);
  }

  Term parse_term() {
    skip_space();
    Term term{{}, pos_};
    while (true) {
      skip_space();
      const std::size_t at = pos_;
      if (pos_ >= text_.size() || (text_[pos_] != 'x' && text_[pos_] != 'X')) {
        throw ParseError("expected a variable like x1", at);
      }
      ++pos_;
      const int index = parse_int();
      if (index < 1) throw ParseError("variable indices start at 1", at);
      int exponent = 1;
      skip_space();
      if (pos_ < text_.size() && text_[pos_] == '^') {
        ++pos_;
        exponent = parse_int();
      }
      term.factors.emplace_back(index - 1, exponent);
      skip_space();
      if (pos_ < text_.size() && text_[pos_] == '*') {
        ++pos_;
        continue;
      }
      return term;
    }
  }

  const std::string& text_;
  std::size_t pos_ = 0;
};

}  // namespace

MonomialIdeal parse_ideal(const std::string& text, std::optional<int> num_vars) {
  IdealParser parser(text);
  const auto terms = parser.parse();
  int n = 0;
  for (const auto& t : terms) {
    for (const auto& [var, e] : t.factors) n = std::max(n, var + 1);
  }
  if (num_vars) {
    if (*num_vars < n) throw ParseError("variable x" + std::to_string(n) + " exceeds ring size", 0);
    n = *num_vars;
  }
  if (n > kMaxVariables) throw ParseError("too many variables", 0);
  std::vector<Monomial> gens;
  std::optional<int> degree;
  for (const auto& t : terms) {
    std::vector<int> e(static_cast<std::size_t>(n), 0);
    for (const auto& [var, exp] : t.factors) e[static_cast<std::size_t>(var)] += exp;
    Monomial m{std::span<const int>(e)};
    if (m.degree() == 0) throw ParseError("constant generator", t.position);
    if (degree && *degree != m.degree()) {
      throw ParseError("mixed degrees: generator of degree " + std::to_string(m.degree()) +
                           " in an ideal of degree " + std::to_string(*degree),
                       t.position);
    }
    degree = m.degree();
    if (std::find(gens.begin(), gens.end(), m) != gens.end()) throw ParseError("duplicate generator", t.position);
    gens.push_back(m);
  }
  return MonomialIdeal::equigenerated(n, std::move(gens));
}

std::string format_ideal(const MonomialIdeal& ideal) {
  std::string out;
  for (const auto& g : ideal.generators()) {
    if (!out.empty()) out += ',';
    out += to_string(g);
  }
  return out;
}

}  // namespace wlp

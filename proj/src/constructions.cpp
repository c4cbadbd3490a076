#include "wlp/constructions.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

#include "wlp/hilbert.hpp"
#include "wlp/inverse.hpp"

namespace wlp {

namespace {

std::string args(std::initializer_list<std::int64_t> values) {
  std::string out = "(";
  for (auto v : values) {
    if (out.size() > 1) out += ',';
    out += std::to_string(v);
  }
  return out + ")";
}

Monomial mono(int n, std::initializer_list<std::pair<int, int>> factors) {
  std::vector<int> e(static_cast<std::size_t>(n), 0);
  for (const auto& [var, exp] : factors) e.at(static_cast<std::size_t>(var)) += exp;
  return Monomial(std::span<const int>(e));
}

Polynomial var(int n, int i) { return Polynomial::variable(n, i); }
Polynomial diff(int n, int i, int j) { return Polynomial::difference(n, i, j); }

Polynomial vandermonde(int n, const std::vector<int>& idx) {
  Polynomial v = Polynomial::constant(n, 1);
  for (std::size_t a = 0; a < idx.size(); ++a) {
    for (std::size_t b = a + 1; b < idx.size(); ++b) v = v * diff(n, idx[a], idx[b]);
  }
  return v;
}

std::vector<int> range(int lo, int hi) {
  std::vector<int> out;
  for (int i = lo; i < hi; ++i) out.push_back(i);
  return out;
}

// sum_{t=0}^{k} (-1)^t x_i^{k-t} x_j^t, the quotient (x_i^{k+1} + (-1)^k x_j^{k+1}) / (x_i + x_j).
Polynomial alternating_sum(int n, int i, int j, int k) {
  Polynomial p(n);
  for (int t = 0; t <= k; ++t) {
    p += Polynomial::term(mono(n, {{i, k - t}, {j, t}}), t % 2 == 0 ? 1 : -1);
  }
  return p;
}

Construction make(const std::string& family, int n, int d, std::vector<Monomial> gens, std::vector<int> params,
                  std::string description) {
  Construction c;
  c.family = family;
  c.n = n;
  c.d = d;
  c.ideal = MonomialIdeal::equigenerated(n, std::move(gens));
  c.mu = static_cast<std::int64_t>(c.ideal.num_generators());
  c.params = std::move(params);
  c.description = std::move(description);
  std::string step = family + "(";
  for (std::size_t k = 0; k < c.params.size(); ++k) {
    if (k) step += ',';
    step += std::to_string(c.params[k]);
  }
  c.derivation.push_back(step + ")");
  return c;
}

void expect(Construction& c, int degree, std::optional<FailureMode> mode = std::nullopt) {
  c.expected = ExpectedFailure{degree, mode};
}

void require(bool ok, const std::string& message) {
  if (!ok) throw DomainError(message);
}

// x1^2+x2^2+x3^2-x1x2-x1x3-x2x3: l times it is x1^3+x2^3+x3^3-3x1x2x3.
Polynomial togliatti_kernel_element() {
  const int n = 3;
  Polynomial q(n);
  for (int i = 0; i < 3; ++i) q += Polynomial::term(mono(n, {{i, 2}}));
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) q -= Polynomial::term(mono(n, {{i, 1}, {j, 1}}));
  }
  return q;
}

Construction togliatti(const std::string& family, std::vector<int> params) {
  auto gens = pure_powers(3, 3);
  gens.push_back(mono(3, {{0, 1}, {1, 1}, {2, 1}}));
  Construction c = make(family, 3, 3, std::move(gens), std::move(params), "Togliatti system (x1^3,x2^3,x3^3,x1*x2*x3)");
  expect(c, 2, FailureMode::Injectivity);
  c.primal_witnesses.push_back(togliatti_kernel_element());
  c.dual_witnesses.push_back(vandermonde(3, {0, 1, 2}));
  return c;
}

Construction lift_times(Construction c, int times) {
  for (int k = 0; k < times; ++k) c = extend_by_ci_square(c);
  return c;
}

}  // namespace

Construction injectivity_ideal(int n, int d) {
  require(n >= 3 && d >= 2, "injectivity family needs n >= 3, d >= 2");
  require(!(n == 3 && d == 2), "WLP forced for (n,d) = (3,2)");
  if (n == 3 && d == 3) {
    Construction c = togliatti(kInjectivity, {3, 3});
    c.expected->mode = FailureMode::Injectivity;
    return c;
  }
  if (n == 4 && d == 2) {
    auto gens = pure_powers(4, 2);
    gens.push_back(mono(4, {{0, 1}, {1, 1}}));
    gens.push_back(mono(4, {{2, 1}, {3, 1}}));
    Construction c = make(kInjectivity, 4, 2, std::move(gens), {4, 2}, "exceptional quadratic injectivity ideal");
    expect(c, 1, FailureMode::Injectivity);
    // l * (x1+x2-x3-x4) = (x1+x2)^2 - (x3+x4)^2
    c.primal_witnesses.push_back(var(4, 0) + var(4, 1) - var(4, 2) - var(4, 3));
    c.dual_witnesses.push_back(diff(4, 0, 1) * diff(4, 2, 3));
    return c;
  }
  auto gens = pure_powers(n, d);
  for (int i = 0; i + 1 < n; ++i) gens.push_back(mono(n, {{i, 1}, {n - 1, d - 1}}));
  Construction c = make(kInjectivity, n, d, std::move(gens), {n, d}, "pure powers plus x_i*x_n^(d-1) for i < n");
  expect(c, d - 1, FailureMode::Injectivity);
  c.primal_witnesses.push_back(Polynomial::term(Monomial::pure_power(n, n - 1, d - 1)));
  return c;
}

Construction injectivity_augmented(int n, int d, std::int64_t mu) {
  const std::int64_t lo = nu(n, d);
  const std::int64_t hi = delta(n, d);
  require(mu >= lo && mu <= hi, "injectivity-augmented needs mu in [" + std::to_string(lo) + "," +
                                    std::to_string(hi) + "] for (n,d) = " + args({n, d}));
  Construction base = injectivity_ideal(n, d);
  auto gens = base.ideal.generators();
  std::int64_t missing = mu - static_cast<std::int64_t>(gens.size());
  for (const auto& m : enumerate_monomials(n, d)) {
    if (missing == 0) break;
    if (base.ideal.contains(m)) continue;
    gens.push_back(m);
    --missing;
  }
  Construction c = make(kInjectivityAugmented, n, d, std::move(gens), {n, d, static_cast<int>(mu)},
                        "injectivity ideal plus " + std::to_string(mu - lo) +
                            " earliest missing monomials in canonical order");
  c.expected = base.expected;
  // The kernel element survives: the ideal only grew, and it has degree d-1.
  c.primal_witnesses = base.primal_witnesses;
  c.derivation.insert(c.derivation.begin(), base.derivation.begin(), base.derivation.end());
  return c;
}

namespace {

Polynomial surjectivity_form(int n, int d) {
  if (n == 3) return diff(3, 0, 1) * diff(3, 0, 2) * diff(3, 1, 2).pow(d - 2);
  return diff(n, 0, 1) * diff(n, 2, 3).pow(d - 1);
}

}  // namespace

Construction surjectivity_ideal(int n, int d) {
  require(n >= 3 && d >= 2, "surjectivity family needs n >= 3, d >= 2");
  require(!(n == 3 && d == 2), "surjectivity family is undefined for (n,d) = (3,2)");
  const Polynomial f = surjectivity_form(n, d);
  std::vector<Monomial> gens;
  for (const auto& m : enumerate_monomials(n, d)) {
    if (f.differentiate(m).is_zero()) gens.push_back(m);
  }
  Construction c = make(kSurjectivity, n, d, std::move(gens), {n, d},
                        n == 3 ? "annihilator of (X1-X2)(X1-X3)(X2-X3)^(d-2) in degree d"
                               : "annihilator of (X1-X2)(X3-X4)^(d-1) in degree d");
  expect(c, d - 1, FailureMode::Surjectivity);
  c.dual_witnesses.push_back(f);
  return c;
}

Construction surjectivity_subset(int n, int d, std::int64_t mu) {
  Construction base = surjectivity_ideal(n, d);
  const std::int64_t lo = delta(n, d);
  const std::int64_t hi = base.mu;
  require(mu >= lo && mu <= hi, "surjectivity-subset needs mu in [" + std::to_string(lo) + "," +
                                    std::to_string(hi) + "] for (n,d) = " + args({n, d}));
  std::int64_t drop = hi - mu;
  std::vector<Monomial> gens;
  for (const auto& g : base.ideal.generators()) {
    if (drop > 0 && !g.pure_power_index()) {
      --drop;
      continue;
    }
    gens.push_back(g);
  }
  Construction c = make(kSurjectivitySubset, n, d, std::move(gens), {n, d, static_cast<int>(mu)},
                        "surjectivity ideal minus its " + std::to_string(hi - mu) +
                            " earliest non-pure-power generators in canonical order");
  c.expected = base.expected;
  // Fewer generators only enlarge the inverse system.
  c.dual_witnesses = base.dual_witnesses;
  c.derivation.insert(c.derivation.begin(), base.derivation.begin(), base.derivation.end());
  return c;
}

MonomialIdeal tensor_ideal(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (!a.is_equigenerated() || !b.is_equigenerated() || a.degree() != b.degree()) {
    throw std::invalid_argument("tensor_ideal: both ideals must be generated in one common degree");
  }
  const int n = a.num_vars() + b.num_vars();
  std::vector<Monomial> gens;
  for (const auto& g : a.generators()) gens.push_back(g.embedded(n, 0));
  for (const auto& g : b.generators()) gens.push_back(g.embedded(n, a.num_vars()));
  return MonomialIdeal::equigenerated(n, std::move(gens));
}

MonomialIdeal extend_by_ci_square(const MonomialIdeal& ideal) {
  const int d = ideal.degree();
  return tensor_ideal(ideal, MonomialIdeal::equigenerated(2, pure_powers(2, d)));
}

Construction extend_by_ci_square(const Construction& base) {
  const int n = base.n + 2;
  const int d = base.d;
  Construction c;
  c.family = kCiSquareLift;
  c.n = n;
  c.d = d;
  c.ideal = extend_by_ci_square(base.ideal);
  c.mu = static_cast<std::int64_t>(c.ideal.num_generators());
  c.params = {base.n, base.d, static_cast<int>(base.mu)};
  c.description = base.description + ", tensored with k[y1,y2]/(y1^" + std::to_string(d) + ",y2^" +
                  std::to_string(d) + ")";
  c.derivation = base.derivation;
  c.derivation.push_back("ci-square-lift to n=" + std::to_string(n) + ", mu=" + std::to_string(c.mu));
  if (base.expected) c.expected = ExpectedFailure{base.expected->degree + d - 1, std::nullopt};
  const Polynomial g = alternating_sum(n, n - 2, n - 1, d - 1);
  for (const auto& f : base.primal_witnesses) c.primal_witnesses.push_back(f.embedded(n) * g);
  const Polynomial y = diff(n, n - 2, n - 1).pow(d - 1);
  for (const auto& f : base.dual_witnesses) c.dual_witnesses.push_back(f.embedded(n) * y);
  return c;
}

Construction tensor_with_peak(const Construction& base, const MonomialIdeal& peak_factor) {
  const HilbertTable table = hilbert_table(peak_factor);
  const auto peaks = isolated_peaks(table);
  require(!peaks.empty(), "tensor_with_peak: second factor has no isolated peak");
  const int j = peaks.front();
  Construction c;
  c.family = base.family;
  c.n = base.n + peak_factor.num_vars();
  c.d = base.d;
  c.ideal = tensor_ideal(base.ideal, peak_factor);
  c.mu = static_cast<std::int64_t>(c.ideal.num_generators());
  c.params = base.params;
  c.description = base.description + ", tensored with " + format_ideal(peak_factor) + " (isolated peak in degree " +
                  std::to_string(j) + ")";
  c.derivation = base.derivation;
  c.derivation.push_back("tensor with a " + std::to_string(peak_factor.num_vars()) + "-variable peak algebra");
  if (base.expected) c.expected = ExpectedFailure{base.expected->degree + j, std::nullopt};
  const auto g = primal_kernel_basis(peak_factor, j);
  const auto big_g = inverse_kernel_basis(peak_factor, j);
  const int shift = base.n;
  if (!g.empty()) {
    for (const auto& f : base.primal_witnesses) c.primal_witnesses.push_back(f.embedded(c.n) * g.front().embedded(c.n, shift));
  }
  if (!big_g.empty()) {
    for (const auto& f : base.dual_witnesses) {
      c.dual_witnesses.push_back(f.embedded(c.n) * big_g.front().embedded(c.n, shift));
    }
  }
  return c;
}

Construction product_aci(int n) {
  require(n >= 3, "product-aci needs n >= 3");
  if (n == 3) {
    Construction c = togliatti(kProductAci, {3});
    c.expected->mode = FailureMode::Surjectivity;
    return c;
  }
  auto gens = pure_powers(n, n);
  std::vector<int> e(static_cast<std::size_t>(n), 1);
  gens.emplace_back(std::span<const int>(e));
  Construction c = make(kProductAci, n, n, std::move(gens), {n}, "pure powers x_i^n plus x1*...*xn");
  expect(c, static_cast<int>(binomial(n, 2)) - 1, FailureMode::Surjectivity);
  c.dual_witnesses.push_back(vandermonde(n, range(0, n)));
  return c;
}

Construction split_aci_four(int d) {
  require(d >= 5, "split-aci with n = 4 needs d >= 5");
  auto gens = pure_powers(4, d);
  gens.push_back(mono(4, {{0, 3}, {1, d - 3}}));
  Construction c = make(kSplitAci, 4, d, std::move(gens), {4, d}, "pure powers plus x1^3*x2^(d-3)");
  expect(c, 2 * d - 3, FailureMode::Surjectivity);
  c.dual_witnesses.push_back(diff(4, 0, 1).pow(d - 1) * diff(4, 2, 3).pow(d - 1));
  return c;
}

Construction split_aci_five(int d) {
  require(d >= 5, "split-aci with n = 5 needs d >= 5");
  const int hi = (d + 1) / 2;
  const int lo = d / 2;
  auto gens = pure_powers(5, d);
  gens.push_back(mono(5, {{0, hi}, {1, lo}}));
  Construction c = make(kSplitAci, 5, d, std::move(gens), {5, d}, "pure powers plus x1^ceil(d/2)*x2^floor(d/2)");
  expect(c, (5 * d - 5) / 2 - 1);
  if (d == 6) {
    const int n = 5;
    const Polynomial g = diff(n, 3, 4).pow(2) * diff(n, 2, 4).pow(2) * diff(n, 2, 3).pow(2) * diff(n, 0, 1).pow(4);
    c.dual_witnesses.push_back(diff(n, 2, 4) * diff(n, 0, 3) * g);
    c.dual_witnesses.push_back(diff(n, 2, 4) * diff(n, 1, 3) * g);
    c.dual_witnesses.push_back(diff(n, 3, 4) * diff(n, 0, 2) * g);
    c.dual_witnesses.push_back(diff(n, 3, 4) * diff(n, 1, 2) * g);
  } else {
    // Kernel element g of the three-variable map in degree floor((3d-3)/2)-1
    // times the degree d-1 kernel element of k[x4,x5]/(x4^d,x5^d).
    auto small = pure_powers(3, d);
    small.push_back(mono(3, {{0, hi}, {1, lo}}));
    const auto kernel = primal_kernel_basis(MonomialIdeal::equigenerated(3, small), (3 * d - 3) / 2 - 1);
    if (!kernel.empty()) c.primal_witnesses.push_back(kernel.front().embedded(5) * alternating_sum(5, 3, 4, d - 1));
  }
  return c;
}

Construction quartic_five() {
  const int n = 5;
  auto gens = pure_powers(n, 4);
  gens.push_back(mono(n, {{0, 1}, {1, 1}, {2, 1}, {3, 1}}));
  Construction c = make(kQuarticFive, n, 4, std::move(gens), {}, "pure powers x_i^4 plus x1*x2*x3*x4");
  expect(c, 6, FailureMode::Injectivity);
  auto X = [&](int i) { return var(n, i - 1); };
  auto D = [&](int i, int j) { return diff(n, i - 1, j - 1); };
  auto k = [&](long v) { return Polynomial::constant(n, v); };
  const Polynomial f = D(4, 5).pow(2) * D(2, 3) * D(1, 3) * D(1, 2) *
                       (D(5, 3) * D(4, 2) + D(5, 2) * D(4, 1) + D(5, 1) * D(4, 3));
  const Polynomial h1 =
      D(2, 5) * D(1, 5) *
      (D(4, 5).pow(2) * (k(3) * X(1) + k(3) * X(2) - k(4) * X(4) - k(2) * X(5)) +
       D(3, 4) * (X(3) + k(2) * X(4) - k(3) * X(5)) * (X(1) + X(2) - k(2) * X(4)));
  const Polynomial h2 =
      D(4, 5) * D(3, 5) *
      (k(2) * (k(2) * D(2, 5).pow(2) + D(1, 2) * (X(1) + X(2) - k(2) * X(5))) * D(3, 5) +
       D(4, 5) * (k(2) * D(2, 5) * (k(2) * X(2) - k(3) * X(3) + X(5)) +
                  D(1, 2) * (k(2) * X(1) + k(2) * X(2) - k(3) * X(3) - X(5))));
  const Polynomial g = D(1, 2) * D(3, 4) * (h1 - h2);
  c.dual_witnesses = {f, f.swapped(0, 3), f.swapped(1, 3), g, g.swapped(1, 2)};
  return c;
}

Construction togliatti_cube() {
  Construction base = togliatti(kTogliattiCube, {});
  Construction c = tensor_with_peak(base, MonomialIdeal::equigenerated(3, pure_powers(3, 3)));
  c.family = kTogliattiCube;
  c.description = "pure powers x_i^3 plus x1*x2*x3 in six variables";
  return c;
}

Construction even_aci(int n, int d) {
  require(n >= 4 && n % 2 == 0, "even-aci needs an even n >= 4");
  require(d >= 3, "even-aci needs d >= 3");
  const int m = n / 2;
  Construction c;
  if (d >= 5) {
    c = lift_times(split_aci_four(d), m - 2);
  } else if (d == 4) {
    c = lift_times(product_aci(4), m - 2);
  } else {
    require(n >= 6, "even-aci with d = 3 needs n >= 6");
    c = lift_times(togliatti_cube(), m - 3);
  }
  c.family = kEvenAci;
  c.params = {n, d};
  if (n > (d == 3 ? 6 : 4)) c.expected->mode.reset();
  return c;
}

Construction odd_aci(int n, int d) {
  require(n >= 3 && n % 2 == 1, "odd-aci needs an odd n >= 3");
  require(d >= 3, "odd-aci needs d >= 3");
  require(n >= 5 || d == 3, "odd-aci with n = 3 only exists for d = 3");
  const int m = n / 2;
  Construction c;
  if (d >= 5) {
    c = lift_times(split_aci_five(d), m - 2);
  } else if (d == 4) {
    c = lift_times(quartic_five(), m - 2);
  } else {
    c = lift_times(togliatti(kOddAci, {3, 3}), m - 1);
  }
  c.family = kOddAci;
  c.params = {n, d};
  return c;
}

Construction ternary_aci(int d, int a, int b, int c) {
  require(d >= 3 && d % 6 == 3, "ternary-aci needs d = 6k+3");
  const int k = (d - 3) / 6;
  require(a + b + c == d, "ternary-aci needs a+b+c = d");
  require(4 * k + 2 > a && a >= b && b >= c && c >= 0, "ternary-aci needs 4k+2 > a >= b >= c >= 0");
  require(a == b || b == c, "ternary-aci needs two equal exponents");
  auto gens = pure_powers(3, d);
  gens.push_back(mono(3, {{0, a}, {1, b}, {2, c}}));
  return make(kTernaryAci, 3, d, std::move(gens), {d, a, b, c}, "pure powers plus x1^a*x2^b*x3^c");
}

Construction ternary_aci(int d) {
  const int e = d / 3;
  return ternary_aci(d, e, e, e);
}

bool quadratic_blocks_fail(int a, int b, int c) {
  const int nontrivial = a + b;
  const int components = a + b + c;
  return nontrivial >= 3 || (nontrivial == 2 && components % 2 == 0);
}

Construction quadratic_blocks(int a, int b, int c) {
  require(a >= 0 && b >= 0 && c >= 0, "quadratic-blocks needs non-negative block counts");
  require(quadratic_blocks_fail(a, b, c), "this block pattern has the WLP");
  const int n = 3 * a + 2 * b + c;
  std::vector<Monomial> gens;
  int next = 0;
  auto block = [&](int size) {
    for (int i = next; i < next + size; ++i) {
      for (int j = i; j < next + size; ++j) gens.push_back(mono(n, {{i, 1}, {j, 1}}));
    }
    next += size;
  };
  for (int k = 0; k < a; ++k) block(3);
  for (int k = 0; k < b; ++k) block(2);
  for (int k = 0; k < c; ++k) block(1);
  return make(kQuadraticBlocks, n, 2, std::move(gens), {a, b, c},
              "squares of the maximal ideals of " + std::to_string(a) + " three-variable, " + std::to_string(b) +
                  " two-variable and " + std::to_string(c) + " one-variable blocks");
}

Construction quadratic_blocks_for(int n, std::int64_t mu) {
  const std::int64_t excess = mu - n;
  std::vector<std::pair<int, int>> candidates;
  if (n % 2 == 0 && excess >= 2 && excess <= n / 2) candidates.emplace_back(0, static_cast<int>(excess));
  if (n % 2 == 0 && excess >= n / 2 + 1 && excess <= n - 2) {
    const int i = static_cast<int>(excess) - n / 2;
    candidates.emplace_back(i, n / 2 - 2 * i);
  }
  for (int a = 0; 3 * a <= n; ++a) {
    const std::int64_t b = excess - 3 * a;
    if (b >= 0 && 3 * a + 2 * b <= n) candidates.emplace_back(a, static_cast<int>(b));
  }
  for (const auto& [a, b] : candidates) {
    const int c = n - 3 * a - 2 * b;
    if (a >= 0 && b >= 0 && c >= 0 && quadratic_blocks_fail(a, b, c)) return quadratic_blocks(a, b, c);
  }
  throw DomainError("no failing quadratic block pattern with n = " + std::to_string(n) + ", mu = " +
                    std::to_string(mu));
}

Construction quadratic_seven() {
  const int n = 7;
  auto gens = pure_powers(n, 2);
  for (int i = 0; i < 4; ++i) gens.push_back(mono(n, {{i, 1}, {6, 1}}));
  return make(kQuadraticSeven, n, 2, std::move(gens), {}, "squares plus x1*x7, x2*x7, x3*x7, x4*x7");
}

Construction corner_star(int n, int d) {
  require((n >= 5 && d >= 4) || (n >= 6 && d >= 3) || (n >= 7 && d >= 2),
          "corner-star needs n >= 5, d >= 4 or n >= 6, d >= 3 or n >= 7, d >= 2");
  auto gens = pure_powers(n, d);
  for (int j = 1; j + 1 < n; ++j) gens.push_back(mono(n, {{0, d - 1}, {j, 1}}));
  Construction c = make(kCornerStar, n, d, std::move(gens), {n, d}, "pure powers plus x1^(d-1)*x_j for 1 < j < n");
  expect(c, 2 * d - 2);
  c.primal_witnesses.push_back(Polynomial::term(mono(n, {{0, d - 1}, {n - 1, d - 1}})));
  if (d >= 4) {
    c.dual_witnesses.push_back(diff(n, 0, 1) * diff(n, 0, 2) * diff(n, 1, 2).pow(d - 2) * diff(n, 3, 4).pow(d - 1));
  }
  if (n >= 6 && d >= 3) c.dual_witnesses.push_back(diff(n, 0, 5) * diff(n, 1, 2).pow(d - 1) * diff(n, 3, 4).pow(d - 1));
  if (n >= 7) c.dual_witnesses.push_back(diff(n, 1, 2) * diff(n, 3, 4).pow(d - 1) * diff(n, 5, 6).pow(d - 1));
  return c;
}

Construction two_corners(int d) {
  require(d >= 2, "two-corners needs d >= 2");
  const int n = 4;
  auto gens = pure_powers(n, d);
  gens.push_back(mono(n, {{0, d - 1}, {1, 1}}));
  gens.push_back(mono(n, {{2, d - 1}, {3, 1}}));
  Construction c = make(kTwoCorners, n, d, std::move(gens), {d}, "pure powers plus x1^(d-1)*x2 and x3^(d-1)*x4");
  expect(c, 2 * d - 3);
  auto h = [&](int a, int b) {
    Polynomial p(n);
    for (int i = 0; i <= d - 2; ++i) {
      const int sign = (d - 2 - i) % 2 == 0 ? 1 : -1;
      p += Polynomial::term(mono(n, {{a, i}, {b, d - 2 - i}}), sign * (i + 1));
    }
    return p;
  };
  c.primal_witnesses.push_back((var(n, 0) + var(n, 1) - var(n, 2) - var(n, 3)) * h(0, 1) * h(2, 3));
  c.dual_witnesses.push_back(diff(n, 0, 1).pow(d - 1) * diff(n, 2, 3).pow(d - 1));
  return c;
}

Construction cubic_five(bool with_product) {
  const int n = 5;
  auto gens = pure_powers(n, 3);
  gens.push_back(mono(n, {{0, 2}, {1, 1}}));
  gens.push_back(mono(n, {{0, 1}, {1, 2}}));
  if (with_product) gens.push_back(mono(n, {{2, 1}, {3, 1}, {4, 1}}));
  Construction c = make(kCubicFive, n, 3, std::move(gens), {with_product ? 1 : 0},
                        with_product ? "cubes plus x1^2*x2, x1*x2^2, x3*x4*x5" : "cubes plus x1^2*x2, x1*x2^2");
  expect(c, 4);
  // (x4^3+x5^3)/(x4+x5) * ((x1+x2)^3+x3^3)/((x1+x2)+x3)
  const Polynomial s = var(n, 0) + var(n, 1);
  const Polynomial x3 = var(n, 2);
  const Polynomial x4 = var(n, 3);
  const Polynomial x5 = var(n, 4);
  c.primal_witnesses.push_back((x4 * x4 - x4 * x5 + x5 * x5) * (s * s - s * x3 + x3 * x3));
  c.dual_witnesses.push_back(diff(n, 2, 3) * diff(n, 2, 4) * diff(n, 3, 4) * diff(n, 0, 1).pow(2));
  return c;
}

namespace {

Construction lift_from(int n, int d, std::int64_t mu);

Construction with_target(Construction c, int n, int d, std::int64_t mu) {
  if (c.n != n || c.d != d || c.mu != mu) {
    throw std::logic_error("dispatcher produced " + args({c.n, c.d, c.mu}) + " for " + args({n, d, mu}));
  }
  return c;
}

Construction dispatch(int n, int d, std::int64_t mu) {
  const IntegerSet s = sigma(n, d);
  if (!s.contains(mu)) {
    throw DomainError("mu = " + std::to_string(mu) + " is not in sigma" + args({n, d}) + " = " + s.to_string() +
                      ": every such ideal has the WLP or no such ideal exists");
  }
  const std::int64_t top = delta(n, d);
  if (mu > top) return surjectivity_subset(n, d, mu);
  if (n == 3) {
    if (mu == 4) return ternary_aci(d);
    return injectivity_augmented(n, d, mu);
  }
  if (mu == n + 1) return n % 2 == 0 ? even_aci(n, d) : odd_aci(n, d);
  if (d == 2) {
    if (n == 7 && mu == 11) return quadratic_seven();
    if (mu >= 2 * n - 1) return injectivity_augmented(n, d, mu);
    if (n % 2 == 0 || n == 7) return quadratic_blocks_for(n, mu);
    if (mu <= delta(n - 2, d) + 2) return lift_from(n, d, mu);
    return injectivity_augmented(n, d, mu);
  }
  if (n == 4) {
    if (mu == 6) return two_corners(d);
    return injectivity_augmented(n, d, mu);
  }
  if (n == 5) {
    if (d == 3 && mu == 7) return cubic_five(false);
    if (d == 3 && mu == 8) return cubic_five(true);
    if (mu == 7) {
      Construction base = injectivity_ideal(3, d);
      return extend_by_ci_square(base);
    }
    if (mu == 8) return corner_star(5, d);
    return injectivity_augmented(n, d, mu);
  }
  if (mu <= delta(n - 2, d) + 2) return lift_from(n, d, mu);
  return injectivity_augmented(n, d, mu);
}

Construction lift_from(int n, int d, std::int64_t mu) {
  return extend_by_ci_square(construct_failing_ideal(n - 2, d, mu - 2));
}

}  // namespace

Construction construct_failing_ideal(int n, int d, std::int64_t mu) {
  return with_target(dispatch(n, d, mu), n, d, mu);
}

namespace {

struct FamilyEntry {
  std::string usage;
  std::size_t arity;
  std::function<Construction(const std::vector<int>&)> build;
};

const std::map<std::string, FamilyEntry>& families() {
  static const std::map<std::string, FamilyEntry> table = {
      {kInjectivity, {"n d", 2, [](const auto& p) { return injectivity_ideal(p[0], p[1]); }}},
      {kInjectivityAugmented, {"n d mu", 3, [](const auto& p) { return injectivity_augmented(p[0], p[1], p[2]); }}},
      {kSurjectivity, {"n d", 2, [](const auto& p) { return surjectivity_ideal(p[0], p[1]); }}},
      {kSurjectivitySubset, {"n d mu", 3, [](const auto& p) { return surjectivity_subset(p[0], p[1], p[2]); }}},
      {kCiSquareLift, {"n d mu  (lifts the ideal built for (n,d,mu))", 3,
                       [](const auto& p) { return extend_by_ci_square(construct_failing_ideal(p[0], p[1], p[2])); }}},
      {kEvenAci, {"n d", 2, [](const auto& p) { return even_aci(p[0], p[1]); }}},
      {kOddAci, {"n d", 2, [](const auto& p) { return odd_aci(p[0], p[1]); }}},
      {kTernaryAci, {"d [a b c]", 1,
                     [](const auto& p) {
                       if (p.size() == 4) return ternary_aci(p[0], p[1], p[2], p[3]);
                       if (p.size() != 1) throw std::invalid_argument("ternary-aci takes d or d a b c");
                       return ternary_aci(p[0]);
                     }}},
      {kQuadraticBlocks, {"a b c  (blocks of size 3, 2, 1)", 3,
                          [](const auto& p) { return quadratic_blocks(p[0], p[1], p[2]); }}},
      {kQuadraticSeven, {"", 0, [](const auto&) { return quadratic_seven(); }}},
      {kCornerStar, {"n d", 2, [](const auto& p) { return corner_star(p[0], p[1]); }}},
      {kTwoCorners, {"d", 1, [](const auto& p) { return two_corners(p[0]); }}},
      {kCubicFive, {"with_product(0|1)", 1, [](const auto& p) { return cubic_five(p[0] != 0); }}},
      {kTogliattiCube, {"", 0, [](const auto&) { return togliatti_cube(); }}},
      {kQuarticFive, {"", 0, [](const auto&) { return quartic_five(); }}},
      {kProductAci, {"n", 1, [](const auto& p) { return product_aci(p[0]); }}},
      {kSplitAci, {"n d  (n = 4 or 5)", 2,
                   [](const auto& p) {
                     if (p[0] == 4) return split_aci_four(p[1]);
                     if (p[0] == 5) return split_aci_five(p[1]);
                     throw DomainError("split-aci exists for n = 4 and n = 5");
                   }}},
  };
  return table;
}

}  // namespace

Construction construct_family(const std::string& tag, const std::vector<int>& params) {
  const auto& table = families();
  auto it = table.find(tag);
  if (it == table.end()) throw std::invalid_argument("unknown family '" + tag + "'");
  const bool variadic = tag == kTernaryAci;
  if (!variadic && params.size() != it->second.arity) {
    throw std::invalid_argument("family '" + tag + "' takes parameters: " + it->second.usage);
  }
  return it->second.build(params);
}

std::vector<std::string> family_tags() {
  std::vector<std::string> out;
  for (const auto& [tag, entry] : families()) out.push_back(tag);
  return out;
}

std::string family_usage(const std::string& tag) {
  auto it = families().find(tag);
  if (it == families().end()) throw std::invalid_argument("unknown family '" + tag + "'");
  return it->second.usage;
}

}  // namespace wlp

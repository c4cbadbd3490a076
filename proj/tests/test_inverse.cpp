#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "wlp/catalog.hpp"
#include "wlp/engine.hpp"
#include "wlp/inverse.hpp"

using namespace wlp;

namespace {

Polynomial X(int n, int i) { return Polynomial::variable(n, i); }
Polynomial D(int n, int i, int j) { return Polynomial::difference(n, i, j); }

Polynomial random_form(std::mt19937& rng, int n, int degree) {
  Polynomial p(n);
  for (const auto& m : enumerate_monomials(n, degree)) {
    if (rng() % 3 == 0) p += Polynomial::term(m, static_cast<long>(rng() % 11) - 5);
  }
  return p;
}

}  // namespace

TEST_CASE("differentiation") {
  const int n = 3;
  const Polynomial f = Polynomial::term(Monomial{2, 1, 0});
  CHECK(f.differentiate(Monomial{1, 0, 0}) == 2 * Polynomial::term(Monomial{1, 1, 0}));
  CHECK(f.differentiate(Monomial{2, 1, 0}) == Polynomial::constant(n, 2));
  CHECK(f.differentiate(Monomial{0, 0, 1}).is_zero());
  const Polynomial v = D(n, 0, 1) * D(n, 0, 2) * D(n, 1, 2);
  CHECK(v.differentiate(Monomial{1, 1, 1}).is_zero());
  CHECK(v.apply_ell().is_zero());
  for (int d = 2; d <= 8; ++d) {
    CHECK((D(4, 0, 1).pow(d - 1) * D(4, 2, 3).pow(d - 1)).apply_ell().is_zero());
  }
}

TEST_CASE("differentiation composes") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 2);
    const auto f = random_form(rng, n, 5);
    const auto ms1 = enumerate_monomials(n, 1 + static_cast<int>(rng() % 2));
    const auto ms2 = enumerate_monomials(n, 1 + static_cast<int>(rng() % 2));
    const auto& a = ms1[rng() % ms1.size()];
    const auto& b = ms2[rng() % ms2.size()];
    CHECK(f.differentiate(a * b) == f.differentiate(b).differentiate(a));
    const auto g = random_form(rng, n, 5);
    CHECK((f + g).differentiate(a) == f.differentiate(a) + g.differentiate(a));
  }
}

TEST_CASE("polynomial basics") {
  const int n = 2;
  const auto p = (X(n, 0) + X(n, 1)).pow(3);
  CHECK(p.num_terms() == 4);
  CHECK(p.coefficient(Monomial{1, 2}) == 3);
  CHECK(p.degree() == 3);
  CHECK(p.to_string() == "X1^3 + 3*X1^2*X2 + 3*X1*X2^2 + X2^3");
  CHECK(D(n, 0, 1).to_string('x') == "x1 - x2");
  CHECK((p - p).is_zero());
  CHECK(p.swapped(0, 1) == p);
  CHECK_THROWS_AS((X(2, 0) + Polynomial::constant(2, 1)).degree(), std::logic_error);
  CHECK(X(2, 0).times_ell() == Polynomial::term(Monomial{2, 0}) + Polynomial::term(Monomial{1, 1}));
}

TEST_CASE("inverse system dimensions equal the Hilbert function") {
  const auto ideal = parse_ideal("x1^3,x2^3,x3^3,x1*x2*x3");
  const auto table = hilbert_table(ideal);
  for (int j = 1; j <= table.socle_degree(); ++j) {
    const auto m = differentiation_matrix(ideal, j);
    CHECK(m.cols() == table.at(j));
    CHECK(m.rows() == table.at(j - 1));
  }
}

TEST_CASE("divided-power differentiation matrix is the transpose of multiplication") {
  std::mt19937 rng(21);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 2);
    auto gens = pure_powers(n, 3);
    for (const auto& m : enumerate_monomials(n, 3)) {
      if (!m.pure_power_index() && rng() % 4 == 0) gens.push_back(m);
    }
    const auto ideal = MonomialIdeal::equigenerated(n, gens);
    const auto report = wlp_report(ideal, {RankPolicy::Certified});
    for (int j = 1; j <= report.table.socle_degree(); ++j) {
      const auto mult = mult_map_matrix(ideal, j - 1);
      CHECK(differentiation_matrix(ideal, j, DualBasis::DividedPower) == mult.transposed());
      const auto mono = differentiation_matrix(ideal, j, DualBasis::Monomial);
      CHECK(static_cast<std::int64_t>(rank_exact(mono)) == report.record(j - 1).rank);
    }
  }
}

TEST_CASE("kernel bases") {
  const auto togliatti = parse_ideal("x1^3,x2^3,x3^3,x1*x2*x3");
  const auto k3 = inverse_kernel_basis(togliatti, 3);
  REQUIRE(k3.size() == 1);
  CHECK(in_inverse_system(togliatti, k3[0], true));
  CHECK(polynomial_rank(std::vector<Polynomial>{k3[0], D(3, 0, 1) * D(3, 0, 2) * D(3, 1, 2)}) == 1);
  const auto k2 = primal_kernel_basis(togliatti, 2);
  REQUIRE(k2.size() == 1);
  CHECK(primal_kernel_check(togliatti, k2[0]));
  CHECK(nonzero_in_quotient(togliatti, k2[0]));

  const auto ci = MonomialIdeal::equigenerated(3, pure_powers(3, 4));
  const auto ci_table = hilbert_table(ci);
  for (int i = 1; i <= 9; ++i) {
    const auto gap = std::max<std::int64_t>(0, ci_table.at(i) - ci_table.at(i - 1));
    CHECK(static_cast<std::int64_t>(inverse_kernel_basis(ci, i).size()) == gap);
  }

  for (int i = 1; i <= 4; ++i) {
    const auto report = wlp_report(togliatti);
    CHECK(static_cast<std::int64_t>(inverse_kernel_basis(togliatti, i).size()) ==
          report.table.at(i) - report.record(i - 1).rank);
  }
}

TEST_CASE("membership and reduction") {
  const auto ideal = parse_ideal("x1^2,x2^2,x3^2,x4^2,x1*x2,x3*x4");
  CHECK(in_inverse_system(ideal, D(4, 0, 1) * D(4, 2, 3), true));
  CHECK_FALSE(in_inverse_system(ideal, X(4, 0) * X(4, 1)));
  const Polynomial f = X(4, 0) + X(4, 1) - X(4, 2) - X(4, 3);
  CHECK(primal_kernel_check(ideal, f));
  CHECK(reduce_modulo(ideal, Polynomial::term(Monomial{2, 0, 0, 0}) + X(4, 0) * X(4, 2)) == X(4, 0) * X(4, 2));
}

TEST_CASE("the five-variable split candidate is not a dual witness") {
  // (X1-X2)^{floor((3d-3)/2)} (X3-X4)^{d-1} has X1-degree at least d, so
  // x1^d does not annihilate it.
  for (int d = 5; d <= 9; ++d) {
    if (d == 6) continue;
    const auto ideal = split_aci_five(d).ideal;
    const auto f = split_aci_five_candidate(d);
    CHECK_FALSE(f.differentiate(Monomial::pure_power(5, 0, d)).is_zero());
    CHECK_FALSE(in_inverse_system(ideal, f));
  }
}

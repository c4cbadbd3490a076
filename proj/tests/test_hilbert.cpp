#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "wlp/hilbert.hpp"

using namespace wlp;

TEST_CASE("Hilbert function agrees with inclusion-exclusion") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 4);
    const int d = 2 + static_cast<int>(rng() % 3);
    auto gens = pure_powers(n, d);
    for (const auto& m : enumerate_monomials(n, d)) {
      if (!m.pure_power_index() && rng() % 5 == 0 && gens.size() < 14) gens.push_back(m);
    }
    const auto ideal = MonomialIdeal::equigenerated(n, gens);
    const auto og = oracle::generators(ideal);
    const auto table = hilbert_table(ideal);
    for (int i = 0; i <= n * (d - 1) + 1; ++i) {
      CHECK(table.at(i) == oracle::hf_inclusion_exclusion(n, og, i));
      CHECK(hilbert_function(ideal, i) == table.at(i));
    }
  }
}

TEST_CASE("Hilbert tables") {
  const auto t = hilbert_table(parse_ideal("x1^3,x2^3,x3^3,x1*x2*x3"));
  CHECK(t.values() == std::vector<std::int64_t>{1, 3, 6, 6, 3});
  CHECK(t.socle_degree() == 4);
  CHECK(t.total() == 19);
  CHECK(t.at(-1) == 0);
  CHECK(t.at(9) == 0);
  CHECK(hilbert_series_string(t) == "1+3T+6T^2+6T^3+3T^4");
  CHECK(hilbert_series_string(HilbertTable({1, 1, 1})) == "1+T+T^2");
  CHECK(hilbert_series_string(HilbertTable(std::vector<std::int64_t>{})) == "0");
  CHECK_THROWS_AS(hilbert_table(parse_ideal("x1^2,x2^2", 3)), DomainError);
  CHECK(isolated_peaks(hilbert_table(parse_ideal("x1^2,x2^2,x3^2"))).empty());
  CHECK(isolated_peaks(hilbert_table(parse_ideal("x1^2,x2^2,x3^2,x4^2"))) == std::vector<int>{2});
}

TEST_CASE("tensor products convolve Hilbert functions") {
  const auto a = parse_ideal("x1^3,x2^3,x1*x2^2");
  const auto b = parse_ideal("x1^3,x2^3,x3^3");
  const auto big = MonomialIdeal::equigenerated(
      5, {Monomial{3, 0, 0, 0, 0}, Monomial{0, 3, 0, 0, 0}, Monomial{1, 2, 0, 0, 0}, Monomial{0, 0, 3, 0, 0},
          Monomial{0, 0, 0, 3, 0}, Monomial{0, 0, 0, 0, 3}});
  CHECK(hilbert_table(big) == convolve(hilbert_table(a), hilbert_table(b)));
}

TEST_CASE("closed-form bounds") {
  CHECK(binomial(10, 3) == 120);
  CHECK(binomial(5, 7) == 0);
  CHECK(binomial(5, -1) == 0);
  CHECK_THROWS(binomial(200, 100));
  CHECK(delta(8, 4) == 210);
  CHECK(delta(3, 3) == 4);
  CHECK(beta(8, 4) == 322);
  CHECK(beta(4, 2) == 6);
  CHECK(beta(3, 3) == 4);
  CHECK(beta(3, 4) == 5);
  CHECK(beta(3, 5) == 9);
  for (int d = 2; d <= 14; ++d) CHECK(alpha(3, d) == (d % 6 == 3 ? 4 : 5));
  CHECK(alpha(4, 2) == 6);
  CHECK(alpha(6, 2) == 8);
  CHECK(alpha(5, 2) == 9);
  CHECK(alpha(7, 2) == 10);
  CHECK(alpha(9, 2) == 12);
  CHECK(alpha(4, 3) == 6);
  CHECK(alpha(5, 3) == 6);
  CHECK(alpha(4, 4) == 5);
  CHECK(alpha(8, 4) == 9);
  CHECK(nu(3, 3) == 4);
  CHECK(nu(4, 2) == 6);
  CHECK(nu(5, 4) == 9);
  CHECK_THROWS_AS(nu(3, 2), DomainError);
}

TEST_CASE("alpha never exceeds delta") {
  for (int n = 3; n <= 12; ++n) {
    for (int d = 2; d <= 10; ++d) {
      if (n == 3 && d == 2) continue;
      CHECK(alpha(n, d) <= delta(n, d));
      CHECK(delta(n, d) <= beta(n, d));
    }
  }
}

TEST_CASE("sigma and omega") {
  CHECK(sigma(6, 2).to_string() == "{8,9,11..17}");
  CHECK(sigma(6, 2).size() == 9);
  CHECK_FALSE(sigma(6, 2).contains(10));
  CHECK(sigma(8, 4).to_string() == "{9..322}");
  CHECK(sigma(3, 3).to_string() == "{4}");
  CHECK(sigma(3, 2).empty());
  CHECK(sigma(3, 2).to_string() == "{}");
  CHECK(sigma(4, 2).to_string() == "{6}");
  CHECK(sigma(5, 2).to_string() == "{9..11}");
  CHECK(omega(4).to_string() == "{6}");
  CHECK(omega(5).to_string() == "{9,10}");
  CHECK(omega(6).to_string() == "{8,9,11..15}");
  CHECK(omega(7).to_string() == "{10..21}");
  CHECK(omega(8).to_string() == "{10..28}");
  CHECK(omega(9).to_string() == "{12..36}");
}

#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "wlp/linalg.hpp"

using namespace wlp;

namespace {

SparseIntMatrix random_matrix(std::mt19937_64& rng, int rows, int cols, int density_pct, std::int64_t magnitude) {
  std::vector<MatrixEntry> entries;
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      if (static_cast<int>(rng() % 100) >= density_pct) continue;
      std::int64_t v = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(2 * magnitude + 1)) - magnitude;
      if (v != 0) entries.push_back({r, c, v});
    }
  }
  return SparseIntMatrix(rows, cols, std::move(entries));
}

// Low-rank matrix: product of random rows x k and k x cols factors.
SparseIntMatrix low_rank(std::mt19937_64& rng, int rows, int cols, int k) {
  std::vector<std::vector<std::int64_t>> a(static_cast<std::size_t>(rows), std::vector<std::int64_t>(static_cast<std::size_t>(k)));
  std::vector<std::vector<std::int64_t>> b(static_cast<std::size_t>(k), std::vector<std::int64_t>(static_cast<std::size_t>(cols)));
  for (auto& row : a) {
    for (auto& v : row) v = static_cast<std::int64_t>(rng() % 7) - 3;
  }
  for (auto& row : b) {
    for (auto& v : row) v = static_cast<std::int64_t>(rng() % 7) - 3;
  }
  std::vector<MatrixEntry> entries;
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      std::int64_t s = 0;
      for (int t = 0; t < k; ++t) s += a[static_cast<std::size_t>(r)][static_cast<std::size_t>(t)] * b[static_cast<std::size_t>(t)][static_cast<std::size_t>(c)];
      if (s) entries.push_back({r, c, s});
    }
  }
  return SparseIntMatrix(rows, cols, std::move(entries));
}

std::size_t oracle_rank(const SparseIntMatrix& m) {
  oracle::DenseQ a(static_cast<std::size_t>(m.rows()), std::vector<mpq_class>(static_cast<std::size_t>(m.cols())));
  for (const auto& e : m.entries()) a[static_cast<std::size_t>(e.row)][static_cast<std::size_t>(e.col)] = mpq_class(static_cast<long>(e.value));
  return oracle::rank_q(a);
}

}  // namespace

TEST_CASE("sparse matrix container") {
  const SparseIntMatrix m(2, 3, {{1, 2, 5}, {0, 0, -1}});
  CHECK(m.at(1, 2) == 5);
  CHECK(m.at(0, 1) == 0);
  CHECK(m.entries().front().row == 0);
  CHECK(m.transposed().at(2, 1) == 5);
  CHECK_THROWS_AS((SparseIntMatrix(2, 2, {{0, 0, 1}, {0, 0, 2}})), std::invalid_argument);
  CHECK_THROWS_AS((SparseIntMatrix(2, 2, {{2, 0, 1}})), std::invalid_argument);
  const int rp[] = {1, 0};
  const int cp[] = {2, 1, 0};
  CHECK(m.permuted(rp, cp).at(0, 0) == 5);
}

TEST_CASE("primes") {
  CHECK(is_prime(2));
  CHECK(is_prime(2147483647));
  CHECK_FALSE(is_prime(2147483649ULL));
  CHECK_FALSE(is_prime(1));
  std::mt19937_64 rng(3);
  for (int k = 0; k < 20; ++k) {
    const auto p = random_prime_31(rng);
    CHECK(is_prime(p));
    CHECK(p >= (1ULL << 30));
    CHECK(p < (1ULL << 31));
  }
  CHECK_THROWS_AS((rank_modular(SparseIntMatrix(1, 1, {{0, 0, 1}}), 15)), std::invalid_argument);
}

TEST_CASE("exact and modular ranks agree with the rational oracle") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 80; ++trial) {
    const int rows = 1 + static_cast<int>(rng() % 40);
    const int cols = 1 + static_cast<int>(rng() % 40);
    const auto m = trial % 2 ? random_matrix(rng, rows, cols, 10 + static_cast<int>(rng() % 80), 5)
                             : low_rank(rng, rows, cols, 1 + static_cast<int>(rng() % 8));
    const auto expected = oracle_rank(m);
    CHECK(rank_exact(m) == expected);
    CHECK(rank_exact(m, false) == expected);
    CHECK(rank_modular(m, 2147483647) == expected);
    CHECK(rank_exact(m.transposed()) == expected);
    CHECK(rank(m, {RankPolicy::Fast, static_cast<std::uint64_t>(trial), true}).rank == expected);
  }
}

TEST_CASE("dense fallback path") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 6; ++trial) {
    const auto m = trial % 2 ? random_matrix(rng, 90, 80, 70, 3) : low_rank(rng, 90, 80, 37);
    const auto expected = oracle_rank(m);
    CHECK(rank_exact(m) == expected);
    CHECK(rank_modular(m, 1000000007) == expected);
    CHECK(reference::rank_modular_dense(m, 1000000007) == expected);
  }
}

TEST_CASE("64-bit overflow restarts in GMP") {
  std::mt19937_64 rng(5);
  const std::int64_t big = std::int64_t{1} << 40;
  for (int trial = 0; trial < 10; ++trial) {
    auto m = random_matrix(rng, 12, 12, 100, big);
    CHECK(rank_exact(m) == oracle_rank(m));
  }
  // A matrix of huge entries with a known dependency.
  std::vector<MatrixEntry> e = {{0, 0, big}, {0, 1, big + 1}, {1, 0, 3 * big}, {1, 1, 3 * big + 3}, {2, 0, 7}, {2, 1, 1}};
  const SparseIntMatrix m(3, 2, e);
  CHECK(rank_exact(m) == 2);
  const SparseIntMatrix dep(2, 2, {{0, 0, big}, {0, 1, big + 1}, {1, 0, 3 * big}, {1, 1, 3 * big + 3}});
  CHECK(rank_exact(dep) == 1);
}

TEST_CASE("modular rank never exceeds the rational rank") {
  // Over F_2 the matrix [[1,1],[1,-1]] is singular; over Q it is not.
  const SparseIntMatrix m(2, 2, {{0, 0, 1}, {0, 1, 1}, {1, 0, 1}, {1, 1, -1}});
  CHECK(rank_exact(m) == 2);
  CHECK(rank_modular(m, 2) == 1);
}

TEST_CASE("rank policies") {
  std::mt19937_64 rng(1);
  const auto m = low_rank(rng, 30, 30, 12);
  const auto fast = rank(m, {RankPolicy::Fast, 42, true});
  CHECK(fast.rank == 12);
  CHECK(fast.certification == Certification::Probabilistic);
  CHECK(fast.primes.size() == 2);
  CHECK(fast.primes[0] != fast.primes[1]);
  const auto again = rank(m, {RankPolicy::Fast, 42, true});
  CHECK(again.primes == fast.primes);
  const auto cert = rank(m, {RankPolicy::Certified, 0, true});
  CHECK(cert.rank == 12);
  CHECK(cert.certification == Certification::Exact);
  CHECK(rank(m, {RankPolicy::Auto, 0, true}).certification == Certification::Exact);
}

TEST_CASE("parallel and serial dense kernels agree") {
  std::mt19937_64 rng(8);
  const std::uint32_t p = 2147483629u;
  for (int trial = 0; trial < 4; ++trial) {
    const int rows = 150, cols = 140;
    std::vector<std::uint32_t> a(static_cast<std::size_t>(rows * cols));
    for (auto& v : a) v = static_cast<std::uint32_t>(rng() % p);
    if (trial % 2) {
      for (int c = 0; c < cols; ++c) a[static_cast<std::size_t>(5 * cols + c)] = a[static_cast<std::size_t>(c)];
    }
    auto b = a;
    CHECK(dense_rank_mod_p(a, rows, cols, p, true) == dense_rank_mod_p(b, rows, cols, p, false));
  }
}

#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

namespace wlp {

struct MatrixEntry {
  int row = 0;
  int col = 0;
  std::int64_t value = 0;
  friend bool operator==(const MatrixEntry&, const MatrixEntry&) = default;
};

/// Sparse integer matrix in coordinate form, kept sorted row-major with no
/// duplicate positions and no stored zeros.
class SparseIntMatrix {
 public:
  SparseIntMatrix() = default;
  /// Throws std::invalid_argument on out-of-range indices or duplicate positions.
  SparseIntMatrix(int rows, int cols, std::vector<MatrixEntry> entries);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const std::vector<MatrixEntry>& entries() const { return entries_; }
  std::size_t nnz() const { return entries_.size(); }
  std::int64_t at(int row, int col) const;

  SparseIntMatrix transposed() const;
  /// Entry (r, c) moves to (row_perm[r], col_perm[c]).
  SparseIntMatrix permuted(std::span<const int> row_perm, std::span<const int> col_perm) const;

  friend bool operator==(const SparseIntMatrix&, const SparseIntMatrix&) = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<MatrixEntry> entries_;
};

enum class RankPolicy { Auto, Fast, Certified };
enum class Certification { Exact, Probabilistic };

/// Auto policy certifies matrices whose larger dimension is at most this.
inline constexpr int kAutoCertifiedLimit = 400;
/// Fast policy escalates to exact elimination after this many prime disagreements.
inline constexpr int kMaxPrimeDisagreements = 3;

struct RankOptions {
  RankPolicy policy = RankPolicy::Auto;
  std::uint64_t seed = 0;
  /// Let the dense kernels use OpenMP.
  bool parallel = true;
};

struct RankResult {
  std::size_t rank = 0;
  Certification certification = Certification::Exact;
  std::vector<std::uint64_t> primes;  // primes of the accepted Fast round
  int disagreements = 0;
  bool escalated = false;
};

bool is_prime(std::uint64_t value);
/// Uniform random prime in [2^30, 2^31).
std::uint64_t random_prime_31(std::mt19937_64& rng);
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt);

/// Rank over F_p. Requires p prime and p < 2^32; throws std::invalid_argument
/// otherwise. Never exceeds the rank over Q.
std::size_t rank_modular(const SparseIntMatrix& m, std::uint64_t p, bool parallel = true);

/// Rank over Q by integer-preserving elimination (no fractions, rows kept
/// primitive). Runs in 64-bit arithmetic and restarts in GMP on overflow.
std::size_t rank_exact(const SparseIntMatrix& m, bool parallel = true);

/// Fast: rank at two distinct random 31-bit primes drawn from `seed`,
/// accepted when equal; after kMaxPrimeDisagreements disagreements the
/// computation escalates to rank_exact. Certified: rank_exact.
RankResult rank(const SparseIntMatrix& m, const RankOptions& options = {});

/// Dense elimination kernels. `a` is row-major rows x cols and is destroyed.
/// The parallel variant splits the row updates of each pivot step across
/// OpenMP threads; results are identical to the serial variant.
std::size_t dense_rank_mod_p(std::vector<std::uint32_t>& a, int rows, int cols, std::uint32_t p, bool parallel);

namespace reference {

/// Straight dense Gaussian elimination over F_p, serial, no sparse phase.
std::size_t rank_modular_dense(const SparseIntMatrix& m, std::uint64_t p);

}  // namespace reference

}  // namespace wlp

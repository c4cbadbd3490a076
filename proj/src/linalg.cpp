#include "wlp/linalg.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <type_traits>

namespace wlp {

SparseIntMatrix::SparseIntMatrix(int rows, int cols, std::vector<MatrixEntry> entries) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("matrix: negative dimension");
  std::erase_if(entries, [](const MatrixEntry& e) { return e.value == 0; });
  for (const auto& e : entries) {
    if (e.row < 0 || e.row >= rows || e.col < 0 || e.col >= cols) {
      throw std::invalid_argument("matrix: entry (" + std::to_string(e.row) + "," + std::to_string(e.col) +
                                  ") out of range");
    }
  }
  std::sort(entries.begin(), entries.end(),
            [](const MatrixEntry& a, const MatrixEntry& b) { return std::tie(a.row, a.col) < std::tie(b.row, b.col); });
  for (std::size_t i = 1; i < entries.size(); ++i) {
    if (entries[i].row == entries[i - 1].row && entries[i].col == entries[i - 1].col) {
      throw std::invalid_argument("matrix: duplicate position");
    }
  }
  entries_ = std::move(entries);
}

std::int64_t SparseIntMatrix::at(int row, int col) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), std::pair{row, col},
                             [](const MatrixEntry& e, const std::pair<int, int>& key) {
                               return std::tie(e.row, e.col) < std::tie(key.first, key.second);
                             });
  return it != entries_.end() && it->row == row && it->col == col ? it->value : 0;
}

SparseIntMatrix SparseIntMatrix::transposed() const {
  std::vector<MatrixEntry> t;
  t.reserve(entries_.size());
  for (const auto& e : entries_) t.push_back({e.col, e.row, e.value});
  return SparseIntMatrix(cols_, rows_, std::move(t));
}

SparseIntMatrix SparseIntMatrix::permuted(std::span<const int> row_perm, std::span<const int> col_perm) const {
  if (static_cast<int>(row_perm.size()) != rows_ || static_cast<int>(col_perm.size()) != cols_) {
    throw std::invalid_argument("matrix: permutation size mismatch");
  }
  std::vector<MatrixEntry> p;
  p.reserve(entries_.size());
  for (const auto& e : entries_) {
    p.push_back({row_perm[static_cast<std::size_t>(e.row)], col_perm[static_cast<std::size_t>(e.col)], e.value});
  }
  return SparseIntMatrix(rows_, cols_, std::move(p));
}

// ---------------------------------------------------------------------------
// primes

namespace {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

}  // namespace

bool is_prime(std::uint64_t value) {
  if (value < 2) return false;
  for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (value % q == 0) return value == q;
  }
  std::uint64_t d = value - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // Deterministic witness set for 64-bit inputs.
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = pow_mod(a, d, value);
    if (x == 1 || x == value - 1) continue;
    bool composite = true;
    for (int r = 1; r < s && composite; ++r) {
      x = mul_mod(x, x, value);
      composite = x != value - 1;
    }
    if (composite) return false;
  }
  return true;
}

std::uint64_t random_prime_31(std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint64_t> dist(1ull << 30, (1ull << 31) - 1);
  while (true) {
    const std::uint64_t candidate = dist(rng) | 1ull;
    if (is_prime(candidate)) return candidate;
  }
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (salt + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

// ---------------------------------------------------------------------------
// dense kernels

std::size_t dense_rank_mod_p(std::vector<std::uint32_t>& a, int rows, int cols, std::uint32_t p, bool parallel) {
  const std::size_t stride = static_cast<std::size_t>(cols);
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r) {
      if (a[static_cast<std::size_t>(r) * stride + static_cast<std::size_t>(c)] != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != rank) {
      std::swap_ranges(a.begin() + static_cast<std::ptrdiff_t>(static_cast<std::size_t>(pivot) * stride),
                       a.begin() + static_cast<std::ptrdiff_t>(static_cast<std::size_t>(pivot + 1) * stride),
                       a.begin() + static_cast<std::ptrdiff_t>(static_cast<std::size_t>(rank) * stride));
    }
    const std::uint32_t* prow = a.data() + static_cast<std::size_t>(rank) * stride;
    const std::uint64_t inv = pow_mod(prow[c], p - 2, p);
    const int first = rank + 1;
#pragma omp parallel for schedule(static) if (parallel && rows - first > 64)
    for (int r = first; r < rows; ++r) {
      std::uint32_t* row = a.data() + static_cast<std::size_t>(r) * stride;
      if (row[c] == 0) continue;
      const std::uint64_t factor = p - (row[c] * inv) % p;
      for (int j = c; j < cols; ++j) {
        if (prow[j] != 0) row[j] = static_cast<std::uint32_t>((row[j] + factor * prow[j]) % p);
      }
    }
    ++rank;
  }
  return static_cast<std::size_t>(rank);
}

namespace {

// Fraction-free (Bareiss) rank of a dense integer block.
std::size_t dense_rank_bareiss(std::vector<std::vector<mpz_class>>& a, int cols, bool parallel) {
  const int rows = static_cast<int>(a.size());
  int rank = 0;
  mpz_class prev = 1;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int pivot = -1;
    std::size_t best_size = std::numeric_limits<std::size_t>::max();
    for (int r = rank; r < rows; ++r) {
      const auto& v = a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
      if (v != 0 && mpz_size(v.get_mpz_t()) < best_size) {
        best_size = mpz_size(v.get_mpz_t());
        pivot = r;
      }
    }
    if (pivot < 0) continue;
    std::swap(a[static_cast<std::size_t>(pivot)], a[static_cast<std::size_t>(rank)]);
    const auto& prow = a[static_cast<std::size_t>(rank)];
    const mpz_class& pv = prow[static_cast<std::size_t>(c)];
#pragma omp parallel for schedule(dynamic, 8) if (parallel && rows - rank > 32)
    for (int r = rank + 1; r < rows; ++r) {
      auto& row = a[static_cast<std::size_t>(r)];
      const mpz_class rc = row[static_cast<std::size_t>(c)];
      mpz_class tmp;
      for (int j = c + 1; j < cols; ++j) {
        auto& x = row[static_cast<std::size_t>(j)];
        tmp = pv * x;
        tmp -= rc * prow[static_cast<std::size_t>(j)];
        mpz_divexact(x.get_mpz_t(), tmp.get_mpz_t(), prev.get_mpz_t());
      }
      row[static_cast<std::size_t>(c)] = 0;
    }
    prev = pv;
    ++rank;
  }
  return static_cast<std::size_t>(rank);
}

// ---------------------------------------------------------------------------
// sparse elimination with Markowitz pivoting

template <class Value>
struct SparseRow {
  std::vector<int> cols;
  std::vector<Value> vals;
};

struct Overflow {};

struct ModField {
  using Value = std::uint32_t;
  std::uint64_t p;

  int pivot_cost(Value) const { return 0; }

  // target -= (target[c] / pivot[c]) * pivot
  template <class Added, class Removed>
  void combine(SparseRow<Value>& target, const SparseRow<Value>& pivot, Value tc, Value pc, int col,
               SparseRow<Value>& scratch, Added&& added, Removed&& removed) const {
    const std::uint64_t factor = p - mul_mod(tc, pow_mod(pc, p - 2, p), p);
    scratch.cols.clear();
    scratch.vals.clear();
    std::size_t i = 0, j = 0;
    const auto& tcol = target.cols;
    const auto& pcol = pivot.cols;
    while (i < tcol.size() || j < pcol.size()) {
      if (j == pcol.size() || (i < tcol.size() && tcol[i] < pcol[j])) {
        scratch.cols.push_back(tcol[i]);
        scratch.vals.push_back(target.vals[i]);
        ++i;
      } else if (i == tcol.size() || pcol[j] < tcol[i]) {
        scratch.cols.push_back(pcol[j]);
        scratch.vals.push_back(static_cast<Value>((factor * pivot.vals[j]) % p));
        added(pcol[j]);
        ++j;
      } else {
        const Value v = static_cast<Value>((target.vals[i] + factor * pivot.vals[j]) % p);
        if (v != 0 && tcol[i] != col) {
          scratch.cols.push_back(tcol[i]);
          scratch.vals.push_back(v);
        } else {
          removed(tcol[i]);
        }
        ++i;
        ++j;
      }
    }
    std::swap(target, scratch);
  }
};

std::int64_t checked(__int128 v) {
  if (v > std::numeric_limits<std::int64_t>::max() / 4 || v < std::numeric_limits<std::int64_t>::min() / 4) {
    throw Overflow{};
  }
  return static_cast<std::int64_t>(v);
}

std::int64_t gcd_value(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }
mpz_class gcd_value(const mpz_class& a, const mpz_class& b) { return gcd(a, b); }
bool is_unit(std::int64_t v) { return v == 1 || v == -1; }
bool is_unit(const mpz_class& v) { return v == 1 || v == -1; }
std::size_t magnitude(std::int64_t v) { return static_cast<std::size_t>(v < 0 ? -(v / 2) : v / 2); }
std::size_t magnitude(const mpz_class& v) { return mpz_sizeinbase(v.get_mpz_t(), 2); }

std::int64_t combine_values(std::int64_t a, std::int64_t x, std::int64_t b, std::int64_t y) {
  return checked(static_cast<__int128>(a) * x - static_cast<__int128>(b) * y);
}
mpz_class combine_values(const mpz_class& a, const mpz_class& x, const mpz_class& b, const mpz_class& y) {
  return a * x - b * y;
}
std::int64_t negate_scale(const std::int64_t& b, const std::int64_t& y) {
  return checked(-static_cast<__int128>(b) * y);
}
mpz_class negate_scale(const mpz_class& b, const mpz_class& y) { return -b * y; }

template <class Int>
struct IntegerField {
  using Value = Int;

  int pivot_cost(const Value& v) const { return is_unit(v) ? 0 : 1 + static_cast<int>(std::min<std::size_t>(magnitude(v), 1000)); }

  // target := (pc/g) * target - (tc/g) * pivot, then divided by its content.
  template <class Added, class Removed>
  void combine(SparseRow<Value>& target, const SparseRow<Value>& pivot, const Value& tc, const Value& pc, int col,
               SparseRow<Value>& scratch, Added&& added, Removed&& removed) const {
    Value g = gcd_value(tc, pc);
    const Value a = pc / g;
    const Value b = tc / g;
    scratch.cols.clear();
    scratch.vals.clear();
    std::size_t i = 0, j = 0;
    const auto& tcol = target.cols;
    const auto& pcol = pivot.cols;
    while (i < tcol.size() || j < pcol.size()) {
      if (j == pcol.size() || (i < tcol.size() && tcol[i] < pcol[j])) {
        scratch.cols.push_back(tcol[i]);
        scratch.vals.push_back(is_unit(a) ? (a > 0 ? target.vals[i] : Value(-target.vals[i]))
                                          : combine_values(a, target.vals[i], Value(0), Value(0)));
        ++i;
      } else if (i == tcol.size() || pcol[j] < tcol[i]) {
        scratch.cols.push_back(pcol[j]);
        scratch.vals.push_back(negate_scale(b, pivot.vals[j]));
        added(pcol[j]);
        ++j;
      } else {
        Value v = combine_values(a, target.vals[i], b, pivot.vals[j]);
        if (v != 0 && tcol[i] != col) {
          scratch.cols.push_back(tcol[i]);
          scratch.vals.push_back(std::move(v));
        } else {
          removed(tcol[i]);
        }
        ++i;
        ++j;
      }
    }
    if (!scratch.vals.empty()) {
      Value content = 0;
      for (const auto& v : scratch.vals) {
        content = gcd_value(content, v);
        if (is_unit(content)) break;
      }
      if (!is_unit(content) && content != 0) {
        for (auto& v : scratch.vals) v /= content;
      }
    }
    std::swap(target, scratch);
  }
};

template <class Field, class DenseFallback>
std::size_t sparse_rank(const SparseIntMatrix& m, const Field& field,
                        const std::function<typename Field::Value(std::int64_t)>& convert,
                        DenseFallback&& dense_fallback) {
  using Value = typename Field::Value;
  const int nrows = m.rows();
  const int ncols = m.cols();
  std::vector<SparseRow<Value>> rows(static_cast<std::size_t>(nrows));
  for (const auto& e : m.entries()) {
    Value v = convert(e.value);
    if (v == 0) continue;
    auto& r = rows[static_cast<std::size_t>(e.row)];
    r.cols.push_back(e.col);
    r.vals.push_back(std::move(v));
  }
  std::vector<int> col_count(static_cast<std::size_t>(ncols), 0);
  std::vector<std::vector<int>> col_rows(static_cast<std::size_t>(ncols));
  std::vector<char> row_alive(static_cast<std::size_t>(nrows), 0);
  std::size_t active_nnz = 0;
  long active_rows = 0;
  long active_cols = 0;
  for (int r = 0; r < nrows; ++r) {
    const auto& row = rows[static_cast<std::size_t>(r)];
    if (row.cols.empty()) continue;
    row_alive[static_cast<std::size_t>(r)] = 1;
    ++active_rows;
    active_nnz += row.cols.size();
    for (int c : row.cols) {
      if (col_count[static_cast<std::size_t>(c)]++ == 0) ++active_cols;
      col_rows[static_cast<std::size_t>(c)].push_back(r);
    }
  }

  auto row_value_at = [&](int r, int c) -> const Value* {
    const auto& row = rows[static_cast<std::size_t>(r)];
    auto it = std::lower_bound(row.cols.begin(), row.cols.end(), c);
    if (it == row.cols.end() || *it != c) return nullptr;
    return &row.vals[static_cast<std::size_t>(it - row.cols.begin())];
  };

  std::size_t rank = 0;
  SparseRow<Value> scratch;
  std::vector<int> holders;
  while (active_rows > 0) {
    const double area = static_cast<double>(active_rows) * static_cast<double>(active_cols);
    if (std::min(active_rows, active_cols) >= 48 && static_cast<double>(active_nnz) > 0.3 * area) {
      std::vector<int> live_cols;
      std::vector<int> col_index(static_cast<std::size_t>(ncols), -1);
      for (int c = 0; c < ncols; ++c) {
        if (col_count[static_cast<std::size_t>(c)] > 0) {
          col_index[static_cast<std::size_t>(c)] = static_cast<int>(live_cols.size());
          live_cols.push_back(c);
        }
      }
      std::vector<const SparseRow<Value>*> live_rows;
      for (int r = 0; r < nrows; ++r) {
        if (row_alive[static_cast<std::size_t>(r)]) live_rows.push_back(&rows[static_cast<std::size_t>(r)]);
      }
      return rank + dense_fallback(live_rows, col_index, static_cast<int>(live_cols.size()));
    }

    // Markowitz: sparsest column, then the shortest row with the cheapest pivot value.
    int best_col = -1;
    for (int c = 0; c < ncols; ++c) {
      const int cnt = col_count[static_cast<std::size_t>(c)];
      if (cnt > 0 && (best_col < 0 || cnt < col_count[static_cast<std::size_t>(best_col)])) {
        best_col = c;
        if (cnt == 1) break;
      }
    }
    holders.clear();
    for (int r : col_rows[static_cast<std::size_t>(best_col)]) {
      if (row_alive[static_cast<std::size_t>(r)] && row_value_at(r, best_col) != nullptr) holders.push_back(r);
    }
    std::sort(holders.begin(), holders.end());
    holders.erase(std::unique(holders.begin(), holders.end()), holders.end());
    int pivot_row = -1;
    std::size_t best_cost = std::numeric_limits<std::size_t>::max();
    for (int r : holders) {
      const std::size_t cost = rows[static_cast<std::size_t>(r)].cols.size() * 4096 +
                               static_cast<std::size_t>(field.pivot_cost(*row_value_at(r, best_col)));
      if (cost < best_cost) {
        best_cost = cost;
        pivot_row = r;
      }
    }
    const SparseRow<Value> pivot = rows[static_cast<std::size_t>(pivot_row)];
    const Value pc = *row_value_at(pivot_row, best_col);

    for (int r : holders) {
      if (r == pivot_row) continue;
      auto& target = rows[static_cast<std::size_t>(r)];
      const Value tc = *row_value_at(r, best_col);
      const std::size_t before = target.cols.size();
      field.combine(
          target, pivot, tc, pc, best_col, scratch,
          [&](int c) {
            if (col_count[static_cast<std::size_t>(c)]++ == 0) ++active_cols;
            col_rows[static_cast<std::size_t>(c)].push_back(r);
          },
          [&](int c) {
            if (--col_count[static_cast<std::size_t>(c)] == 0) --active_cols;
          });
      active_nnz = active_nnz - before + target.cols.size();
      if (target.cols.empty()) {
        row_alive[static_cast<std::size_t>(r)] = 0;
        --active_rows;
      }
    }
    for (int c : pivot.cols) {
      if (--col_count[static_cast<std::size_t>(c)] == 0) --active_cols;
    }
    active_nnz -= pivot.cols.size();
    row_alive[static_cast<std::size_t>(pivot_row)] = 0;
    rows[static_cast<std::size_t>(pivot_row)] = {};
    --active_rows;
    col_rows[static_cast<std::size_t>(best_col)].clear();
    ++rank;
  }
  return rank;
}

std::uint64_t check_modulus(std::uint64_t p) {
  if (p >= (1ull << 32)) throw std::invalid_argument("rank_modular: modulus must be below 2^32");
  if (!is_prime(p)) throw std::invalid_argument("rank_modular: " + std::to_string(p) + " is not prime");
  return p;
}

std::uint32_t reduce_mod(std::int64_t v, std::uint64_t p) {
  const std::int64_t r = v % static_cast<std::int64_t>(p);
  return static_cast<std::uint32_t>(r < 0 ? r + static_cast<std::int64_t>(p) : r);
}

template <class Int>
std::size_t rank_exact_with(const SparseIntMatrix& m, bool parallel) {
  IntegerField<Int> field;
  auto fallback = [&](const std::vector<const SparseRow<Int>*>& live_rows, const std::vector<int>& col_index,
                      int width) -> std::size_t {
    std::vector<std::vector<mpz_class>> dense(live_rows.size(), std::vector<mpz_class>(static_cast<std::size_t>(width)));
    for (std::size_t r = 0; r < live_rows.size(); ++r) {
      const auto& row = *live_rows[r];
      for (std::size_t k = 0; k < row.cols.size(); ++k) {
        dense[r][static_cast<std::size_t>(col_index[static_cast<std::size_t>(row.cols[k])])] = mpz_class(row.vals[k]);
      }
    }
    return dense_rank_bareiss(dense, width, parallel);
  };
  return sparse_rank(
      m, field,
      [](std::int64_t v) {
        if constexpr (std::is_same_v<Int, std::int64_t>) {
          return checked(v);
        } else {
          return Int(static_cast<long>(v));
        }
      },
      fallback);
}

}  // namespace

std::size_t rank_modular(const SparseIntMatrix& m, std::uint64_t p, bool parallel) {
  check_modulus(p);
  ModField field{p};
  auto fallback = [&](const std::vector<const SparseRow<std::uint32_t>*>& live_rows, const std::vector<int>& col_index,
                      int width) -> std::size_t {
    std::vector<std::uint32_t> dense(live_rows.size() * static_cast<std::size_t>(width), 0);
    for (std::size_t r = 0; r < live_rows.size(); ++r) {
      const auto& row = *live_rows[r];
      for (std::size_t k = 0; k < row.cols.size(); ++k) {
        dense[r * static_cast<std::size_t>(width) +
              static_cast<std::size_t>(col_index[static_cast<std::size_t>(row.cols[k])])] = row.vals[k];
      }
    }
    return dense_rank_mod_p(dense, static_cast<int>(live_rows.size()), width, static_cast<std::uint32_t>(p), parallel);
  };
  return sparse_rank(m, field, [p](std::int64_t v) { return reduce_mod(v, p); }, fallback);
}

std::size_t rank_exact(const SparseIntMatrix& m, bool parallel) {
  try {
    return rank_exact_with<std::int64_t>(m, parallel);
  } catch (const Overflow&) {
    return rank_exact_with<mpz_class>(m, parallel);
  }
}

RankResult rank(const SparseIntMatrix& m, const RankOptions& options) {
  RankPolicy policy = options.policy;
  if (policy == RankPolicy::Auto) {
    policy = std::max(m.rows(), m.cols()) <= kAutoCertifiedLimit ? RankPolicy::Certified : RankPolicy::Fast;
  }
  RankResult result;
  if (policy == RankPolicy::Fast) {
    std::mt19937_64 rng(options.seed);
    while (result.disagreements < kMaxPrimeDisagreements) {
      const std::uint64_t p1 = random_prime_31(rng);
      std::uint64_t p2 = random_prime_31(rng);
      while (p2 == p1) p2 = random_prime_31(rng);
      const std::size_t r1 = rank_modular(m, p1, options.parallel);
      const std::size_t r2 = rank_modular(m, p2, options.parallel);
      if (r1 == r2) {
        result.rank = r1;
        result.certification = Certification::Probabilistic;
        result.primes = {p1, p2};
        return result;
      }
      ++result.disagreements;
    }
    result.escalated = true;
  }
  // The rational rank is at least the modular rank, so a maximal modular rank is exact.
  std::mt19937_64 rng(mix_seed(options.seed, 0x51));
  const std::uint64_t p = random_prime_31(rng);
  const std::size_t modular = rank_modular(m, p, options.parallel);
  if (modular == static_cast<std::size_t>(std::min(m.rows(), m.cols()))) {
    result.rank = modular;
    result.certification = Certification::Exact;
    return result;
  }
  result.rank = rank_exact(m, options.parallel);
  result.certification = Certification::Exact;
  return result;
}

namespace reference {

std::size_t rank_modular_dense(const SparseIntMatrix& m, std::uint64_t p) {
  check_modulus(p);
  std::vector<std::uint32_t> dense(static_cast<std::size_t>(m.rows()) * static_cast<std::size_t>(m.cols()), 0);
  for (const auto& e : m.entries()) {
    dense[static_cast<std::size_t>(e.row) * static_cast<std::size_t>(m.cols()) + static_cast<std::size_t>(e.col)] =
        reduce_mod(e.value, p);
  }
  return dense_rank_mod_p(dense, m.rows(), m.cols(), static_cast<std::uint32_t>(p), false);
}

}  // namespace reference

}  // namespace wlp

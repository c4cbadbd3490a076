#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wlp/ideal.hpp"

namespace wlp {

/// Values HF(0), ..., HF(D) of an artinian quotient, D the socle degree.
class HilbertTable {
 public:
  HilbertTable() = default;
  /// Trailing zeros are dropped.
  explicit HilbertTable(std::vector<std::int64_t> values);

  const std::vector<std::int64_t>& values() const { return values_; }
  /// HF(i), with HF(i) = 0 outside [0, D] (in particular HF(-1) = 0).
  std::int64_t at(int i) const;
  int socle_degree() const { return static_cast<int>(values_.size()) - 1; }
  std::int64_t total() const;

  friend bool operator==(const HilbertTable&, const HilbertTable&) = default;

 private:
  std::vector<std::int64_t> values_;
};

/// dim (S/I)_i by counting standard monomials.
std::int64_t hilbert_function(const MonomialIdeal& ideal, int i);
/// Throws DomainError for non-artinian ideals.
HilbertTable hilbert_table(const MonomialIdeal& ideal);

/// `1+3T+6T^2+...`
std::string hilbert_series_string(const HilbertTable& table);
std::string hilbert_series_string(const MonomialIdeal& ideal);

/// Degrees i with HF(i-1) < HF(i) > HF(i+1).
std::vector<int> isolated_peaks(const HilbertTable& table);

/// Hilbert function of a tensor product.
HilbertTable convolve(const HilbertTable& a, const HilbertTable& b);

// Closed-form bounds for equigenerated monomial ideals in n variables of degree d.

/// Exact binomial coefficient; 0 when k < 0 or k > n. Throws on int64 overflow.
std::int64_t binomial(std::int64_t n, std::int64_t k);
/// HF(S, d) - HF(S, d-1) = C(n+d-2, d).
std::int64_t delta(int n, int d);
/// Smallest generator count for which a failing ideal exists (n >= 3, d >= 2).
std::int64_t alpha(int n, int d);
/// Largest such count.
std::int64_t beta(int n, int d);
/// Generator count of the injectivity family; throws DomainError for (3,2),
/// where the WLP is forced.
std::int64_t nu(int n, int d);

/// Integer interval with a finite exclusion set.
struct IntegerSet {
  std::int64_t lo = 1;
  std::int64_t hi = 0;
  std::vector<std::int64_t> exclusions;

  bool empty() const { return size() == 0; }
  bool contains(std::int64_t v) const;
  std::int64_t size() const;
  std::vector<std::int64_t> elements() const;
  /// `{8,9,11..17}`; `{}` when empty.
  std::string to_string() const;
};

/// The exact set of generator counts admitting a failing ideal.
IntegerSet sigma(int n, int d);
/// Quadratic target set for n >= 4.
IntegerSet omega(int n);

}  // namespace wlp

#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace wlp {

inline constexpr int kMaxVariables = 16;
inline constexpr int kMaxExponent = 255;

/// Monomial x_1^{a_1} ... x_n^{a_n} stored as a dense exponent vector.
///
/// The variable count is part of the value: two monomials with different
/// ambient n never compare equal. The degree is cached and always equals
/// the exponent sum.
class Monomial {
 public:
  Monomial() = default;

  /// The constant monomial 1 in `num_vars` variables.
  explicit Monomial(int num_vars);
  explicit Monomial(std::span<const int> exponents);
  Monomial(std::initializer_list<int> exponents);

  static Monomial variable(int num_vars, int index);
  static Monomial pure_power(int num_vars, int index, int exponent);

  int num_vars() const { return n_; }
  int degree() const { return degree_; }
  int operator[](int i) const { return exps_[static_cast<std::size_t>(i)]; }
  std::vector<int> exponents() const;

  /// Number of variables with a positive exponent.
  int support_size() const;
  /// Index of the single variable if this is a pure power x_i^k (k >= 1).
  std::optional<int> pure_power_index() const;

  bool divides(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;
  /// this / divisor, or nullopt when divisor does not divide this.
  std::optional<Monomial> quotient(const Monomial& divisor) const;

  Monomial times_variable(int index) const;
  /// Same exponents placed in a ring with `num_vars` >= n variables,
  /// starting at variable `offset`.
  Monomial embedded(int num_vars, int offset = 0) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;

  std::size_t hash() const;

 private:
  void check_ring(const Monomial& other) const;

  std::array<std::uint8_t, kMaxVariables> exps_{};
  std::uint8_t n_ = 0;
  std::uint16_t degree_ = 0;
};

/// Graded reverse lexicographic order with x1 > x2 > ... > xn.
bool grevlex_greater(const Monomial& a, const Monomial& b);

/// Strict weak ordering placing grevlex-larger monomials first. This is the
/// canonical order used for every basis and generator list in the library.
struct CanonicalOrder {
  bool operator()(const Monomial& a, const Monomial& b) const { return grevlex_greater(a, b); }
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

/// Relabels variables: exponent of x_i moves to x_{sigma[i]} (0-based).
Monomial permute(const Monomial& m, std::span<const int> sigma);

/// Calls `visit` for every monomial of the given degree whose exponent on
/// variable i is at most bounds[i], in canonical order.
void for_each_bounded_monomial(int num_vars, int degree, std::span<const int> bounds,
                               const std::function<void(const Monomial&)>& visit);

/// All C(n+i-1, i) monomials of degree i in canonical order.
std::vector<Monomial> enumerate_monomials(int num_vars, int degree);

/// Text form `x1^3*x2`; the constant monomial prints as `1`.
std::string to_string(const Monomial& m, char var = 'x');

}  // namespace wlp

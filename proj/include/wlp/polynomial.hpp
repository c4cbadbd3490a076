#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <span>
#include <string>

#include "wlp/monomial.hpp"

namespace wlp {

/// Polynomial with exact rational coefficients. Used both for primal
/// elements of S = k[x1..xn] and for dual elements of R = k[X1..Xn], on
/// which S acts by differentiation. Zero coefficients are never stored.
class Polynomial {
 public:
  using Terms = std::map<Monomial, mpq_class, CanonicalOrder>;

  explicit Polynomial(int num_vars = 0);

  static Polynomial constant(int num_vars, const mpq_class& c);
  static Polynomial variable(int num_vars, int index);
  static Polynomial term(const Monomial& m, const mpq_class& c = 1);
  /// X_i - X_j
  static Polynomial difference(int num_vars, int i, int j);

  int num_vars() const { return n_; }
  const Terms& terms() const { return terms_; }
  std::size_t num_terms() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_homogeneous() const;
  /// Common degree of a nonzero homogeneous polynomial; throws std::logic_error otherwise.
  int degree() const;
  mpq_class coefficient(const Monomial& m) const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const mpq_class& c);
  Polynomial operator-() const;
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const mpq_class& c) { return a *= c; }
  friend Polynomial operator*(const mpq_class& c, Polynomial a) { return a *= c; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial pow(int k) const;

  /// m o F: apply the differential operator m(d/dX1, ..., d/dXn).
  Polynomial differentiate(const Monomial& m) const;
  /// l o F with l = x1+...+xn, i.e. the sum of all first partials.
  Polynomial apply_ell() const;
  /// l * f, ordinary multiplication by x1+...+xn.
  Polynomial times_ell() const;

  /// Variable i goes to variable sigma[i].
  Polynomial permuted(std::span<const int> sigma) const;
  /// Interchange variables i and j (0-based).
  Polynomial swapped(int i, int j) const;
  /// Same polynomial in a ring with more variables, shifted by `offset`.
  Polynomial embedded(int num_vars, int offset = 0) const;

  /// `3*X1^2*X2 - 1/2*X3`; `0` for the zero polynomial.
  std::string to_string(char var = 'X') const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);

 private:
  void add_term(const Monomial& m, const mpq_class& c);

  int n_ = 0;
  Terms terms_;
};

using DualPolynomial = Polynomial;

}  // namespace wlp

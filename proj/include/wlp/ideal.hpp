#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "wlp/monomial.hpp"

namespace wlp {

/// Raised for mathematically invalid requests: non-artinian input, a
/// generator count outside a family's range, a forced-WLP case.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Monomial ideal given by its minimal generators.
///
/// The public factories build equigenerated ideals, which is the setting of
/// every construction and verification in the library. Distinct monomials of
/// one degree never divide each other, so a duplicate-free equigenerated list
/// is automatically minimal and mu(I) = |generators|. `general` exists for
/// colon ideals and sums with variables, which are mixed-degree; it removes
/// non-minimal generators.
class MonomialIdeal {
 public:
  MonomialIdeal() = default;

  /// Throws std::invalid_argument on mixed degrees, duplicates, an empty
  /// list, degree 0, or generators living in the wrong ring.
  static MonomialIdeal equigenerated(int num_vars, std::vector<Monomial> generators);
  static MonomialIdeal general(int num_vars, std::vector<Monomial> generators);

  int num_vars() const { return n_; }
  /// Common generator degree, or nullopt for a mixed-degree ideal.
  std::optional<int> generation_degree() const { return degree_; }
  /// Common generator degree; throws std::logic_error for mixed-degree ideals.
  int degree() const;
  bool is_equigenerated() const { return degree_.has_value(); }

  /// Minimal generators in canonical order.
  const std::vector<Monomial>& generators() const { return generators_; }
  std::size_t num_generators() const { return generators_.size(); }

  bool contains(const Monomial& m) const;
  /// True iff every variable has a pure power among the generators.
  bool is_artinian() const;
  /// For each variable, the largest exponent that survives in S/I (pure
  /// power exponent minus one), or nullopt where no pure power exists.
  std::vector<std::optional<int>> exponent_bounds() const;
  /// Upper bound for the socle degree of an artinian quotient.
  int top_degree_bound() const;

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

 private:
  int n_ = 0;
  std::optional<int> degree_;
  std::vector<Monomial> generators_;
};

/// Standard monomial basis of (S/I)_degree.
struct DegreeBasis {
  int degree = 0;
  std::vector<Monomial> monomials;
};

DegreeBasis quotient_basis(const MonomialIdeal& ideal, int degree);

MonomialIdeal permute_ideal(const MonomialIdeal& ideal, std::span<const int> sigma);

/// Lexicographically smallest generator list over all variable permutations,
/// comparing canonically sorted lists position by position in canonical
/// monomial order. Brute force over n! permutations; refuses n > 8.
MonomialIdeal canonical_form(const MonomialIdeal& ideal);

/// I + J for ideals in the same ring.
MonomialIdeal ideal_sum(const MonomialIdeal& a, const MonomialIdeal& b);
/// I : m for a monomial m.
MonomialIdeal colon(const MonomialIdeal& ideal, const Monomial& m);

/// Pure powers x_1^d, ..., x_n^d.
std::vector<Monomial> pure_powers(int num_vars, int degree);

/// Ideal text format: comma separated monomials such as `x1^3,x2*x3^2`.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& message, std::size_t position);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Parses an equigenerated ideal. The ring size is `num_vars` when given,
/// otherwise the largest variable index that occurs. Mixed degrees are
/// rejected with a ParseError.
MonomialIdeal parse_ideal(const std::string& text, std::optional<int> num_vars = std::nullopt);
std::string format_ideal(const MonomialIdeal& ideal);

}  // namespace wlp

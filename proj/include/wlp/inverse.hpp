#pragma once

#include <span>
#include <vector>

#include "wlp/ideal.hpp"
#include "wlp/linalg.hpp"
#include "wlp/polynomial.hpp"

namespace wlp {

/// True iff g o F = 0 for every generator g of I, and also l o F = 0 when
/// `with_ell` is set (membership in the inverse system of I + (l)).
bool in_inverse_system(const MonomialIdeal& ideal, const DualPolynomial& f, bool with_ell = false);

/// Basis convention for (I^-1)_j: plain monomials X^a or divided powers
/// X^a / a!. Both are indexed by the standard monomials of (S/I)_j.
enum class DualBasis { Monomial, DividedPower };

/// Matrix of F -> l o F from (I^-1)_j to (I^-1)_{j-1}, built by
/// differentiating basis elements. Rows index degree j-1, columns degree j.
/// In the divided-power basis it is the transpose of the multiplication map
/// from degree j-1 to j; in the monomial basis it is a rescaling of it.
SparseIntMatrix differentiation_matrix(const MonomialIdeal& ideal, int j, DualBasis basis = DualBasis::Monomial);

/// Basis of the kernel of l o - on (I^-1)_i, from an exact rational nullspace.
std::vector<DualPolynomial> inverse_kernel_basis(const MonomialIdeal& ideal, int i);

/// Basis of the kernel of x l : (S/I)_i -> (S/I)_{i+1}, each element written
/// in standard monomials.
std::vector<Polynomial> primal_kernel_basis(const MonomialIdeal& ideal, int i);

/// Drops the terms lying in I.
Polynomial reduce_modulo(const MonomialIdeal& ideal, const Polynomial& f);
/// True iff l * f lies in I.
bool primal_kernel_check(const MonomialIdeal& ideal, const Polynomial& f);
/// True iff f has a term outside I.
bool nonzero_in_quotient(const MonomialIdeal& ideal, const Polynomial& f);

/// Dimension of the rational span of the given polynomials.
std::size_t polynomial_rank(std::span<const Polynomial> polys);

}  // namespace wlp

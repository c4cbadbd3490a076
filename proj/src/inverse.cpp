#include "wlp/inverse.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "wlp/engine.hpp"

namespace wlp {

bool in_inverse_system(const MonomialIdeal& ideal, const DualPolynomial& f, bool with_ell) {
  if (f.num_vars() != ideal.num_vars()) throw std::invalid_argument("in_inverse_system: rings differ");
  for (const auto& g : ideal.generators()) {
    if (!f.differentiate(g).is_zero()) return false;
  }
  return !with_ell || f.apply_ell().is_zero();
}

SparseIntMatrix differentiation_matrix(const MonomialIdeal& ideal, int j, DualBasis basis) {
  const DegreeBasis source = quotient_basis(ideal, j);
  const DegreeBasis target = quotient_basis(ideal, j - 1);
  const auto& tgt = target.monomials;
  std::vector<MatrixEntry> entries;
  for (std::size_t c = 0; c < source.monomials.size(); ++c) {
    const Monomial& a = source.monomials[c];
    const Polynomial image = Polynomial::term(a).apply_ell();
    for (const auto& [m, coeff] : image.terms()) {
      auto it = std::lower_bound(tgt.begin(), tgt.end(), m, CanonicalOrder{});
      if (it == tgt.end() || !(*it == m)) {
        throw std::logic_error("differentiation_matrix: derivative left the inverse system");
      }
      // X^[a] = X^a / a!, so d/dX_k X^[a] = X^[a - e_k] with coefficient 1.
      const std::int64_t value = basis == DualBasis::DividedPower ? 1 : coeff.get_num().get_si();
      entries.push_back({static_cast<int>(it - tgt.begin()), static_cast<int>(c), value});
    }
  }
  return SparseIntMatrix(static_cast<int>(tgt.size()), static_cast<int>(source.monomials.size()), std::move(entries));
}

namespace {

using RationalRow = std::vector<mpq_class>;

// Reduced row echelon form in place; returns pivot columns.
std::vector<int> rref(std::vector<RationalRow>& rows, int cols) {
  std::vector<int> pivots;
  std::size_t r = 0;
  for (int c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][static_cast<std::size_t>(c)] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    const mpq_class inv = 1 / rows[r][static_cast<std::size_t>(c)];
    for (auto& v : rows[r]) v *= inv;
    for (std::size_t k = 0; k < rows.size(); ++k) {
      if (k == r || rows[k][static_cast<std::size_t>(c)] == 0) continue;
      const mpq_class factor = rows[k][static_cast<std::size_t>(c)];
      for (int j = c; j < cols; ++j) rows[k][static_cast<std::size_t>(j)] -= factor * rows[r][static_cast<std::size_t>(j)];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::vector<RationalRow> nullspace(const SparseIntMatrix& m) {
  std::vector<RationalRow> rows(static_cast<std::size_t>(m.rows()), RationalRow(static_cast<std::size_t>(m.cols())));
  for (const auto& e : m.entries()) {
    rows[static_cast<std::size_t>(e.row)][static_cast<std::size_t>(e.col)] = mpq_class(static_cast<long>(e.value));
  }
  const auto pivots = rref(rows, m.cols());
  std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
  for (int c : pivots) is_pivot[static_cast<std::size_t>(c)] = true;
  std::vector<RationalRow> basis;
  for (int free = 0; free < m.cols(); ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    RationalRow v(static_cast<std::size_t>(m.cols()));
    v[static_cast<std::size_t>(free)] = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k) {
      v[static_cast<std::size_t>(pivots[k])] = -rows[k][static_cast<std::size_t>(free)];
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

Polynomial combine(const std::vector<Monomial>& basis, const RationalRow& coeffs) {
  Polynomial p(basis.empty() ? 0 : basis.front().num_vars());
  for (std::size_t k = 0; k < basis.size(); ++k) {
    if (coeffs[k] != 0) p += Polynomial::term(basis[k], coeffs[k]);
  }
  return p;
}

}  // namespace

std::vector<DualPolynomial> inverse_kernel_basis(const MonomialIdeal& ideal, int i) {
  if (!ideal.is_artinian()) throw DomainError("inverse_kernel_basis: ideal is not artinian");
  const DegreeBasis basis = quotient_basis(ideal, i);
  std::vector<DualPolynomial> out;
  if (basis.monomials.empty()) return out;
  for (const auto& v : nullspace(differentiation_matrix(ideal, i))) out.push_back(combine(basis.monomials, v));
  return out;
}

std::vector<Polynomial> primal_kernel_basis(const MonomialIdeal& ideal, int i) {
  if (!ideal.is_artinian()) throw DomainError("primal_kernel_basis: ideal is not artinian");
  const DegreeBasis source = quotient_basis(ideal, i);
  std::vector<Polynomial> out;
  if (source.monomials.empty()) return out;
  const SparseIntMatrix m = mult_map_matrix(source, quotient_basis(ideal, i + 1));
  for (const auto& v : nullspace(m)) out.push_back(combine(source.monomials, v));
  return out;
}

Polynomial reduce_modulo(const MonomialIdeal& ideal, const Polynomial& f) {
  Polynomial r(f.num_vars());
  for (const auto& [m, c] : f.terms()) {
    if (!ideal.contains(m)) r += Polynomial::term(m, c);
  }
  return r;
}

bool primal_kernel_check(const MonomialIdeal& ideal, const Polynomial& f) {
  if (f.num_vars() != ideal.num_vars()) throw std::invalid_argument("primal_kernel_check: rings differ");
  return reduce_modulo(ideal, f.times_ell()).is_zero();
}

bool nonzero_in_quotient(const MonomialIdeal& ideal, const Polynomial& f) {
  return !reduce_modulo(ideal, f).is_zero();
}

std::size_t polynomial_rank(std::span<const Polynomial> polys) {
  std::map<Monomial, int, CanonicalOrder> index;
  for (const auto& p : polys) {
    for (const auto& [m, c] : p.terms()) index.try_emplace(m, 0);
  }
  int next = 0;
  for (auto& [m, k] : index) k = next++;
  std::vector<RationalRow> rows;
  for (const auto& p : polys) {
    RationalRow row(static_cast<std::size_t>(next));
    for (const auto& [m, c] : p.terms()) row[static_cast<std::size_t>(index[m])] = c;
    rows.push_back(std::move(row));
  }
  return rref(rows, next).size();
}

}  // namespace wlp

#include "wlp/polynomial.hpp"

#include <stdexcept>
#include <vector>

namespace wlp {

Polynomial::Polynomial(int num_vars) : n_(num_vars) {
  if (num_vars < 0 || num_vars > kMaxVariables) throw std::invalid_argument("polynomial: bad variable count");
}

Polynomial Polynomial::constant(int num_vars, const mpq_class& c) {
  Polynomial p(num_vars);
  p.add_term(Monomial(num_vars), c);
  return p;
}

Polynomial Polynomial::variable(int num_vars, int index) {
  return term(Monomial::variable(num_vars, index));
}

Polynomial Polynomial::term(const Monomial& m, const mpq_class& c) {
  Polynomial p(m.num_vars());
  p.add_term(m, c);
  return p;
}

Polynomial Polynomial::difference(int num_vars, int i, int j) {
  return variable(num_vars, i) - variable(num_vars, j);
}

void Polynomial::add_term(const Monomial& m, const mpq_class& c) {
  if (c == 0) return;
  if (m.num_vars() != n_) throw std::invalid_argument("polynomial: term in the wrong ring");
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  const int d = terms_.begin()->first.degree();
  for (const auto& [m, c] : terms_) {
    if (m.degree() != d) return false;
  }
  return true;
}

int Polynomial::degree() const {
  if (terms_.empty() || !is_homogeneous()) throw std::logic_error("polynomial: degree of a zero or inhomogeneous polynomial");
  return terms_.begin()->first.degree();
}

mpq_class Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? mpq_class(0) : it->second;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  if (other.n_ != n_) throw std::invalid_argument("polynomial: rings differ");
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  if (other.n_ != n_) throw std::invalid_argument("polynomial: rings differ");
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const mpq_class& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& [m, v] : r.terms_) v = -v;
  return r;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("polynomial: rings differ");
  Polynomial r(a.n_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
  }
  return r;
}

Polynomial Polynomial::pow(int k) const {
  if (k < 0) throw std::invalid_argument("polynomial: negative power");
  Polynomial result = constant(n_, 1);
  Polynomial base = *this;
  while (k > 0) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

Polynomial Polynomial::differentiate(const Monomial& m) const {
  if (m.num_vars() != n_) throw std::invalid_argument("differentiate: operator in the wrong ring");
  Polynomial r(n_);
  for (const auto& [t, c] : terms_) {
    auto q = t.quotient(m);
    if (!q) continue;
    // d^k/dX^k X^a = a!/(a-k)! X^(a-k)
    mpz_class factor = 1;
    for (int i = 0; i < n_; ++i) {
      for (int e = t[i]; e > t[i] - m[i]; --e) factor *= e;
    }
    r.add_term(*q, c * mpq_class(factor));
  }
  return r;
}

Polynomial Polynomial::apply_ell() const {
  Polynomial r(n_);
  for (int i = 0; i < n_; ++i) r += differentiate(Monomial::variable(n_, i));
  return r;
}

Polynomial Polynomial::times_ell() const {
  Polynomial r(n_);
  for (const auto& [t, c] : terms_) {
    for (int i = 0; i < n_; ++i) r.add_term(t.times_variable(i), c);
  }
  return r;
}

Polynomial Polynomial::permuted(std::span<const int> sigma) const {
  Polynomial r(n_);
  for (const auto& [t, c] : terms_) r.add_term(permute(t, sigma), c);
  return r;
}

Polynomial Polynomial::swapped(int i, int j) const {
  std::vector<int> sigma(static_cast<std::size_t>(n_));
  for (int k = 0; k < n_; ++k) sigma[static_cast<std::size_t>(k)] = k;
  std::swap(sigma.at(static_cast<std::size_t>(i)), sigma.at(static_cast<std::size_t>(j)));
  return permuted(sigma);
}

Polynomial Polynomial::embedded(int num_vars, int offset) const {
  Polynomial r(num_vars);
  for (const auto& [t, c] : terms_) r.add_term(t.embedded(num_vars, offset), c);
  return r;
}

std::string Polynomial::to_string(char var) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [t, c] : terms_) {
    mpq_class mag = abs(c);
    if (out.empty()) {
      if (c < 0) out += '-';
    } else {
      out += c < 0 ? " - " : " + ";
    }
    const bool constant_term = t.degree() == 0;
    if (mag != 1 || constant_term) {
      out += mag.get_str();
      if (!constant_term) out += '*';
    }
    if (!constant_term) out += wlp::to_string(t, var);
  }
  return out;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.n_ != b.n_ || a.terms_.size() != b.terms_.size()) return false;
  auto ia = a.terms_.begin();
  for (auto ib = b.terms_.begin(); ib != b.terms_.end(); ++ia, ++ib) {
    if (!(ia->first == ib->first) || ia->second != ib->second) return false;
  }
  return true;
}

}  // namespace wlp

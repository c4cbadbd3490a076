#include "wlp/monomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace wlp {

namespace {

void check_num_vars(int n) {
  if (n < 0 || n > kMaxVariables) {
    throw std::invalid_argument("monomial: variable count " + std::to_string(n) +
                                " outside [0, " + std::to_string(kMaxVariables) + "]");
  }
}

std::uint8_t checked_exponent(long value) {
  if (value < 0 || value > kMaxExponent) {
    throw std::overflow_error("monomial: exponent " + std::to_string(value) + " out of range");
  }
  return static_cast<std::uint8_t>(value);
}

}  // namespace

Monomial::Monomial(int num_vars) {
  check_num_vars(num_vars);
  n_ = static_cast<std::uint8_t>(num_vars);
}

Monomial::Monomial(std::span<const int> exponents) {
  check_num_vars(static_cast<int>(exponents.size()));
  n_ = static_cast<std::uint8_t>(exponents.size());
  int deg = 0;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    exps_[i] = checked_exponent(exponents[i]);
    deg += exponents[i];
  }
  degree_ = static_cast<std::uint16_t>(deg);
}

Monomial::Monomial(std::initializer_list<int> exponents)
    : Monomial(std::span<const int>(exponents.begin(), exponents.size())) {}

Monomial Monomial::variable(int num_vars, int index) { return pure_power(num_vars, index, 1); }

Monomial Monomial::pure_power(int num_vars, int index, int exponent) {
  Monomial m(num_vars);
  if (index < 0 || index >= num_vars) throw std::out_of_range("monomial: variable index out of range");
  m.exps_[static_cast<std::size_t>(index)] = checked_exponent(exponent);
  m.degree_ = static_cast<std::uint16_t>(exponent);
  return m;
}

std::vector<int> Monomial::exponents() const { return {exps_.begin(), exps_.begin() + n_}; }

int Monomial::support_size() const {
  int count = 0;
  for (int i = 0; i < n_; ++i) count += exps_[i] > 0 ? 1 : 0;
  return count;
}

std::optional<int> Monomial::pure_power_index() const {
  if (degree_ == 0 || support_size() != 1) return std::nullopt;
  for (int i = 0; i < n_; ++i) {
    if (exps_[i] > 0) return i;
  }
  return std::nullopt;
}

void Monomial::check_ring(const Monomial& other) const {
  if (n_ != other.n_) throw std::invalid_argument("monomial: variable counts differ");
}

bool Monomial::divides(const Monomial& other) const {
  check_ring(other);
  if (degree_ > other.degree_) return false;
  bool ok = true;
  for (int i = 0; i < kMaxVariables; ++i) ok &= exps_[i] <= other.exps_[i];
  return ok;
}

Monomial Monomial::operator*(const Monomial& other) const {
  check_ring(other);
  Monomial r(n_);
  for (int i = 0; i < n_; ++i) r.exps_[i] = checked_exponent(long{exps_[i]} + other.exps_[i]);
  r.degree_ = static_cast<std::uint16_t>(degree_ + other.degree_);
  return r;
}

Monomial Monomial::lcm(const Monomial& other) const {
  check_ring(other);
  Monomial r(n_);
  int deg = 0;
  for (int i = 0; i < n_; ++i) {
    r.exps_[i] = std::max(exps_[i], other.exps_[i]);
    deg += r.exps_[i];
  }
  r.degree_ = static_cast<std::uint16_t>(deg);
  return r;
}

std::optional<Monomial> Monomial::quotient(const Monomial& divisor) const {
  if (!divisor.divides(*this)) return std::nullopt;
  Monomial r(n_);
  for (int i = 0; i < n_; ++i) r.exps_[i] = static_cast<std::uint8_t>(exps_[i] - divisor.exps_[i]);
  r.degree_ = static_cast<std::uint16_t>(degree_ - divisor.degree_);
  return r;
}

Monomial Monomial::times_variable(int index) const {
  Monomial r = *this;
  r.exps_[static_cast<std::size_t>(index)] = checked_exponent(long{exps_[index]} + 1);
  ++r.degree_;
  return r;
}

Monomial Monomial::embedded(int num_vars, int offset) const {
  if (offset < 0 || offset + n_ > num_vars) throw std::invalid_argument("monomial: embedding does not fit");
  Monomial r(num_vars);
  for (int i = 0; i < n_; ++i) r.exps_[static_cast<std::size_t>(offset + i)] = exps_[i];
  r.degree_ = degree_;
  return r;
}

std::size_t Monomial::hash() const {
  std::size_t h = 1469598103934665603ull ^ n_;
  for (int i = 0; i < n_; ++i) {
    h ^= exps_[i];
    h *= 1099511628211ull;
  }
  return h;
}

bool grevlex_greater(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() > b.degree();
  for (int i = a.num_vars() - 1; i >= 0; --i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

Monomial permute(const Monomial& m, std::span<const int> sigma) {
  if (static_cast<int>(sigma.size()) != m.num_vars()) {
    throw std::invalid_argument("permute: permutation size differs from variable count");
  }
  std::vector<int> out(sigma.size(), 0);
  for (std::size_t i = 0; i < sigma.size(); ++i) out[static_cast<std::size_t>(sigma[i])] = m[static_cast<int>(i)];
  return Monomial(std::span<const int>(out));
}

namespace {

// Fills exponents from the last variable down; ascending exponents on the
// last variable first produce grevlex-descending output.
void bounded_rec(int var, int remaining, std::vector<int>& exps, std::span<const int> bounds,
                 std::span<const int> capacity, const std::function<void(const Monomial&)>& visit) {
  if (var == 0) {
    if (remaining <= bounds[0]) {
      exps[0] = remaining;
      visit(Monomial(std::span<const int>(exps)));
    }
    return;
  }
  const int hi = std::min(remaining, bounds[static_cast<std::size_t>(var)]);
  for (int e = 0; e <= hi; ++e) {
    // capacity[var - 1] = max degree absorbable by variables 0..var-1
    if (remaining - e > capacity[static_cast<std::size_t>(var - 1)]) continue;
    exps[static_cast<std::size_t>(var)] = e;
    bounded_rec(var - 1, remaining - e, exps, bounds, capacity, visit);
  }
  exps[static_cast<std::size_t>(var)] = 0;
}

}  // namespace

void for_each_bounded_monomial(int num_vars, int degree, std::span<const int> bounds,
                               const std::function<void(const Monomial&)>& visit) {
  check_num_vars(num_vars);
  if (static_cast<int>(bounds.size()) != num_vars) {
    throw std::invalid_argument("for_each_bounded_monomial: bounds size differs from variable count");
  }
  if (degree < 0) return;
  if (num_vars == 0) {
    if (degree == 0) visit(Monomial(0));
    return;
  }
  std::vector<int> capacity(bounds.size());
  long acc = 0;
  for (std::size_t i = 0; i < bounds.size(); ++i) {
    acc += std::max(0, bounds[i]);
    capacity[i] = static_cast<int>(std::min<long>(acc, 1 << 30));
  }
  if (degree > capacity.back()) return;
  std::vector<int> exps(bounds.size(), 0);
  bounded_rec(num_vars - 1, degree, exps, bounds, capacity, visit);
}

std::vector<Monomial> enumerate_monomials(int num_vars, int degree) {
  if (num_vars < 1) throw std::invalid_argument("enumerate_monomials: need at least one variable");
  std::vector<Monomial> out;
  std::vector<int> bounds(static_cast<std::size_t>(num_vars), degree);
  for_each_bounded_monomial(num_vars, degree, bounds, [&](const Monomial& m) { out.push_back(m); });
  return out;
}

std::string to_string(const Monomial& m, char var) {
  if (m.degree() == 0) return "1";
  std::string out;
  for (int i = 0; i < m.num_vars(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += var;
    out += std::to_string(i + 1);
    if (m[i] > 1) {
      out += '^';
      out += std::to_string(m[i]);
    }
  }
  return out;
}

}  // namespace wlp

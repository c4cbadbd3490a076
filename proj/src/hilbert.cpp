#include "wlp/hilbert.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace wlp {

HilbertTable::HilbertTable(std::vector<std::int64_t> values) : values_(std::move(values)) {
  while (!values_.empty() && values_.back() == 0) values_.pop_back();
}

std::int64_t HilbertTable::at(int i) const {
  if (i < 0 || i >= static_cast<int>(values_.size())) return 0;
  return values_[static_cast<std::size_t>(i)];
}

std::int64_t HilbertTable::total() const { return std::accumulate(values_.begin(), values_.end(), std::int64_t{0}); }

std::int64_t hilbert_function(const MonomialIdeal& ideal, int i) {
  if (i < 0) return 0;
  std::vector<int> bounds;
  for (const auto& b : ideal.exponent_bounds()) bounds.push_back(b ? *b : i);
  const auto& gens = ideal.generators();
  std::int64_t count = 0;
  for_each_bounded_monomial(ideal.num_vars(), i, bounds, [&](const Monomial& m) {
    for (const auto& g : gens) {
      if (g.divides(m)) return;
    }
    ++count;
  });
  return count;
}

HilbertTable hilbert_table(const MonomialIdeal& ideal) {
  if (!ideal.is_artinian()) throw DomainError("Hilbert table requested for a non-artinian ideal");
  const int top = ideal.top_degree_bound();
  std::vector<std::int64_t> values;
  for (int i = 0; i <= top; ++i) {
    const std::int64_t v = hilbert_function(ideal, i);
    if (v == 0) break;
    values.push_back(v);
  }
  return HilbertTable(std::move(values));
}

std::string hilbert_series_string(const HilbertTable& table) {
  std::string out;
  for (int i = 0; i <= table.socle_degree(); ++i) {
    const std::int64_t v = table.at(i);
    if (v == 0) continue;
    if (!out.empty()) out += '+';
    if (i == 0) {
      out += std::to_string(v);
      continue;
    }
    if (v != 1) out += std::to_string(v);
    out += 'T';
    if (i > 1) out += '^' + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

std::string hilbert_series_string(const MonomialIdeal& ideal) { return hilbert_series_string(hilbert_table(ideal)); }

std::vector<int> isolated_peaks(const HilbertTable& table) {
  std::vector<int> peaks;
  for (int i = 0; i <= table.socle_degree(); ++i) {
    if (table.at(i - 1) < table.at(i) && table.at(i) > table.at(i + 1)) peaks.push_back(i);
  }
  return peaks;
}

HilbertTable convolve(const HilbertTable& a, const HilbertTable& b) {
  if (a.values().empty() || b.values().empty()) return HilbertTable{};
  std::vector<std::int64_t> out(a.values().size() + b.values().size() - 1, 0);
  for (std::size_t i = 0; i < a.values().size(); ++i) {
    for (std::size_t j = 0; j < b.values().size(); ++j) out[i + j] += a.values()[i] * b.values()[j];
  }
  return HilbertTable(std::move(out));
}

std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  __int128 result = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    result = result * (n - k + i) / i;
    if (result > std::numeric_limits<std::int64_t>::max()) throw std::overflow_error("binomial: overflow");
  }
  return static_cast<std::int64_t>(result);
}

namespace {

void check_range(int n, int d) {
  if (n < 3 || d < 2) {
    throw DomainError("bounds are defined for n >= 3 and d >= 2, got (" + std::to_string(n) + "," +
                      std::to_string(d) + ")");
  }
}

}  // namespace

std::int64_t delta(int n, int d) {
  if (n < 1 || d < 1) throw DomainError("delta: need n >= 1 and d >= 1");
  return binomial(n + d - 2, d);
}

std::int64_t alpha(int n, int d) {
  check_range(n, d);
  if (n == 3) return d % 6 == 3 ? 4 : 5;
  if (d == 2) {
    if (n % 2 == 0) return n + 2;
    return n == 5 ? 9 : n + 3;
  }
  if (n == 4 && d == 3) return 6;
  return n + 1;
}

std::int64_t beta(int n, int d) {
  check_range(n, d);
  const std::int64_t all = binomial(n + d - 1, d);
  if (n == 3) return all - (d % 2 == 1 ? 3 * (d - 1) : 3 * (d - 1) + 1);
  return all - 2 * d;
}

std::int64_t nu(int n, int d) {
  check_range(n, d);
  if (n == 3 && d == 2) throw DomainError("WLP forced for (n,d) = (3,2)");
  if (n == 3 && d == 3) return 4;
  if (n == 4 && d == 2) return 6;
  return 2 * n - 1;
}

bool IntegerSet::contains(std::int64_t v) const {
  return v >= lo && v <= hi && std::find(exclusions.begin(), exclusions.end(), v) == exclusions.end();
}

std::int64_t IntegerSet::size() const {
  if (hi < lo) return 0;
  std::int64_t excluded = 0;
  for (auto e : exclusions) excluded += (e >= lo && e <= hi) ? 1 : 0;
  return hi - lo + 1 - excluded;
}

std::vector<std::int64_t> IntegerSet::elements() const {
  std::vector<std::int64_t> out;
  for (std::int64_t v = lo; v <= hi; ++v) {
    if (contains(v)) out.push_back(v);
  }
  return out;
}

std::string IntegerSet::to_string() const {
  std::string out = "{";
  std::int64_t v = lo;
  bool first = true;
  while (v <= hi) {
    if (!contains(v)) {
      ++v;
      continue;
    }
    std::int64_t end = v;
    while (end + 1 <= hi && contains(end + 1)) ++end;
    const auto piece = [&]() -> std::string {
      if (end == v) return std::to_string(v);
      if (end == v + 1) return std::to_string(v) + "," + std::to_string(end);
      return std::to_string(v) + ".." + std::to_string(end);
    }();
    if (!first) out += ',';
    out += piece;
    first = false;
    v = end + 1;
  }
  return out + "}";
}

IntegerSet sigma(int n, int d) {
  check_range(n, d);
  IntegerSet s{alpha(n, d), beta(n, d), {}};
  if (n == 6 && d == 2) s.exclusions.push_back(10);
  return s;
}

IntegerSet omega(int n) {
  if (n < 4) throw DomainError("omega: need n >= 4");
  const std::int64_t top = delta(n, 2);
  if (n == 4) return {6, top, {}};
  if (n == 5) return {9, top, {}};
  if (n == 6) return {8, top, {10}};
  if (n % 2 == 1) return {n + 3, top, {}};
  return {n + 2, top, {}};
}

}  // namespace wlp

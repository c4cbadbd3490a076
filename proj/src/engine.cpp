#include "wlp/engine.hpp"

#include <algorithm>
#include <stdexcept>

namespace wlp {

std::string to_string(FailureMode mode) {
  switch (mode) {
    case FailureMode::Injectivity:
      return "injectivity";
    case FailureMode::Surjectivity:
      return "surjectivity";
    case FailureMode::BothSidesEqual:
      return "both-sided";
  }
  return "?";
}

bool mode_matches(FailureMode expected, FailureMode observed) {
  return expected == observed || observed == FailureMode::BothSidesEqual;
}

FailureMode classify_failure(const DegreeMapRecord& record) {
  if (record.maximal) throw std::logic_error("classify_failure: map in degree " + std::to_string(record.degree) +
                                             " has maximal rank");
  if (record.dim_source < record.dim_target) return FailureMode::Injectivity;
  if (record.dim_source > record.dim_target) return FailureMode::Surjectivity;
  return FailureMode::BothSidesEqual;
}

std::optional<int> WlpReport::failure_degree() const {
  if (failing_degrees.empty()) return std::nullopt;
  return failing_degrees.front();
}

std::optional<FailureMode> WlpReport::failure_mode() const {
  if (failing_degrees.empty()) return std::nullopt;
  return classify_failure(record(failing_degrees.front()));
}

bool WlpReport::certified() const {
  return std::all_of(records.begin(), records.end(),
                     [](const DegreeMapRecord& r) { return r.certification == Certification::Exact; });
}

SparseIntMatrix mult_map_matrix(const DegreeBasis& source, const DegreeBasis& target) {
  const auto& tgt = target.monomials;
  std::vector<MatrixEntry> entries;
  for (std::size_t c = 0; c < source.monomials.size(); ++c) {
    const Monomial& m = source.monomials[c];
    for (int k = 0; k < m.num_vars(); ++k) {
      const Monomial prod = m.times_variable(k);
      auto it = std::lower_bound(tgt.begin(), tgt.end(), prod, CanonicalOrder{});
      if (it != tgt.end() && *it == prod) {
        entries.push_back({static_cast<int>(it - tgt.begin()), static_cast<int>(c), 1});
      }
    }
  }
  return SparseIntMatrix(static_cast<int>(tgt.size()), static_cast<int>(source.monomials.size()), std::move(entries));
}

SparseIntMatrix mult_map_matrix(const MonomialIdeal& ideal, int i) {
  return mult_map_matrix(quotient_basis(ideal, i), quotient_basis(ideal, i + 1));
}

namespace {

DegreeMapRecord record_from_matrix(const SparseIntMatrix& m, int i, const RankOptions& options) {
  DegreeMapRecord rec;
  rec.degree = i;
  rec.dim_source = m.cols();
  rec.dim_target = m.rows();
  rec.expected_rank = std::min(rec.dim_source, rec.dim_target);
  if (rec.expected_rank == 0) {
    rec.rank = 0;
    return rec;
  }
  RankOptions local = options;
  local.seed = mix_seed(options.seed, static_cast<std::uint64_t>(i));
  const RankResult r = rank(m, local);
  rec.rank = static_cast<std::int64_t>(r.rank);
  rec.certification = r.certification;
  rec.maximal = rec.rank == rec.expected_rank;
  return rec;
}

}  // namespace

DegreeMapRecord degree_record(const MonomialIdeal& ideal, int i, const RankOptions& options) {
  return record_from_matrix(mult_map_matrix(ideal, i), i, options);
}

WlpReport wlp_report(const MonomialIdeal& ideal, const RankOptions& options) {
  if (!ideal.is_artinian()) throw DomainError("WLP requested for a non-artinian ideal");
  WlpReport report;
  report.ideal = ideal;
  const int top = ideal.top_degree_bound();
  std::vector<DegreeBasis> bases(static_cast<std::size_t>(top + 2));
#pragma omp parallel for schedule(dynamic) if (options.parallel)
  for (int i = 0; i <= top + 1; ++i) bases[static_cast<std::size_t>(i)] = quotient_basis(ideal, i);

  std::vector<std::int64_t> values;
  for (const auto& b : bases) {
    if (b.monomials.empty()) break;
    values.push_back(static_cast<std::int64_t>(b.monomials.size()));
  }
  report.table = HilbertTable(values);
  const int socle = report.table.socle_degree();
  report.records.resize(static_cast<std::size_t>(socle + 1));
  // Largest matrices first so the dynamic schedule balances.
  std::vector<int> order(static_cast<std::size_t>(socle + 1));
  for (int i = 0; i <= socle; ++i) order[static_cast<std::size_t>(i)] = i;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return report.table.at(a) * report.table.at(a + 1) > report.table.at(b) * report.table.at(b + 1);
  });
#pragma omp parallel for schedule(dynamic) if (options.parallel)
  for (int k = 0; k <= socle; ++k) {
    const int i = order[static_cast<std::size_t>(k)];
    report.records[static_cast<std::size_t>(i)] =
        record_from_matrix(mult_map_matrix(bases[static_cast<std::size_t>(i)], bases[static_cast<std::size_t>(i + 1)]),
                           i, options);
  }
  for (const auto& r : report.records) {
    if (!r.maximal) report.failing_degrees.push_back(r.degree);
  }
  return report;
}

bool has_wlp(const MonomialIdeal& ideal, const RankOptions& options) {
  if (!ideal.is_artinian()) throw DomainError("WLP requested for a non-artinian ideal");
  // Below the smallest generator degree minus one both sides are full
  // polynomial-ring pieces and multiplication by l is injective.
  int low = ideal.top_degree_bound();
  for (const auto& g : ideal.generators()) low = std::min(low, g.degree() - 1);
  DegreeBasis source = quotient_basis(ideal, low);
  while (!source.monomials.empty()) {
    DegreeBasis target = quotient_basis(ideal, source.degree + 1);
    if (target.monomials.empty()) break;
    const auto rec = record_from_matrix(mult_map_matrix(source, target), source.degree, options);
    if (!rec.maximal) return false;
    source = std::move(target);
  }
  return true;
}

HilbertTable lefschetz_quotient_series(const WlpReport& report) {
  std::vector<std::int64_t> values{1};
  for (const auto& r : report.records) values.push_back(r.dim_target - r.rank);
  return HilbertTable(std::move(values));
}

HilbertTable lefschetz_quotient_series(const MonomialIdeal& ideal, const RankOptions& options) {
  return lefschetz_quotient_series(wlp_report(ideal, options));
}

}  // namespace wlp

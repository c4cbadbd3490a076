#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wlp/hilbert.hpp"
#include "wlp/ideal.hpp"
#include "wlp/linalg.hpp"

namespace wlp {

enum class FailureMode { Injectivity, Surjectivity, BothSidesEqual };

std::string to_string(FailureMode mode);
/// A both-sided failure is a failure of injectivity and of surjectivity, so it
/// satisfies either expectation.
bool mode_matches(FailureMode expected, FailureMode observed);

/// Multiplication by l = x1+...+xn from degree i to degree i+1.
struct DegreeMapRecord {
  int degree = 0;
  std::int64_t dim_source = 0;
  std::int64_t dim_target = 0;
  std::int64_t rank = 0;
  std::int64_t expected_rank = 0;
  bool maximal = true;
  Certification certification = Certification::Exact;
};

/// Throws std::logic_error for a maximal record.
FailureMode classify_failure(const DegreeMapRecord& record);

struct WlpReport {
  MonomialIdeal ideal;
  HilbertTable table;
  /// One record per degree 0..socle.
  std::vector<DegreeMapRecord> records;
  std::vector<int> failing_degrees;

  bool has_wlp() const { return failing_degrees.empty(); }
  /// Smallest failing degree.
  std::optional<int> failure_degree() const;
  std::optional<FailureMode> failure_mode() const;
  const DegreeMapRecord& record(int degree) const { return records.at(static_cast<std::size_t>(degree)); }
  /// True iff every record carries an exact certificate.
  bool certified() const;
};

/// Rows index the canonical basis of (S/I)_{i+1}, columns that of (S/I)_i;
/// entry 1 where a column monomial times a variable gives the row monomial.
SparseIntMatrix mult_map_matrix(const DegreeBasis& source, const DegreeBasis& target);
SparseIntMatrix mult_map_matrix(const MonomialIdeal& ideal, int i);

/// Rank record of the map in degree i. The Fast policy seed is mixed with i,
/// so the outcome does not depend on evaluation order.
DegreeMapRecord degree_record(const MonomialIdeal& ideal, int i, const RankOptions& options = {});

/// Scans degrees 0..socle, in parallel across degrees when options.parallel
/// is set. Throws DomainError for non-artinian ideals.
WlpReport wlp_report(const MonomialIdeal& ideal, const RankOptions& options = {});

/// Early-exit decision used by exhaustive searches: stops at the first
/// non-maximal degree and skips degrees where the rank is forced.
bool has_wlp(const MonomialIdeal& ideal, const RankOptions& options = {});

/// Hilbert table of S/(I + (l)): 1 in degree 0, HF(i+1) - rank(i) above.
HilbertTable lefschetz_quotient_series(const WlpReport& report);
HilbertTable lefschetz_quotient_series(const MonomialIdeal& ideal, const RankOptions& options = {});

}  // namespace wlp

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bcay/canon.hpp"
#include "bcay/cells.hpp"
#include "bcay/golden.hpp"
#include "bcay/spectrum.hpp"

namespace bcay {

struct ClassificationRecord {
  std::string group;
  int ell = 0;
  int k = 0;
  int girth = 0;
  bool beta_transitive = false;
  bool beta_regular = false;
  /// nullopt when the regular-subgroup search could not run (Aut too large).
  std::optional<bool> is_cayley;
  std::string cayley_method;
  std::uint64_t aut_order = 0;
  int orbit_count = 0;
  SpectrumSummary spectrum;
  CellFamily family;
  CanonicalCertificate certificate;
};

/// Full classification of one bcay-valid, connected, non-trivial family.
ClassificationRecord classify(const CellFamily& f);

/// Deterministic record order: k, ell, girth, |Aut|, orbits, certificate.
bool record_less(const ClassificationRecord& a, const ClassificationRecord& b);

struct EnumerationOptions {
  double budget_seconds = 300.0;
  int workers = 1;
};

struct EnumerationReport {
  std::string group;
  std::vector<ClassificationRecord> records;
  int count = 0;
  bool complete = true;  // false when the budget ran out; records are partial
  std::size_t families = 0;      // valid non-trivial connected families seen
  std::size_t orbit_reps = 0;    // after the Aut(G) pre-screen
  double seconds = 0.0;
};

/// All BCay(G, pi) with ell >= 2, k >= 3 and S(pi) generating G, one per
/// isomorphism class, classified and sorted by record_less.
EnumerationReport enumerate_group(const GroupPtr& group, const EnumerationOptions& options = {});

/// Every valid non-trivial connected family, before any deduplication,
/// in search order. Intended for cross-checks.
std::vector<CellFamily> enumerate_families(const GroupPtr& group);

/// Whether a record has the row's parameters (girth only when the row has one).
bool record_matches(const ClassificationRecord& r, const GoldenRow& row);
/// "(ell,k,girth,Yes,aut,orbits)"; girth omitted when absent.
std::string format_row(const GoldenRow& row);
std::string format_record(const ClassificationRecord& r, bool with_girth);

struct GroupComparison {
  std::string group;
  int count = 0;
  std::optional<int> expected_count;
  bool rows_checked = false;
  std::vector<GoldenRow> missing;                 // published rows without a record
  std::vector<const ClassificationRecord*> extra; // records matching no published row

  [[nodiscard]] bool count_ok() const { return !expected_count || *expected_count == count; }
  [[nodiscard]] bool rows_ok() const { return missing.empty() && extra.empty(); }
};

/// Multiset comparison of a report with published data; rows are only
/// compared when `rows` is non-empty.
GroupComparison compare_report(const EnumerationReport& report, std::optional<int> expected_count,
                               const std::vector<GoldenRow>& rows);

}  // namespace bcay

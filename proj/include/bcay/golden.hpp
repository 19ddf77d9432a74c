#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace bcay {

/// Published count of non-trivial graphs for one group.
struct GoldenCount {
  std::string group;  // catalog name
  int order = 0;
  int count = 0;
};

/// One published classification row.
struct GoldenRow {
  std::string group;  // catalog name the row is compared against
  int table = 0;      // 2 cyclic, 3 abelian non-cyclic, 4 non-abelian
  int ell = 0;
  int k = 0;
  std::optional<int> girth;  // only the non-abelian table lists girth
  bool cayley = false;
  std::uint64_t aut_order = 0;
  int orbits = 0;
  /// The row is printed under a different group name in the source table.
  std::optional<std::string> printed_as;
};

const std::vector<GoldenCount>& golden_counts();
const std::vector<GoldenRow>& golden_rows();
std::vector<GoldenRow> golden_rows_for(const std::string& group);
std::optional<int> golden_count_for(const std::string& group);

/// Groups whose published count and published rows disagree or whose rows
/// are assigned to a group other than the printed one.
struct GoldenNote {
  std::string group;
  std::string note;
};
const std::vector<GoldenNote>& golden_notes();

/// Z8xZ2 and Z8:Z2: their individual counts are not asserted, only the sum.
bool count_quarantined(const std::string& group);
inline constexpr int kQuarantinedPairTotal = 3;

}  // namespace bcay

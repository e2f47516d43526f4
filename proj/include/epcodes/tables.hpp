#pragma once

// Published classification tables, embedded as text fixtures, and their
// recomputation.
//
// Fixture grammar, one directive per line (`#` starts a comment):
//   table <id>
//   caption <text>
//   p <prime>
//   kind lcd-count | lcd-distance | mds-amds-lcd | left-self-dual | self-dual
//   count n=<n> <N>                          (lcd-count)
//   dist n=<n> <N_1> <N_2> ...               (lcd-distance, `-` for an empty cell)
//   code n=<n> d=<d> MDS|AMDS                (then matrix rows, then `end`)
//   variant <label>                          (a corrected matrix for the previous code, then `end`)

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "epcodes/classify.hpp"
#include "epcodes/ep_code.hpp"

namespace epc {

struct FixtureText {
  const char* name;
  const char* text;
};

/// Generated at build time from data/tables.
const std::vector<FixtureText>& fixture_texts();

enum class TableKind { LcdCount, LcdDistance, MdsAmdsLcd, LeftSelfDual, SelfDual };

struct CountRow {
  std::size_t n;
  std::uint64_t total;
};

struct DistanceRow {
  std::size_t n;
  std::vector<std::optional<std::uint64_t>> cells;  // cells[d-1]; nullopt for `-`
};

struct MatrixVariant {
  std::string label;
  EpGenMatrix matrix;
};

struct PrintedCode {
  std::size_t n;
  std::size_t d;
  MdsStatus status;
  EpGenMatrix matrix;
  std::size_t index;  // 1-based position within its length block
  std::vector<MatrixVariant> variants;

  [[nodiscard]] std::string label() const;
};

struct PaperTable {
  int id = 0;
  std::string caption;
  unsigned p = 0;
  TableKind kind = TableKind::LcdCount;
  std::vector<CountRow> counts;
  std::vector<DistanceRow> distances;
  std::vector<PrintedCode> codes;
};

/// Throws ParseError with the fixture line on malformed input.
[[nodiscard]] PaperTable parse_table_fixture(std::string_view text);
[[nodiscard]] std::vector<int> table_ids();
/// Throws std::out_of_range for an unknown id.
[[nodiscard]] const PaperTable& paper_table(int id);

enum class Verdict { Confirmed, Discrepancy, Skipped };
[[nodiscard]] std::string_view to_string(Verdict v);

struct RowVerdict {
  std::string label;
  Verdict verdict = Verdict::Confirmed;
  std::string detail;
  bool allowlisted = false;
};

struct TableReport {
  int id = 0;
  std::string caption;
  std::vector<RowVerdict> rows;

  [[nodiscard]] std::size_t count(Verdict v) const;
  /// True when no row is a discrepancy, ignoring allowlisted rows unless strict.
  [[nodiscard]] bool passes(bool strict) const;
};

struct VerifyOptions {
  std::optional<std::size_t> max_n;  // classification limit; per-table default when unset
  unsigned workers = 1;
  bool force = false;
};

/// Rows printed with a known inconsistency; reported, but tolerated unless strict.
[[nodiscard]] bool is_known_discrepancy(int table, std::string_view label);
/// Default classification limit used by verify_table.
[[nodiscard]] std::size_t default_max_n(int table);

/// Throws std::out_of_range for an unknown id.
[[nodiscard]] TableReport verify_table(int id, const VerifyOptions& opts = {});
[[nodiscard]] std::string format_report(const TableReport& r);

}  // namespace epc

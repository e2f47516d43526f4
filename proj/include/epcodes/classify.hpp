#pragma once

// Exhaustive classification of E_p codes up to monomial equivalence.
//
// Every pipeline enumerates F_p subspaces by pivot pattern, keeps those that
// satisfy the family's predicate, lifts them to E_p codes and merges them by
// canonical key. Nothing here limits n; the budget below is a refusal
// threshold for interactive use and `force` bypasses it.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "epcodes/ep_code.hpp"
#include "epcodes/equiv.hpp"

namespace epc {

enum class ClassKind { Lcd, MdsAmdsLcd, LeftSelfDual, SelfDual };

[[nodiscard]] std::string_view to_string(ClassKind k);
[[nodiscard]] std::optional<ClassKind> parse_class_kind(std::string_view s);

struct CodeFlags {
  bool lcd = false;
  bool left_self_dual = false;
  bool right_self_dual = false;
  bool self_dual = false;
  bool free = false;

  friend bool operator==(const CodeFlags&, const CodeFlags&) = default;
};

struct ClassRecord {
  unsigned p = 0;
  std::size_t n = 0;
  EpGenMatrix representative;
  std::optional<std::size_t> d;
  std::size_t m1 = 0;
  std::size_t m2 = 0;
  CodeFlags flags;
  MdsStatus mds_status = MdsStatus::Neither;
  std::string key;  // hex canonical key, empty when pairwise tests separated the classes

  friend bool operator==(const ClassRecord&, const ClassRecord&) = default;
};

[[nodiscard]] ClassRecord make_record(const EpCode& c, std::string key = {});
/// Rebuilds the representative and recomputes every field.
[[nodiscard]] bool record_matches(const ClassRecord& rec, const CanonicalBudget& budget = {});

/// Subspaces a classification run of this kind enumerates.
[[nodiscard]] std::uint64_t enumeration_size(ClassKind kind, unsigned p, std::size_t n);
/// Runs enumerating more subspaces than this are refused unless forced.
inline constexpr std::uint64_t kEnumerationBudget = 1'000'000;
/// Largest n accepted for this kind without `force`.
[[nodiscard]] std::size_t largest_feasible_n(ClassKind kind, unsigned p);

struct ClassifyOptions {
  unsigned workers = 1;
  bool force = false;
  CanonicalBudget budget{};
};

struct Classification {
  ClassKind kind = ClassKind::Lcd;
  unsigned p = 0;
  std::size_t n = 0;
  std::vector<ClassRecord> classes;
  std::string note;
  bool pairwise_fallback = false;
  bool over_budget = false;

  /// Class counts by minimum distance; the zero code has none and is left out.
  [[nodiscard]] std::map<std::size_t, std::size_t> distance_counts() const;
  [[nodiscard]] std::vector<ClassRecord> mds_amds() const;
};

/// Throws BudgetExceeded when over budget and not forced.
[[nodiscard]] Classification classify(ClassKind kind, unsigned p, std::size_t n, const ClassifyOptions& opts = {});
[[nodiscard]] Classification classify_lcd(unsigned p, std::size_t n, const ClassifyOptions& opts = {});
[[nodiscard]] Classification classify_mds_amds_lcd(unsigned p, std::size_t n, const ClassifyOptions& opts = {});
[[nodiscard]] Classification classify_left_self_dual(unsigned p, std::size_t n, const ClassifyOptions& opts = {});
[[nodiscard]] Classification classify_self_dual(unsigned p, std::size_t n, const ClassifyOptions& opts = {});

struct RightSelfDualReport {
  ClassRecord record;     // t F_p^n
  bool uniqueness_checked = false;
  bool unique = false;    // meaningful when checked
};

/// Uniqueness is checked by exhausting every (R, T) pair when n <= 2.
[[nodiscard]] RightSelfDualReport right_self_dual_report(unsigned p, std::size_t n);

struct LowerBound {
  std::size_t n = 0;
  std::vector<std::uint64_t> phi;  // LCD subspaces of F_3^n per dimension, no deduplication
  std::uint64_t denominator = 0;   // 2^(n-1) n!
  std::uint64_t bound = 0;         // sum of ceil(phi[m] / denominator)
};

[[nodiscard]] LowerBound ternary_lcd_lower_bound(std::size_t n);

/// One JSON object per record; field order is fixed.
[[nodiscard]] std::string record_json(const ClassRecord& rec);
/// One record per line, in class order.
[[nodiscard]] std::string records_jsonl(const Classification& c);
[[nodiscard]] std::string format_text(const Classification& c);

}  // namespace epc

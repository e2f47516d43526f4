#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "epcodes/ep_code.hpp"

namespace epc::cli {

// Process exit statuses. These are part of the command-line contract.
enum ExitCode : int {
  kOk = 0,
  kNegative = 1,       // equiv: inequivalent; verify-tables: unexplained discrepancy
  kUsage = 2,
  kParseError = 3,
  kModulusError = 4,   // p is not a supported prime
  kShapeError = 5,     // ragged rows or header/row length disagreement
  kBudget = 6,         // classification refused without --force
  kMismatch = 7,       // equiv inputs differ in p or n
  kUnknownTable = 8,
  kIoError = 9,
  kInternal = 10,
};

struct CodeAnalysis {
  unsigned p = 0;
  std::size_t n = 0;
  std::size_t m1 = 0;
  std::size_t m2 = 0;
  std::size_t size_exponent = 0;
  bool free = false;
  std::vector<std::string> residue_basis;
  std::vector<std::string> torsion_basis;
  std::vector<std::string> left_dual;
  std::vector<std::string> right_dual;
  bool lcd = false;
  bool left_nice = false;
  bool right_nice = false;
  bool left_self_dual = false;
  bool right_self_dual = false;
  bool self_dual = false;
  bool qsd = false;
  std::optional<std::size_t> d;
  std::string mds_status;
  std::vector<std::string> canonical_generator;

  friend bool operator==(const CodeAnalysis&, const CodeAnalysis&) = default;
};

struct AnalysisReport {
  std::string input;  // the parsed matrix, re-serialized
  CodeAnalysis analysis;
};

[[nodiscard]] AnalysisReport analyze(const EpGenMatrix& g);
[[nodiscard]] std::string report_json(const AnalysisReport& r);
[[nodiscard]] std::string report_text(const AnalysisReport& r);

/// Entry point shared by the executable and the tests.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace epc::cli

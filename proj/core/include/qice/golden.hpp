#pragma once

#include <string>
#include <vector>

#include "qice/algebra.hpp"

namespace qice::golden {

enum class Status { pass, warn, fail };

struct CheckLine {
  std::string name;
  Status status = Status::pass;
  std::string detail;
};

struct CaseReport {
  std::string id;
  std::vector<CheckLine> lines;
  Status overall() const;
};

// Reference cases bundled with the tool: the worked examples and both tables.
std::vector<std::string> case_ids();
CaseReport run_case(const std::string& id, int jobs = 1);

// Bundled algebras, addressable from the command line.
std::vector<std::string> builtin_ids();
AlgebraPtr builtin_algebra(const std::string& id);

// Embedded reference enumerations for --verify-paper. Sets are stored as
// canonical member-name lists; documented discrepancies carry explanations.
struct PaperList {
  std::string id;       // e.g. "ex-3.7-A-ebrick"
  std::string kind;     // "ice" or "ebrick"
  std::string algebra;  // builtin algebra id
  bool claims_complete = false;
  std::vector<std::vector<std::string>> sets;
  // Documented deviations between the printed list and the computed
  // enumeration, with the reason.
  std::vector<std::vector<std::string>> known_missing;  // computed but not printed
  std::vector<std::vector<std::string>> known_invalid;  // printed but fails the predicate
  std::string discrepancy_note;
};

std::vector<std::string> paper_list_ids();
const PaperList* find_paper_list(const std::string& id);

// Compares a computed enumeration (as name sets) against a reference list;
// emits membership lines and classifies differences as documented (warn) or
// unexplained (fail).
std::vector<CheckLine> compare_with_paper(const PaperList& paper,
                                          const std::vector<std::vector<std::string>>& computed);

}  // namespace qice::golden

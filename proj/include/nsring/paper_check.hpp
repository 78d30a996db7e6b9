#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "nsring/semigroup.hpp"

namespace nsring {

/// One expected fact about a ring: a named engine output, the stated value,
/// and where the value comes from. Informational facts do not fail the suite
/// when the engine disagrees; the disagreement is reported prominently.
struct PaperFact {
  std::string name;
  nlohmann::json expected;
  std::string provenance;  // "paper" | "derived" | "trivial"
  bool informational = false;
};

struct PaperCheckCase {
  std::string id;
  std::vector<Int> gens;
  std::vector<PaperFact> facts;
};

enum class CaseStatus { pass, fail, informational_discrepancy };
std::string to_string(CaseStatus status);

struct FactResult {
  PaperFact fact;
  nlohmann::json computed;
  bool ok = false;
};

struct CaseResult {
  std::string id;
  std::vector<Int> generators;
  CaseStatus status = CaseStatus::pass;
  std::vector<FactResult> facts;
};

struct SuiteResult {
  std::vector<CaseResult> cases;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t informational = 0;
  bool any_failed() const { return failed > 0; }
};

/// The manifest bundled into the binary at build time.
std::vector<PaperCheckCase> builtin_paper_cases();

/// Loads cases from a manifest document {"cases": [...]}. Throws Error on a
/// malformed manifest.
std::vector<PaperCheckCase> parse_paper_cases(const nlohmann::json& manifest);

/// Runs the cases (all, or the one named by `only`) and evaluates every fact
/// with exact integer/boolean equality.
SuiteResult run_paper_check(const std::vector<PaperCheckCase>& cases,
                            const std::string& only = "");

nlohmann::ordered_json suite_to_json(const SuiteResult& suite);
std::string render_suite_table(const SuiteResult& suite, bool color);

}  // namespace nsring

#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nsring/classify.hpp"
#include "nsring/output.hpp"
#include "nsring/where_expr.hpp"
#include "nsring/zideal.hpp"

namespace nsring {

/// Every numerical semigroup of genus <= g_max, each exactly once, generated
/// by the gap tree (remove one minimal generator above the Frobenius number
/// per step, starting from Z>=0). Sorted by (genus, generators).
std::vector<SemigroupHandle> semigroups_by_genus(Int g_max);

/// One-parameter family of semigroups.
struct FamilySpec {
  enum class Kind { comma_list, e_run } kind = Kind::comma_list;
  std::vector<std::optional<Int>> slots;  // comma_list: nullopt marks the symbol
  std::string symbol;                     // "a", or "e" for e_run
  std::string text;                       // original template, for headers
};

/// Parses "4,5,a" (exactly one symbolic slot) or the named family "e-run"
/// (<e, e+1, ..., 2e-2>). Throws BadTemplateError.
FamilySpec parse_family(const std::string& text);

/// One row of a scan: the parameter binding plus a full classification, or a
/// skip mark for degenerate members (keeps the output rectangular).
struct ScanRecord {
  std::vector<std::pair<std::string, Int>> params;
  bool skipped = false;
  std::string skip_reason;  // "nonpositive" | "gcd!=1" | "redundant" | "out-of-domain"
  std::optional<ClassificationReport> report;
};

/// Classifies each family member for the parameter in [lo, hi]. Records come
/// back in parameter order regardless of the worker count.
std::vector<ScanRecord> scan_family(const FamilySpec& family, Int lo, Int hi, int jobs = 1);

/// Classifies every semigroup of genus <= g_max; one record each.
std::vector<ScanRecord> scan_genus(Int g_max, int jobs = 1);

/// All monomial ideals E <= H with |H \ E| = k, canonical forms, in a fixed
/// deterministic order. k = 0 yields {H}.
std::vector<ZIdeal> colength_ideals(const SemigroupHandle& h, Int k);

struct ScanMeta {
  std::string family;     // template text, empty for genus scans
  std::string range;      // "7..200", or "genus<=8"
  std::string where;      // filter text, empty when absent
};

/// Renders records in any of the three formats. When `filter` is set only
/// matching rows are listed (skipped rows are dropped); the footer counts
/// every outcome. Output is a pure function of (records, meta, filter, fmt),
/// so identical scans produce byte-identical bytes.
std::string render_scan(const std::vector<ScanRecord>& records, const ScanMeta& meta,
                        const WhereExpr* filter, OutputFormat fmt);

}  // namespace nsring

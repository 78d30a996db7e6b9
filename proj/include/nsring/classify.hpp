#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "nsring/zideal.hpp"

namespace nsring {

/// Everything the scans and the CLI report about one ring R = k[[H]].
struct ClassificationReport {
  std::vector<Int> generators;
  Int e = 0;                    // multiplicity
  Int embdim = 0;               // mu(m)
  Int genus = 0;
  Int frobenius = 0;
  Int conductor_number = 0;
  Int type_ = 0;                // |PF(H)|
  Int ord_conductor = 0;
  Int colength_conductor = 0;   // l(R/C)
  bool is_gorenstein = false;
  bool is_almost_gorenstein = false;   // almost symmetric: 2g = F + type
  bool is_nearly_gorenstein = false;   // m <= tr(K)
  bool is_farflung_gorenstein = false; // tr(K) = C
  bool has_minimal_multiplicity = false;
  bool is_hypersurface = false;        // embdim <= 2
  std::optional<bool> q21_holds;       // when e - embdim = 1: ord(C) = 2 ?
  std::optional<bool> q31_holds;       // when hypersurface: ord(C) = e - 1 ?
  Int q41_value = 0;                   // e - (type + 1)
};

ClassificationReport classify(const SemigroupHandle& h);

/// For almost Gorenstein rings of minimal multiplicity that are not
/// hypersurfaces: whether K sits in bidual(K) with colength one, and whether
/// bidual(K) is a shift of the maximal ideal.
struct Prop45Check {
  bool applies = false;
  std::optional<bool> sequence_exact;
  std::optional<bool> bidual_class_eq_m;
};

Prop45Check check_prop45(const SemigroupHandle& h);

/// Flat JSON object with a fixed key order (the stable CLI schema).
nlohmann::ordered_json report_to_json(const ClassificationReport& r);

/// Field names in schema order, used as the CSV header.
const std::vector<std::string>& report_field_names();

/// One string cell per field, aligned with report_field_names().
/// Absent optionals render as `absent` ("" for CSV, "-" for tables).
std::vector<std::string> report_cells(const ClassificationReport& r, const std::string& absent);

/// Numeric view of a field (booleans as 0/1) for --where evaluation;
/// nullopt when the field is absent for this row. Unknown names throw.
std::optional<Int> report_field_value(const ClassificationReport& r, const std::string& name);

/// True iff `name` is usable in a --where expression.
bool is_report_field(const std::string& name);

}  // namespace nsring

#include "nsring/classify.hpp"

#include <stdexcept>

#include "nsring/errors.hpp"
#include "nsring/filtration.hpp"

namespace nsring {

ClassificationReport classify(const SemigroupHandle& h) {
  ClassificationReport r;
  r.generators = h->minimal_generators();
  r.e = h->multiplicity();
  r.embdim = h->embdim();
  r.genus = h->genus();
  r.frobenius = h->frobenius();
  r.conductor_number = h->conductor_number();
  r.type_ = h->type();

  const ZIdeal cond = conductor_ideal(h);
  r.ord_conductor = ord_of_ideal(cond);
  r.colength_conductor = colength_in_ring(cond);

  r.is_gorenstein = (r.type_ == 1);
  r.is_almost_gorenstein = (2 * r.genus == r.frobenius + r.type_);

  const ZIdeal tr = trace(canonical_ideal(h));
  r.is_nearly_gorenstein = is_subset(maximal_ideal(h), tr);
  r.is_farflung_gorenstein = (tr == cond);

  r.has_minimal_multiplicity = (r.e == r.embdim);
  r.is_hypersurface = (r.embdim <= 2);

  if (r.e - r.embdim == 1) r.q21_holds = (r.ord_conductor == 2);
  if (r.is_hypersurface) r.q31_holds = (r.ord_conductor == r.e - 1);
  r.q41_value = r.e - (r.type_ + 1);
  return r;
}

Prop45Check check_prop45(const SemigroupHandle& h) {
  const ClassificationReport r = classify(h);
  Prop45Check out;
  out.applies =
      r.is_almost_gorenstein && r.has_minimal_multiplicity && !r.is_hypersurface;
  if (!out.applies) return out;
  const ZIdeal k = canonical_ideal(h);
  const ZIdeal b = bidual(k);
  out.sequence_exact = (set_difference_size(b, k) == 1);
  out.bidual_class_eq_m = (ideal_class(b) == ideal_class(maximal_ideal(h)));
  return out;
}

namespace {

nlohmann::ordered_json opt_bool(const std::optional<bool>& v) {
  if (!v) return nullptr;
  return *v;
}

std::string bool_cell(bool v) { return v ? "true" : "false"; }

std::string gens_cell(const std::vector<Int>& gens) {
  std::string out;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i) out += ';';
    out += std::to_string(gens[i]);
  }
  return out;
}

}  // namespace

nlohmann::ordered_json report_to_json(const ClassificationReport& r) {
  nlohmann::ordered_json j;
  j["generators"] = r.generators;
  j["e"] = r.e;
  j["embdim"] = r.embdim;
  j["genus"] = r.genus;
  j["frobenius"] = r.frobenius;
  j["conductor_number"] = r.conductor_number;
  j["type_"] = r.type_;
  j["ord_conductor"] = r.ord_conductor;
  j["colength_conductor"] = r.colength_conductor;
  j["is_gorenstein"] = r.is_gorenstein;
  j["is_almost_gorenstein"] = r.is_almost_gorenstein;
  j["is_nearly_gorenstein"] = r.is_nearly_gorenstein;
  j["is_farflung_gorenstein"] = r.is_farflung_gorenstein;
  j["has_minimal_multiplicity"] = r.has_minimal_multiplicity;
  j["is_hypersurface"] = r.is_hypersurface;
  j["q21_holds"] = opt_bool(r.q21_holds);
  j["q31_holds"] = opt_bool(r.q31_holds);
  j["q41_value"] = r.q41_value;
  return j;
}

const std::vector<std::string>& report_field_names() {
  static const std::vector<std::string> names = {
      "generators",      "e",
      "embdim",          "genus",
      "frobenius",       "conductor_number",
      "type_",           "ord_conductor",
      "colength_conductor", "is_gorenstein",
      "is_almost_gorenstein", "is_nearly_gorenstein",
      "is_farflung_gorenstein", "has_minimal_multiplicity",
      "is_hypersurface", "q21_holds",
      "q31_holds",       "q41_value"};
  return names;
}

std::vector<std::string> report_cells(const ClassificationReport& r, const std::string& absent) {
  auto opt_cell = [&](const std::optional<bool>& v) { return v ? bool_cell(*v) : absent; };
  return {gens_cell(r.generators),
          std::to_string(r.e),
          std::to_string(r.embdim),
          std::to_string(r.genus),
          std::to_string(r.frobenius),
          std::to_string(r.conductor_number),
          std::to_string(r.type_),
          std::to_string(r.ord_conductor),
          std::to_string(r.colength_conductor),
          bool_cell(r.is_gorenstein),
          bool_cell(r.is_almost_gorenstein),
          bool_cell(r.is_nearly_gorenstein),
          bool_cell(r.is_farflung_gorenstein),
          bool_cell(r.has_minimal_multiplicity),
          bool_cell(r.is_hypersurface),
          opt_cell(r.q21_holds),
          opt_cell(r.q31_holds),
          std::to_string(r.q41_value)};
}

std::optional<Int> report_field_value(const ClassificationReport& r, const std::string& name) {
  auto from_bool = [](bool b) -> std::optional<Int> { return b ? 1 : 0; };
  if (name == "e") return r.e;
  if (name == "embdim") return r.embdim;
  if (name == "genus") return r.genus;
  if (name == "frobenius") return r.frobenius;
  if (name == "conductor_number") return r.conductor_number;
  if (name == "type_" || name == "type") return r.type_;
  if (name == "ord_conductor") return r.ord_conductor;
  if (name == "colength_conductor") return r.colength_conductor;
  if (name == "is_gorenstein") return from_bool(r.is_gorenstein);
  if (name == "is_almost_gorenstein") return from_bool(r.is_almost_gorenstein);
  if (name == "is_nearly_gorenstein") return from_bool(r.is_nearly_gorenstein);
  if (name == "is_farflung_gorenstein") return from_bool(r.is_farflung_gorenstein);
  if (name == "has_minimal_multiplicity") return from_bool(r.has_minimal_multiplicity);
  if (name == "is_hypersurface") return from_bool(r.is_hypersurface);
  if (name == "q21_holds") {
    if (!r.q21_holds) return std::nullopt;
    return from_bool(*r.q21_holds);
  }
  if (name == "q31_holds") {
    if (!r.q31_holds) return std::nullopt;
    return from_bool(*r.q31_holds);
  }
  if (name == "q41_value") return r.q41_value;
  throw Error("unknown report field '" + name + "'");
}

bool is_report_field(const std::string& name) {
  if (name == "type") return true;
  if (name == "generators") return false;  // not numeric
  for (const auto& n : report_field_names())
    if (n == name) return true;
  return false;
}

}  // namespace nsring

#include "nsring/paper_check.hpp"

#include <algorithm>
#include <sstream>

#include "embedded_manifest.hpp"
#include "nsring/classify.hpp"
#include "nsring/enumerate.hpp"
#include "nsring/errors.hpp"
#include "nsring/filtration.hpp"

namespace nsring {

namespace {

nlohmann::json ideal_to_json(const ZIdeal& e) {
  return {{"offsets", e.offsets()}, {"b", e.stability_bound()}};
}

// Per-case scratch: the handful of ideals most facts are phrased in.
struct CaseContext {
  explicit CaseContext(std::vector<Int> gens)
      : h(make_semigroup(std::move(gens))),
        report(classify(h)),
        ring(ring_ideal(h)),
        maximal(maximal_ideal(h)),
        conductor(conductor_ideal(h)),
        canonical(canonical_ideal(h)),
        trace_canonical(trace(canonical)) {}

  SemigroupHandle h;
  ClassificationReport report;
  ZIdeal ring, maximal, conductor, canonical, trace_canonical;
};

Int canonical_min_embed_colength(const CaseContext& ctx) {
  // Least shift embedding K into H; exists since K + c(H) lies in the tail.
  for (Int z = 0;; ++z) {
    const ZIdeal shifted = shift(ctx.canonical, z);
    if (is_subset(shifted, ctx.ring)) return colength_in_ring(shifted);
  }
}

nlohmann::json trace_ideal_names_upto_colength2(const CaseContext& ctx) {
  std::vector<std::string> names;
  for (Int k = 0; k <= 2; ++k) {
    for (const ZIdeal& e : colength_ideals(ctx.h, k)) {
      if (!(trace(e) == e)) continue;
      if (e == ctx.ring) {
        names.push_back("ring");
      } else if (e == ctx.maximal) {
        names.push_back("maximal_ideal");
      } else if (e == ctx.conductor) {
        names.push_back("conductor");
      } else {
        names.push_back(e.to_string());
      }
    }
  }
  std::sort(names.begin(), names.end());
  return names;
}

nlohmann::json compute_fact(const CaseContext& ctx, const std::string& name) {
  const auto& r = ctx.report;
  // Report fields pass through with their JSON types (ints, bools, nulls).
  const nlohmann::ordered_json jr = report_to_json(r);
  if (jr.contains(name)) return nlohmann::json(jr.at(name));
  if (name == "e_minus_embdim") return r.e - r.embdim;
  if (name == "pf_set") return ctx.h->pseudo_frobenius();
  if (name == "conductor_equals_m") return ctx.conductor == ctx.maximal;
  if (name == "conductor_equals_m_pow2") return ctx.conductor == power_of_m(ctx.h, 2);
  if (name == "canonical_reflexive") return is_reflexive(ctx.canonical);
  if (name == "canonical_min_embed_colength") return canonical_min_embed_colength(ctx);
  if (name == "trace_canonical_equals_m") return ctx.trace_canonical == ctx.maximal;
  if (name == "trace_canonical_equals_conductor") return ctx.trace_canonical == ctx.conductor;
  if (name == "m_colon_m_normal_form") return ideal_to_json(colon(ctx.maximal, ctx.maximal));
  if (name == "conductor_dual_is_normalization")
    return dual(ctx.conductor) == normalization_ideal(ctx.h);
  if (name == "conductor_bidual_equals_conductor")
    return bidual(ctx.conductor) == ctx.conductor;
  if (name == "canonical_bidual_normal_form") return ideal_to_json(bidual(ctx.canonical));
  if (name == "colength1_all_reflexive") {
    for (const ZIdeal& e : colength_ideals(ctx.h, 1))
      if (!is_reflexive(e)) return false;
    return true;
  }
  if (name == "exists_colength2_nonreflexive") {
    for (const ZIdeal& e : colength_ideals(ctx.h, 2))
      if (!is_reflexive(e)) return true;
    return false;
  }
  if (name == "trace_ideals_upto_colength2") return trace_ideal_names_upto_colength2(ctx);
  if (name == "ord_equals_q41") return r.ord_conductor == r.q41_value;
  if (name == "prop45_applies" || name == "prop45_sequence_exact" ||
      name == "prop45_bidual_class_eq_m") {
    const Prop45Check check = check_prop45(ctx.h);
    if (name == "prop45_applies") return check.applies;
    const auto& v =
        (name == "prop45_sequence_exact") ? check.sequence_exact : check.bidual_class_eq_m;
    return v ? nlohmann::json(*v) : nullptr;
  }
  throw Error("unknown paper-check fact '" + name + "'");
}

}  // namespace

std::string to_string(CaseStatus status) {
  switch (status) {
    case CaseStatus::pass:
      return "pass";
    case CaseStatus::fail:
      return "fail";
    case CaseStatus::informational_discrepancy:
    default:
      return "informational-discrepancy";
  }
}

std::vector<PaperCheckCase> parse_paper_cases(const nlohmann::json& manifest) {
  try {
    std::vector<PaperCheckCase> cases;
    for (const auto& jcase : manifest.at("cases")) {
      PaperCheckCase c;
      c.id = jcase.at("id").get<std::string>();
      c.gens = jcase.at("gens").get<std::vector<Int>>();
      for (const auto& jfact : jcase.at("facts")) {
        PaperFact f;
        f.name = jfact.at("name").get<std::string>();
        f.expected = jfact.at("expected");
        f.provenance = jfact.at("provenance").get<std::string>();
        f.informational = jfact.value("informational", false);
        c.facts.push_back(std::move(f));
      }
      cases.push_back(std::move(c));
    }
    return cases;
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("malformed paper-check manifest: ") + e.what());
  }
}

std::vector<PaperCheckCase> builtin_paper_cases() {
  return parse_paper_cases(nlohmann::json::parse(detail::kPaperCheckManifest));
}

SuiteResult run_paper_check(const std::vector<PaperCheckCase>& cases, const std::string& only) {
  SuiteResult suite;
  bool seen = false;
  for (const PaperCheckCase& c : cases) {
    if (!only.empty() && c.id != only) continue;
    seen = true;
    CaseResult result;
    result.id = c.id;
    const CaseContext ctx(c.gens);
    result.generators = ctx.h->minimal_generators();
    bool any_fail = false, any_info = false;
    for (const PaperFact& fact : c.facts) {
      FactResult fr;
      fr.fact = fact;
      fr.computed = compute_fact(ctx, fact.name);
      fr.ok = (fr.computed == fact.expected);
      if (!fr.ok) (fact.informational ? any_info : any_fail) = true;
      result.facts.push_back(std::move(fr));
    }
    result.status = any_fail ? CaseStatus::fail
                             : (any_info ? CaseStatus::informational_discrepancy
                                         : CaseStatus::pass);
    switch (result.status) {
      case CaseStatus::pass:
        ++suite.passed;
        break;
      case CaseStatus::fail:
        ++suite.failed;
        break;
      case CaseStatus::informational_discrepancy:
        ++suite.informational;
        break;
    }
    suite.cases.push_back(std::move(result));
  }
  if (!only.empty() && !seen) throw Error("unknown paper-check case '" + only + "'");
  return suite;
}

nlohmann::ordered_json suite_to_json(const SuiteResult& suite) {
  nlohmann::ordered_json j;
  j["suite"] = "paper-check";
  j["summary"] = {{"total", suite.cases.size()},
                  {"passed", suite.passed},
                  {"failed", suite.failed},
                  {"informational_discrepancies", suite.informational}};
  nlohmann::ordered_json jcases = nlohmann::ordered_json::array();
  for (const CaseResult& c : suite.cases) {
    nlohmann::ordered_json jc;
    jc["id"] = c.id;
    jc["generators"] = c.generators;
    jc["status"] = to_string(c.status);
    nlohmann::ordered_json jfacts = nlohmann::ordered_json::array();
    for (const FactResult& f : c.facts) {
      nlohmann::ordered_json jf;
      jf["name"] = f.fact.name;
      jf["provenance"] = f.fact.provenance;
      jf["informational"] = f.fact.informational;
      jf["expected"] = f.fact.expected;
      jf["computed"] = f.computed;
      jf["ok"] = f.ok;
      jfacts.push_back(std::move(jf));
    }
    jc["facts"] = std::move(jfacts);
    jcases.push_back(std::move(jc));
  }
  j["cases"] = std::move(jcases);
  return j;
}

std::string render_suite_table(const SuiteResult& suite, bool color) {
  const char* kReset = color ? "\033[0m" : "";
  const char* kGreen = color ? "\033[32m" : "";
  const char* kRed = color ? "\033[31m" : "";
  const char* kYellow = color ? "\033[33m" : "";

  std::size_t label_width = 0;
  std::vector<std::string> labels;
  for (const CaseResult& c : suite.cases) {
    labels.push_back("  " + c.id + "  " + format_generators(c.generators));
    label_width = std::max(label_width, labels.back().size());
  }

  std::ostringstream os;
  os << "paper-check: " << suite.cases.size() << " cases\n";
  for (std::size_t i = 0; i < suite.cases.size(); ++i) {
    const CaseResult& c = suite.cases[i];
    const char* tint = c.status == CaseStatus::pass
                           ? kGreen
                           : (c.status == CaseStatus::fail ? kRed : kYellow);
    os << labels[i] << std::string(label_width - labels[i].size() + 2, ' ');
    os << tint << to_string(c.status) << kReset << '\n';
    for (const FactResult& f : c.facts) {
      if (f.ok) continue;
      os << "      " << (f.fact.informational ? "informational" : "FAILED") << ": "
         << f.fact.name << " stated=" << f.fact.expected.dump()
         << " computed=" << f.computed.dump() << " [" << f.fact.provenance << "]\n";
    }
  }
  std::size_t discrepancies = 0;
  for (const CaseResult& c : suite.cases)
    for (const FactResult& f : c.facts)
      if (!f.ok && f.fact.informational) ++discrepancies;
  if (discrepancies > 0) {
    os << kYellow << "informational discrepancies (engine disagrees with a stated value):"
       << kReset << '\n';
    for (const CaseResult& c : suite.cases) {
      for (const FactResult& f : c.facts) {
        if (f.ok || !f.fact.informational) continue;
        os << "  " << c.id << ": " << f.fact.name << " stated=" << f.fact.expected.dump()
           << " computed=" << f.computed.dump() << '\n';
      }
    }
  }
  os << "summary: passed=" << suite.passed << " failed=" << suite.failed
     << " informational-discrepancies=" << suite.informational
     << " total=" << suite.cases.size() << '\n';
  return os.str();
}

}  // namespace nsring

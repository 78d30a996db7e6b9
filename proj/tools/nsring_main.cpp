#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "nsring/classify.hpp"
#include "nsring/enumerate.hpp"
#include "nsring/errors.hpp"
#include "nsring/filtration.hpp"
#include "nsring/output.hpp"
#include "nsring/paper_check.hpp"
#include "nsring/where_expr.hpp"
#include "nsring/zideal.hpp"

namespace {

using nsring::Int;

void write_out(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream os(out_path, std::ios::binary);
  if (!os) throw nsring::Error("cannot open output file '" + out_path + "'");
  os << text;
}

nlohmann::ordered_json ideal_json(const nsring::ZIdeal& e) {
  nlohmann::ordered_json j;
  j["offsets"] = e.offsets();
  j["b"] = e.stability_bound();
  return j;
}

int run_info(const std::vector<Int>& gens, const std::string& format) {
  const auto fmt = nsring::parse_format(format);
  const auto report = nsring::classify(nsring::make_semigroup(gens));
  if (fmt == nsring::OutputFormat::json) {
    std::cout << nsring::report_to_json(report).dump(2) << '\n';
    return 0;
  }
  const auto& names = nsring::report_field_names();
  if (fmt == nsring::OutputFormat::csv) {
    const auto cells = nsring::report_cells(report, "");
    for (std::size_t i = 0; i < names.size(); ++i) std::cout << (i ? "," : "") << names[i];
    std::cout << '\n';
    for (std::size_t i = 0; i < cells.size(); ++i) std::cout << (i ? "," : "") << cells[i];
    std::cout << '\n';
    return 0;
  }
  const bool color = nsring::use_color(nsring::color_mode_from_env());
  std::cout << (color ? "\033[1m" : "") << "numerical semigroup ring k[[H]], H = "
            << nsring::format_generators(report.generators) << (color ? "\033[0m" : "") << '\n';
  const auto cells = nsring::report_cells(report, "-");
  std::size_t width = 0;
  for (const auto& n : names) width = std::max(width, n.size());
  for (std::size_t i = 0; i < names.size(); ++i) {
    std::cout << "  " << names[i] << std::string(width - names[i].size() + 2, ' ') << cells[i]
              << '\n';
  }
  return 0;
}

struct IdealArgs {
  std::vector<Int> semigroup_gens;
  bool use_conductor = false;
  bool use_canonical = false;
  std::vector<Int> ideal_gens;
  std::string op;
  std::string with_spec;
  std::string format = "table";
};

nsring::ZIdeal resolve_with(const nsring::SemigroupHandle& h, const std::string& spec) {
  if (spec == "conductor") return nsring::conductor_ideal(h);
  if (spec == "canonical") return nsring::canonical_ideal(h);
  if (spec == "ring") return nsring::ring_ideal(h);
  std::vector<Int> gens;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      gens.push_back(std::stoll(item));
    } catch (const std::exception&) {
      throw nsring::Error("bad --with ideal '" + spec + "'");
    }
  }
  return nsring::from_generators(h, gens);
}

int run_ideal(const IdealArgs& args) {
  const auto fmt = nsring::parse_format(args.format);
  const int selectors = static_cast<int>(args.use_conductor) +
                        static_cast<int>(args.use_canonical) +
                        static_cast<int>(!args.ideal_gens.empty());
  if (selectors != 1)
    throw nsring::Error("choose exactly one of --conductor, --canonical, --ideal-gens");
  const auto h = nsring::make_semigroup(args.semigroup_gens);
  const nsring::ZIdeal e = args.use_conductor    ? nsring::conductor_ideal(h)
                           : args.use_canonical  ? nsring::canonical_ideal(h)
                                                 : nsring::from_generators(h, args.ideal_gens);

  nlohmann::ordered_json j;
  j["generators"] = h->minimal_generators();
  j["ideal"] = ideal_json(e);
  j["op"] = args.op;
  std::vector<std::pair<std::string, std::string>> lines = {
      {"semigroup", nsring::format_generators(h->minimal_generators())},
      {"ideal", e.to_string()},
      {"op", args.op}};

  if (args.op == "dual" || args.op == "bidual" || args.op == "trace" || args.op == "colon") {
    nsring::ZIdeal result = nsring::ring_ideal(h);  // placeholder, overwritten below
    if (args.op == "dual") {
      result = nsring::dual(e);
    } else if (args.op == "bidual") {
      result = nsring::bidual(e);
    } else if (args.op == "trace") {
      result = nsring::trace(e);
    } else {
      if (args.with_spec.empty()) throw nsring::Error("--op colon needs --with");
      result = nsring::colon(e, resolve_with(h, args.with_spec));
    }
    j["result"] = ideal_json(result);
    lines.emplace_back("result", result.to_string());
    if (args.op == "bidual") {
      j["reflexive"] = (result == e);
      lines.emplace_back("reflexive", result == e ? "true" : "false");
    }
    if (args.op == "trace") {
      j["is_trace_ideal"] = (result == e);
      lines.emplace_back("is_trace_ideal", result == e ? "true" : "false");
    }
  } else if (args.op == "ord") {
    const Int v = nsring::ord_of_ideal(e);
    j["result"] = v;
    lines.emplace_back("result", std::to_string(v));
  } else if (args.op == "colength") {
    const Int v = nsring::colength_in_ring(e);
    j["result"] = v;
    lines.emplace_back("result", std::to_string(v));
  } else if (args.op == "reflexive") {
    const bool v = nsring::is_reflexive(e);
    j["result"] = v;
    lines.emplace_back("result", v ? "true" : "false");
  } else if (args.op == "selfdual") {
    const auto v = nsring::is_self_dual(e);
    j["result"] = v.self_dual;
    j["witness_shift"] =
        v.witness_shift ? nlohmann::ordered_json(*v.witness_shift) : nullptr;
    lines.emplace_back("result", v.self_dual ? "true" : "false");
    if (v.witness_shift) lines.emplace_back("witness_shift", std::to_string(*v.witness_shift));
  } else {
    throw nsring::Error("unknown --op '" + args.op + "'");
  }

  if (fmt == nsring::OutputFormat::json) {
    std::cout << j.dump(2) << '\n';
  } else if (fmt == nsring::OutputFormat::csv) {
    for (std::size_t i = 0; i < lines.size(); ++i) std::cout << (i ? "," : "") << lines[i].first;
    std::cout << '\n';
    for (std::size_t i = 0; i < lines.size(); ++i) std::cout << (i ? "," : "") << lines[i].second;
    std::cout << '\n';
  } else {
    std::size_t width = 0;
    for (const auto& [k, v] : lines) width = std::max(width, k.size());
    for (const auto& [k, v] : lines)
      std::cout << k << std::string(width - k.size() + 2, ' ') << v << '\n';
  }
  return 0;
}

struct ScanArgs {
  std::string family;
  Int genus_max = -1;
  std::string range;
  std::string where;
  std::string format = "table";
  int jobs = 1;
  std::string out_path;
};

std::pair<Int, Int> parse_range(const std::string& range) {
  const auto pos = range.find("..");
  if (pos == std::string::npos)
    throw nsring::BadTemplateError("range must look like A..B, got '" + range + "'");
  try {
    const Int lo = std::stoll(range.substr(0, pos));
    const Int hi = std::stoll(range.substr(pos + 2));
    if (lo > hi) throw nsring::BadTemplateError("empty range '" + range + "'");
    return {lo, hi};
  } catch (const nsring::Error&) {
    throw;
  } catch (const std::exception&) {
    throw nsring::BadTemplateError("range must look like A..B, got '" + range + "'");
  }
}

int run_scan(const ScanArgs& args) {
  const auto fmt = nsring::parse_format(args.format);
  if (args.family.empty() == (args.genus_max < 0))
    throw nsring::Error("scan needs exactly one of --family or --genus-max");

  std::vector<nsring::ScanRecord> records;
  nsring::ScanMeta meta;
  std::string symbol;
  if (!args.family.empty()) {
    const auto spec = nsring::parse_family(args.family);
    if (args.range.empty()) throw nsring::Error("--family needs --range A..B");
    const auto [lo, hi] = parse_range(args.range);
    records = nsring::scan_family(spec, lo, hi, args.jobs);
    meta.family = spec.text;
    meta.range = args.range;
    symbol = spec.symbol;
  } else {
    records = nsring::scan_genus(args.genus_max, args.jobs);
    meta.range = "genus<=" + std::to_string(args.genus_max);
  }

  std::optional<nsring::WhereExpr> filter;
  if (!args.where.empty()) {
    filter = nsring::WhereExpr::parse(args.where);
    for (const auto& ident : filter->identifiers()) {
      if (ident != symbol && !nsring::is_report_field(ident))
        throw nsring::Error("unknown field '" + ident + "' in --where");
    }
    meta.where = args.where;
  }
  write_out(nsring::render_scan(records, meta, filter ? &*filter : nullptr, fmt),
            args.out_path);
  return 0;
}

int run_paper_check(const std::string& only, const std::string& format,
                    const std::string& manifest_path) {
  const auto fmt = nsring::parse_format(format);
  std::vector<nsring::PaperCheckCase> cases;
  if (manifest_path.empty()) {
    cases = nsring::builtin_paper_cases();
  } else {
    std::ifstream is(manifest_path);
    if (!is) throw nsring::Error("cannot open manifest '" + manifest_path + "'");
    nlohmann::json doc;
    try {
      is >> doc;
    } catch (const nlohmann::json::exception& e) {
      throw nsring::Error(std::string("cannot parse manifest: ") + e.what());
    }
    cases = nsring::parse_paper_cases(doc);
  }
  const auto suite = nsring::run_paper_check(cases, only);
  if (fmt == nsring::OutputFormat::json) {
    std::cout << nsring::suite_to_json(suite).dump(2) << '\n';
  } else if (fmt == nsring::OutputFormat::table) {
    std::cout << nsring::render_suite_table(
        suite, nsring::use_color(nsring::color_mode_from_env()));
  } else {
    throw nsring::Error("paper-check supports --format table or json");
  }
  return suite.any_failed() ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"nsring - exact invariants of numerical semigroup rings k[[H]]"};
  app.require_subcommand(1);

  auto* info = app.add_subcommand("info", "classification report for one semigroup");
  std::vector<Int> info_gens;
  std::string info_format = "table";
  info->add_option("--gens", info_gens, "comma-separated generators, e.g. 4,5,7")
      ->required()
      ->delimiter(',');
  info->add_option("--format", info_format, "table|json|csv");

  auto* ideal = app.add_subcommand("ideal", "fractional monomial ideal calculator");
  IdealArgs ideal_args;
  ideal->add_option("--gens", ideal_args.semigroup_gens, "semigroup generators")
      ->required()
      ->delimiter(',');
  ideal->add_flag("--conductor", ideal_args.use_conductor, "use the conductor ideal");
  ideal->add_flag("--canonical", ideal_args.use_canonical, "use the canonical ideal");
  ideal->add_option("--ideal-gens", ideal_args.ideal_gens,
                    "ideal generators (integers, may be negative)")
      ->delimiter(',');
  ideal->add_option("--op", ideal_args.op,
                    "dual|bidual|trace|colon|ord|colength|reflexive|selfdual")
      ->required();
  ideal->add_option("--with", ideal_args.with_spec,
                    "second ideal for colon: LIST or conductor|canonical|ring");
  ideal->add_option("--format", ideal_args.format, "table|json|csv");

  auto* scan = app.add_subcommand("scan", "family or genus scans");
  ScanArgs scan_args;
  scan->add_option("--family", scan_args.family, "template like 4,5,a or the name e-run");
  scan->add_option("--genus-max", scan_args.genus_max, "scan all semigroups of genus <= N");
  scan->add_option("--range", scan_args.range, "parameter range A..B");
  scan->add_option("--where", scan_args.where, "row filter, e.g. \"ord_conductor==1\"");
  scan->add_option("--format", scan_args.format, "table|json|csv");
  scan->add_option("--jobs", scan_args.jobs, "parallel classification workers");
  scan->add_option("--out", scan_args.out_path, "write output to a file");

  auto* pc = app.add_subcommand("paper-check", "golden example suite");
  std::string pc_only, pc_format = "table", pc_manifest;
  pc->add_option("--only", pc_only, "run a single case id");
  pc->add_option("--format", pc_format, "table|json");
  pc->add_option("--manifest", pc_manifest, "override the built-in manifest");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (info->parsed()) return run_info(info_gens, info_format);
    if (ideal->parsed()) return run_ideal(ideal_args);
    if (scan->parsed()) return run_scan(scan_args);
    if (pc->parsed()) return run_paper_check(pc_only, pc_format, pc_manifest);
  } catch (const nsring::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}

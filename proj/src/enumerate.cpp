#include "nsring/enumerate.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <thread>

#include "nsring/errors.hpp"

namespace nsring {

namespace {

// Minimal generators of H \ {removed}, where removed is a minimal generator
// of H exceeding the Frobenius number (so the result is again a semigroup).
std::vector<Int> child_minimal_generators(const NumericalSemigroup& h, Int removed) {
  const Int child_conductor = removed + 1;
  Int child_mult = h.multiplicity();
  if (child_mult == removed) ++child_mult;  // only happens for H = {0} u [e, oo)
  const Int hi = child_conductor + child_mult + 1;
  std::vector<std::uint8_t> mem(static_cast<std::size_t>(hi), 0);
  for (Int s = 0; s < hi; ++s) mem[static_cast<std::size_t>(s)] = (s != removed && h.contains(s));
  std::vector<Int> gens;
  for (Int s = 1; s < hi; ++s) {
    if (!mem[static_cast<std::size_t>(s)]) continue;
    bool decomposable = false;
    for (Int t = 1; t <= s / 2; ++t) {
      if (mem[static_cast<std::size_t>(t)] && mem[static_cast<std::size_t>(s - t)]) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) gens.push_back(s);
  }
  return gens;
}

void expand_genus_tree(const SemigroupHandle& h, Int g_max,
                       std::vector<SemigroupHandle>& out) {
  out.push_back(h);
  if (h->genus() >= g_max) return;
  for (Int g : h->minimal_generators()) {
    if (g <= h->frobenius()) continue;
    expand_genus_tree(make_semigroup(child_minimal_generators(*h, g)), g_max, out);
  }
}

// Membership of v in the monoid generated by `gens` (no coprimality needed).
bool in_monoid(const std::vector<Int>& gens, Int v) {
  if (v < 0) return false;
  std::vector<std::uint8_t> mem(static_cast<std::size_t>(v + 1), 0);
  mem[0] = 1;
  for (Int s = 1; s <= v; ++s) {
    for (Int g : gens) {
      if (g > s) break;
      if (mem[static_cast<std::size_t>(s - g)]) {
        mem[static_cast<std::size_t>(s)] = 1;
        break;
      }
    }
  }
  return mem[static_cast<std::size_t>(v)] != 0;
}

ScanRecord make_record(const FamilySpec& family, Int v) {
  ScanRecord rec;
  rec.params.emplace_back(family.symbol, v);
  std::vector<Int> gens;
  if (family.kind == FamilySpec::Kind::e_run) {
    if (v < 3) {
      rec.skipped = true;
      rec.skip_reason = "out-of-domain";
      return rec;
    }
    for (Int g = v; g <= 2 * v - 2; ++g) gens.push_back(g);
  } else {
    std::vector<Int> fixed;
    for (const auto& slot : family.slots) {
      gens.push_back(slot.value_or(v));
      if (slot) fixed.push_back(*slot);
    }
    if (v <= 0) {
      rec.skipped = true;
      rec.skip_reason = "nonpositive";
      return rec;
    }
    Int d = 0;
    for (Int g : gens) d = std::gcd(d, g);
    if (d != 1) {
      rec.skipped = true;
      rec.skip_reason = "gcd!=1";
      return rec;
    }
    std::sort(fixed.begin(), fixed.end());
    if (!fixed.empty() && in_monoid(fixed, v)) {
      rec.skipped = true;
      rec.skip_reason = "redundant";
      return rec;
    }
  }
  rec.report = classify(make_semigroup(std::move(gens)));
  return rec;
}

std::vector<ScanRecord> run_jobs(std::size_t n, int jobs,
                                 const std::function<ScanRecord(std::size_t)>& work) {
  std::vector<ScanRecord> records(n);
  if (jobs <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) records[i] = work(i);
    return records;
  }
  const std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(jobs), n);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w]() {
      for (std::size_t i = w; i < n; i += workers) records[i] = work(i);
    });
  }
  for (auto& t : pool) t.join();
  return records;
}

}  // namespace

std::vector<SemigroupHandle> semigroups_by_genus(Int g_max) {
  if (g_max < 0) throw Error("genus bound must be >= 0");
  std::vector<SemigroupHandle> out;
  expand_genus_tree(make_semigroup({1}), g_max, out);
  std::sort(out.begin(), out.end(), [](const SemigroupHandle& a, const SemigroupHandle& b) {
    if (a->genus() != b->genus()) return a->genus() < b->genus();
    return a->minimal_generators() < b->minimal_generators();
  });
  return out;
}

FamilySpec parse_family(const std::string& text) {
  FamilySpec spec;
  spec.text = text;
  if (text == "e-run") {
    spec.kind = FamilySpec::Kind::e_run;
    spec.symbol = "e";
    return spec;
  }
  std::stringstream ss(text);
  std::string item;
  int symbols = 0;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) throw BadTemplateError("empty slot in '" + text + "'");
    const bool numeric = std::all_of(item.begin(), item.end(), [](char ch) {
      return std::isdigit(static_cast<unsigned char>(ch)) != 0;
    });
    if (numeric) {
      spec.slots.emplace_back(static_cast<Int>(std::stoll(item)));
      continue;
    }
    const bool ident =
        (std::isalpha(static_cast<unsigned char>(item[0])) || item[0] == '_') &&
        std::all_of(item.begin(), item.end(), [](char ch) {
          return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_';
        });
    if (!ident) throw BadTemplateError("bad slot '" + item + "'");
    ++symbols;
    spec.symbol = item;
    spec.slots.emplace_back(std::nullopt);
  }
  if (spec.slots.empty()) throw BadTemplateError("empty template");
  if (symbols != 1)
    throw BadTemplateError("expected exactly one symbolic slot, got " + std::to_string(symbols));
  return spec;
}

std::vector<ScanRecord> scan_family(const FamilySpec& family, Int lo, Int hi, int jobs) {
  if (lo > hi) throw BadTemplateError("empty range");
  const std::size_t n = static_cast<std::size_t>(hi - lo + 1);
  return run_jobs(n, jobs, [&](std::size_t i) {
    return make_record(family, lo + static_cast<Int>(i));
  });
}

std::vector<ScanRecord> scan_genus(Int g_max, int jobs) {
  const std::vector<SemigroupHandle> all = semigroups_by_genus(g_max);
  return run_jobs(all.size(), jobs, [&](std::size_t i) {
    ScanRecord rec;
    rec.report = classify(all[i]);
    return rec;
  });
}

std::vector<ZIdeal> colength_ideals(const SemigroupHandle& h, Int k) {
  if (k < 0) throw Error("colength must be >= 0");
  if (k == 0) return {ring_ideal(h)};
  const Int bound = h->conductor_number() + k * h->multiplicity();
  const std::vector<Int> poset = h->members_below(bound);

  // The complement D = H \ E must be closed under subtracting members within
  // H; required[i] lists the indices that must accompany poset[i].
  std::vector<std::vector<std::size_t>> required(poset.size());
  for (std::size_t i = 0; i < poset.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (h->contains(poset[i] - poset[j])) required[i].push_back(j);
    }
  }

  std::vector<ZIdeal> out;
  std::vector<std::size_t> chosen;
  std::vector<std::uint8_t> in_d(poset.size(), 0);
  const std::vector<Int> all_members = h->members_below(bound);

  auto emit = [&]() {
    std::vector<Int> offs;
    std::size_t next = 0;
    for (Int s : all_members) {
      while (next < chosen.size() && poset[chosen[next]] < s) ++next;
      const bool dropped = next < chosen.size() && poset[chosen[next]] == s;
      if (!dropped) offs.push_back(s);
    }
    out.push_back(ZIdeal::from_set(h, std::move(offs), bound));
  };

  // Elements are considered in increasing order, so every required index of a
  // candidate refers to an already-decided element.
  std::function<void(std::size_t)> dfs = [&](std::size_t start) {
    if (static_cast<Int>(chosen.size()) == k) {
      emit();
      return;
    }
    const Int missing = k - static_cast<Int>(chosen.size());
    for (std::size_t i = start; i + static_cast<std::size_t>(missing) <= poset.size(); ++i) {
      bool ok = true;
      for (std::size_t j : required[i]) {
        if (!in_d[j]) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      chosen.push_back(i);
      in_d[i] = 1;
      dfs(i + 1);
      in_d[i] = 0;
      chosen.pop_back();
    }
  };
  dfs(0);
  return out;
}

namespace {

std::vector<std::string> scan_header(const std::vector<ScanRecord>& records) {
  std::vector<std::string> cols;
  if (!records.empty()) {
    for (const auto& [name, value] : records.front().params) cols.push_back(name);
  }
  cols.push_back("skipped");
  cols.push_back("skip_reason");
  for (const auto& n : report_field_names()) cols.push_back(n);
  return cols;
}

std::vector<std::string> scan_cells(const ScanRecord& rec, const std::string& absent) {
  std::vector<std::string> cells;
  for (const auto& [name, value] : rec.params) cells.push_back(std::to_string(value));
  cells.push_back(rec.skipped ? "true" : "false");
  cells.push_back(rec.skipped ? rec.skip_reason : absent);
  if (rec.report) {
    for (auto& c : report_cells(*rec.report, absent)) cells.push_back(std::move(c));
  } else {
    for (std::size_t i = 0; i < report_field_names().size(); ++i) cells.push_back(absent);
  }
  return cells;
}

bool record_matches(const ScanRecord& rec, const WhereExpr& filter) {
  return filter.eval([&](const std::string& name) -> std::optional<Int> {
    for (const auto& [pname, pvalue] : rec.params)
      if (pname == name) return pvalue;
    if (!rec.report) return std::nullopt;
    return report_field_value(*rec.report, name);
  });
}

}  // namespace

std::string render_scan(const std::vector<ScanRecord>& records, const ScanMeta& meta,
                        const WhereExpr* filter, OutputFormat fmt) {
  std::size_t skipped = 0, matched = 0, unmatched = 0;
  std::vector<const ScanRecord*> listed;
  for (const auto& rec : records) {
    if (rec.skipped) {
      ++skipped;
      if (filter == nullptr) listed.push_back(&rec);
      continue;
    }
    if (filter == nullptr || record_matches(rec, *filter)) {
      ++matched;
      listed.push_back(&rec);
    } else {
      ++unmatched;
    }
  }

  std::ostringstream os;
  auto describe = [&]() {
    std::string d = meta.family.empty() ? "" : "family=" + meta.family + " ";
    d += "range=" + meta.range;
    if (!meta.where.empty()) d += " where=" + meta.where;
    d += " scope=monomial-value-set-ideals";
    return d;
  };
  std::ostringstream footer;
  footer << "rows=" << listed.size() << " matched=" << matched << " unmatched=" << unmatched
         << " skipped=" << skipped << " total=" << records.size();

  if (fmt == OutputFormat::json) {
    nlohmann::ordered_json head;
    head["scan"] = describe();
    os << head.dump() << '\n';
    for (const ScanRecord* rec : listed) {
      nlohmann::ordered_json row;
      for (const auto& [name, value] : rec->params) row[name] = value;
      row["skipped"] = rec->skipped;
      row["skip_reason"] = rec->skipped ? nlohmann::ordered_json(rec->skip_reason)
                                        : nlohmann::ordered_json(nullptr);
      if (rec->report) {
        const nlohmann::ordered_json jr = report_to_json(*rec->report);
        for (const auto& [key, value] : jr.items()) row[key] = value;
      }
      os << row.dump() << '\n';
    }
    nlohmann::ordered_json tail;
    tail["summary"] = {{"rows", listed.size()},
                       {"matched", matched},
                       {"unmatched", unmatched},
                       {"skipped", skipped},
                       {"total", records.size()}};
    os << tail.dump() << '\n';
    return os.str();
  }

  const std::vector<std::string> header = scan_header(records);
  if (fmt == OutputFormat::csv) {
    os << "# scan " << describe() << '\n';
    for (std::size_t i = 0; i < header.size(); ++i) os << (i ? "," : "") << header[i];
    os << '\n';
    for (const ScanRecord* rec : listed) {
      const auto cells = scan_cells(*rec, "");
      for (std::size_t i = 0; i < cells.size(); ++i) os << (i ? "," : "") << cells[i];
      os << '\n';
    }
    os << "# " << footer.str() << '\n';
    return os.str();
  }

  // table
  std::vector<std::vector<std::string>> rows;
  rows.push_back(header);
  for (const ScanRecord* rec : listed) rows.push_back(scan_cells(*rec, "-"));
  std::vector<std::size_t> width(header.size(), 0);
  for (const auto& row : rows)
    for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
  os << "scan " << describe() << '\n';
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      os << row[i] << std::string(width[i] - row[i].size() + (i + 1 < row.size() ? 2 : 0), ' ');
    }
    os << '\n';
  }
  os << footer.str() << '\n';
  return os.str();
}

}  // namespace nsring

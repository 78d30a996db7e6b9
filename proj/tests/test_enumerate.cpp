#include <algorithm>
#include <set>

#include "doctest.h"

#include "nsring/enumerate.hpp"
#include "nsring/errors.hpp"

using namespace nsring;

namespace {

// Brute-force count of numerical semigroups with genus exactly g: try every
// g-element gap candidate inside [1, 2g-1] and test closure directly.
std::size_t count_by_gap_subsets(Int g) {
  if (g == 0) return 1;
  const Int hi = 2 * g;  // gaps live in [1, 2g-1]
  std::vector<Int> gapset;
  std::size_t count = 0;
  std::function<void(Int)> rec = [&](Int next) {
    if (static_cast<Int>(gapset.size()) == g) {
      // complement must be closed under addition within [0, 2*hi)
      std::vector<std::uint8_t> in(static_cast<std::size_t>(2 * hi), 1);
      for (Int x : gapset) in[static_cast<std::size_t>(x)] = 0;
      for (Int a = 1; a < 2 * hi; ++a) {
        if (!in[static_cast<std::size_t>(a)]) continue;
        for (Int b = a; a + b < 2 * hi; ++b) {
          if (in[static_cast<std::size_t>(b)] && !in[static_cast<std::size_t>(a + b)]) return;
        }
      }
      ++count;
      return;
    }
    for (Int x = next; x < hi; ++x) {
      gapset.push_back(x);
      rec(x + 1);
      gapset.pop_back();
    }
  };
  rec(1);
  return count;
}

}  // namespace

TEST_CASE("genus tree: small counts and exactness") {
  CHECK(semigroups_by_genus(0).size() == 1);

  const auto upto2 = semigroups_by_genus(2);
  REQUIRE(upto2.size() == 4);
  CHECK(upto2[0]->minimal_generators() == std::vector<Int>{1});
  CHECK(upto2[1]->minimal_generators() == std::vector<Int>{2, 3});
  CHECK(upto2[2]->minimal_generators() == std::vector<Int>{2, 5});
  CHECK(upto2[3]->minimal_generators() == std::vector<Int>{3, 4, 5});

  // per-genus counts against the independent gap-subset enumeration
  const auto all = semigroups_by_genus(6);
  std::vector<std::size_t> per_genus(7, 0);
  for (const auto& h : all) per_genus[static_cast<std::size_t>(h->genus())]++;
  for (Int g = 0; g <= 6; ++g)
    CHECK(per_genus[static_cast<std::size_t>(g)] == count_by_gap_subsets(g));
}

TEST_CASE("genus tree: no duplicates, genus bound respected") {
  const auto all = semigroups_by_genus(9);
  std::set<std::vector<Int>> seen;
  for (const auto& h : all) {
    CHECK(h->genus() <= 9);
    CHECK(seen.insert(h->minimal_generators()).second);
  }
}

TEST_CASE("family parsing") {
  const auto f = parse_family("4,5,a");
  CHECK(f.symbol == "a");
  REQUIRE(f.slots.size() == 3);
  CHECK(f.slots[0] == Int{4});
  CHECK_FALSE(f.slots[2].has_value());

  CHECK(parse_family("e-run").kind == FamilySpec::Kind::e_run);

  CHECK_THROWS_AS(parse_family("4,5,6"), BadTemplateError);
  CHECK_THROWS_AS(parse_family("4,a,b"), BadTemplateError);
  CHECK_THROWS_AS(parse_family(""), BadTemplateError);
  CHECK_THROWS_AS(parse_family("4,,a"), BadTemplateError);
}

TEST_CASE("scan <4,5,a>") {
  const auto records = scan_family(parse_family("4,5,a"), 6, 16);
  REQUIRE(records.size() == 11);
  auto at = [&](Int a) -> const ScanRecord& {
    return records[static_cast<std::size_t>(a - 6)];
  };
  CHECK(at(6).report->ord_conductor == 2);
  CHECK(at(7).report->ord_conductor == 1);
  CHECK(at(11).report->ord_conductor == 1);
  for (Int a : {8, 9, 10, 12, 13, 14, 15, 16}) {
    CHECK(at(a).skipped);
    CHECK(at(a).skip_reason == "redundant");
  }
  for (Int a : {6, 7, 11}) CHECK_FALSE(at(a).skipped);
}

TEST_CASE("scan e-run and <2,a>") {
  for (const auto& rec : scan_family(parse_family("e-run"), 3, 10)) {
    REQUIRE_FALSE(rec.skipped);
    CHECK(rec.report->ord_conductor == 2);
    CHECK(rec.report->e - rec.report->embdim == 1);
  }
  for (const auto& rec : scan_family(parse_family("2,a"), 3, 21)) {
    if (rec.skipped) {
      CHECK(rec.skip_reason == "gcd!=1");  // even a
      continue;
    }
    CHECK(rec.report->ord_conductor == 1);
  }
}

TEST_CASE("scan is deterministic across job counts") {
  const auto spec = parse_family("4,5,a");
  const auto seq = scan_family(spec, 7, 60, 1);
  const auto par = scan_family(spec, 7, 60, 4);
  const ScanMeta meta{"4,5,a", "7..60", ""};
  CHECK(render_scan(seq, meta, nullptr, OutputFormat::csv) ==
        render_scan(par, meta, nullptr, OutputFormat::csv));
  CHECK(render_scan(seq, meta, nullptr, OutputFormat::json) ==
        render_scan(par, meta, nullptr, OutputFormat::json));
}

TEST_CASE("where filtering") {
  const auto records = scan_family(parse_family("4,5,a"), 7, 60);
  const auto filter = WhereExpr::parse("ord_conductor==1");
  const std::string csv =
      render_scan(records, {"4,5,a", "7..60", "ord_conductor==1"}, &filter, OutputFormat::csv);
  CHECK(csv.find("\n7,") != std::string::npos);
  CHECK(csv.find("\n11,") != std::string::npos);
  CHECK(csv.find("redundant") == std::string::npos);  // skipped rows are not listed
}

TEST_CASE("colength ideal enumeration") {
  const auto h4679 = make_semigroup({4, 6, 7, 9});
  CHECK(colength_ideals(h4679, 0) == std::vector<ZIdeal>{ring_ideal(h4679)});

  const auto k1 = colength_ideals(h4679, 1);
  REQUIRE(k1.size() == 1);
  CHECK(k1[0] == maximal_ideal(h4679));

  const auto k2 = colength_ideals(h4679, 2);
  REQUIRE(k2.size() == 4);  // complements {0,4}, {0,6}, {0,7}, {0,9}
  for (const auto& e : k2) CHECK(colength_in_ring(e) == 2);
  // exactly one of them is a trace ideal: the conductor
  std::size_t traces = 0;
  for (const auto& e : k2)
    if (trace(e) == e) ++traces;
  CHECK(traces == 1);
  CHECK(std::count(k2.begin(), k2.end(), conductor_ideal(h4679)) == 1);

  const auto h345 = make_semigroup({3, 4, 5});
  const auto k2b = colength_ideals(h345, 2);
  const ZIdeal omega = from_generators(h345, {3, 4});
  CHECK(std::count(k2b.begin(), k2b.end(), omega) == 1);
  bool omega_reflexive = true;
  for (const auto& e : k2b)
    if (e == omega) omega_reflexive = is_reflexive(e);
  CHECK_FALSE(omega_reflexive);
  for (const auto& e : colength_ideals(h345, 1)) CHECK(is_reflexive(e));
}

TEST_CASE("colength ideal enumeration matches naive complement search") {
  // naive: every k-subset D of H cap [0, c+k*e) containing the down-set rule
  for (auto gens : {std::vector<Int>{3, 4, 5}, {4, 6, 7, 9}, {2, 3}, {5, 6, 7}}) {
    const auto h = make_semigroup(gens);
    for (Int k = 0; k <= 3; ++k) {
      const Int bound = h->conductor_number() + k * h->multiplicity();
      const auto members = h->members_below(bound);
      std::size_t naive = 0;
      std::vector<Int> d;
      std::function<void(std::size_t)> rec = [&](std::size_t start) {
        if (static_cast<Int>(d.size()) == k) {
          for (Int x : d)
            for (Int y : members) {
              if (y >= x) break;
              if (h->contains(x - y) &&
                  std::find(d.begin(), d.end(), y) == d.end())
                return;
            }
          ++naive;
          return;
        }
        for (std::size_t i = start; i < members.size(); ++i) {
          d.push_back(members[i]);
          rec(i + 1);
          d.pop_back();
        }
      };
      rec(0);
      const auto enumerated = colength_ideals(h, k);
      CHECK(enumerated.size() == naive);
      for (const auto& e : enumerated) CHECK(colength_in_ring(e) == k);
    }
  }
}

TEST_CASE("colength-2 dichotomy: principal or complement {0, minimal generator}") {
  for (const auto& h : semigroups_by_genus(8)) {
    for (const auto& e : colength_ideals(h, 2)) {
      const Int lo = e.min_element();
      const bool principal = (e == from_generators(h, {lo}));
      // complement of a colength-2 ideal is {0, d}; d must be a minimal
      // generator of H or the ideal must be principal
      std::vector<Int> complement;
      for (Int s : h->members_below(std::max(e.stability_bound(), h->conductor_number())))
        if (!e.contains(s)) complement.push_back(s);
      REQUIRE(complement.size() == 2);
      REQUIRE(complement[0] == 0);
      const auto& gens = h->minimal_generators();
      const bool d_is_generator =
          std::find(gens.begin(), gens.end(), complement[1]) != gens.end();
      REQUIRE((principal || d_is_generator));
    }
  }
}

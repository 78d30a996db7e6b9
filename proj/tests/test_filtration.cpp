#include <numeric>

#include "doctest.h"

#include "nsring/errors.hpp"
#include "nsring/filtration.hpp"

using namespace nsring;

TEST_CASE("maxlen examples") {
  FactorizationTable t457(make_semigroup({4, 5, 7}));
  CHECK(t457.maxlen(7) == 1);
  CHECK(t457.maxlen(0) == 0);
  CHECK_FALSE(t457.maxlen(6).has_value());
  CHECK_FALSE(t457.maxlen(-3).has_value());

  FactorizationTable t34(make_semigroup({3, 4}));
  CHECK(t34.maxlen(8) == 2);  // 8 = 4 + 4
  CHECK(t34.maxlen(12) == 4);
}

TEST_CASE("maxlen superadditivity") {
  for (auto gens : {std::vector<Int>{4, 5, 7}, {3, 5}, {6, 8, 11, 13, 15}, {2, 3}}) {
    const auto h = make_semigroup(gens);
    FactorizationTable t(h);
    const Int w = 3 * h->conductor_number() + 3;
    for (Int s = 0; s <= w; ++s) {
      for (Int u = 0; u + s <= w; ++u) {
        const auto a = t.maxlen(s), b = t.maxlen(u), ab = t.maxlen(s + u);
        if (a && b) {
          REQUIRE(ab.has_value());
          REQUIRE(*ab >= *a + *b);
        }
      }
    }
  }
}

TEST_CASE("powers of m") {
  const auto h34 = make_semigroup({3, 4});
  CHECK(power_of_m(h34, 2) == conductor_ideal(h34));  // C = m^2 here
  CHECK(power_of_m(h34, 0) == ring_ideal(h34));
  CHECK(power_of_m(h34, 1) == maximal_ideal(h34));

  const auto h567 = make_semigroup({5, 6, 7});
  CHECK(power_of_m(h567, 2) == conductor_ideal(h567));

  const auto h1 = make_semigroup({1});
  CHECK(power_of_m(h1, 0) == ring_ideal(h1));
  CHECK(power_of_m(h1, 3).offsets().empty());
  CHECK(power_of_m(h1, 3).stability_bound() == 3);
}

TEST_CASE("ord of the conductor") {
  auto ord_c = [](std::vector<Int> gens) {
    const auto h = make_semigroup(std::move(gens));
    return ord_of_ideal(conductor_ideal(h));
  };
  CHECK(ord_c({4, 5, 7}) == 1);
  CHECK(ord_c({6, 8, 11, 13, 15}) == 1);
  CHECK(ord_c({4, 5, 11}) == 1);
  CHECK(ord_c({4, 5, 6}) == 2);
  CHECK(ord_c({2, 3}) == 1);
  CHECK(ord_c({1}) == 0);  // regular: C = R
}

TEST_CASE("ord errors and generic ideals") {
  const auto h = make_semigroup({3, 4, 5});
  CHECK_THROWS_AS(ord_of_ideal(canonical_ideal(h)), NotContainedError);
  CHECK(ord_of_ideal(ring_ideal(h)) == 0);
  CHECK(ord_of_ideal(from_generators(h, {3})) == 1);
  CHECK(ord_of_ideal(from_generators(h, {6, 7, 8})) == 2);
}

TEST_CASE("Hilbert colengths") {
  const auto h34 = make_semigroup({3, 4});
  CHECK(hilbert_colength(h34, 2) == 3);  // mu(m) + 1
  CHECK(hilbert_colength(h34, 0) == 0);
  for (Int n = 0; n <= 2; ++n) CHECK(hilbert_colength(h34, n) == n * (n + 1) / 2);

  // strictly increasing in n (dimension one)
  for (auto gens : {std::vector<Int>{3, 4}, {4, 5, 7}, {1}, {6, 8, 11, 13, 15}}) {
    const auto h = make_semigroup(gens);
    for (Int n = 0; n <= 8; ++n)
      REQUIRE(hilbert_colength(h, n + 1) > hilbert_colength(h, n));
  }
}

TEST_CASE("mu of powers") {
  const auto h34 = make_semigroup({3, 4});
  CHECK(mu_of_power(h34, 2) == 3);
  CHECK(mu_of_power(h34, 5) == 3);  // = e from there on
  CHECK(mu_of_power(h34, 1) == h34->embdim());
  for (auto gens : {std::vector<Int>{4, 5, 7}, {5, 6, 7}, {2, 3}}) {
    const auto h = make_semigroup(gens);
    CHECK(mu_of_power(h, 1) == h->embdim());
    // mu(m^n) = l(R/m^{n+1}) - l(R/m^n)
    for (Int n = 1; n <= 5; ++n)
      REQUIRE(mu_of_power(h, n) == hilbert_colength(h, n + 1) - hilbert_colength(h, n));
  }
}

TEST_CASE("ord window restriction agrees with brute force, generators in [2,15]") {
  const Int lo = 2, hi = 15;
  const Int n = hi - lo + 1;
  for (Int mask = 1; mask < (Int{1} << n); ++mask) {
    std::vector<Int> gens;
    Int d = 0;
    for (Int i = 0; i < n; ++i) {
      if (mask & (Int{1} << i)) {
        gens.push_back(lo + i);
        d = std::gcd(d, lo + i);
      }
    }
    if (d != 1) continue;
    const auto h = make_semigroup(gens);
    const ZIdeal cond = conductor_ideal(h);
    const Int fast = ord_of_ideal(cond);
    // brute force: largest n with C <= m^n, by exact containment
    Int slow = 0;
    while (is_subset(cond, power_of_m(h, slow + 1))) ++slow;
    REQUIRE(fast == slow);
    // and the min of maxlen over [c, 4c] is already attained in [c, c+e)
    FactorizationTable t(h);
    Int full = -1;
    for (Int s = h->conductor_number(); s <= 4 * std::max<Int>(h->conductor_number(), 1); ++s) {
      const auto l = t.maxlen(s);
      REQUIRE(l.has_value());
      if (full < 0 || *l < full) full = *l;
    }
    REQUIRE(full == fast);
  }
}

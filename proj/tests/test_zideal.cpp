#include "doctest.h"

#include "nsring/errors.hpp"
#include "nsring/zideal.hpp"

using namespace nsring;

TEST_CASE("from_generators canonical forms") {
  const auto h345 = make_semigroup({3, 4, 5});
  const ZIdeal omega = from_generators(h345, {3, 4});
  CHECK(omega.offsets() == std::vector<Int>{3, 4});
  CHECK(omega.stability_bound() == 6);

  CHECK(from_generators(h345, {0}) == ring_ideal(h345));

  const auto h457 = make_semigroup({4, 5, 7});
  CHECK(from_generators(h457, {4, 5, 7}) == maximal_ideal(h457));

  CHECK_THROWS_AS(from_generators(h345, {}), EmptyGeneratorsError);
}

TEST_CASE("conductor ideal") {
  const auto h457 = make_semigroup({4, 5, 7});
  const ZIdeal c = conductor_ideal(h457);
  CHECK(c.offsets().empty());
  CHECK(c.stability_bound() == 7);

  const auto h1 = make_semigroup({1});
  CHECK(conductor_ideal(h1) == ring_ideal(h1));  // regular: C = R

  const auto h345 = make_semigroup({3, 4, 5});
  CHECK(conductor_ideal(h345) == maximal_ideal(h345));
}

TEST_CASE("canonical ideal") {
  const auto h345 = make_semigroup({3, 4, 5});
  const ZIdeal k = canonical_ideal(h345);
  CHECK(k.offsets() == std::vector<Int>{0, 1});
  CHECK(k.stability_bound() == 3);
  CHECK(shift(k, 3) == from_generators(h345, {3, 4}));

  const auto h23 = make_semigroup({2, 3});
  CHECK(canonical_ideal(h23) == ring_ideal(h23));  // Gorenstein

  const auto h457 = make_semigroup({4, 5, 7});
  const ZIdeal k457 = canonical_ideal(h457);
  CHECK(k457.offsets() == std::vector<Int>{0, 3, 4, 5});
  CHECK(k457.stability_bound() == 7);

  CHECK(canonical_ideal(make_semigroup({1})) == normalization_ideal(make_semigroup({1})));
}

TEST_CASE("colon") {
  const auto h4679 = make_semigroup({4, 6, 7, 9});
  const ZIdeal m = maximal_ideal(h4679);
  const ZIdeal mm = colon(m, m);
  CHECK(mm.offsets() == std::vector<Int>{0});
  CHECK(mm.stability_bound() == 2);  // value set of <2,3>

  const auto h345 = make_semigroup({3, 4, 5});
  CHECK(colon(ring_ideal(h345), conductor_ideal(h345)) == normalization_ideal(h345));

  // (E : E) contains H for any E
  const ZIdeal e = from_generators(h345, {-2, 4});
  CHECK(is_subset(ring_ideal(h345), colon(e, e)));

  const auto other = make_semigroup({2, 3});
  CHECK_THROWS_AS(colon(ring_ideal(h345), ring_ideal(other)), ParentMismatchError);
}

TEST_CASE("dual and bidual") {
  const auto h4679 = make_semigroup({4, 6, 7, 9});
  CHECK(dual(conductor_ideal(h4679)) == normalization_ideal(h4679));
  CHECK(bidual(conductor_ideal(h4679)) == conductor_ideal(h4679));
  CHECK(is_reflexive(conductor_ideal(h4679)));

  const auto h345 = make_semigroup({3, 4, 5});
  CHECK(dual(ring_ideal(h345)) == ring_ideal(h345));
  CHECK(dual(canonical_ideal(h345)) == conductor_ideal(h345));
  CHECK(bidual(canonical_ideal(h345)) == normalization_ideal(h345));
  CHECK_FALSE(is_reflexive(canonical_ideal(h345)));
  CHECK(is_reflexive(ring_ideal(h345)));
}

TEST_CASE("trace") {
  const auto h4679 = make_semigroup({4, 6, 7, 9});
  CHECK(trace(canonical_ideal(h4679)) == maximal_ideal(h4679));
  CHECK(trace(ring_ideal(h4679)) == ring_ideal(h4679));

  const auto h567 = make_semigroup({5, 6, 7});
  const ZIdeal tr = trace(canonical_ideal(h567));
  CHECK(tr == maximal_ideal(h567));  // nearly Gorenstein, not far-flung
  CHECK(tr != conductor_ideal(h567));
}

TEST_CASE("colength") {
  const auto h4679 = make_semigroup({4, 6, 7, 9});
  CHECK(colength_in_ring(conductor_ideal(h4679)) == 2);
  CHECK(colength_in_ring(ring_ideal(h4679)) == 0);

  const auto h345 = make_semigroup({3, 4, 5});
  CHECK(colength_in_ring(from_generators(h345, {3, 4})) == 2);

  // the canonical ideal of a non-Gorenstein ring is fractional, not in R
  CHECK_THROWS_AS(colength_in_ring(canonical_ideal(h345)), NotContainedError);
  CHECK_THROWS_AS(colength_in_ring(normalization_ideal(h345)), NotContainedError);
}

TEST_CASE("minimal generators of ideals") {
  const auto h457 = make_semigroup({4, 5, 7});
  CHECK(minimal_generators(conductor_ideal(h457)) == std::vector<Int>{7, 8, 9, 10});
  CHECK(minimal_generators(ring_ideal(h457)) == std::vector<Int>{0});

  const auto h34 = make_semigroup({3, 4});
  const ZIdeal m2 = from_generators(h34, {6, 7, 8});
  CHECK(minimal_generators(m2) == std::vector<Int>{6, 7, 8});

  // regeneration: from_generators(minimal_generators(E)) = E
  const auto h345 = make_semigroup({3, 4, 5});
  for (const ZIdeal& e :
       {conductor_ideal(h345), canonical_ideal(h345), from_generators(h345, {-1, 2, 5})}) {
    CHECK(from_generators(h345, minimal_generators(e)) == e);
  }
}

TEST_CASE("self-duality") {
  const auto h345 = make_semigroup({3, 4, 5});
  const auto r = is_self_dual(ring_ideal(h345));
  CHECK(r.self_dual);
  CHECK(r.witness_shift == 0);

  const auto h23 = make_semigroup({2, 3});
  for (Int k : {0, 2, 3, 7}) {
    CHECK(is_self_dual(from_generators(h23, {k})).self_dual);  // principal
  }

  CHECK_FALSE(is_self_dual(canonical_ideal(h345)).self_dual);
}

TEST_CASE("ideal classes") {
  const auto h345 = make_semigroup({3, 4, 5});
  const ZIdeal m = maximal_ideal(h345);
  CHECK(ideal_class(m) == ideal_class(shift(m, 5)));
  CHECK(ideal_class(bidual(canonical_ideal(h345))) == ideal_class(m));
  CHECK(ideal_class(m) != ideal_class(ring_ideal(h345)));
}

TEST_CASE("conductor is (R : normalization)") {
  for (auto gens : {std::vector<Int>{4, 5, 7}, {2, 3}, {3, 4, 5}, {6, 8, 11, 13, 15}, {1}}) {
    const auto h = make_semigroup(gens);
    CHECK(conductor_ideal(h) == colon(ring_ideal(h), normalization_ideal(h)));
  }
}

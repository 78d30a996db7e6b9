#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nsring/semigroup.hpp"

namespace nsring {

/// A fractional monomial ideal of k[[H]], i.e. a nonempty subset E of Z that
/// is bounded below and satisfies E + H = E, stored in canonical form as a
/// finite offset set S together with the least b with E = S u [b, oo) and
/// S < b, b minimal (so b-1 is never in E).
class ZIdeal {
 public:
  /// Canonicalizes (offsets u [stability_bound, oo)) and checks the ideal
  /// property; throws std::logic_error if the set is not an H-ideal.
  static ZIdeal from_set(SemigroupHandle parent, std::vector<Int> offsets, Int stability_bound);

  const SemigroupHandle& parent() const noexcept { return parent_; }
  const std::vector<Int>& offsets() const noexcept { return offsets_; }
  Int stability_bound() const noexcept { return stability_bound_; }

  Int min_element() const noexcept {
    return offsets_.empty() ? stability_bound_ : offsets_.front();
  }

  bool contains(Int x) const noexcept;

  /// Sorted elements of E in (-oo, hi).
  std::vector<Int> elements_below(Int hi) const;

  /// "({3,4} | 6)" — offsets and stability bound.
  std::string to_string() const;

  friend bool operator==(const ZIdeal& a, const ZIdeal& b) {
    return *a.parent_ == *b.parent_ && a.stability_bound_ == b.stability_bound_ &&
           a.offsets_ == b.offsets_;
  }
  friend bool operator!=(const ZIdeal& a, const ZIdeal& b) { return !(a == b); }

 private:
  ZIdeal(SemigroupHandle parent, std::vector<Int> offsets, Int stability_bound)
      : parent_(std::move(parent)),
        offsets_(std::move(offsets)),
        stability_bound_(stability_bound) {}

  SemigroupHandle parent_;
  std::vector<Int> offsets_;  // sorted, strictly below stability_bound_
  Int stability_bound_;
};

/// E = gens + H in canonical form. Throws EmptyGeneratorsError.
ZIdeal from_generators(const SemigroupHandle& h, std::vector<Int> gens);

/// H itself as an ideal (the ring R).
ZIdeal ring_ideal(const SemigroupHandle& h);

/// m = H \ {0}, the maximal ideal.
ZIdeal maximal_ideal(const SemigroupHandle& h);

/// The conductor: all n >= c(H).
ZIdeal conductor_ideal(const SemigroupHandle& h);

/// Value set of the canonical module: K = {x in Z : F(H) - x not in H}.
ZIdeal canonical_ideal(const SemigroupHandle& h);

/// The normalization k[[t]] as the ideal Z>=0.
ZIdeal normalization_ideal(const SemigroupHandle& h);

ZIdeal shift(const ZIdeal& e, Int z);

/// Sumset E + F (the product of the monomial ideals).
ZIdeal sum(const ZIdeal& e, const ZIdeal& f);

/// (E : F) = {z in Z : z + F <= E}. Throws ParentMismatchError.
ZIdeal colon(const ZIdeal& e, const ZIdeal& f);

/// E* = (R : E) = Hom(E, R).
ZIdeal dual(const ZIdeal& e);
ZIdeal bidual(const ZIdeal& e);

/// tr(E) = E + (R : E); always an ideal contained in H.
ZIdeal trace(const ZIdeal& e);

bool is_subset(const ZIdeal& a, const ZIdeal& b);

/// |big \ small|; requires small <= big.
Int set_difference_size(const ZIdeal& big, const ZIdeal& small);

/// E is reflexive iff E = (R : (R : E)).
bool is_reflexive(const ZIdeal& e);

struct SelfDualResult {
  bool self_dual = false;
  std::optional<Int> witness_shift;  // z with dual(E) = E + z, when self-dual
};

/// The candidate shift is forced by the minima, so the test is a single
/// comparison of canonical forms.
SelfDualResult is_self_dual(const ZIdeal& e);

/// l(R/E) = |H \ E| for E <= H; throws NotContainedError otherwise.
Int colength_in_ring(const ZIdeal& e);

/// E \ (E + m): the unique minimal monomial generating set.
std::vector<Int> minimal_generators(const ZIdeal& e);

/// Isomorphism class of E as an R-module: fractional monomial ideals are
/// isomorphic iff they agree after shifting minima to 0.
struct IdealClass {
  ZIdeal representative;
  friend bool operator==(const IdealClass& a, const IdealClass& b) {
    return a.representative == b.representative;
  }
  friend bool operator!=(const IdealClass& a, const IdealClass& b) { return !(a == b); }
};

IdealClass ideal_class(const ZIdeal& e);

}  // namespace nsring

#include "nsring/zideal.hpp"

#include <algorithm>
#include <stdexcept>

#include "nsring/errors.hpp"

namespace nsring {

namespace {

void check_same_parent(const ZIdeal& a, const ZIdeal& b) {
  if (!(*a.parent() == *b.parent())) throw ParentMismatchError();
}

}  // namespace

ZIdeal ZIdeal::from_set(SemigroupHandle parent, std::vector<Int> offsets, Int stability_bound) {
  std::sort(offsets.begin(), offsets.end());
  offsets.erase(std::unique(offsets.begin(), offsets.end()), offsets.end());
  while (!offsets.empty() && offsets.back() >= stability_bound) offsets.pop_back();
  while (!offsets.empty() && offsets.back() == stability_bound - 1) {
    offsets.pop_back();
    --stability_bound;
  }
  ZIdeal e(std::move(parent), std::move(offsets), stability_bound);
  for (Int s : e.offsets_) {
    for (Int g : e.parent_->minimal_generators()) {
      if (!e.contains(s + g)) throw std::logic_error("ZIdeal::from_set: not an H-ideal");
    }
  }
  return e;
}

bool ZIdeal::contains(Int x) const noexcept {
  if (x >= stability_bound_) return true;
  return std::binary_search(offsets_.begin(), offsets_.end(), x);
}

std::vector<Int> ZIdeal::elements_below(Int hi) const {
  std::vector<Int> out;
  for (Int s : offsets_) {
    if (s >= hi) break;
    out.push_back(s);
  }
  for (Int s = stability_bound_; s < hi; ++s) out.push_back(s);
  return out;
}

std::string ZIdeal::to_string() const {
  std::string out = "({";
  for (std::size_t i = 0; i < offsets_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(offsets_[i]);
  }
  out += "} | ";
  out += std::to_string(stability_bound_);
  out += ')';
  return out;
}

ZIdeal from_generators(const SemigroupHandle& h, std::vector<Int> gens) {
  if (gens.empty()) throw EmptyGeneratorsError();
  std::sort(gens.begin(), gens.end());
  const Int c = h->conductor_number();
  const Int lo = gens.front();
  const Int bound = lo + c;  // g + s >= lo + c is always reachable from g = lo
  std::vector<Int> offs;
  for (Int g : gens) {
    for (Int s : h->members_below(bound - g)) offs.push_back(g + s);
  }
  return ZIdeal::from_set(h, std::move(offs), bound);
}

ZIdeal ring_ideal(const SemigroupHandle& h) {
  return ZIdeal::from_set(h, h->members_below(h->conductor_number()), h->conductor_number());
}

ZIdeal maximal_ideal(const SemigroupHandle& h) {
  const Int c = h->conductor_number();
  if (c == 0) return ZIdeal::from_set(h, {}, 1);
  std::vector<Int> offs = h->members_below(c);
  offs.erase(offs.begin());  // drop 0
  return ZIdeal::from_set(h, std::move(offs), c);
}

ZIdeal conductor_ideal(const SemigroupHandle& h) {
  return ZIdeal::from_set(h, {}, h->conductor_number());
}

ZIdeal canonical_ideal(const SemigroupHandle& h) {
  const Int f = h->frobenius();
  std::vector<Int> offs;
  for (Int g : h->gaps()) offs.push_back(f - g);
  return ZIdeal::from_set(h, std::move(offs), h->conductor_number());
}

ZIdeal normalization_ideal(const SemigroupHandle& h) { return ZIdeal::from_set(h, {}, 0); }

ZIdeal shift(const ZIdeal& e, Int z) {
  std::vector<Int> offs = e.offsets();
  for (Int& s : offs) s += z;
  return ZIdeal::from_set(e.parent(), std::move(offs), e.stability_bound() + z);
}

ZIdeal sum(const ZIdeal& e, const ZIdeal& f) {
  check_same_parent(e, f);
  const Int lo = e.min_element() + f.min_element();
  const Int hi = std::min(e.stability_bound() + f.min_element(),
                          f.stability_bound() + e.min_element());
  std::vector<std::uint8_t> mark(static_cast<std::size_t>(hi - lo), 0);
  for (Int a : e.elements_below(hi - f.min_element())) {
    for (Int b : f.elements_below(hi - a)) mark[static_cast<std::size_t>(a + b - lo)] = 1;
  }
  std::vector<Int> offs;
  for (Int x = lo; x < hi; ++x)
    if (mark[static_cast<std::size_t>(x - lo)]) offs.push_back(x);
  return ZIdeal::from_set(e.parent(), std::move(offs), hi);
}

ZIdeal colon(const ZIdeal& e, const ZIdeal& f) {
  check_same_parent(e, f);
  const Int lo = e.min_element() - f.min_element();
  const Int hi = e.stability_bound() - f.min_element();
  // Only the finitely many elements of F with z + f below b_E can reject z.
  const std::vector<Int> fs = f.elements_below(e.stability_bound() - lo);
  std::vector<Int> offs;
  for (Int z = lo; z < hi; ++z) {
    bool ok = true;
    for (Int y : fs) {
      if (z + y >= e.stability_bound()) break;
      if (!e.contains(z + y)) {
        ok = false;
        break;
      }
    }
    if (ok) offs.push_back(z);
  }
  return ZIdeal::from_set(e.parent(), std::move(offs), hi);
}

ZIdeal dual(const ZIdeal& e) { return colon(ring_ideal(e.parent()), e); }

ZIdeal bidual(const ZIdeal& e) { return dual(dual(e)); }

ZIdeal trace(const ZIdeal& e) { return sum(e, dual(e)); }

bool is_subset(const ZIdeal& a, const ZIdeal& b) {
  check_same_parent(a, b);
  const Int hi = std::max(a.stability_bound(), b.stability_bound());
  for (Int x : a.elements_below(hi))
    if (!b.contains(x)) return false;
  return true;
}

Int set_difference_size(const ZIdeal& big, const ZIdeal& small) {
  if (!is_subset(small, big)) throw std::logic_error("set_difference_size: not a subset");
  const Int hi = std::max(big.stability_bound(), small.stability_bound());
  Int count = 0;
  for (Int x : big.elements_below(hi))
    if (!small.contains(x)) ++count;
  return count;
}

bool is_reflexive(const ZIdeal& e) { return bidual(e) == e; }

SelfDualResult is_self_dual(const ZIdeal& e) {
  const ZIdeal d = dual(e);
  const Int z = d.min_element() - e.min_element();
  if (shift(e, z) == d) return {true, z};
  return {false, std::nullopt};
}

Int colength_in_ring(const ZIdeal& e) {
  const NumericalSemigroup& h = *e.parent();
  if (e.min_element() < 0) throw NotContainedError();
  for (Int s : e.offsets())
    if (!h.contains(s)) throw NotContainedError();
  const Int c = h.conductor_number();
  for (Int s = e.stability_bound(); s < c; ++s)
    if (!h.contains(s)) throw NotContainedError();
  const Int hi = std::max(e.stability_bound(), c);
  Int count = 0;
  for (Int s : h.members_below(hi))
    if (!e.contains(s)) ++count;
  return count;
}

std::vector<Int> minimal_generators(const ZIdeal& e) {
  const NumericalSemigroup& h = *e.parent();
  std::vector<Int> out;
  // Anything at or above b + e(H) is reachable by adding the multiplicity.
  for (Int x : e.elements_below(e.stability_bound() + h.multiplicity())) {
    bool reachable = false;
    for (Int g : h.minimal_generators()) {
      if (e.contains(x - g)) {
        reachable = true;
        break;
      }
    }
    if (!reachable) out.push_back(x);
  }
  return out;
}

IdealClass ideal_class(const ZIdeal& e) { return IdealClass{shift(e, -e.min_element())}; }

}  // namespace nsring

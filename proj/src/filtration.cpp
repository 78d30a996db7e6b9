#include "nsring/filtration.hpp"

#include <algorithm>
#include <stdexcept>

#include "nsring/errors.hpp"

namespace nsring {

namespace {
constexpr Int kMaxWindow = Int{1} << 24;
}

FactorizationTable::FactorizationTable(SemigroupHandle h) : parent_(std::move(h)) {
  len_.push_back(0);  // maxlen(0) = 0
}

void FactorizationTable::ensure(Int s) const {
  const Int have = static_cast<Int>(len_.size());
  if (s < have) return;
  Int want = std::max<Int>(s + 1, 2 * have);
  if (want > kMaxWindow) {
    if (s + 1 > kMaxWindow) throw WindowLimitError(s + 1);
    want = s + 1;
  }
  len_.reserve(static_cast<std::size_t>(want));
  for (Int t = have; t < want; ++t) {
    Int best = -1;
    for (Int g : parent_->minimal_generators()) {
      if (g > t) break;
      const Int prev = len_[static_cast<std::size_t>(t - g)];
      if (prev >= 0) best = std::max(best, prev + 1);
    }
    len_.push_back(best);
  }
}

std::optional<Int> FactorizationTable::maxlen(Int s) const {
  if (s < 0) return std::nullopt;
  ensure(s);
  const Int v = len_[static_cast<std::size_t>(s)];
  if (v < 0) return std::nullopt;
  return v;
}

ZIdeal power_of_m(const SemigroupHandle& h, Int n) {
  if (n < 0) throw Error("power_of_m: negative exponent");
  if (n == 0) return ring_ideal(h);
  const Int bound = h->conductor_number() + n * h->multiplicity();
  FactorizationTable table(h);
  std::vector<Int> offs;
  for (Int s = 0; s < bound; ++s) {
    const auto l = table.maxlen(s);
    if (l && *l >= n) offs.push_back(s);
  }
  return ZIdeal::from_set(h, std::move(offs), bound);
}

Int ord_of_ideal(const ZIdeal& e) {
  colength_in_ring(e);  // containment check (value unused)
  FactorizationTable table(e.parent());
  Int best = -1;
  for (Int x : minimal_generators(e)) {
    const auto l = table.maxlen(x);
    if (!l) throw std::logic_error("ord_of_ideal: generator outside H");
    if (best < 0 || *l < best) best = *l;
  }
  return best;
}

Int hilbert_colength(const SemigroupHandle& h, Int n) {
  if (n < 0) throw Error("hilbert_colength: negative exponent");
  const Int bound = h->conductor_number() + n * h->multiplicity();
  FactorizationTable table(h);
  Int count = 0;
  for (Int s = 0; s < bound; ++s) {
    const auto l = table.maxlen(s);
    if (l && *l < n) ++count;
  }
  return count;
}

Int mu_of_power(const SemigroupHandle& h, Int n) {
  if (n < 1) throw Error("mu_of_power: exponent must be >= 1");
  return static_cast<Int>(minimal_generators(power_of_m(h, n)).size());
}

}  // namespace nsring

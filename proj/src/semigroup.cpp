#include "nsring/semigroup.hpp"

#include <algorithm>
#include <numeric>

#include "nsring/errors.hpp"

namespace nsring {

namespace {

constexpr Int kMaxWindow = Int{1} << 24;

// Membership table of the monoid generated by `gens` on [0, window).
std::vector<std::uint8_t> membership_table(const std::vector<Int>& gens, Int window) {
  if (window > kMaxWindow) throw WindowLimitError(window);
  std::vector<std::uint8_t> mem(static_cast<std::size_t>(window), 0);
  mem[0] = 1;
  for (Int s = 1; s < window; ++s) {
    for (Int g : gens) {
      if (g > s) break;
      if (mem[static_cast<std::size_t>(s - g)]) {
        mem[static_cast<std::size_t>(s)] = 1;
        break;
      }
    }
  }
  return mem;
}

}  // namespace

NumericalSemigroup NumericalSemigroup::construct(std::vector<Int> generators) {
  if (generators.empty()) throw EmptyGeneratorsError();
  for (Int g : generators)
    if (g <= 0) throw ZeroGeneratorError(g);
  std::sort(generators.begin(), generators.end());
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
  Int d = 0;
  for (Int g : generators) d = std::gcd(d, g);
  if (d != 1) throw NonCoprimeError(d);

  const Int gmin = generators.front();
  const Int gmax = generators.back();

  // Find the Frobenius number: run the membership DP until gmin consecutive
  // members appear; everything past such a run is in H. The initial window
  // gmin*gmax suffices in practice, but the loop doubles if it ever does not.
  Int window = std::max<Int>(gmin * gmax + 2, gmax + 2);
  std::vector<std::uint8_t> mem;
  Int frob = -2;
  while (frob == -2) {
    mem = membership_table(generators, window);
    Int last_gap = -1;
    for (Int s = 1; s < window; ++s) {
      if (!mem[static_cast<std::size_t>(s)]) {
        last_gap = s;
      } else if (s - last_gap >= gmin) {
        frob = last_gap;
        break;
      }
    }
    if (frob == -2) window *= 2;
  }

  const Int c = frob + 1;
  // Minimal-generator extraction needs membership up to c + gmin inclusive.
  if (window < c + gmin + 2) mem = membership_table(generators, c + gmin + 2);

  NumericalSemigroup h;
  h.frobenius_ = frob;
  // s is a minimal generator iff s in H and s is not a sum of two nonzero
  // members; the latter holds iff s - g is a nonzero member for some input
  // generator g.
  for (Int s = 1; s <= c + gmin; ++s) {
    if (!mem[static_cast<std::size_t>(s)]) continue;
    bool decomposable = false;
    for (Int g : generators) {
      if (g >= s) break;
      if (mem[static_cast<std::size_t>(s - g)]) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) h.minimal_generators_.push_back(s);
  }
  for (Int s = 0; s < c; ++s)
    if (!mem[static_cast<std::size_t>(s)]) h.gaps_.push_back(s);
  h.member_below_c_.assign(mem.begin(), mem.begin() + c);

  if (c == 0) {
    h.pseudo_frobenius_ = {-1};
  } else {
    for (Int x : h.gaps_) {
      bool pf = true;
      for (Int g : h.minimal_generators_) {
        if (!h.contains(x + g)) {
          pf = false;
          break;
        }
      }
      if (pf) h.pseudo_frobenius_.push_back(x);
    }
  }
  return h;
}

bool NumericalSemigroup::contains(Int s) const noexcept {
  if (s < 0) return false;
  if (s >= conductor_number()) return true;
  return member_below_c_[static_cast<std::size_t>(s)] != 0;
}

std::vector<Int> NumericalSemigroup::members_below(Int hi) const {
  std::vector<Int> out;
  const Int c = conductor_number();
  for (Int s = 0; s < std::min(c, hi); ++s)
    if (member_below_c_[static_cast<std::size_t>(s)]) out.push_back(s);
  for (Int s = c; s < hi; ++s) out.push_back(s);
  return out;
}

std::vector<Int> NumericalSemigroup::apery_set(Int n) const {
  if (n <= 0 || !contains(n)) throw NotAMemberError(n);
  std::vector<Int> out;
  out.reserve(static_cast<std::size_t>(n));
  for (Int r = 0; r < n; ++r) {
    Int s = r;
    while (!contains(s)) s += n;
    out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

SemigroupHandle make_semigroup(std::vector<Int> generators) {
  return std::make_shared<const NumericalSemigroup>(
      NumericalSemigroup::construct(std::move(generators)));
}

std::string format_generators(const std::vector<Int>& gens) {
  std::string out = "<";
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(gens[i]);
  }
  out += '>';
  return out;
}

}  // namespace nsring

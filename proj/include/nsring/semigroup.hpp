#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace nsring {

using Int = std::int64_t;

/// A numerical semigroup H: a cofinite additive submonoid of the nonnegative
/// integers, kept in canonical form (minimal generators, gap set, Frobenius
/// number). Immutable after construction; safe to share between threads.
class NumericalSemigroup {
 public:
  /// Normalizes an arbitrary generating set: sorts, removes duplicates and
  /// redundant generators, and computes all cached invariants.
  /// Throws EmptyGeneratorsError, ZeroGeneratorError, NonCoprimeError.
  static NumericalSemigroup construct(std::vector<Int> generators);

  const std::vector<Int>& minimal_generators() const noexcept { return minimal_generators_; }

  /// Largest integer not in H; -1 when H is all of Z>=0.
  Int frobenius() const noexcept { return frobenius_; }

  /// c = F(H) + 1; every s >= c lies in H.
  Int conductor_number() const noexcept { return frobenius_ + 1; }

  const std::vector<Int>& gaps() const noexcept { return gaps_; }
  Int genus() const noexcept { return static_cast<Int>(gaps_.size()); }

  /// Least nonzero element of H; the multiplicity of k[[H]].
  Int multiplicity() const noexcept { return minimal_generators_.front(); }

  /// Number of minimal generators; the embedding dimension of k[[H]].
  Int embdim() const noexcept { return static_cast<Int>(minimal_generators_.size()); }

  /// True exactly when H = Z>=0, i.e. k[[H]] = k[[t]] is regular.
  bool is_regular() const noexcept { return frobenius_ == -1; }

  bool contains(Int s) const noexcept;

  /// Sorted members of H in [0, hi).
  std::vector<Int> members_below(Int hi) const;

  /// Least elements of H in each residue class mod n, sorted ascending.
  /// Requires n a nonzero element of H; throws NotAMemberError otherwise.
  std::vector<Int> apery_set(Int n) const;

  /// PF(H) = {x not in H : x + h in H for every nonzero h in H}, sorted.
  /// For H = Z>=0 this is {-1}; max(PF) = F(H) and |PF| = type(H) >= 1.
  const std::vector<Int>& pseudo_frobenius() const noexcept { return pseudo_frobenius_; }
  Int type() const noexcept { return static_cast<Int>(pseudo_frobenius_.size()); }

  friend bool operator==(const NumericalSemigroup& a, const NumericalSemigroup& b) {
    return a.minimal_generators_ == b.minimal_generators_;
  }
  friend bool operator!=(const NumericalSemigroup& a, const NumericalSemigroup& b) {
    return !(a == b);
  }

 private:
  NumericalSemigroup() = default;

  std::vector<Int> minimal_generators_;
  std::vector<Int> gaps_;
  std::vector<Int> pseudo_frobenius_;
  std::vector<std::uint8_t> member_below_c_;  // membership table on [0, c)
  Int frobenius_ = -1;
};

/// Shared immutable handle; ZIdeal and the scan machinery hold these.
using SemigroupHandle = std::shared_ptr<const NumericalSemigroup>;

SemigroupHandle make_semigroup(std::vector<Int> generators);

/// "<4,5,7>" — used in messages and table output.
std::string format_generators(const std::vector<Int>& gens);

}  // namespace nsring

#pragma once

#include <optional>

#include "nsring/zideal.hpp"

namespace nsring {

/// Memoized maximal factorization lengths over the minimal generators:
/// maxlen(s) = max { sum a_i : s = sum a_i g_i }, so t^s lies in m^n exactly
/// when maxlen(s) >= n. The table grows on demand; a single instance is not
/// safe for concurrent use, so parallel scans each own one.
class FactorizationTable {
 public:
  explicit FactorizationTable(SemigroupHandle h);

  const SemigroupHandle& parent() const noexcept { return parent_; }

  /// nullopt iff s is not in H.
  std::optional<Int> maxlen(Int s) const;

 private:
  void ensure(Int s) const;

  SemigroupHandle parent_;
  mutable std::vector<Int> len_;  // len_[s] = -1 marks a gap
};

/// Value set of m^n: {s in H : maxlen(s) >= n}; n = 0 gives H itself.
ZIdeal power_of_m(const SemigroupHandle& h, Int n);

/// ord(E) = max { n : E <= m^n } = min of maxlen over the minimal generators
/// of E. Requires E <= H (throws NotContainedError); 0 iff E = H.
Int ord_of_ideal(const ZIdeal& e);

/// l(R/m^n) = #{s in H : maxlen(s) < n}.
Int hilbert_colength(const SemigroupHandle& h, Int n);

/// mu(m^n), n >= 1.
Int mu_of_power(const SemigroupHandle& h, Int n);

}  // namespace nsring

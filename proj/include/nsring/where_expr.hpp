#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "nsring/semigroup.hpp"

namespace nsring {

/// Row filter for scans: comparisons over integer-valued report fields,
/// e.g. "e - embdim == 1 && ord_conductor < 2".
///
/// Grammar:  expr := cmp ("&&" cmp)* ;  cmp := sum [(==|!=|<=|>=|<|>) sum] ;
///           sum := term (("+"|"-") term)* ;  term := INT | IDENT | "(" expr ")".
/// A bare sum is truthy when nonzero. A comparison with an absent field
/// (nullopt from the lookup) is false, so rows missing a field never match.
class WhereExpr {
 public:
  using Lookup = std::function<std::optional<Int>(const std::string&)>;

  static WhereExpr parse(const std::string& src);  // throws WhereSyntaxError

  bool eval(const Lookup& lookup) const;

  /// All identifiers mentioned, for up-front validation.
  const std::vector<std::string>& identifiers() const noexcept { return identifiers_; }

 private:
  struct Node {
    enum class Kind { literal, ident, add, sub, cmp, conj } kind;
    Int value = 0;       // literal
    std::string name;    // ident
    std::string op;      // cmp operator
    int lhs = -1, rhs = -1;
    std::vector<int> children;  // conj
  };

  std::optional<Int> eval_num(int node, const Lookup& lookup) const;
  bool eval_bool(int node, const Lookup& lookup) const;

  std::vector<Node> nodes_;
  std::vector<std::string> identifiers_;
  int root_ = -1;

  friend class WhereParser;
};

}  // namespace nsring

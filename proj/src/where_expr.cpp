#include "nsring/where_expr.hpp"

#include <cctype>

#include "nsring/errors.hpp"

namespace nsring {

namespace {

struct Token {
  enum class Kind { integer, ident, op, end } kind;
  std::string text;
  Int value = 0;
};

std::vector<Token> tokenize(const std::string& src) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < src.size()) {
    const char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      out.push_back({Token::Kind::integer, src.substr(i, j - i),
                     static_cast<Int>(std::stoll(src.substr(i, j - i)))});
      i = j;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < src.size() &&
             (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_'))
        ++j;
      out.push_back({Token::Kind::ident, src.substr(i, j - i), 0});
      i = j;
      continue;
    }
    static const char* two_char[] = {"&&", "==", "!=", "<=", ">="};
    bool matched = false;
    for (const char* op : two_char) {
      if (src.compare(i, 2, op) == 0) {
        out.push_back({Token::Kind::op, op, 0});
        i += 2;
        matched = true;
        break;
      }
    }
    if (matched) continue;
    if (c == '<' || c == '>' || c == '+' || c == '-' || c == '(' || c == ')') {
      out.push_back({Token::Kind::op, std::string(1, c), 0});
      ++i;
      continue;
    }
    throw WhereSyntaxError(std::string("unexpected character '") + c + "'");
  }
  out.push_back({Token::Kind::end, "", 0});
  return out;
}

}  // namespace

class WhereParser {
 public:
  WhereParser(std::vector<Token> tokens, WhereExpr& expr)
      : tokens_(std::move(tokens)), expr_(expr) {}

  void run() {
    expr_.root_ = parse_conj();
    if (!at_end()) throw WhereSyntaxError("trailing input at '" + peek().text + "'");
  }

 private:
  using Node = WhereExpr::Node;

  const Token& peek() const { return tokens_[pos_]; }
  bool at_end() const { return peek().kind == Token::Kind::end; }
  bool accept_op(const std::string& op) {
    if (peek().kind == Token::Kind::op && peek().text == op) {
      ++pos_;
      return true;
    }
    return false;
  }

  int add_node(Node n) {
    expr_.nodes_.push_back(std::move(n));
    return static_cast<int>(expr_.nodes_.size()) - 1;
  }

  int parse_conj() {
    Node n;
    n.kind = Node::Kind::conj;
    n.children.push_back(parse_cmp());
    while (accept_op("&&")) n.children.push_back(parse_cmp());
    if (n.children.size() == 1) return n.children[0];
    return add_node(std::move(n));
  }

  int parse_cmp() {
    const int lhs = parse_sum();
    static const char* cmps[] = {"==", "!=", "<=", ">=", "<", ">"};
    for (const char* op : cmps) {
      if (accept_op(op)) {
        Node n;
        n.kind = Node::Kind::cmp;
        n.op = op;
        n.lhs = lhs;
        n.rhs = parse_sum();
        return add_node(std::move(n));
      }
    }
    return lhs;
  }

  int parse_sum() {
    int lhs = parse_term();
    for (;;) {
      if (accept_op("+")) {
        Node n;
        n.kind = Node::Kind::add;
        n.lhs = lhs;
        n.rhs = parse_term();
        lhs = add_node(std::move(n));
      } else if (accept_op("-")) {
        Node n;
        n.kind = Node::Kind::sub;
        n.lhs = lhs;
        n.rhs = parse_term();
        lhs = add_node(std::move(n));
      } else {
        return lhs;
      }
    }
  }

  int parse_term() {
    if (peek().kind == Token::Kind::integer) {
      Node n;
      n.kind = Node::Kind::literal;
      n.value = peek().value;
      ++pos_;
      return add_node(std::move(n));
    }
    if (peek().kind == Token::Kind::ident) {
      const std::string name = peek().text;
      ++pos_;
      if (name == "true" || name == "false") {
        Node n;
        n.kind = Node::Kind::literal;
        n.value = (name == "true") ? 1 : 0;
        return add_node(std::move(n));
      }
      Node n;
      n.kind = Node::Kind::ident;
      n.name = name;
      expr_.identifiers_.push_back(name);
      return add_node(std::move(n));
    }
    if (accept_op("(")) {
      const int inner = parse_conj();
      if (!accept_op(")")) throw WhereSyntaxError("missing ')'");
      return inner;
    }
    throw WhereSyntaxError("expected a value at '" + peek().text + "'");
  }

  std::vector<Token> tokens_;
  WhereExpr& expr_;
  std::size_t pos_ = 0;
};

WhereExpr WhereExpr::parse(const std::string& src) {
  WhereExpr expr;
  WhereParser parser(tokenize(src), expr);
  parser.run();
  return expr;
}

std::optional<Int> WhereExpr::eval_num(int node, const Lookup& lookup) const {
  const Node& n = nodes_[static_cast<std::size_t>(node)];
  switch (n.kind) {
    case Node::Kind::literal:
      return n.value;
    case Node::Kind::ident:
      return lookup(n.name);
    case Node::Kind::add:
    case Node::Kind::sub: {
      const auto a = eval_num(n.lhs, lookup);
      const auto b = eval_num(n.rhs, lookup);
      if (!a || !b) return std::nullopt;
      return n.kind == Node::Kind::add ? *a + *b : *a - *b;
    }
    default:
      return std::nullopt;  // boolean node in numeric position
  }
}

bool WhereExpr::eval_bool(int node, const Lookup& lookup) const {
  const Node& n = nodes_[static_cast<std::size_t>(node)];
  switch (n.kind) {
    case Node::Kind::conj:
      for (int child : n.children)
        if (!eval_bool(child, lookup)) return false;
      return true;
    case Node::Kind::cmp: {
      const auto a = eval_num(n.lhs, lookup);
      const auto b = eval_num(n.rhs, lookup);
      if (!a || !b) return false;
      if (n.op == "==") return *a == *b;
      if (n.op == "!=") return *a != *b;
      if (n.op == "<=") return *a <= *b;
      if (n.op == ">=") return *a >= *b;
      if (n.op == "<") return *a < *b;
      return *a > *b;
    }
    default: {
      const auto v = eval_num(node, lookup);
      return v.has_value() && *v != 0;
    }
  }
}

bool WhereExpr::eval(const Lookup& lookup) const { return eval_bool(root_, lookup); }

}  // namespace nsring

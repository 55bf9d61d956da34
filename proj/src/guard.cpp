#include "buchi/guard.hpp"

#include <algorithm>
#include <cctype>

#include "buchi/errors.hpp"

namespace buchi {

PropSet make_prop_set(std::vector<std::string> names) {
  std::sort(names.begin(), names.end());
  names.erase(std::unique(names.begin(), names.end()), names.end());
  return names;
}

bool prop_set_contains(const PropSet& props, const std::string& name) {
  return std::binary_search(props.begin(), props.end(), name);
}

struct Guard::Node {
  enum class Kind { True, False, Atom, Not, And, Or };
  Kind kind;
  std::string name;  // Atom
  std::shared_ptr<const Node> lhs, rhs;
};

using Node = Guard::Node;
using Kind = Guard::Node::Kind;

Guard Guard::constant(bool value) {
  return Guard(std::make_shared<Node>(Node{value ? Kind::True : Kind::False, {}, nullptr, nullptr}));
}

Guard Guard::atom(std::string name) {
  return Guard(std::make_shared<Node>(Node{Kind::Atom, std::move(name), nullptr, nullptr}));
}

Guard Guard::negate(Guard g) {
  return Guard(std::make_shared<Node>(Node{Kind::Not, {}, std::move(g.node_), nullptr}));
}

Guard Guard::conjunction(Guard lhs, Guard rhs) {
  return Guard(std::make_shared<Node>(Node{Kind::And, {}, std::move(lhs.node_), std::move(rhs.node_)}));
}

Guard Guard::disjunction(Guard lhs, Guard rhs) {
  return Guard(std::make_shared<Node>(Node{Kind::Or, {}, std::move(lhs.node_), std::move(rhs.node_)}));
}

namespace {

bool eval_node(const Node& n, const PropSet& props) {
  switch (n.kind) {
    case Kind::True:
      return true;
    case Kind::False:
      return false;
    case Kind::Atom:
      return prop_set_contains(props, n.name);
    case Kind::Not:
      return !eval_node(*n.lhs, props);
    case Kind::And:
      return eval_node(*n.lhs, props) && eval_node(*n.rhs, props);
    case Kind::Or:
      return eval_node(*n.lhs, props) || eval_node(*n.rhs, props);
  }
  return false;
}

void atoms_of(const Node& n, std::vector<std::string>& out) {
  switch (n.kind) {
    case Kind::Atom:
      out.push_back(n.name);
      break;
    case Kind::Not:
      atoms_of(*n.lhs, out);
      break;
    case Kind::And:
    case Kind::Or:
      atoms_of(*n.lhs, out);
      atoms_of(*n.rhs, out);
      break;
    default:
      break;
  }
}

int precedence(Kind k) {
  switch (k) {
    case Kind::Or:
      return 1;
    case Kind::And:
      return 2;
    default:
      return 3;
  }
}

void print_node(const Node& n, std::string& out, int parent_prec) {
  int prec = precedence(n.kind);
  bool parens = prec < parent_prec;
  if (parens)
    out += '(';
  switch (n.kind) {
    case Kind::True:
      out += "true";
      break;
    case Kind::False:
      out += "false";
      break;
    case Kind::Atom:
      out += n.name;
      break;
    case Kind::Not:
      out += '!';
      print_node(*n.lhs, out, 3);
      break;
    case Kind::And:
      // the parser associates left, so a right child of equal precedence
      // needs parentheses to round-trip structurally
      print_node(*n.lhs, out, 2);
      out += " & ";
      print_node(*n.rhs, out, 3);
      break;
    case Kind::Or:
      print_node(*n.lhs, out, 1);
      out += " | ";
      print_node(*n.rhs, out, 2);
      break;
  }
  if (parens)
    out += ')';
}

bool equal_nodes(const Node& a, const Node& b) {
  if (a.kind != b.kind)
    return false;
  switch (a.kind) {
    case Kind::True:
    case Kind::False:
      return true;
    case Kind::Atom:
      return a.name == b.name;
    case Kind::Not:
      return equal_nodes(*a.lhs, *b.lhs);
    case Kind::And:
    case Kind::Or:
      return equal_nodes(*a.lhs, *b.lhs) && equal_nodes(*a.rhs, *b.rhs);
  }
  return false;
}

}  // namespace

bool Guard::evaluate(const PropSet& props) const { return eval_node(*node_, props); }

void Guard::collect_atoms(std::vector<std::string>& out) const { atoms_of(*node_, out); }

std::string Guard::to_string() const {
  std::string out;
  print_node(*node_, out, 0);
  return out;
}

bool Guard::operator==(const Guard& other) const { return equal_nodes(*node_, *other.node_); }

bool Guard::is_constant_true() const { return node_->kind == Kind::True; }

namespace {

class GuardParser {
 public:
  explicit GuardParser(std::string_view text) : text_(text) {}

  Guard parse() {
    Guard g = expr();
    skip_space();
    if (pos_ != text_.size())
      fail("unexpected trailing input");
    return g;
  }

 private:
  Guard expr() {
    Guard g = term();
    while (peek() == '|') {
      ++pos_;
      g = Guard::disjunction(std::move(g), term());
    }
    return g;
  }

  Guard term() {
    Guard g = factor();
    while (peek() == '&') {
      ++pos_;
      g = Guard::conjunction(std::move(g), factor());
    }
    return g;
  }

  Guard factor() {
    char c = peek();
    if (c == '!') {
      ++pos_;
      return Guard::negate(factor());
    }
    if (c == '(') {
      ++pos_;
      Guard g = expr();
      if (peek() != ')')
        fail("expected ')'");
      ++pos_;
      return g;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      if (name == "true")
        return Guard::constant(true);
      if (name == "false")
        return Guard::constant(false);
      return Guard::atom(std::move(name));
    }
    fail(c == '\0' ? "unexpected end of guard" : "unexpected character");
    return Guard::constant(false);  // unreachable
  }

  // Returns the next significant character without consuming it, '\0' at end.
  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) {
    throw ParseError("guard syntax error: " + what + " in \"" + std::string(text_) + "\"", 1, pos_ + 1);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Guard parse_guard(std::string_view text) { return GuardParser(text).parse(); }

}  // namespace buchi

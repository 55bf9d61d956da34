#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace buchi {

/// Sorted, duplicate-free proposition names.
using PropSet = std::vector<std::string>;

PropSet make_prop_set(std::vector<std::string> names);
bool prop_set_contains(const PropSet& props, const std::string& name);

/// Immutable boolean expression over proposition names. Atoms evaluate to
/// true iff their name is in the proposition set; unknown atoms are false.
class Guard {
 public:
  Guard() : Guard(constant(true)) {}

  static Guard constant(bool value);
  static Guard atom(std::string name);
  static Guard negate(Guard g);
  static Guard conjunction(Guard lhs, Guard rhs);
  static Guard disjunction(Guard lhs, Guard rhs);

  bool evaluate(const PropSet& props) const;

  /// All atom names occurring in the expression.
  void collect_atoms(std::vector<std::string>& out) const;

  /// Re-parsable text with minimal parentheses.
  std::string to_string() const;

  /// Structural equality.
  bool operator==(const Guard& other) const;

  bool is_constant_true() const;

  struct Node;  // implementation detail, defined in guard.cpp

 private:
  explicit Guard(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// Grammar, with precedence ! > & > |:
///   expr   := term ('|' term)*
///   term   := factor ('&' factor)*
///   factor := '!' factor | '(' expr ')' | 'true' | 'false' | ident
/// Throws ParseError with a 1-based column position on syntax errors.
Guard parse_guard(std::string_view text);

inline bool eval_guard(const Guard& g, const PropSet& props) { return g.evaluate(props); }

}  // namespace buchi

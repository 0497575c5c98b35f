#pragma once

#include <cctype>
#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dsmt/element_code.hpp"
#include "dsmt/errors.hpp"
#include "dsmt/frame.hpp"

namespace dsmt {

// Focal-element expression: singleton references combined with `u` (union)
// and `n` (intersection). Both operators share one precedence level and
// associate to the LEFT, so `1n2u3` means `(1n2)u3`, not `1n(2u3)`.
// Parentheses override. Immutable; copies share nodes.
class Expression {
 public:
  enum class Kind { singleton, union_op, intersection_op };

  static Expression singleton(int index) {
    return Expression(std::make_shared<const Node>(Node{Kind::singleton, index, nullptr, nullptr}));
  }
  static Expression make_union(Expression left, Expression right) {
    return Expression(std::make_shared<const Node>(
        Node{Kind::union_op, 0, std::move(left.node_), std::move(right.node_)}));
  }
  static Expression make_intersection(Expression left, Expression right) {
    return Expression(std::make_shared<const Node>(
        Node{Kind::intersection_op, 0, std::move(left.node_), std::move(right.node_)}));
  }

  Kind kind() const { return node_->kind; }
  int singleton_index() const { return node_->index; }
  Expression left() const { return Expression(node_->left); }
  Expression right() const { return Expression(node_->right); }

  bool same_tree(const Expression& other) const {
    return same_tree(node_.get(), other.node_.get());
  }

 private:
  struct Node {
    Kind kind;
    int index;
    std::shared_ptr<const Node> left;
    std::shared_ptr<const Node> right;
  };

  explicit Expression(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  static bool same_tree(const Node* a, const Node* b) {
    if (a == b) return true;
    if (!a || !b || a->kind != b->kind) return false;
    if (a->kind == Kind::singleton) return a->index == b->index;
    return same_tree(a->left.get(), b->left.get()) &&
           same_tree(a->right.get(), b->right.get());
  }

  std::shared_ptr<const Node> node_;
};

namespace detail {

// Recursive-descent parser for
//   expr := term (('u'|'n') term)*
//   term := INT | '(' expr ')'
// Whitespace is ignored; INT is a decimal singleton index (multi-digit ok).
class ExpressionParser {
 public:
  explicit ExpressionParser(std::string_view text) : text_(text) {}

  Expression parse() {
    skip_space();
    if (at_end()) throw ParseError("empty expression", 0);
    Expression e = parse_expr();
    skip_space();
    if (!at_end()) {
      throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
    }
    return e;
  }

 private:
  Expression parse_expr() {
    Expression e = parse_term();
    while (true) {
      skip_space();
      if (at_end()) return e;
      char c = text_[pos_];
      if (c != 'u' && c != 'n') return e;
      ++pos_;
      Expression rhs = parse_term();
      e = (c == 'u') ? Expression::make_union(std::move(e), std::move(rhs))
                     : Expression::make_intersection(std::move(e), std::move(rhs));
    }
  }

  Expression parse_term() {
    skip_space();
    if (at_end()) throw ParseError("dangling operator", pos_);
    char c = text_[pos_];
    if (c == '(') {
      std::size_t open = pos_++;
      Expression e = parse_expr();
      skip_space();
      if (at_end() || text_[pos_] != ')') {
        throw ParseError("unbalanced parenthesis", open);
      }
      ++pos_;
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      long value = 0;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        value = value * 10 + (text_[pos_] - '0');
        if (value > 1'000'000) throw ParseError("singleton index too large", start);
        ++pos_;
      }
      if (value < 1) throw ParseError("singleton indices start at 1", start);
      return Expression::singleton(static_cast<int>(value));
    }
    throw ParseError(std::string("unexpected '") + c + "'", pos_);
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline Expression parse_expression(std::string_view text) {
  return detail::ExpressionParser(text).parse();
}

// Evaluate against a frame (reduced or not): singleton refs pick up the
// frame's codes, `u`/`n` become set union/intersection of the codes.
inline ElementCode eval_expression(const Expression& expr, const Frame& frame) {
  switch (expr.kind()) {
    case Expression::Kind::singleton:
      return frame.singleton(expr.singleton_index());
    case Expression::Kind::union_op:
      return code_union(eval_expression(expr.left(), frame),
                        eval_expression(expr.right(), frame));
    case Expression::Kind::intersection_op:
      return code_intersection(eval_expression(expr.left(), frame),
                               eval_expression(expr.right(), frame));
  }
  throw EvalError("corrupt expression node");
}

}  // namespace dsmt

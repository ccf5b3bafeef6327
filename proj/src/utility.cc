// Copyright 2026 The MONFG Toolkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "monfg/utility.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <optional>
#include <system_error>

#include "monfg/errors.h"

namespace monfg {

struct UtilityExpr::Node {
  Kind kind;
  double value = 0.0;
  int index = 0;
  int exponent = 0;
  std::vector<UtilityExpr> children;
};

namespace {

std::string FormatDouble(double value) {
  char buffer[64];
  const auto result = std::to_chars(buffer, buffer + sizeof(buffer), value);
  return std::string(buffer, result.ptr);
}

std::string_view OperatorName(UtilityExpr::Kind kind) {
  switch (kind) {
    case UtilityExpr::Kind::kNegate:
      return "neg";
    case UtilityExpr::Kind::kAdd:
      return "+";
    case UtilityExpr::Kind::kSubtract:
      return "-";
    case UtilityExpr::Kind::kMultiply:
      return "*";
    case UtilityExpr::Kind::kPower:
      return "pow";
    case UtilityExpr::Kind::kMax:
      return "max";
    case UtilityExpr::Kind::kMin:
      return "min";
    default:
      return "";
  }
}

}  // namespace

UtilityExpr UtilityExpr::Constant(double value) {
  if (!std::isfinite(value)) {
    throw InvalidInputError("utility constants must be finite");
  }
  Node node;
  node.kind = Kind::kConstant;
  node.value = value;
  return UtilityExpr(std::make_shared<const Node>(std::move(node)));
}

UtilityExpr UtilityExpr::Variable(int index) {
  if (index < 1) {
    throw InvalidInputError("objective variables are numbered from 1");
  }
  Node node;
  node.kind = Kind::kVariable;
  node.index = index;
  return UtilityExpr(std::make_shared<const Node>(std::move(node)));
}

UtilityExpr UtilityExpr::Negate(UtilityExpr operand) {
  return UtilityExpr(std::make_shared<const Node>(
      Node{.kind = Kind::kNegate, .children = {std::move(operand)}}));
}

UtilityExpr UtilityExpr::Add(std::vector<UtilityExpr> terms) {
  if (terms.empty()) throw InvalidInputError("+ needs at least one operand");
  return UtilityExpr(std::make_shared<const Node>(
      Node{.kind = Kind::kAdd, .children = std::move(terms)}));
}

UtilityExpr UtilityExpr::Subtract(UtilityExpr lhs, UtilityExpr rhs) {
  return UtilityExpr(std::make_shared<const Node>(Node{
      .kind = Kind::kSubtract, .children = {std::move(lhs), std::move(rhs)}}));
}

UtilityExpr UtilityExpr::Multiply(std::vector<UtilityExpr> factors) {
  if (factors.empty()) throw InvalidInputError("* needs at least one operand");
  return UtilityExpr(std::make_shared<const Node>(
      Node{.kind = Kind::kMultiply, .children = std::move(factors)}));
}

UtilityExpr UtilityExpr::Power(UtilityExpr base, int exponent) {
  if (exponent < 0) throw InvalidInputError("pow exponent must be >= 0");
  return UtilityExpr(
      std::make_shared<const Node>(Node{.kind = Kind::kPower,
                                        .exponent = exponent,
                                        .children = {std::move(base)}}));
}

UtilityExpr UtilityExpr::Max(std::vector<UtilityExpr> operands) {
  if (operands.size() < 2) throw InvalidInputError("max needs two operands");
  return UtilityExpr(std::make_shared<const Node>(
      Node{.kind = Kind::kMax, .children = std::move(operands)}));
}

UtilityExpr UtilityExpr::Min(std::vector<UtilityExpr> operands) {
  if (operands.size() < 2) throw InvalidInputError("min needs two operands");
  return UtilityExpr(std::make_shared<const Node>(
      Node{.kind = Kind::kMin, .children = std::move(operands)}));
}

UtilityExpr::Kind UtilityExpr::kind() const { return node_->kind; }
double UtilityExpr::constant() const { return node_->value; }
int UtilityExpr::variable() const { return node_->index; }
int UtilityExpr::exponent() const { return node_->exponent; }
const std::vector<UtilityExpr>& UtilityExpr::children() const {
  return node_->children;
}

double UtilityExpr::Evaluate(std::span<const double> x) const {
  const Node& node = *node_;
  switch (node.kind) {
    case Kind::kConstant:
      return node.value;
    case Kind::kVariable:
      if (static_cast<std::size_t>(node.index) > x.size()) {
        throw InvalidInputError(
            "utility refers to p" + std::to_string(node.index) + " but only " +
            std::to_string(x.size()) + " objectives are available");
      }
      return x[node.index - 1];
    case Kind::kNegate:
      return -node.children[0].Evaluate(x);
    case Kind::kAdd: {
      double sum = 0.0;
      for (const auto& child : node.children) sum += child.Evaluate(x);
      return sum;
    }
    case Kind::kSubtract:
      return node.children[0].Evaluate(x) - node.children[1].Evaluate(x);
    case Kind::kMultiply: {
      double product = 1.0;
      for (const auto& child : node.children) product *= child.Evaluate(x);
      return product;
    }
    case Kind::kPower: {
      const double base = node.children[0].Evaluate(x);
      double result = 1.0;
      for (int k = 0; k < node.exponent; ++k) result *= base;
      return result;
    }
    case Kind::kMax: {
      double best = node.children[0].Evaluate(x);
      for (std::size_t c = 1; c < node.children.size(); ++c) {
        best = std::max(best, node.children[c].Evaluate(x));
      }
      return best;
    }
    case Kind::kMin: {
      double best = node.children[0].Evaluate(x);
      for (std::size_t c = 1; c < node.children.size(); ++c) {
        best = std::min(best, node.children[c].Evaluate(x));
      }
      return best;
    }
  }
  return 0.0;
}

int UtilityExpr::MaxVariableIndex() const {
  int result = node_->kind == Kind::kVariable ? node_->index : 0;
  for (const auto& child : node_->children) {
    result = std::max(result, child.MaxVariableIndex());
  }
  return result;
}

std::string UtilityExpr::ToString() const {
  const Node& node = *node_;
  switch (node.kind) {
    case Kind::kConstant:
      return FormatDouble(node.value);
    case Kind::kVariable:
      return "p" + std::to_string(node.index);
    default:
      break;
  }
  std::string out = "(";
  out += OperatorName(node.kind);
  for (const auto& child : node.children) {
    out += ' ';
    out += child.ToString();
  }
  if (node.kind == Kind::kPower) {
    out += ' ';
    out += std::to_string(node.exponent);
  }
  out += ')';
  return out;
}

bool UtilityExpr::operator==(const UtilityExpr& other) const {
  if (node_ == other.node_) return true;
  const Node& a = *node_;
  const Node& b = *other.node_;
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case Kind::kConstant:
      // Bitwise comparison so that -0 and 0 are distinct trees.
      return std::signbit(a.value) == std::signbit(b.value) &&
             a.value == b.value;
    case Kind::kVariable:
      return a.index == b.index;
    case Kind::kPower:
      if (a.exponent != b.exponent) return false;
      break;
    default:
      break;
  }
  return a.children == b.children;
}

namespace {

struct Token {
  enum class Type { kOpen, kClose, kAtom, kEnd };
  Type type;
  std::string_view text;
  std::size_t position;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  UtilityExpr ParseAll() {
    if (Peek().type == Token::Type::kEnd) {
      throw ParseError("empty utility expression", Peek().position);
    }
    UtilityExpr expr = ParseExpr();
    const Token trailing = Peek();
    if (trailing.type != Token::Type::kEnd) {
      throw ParseError(
          "unexpected trailing input '" + std::string(trailing.text) + "'",
          trailing.position);
    }
    return expr;
  }

 private:
  static bool IsDelimiter(char c) {
    return c == '(' || c == ')' || c == ' ' || c == '\t' || c == '\n' ||
           c == '\r' || c == '\f' || c == '\v';
  }

  Token Peek() {
    if (!lookahead_) lookahead_ = Lex();
    return *lookahead_;
  }

  Token Next() {
    Token token = Peek();
    lookahead_.reset();
    return token;
  }

  Token Lex() {
    while (pos_ < text_.size() && IsDelimiter(text_[pos_]) &&
           text_[pos_] != '(' && text_[pos_] != ')') {
      ++pos_;
    }
    if (pos_ == text_.size()) return {Token::Type::kEnd, "", pos_};
    const std::size_t start = pos_;
    if (text_[pos_] == '(') {
      ++pos_;
      return {Token::Type::kOpen, text_.substr(start, 1), start};
    }
    if (text_[pos_] == ')') {
      ++pos_;
      return {Token::Type::kClose, text_.substr(start, 1), start};
    }
    while (pos_ < text_.size() && !IsDelimiter(text_[pos_])) ++pos_;
    return {Token::Type::kAtom, text_.substr(start, pos_ - start), start};
  }

  static UtilityExpr ParseAtom(const Token& token) {
    const std::string_view text = token.text;
    if (text.size() >= 2 && text[0] == 'p') {
      int index = 0;
      const auto [ptr, ec] =
          std::from_chars(text.data() + 1, text.data() + text.size(), index);
      if (ec != std::errc() || ptr != text.data() + text.size() ||
          text[1] == '-' || text[1] == '+') {
        throw ParseError("malformed variable '" + std::string(text) + "'",
                         token.position);
      }
      if (index < 1) {
        throw ParseError("variables are numbered from p1", token.position);
      }
      return UtilityExpr::Variable(index);
    }
    double value = 0.0;
    const auto [ptr, ec] =
        std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size() ||
        !std::isfinite(value)) {
      throw ParseError(
          "expected a number or variable, got '" + std::string(text) + "'",
          token.position);
    }
    return UtilityExpr::Constant(value);
  }

  UtilityExpr ParseExpr() {
    const Token token = Next();
    switch (token.type) {
      case Token::Type::kAtom:
        return ParseAtom(token);
      case Token::Type::kOpen:
        return ParseForm(token);
      case Token::Type::kClose:
        throw ParseError("unexpected ')'", token.position);
      case Token::Type::kEnd:
        throw ParseError("unexpected end of input", token.position);
    }
    throw ParseError("unreachable", token.position);
  }

  UtilityExpr ParseForm(const Token& open) {
    const Token op = Next();
    if (op.type != Token::Type::kAtom) {
      throw ParseError("expected an operator after '('", op.position);
    }
    const std::string_view name = op.text;
    if (name == "pow") {
      UtilityExpr base = ParseExpr();
      const Token exponent_token = Next();
      int exponent = -1;
      if (exponent_token.type == Token::Type::kAtom) {
        const std::string_view t = exponent_token.text;
        const auto [ptr, ec] =
            std::from_chars(t.data(), t.data() + t.size(), exponent);
        if (ec != std::errc() || ptr != t.data() + t.size()) exponent = -1;
      }
      if (exponent < 0) {
        throw ParseError("pow needs a non-negative integer exponent",
                         exponent_token.position);
      }
      ExpectClose("pow");
      return UtilityExpr::Power(std::move(base), exponent);
    }

    static constexpr std::string_view kVariadic[] = {"+",   "*",   "-",
                                                     "neg", "max", "min"};
    if (std::find(std::begin(kVariadic), std::end(kVariadic), name) ==
        std::end(kVariadic)) {
      throw ParseError("unknown operator '" + std::string(name) + "'",
                       op.position);
    }
    std::vector<UtilityExpr> operands;
    while (Peek().type != Token::Type::kClose) {
      if (Peek().type == Token::Type::kEnd) {
        throw ParseError("unclosed '('", open.position);
      }
      operands.push_back(ParseExpr());
    }
    const Token close = Next();
    const auto arity_error = [&](const char* expected) {
      return ParseError("'" + std::string(name) + "' expects " + expected +
                            ", got " + std::to_string(operands.size()),
                        close.position);
    };
    if (name == "+") {
      if (operands.empty()) throw arity_error("at least one operand");
      return UtilityExpr::Add(std::move(operands));
    }
    if (name == "*") {
      if (operands.empty()) throw arity_error("at least one operand");
      return UtilityExpr::Multiply(std::move(operands));
    }
    if (name == "-") {
      if (operands.size() != 2) throw arity_error("two operands");
      return UtilityExpr::Subtract(std::move(operands[0]),
                                   std::move(operands[1]));
    }
    if (name == "neg") {
      if (operands.size() != 1) throw arity_error("one operand");
      return UtilityExpr::Negate(std::move(operands[0]));
    }
    if (name == "max") {
      if (operands.size() < 2) throw arity_error("at least two operands");
      return UtilityExpr::Max(std::move(operands));
    }
    if (name == "min") {
      if (operands.size() < 2) throw arity_error("at least two operands");
      return UtilityExpr::Min(std::move(operands));
    }
    throw ParseError("unknown operator '" + std::string(name) + "'",
                     op.position);
  }

  void ExpectClose(std::string_view form) {
    const Token token = Next();
    if (token.type != Token::Type::kClose) {
      throw ParseError("expected ')' to close '" + std::string(form) + "'",
                       token.position);
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::optional<Token> lookahead_;
};

}  // namespace

UtilityExpr ParseUtility(std::string_view text) {
  return Parser(text).ParseAll();
}

UtilityExpr LinearUtility(std::span<const double> weights) {
  if (weights.empty()) {
    throw InvalidInputError("linear utility needs at least one weight");
  }
  std::vector<UtilityExpr> terms;
  terms.reserve(weights.size());
  for (std::size_t o = 0; o < weights.size(); ++o) {
    terms.push_back(UtilityExpr::Multiply(
        {UtilityExpr::Constant(weights[o]),
         UtilityExpr::Variable(static_cast<int>(o) + 1)}));
  }
  return UtilityExpr::Add(std::move(terms));
}

}  // namespace monfg

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

#ifndef MONFG_UTILITY_H_
#define MONFG_UTILITY_H_

#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace monfg {

// An immutable expression tree for a utility function u: R^d -> R.
//
// The text form is an s-expression. Atoms are decimal literals or objective
// variables `p<k>` with k >= 1. Forms:
//
//   (+ e...)   (- e e)   (* e...)   (neg e)
//   (pow e <non-negative int>)   (max e e...)   (min e e...)
//
// There is no division and no fractional power, so evaluation is total on
// finite inputs.
class UtilityExpr {
 public:
  enum class Kind {
    kConstant,
    kVariable,
    kNegate,
    kAdd,
    kSubtract,
    kMultiply,
    kPower,
    kMax,
    kMin,
  };

  static UtilityExpr Constant(double value);
  // `index` is 1-based, matching the `p<k>` spelling.
  static UtilityExpr Variable(int index);
  static UtilityExpr Negate(UtilityExpr operand);
  static UtilityExpr Add(std::vector<UtilityExpr> terms);
  static UtilityExpr Subtract(UtilityExpr lhs, UtilityExpr rhs);
  static UtilityExpr Multiply(std::vector<UtilityExpr> factors);
  static UtilityExpr Power(UtilityExpr base, int exponent);
  static UtilityExpr Max(std::vector<UtilityExpr> operands);
  static UtilityExpr Min(std::vector<UtilityExpr> operands);

  Kind kind() const;
  double constant() const;
  int variable() const;
  int exponent() const;
  const std::vector<UtilityExpr>& children() const;

  // Throws InvalidInputError if a variable index exceeds x.size().
  double Evaluate(std::span<const double> x) const;

  // Largest variable index in the tree, 0 if there are none.
  int MaxVariableIndex() const;

  // Canonical s-expression; literals use the shortest round-trip spelling.
  std::string ToString() const;

  // Structural equality.
  bool operator==(const UtilityExpr& other) const;

 private:
  struct Node;
  explicit UtilityExpr(std::shared_ptr<const Node> node)
      : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

// Throws ParseError with the character offset of the first problem.
UtilityExpr ParseUtility(std::string_view text);

// sum_o weights[o] * p_{o+1}.
UtilityExpr LinearUtility(std::span<const double> weights);

inline double EvalUtility(const UtilityExpr& u, std::span<const double> x) {
  return u.Evaluate(x);
}

}  // namespace monfg

#endif  // MONFG_UTILITY_H_

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

#ifndef MONFG_SHAPE_H_
#define MONFG_SHAPE_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "monfg/game.h"
#include "monfg/utility.h"

namespace monfg {

// Convexity classes a utility function can be tested against.
enum class Shape {
  kConvex,
  kConcave,
  kQuasiconvex,
  kQuasiconcave,
  kStrictlyConvex,
  kStrictlyConcave,
  kStrictlyQuasiconvex,
  kStrictlyQuasiconcave,
};

inline constexpr Shape kAllShapes[] = {
    Shape::kConvex,
    Shape::kConcave,
    Shape::kQuasiconvex,
    Shape::kQuasiconcave,
    Shape::kStrictlyConvex,
    Shape::kStrictlyConcave,
    Shape::kStrictlyQuasiconvex,
    Shape::kStrictlyQuasiconcave,
};

std::string_view ShapeName(Shape shape);
std::optional<Shape> ParseShape(std::string_view name);
bool IsStrict(Shape shape);

// Axis-aligned box [lo_k, hi_k] in objective space.
struct BoxDomain {
  std::vector<double> lo;
  std::vector<double> hi;

  int dims() const { return static_cast<int>(lo.size()); }
  // Throws InvalidInputError unless lo <= hi componentwise and all finite.
  void Validate() const;
};

// Componentwise bounding box of every payoff vector in the game, widened on
// each side by 10% of that side's width (at least 0.1).
BoxDomain DefaultBox(const Monfg& game);

// A sampled triple at which the defining inequality of `shape` fails.
//
// For the "<="-type shapes (convex, quasiconvex and their strict forms)
// lhs = f(lambda x1 + (1 - lambda) x2) and rhs is the bound it must stay
// below; the ">="-type shapes are mirrored. violation_margin is the amount
// by which the tolerance-relaxed inequality fails and is always positive.
struct ShapeCounterexample {
  Shape shape;
  std::vector<double> x1;
  std::vector<double> x2;
  double lambda = 0.0;
  double lhs = 0.0;
  double rhs = 0.0;
  double violation_margin = 0.0;
};

struct ShapeSides {
  double lhs;
  double rhs;
};

// Both sides of the defining inequality of `shape` at (x1, x2, lambda).
ShapeSides EvaluateShapeSides(const UtilityExpr& u, Shape shape,
                              std::span<const double> x1,
                              std::span<const double> x2, double lambda);

// Amount by which (lhs, rhs) fails the inequality of `shape` once relaxed by
// tol. Non-strict shapes fail when lhs exceeds rhs by more than tol
// (mirrored for concave types); strict shapes fail unless lhs stays below
// rhs by more than tol. A positive return value is a violation.
double ShapeViolation(Shape shape, double lhs, double rhs, double tol);

// Checks a single triple; returns the counterexample if it violates.
std::optional<ShapeCounterexample> CheckShapeTriple(const UtilityExpr& u,
                                                    Shape shape,
                                                    std::span<const double> x1,
                                                    std::span<const double> x2,
                                                    double lambda, double tol);

struct FalsifyOptions {
  std::int64_t trials = 100000;
  std::uint64_t seed = 0;
  double tol = 1e-9;
  // Strict shapes sample lambda from (delta, 1 - delta).
  double strict_delta = 1e-3;
};

// Samples (x1, x2, lambda) uniformly from box x box x [0, 1] and returns the
// first triple violating `shape`, or nullopt. A nullopt result is not a
// proof that u has the shape.
std::optional<ShapeCounterexample> FalsifyShape(const UtilityExpr& u,
                                                Shape shape,
                                                const BoxDomain& box,
                                                const FalsifyOptions& options);

struct JensenSides {
  double lhs;  // f(sum_k w_k x_k)
  double rhs;  // max_k f(x_k)
};

// For a strictly quasiconvex f and points not all equal, lhs < rhs.
// Weights must lie in (0, 1) and sum to 1 within 1e-9.
JensenSides JensenGapStrictQuasiconvex(
    const UtilityExpr& u, const std::vector<std::vector<double>>& points,
    std::span<const double> weights);

}  // namespace monfg

#endif  // MONFG_SHAPE_H_

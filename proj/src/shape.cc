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

#include "monfg/shape.h"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "monfg/errors.h"

namespace monfg {
namespace {

bool IsUpperBoundShape(Shape shape) {
  switch (shape) {
    case Shape::kConvex:
    case Shape::kQuasiconvex:
    case Shape::kStrictlyConvex:
    case Shape::kStrictlyQuasiconvex:
      return true;
    default:
      return false;
  }
}

std::vector<double> Combine(std::span<const double> x1,
                            std::span<const double> x2, double lambda) {
  std::vector<double> z(x1.size());
  for (std::size_t k = 0; k < x1.size(); ++k) {
    z[k] = lambda * x1[k] + (1.0 - lambda) * x2[k];
  }
  return z;
}

}  // namespace

std::string_view ShapeName(Shape shape) {
  switch (shape) {
    case Shape::kConvex:
      return "convex";
    case Shape::kConcave:
      return "concave";
    case Shape::kQuasiconvex:
      return "quasiconvex";
    case Shape::kQuasiconcave:
      return "quasiconcave";
    case Shape::kStrictlyConvex:
      return "strictly-convex";
    case Shape::kStrictlyConcave:
      return "strictly-concave";
    case Shape::kStrictlyQuasiconvex:
      return "strictly-quasiconvex";
    case Shape::kStrictlyQuasiconcave:
      return "strictly-quasiconcave";
  }
  return "";
}

std::optional<Shape> ParseShape(std::string_view name) {
  for (Shape shape : kAllShapes) {
    if (ShapeName(shape) == name) return shape;
  }
  return std::nullopt;
}

bool IsStrict(Shape shape) {
  switch (shape) {
    case Shape::kStrictlyConvex:
    case Shape::kStrictlyConcave:
    case Shape::kStrictlyQuasiconvex:
    case Shape::kStrictlyQuasiconcave:
      return true;
    default:
      return false;
  }
}

void BoxDomain::Validate() const {
  if (lo.size() != hi.size() || lo.empty()) {
    throw InvalidInputError("box bounds must be non-empty and equally long");
  }
  for (std::size_t k = 0; k < lo.size(); ++k) {
    if (!std::isfinite(lo[k]) || !std::isfinite(hi[k]) || lo[k] > hi[k]) {
      throw InvalidInputError("box dimension " + std::to_string(k + 1) +
                              " is not a finite interval lo <= hi");
    }
  }
}

BoxDomain DefaultBox(const Monfg& game) {
  const int d = game.num_objectives();
  BoxDomain box{std::vector<double>(d, INFINITY),
                std::vector<double>(d, -INFINITY)};
  for (int i = 0; i < game.num_players(); ++i) {
    for (std::int64_t joint = 0; joint < game.num_joint_actions(); ++joint) {
      const auto payoff = game.Payoff(i, joint);
      for (int o = 0; o < d; ++o) {
        box.lo[o] = std::min(box.lo[o], payoff[o]);
        box.hi[o] = std::max(box.hi[o], payoff[o]);
      }
    }
  }
  for (int o = 0; o < d; ++o) {
    const double pad = std::max(0.1, 0.1 * (box.hi[o] - box.lo[o]));
    box.lo[o] -= pad;
    box.hi[o] += pad;
  }
  return box;
}

ShapeSides EvaluateShapeSides(const UtilityExpr& u, Shape shape,
                              std::span<const double> x1,
                              std::span<const double> x2, double lambda) {
  if (x1.size() != x2.size()) {
    throw InvalidInputError("shape check points differ in dimension");
  }
  const double f1 = u.Evaluate(x1);
  const double f2 = u.Evaluate(x2);
  const double mid = u.Evaluate(Combine(x1, x2, lambda));
  switch (shape) {
    case Shape::kConvex:
    case Shape::kConcave:
    case Shape::kStrictlyConvex:
    case Shape::kStrictlyConcave:
      return {mid, lambda * f1 + (1.0 - lambda) * f2};
    case Shape::kQuasiconvex:
    case Shape::kStrictlyQuasiconvex:
      return {mid, std::max(f1, f2)};
    case Shape::kQuasiconcave:
    case Shape::kStrictlyQuasiconcave:
      return {mid, std::min(f1, f2)};
  }
  return {mid, mid};
}

double ShapeViolation(Shape shape, double lhs, double rhs, double tol) {
  // Oriented so that a positive excess means lhs is on the wrong side.
  const double excess = IsUpperBoundShape(shape) ? lhs - rhs : rhs - lhs;
  return IsStrict(shape) ? excess + tol : excess - tol;
}

std::optional<ShapeCounterexample> CheckShapeTriple(const UtilityExpr& u,
                                                    Shape shape,
                                                    std::span<const double> x1,
                                                    std::span<const double> x2,
                                                    double lambda, double tol) {
  if (!(lambda >= 0.0 && lambda <= 1.0)) {
    throw InvalidInputError("lambda must lie in [0, 1]");
  }
  const ShapeSides sides = EvaluateShapeSides(u, shape, x1, x2, lambda);
  const double violation = ShapeViolation(shape, sides.lhs, sides.rhs, tol);
  if (!(violation > 0.0)) return std::nullopt;
  if (IsStrict(shape) && std::equal(x1.begin(), x1.end(), x2.begin())) {
    return std::nullopt;
  }
  const double margin =
      IsStrict(shape) ? violation : std::abs(sides.lhs - sides.rhs);
  return ShapeCounterexample{
      .shape = shape,
      .x1 = {x1.begin(), x1.end()},
      .x2 = {x2.begin(), x2.end()},
      .lambda = lambda,
      .lhs = sides.lhs,
      .rhs = sides.rhs,
      .violation_margin = margin,
  };
}

std::optional<ShapeCounterexample> FalsifyShape(const UtilityExpr& u,
                                                Shape shape,
                                                const BoxDomain& box,
                                                const FalsifyOptions& options) {
  box.Validate();
  if (options.trials < 1) throw InvalidInputError("trials must be >= 1");
  if (!(options.tol > 0.0)) throw InvalidInputError("tol must be > 0");
  if (!(options.strict_delta > 0.0 && options.strict_delta < 0.5)) {
    throw InvalidInputError("strict delta must lie in (0, 0.5)");
  }
  if (u.MaxVariableIndex() > box.dims()) {
    throw InvalidInputError("utility uses more objectives than the box has");
  }
  const bool strict = IsStrict(shape);
  const bool degenerate =
      std::equal(box.lo.begin(), box.lo.end(), box.hi.begin());
  if (strict && degenerate) return std::nullopt;

  std::mt19937_64 rng(options.seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const int d = box.dims();
  std::vector<double> x1(d);
  std::vector<double> x2(d);
  for (std::int64_t trial = 0; trial < options.trials; ++trial) {
    for (int k = 0; k < d; ++k) {
      x1[k] = box.lo[k] + (box.hi[k] - box.lo[k]) * unit(rng);
      x2[k] = box.lo[k] + (box.hi[k] - box.lo[k]) * unit(rng);
    }
    double lambda = unit(rng);
    if (strict) {
      lambda =
          options.strict_delta + (1.0 - 2.0 * options.strict_delta) * lambda;
      if (x1 == x2) continue;
    }
    if (auto found = CheckShapeTriple(u, shape, x1, x2, lambda, options.tol)) {
      return found;
    }
  }
  return std::nullopt;
}

JensenSides JensenGapStrictQuasiconvex(
    const UtilityExpr& u, const std::vector<std::vector<double>>& points,
    std::span<const double> weights) {
  if (points.size() < 2) {
    throw InvalidInputError("Jensen check needs at least two points");
  }
  if (points.size() != weights.size()) {
    throw InvalidInputError("one weight per point is required");
  }
  const std::size_t d = points.front().size();
  double weight_sum = 0.0;
  for (double w : weights) {
    if (!(w > 0.0 && w < 1.0)) {
      throw InvalidInputError("Jensen weights must lie strictly in (0, 1)");
    }
    weight_sum += w;
  }
  if (std::abs(weight_sum - 1.0) > 1e-9) {
    throw InvalidInputError("Jensen weights must sum to 1");
  }
  bool all_equal = true;
  for (const auto& point : points) {
    if (point.size() != d) {
      throw InvalidInputError("Jensen points differ in dimension");
    }
    all_equal = all_equal && point == points.front();
  }
  if (all_equal) {
    throw InvalidInputError("Jensen points must not all be equal");
  }
  std::vector<double> combination(d, 0.0);
  double rhs = -INFINITY;
  for (std::size_t k = 0; k < points.size(); ++k) {
    for (std::size_t o = 0; o < d; ++o) {
      combination[o] += weights[k] * points[k][o];
    }
    rhs = std::max(rhs, u.Evaluate(points[k]));
  }
  return {u.Evaluate(combination), rhs};
}

}  // namespace monfg

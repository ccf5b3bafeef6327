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

#include "monfg/simplex.h"

#include <algorithm>
#include <cmath>

#include "monfg/errors.h"

namespace monfg {

std::int64_t SimplexGridSize(int dim, int subdivisions) {
  if (dim < 1 || subdivisions < 1) {
    throw InvalidInputError("simplex grid needs dim >= 1 and g >= 1");
  }
  // C(g + dim - 1, dim - 1), computed incrementally to stay exact.
  std::int64_t result = 1;
  for (int k = 1; k < dim; ++k) {
    result = result * (subdivisions + k) / k;
  }
  return result;
}

std::vector<std::vector<double>> SimplexGrid(int dim, int subdivisions) {
  std::vector<std::vector<double>> points;
  points.reserve(SimplexGridSize(dim, subdivisions));
  std::vector<int> counts(dim, 0);
  const double g = subdivisions;
  // Depth-first over counts[0] = g..0, then counts[1], ...
  std::function<void(int, int)> fill = [&](int coord, int remaining) {
    if (coord == dim - 1) {
      counts[coord] = remaining;
      std::vector<double>& point = points.emplace_back(dim);
      for (int k = 0; k < dim; ++k) point[k] = counts[k] / g;
      return;
    }
    for (int c = remaining; c >= 0; --c) {
      counts[coord] = c;
      fill(coord + 1, remaining - c);
    }
  };
  fill(0, subdivisions);
  return points;
}

PatternSearchResult MaximizeOnSimplices(const SimplexObjective& objective,
                                        SimplexPoint start,
                                        const PatternSearchOptions& options) {
  PatternSearchResult result;
  result.point = std::move(start);
  result.value = objective(result.point);
  result.evaluations = 1;
  double step = options.initial_step;
  SimplexPoint candidate = result.point;
  while (step >= options.min_step && result.evaluations < options.budget) {
    bool improved = false;
    for (std::size_t b = 0; b < result.point.size(); ++b) {
      const int dim = static_cast<int>(result.point[b].size());
      for (int from = 0; from < dim; ++from) {
        for (int to = 0; to < dim; ++to) {
          if (to == from || result.point[b][from] <= 0.0) continue;
          if (result.evaluations >= options.budget) break;
          const double moved = std::min(step, result.point[b][from]);
          candidate[b] = result.point[b];
          candidate[b][from] -= moved;
          candidate[b][to] += moved;
          const double value = objective(candidate);
          ++result.evaluations;
          if (value > result.value) {
            result.value = value;
            result.point[b] = candidate[b];
            improved = true;
          } else {
            candidate[b] = result.point[b];
          }
        }
      }
    }
    ++result.iterations;
    if (!improved) step *= 0.5;
  }
  return result;
}

double LInfDistance(const SimplexPoint& a, const SimplexPoint& b) {
  double distance = 0.0;
  for (std::size_t block = 0; block < a.size(); ++block) {
    for (std::size_t k = 0; k < a[block].size(); ++k) {
      distance = std::max(distance, std::abs(a[block][k] - b[block][k]));
    }
  }
  return distance;
}

}  // namespace monfg

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

#ifndef MONFG_SIMPLEX_H_
#define MONFG_SIMPLEX_H_

#include <cstdint>
#include <functional>
#include <vector>

namespace monfg {

// Number of points {k / g : k in N^dim, sum k = g} on the probability
// simplex with `dim` vertices.
std::int64_t SimplexGridSize(int dim, int subdivisions);

// The regular grid above. The first point is the vertex of coordinate 0 and
// the order is lexicographic in the integer counts with the first count
// decreasing.
std::vector<std::vector<double>> SimplexGrid(int dim, int subdivisions);

// A point in a product of probability simplices, one block per simplex.
using SimplexPoint = std::vector<std::vector<double>>;
using SimplexObjective = std::function<double(const SimplexPoint&)>;

struct PatternSearchOptions {
  double initial_step = 0.02;
  double min_step = 1e-10;
  int budget = 2000;
};

struct PatternSearchResult {
  SimplexPoint point;
  double value = 0.0;
  int evaluations = 0;
  int iterations = 0;
};

// Derivative-free local maximization over a product of simplices.
//
// Each poll moves `step` probability mass from one coordinate of a block to
// another (clipped so the source stays non-negative), accepting any strict
// improvement. A poll without improvement halves the step. Stops when the
// step falls below min_step or the evaluation budget is used up.
PatternSearchResult MaximizeOnSimplices(const SimplexObjective& objective,
                                        SimplexPoint start,
                                        const PatternSearchOptions& options);

// L-infinity distance between two points of the same product of simplices.
double LInfDistance(const SimplexPoint& a, const SimplexPoint& b);

}  // namespace monfg

#endif  // MONFG_SIMPLEX_H_

// Copyright 2026 The besov-euler Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <span>

namespace besov::experiments {

struct LineFit {
  double slope = 0.0;
  double intercept = 0.0;
  double residual = 0.0;  // root-mean-square residual of the fitted line
};

// Least squares of log2(y) against x. Needs >= 3 points and y > 0.
LineFit fit_slope(std::span<const double> xs, std::span<const double> ys);

// Least squares of y against x (no transform). Needs >= 2 points.
LineFit fit_line(std::span<const double> xs, std::span<const double> ys);

}  // namespace besov::experiments

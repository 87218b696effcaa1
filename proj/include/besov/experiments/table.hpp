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

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "besov/experiments/fit.hpp"

namespace besov::experiments {

// One gate evaluation. `gate` names an acceptance gate; `relation` is the
// comparison applied to `value` and `threshold` (for display only).
struct Verdict {
  std::string gate;
  bool pass = false;
  double value = 0.0;
  double threshold = 0.0;
  std::string relation;
  std::string detail;
};

class ExperimentTable {
 public:
  ExperimentTable(std::string name, std::vector<std::string> columns);

  const std::string& name() const { return name_; }
  const std::vector<std::string>& columns() const { return columns_; }
  const std::vector<std::vector<double>>& rows() const { return rows_; }

  void add_row(std::vector<double> row);
  std::vector<double> column(const std::string& name) const;
  std::size_t column_index(const std::string& name) const;

  void set_fit(const std::string& name, const LineFit& fit) { fits_[name] = fit; }
  const std::map<std::string, LineFit>& fits() const { return fits_; }
  const LineFit& fit(const std::string& name) const;

  // RFC 4180 style, header row, 17 significant digits.
  void write_csv(std::ostream& out) const;
  // Fits as rows of (name, slope, intercept, residual).
  void write_fits_csv(std::ostream& out) const;

 private:
  std::string name_;
  std::vector<std::string> columns_;
  std::vector<std::vector<double>> rows_;
  std::map<std::string, LineFit> fits_;
};

std::string format_real(double x);
std::string csv_field(const std::string& s);

}  // namespace besov::experiments

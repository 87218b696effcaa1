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

#include "besov/experiments/table.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace besov::experiments {

ExperimentTable::ExperimentTable(std::string name, std::vector<std::string> columns)
    : name_(std::move(name)), columns_(std::move(columns)) {
  if (columns_.empty()) throw std::invalid_argument("table needs at least one column");
}

void ExperimentTable::add_row(std::vector<double> row) {
  if (row.size() != columns_.size())
    throw std::invalid_argument("row width does not match table " + name_);
  rows_.push_back(std::move(row));
}

std::size_t ExperimentTable::column_index(const std::string& name) const {
  for (std::size_t i = 0; i < columns_.size(); ++i)
    if (columns_[i] == name) return i;
  throw std::out_of_range("table " + name_ + " has no column " + name);
}

std::vector<double> ExperimentTable::column(const std::string& name) const {
  const std::size_t c = column_index(name);
  std::vector<double> out;
  out.reserve(rows_.size());
  for (const auto& r : rows_) out.push_back(r[c]);
  return out;
}

const LineFit& ExperimentTable::fit(const std::string& name) const {
  auto it = fits_.find(name);
  if (it == fits_.end()) throw std::out_of_range("table " + name_ + " has no fit " + name);
  return it->second;
}

std::string format_real(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void ExperimentTable::write_csv(std::ostream& out) const {
  for (std::size_t i = 0; i < columns_.size(); ++i)
    out << (i ? "," : "") << csv_field(columns_[i]);
  out << "\r\n";
  for (const auto& r : rows_) {
    for (std::size_t i = 0; i < r.size(); ++i) out << (i ? "," : "") << format_real(r[i]);
    out << "\r\n";
  }
}

void ExperimentTable::write_fits_csv(std::ostream& out) const {
  out << "fit,slope,intercept,residual\r\n";
  for (const auto& [name, f] : fits_)
    out << csv_field(name) << "," << format_real(f.slope) << "," << format_real(f.intercept) << ","
        << format_real(f.residual) << "\r\n";
}

}  // namespace besov::experiments

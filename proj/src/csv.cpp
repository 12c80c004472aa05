// Copyright 2026 The ghzsim Authors
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

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "ghzsim/scenario.hpp"

namespace ghzsim {

void write_csv(const std::string& path, const TimeSeries& ts, double time_scale,
               const std::string& time_label) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("write_csv: cannot open '" + path + "'");
  out << time_label;
  for (const auto& l : ts.labels) out << "," << l;
  out << "\n";
  char buf[40];
  for (size_t i = 0; i < ts.times.size(); ++i) {
    std::snprintf(buf, sizeof(buf), "%.17g", ts.times[i] / time_scale);
    out << buf;
    for (const auto& col : ts.columns) {
      std::snprintf(buf, sizeof(buf), "%.17g", col[i]);
      out << "," << buf;
    }
    out << "\n";
  }
  if (!out) throw ConfigError("write_csv: write failed for '" + path + "'");
}

TimeSeries read_csv(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("read_csv: cannot open '" + path + "'");
  TimeSeries ts;
  std::string line;
  if (!std::getline(in, line)) throw ConfigError("read_csv: empty file '" + path + "'");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  std::stringstream header(line);
  std::string cell;
  bool first = true;
  while (std::getline(header, cell, ',')) {
    if (first) {
      first = false;
    } else {
      ts.labels.push_back(cell);
    }
  }
  ts.columns.resize(ts.labels.size());
  int lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::stringstream row(line);
    size_t k = 0;
    while (std::getline(row, cell, ',')) {
      double v;
      try {
        v = std::stod(cell);
      } catch (const std::exception&) {
        throw ParseError("read_csv: bad number at line " + std::to_string(lineno), lineno);
      }
      if (k == 0) {
        ts.times.push_back(v);
      } else if (k <= ts.labels.size()) {
        ts.columns[k - 1].push_back(v);
      } else {
        throw ParseError("read_csv: too many cells at line " + std::to_string(lineno), lineno);
      }
      ++k;
    }
    if (k != ts.labels.size() + 1)
      throw ParseError("read_csv: wrong cell count at line " + std::to_string(lineno), lineno);
  }
  return ts;
}

namespace {

double interpolate(const std::vector<double>& times, const std::vector<double>& values, double t) {
  const auto it = std::lower_bound(times.begin(), times.end(), t);
  if (it == times.begin()) return values.front();
  if (it == times.end()) return values.back();
  const size_t i = it - times.begin();
  const double t1 = times[i - 1], t2 = times[i];
  const double w = t2 > t1 ? (t - t1) / (t2 - t1) : 0.0;
  return values[i - 1] * (1.0 - w) + values[i] * w;
}

}  // namespace

CompareReport compare(const TimeSeries& a, const TimeSeries& b) {
  if (a.times.empty() || b.times.empty()) throw ConfigError("compare: empty series");
  const double lo = std::max(a.times.front(), b.times.front());
  const double hi = std::min(a.times.back(), b.times.back());
  if (lo > hi) throw ConfigError("compare: disjoint time ranges");

  CompareReport rep;
  for (size_t ka = 0; ka < a.labels.size(); ++ka) {
    auto itb = std::find(b.labels.begin(), b.labels.end(), a.labels[ka]);
    if (itb == b.labels.end()) continue;
    const auto& col_a = a.columns[ka];
    const auto& col_b = b.columns[itb - b.labels.begin()];
    ColumnDeviation dev;
    dev.label = a.labels[ka];
    for (size_t i = 0; i < a.times.size(); ++i) {
      const double t = a.times[i];
      if (t < lo - 1e-12 || t > hi + 1e-12) continue;
      const double d = std::abs(col_a[i] - interpolate(b.times, col_b, t));
      if (d > dev.max_abs) {
        dev.max_abs = d;
        dev.t_at_max = t;
      }
    }
    rep.max_abs = std::max(rep.max_abs, dev.max_abs);
    rep.columns.push_back(std::move(dev));
  }
  if (rep.columns.empty()) throw ConfigError("compare: no common observable labels");
  return rep;
}

}  // namespace ghzsim

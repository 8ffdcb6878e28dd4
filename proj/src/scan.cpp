// Copyright 2026 The torus-ppt Authors
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

#include "torus_ppt/scan.hpp"

#include <cstdio>
#include <sstream>

#include "torus_ppt/error.hpp"

namespace torus_ppt {

namespace {

std::string fmt17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

ScanRow make_row(const std::string& name, double value, const OraclePoint& p) {
  ScanRow row;
  row.param_name = name;
  row.param_value = value;
  row.analytic_positive = p.positive.verdict;
  row.analytic_ppt = p.ppt.verdict;
  row.oracle_min_eig = p.oracle.min_eigenvalue;
  row.oracle_pt_min_eig = p.oracle_pt.min_eigenvalue;
  row.agreement = p.positive_agrees() && p.ppt_agrees();
  return row;
}

template <class Fn>
void for_each_index(std::size_t n, Execution execution, Fn&& fn) {
  const auto count = static_cast<std::ptrdiff_t>(n);
  if (execution == Execution::kParallel) {
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t k = 0; k < count; ++k) fn(static_cast<std::size_t>(k));
  } else {
    for (std::ptrdiff_t k = 0; k < count; ++k) fn(static_cast<std::size_t>(k));
  }
}

template <class Pick>
std::vector<VerdictFlip> flips(const std::vector<ScanRow>& rows, Pick pick) {
  std::vector<VerdictFlip> out;
  for (std::size_t k = 1; k < rows.size(); ++k) {
    if (pick(rows[k]) != pick(rows[k - 1])) {
      out.push_back({rows[k - 1].param_value, rows[k].param_value, pick(rows[k])});
    }
  }
  return out;
}

}  // namespace

OraclePoint evaluate_oracle(const ClassState& s, double tol) {
  const DenseMatrix rho = to_density(s);
  return {check_positive(s, tol), check_ppt(s, tol), is_psd(rho, tol),
          is_psd(partial_transpose_dense(rho, std::visit([](const auto& x) { return x.d(); }, s)), tol)};
}

std::vector<double> uniform_grid(double from, double to, int steps) {
  if (!(from <= to) || steps < 2) {
    throw Error(ErrorCode::kBadParameter, "scan range needs from <= to and steps >= 2");
  }
  std::vector<double> grid(static_cast<std::size_t>(steps));
  for (int k = 0; k < steps; ++k) grid[k] = from + (to - from) * k / (steps - 1);
  grid.back() = to;
  return grid;
}

ScanSpec parse_scan_argument(const std::string& arg) {
  std::vector<std::string> parts;
  std::stringstream ss(arg);
  std::string part;
  while (std::getline(ss, part, ':')) parts.push_back(part);
  if (parts.size() != 4 || parts[0].empty()) {
    throw Error(ErrorCode::kBadParameter, "scan argument must be name:from:to:steps");
  }
  ScanSpec spec;
  spec.param = parts[0];
  try {
    std::size_t used = 0;
    spec.from = std::stod(parts[1], &used);
    if (used != parts[1].size()) throw std::invalid_argument(parts[1]);
    spec.to = std::stod(parts[2], &used);
    if (used != parts[2].size()) throw std::invalid_argument(parts[2]);
    spec.steps = std::stoi(parts[3], &used);
    if (used != parts[3].size()) throw std::invalid_argument(parts[3]);
  } catch (const std::exception&) {
    throw Error(ErrorCode::kBadParameter, "malformed number in scan argument '" + arg + "'");
  }
  uniform_grid(spec.from, spec.to, spec.steps);
  return spec;
}

std::vector<ScanRow> scan_family(const ScanSpec& spec, Execution execution) {
  const auto grid = uniform_grid(spec.from, spec.to, spec.steps);
  // Build every state up front so parameter errors surface before the loop.
  std::vector<ClassState> states;
  states.reserve(grid.size());
  for (double value : grid) {
    FamilyDescriptor desc = spec.base;
    desc.params[spec.param] = value;
    states.push_back(make_family(desc));
  }
  std::vector<ScanRow> rows(grid.size());
  for_each_index(grid.size(), execution, [&](std::size_t k) {
    rows[k] = make_row(spec.param, grid[k], evaluate_oracle(states[k], spec.tol));
  });
  return rows;
}

std::vector<VerdictFlip> positive_flips(const std::vector<ScanRow>& rows) {
  return flips(rows, [](const ScanRow& r) { return r.analytic_positive; });
}

std::vector<VerdictFlip> ppt_flips(const std::vector<ScanRow>& rows) {
  return flips(rows, [](const ScanRow& r) { return r.analytic_ppt; });
}

std::string scan_csv(const std::vector<ScanRow>& rows) {
  std::ostringstream out;
  out << "param_name,param_value,analytic_positive,analytic_ppt,oracle_min_eig,oracle_pt_min_eig,agreement\n";
  for (const auto& r : rows) {
    out << r.param_name << ',' << fmt17(r.param_value) << ',' << (r.analytic_positive ? "true" : "false")
        << ',' << (r.analytic_ppt ? "true" : "false") << ',' << fmt17(r.oracle_min_eig) << ','
        << fmt17(r.oracle_pt_min_eig) << ',' << (r.agreement ? "true" : "false") << '\n';
  }
  return out.str();
}

std::vector<OraclePoint> oracle_sweep(const std::vector<ClassState>& states, double tol, Execution execution) {
  std::vector<OraclePoint> out(states.size());
  for_each_index(states.size(), execution, [&](std::size_t k) { out[k] = evaluate_oracle(states[k], tol); });
  return out;
}

}  // namespace torus_ppt

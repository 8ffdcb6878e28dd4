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

#pragma once

// Grid scans and oracle sweeps: every point compares the closed-form
// positivity/PPT verdicts with eigenvalues of rho and (1 (x) T) rho.
//
// Points are independent, so each kernel has an OpenMP version and a serial
// reference; both fill the output in grid order and agree bitwise.

#include <string>
#include <vector>

#include "torus_ppt/execution.hpp"
#include "torus_ppt/families.hpp"
#include "torus_ppt/states.hpp"

namespace torus_ppt {

struct ScanRow {
  std::string param_name;
  double param_value = 0.0;
  bool analytic_positive = false;
  bool analytic_ppt = false;
  double oracle_min_eig = 0.0;
  double oracle_pt_min_eig = 0.0;
  bool agreement = false;
};

struct OraclePoint {
  CriterionReport positive;
  CriterionReport ppt;
  PsdCheck oracle;
  PsdCheck oracle_pt;

  bool positive_agrees() const { return positive.verdict == oracle.psd; }
  bool ppt_agrees() const { return ppt.verdict == oracle_pt.psd; }
};

/// Analytic reports plus eigen-oracle checks of rho and its partial transpose.
OraclePoint evaluate_oracle(const ClassState& s, double tol);

/// `steps` points from `from` to `to` inclusive; kBadParameter when
/// from > to or steps < 2.
std::vector<double> uniform_grid(double from, double to, int steps);

struct ScanSpec {
  FamilyDescriptor base;  // every parameter except the scanned one
  std::string param;
  double from = 0.0;
  double to = 1.0;
  int steps = 2;
  double tol = kDefaultTol;
};

/// Parses "name:from:to:steps".
ScanSpec parse_scan_argument(const std::string& arg);

std::vector<ScanRow> scan_family(const ScanSpec& spec, Execution execution);

/// Values between which the chosen verdict changes, in grid order.
struct VerdictFlip {
  double before = 0.0;
  double after = 0.0;
  bool becomes = false;
};
std::vector<VerdictFlip> positive_flips(const std::vector<ScanRow>& rows);
std::vector<VerdictFlip> ppt_flips(const std::vector<ScanRow>& rows);

/// Header plus one line per row; floats with 17 significant digits.
std::string scan_csv(const std::vector<ScanRow>& rows);

/// Oracle comparison over an arbitrary batch of states.
std::vector<OraclePoint> oracle_sweep(const std::vector<ClassState>& states, double tol, Execution execution);

}  // namespace torus_ppt

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

// torus-ppt: generate, check, scan, project and certify torus-invariant
// bipartite states, and probe positive maps against them.
//
// Exit codes: 0 success/agreement, 1 analytic-vs-oracle disagreement (or no
// certificate found), 2 usage/validation error, 3 I/O error.

#include <CLI11.hpp>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <json.hpp>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "torus_ppt/cones.hpp"
#include "torus_ppt/error.hpp"
#include "torus_ppt/families.hpp"
#include "torus_ppt/io.hpp"
#include "torus_ppt/maps.hpp"
#include "torus_ppt/scan.hpp"
#include "torus_ppt/states.hpp"

namespace {

using namespace torus_ppt;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitDisagree = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

double default_tol() {
  if (const char* env = std::getenv("TORUS_PPT_TOL")) {
    try {
      const double t = std::stod(env);
      if (t > 0.0) return t;
    } catch (const std::exception&) {
    }
    std::cerr << "warning: ignoring invalid TORUS_PPT_TOL='" << env << "'\n";
  }
  return kDefaultTol;
}

std::string fmt17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
  } else {
    write_text_file(path, text);
  }
}

// Family parameters shared by gen, scan and map.
struct FamilyOptions {
  std::string family;
  int d = 0;
  bool normalize = false;
  std::map<std::string, double> scalars;
  std::map<std::string, std::vector<double>> vectors;

  void attach(CLI::App* cmd, bool family_required) {
    auto* f = cmd->add_option("--family", family, "Family name");
    if (family_required) f->required();
    cmd->add_option("--d", d, "Local dimension");
    cmd->add_flag("--normalize", normalize, "Divide all parameters by the trace");
    for (const char* key : {"p", "lambda", "b", "c", "alpha", "gamma", "s", "mu"}) {
      cmd->add_option(std::string("--") + key, scalars[key], std::string("Family parameter ") + key);
    }
    for (const char* key : {"weights", "c-upper", "lambda-re", "lambda-im"}) {
      cmd->add_option(std::string("--") + key, vectors[key], std::string("Family parameter list ") + key)
          ->delimiter(',');
    }
  }

  FamilyDescriptor descriptor(const CLI::App* cmd) const {
    FamilyDescriptor desc;
    desc.name = family;
    desc.d = d;
    desc.normalized = normalize;
    for (const auto& [key, value] : scalars) {
      if (cmd->count("--" + key) > 0) desc.params[key] = value;
    }
    for (const auto& [key, value] : vectors) {
      if (cmd->count("--" + key) > 0) desc.params[key] = value;
    }
    return desc;
  }
};

std::string describe(const FamilyDescriptor& desc) {
  std::string out = desc.name + "(d=" + std::to_string(desc.d);
  for (const auto& [key, value] : desc.params) {
    out += ", " + key + "=";
    if (const auto* x = std::get_if<double>(&value)) {
      out += fmt17(*x);
    } else {
      const auto& v = std::get<std::vector<double>>(value);
      for (std::size_t k = 0; k < v.size(); ++k) out += (k ? ";" : "") + fmt17(v[k]);
    }
  }
  return out + ")";
}

json report_json(const CriterionReport& r) {
  json slacks = json::object();
  for (const auto& s : r.slacks) slacks[s.label] = s.value;
  return {{"verdict", r.verdict}, {"min_slack", r.min_slack()}, {"slacks", slacks}};
}

json evidence_json(const EvidenceReport& r) {
  json prereqs = json::array();
  for (const auto& p : r.prerequisites) {
    prereqs.push_back({{"claim", p.claim}, {"verified", p.verified}, {"detail", p.detail}});
  }
  return {{"map", r.map_name},
          {"state", r.state_descriptor},
          {"min_eigenvalue", r.min_eigenvalue},
          {"threshold", r.threshold},
          {"conclusion", to_string(r.conclusion)},
          {"prerequisites", prereqs}};
}

int run_gen(const FamilyOptions& fam, const CLI::App* cmd, const std::string& out) {
  emit(out, state_to_json(make_family(fam.descriptor(cmd))));
  return kExitOk;
}

int run_check(const std::string& in, double tol, bool as_json) {
  const ClassState s = state_from_json(read_text_file(in));
  const OraclePoint p = evaluate_oracle(s, tol);
  const bool agree = p.positive_agrees() && p.ppt_agrees();
  if (as_json) {
    json j = {{"class", std::holds_alternative<IsotropicLikeState>(s) ? "isotropic-like" : "werner-like"},
              {"trace", state_trace(s)},
              {"tol", tol},
              {"positive", report_json(p.positive)},
              {"ppt", report_json(p.ppt)},
              {"oracle", {{"min_eig", p.oracle.min_eigenvalue},
                          {"pt_min_eig", p.oracle_pt.min_eigenvalue},
                          {"positive", p.oracle.psd},
                          {"ppt", p.oracle_pt.psd}}},
              {"agreement", agree}};
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << "class: " << (std::holds_alternative<IsotropicLikeState>(s) ? "isotropic-like" : "werner-like")
              << "\ntrace: " << fmt17(state_trace(s)) << "\n"
              << "analytic positive: " << (p.positive.verdict ? "true" : "false")
              << " (min slack " << fmt17(p.positive.min_slack()) << ")\n"
              << "analytic PPT: " << (p.ppt.verdict ? "true" : "false") << " (min slack "
              << fmt17(p.ppt.min_slack()) << ")\n"
              << "oracle min eigenvalue: " << fmt17(p.oracle.min_eigenvalue) << "\n"
              << "oracle partial-transpose min eigenvalue: " << fmt17(p.oracle_pt.min_eigenvalue) << "\n"
              << "agreement: " << (agree ? "true" : "false") << "\n";
  }
  return agree ? kExitOk : kExitDisagree;
}

void print_flips(const char* what, const std::vector<VerdictFlip>& flips) {
  if (flips.empty()) {
    std::cerr << what << ": no flip on grid\n";
    return;
  }
  for (const auto& f : flips) {
    std::cerr << what << " flips to " << (f.becomes ? "true" : "false") << " between " << fmt17(f.before)
              << " and " << fmt17(f.after) << '\n';
  }
}

int run_scan(const FamilyOptions& fam, const CLI::App* cmd, const std::string& param, double tol,
             bool serial, const std::string& out) {
  ScanSpec spec = parse_scan_argument(param);
  spec.base = fam.descriptor(cmd);
  spec.tol = tol;
  const auto rows = scan_family(spec, serial ? Execution::kSerial : Execution::kParallel);
  emit(out, scan_csv(rows));

  print_flips("analytic_positive", positive_flips(rows));
  print_flips("analytic_ppt", ppt_flips(rows));
  const auto t = analytic_thresholds(fam.family, fam.d, spec.param);
  if (t.positive_lower && t.positive_upper) {
    std::cerr << "analytic positivity window: [" << fmt17(*t.positive_lower) << ", " << fmt17(*t.positive_upper)
              << "]\n";
  }
  if (t.ppt_upper) std::cerr << "analytic PPT threshold: " << spec.param << " <= " << fmt17(*t.ppt_upper) << '\n';

  std::size_t disagreements = 0;
  for (const auto& r : rows) disagreements += r.agreement ? 0 : 1;
  if (disagreements > 0) {
    std::cerr << "ALARM: " << disagreements << " row(s) where analytic and oracle verdicts differ\n";
    return kExitDisagree;
  }
  return kExitOk;
}

int run_project(const std::string& in, const std::string& cls, int d, const std::string& out, bool distance) {
  const DenseMatrix sigma = matrix_from_json(read_text_file(in));
  ClassState projected = cls == "isotropic" ? ClassState(project_isotropic(sigma, d))
                                            : ClassState(project_werner(sigma, d));
  emit(out, state_to_json(projected));
  if (distance) {
    const double dist = frobenius(sigma - to_density(projected));
    (out.empty() || out == "-" ? std::cerr : std::cout) << "distance " << fmt17(dist) << '\n';
  }
  return kExitOk;
}

int run_certify(const std::string& cone, const std::string& in, const SearchOptions& search, double tol,
                const std::string& out) {
  const ClassState s = state_from_json(read_text_file(in));
  std::optional<DecompositionCertificate> cert;
  if (cone == "vup2") {
    const auto* iso = std::get_if<IsotropicLikeState>(&s);
    if (iso == nullptr) throw Error(ErrorCode::kBadParameter, "vup2 certificates are built for isotropic-like states");
    cert = v_upper2_certificate(*iso, tol);
  } else if (cone == "v2") {
    if (const auto* w = std::get_if<WernerLikeState>(&s)) {
      cert = v2_certificate_werner(*w, tol);
    } else {
      cert = v2_search(std::get<IsotropicLikeState>(s), search);
    }
  } else {
    const auto* iso = std::get_if<IsotropicLikeState>(&s);
    if (iso == nullptr) throw Error(ErrorCode::kBadParameter, "separability search needs an isotropic-like state");
    cert = separability_search(*iso, search);
  }
  if (!cert) {
    std::cerr << "no certificate found (this proves nothing about membership)\n";
    return kExitDisagree;
  }
  emit(out, certificate_to_json(*cert));
  return kExitOk;
}

int run_map(const std::string& map_name, const std::string& in, const FamilyOptions& fam, const CLI::App* cmd,
            const std::string& scan, bool atomicity, const SearchOptions& search, double tol,
            const std::string& out) {
  auto evaluate = [&](const ClassState& s, const std::string& descriptor) {
    const int d = std::visit([](const auto& x) { return x.d(); }, s);
    const auto phi = builtin_map(map_name, d);
    if (atomicity) {
      const auto* iso = std::get_if<IsotropicLikeState>(&s);
      if (iso == nullptr) throw Error(ErrorCode::kBadParameter, "atomicity evidence needs an isotropic-like state");
      AtomicityOptions options;
      options.v2_search = search;
      options.tol = tol;
      return atomicity_evidence(phi, *iso, descriptor, options);
    }
    return indecomposability_evidence(phi, s, descriptor, tol);
  };

  if (scan.empty()) {
    if (in.empty()) throw Error(ErrorCode::kBadParameter, "map needs --in or --scan");
    emit(out, evidence_json(evaluate(state_from_json(read_text_file(in)), in)).dump(2));
    return kExitOk;
  }

  ScanSpec spec = parse_scan_argument(scan);
  const FamilyDescriptor base = fam.descriptor(cmd);
  std::string csv = "param_name,param_value,min_eigenvalue,conclusion\n";
  for (double value : uniform_grid(spec.from, spec.to, spec.steps)) {
    FamilyDescriptor desc = base;
    desc.params[spec.param] = value;
    const ClassState s = make_family(desc);
    std::string conclusion;
    std::string min_eig = "nan";
    try {
      const auto report = evaluate(s, describe(desc));
      conclusion = to_string(report.conclusion);
      min_eig = fmt17(report.min_eigenvalue);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kNotPositiveState && e.code() != ErrorCode::kNotPPTState) throw;
      conclusion = e.code() == ErrorCode::kNotPositiveState ? "NOT_POSITIVE_STATE" : "NOT_PPT_STATE";
    }
    csv += spec.param + "," + fmt17(value) + "," + min_eig + "," + conclusion + "\n";
  }
  emit(out, csv);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"torus-ppt: torus-invariant bipartite states, PPT criteria and cone certificates"};
  app.require_subcommand(1);
  double tol = default_tol();
  app.add_option("--tol", tol, "Tolerance for all verdicts (default 1e-9, env TORUS_PPT_TOL)")
      ->check(CLI::PositiveNumber);

  std::string out;
  std::string in;

  auto* gen = app.add_subcommand("gen", "Materialize a family member as a state file");
  FamilyOptions gen_fam;
  gen_fam.attach(gen, true);
  gen->add_option("--out", out, "Output path (default stdout)");

  auto* check = app.add_subcommand("check", "Analytic positivity/PPT verdicts against the eigen oracle");
  bool as_json = false;
  check->add_option("--in", in, "State file")->required();
  check->add_flag("--json", as_json, "Emit JSON");

  auto* scan = app.add_subcommand("scan", "Sweep one family parameter over a closed grid");
  FamilyOptions scan_fam;
  scan_fam.attach(scan, true);
  std::string scan_param;
  bool serial = false;
  scan->add_option("--param", scan_param, "name:from:to:steps")->required();
  scan->add_flag("--serial", serial, "Use the serial reference kernel");
  scan->add_option("--out", out, "CSV output path (default stdout)");

  auto* project = app.add_subcommand("project", "Project a dense matrix onto a state class");
  std::string cls;
  int project_d = 0;
  bool report_distance = false;
  project->add_option("--in", in, "Matrix file")->required();
  project->add_option("--class", cls, "isotropic | werner")->required()->check(CLI::IsMember({"isotropic", "werner"}));
  project->add_option("--d", project_d, "Local dimension")->required();
  project->add_option("--out", out, "Output path (default stdout)");
  project->add_flag("--report-distance", report_distance, "Print |sigma - P sigma|_F");

  SearchOptions search;
  auto add_search = [&](CLI::App* cmd) {
    cmd->add_option("--samples", search.n_samples, "Random generators for NNLS searches")->check(CLI::NonNegativeNumber);
    cmd->add_option("--seed", search.seed, "Random seed");
    cmd->add_option("--eps", search.eps, "Search acceptance threshold")->check(CLI::PositiveNumber);
  };

  auto* certify = app.add_subcommand("certify", "Build a separability / Schmidt-cone certificate");
  std::string cone;
  certify->add_option("--cone", cone, "sep | v2 | vup2")->required()->check(CLI::IsMember({"sep", "v2", "vup2"}));
  certify->add_option("--in", in, "State file")->required();
  certify->add_option("--out", out, "Output path (default stdout)");
  add_search(certify);

  auto* map = app.add_subcommand("map", "Apply (1 x Phi) and report indecomposability/atomicity evidence");
  std::string map_name;
  std::string map_scan;
  bool atomicity = false;
  FamilyOptions map_fam;
  map->add_option("--map", map_name, "transpose | reduction | choi3 | identity")
      ->required()
      ->check(CLI::IsMember({"transpose", "reduction", "choi3", "identity"}));
  map->add_option("--in", in, "State file");
  map->add_option("--scan", map_scan, "name:from:to:steps over --family");
  map->add_flag("--atomicity", atomicity, "Atomicity evidence instead of indecomposability");
  map->add_option("--out", out, "Output path (default stdout)");
  map_fam.attach(map, false);
  add_search(map);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*gen) return run_gen(gen_fam, gen, out);
    if (*check) return run_check(in, tol, as_json);
    if (*scan) return run_scan(scan_fam, scan, scan_param, tol, serial, out);
    if (*project) return run_project(in, cls, project_d, out, report_distance);
    if (*certify) return run_certify(cone, in, search, tol, out);
    if (*map) return run_map(map_name, in, map_fam, map, map_scan, atomicity, search, tol, out);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.code() == ErrorCode::kIo ? kExitIo : kExitUsage;
  }
  return kExitUsage;
}

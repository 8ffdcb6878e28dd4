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

#include "torus_ppt/io.hpp"

#include <fstream>
#include <json.hpp>
#include <sstream>

#include "torus_ppt/error.hpp"

namespace torus_ppt {

namespace {

using nlohmann::json;

json complex_json(Complex z) { return json::array({z.real(), z.imag()}); }

Complex complex_from(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw Error(ErrorCode::kParse, "complex entries must be [re, im]");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

json complex_vector_json(std::span<const Complex> v) {
  json out = json::array();
  for (const auto& z : v) out.push_back(complex_json(z));
  return out;
}

std::vector<Complex> complex_vector_from(const json& j) {
  if (!j.is_array()) throw Error(ErrorCode::kParse, "expected an array of [re, im]");
  std::vector<Complex> out;
  out.reserve(j.size());
  for (const auto& e : j) out.push_back(complex_from(e));
  return out;
}

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParse, e.what());
  }
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw Error(ErrorCode::kParse, std::string("missing field '") + key + "'");
  }
  return j.at(key);
}

json nested_complex(const DenseMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(complex_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json nested_real(const RealMatrix& m) {
  json rows = json::array();
  for (int r = 0; r < m.size(); ++r) {
    json row = json::array();
    for (int c = 0; c < m.size(); ++c) row.push_back(m(r, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

DenseMatrix complex_square_from(const json& j, int d) {
  const auto dd = static_cast<std::size_t>(d);
  if (!j.is_array() || j.size() != dd) throw Error(ErrorCode::kParse, "parameter matrix must be d x d");
  std::vector<Complex> data;
  data.reserve(dd * dd);
  for (const auto& row : j) {
    if (!row.is_array() || row.size() != dd) throw Error(ErrorCode::kParse, "parameter matrix must be d x d");
    for (const auto& e : row) data.push_back(complex_from(e));
  }
  try {
    return DenseMatrix(dd, dd, std::move(data));
  } catch (const Error& e) {
    throw Error(ErrorCode::kParse, e.what());
  }
}

RealMatrix real_square_from(const json& j, int d) {
  if (!j.is_array() || j.size() != static_cast<std::size_t>(d)) {
    throw Error(ErrorCode::kParse, "c must be d x d");
  }
  RealMatrix c(d);
  for (int r = 0; r < d; ++r) {
    const auto& row = j[static_cast<std::size_t>(r)];
    if (!row.is_array() || row.size() != static_cast<std::size_t>(d)) {
      throw Error(ErrorCode::kParse, "c must be d x d");
    }
    for (int k = 0; k < d; ++k) {
      const auto& e = row[static_cast<std::size_t>(k)];
      if (!e.is_number()) throw Error(ErrorCode::kParse, "c entries must be numbers");
      c(r, k) = e.get<double>();
    }
  }
  for (int r = 0; r < d; ++r) {
    if (c(r, r) != 0.0) throw Error(ErrorCode::kParse, "diagonal of c must be 0");
  }
  return c;
}

}  // namespace

std::string matrix_to_json(const DenseMatrix& m) {
  json j;
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  j["data"] = complex_vector_json(m.data());
  return j.dump();
}

DenseMatrix matrix_from_json(const std::string& text) {
  const json j = parse(text);
  const auto& rows = field(j, "rows");
  const auto& cols = field(j, "cols");
  if (!rows.is_number_unsigned() || !cols.is_number_unsigned() || rows.get<std::size_t>() == 0 ||
      cols.get<std::size_t>() == 0) {
    throw Error(ErrorCode::kParse, "rows and cols must be positive integers");
  }
  auto data = complex_vector_from(field(j, "data"));
  try {
    return DenseMatrix(rows.get<std::size_t>(), cols.get<std::size_t>(), std::move(data));
  } catch (const Error& e) {
    throw Error(ErrorCode::kParse, e.what());
  }
}

std::string state_to_json(const ClassState& s) {
  json j;
  if (const auto* iso = std::get_if<IsotropicLikeState>(&s)) {
    j["d"] = iso->d();
    j["class"] = "isotropic-like";
    j["a"] = nested_complex(iso->a());
    j["c"] = nested_real(iso->c());
  } else {
    const auto& w = std::get<WernerLikeState>(s);
    j["d"] = w.d();
    j["class"] = "werner-like";
    j["b"] = nested_complex(w.b());
    j["c"] = nested_real(w.c());
  }
  return j.dump();
}

ClassState state_from_json(const std::string& text) {
  const json j = parse(text);
  const auto& dj = field(j, "d");
  if (!dj.is_number_integer() || dj.get<int>() < 2) throw Error(ErrorCode::kParse, "d must be an integer >= 2");
  const int d = dj.get<int>();
  const auto& cls = field(j, "class");
  if (!cls.is_string()) throw Error(ErrorCode::kParse, "class must be a string");
  const std::string name = cls.get<std::string>();
  const char* key = name == "isotropic-like" ? "a" : name == "werner-like" ? "b" : nullptr;
  if (key == nullptr) throw Error(ErrorCode::kParse, "unknown class '" + name + "'");

  DenseMatrix m = complex_square_from(field(j, key), d);
  if (hermiticity_defect(m) > 1e-9) {
    throw Error(ErrorCode::kNonHermitian, std::string(key) + " deviates from Hermitian beyond 1e-9");
  }
  m = hermitian_part(m);
  RealMatrix c = real_square_from(field(j, "c"), d);
  if (key[0] == 'a') return IsotropicLikeState(d, std::move(m), std::move(c));
  return WernerLikeState(d, std::move(m), std::move(c));
}

std::string certificate_to_json(const DecompositionCertificate& cert) {
  json j;
  j["claim"] = to_string(cert.claim);
  j["d"] = cert.d;
  j["residual"] = cert.residual;
  json terms = json::array();
  for (const auto& t : cert.terms) {
    json term;
    term["weight"] = t.weight;
    term["vector"] = complex_vector_json(t.vector);
    term["schmidt_rank"] = t.schmidt_rank;
    terms.push_back(std::move(term));
  }
  j["terms"] = std::move(terms);
  return j.dump();
}

DecompositionCertificate certificate_from_json(const std::string& text) {
  const json j = parse(text);
  DecompositionCertificate cert;
  const auto& claim = field(j, "claim");
  if (!claim.is_string()) throw Error(ErrorCode::kParse, "claim must be a string");
  cert.claim = cone_claim_from_string(claim.get<std::string>());
  const auto& residual = field(j, "residual");
  if (!residual.is_number()) throw Error(ErrorCode::kParse, "residual must be a number");
  cert.residual = residual.get<double>();
  const auto& terms = field(j, "terms");
  if (!terms.is_array()) throw Error(ErrorCode::kParse, "terms must be an array");
  for (const auto& t : terms) {
    CertificateTerm term;
    const auto& w = field(t, "weight");
    const auto& r = field(t, "schmidt_rank");
    if (!w.is_number() || !r.is_number_integer()) throw Error(ErrorCode::kParse, "malformed certificate term");
    term.weight = w.get<double>();
    term.schmidt_rank = r.get<int>();
    term.vector = complex_vector_from(field(t, "vector"));
    cert.terms.push_back(std::move(term));
  }
  if (j.contains("d")) {
    cert.d = j.at("d").get<int>();
  } else if (!cert.terms.empty()) {
    int d = 1;
    while (static_cast<std::size_t>(d * d) < cert.terms.front().vector.size()) ++d;
    cert.d = d;
  }
  return cert;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open '" + path + "' for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw Error(ErrorCode::kIo, "failed reading '" + path + "'");
  return buf.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIo, "cannot open '" + path + "' for writing");
  out << text;
  if (!out.flush()) throw Error(ErrorCode::kIo, "failed writing '" + path + "'");
}

}  // namespace torus_ppt

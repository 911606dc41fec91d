// Copyright 2026 The hiddencorr Authors
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

#include "hiddencorr/io.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "hiddencorr/errors.hpp"

namespace hiddencorr {

using nlohmann::json;

namespace {

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError(IoErrorCategory::io, "cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw IoError(IoErrorCategory::io, "cannot read '" + path.string() + "'");
  return ss.str();
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw IoError(IoErrorCategory::parse, std::string("malformed JSON: ") + e.what());
  }
}

Eigen::MatrixXd read_square(const json& doc, const char* key, std::size_t dim) {
  if (!doc.contains(key)) {
    throw IoError(IoErrorCategory::parse, key, 0.0,
                  std::string("matrix document: missing field '") + key + "'");
  }
  const json& rows = doc.at(key);
  if (!rows.is_array()) {
    throw IoError(IoErrorCategory::parse, key, 0.0,
                  std::string("matrix document: '") + key + "' must be an array of rows");
  }
  if (rows.size() != dim) {
    throw IoError(IoErrorCategory::shape_mismatch, key, 0.0,
                  std::string("matrix document: '") + key + "' has " +
                      std::to_string(rows.size()) + " rows, dim is " + std::to_string(dim));
  }
  const auto n = static_cast<Eigen::Index>(dim);
  Eigen::MatrixXd out(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const json& row = rows[static_cast<std::size_t>(i)];
    if (!row.is_array()) {
      throw IoError(IoErrorCategory::parse, key, 0.0,
                    std::string("matrix document: '") + key + "' row " +
                        std::to_string(i + 1) + " is not an array");
    }
    if (row.size() != dim) {
      throw IoError(IoErrorCategory::shape_mismatch, key, 0.0,
                    std::string("matrix document: '") + key + "' row " +
                        std::to_string(i + 1) + " has " + std::to_string(row.size()) +
                        " entries, dim is " + std::to_string(dim));
    }
    for (Eigen::Index j = 0; j < n; ++j) {
      const json& v = row[static_cast<std::size_t>(j)];
      if (!v.is_number()) {
        throw IoError(IoErrorCategory::parse, key, 0.0,
                      std::string("matrix document: '") + key + "'[" +
                          std::to_string(i + 1) + "][" + std::to_string(j + 1) +
                          "] is not a number");
      }
      out(i, j) = v.get<double>();
    }
  }
  return out;
}

void append_rows(std::string& out, const Eigen::MatrixXd& m) {
  out += '[';
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    if (i) out += ", ";
    out += '[';
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (j) out += ", ";
      out += format_lossless(m(i, j));
    }
    out += ']';
  }
  out += ']';
}

std::optional<double> parse_real_token(std::string_view token) {
  double v = 0.0;
  if (!token.empty() && token.front() == '+') token.remove_prefix(1);
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
  if (ec != std::errc() || ptr != token.data() + token.size()) return std::nullopt;
  return v;
}

std::string_view trim(std::string_view s) {
  constexpr std::string_view ws = " \t\r\n";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

ProbVector to_prob_vector(std::vector<double> values) {
  try {
    return ProbVector(std::move(values));
  } catch (const InvalidStateError& e) {
    throw IoError(IoErrorCategory::invariant_violation, e.field(), e.defect(), e.what());
  } catch (const DomainError& e) {
    throw IoError(IoErrorCategory::shape_mismatch, e.what());
  }
}

struct ReportField {
  const char* name;
  std::optional<double> MeasureReport::*real = nullptr;
  std::optional<bool> MeasureReport::*flag = nullptr;
};

constexpr std::array<ReportField, 7> kReportFields = {{
    {"entropy", &MeasureReport::entropy, nullptr},
    {"mutual", &MeasureReport::mutual, nullptr},
    {"conditional", &MeasureReport::conditional, nullptr},
    {"min_pt_eigenvalue", &MeasureReport::min_pt_eigenvalue, nullptr},
    {"slack", &MeasureReport::slack, nullptr},
    {"ppt", nullptr, &MeasureReport::ppt},
    {"conclusive", nullptr, &MeasureReport::conclusive},
}};

std::string shape_label(const FactorShape& s) { return s.to_string(); }

}  // namespace

std::string_view to_string(IoErrorCategory c) {
  switch (c) {
    case IoErrorCategory::io: return "io";
    case IoErrorCategory::parse: return "parse";
    case IoErrorCategory::shape_mismatch: return "shape_mismatch";
    case IoErrorCategory::invariant_violation: return "invariant_violation";
  }
  return "unknown";
}

std::string_view to_string(MatrixKind k) {
  return k == MatrixKind::density ? "density" : "hermitian";
}

ComplexMatrix MatrixDocument::complex() const {
  ComplexMatrix m(re.rows(), re.cols());
  m.real() = re;
  m.imag() = im;
  return m;
}

MatrixDocument parse_matrix_document(std::string_view text, MatrixKind default_kind) {
  const json doc = parse_json(text);
  if (!doc.is_object()) {
    throw IoError(IoErrorCategory::parse, "matrix document: top level must be an object");
  }
  MatrixDocument out;
  out.kind = default_kind;
  if (doc.contains("kind")) {
    const json& k = doc.at("kind");
    if (k == "density") {
      out.kind = MatrixKind::density;
    } else if (k == "hermitian") {
      out.kind = MatrixKind::hermitian;
    } else {
      throw IoError(IoErrorCategory::parse, "kind", 0.0,
                    "matrix document: 'kind' must be \"density\" or \"hermitian\"");
    }
  }
  if (!doc.contains("dim") || !doc.at("dim").is_number_integer() ||
      doc.at("dim").get<long long>() < 1) {
    throw IoError(IoErrorCategory::parse, "dim", 0.0,
                  "matrix document: 'dim' must be a positive integer");
  }
  out.dim = doc.at("dim").get<std::size_t>();
  out.re = read_square(doc, "re", out.dim);
  out.im = read_square(doc, "im", out.dim);
  return out;
}

LoadedMatrix parse_matrix(std::string_view text, MatrixKind kind, double tolerance) {
  const MatrixDocument doc = parse_matrix_document(text, kind);
  try {
    if (kind == MatrixKind::density) return DensityMatrix(doc.complex(), tolerance);
    return HermitianObservable(doc.complex(), tolerance);
  } catch (const InvalidStateError& e) {
    throw IoError(IoErrorCategory::invariant_violation, e.field(), e.defect(), e.what());
  }
}

LoadedMatrix load_matrix(const std::filesystem::path& path, MatrixKind kind,
                         double tolerance) {
  return parse_matrix(read_file(path), kind, tolerance);
}

DensityMatrix load_density_matrix(const std::filesystem::path& path, double tolerance) {
  return std::get<DensityMatrix>(load_matrix(path, MatrixKind::density, tolerance));
}

HermitianObservable load_hermitian(const std::filesystem::path& path, double tolerance) {
  return std::get<HermitianObservable>(load_matrix(path, MatrixKind::hermitian, tolerance));
}

std::string write_matrix(const ComplexMatrix& m, MatrixKind kind) {
  std::string out = "{\"kind\": \"";
  out += to_string(kind);
  out += "\", \"dim\": " + std::to_string(m.rows()) + ",\n \"re\": ";
  append_rows(out, m.real());
  out += ",\n \"im\": ";
  append_rows(out, m.imag());
  out += "}\n";
  return out;
}

ProbVector parse_prob_vector(std::string_view text) {
  const std::string_view body = trim(text);
  if (body.empty()) throw IoError(IoErrorCategory::parse, "distribution: empty input");

  std::vector<double> values;
  if (body.front() == '[') {
    const json doc = parse_json(body);
    for (std::size_t i = 0; i < doc.size(); ++i) {
      if (!doc[i].is_number()) {
        throw IoError(IoErrorCategory::parse,
                      "distribution: entry " + std::to_string(i + 1) + " is not a number");
      }
      values.push_back(doc[i].get<double>());
    }
    return to_prob_vector(std::move(values));
  }

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= body.size()) {
    std::size_t end = body.find('\n', pos);
    if (end == std::string_view::npos) end = body.size();
    ++line_no;
    std::string_view line = body.substr(pos, end - pos);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (!line.empty()) {
      const auto v = parse_real_token(line);
      if (!v) {
        throw IoError(IoErrorCategory::parse, "distribution: line " +
                                                  std::to_string(line_no) +
                                                  " is not a real: '" +
                                                  std::string(line) + "'");
      }
      values.push_back(*v);
    }
    pos = end + 1;
  }
  return to_prob_vector(std::move(values));
}

ProbVector load_prob_vector(const std::filesystem::path& path) {
  return parse_prob_vector(read_file(path));
}

std::string write_prob_vector(const ProbVector& p) {
  std::string out = "[";
  for (std::size_t i = 0; i < p.dimension(); ++i) {
    if (i) out += ", ";
    out += format_lossless(p[i]);
  }
  out += "]\n";
  return out;
}

ReportFormat parse_report_format(std::string_view name) {
  if (name == "text") return ReportFormat::text;
  if (name == "csv") return ReportFormat::csv;
  if (name == "json" || name == "structured") return ReportFormat::structured;
  throw DomainError("unknown report format '" + std::string(name) +
                    "' (expected text, csv or json)");
}

std::string write_report(const MeasureReport& report, ReportFormat format) {
  for (const ReportField& f : kReportFields) {
    if (f.real && (report.*f.real) && !std::isfinite(*(report.*f.real))) {
      throw DomainError(std::string("report: ") + f.name + " is not finite");
    }
  }

  if (format == ReportFormat::structured) {
    std::string out = "{";
    bool first = true;
    auto key = [&](const char* name) {
      if (!first) out += ", ";
      first = false;
      out += '"';
      out += name;
      out += "\": ";
    };
    if (!report.input.empty()) {
      key("input");
      out += json(report.input).dump();
    }
    if (report.shape) {
      key("shape");
      out += '[' + shape_label(*report.shape) + ']';
    }
    if (report.units) {
      key("units");
      out += json(*report.units).dump();
    }
    for (const ReportField& f : kReportFields) {
      if (f.real && (report.*f.real)) {
        key(f.name);
        out += format_lossless(*(report.*f.real));
      } else if (f.flag && (report.*f.flag)) {
        key(f.name);
        out += *(report.*f.flag) ? "true" : "false";
      }
    }
    out += "}\n";
    return out;
  }

  const char* sep = format == ReportFormat::csv ? "," : ": ";
  std::string out = format == ReportFormat::csv ? "measure,value\n" : "";
  auto row = [&](const std::string& name, const std::string& value) {
    out += name;
    out += sep;
    out += value;
    out += '\n';
  };
  if (!report.input.empty()) row("input", report.input);
  if (report.shape) {
    row("shape", format == ReportFormat::csv ? "\"" + shape_label(*report.shape) + "\""
                                             : shape_label(*report.shape));
  }
  if (report.units) row("units", *report.units);
  for (const ReportField& f : kReportFields) {
    if (f.real && (report.*f.real)) row(f.name, format_real(*(report.*f.real)));
    if (f.flag && (report.*f.flag)) row(f.name, *(report.*f.flag) ? "true" : "false");
  }
  return out;
}

MeasureReport parse_report(std::string_view structured) {
  const json doc = parse_json(structured);
  if (!doc.is_object()) throw IoError(IoErrorCategory::parse, "report: expected an object");
  MeasureReport r;
  try {
    if (doc.contains("input")) r.input = doc.at("input").get<std::string>();
    if (doc.contains("shape")) {
      r.shape = FactorShape(doc.at("shape").get<std::vector<std::size_t>>());
    }
    if (doc.contains("units")) r.units = doc.at("units").get<std::string>();
    for (const ReportField& f : kReportFields) {
      if (!doc.contains(f.name)) continue;
      if (f.real) r.*f.real = doc.at(f.name).get<double>();
      if (f.flag) r.*f.flag = doc.at(f.name).get<bool>();
    }
  } catch (const json::exception& e) {
    throw IoError(IoErrorCategory::parse, std::string("report: ") + e.what());
  }
  return r;
}

std::string write_gibbs_scan(std::span<const ThermoReport> rows, bool with_mutual) {
  std::string out = "beta,energy,entropy,free_energy,log_partition";
  if (with_mutual) out += ",mutual_information";
  out += '\n';
  for (const ThermoReport& r : rows) {
    out += format_real(r.beta) + ',' + format_real(r.energy) + ',' +
           format_real(r.entropy) + ',' +
           (r.free_energy ? format_real(*r.free_energy) : std::string()) + ',' +
           format_real(r.log_partition);
    if (with_mutual) {
      out += ',';
      if (r.mutual_information) out += format_real(*r.mutual_information);
    }
    out += '\n';
  }
  return out;
}

std::string write_index_table(const FactorShape& shape) {
  std::string out = "y";
  for (std::size_t i = 1; i <= shape.rank(); ++i) out += ",x" + std::to_string(i);
  out += '\n';
  for (const auto& [y, idx] : enumerate_cells(shape)) {
    out += std::to_string(y);
    for (std::size_t x : idx.coords) out += ',' + std::to_string(x);
    out += '\n';
  }
  return out;
}

std::string format_real(double v) {
  if (v == 0.0) v = 0.0;  // drop the sign of -0
  std::array<char, 64> buf{};
  std::snprintf(buf.data(), buf.size(), "%.12g", v);
  return buf.data();
}

std::string format_lossless(double v) {
  if (v == 0.0) v = 0.0;
  std::array<char, 64> buf{};
  std::snprintf(buf.data(), buf.size(), "%.16e", v);
  return buf.data();
}

std::string format_fixed(double v) {
  std::array<char, 512> buf{};
  std::snprintf(buf.data(), buf.size(), "%.12f", v);
  std::string s = buf.data();
  if (s.front() == '-' && s.find_first_not_of("-0.") == std::string::npos) s.erase(0, 1);
  return s;
}

}  // namespace hiddencorr

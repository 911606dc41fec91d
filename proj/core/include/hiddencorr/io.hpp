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

#pragma once

// File formats.
//
// Matrix document (JSON):
//   {"kind": "density"|"hermitian", "dim": N, "re": [[...]...], "im": [[...]...]}
// "kind" is optional on input. Written with 17 significant digits.
//
// Probability vector: either a JSON array of reals, or plain text with one
// real per line (blank lines and '#' comments ignored). The format is picked
// from the first non-blank byte.
//
// Measure reports: text ("key: value"), CSV ("measure,value" header then one
// row per present field) or structured JSON. Human-facing reals use 12
// significant digits, JSON uses 17.

#include <filesystem>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include "hiddencorr/classical.hpp"
#include "hiddencorr/indexmap.hpp"
#include "hiddencorr/quantum.hpp"
#include "hiddencorr/thermo.hpp"

namespace hiddencorr {

enum class MatrixKind { density, hermitian };

enum class IoErrorCategory { io, parse, shape_mismatch, invariant_violation };

std::string_view to_string(IoErrorCategory c);
std::string_view to_string(MatrixKind k);

class IoError : public std::runtime_error {
 public:
  IoError(IoErrorCategory category, std::string field, double defect,
          const std::string& what)
      : std::runtime_error(what),
        category_(category),
        field_(std::move(field)),
        defect_(defect) {}
  IoError(IoErrorCategory category, const std::string& what)
      : IoError(category, {}, 0.0, what) {}

  IoErrorCategory category() const noexcept { return category_; }
  /// Offending field for invariant violations ("trace", "hermiticity", ...).
  const std::string& field() const noexcept { return field_; }
  double defect() const noexcept { return defect_; }

 private:
  IoErrorCategory category_;
  std::string field_;
  double defect_;
};

struct MatrixDocument {
  std::size_t dim = 0;
  Eigen::MatrixXd re;
  Eigen::MatrixXd im;
  MatrixKind kind = MatrixKind::density;

  ComplexMatrix complex() const;
};

/// Syntax and array-shape checks only.
MatrixDocument parse_matrix_document(std::string_view text,
                                     MatrixKind default_kind = MatrixKind::density);

using LoadedMatrix = std::variant<DensityMatrix, HermitianObservable>;

/// Parses and validates against the invariants of `kind`.
LoadedMatrix parse_matrix(std::string_view text, MatrixKind kind,
                          double tolerance = kStateTolerance);
LoadedMatrix load_matrix(const std::filesystem::path& path, MatrixKind kind,
                         double tolerance = kStateTolerance);

DensityMatrix load_density_matrix(const std::filesystem::path& path,
                                  double tolerance = kStateTolerance);
HermitianObservable load_hermitian(const std::filesystem::path& path,
                                   double tolerance = kStateTolerance);

std::string write_matrix(const ComplexMatrix& m, MatrixKind kind);
inline std::string write_matrix(const DensityMatrix& rho) {
  return write_matrix(rho.matrix(), MatrixKind::density);
}
inline std::string write_matrix(const HermitianObservable& h) {
  return write_matrix(h.matrix(), MatrixKind::hermitian);
}

ProbVector parse_prob_vector(std::string_view text);
ProbVector load_prob_vector(const std::filesystem::path& path);
/// JSON array, 17 significant digits.
std::string write_prob_vector(const ProbVector& p);

struct MeasureReport {
  std::string input;
  std::optional<FactorShape> shape;
  std::optional<std::string> units;
  std::optional<double> entropy;
  std::optional<double> mutual;
  std::optional<double> conditional;
  std::optional<double> min_pt_eigenvalue;
  std::optional<double> slack;
  std::optional<bool> ppt;
  std::optional<bool> conclusive;

  friend bool operator==(const MeasureReport&, const MeasureReport&) = default;
};

enum class ReportFormat { text, csv, structured };

/// Accepts "text", "csv", "json" or "structured".
ReportFormat parse_report_format(std::string_view name);

/// Throws DomainError if a present real is not finite.
std::string write_report(const MeasureReport& report, ReportFormat format);
MeasureReport parse_report(std::string_view structured);

/// CSV with header beta,energy,entropy,free_energy,log_partition and a
/// trailing mutual_information column when `with_mutual` is set. An absent
/// free energy is written as an empty field.
std::string write_gibbs_scan(std::span<const ThermoReport> rows, bool with_mutual);

/// CSV with header y,x1,...,xn listing every cell of the shape.
std::string write_index_table(const FactorShape& shape);

/// 12 significant digits, shortest form ("%.12g").
std::string format_real(double v);
/// 17 significant digits, scientific.
std::string format_lossless(double v);
/// 12 digits after the decimal point; used for single scalar CLI output.
std::string format_fixed(double v);

}  // namespace hiddencorr

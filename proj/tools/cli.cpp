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

#include "cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <optional>
#include <ostream>
#include <sstream>

#include "hiddencorr/classical.hpp"
#include "hiddencorr/errors.hpp"
#include "hiddencorr/indexmap.hpp"
#include "hiddencorr/io.hpp"
#include "hiddencorr/quantum.hpp"
#include "hiddencorr/thermo.hpp"

namespace hiddencorr::cli {

namespace {

/// Failure carrying its exit code and the category printed on stderr.
struct Failure {
  int code;
  std::string category;
  std::string message;
};

[[noreturn]] void usage(const std::string& message) { throw Failure{kUsage, "usage", message}; }

struct Common {
  double tolerance = kStateTolerance;
  bool bits = false;
};

// Input selection shared by entropy / mutual / conditional.
struct Source {
  std::string input;   // probability vector
  std::string matrix;  // density matrix
  std::string report;  // empty unless --report was given
  CLI::Option* report_opt = nullptr;
};

void add_source(CLI::App* cmd, Source& src) {
  auto* in = cmd->add_option("--input", src.input, "probability vector file (plain or JSON array)");
  auto* mx = cmd->add_option("--matrix", src.matrix, "density-matrix JSON document");
  in->excludes(mx);
  mx->excludes(in);
}

void add_report(CLI::App* cmd, std::string& fmt, CLI::Option*& opt) {
  opt = cmd->add_option("--report", fmt,
                        "emit a full record instead of a bare value; FORMAT is json "
                        "(default), csv or text")
            ->expected(0, 1)
            ->type_name("[FORMAT]");
}

std::optional<ReportFormat> report_format(const std::string& fmt, const CLI::Option* opt) {
  if (opt == nullptr || opt->count() == 0) return std::nullopt;
  if (fmt.empty()) return ReportFormat::structured;
  try {
    return parse_report_format(fmt);
  } catch (const DomainError& e) {
    usage(e.what());
  }
}

FactorShape parse_shape(const std::string& text) {
  try {
    return FactorShape::parse(text);
  } catch (const DomainError& e) {
    usage(e.what());
  }
}

void require_shape(const FactorShape& shape, std::size_t dim, std::size_t rank) {
  if (rank != 0 && shape.rank() != rank) {
    usage("--shape " + shape.to_string() + " must have exactly " + std::to_string(rank) +
          " factors");
  }
  if (shape.dimension() != dim) {
    usage("--shape " + shape.to_string() + " has product " +
          std::to_string(shape.dimension()) + " but the input dimension is " +
          std::to_string(dim));
  }
}

DensityMatrix read_density(const std::string& path, const Common& c) {
  return load_density_matrix(path, c.tolerance);
}

double info_scale(const Common& c) { return c.bits ? 1.0 / std::log(2.0) : 1.0; }

void emit_scalar(std::ostream& out, double value) { out << format_fixed(value) << '\n'; }

void emit(std::ostream& out, MeasureReport report, const Common& c,
          const std::optional<ReportFormat>& fmt, double scalar) {
  if (fmt) {
    if (c.bits) report.units = "bits";
    out << write_report(report, *fmt);
  } else {
    emit_scalar(out, scalar);
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{
      "Hidden correlations of single-qudit states and classical distributions.\n"
      "Indices split into virtual subsystems by y = x1 + (x2-1) X1 + (x3-1) X1 X2 + ...;\n"
      "all information quantities are in nats unless --bits is given.",
      "hiddencorr"};
  app.require_subcommand(1);
  app.footer(
      "Exit codes: 0 success (PPT / inequality holds), 2 usage error, 3 NPT, "
      "4 inequality violated, 5 invalid input");
  app.fallthrough();

  Common common;
  app.add_option("--tolerance", common.tolerance,
                 "validation / PPT / inequality tolerance (default 1e-9)")
      ->check(CLI::Range(1e-12, 1e-6));
  app.add_flag("--bits", common.bits, "report entropies and informations in bits (display only)");

  // decompose-index
  auto* cmd_index = app.add_subcommand(
      "decompose-index",
      "map y <-> (x1,...,xn): x1 = ((y-1) mod X1) + 1, higher coordinates by successive "
      "division; --all prints the whole table as CSV");
  std::size_t index_dim = 0, index_y = 0;
  std::string index_shape;
  cmd_index->add_option("--dim", index_dim, "system dimension N")->required();
  cmd_index->add_option("--shape", index_shape, "factors X1,X2[,X3...]")->required();
  auto* opt_y = cmd_index->add_option("--y", index_y, "1-based linear index");
  auto* opt_all = cmd_index->add_flag("--all", "print the full y,x1,... table");
  opt_y->excludes(opt_all);
  opt_all->excludes(opt_y);

  // entropy
  auto* cmd_entropy = app.add_subcommand(
      "entropy", "Shannon entropy -sum p ln p of --input, or von Neumann entropy "
                 "-Tr rho ln rho of --matrix");
  Source entropy_src;
  add_source(cmd_entropy, entropy_src);
  add_report(cmd_entropy, entropy_src.report, entropy_src.report_opt);

  // mutual
  auto* cmd_mutual = app.add_subcommand(
      "mutual", "mutual information I = S(1) + S(2) - S(12) across a two-factor --shape");
  Source mutual_src;
  std::string mutual_shape;
  cmd_mutual->add_option("--shape", mutual_shape, "two factors X1,X2")->required();
  add_source(cmd_mutual, mutual_src);
  add_report(cmd_mutual, mutual_src.report, mutual_src.report_opt);

  // conditional
  auto* cmd_conditional = app.add_subcommand(
      "conditional",
      "conditional information S(12) + S(23) - S(2) - S(123) across a three-factor --shape");
  Source conditional_src;
  std::string conditional_shape;
  cmd_conditional->add_option("--shape", conditional_shape, "three factors X1,X2,X3")
      ->required();
  add_source(cmd_conditional, conditional_src);
  add_report(cmd_conditional, conditional_src.report, conditional_src.report_opt);

  // reduce
  auto* cmd_reduce = app.add_subcommand(
      "reduce", "partial trace over the axes not listed in --keep; writes a matrix document");
  std::string reduce_shape, reduce_keep, reduce_matrix;
  cmd_reduce->add_option("--shape", reduce_shape, "factors X1,X2[,...]")->required();
  cmd_reduce->add_option("--keep", reduce_keep, "kept axes, 1-based, increasing (e.g. 1 or 1,3)")
      ->required();
  cmd_reduce->add_option("--matrix", reduce_matrix, "density-matrix JSON document")->required();

  // ppt
  auto* cmd_ppt = app.add_subcommand(
      "ppt", "positive-partial-transpose test over a two-factor --shape; exit 0 if PPT, "
             "3 if NPT (entangled)");
  std::string ppt_shape, ppt_matrix, ppt_report;
  CLI::Option* ppt_report_opt = nullptr;
  cmd_ppt->add_option("--shape", ppt_shape, "two factors X1,X2")->required();
  cmd_ppt->add_option("--matrix", ppt_matrix, "density-matrix JSON document")->required();
  add_report(cmd_ppt, ppt_report, ppt_report_opt);

  // pad
  auto* cmd_pad = app.add_subcommand(
      "pad", "append k zero rows and columns so N + k factorizes; writes a matrix document");
  long long pad_k = 0;
  std::string pad_matrix;
  cmd_pad->add_option("--k", pad_k, "number of zero rows/columns to add (>= 0)")->required();
  cmd_pad->add_option("--matrix", pad_matrix, "density-matrix JSON document")->required();

  // gibbs-scan
  auto* cmd_gibbs = app.add_subcommand(
      "gibbs-scan",
      "scan rho(beta) = exp(-beta H)/Tr exp(-beta H) over a beta grid; CSV columns "
      "beta,energy,entropy,free_energy,log_partition[,mutual_information] with "
      "E = Tr H rho, F = E - S/beta, ln Z = ln Tr exp(-beta H)");
  std::string gibbs_h, gibbs_shape;
  double beta_min = 0.0, beta_max = 0.0;
  std::size_t steps = 0;
  cmd_gibbs->add_option("--hamiltonian", gibbs_h, "Hermitian JSON document")->required();
  cmd_gibbs->add_option("--beta-min", beta_min, "first grid point")->required();
  cmd_gibbs->add_option("--beta-max", beta_max, "last grid point")->required();
  cmd_gibbs->add_option("--steps", steps, "number of grid points (>= 1)")
      ->required()
      ->check(CLI::PositiveNumber);
  cmd_gibbs->add_option("--shape", gibbs_shape,
                        "two factors X1,X2: add the mutual information of the two reductions");

  // check-inequality
  auto* cmd_ineq = app.add_subcommand(
      "check-inequality",
      "slack = ln Tr exp(H) - Tr(H rho) - S(rho); exit 0 if slack >= -tolerance, 4 otherwise");
  std::string ineq_matrix, ineq_h, ineq_report;
  CLI::Option* ineq_report_opt = nullptr;
  cmd_ineq->add_option("--matrix", ineq_matrix, "density-matrix JSON document")->required();
  cmd_ineq->add_option("--hamiltonian", ineq_h, "Hermitian JSON document")->required();
  add_report(cmd_ineq, ineq_report, ineq_report_opt);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    std::string msg = e.what();
    std::replace(msg.begin(), msg.end(), '\n', ' ');
    err << "hiddencorr: usage: " << msg << '\n';
    return kUsage;
  }

  try {
    if (*cmd_index) {
      const FactorShape shape = parse_shape(index_shape);
      if (shape.dimension() != index_dim) {
        usage("--shape " + shape.to_string() + " has product " +
              std::to_string(shape.dimension()) + ", not --dim " + std::to_string(index_dim));
      }
      if (opt_all->count() > 0) {
        out << write_index_table(shape);
      } else if (opt_y->count() > 0) {
        const MultiIndex idx = decompose(index_y, shape);
        out << '(';
        for (std::size_t i = 0; i < idx.size(); ++i) out << (i ? "," : "") << idx[i];
        out << ")\n";
      } else {
        usage("decompose-index needs --y or --all");
      }
      return kSuccess;
    }

    auto require_source = [](const Source& s) {
      if (s.input.empty() && s.matrix.empty()) usage("one of --input or --matrix is required");
    };

    if (*cmd_entropy) {
      require_source(entropy_src);
      const auto fmt = report_format(entropy_src.report, entropy_src.report_opt);
      MeasureReport r;
      double value = 0.0;
      if (!entropy_src.input.empty()) {
        r.input = entropy_src.input;
        value = shannon_entropy(load_prob_vector(entropy_src.input));
      } else {
        r.input = entropy_src.matrix;
        value = von_neumann_entropy(read_density(entropy_src.matrix, common));
      }
      value *= info_scale(common);
      r.entropy = value;
      emit(out, r, common, fmt, value);
      return kSuccess;
    }

    if (*cmd_mutual || *cmd_conditional) {
      const bool mutual = static_cast<bool>(*cmd_mutual);
      const Source& src = mutual ? mutual_src : conditional_src;
      require_source(src);
      const auto fmt = report_format(src.report, src.report_opt);
      const FactorShape shape = parse_shape(mutual ? mutual_shape : conditional_shape);
      const std::size_t rank = mutual ? 2 : 3;
      MeasureReport r;
      r.shape = shape;
      double value = 0.0;
      if (!src.input.empty()) {
        r.input = src.input;
        const ProbVector p = load_prob_vector(src.input);
        require_shape(shape, p.dimension(), rank);
        value = mutual ? mutual_information(p, shape) : conditional_information(p, shape);
      } else {
        r.input = src.matrix;
        const DensityMatrix rho = read_density(src.matrix, common);
        require_shape(shape, rho.dim(), rank);
        value = mutual ? mutual_quantum_information(rho, shape)
                       : conditional_quantum_information(rho, shape);
      }
      value *= info_scale(common);
      (mutual ? r.mutual : r.conditional) = value;
      emit(out, r, common, fmt, value);
      return kSuccess;
    }

    if (*cmd_reduce) {
      const FactorShape shape = parse_shape(reduce_shape);
      std::vector<std::size_t> keep;
      try {
        const FactorShape axes = FactorShape::parse(reduce_keep);
        keep.assign(axes.factors().begin(), axes.factors().end());
      } catch (const DomainError&) {
        usage("--keep must be a comma-separated list of axes, got '" + reduce_keep + "'");
      }
      const DensityMatrix rho = read_density(reduce_matrix, common);
      require_shape(shape, rho.dim(), 0);
      std::optional<MarginalSpec> spec;
      try {
        spec.emplace(shape, keep);
      } catch (const DomainError& e) {
        usage(e.what());
      }
      out << write_matrix(artificial_reduce(rho, *spec));
      return kSuccess;
    }

    if (*cmd_ppt) {
      const auto fmt = report_format(ppt_report, ppt_report_opt);
      const FactorShape shape = parse_shape(ppt_shape);
      const DensityMatrix rho = read_density(ppt_matrix, common);
      require_shape(shape, rho.dim(), 2);
      const PptVerdict v = is_ppt(rho, shape, common.tolerance);
      MeasureReport r;
      r.input = ppt_matrix;
      r.shape = shape;
      r.min_pt_eigenvalue = v.min_pt_eigenvalue;
      r.ppt = v.ppt;
      r.conclusive = v.conclusive;
      out << write_report(r, fmt.value_or(ReportFormat::csv));
      return v.ppt ? kSuccess : kNotPpt;
    }

    if (*cmd_pad) {
      const DensityMatrix rho = read_density(pad_matrix, common);
      if (pad_k < 0) usage("--k must be >= 0");
      out << write_matrix(embed_pad(rho, pad_k));
      return kSuccess;
    }

    if (*cmd_gibbs) {
      const HermitianObservable h = load_hermitian(gibbs_h, common.tolerance);
      std::optional<FactorShape> shape;
      if (!gibbs_shape.empty()) {
        shape = parse_shape(gibbs_shape);
        require_shape(*shape, h.dim(), 2);
      }
      std::vector<ThermoReport> rows;
      rows.reserve(steps);
      for (std::size_t i = 0; i < steps; ++i) {
        const double beta =
            steps == 1 ? beta_min
                       : beta_min + (beta_max - beta_min) * static_cast<double>(i) /
                                        static_cast<double>(steps - 1);
        ThermoReport r = thermo_report(h, beta, shape);
        r.entropy *= info_scale(common);
        if (r.mutual_information) *r.mutual_information *= info_scale(common);
        rows.push_back(r);
      }
      out << write_gibbs_scan(rows, shape.has_value());
      return kSuccess;
    }

    if (*cmd_ineq) {
      const auto fmt = report_format(ineq_report, ineq_report_opt);
      const DensityMatrix rho = read_density(ineq_matrix, common);
      const HermitianObservable h = load_hermitian(ineq_h, common.tolerance);
      if (rho.dim() != h.dim()) {
        usage("state dimension " + std::to_string(rho.dim()) +
              " does not match hamiltonian dimension " + std::to_string(h.dim()));
      }
      const double slack = check_energy_entropy_inequality(rho, h);
      MeasureReport r;
      r.input = ineq_matrix;
      r.slack = slack;
      if (fmt) {
        out << write_report(r, *fmt);
      } else {
        emit_scalar(out, slack);
      }
      return slack >= -common.tolerance ? kSuccess : kInequalityViolated;
    }
  } catch (const Failure& f) {
    err << "hiddencorr: " << f.category << ": " << f.message << '\n';
    return f.code;
  } catch (const IoError& e) {
    err << "hiddencorr: " << to_string(e.category()) << ": " << e.what() << '\n';
    return kInvalidInput;
  } catch (const InvalidStateError& e) {
    err << "hiddencorr: invariant_violation: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const DomainError& e) {
    err << "hiddencorr: usage: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "hiddencorr: internal: " << e.what() << '\n';
    return kInvalidInput;
  }
  return kUsage;
}

}  // namespace hiddencorr::cli

#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "unkry/krylov.hpp"
#include "unkry/lanczos.hpp"
#include "unkry/minres.hpp"
#include "unkry/operator.hpp"
#include "unkry/vec.hpp"

namespace unkry::io {

// Matrices are materialized dense; anything larger is refused.
inline constexpr std::size_t dense_dim_cap = 5000;

struct ProblemInstance {
  DenseSymmetric H;
  Vector c;
  std::string name;
  std::vector<std::string> source_paths;
};

// Reads "%%MatrixMarket matrix coordinate|array real symmetric|general".
// Coordinate entries are 1-based; for symmetric files off-diagonal entries
// are mirrored. General files are checked for symmetry. Throws ParseError
// (with line number), NotSymmetric, UnsupportedField, IoError.
DenseSymmetric read_matrix_market(const std::string& path);

// Writes the lower triangle as coordinate real symmetric with full
// precision, so read_matrix_market reproduces the operator exactly.
void write_matrix_market(const DenseSymmetric& H, const std::string& path);

// Reads a Matrix Market array n x 1 vector or a plain text file with one
// number per line. Throws ParseError, EmptyVector, UnsupportedField, IoError.
Vector read_vector(const std::string& path);

// Loads H and c together; when rhs_is_b the file holds b of Hx = b and the
// stored c is -b. Throws DimensionMismatch on top of the reader errors.
ProblemInstance load_problem(const std::string& matrix_path,
                             const std::string& c_path, bool rhs_is_b);

enum class ReportFormat { json, text };

// Flat, serialization-ready view of a solve. Field order in the JSON output
// is fixed; every field is present, null when not applicable.
struct ReportDocument {
  int schema_version = 1;
  std::string method;  // krylov | minres | cg
  std::string status;  // converged | max_iter_reached
  std::optional<std::string> verdict;
  std::size_t n = 0;
  std::size_t r = 0;
  double delta_r = 0.0;
  double residual_norm = 0.0;
  std::optional<double> residual_sq;  // ||H x_mr + c||^2, minres runs
  std::optional<Vector> x;
  std::optional<Vector> x_mr;
  std::optional<Vector> g_mr;
  std::optional<Vector> certificate_y;
  std::optional<Vector> certificate_y_normalized;
  std::optional<double> x_gap;
  std::optional<std::vector<double>> residual_history;
  IterationTrace trace;
  std::optional<std::vector<Vector>> q_columns;  // per-step, when history kept
  std::optional<std::vector<Vector>> y_columns;
  double q_tol = 0.0;
  double delta_tol = 0.0;
  std::size_t max_iter = 0;  // effective cap
  std::string scaling;
  bool reorthogonalize = false;
  std::optional<double> solve_seconds;
};

ReportDocument make_document(const SolveReport& rep, const KrylovConfig& cfg,
                             std::size_t n, const std::string& method);
ReportDocument make_document(const MinresReport& rep, const KrylovConfig& cfg,
                             std::size_t n);

// JSON: fixed field order, floats at 17 significant digits, so
// serialize -> parse -> serialize is byte-identical. Text: the 4-decimal
// column layout with |value| < 5e-5 printed as a bare 0.
void write_report(const ReportDocument& doc, std::ostream& os,
                  ReportFormat format);
void write_report(const ReportDocument& doc, const std::string& path,
                  ReportFormat format);

std::string serialize_report(const ReportDocument& doc);
ReportDocument parse_report(const std::string& json_text);

}  // namespace unkry::io

#include "unkry/io.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>
#include <utility>

#include <json.hpp>

#include "unkry/errors.hpp"

namespace unkry::io {

namespace {

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char ch) { return std::tolower(ch); });
  return s;
}

std::vector<std::string> tokens(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  std::string t;
  while (in >> t) out.push_back(t);
  return out;
}

double parse_double(const std::string& t, std::size_t line) {
  try {
    std::size_t used = 0;
    const double v = std::stod(t, &used);
    if (used != t.size()) throw std::invalid_argument(t);
    return v;
  } catch (const std::exception&) {
    throw ParseError("not a number: '" + t + "'", line);
  }
}

long parse_index(const std::string& t, std::size_t line) {
  try {
    std::size_t used = 0;
    const long v = std::stol(t, &used);
    if (used != t.size()) throw std::invalid_argument(t);
    return v;
  } catch (const std::exception&) {
    throw ParseError("not an integer: '" + t + "'", line);
  }
}

struct Header {
  bool coordinate = false;
  bool symmetric = false;
};

Header parse_header(const std::string& line) {
  const auto t = tokens(line);
  if (t.size() != 5 || lower(t[0]) != "%%matrixmarket" || lower(t[1]) != "matrix") {
    throw ParseError("expected '%%MatrixMarket matrix <format> <field> <symmetry>'", 1);
  }
  Header h;
  const std::string format = lower(t[2]);
  if (format == "coordinate") {
    h.coordinate = true;
  } else if (format == "array") {
    h.coordinate = false;
  } else {
    throw ParseError("unknown format '" + t[2] + "'", 1);
  }
  const std::string field = lower(t[3]);
  if (field != "real") {
    if (field == "complex" || field == "pattern" || field == "integer") {
      throw UnsupportedField("field '" + t[3] + "' is not supported, only real");
    }
    throw ParseError("unknown field '" + t[3] + "'", 1);
  }
  const std::string symmetry = lower(t[4]);
  if (symmetry == "symmetric") {
    h.symmetric = true;
  } else if (symmetry == "general") {
    h.symmetric = false;
  } else if (symmetry == "skew-symmetric" || symmetry == "hermitian") {
    throw UnsupportedField("symmetry '" + t[4] + "' is not supported");
  } else {
    throw ParseError("unknown symmetry '" + t[4] + "'", 1);
  }
  return h;
}

// Reads the next content line, skipping comments and blanks. Returns false
// at end of file; line_no tracks the physical line number of the result.
bool next_content_line(std::istream& in, std::string& line, std::size_t& line_no) {
  while (std::getline(in, line)) {
    ++line_no;
    std::size_t pos = line.find_first_not_of(" \t\r");
    if (pos == std::string::npos) continue;
    if (line[pos] == '%') continue;
    return true;
  }
  return false;
}

void check_symmetry_or_throw(const Vector& a, std::size_t n) {
  double amax = 0.0;
  for (double e : a) amax = std::max(amax, std::abs(e));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (std::abs(a[i * n + j] - a[j * n + i]) > asymmetry_tol * amax) {
        throw NotSymmetric("general matrix is not symmetric at entry (" +
                           std::to_string(i + 1) + "," + std::to_string(j + 1) +
                           ")");
      }
    }
  }
}

std::string format_double(double v) {
  char buf[64];
  if (v == 0.0) v = 0.0;  // canonicalize -0 so parse-reserialize is stable
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

// Table cell: fixed 4 decimals, a bare 0 when |v| < 5e-5.
std::string format_cell(double v) {
  char buf[64];
  if (std::abs(v) < 5e-5) {
    std::snprintf(buf, sizeof(buf), "%10s", "0");
  } else {
    std::snprintf(buf, sizeof(buf), "%10.4f", v);
  }
  return buf;
}

}  // namespace

DenseSymmetric read_matrix_market(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "'");

  std::string line;
  std::size_t line_no = 0;
  if (!std::getline(in, line)) throw ParseError("empty file", 1);
  ++line_no;
  const Header h = parse_header(line);

  if (!next_content_line(in, line, line_no)) {
    throw ParseError("missing size line", line_no + 1);
  }
  const auto size_tokens = tokens(line);
  const std::size_t size_line = line_no;

  if (h.coordinate) {
    if (size_tokens.size() != 3) {
      throw ParseError("coordinate size line needs 'rows cols nnz'", size_line);
    }
    const long rows = parse_index(size_tokens[0], size_line);
    const long cols = parse_index(size_tokens[1], size_line);
    const long nnz = parse_index(size_tokens[2], size_line);
    if (rows <= 0 || cols <= 0 || nnz < 0) {
      throw ParseError("nonpositive dimensions", size_line);
    }
    if (rows != cols) {
      throw ParseError("matrix is not square: " + std::to_string(rows) + "x" +
                           std::to_string(cols),
                       size_line);
    }
    const std::size_t n = static_cast<std::size_t>(rows);
    if (n > dense_dim_cap) {
      throw ParseError("dimension " + std::to_string(n) +
                           " exceeds the dense cap " +
                           std::to_string(dense_dim_cap),
                       size_line);
    }

    Vector a(n * n, 0.0);
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (long e = 0; e < nnz; ++e) {
      if (!next_content_line(in, line, line_no)) {
        throw ParseError("expected " + std::to_string(nnz) + " entries, found " +
                             std::to_string(e),
                         line_no + 1);
      }
      const auto t = tokens(line);
      if (t.size() != 3) {
        throw ParseError("coordinate entry needs 'i j value'", line_no);
      }
      const long i = parse_index(t[0], line_no);
      const long j = parse_index(t[1], line_no);
      const double v = parse_double(t[2], line_no);
      if (i < 1 || i > rows || j < 1 || j > cols) {
        throw ParseError("index (" + std::to_string(i) + "," + std::to_string(j) +
                             ") out of range",
                         line_no);
      }
      if (!std::isfinite(v)) throw ParseError("non-finite value", line_no);
      // 1-based in the file, 0-based in storage.
      const std::size_t ii = static_cast<std::size_t>(i - 1);
      const std::size_t jj = static_cast<std::size_t>(j - 1);
      const auto key = h.symmetric
                           ? std::pair<std::size_t, std::size_t>(
                                 std::min(ii, jj), std::max(ii, jj))
                           : std::pair<std::size_t, std::size_t>(ii, jj);
      if (!seen.insert(key).second) {
        throw ParseError("duplicate entry (" + std::to_string(i) + "," +
                             std::to_string(j) + ")",
                         line_no);
      }
      a[ii * n + jj] = v;
      if (h.symmetric) a[jj * n + ii] = v;
    }
    if (next_content_line(in, line, line_no)) {
      throw ParseError("unexpected content after " + std::to_string(nnz) +
                           " entries",
                       line_no);
    }
    if (!h.symmetric) check_symmetry_or_throw(a, n);
    return make_dense(n, a);
  }

  // Array format: column-major values; symmetric files store the lower
  // triangle (diagonal included) column by column.
  if (size_tokens.size() != 2) {
    throw ParseError("array size line needs 'rows cols'", size_line);
  }
  const long rows = parse_index(size_tokens[0], size_line);
  const long cols = parse_index(size_tokens[1], size_line);
  if (rows <= 0 || cols <= 0) {
    throw ParseError("nonpositive dimensions", size_line);
  }
  if (rows != cols) {
    throw ParseError("matrix is not square: " + std::to_string(rows) + "x" +
                         std::to_string(cols),
                     size_line);
  }
  const std::size_t n = static_cast<std::size_t>(rows);
  if (n > dense_dim_cap) {
    throw ParseError("dimension " + std::to_string(n) +
                         " exceeds the dense cap " + std::to_string(dense_dim_cap),
                     size_line);
  }

  Vector a(n * n, 0.0);
  std::vector<std::pair<std::size_t, std::size_t>> slots;
  if (h.symmetric) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t i = j; i < n; ++i) slots.emplace_back(i, j);
    }
  } else {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t i = 0; i < n; ++i) slots.emplace_back(i, j);
    }
  }

  std::size_t filled = 0;
  while (filled < slots.size()) {
    if (!next_content_line(in, line, line_no)) {
      throw ParseError("expected " + std::to_string(slots.size()) +
                           " values, found " + std::to_string(filled),
                       line_no + 1);
    }
    for (const auto& t : tokens(line)) {
      if (filled >= slots.size()) {
        throw ParseError("unexpected extra value '" + t + "'", line_no);
      }
      const double v = parse_double(t, line_no);
      if (!std::isfinite(v)) throw ParseError("non-finite value", line_no);
      const auto [i, j] = slots[filled++];
      a[i * n + j] = v;
      if (h.symmetric) a[j * n + i] = v;
    }
  }
  if (next_content_line(in, line, line_no)) {
    throw ParseError("unexpected content after " + std::to_string(slots.size()) +
                         " values",
                     line_no);
  }
  if (!h.symmetric) check_symmetry_or_throw(a, n);
  return make_dense(n, a);
}

void write_matrix_market(const DenseSymmetric& H, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  const std::size_t n = H.dim();

  std::size_t nnz = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      if (H.entry(i, j) != 0.0) ++nnz;
    }
  }
  out << "%%MatrixMarket matrix coordinate real symmetric\n";
  out << n << " " << n << " " << nnz << "\n";
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      const double v = H.entry(i, j);
      if (v != 0.0) {
        out << (i + 1) << " " << (j + 1) << " " << format_double(v) << "\n";
      }
    }
  }
  if (!out) throw IoError("write failed on '" + path + "'");
}

Vector read_vector(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "'");

  std::string first;
  std::size_t line_no = 0;
  bool have_first = false;
  while (std::getline(in, first)) {
    ++line_no;
    const std::size_t pos = first.find_first_not_of(" \t\r");
    if (pos == std::string::npos) continue;
    have_first = true;
    break;
  }
  if (!have_first) throw EmptyVector("'" + path + "' holds no values");

  Vector v;
  const bool is_mm = lower(first).rfind("%%matrixmarket", 0) == 0;
  if (is_mm) {
    const Header h = parse_header(first);
    if (h.coordinate) {
      throw ParseError("vector files must use array format", 1);
    }
    std::string line;
    if (!next_content_line(in, line, line_no)) {
      throw ParseError("missing size line", line_no + 1);
    }
    const auto size_tokens = tokens(line);
    if (size_tokens.size() != 2) {
      throw ParseError("array size line needs 'rows cols'", line_no);
    }
    const long rows = parse_index(size_tokens[0], line_no);
    const long cols = parse_index(size_tokens[1], line_no);
    if (rows <= 0 || cols != 1) {
      throw ParseError("vector files must be n x 1", line_no);
    }
    while (next_content_line(in, line, line_no)) {
      for (const auto& t : tokens(line)) {
        v.push_back(parse_double(t, line_no));
      }
    }
    if (v.size() != static_cast<std::size_t>(rows)) {
      throw ParseError("expected " + std::to_string(rows) + " values, found " +
                           std::to_string(v.size()),
                       line_no);
    }
  } else {
    // Plain text. first already holds the first content line.
    std::size_t current = line_no;
    std::string line = first;
    do {
      const std::size_t pos = line.find_first_not_of(" \t\r");
      if (pos != std::string::npos && line[pos] != '%') {
        for (const auto& t : tokens(line)) {
          v.push_back(parse_double(t, current));
        }
      }
      if (!std::getline(in, line)) break;
      ++current;
    } while (true);
  }

  if (v.empty()) throw EmptyVector("'" + path + "' holds no values");
  for (double e : v) {
    if (!std::isfinite(e)) throw ParseError("non-finite value", 0);
  }
  return v;
}

ProblemInstance load_problem(const std::string& matrix_path,
                             const std::string& c_path, bool rhs_is_b) {
  DenseSymmetric H = read_matrix_market(matrix_path);
  Vector c = read_vector(c_path);
  if (c.size() != H.dim()) {
    throw DimensionMismatch("vector length " + std::to_string(c.size()) +
                            " does not match matrix dimension " +
                            std::to_string(H.dim()));
  }
  if (rhs_is_b) c = scaled(-1.0, c);
  ProblemInstance p{std::move(H), std::move(c), "", {matrix_path, c_path}};
  return p;
}

ReportDocument make_document(const SolveReport& rep, const KrylovConfig& cfg,
                             std::size_t n, const std::string& method) {
  ReportDocument doc;
  doc.method = method;
  doc.status = to_string(rep.status);
  if (rep.verdict) doc.verdict = to_string(*rep.verdict);
  doc.n = n;
  doc.r = rep.r;
  doc.delta_r = rep.delta_r;
  doc.residual_norm = rep.residual_norm;
  doc.x = rep.x;
  doc.certificate_y = rep.certificate_y;
  if (rep.certificate_y) {
    const double yn = norm2(*rep.certificate_y);
    if (yn > 0.0) {
      doc.certificate_y_normalized = scaled(1.0 / yn, *rep.certificate_y);
    }
  }
  doc.trace = rep.trace;
  if (!rep.history.empty()) {
    std::vector<Vector> q_cols, y_cols;
    for (const auto& t : rep.history) {
      q_cols.push_back(t.q);
      y_cols.push_back(t.y);
    }
    doc.q_columns = std::move(q_cols);
    doc.y_columns = std::move(y_cols);
  }
  doc.q_tol = cfg.q_tol;
  doc.delta_tol = cfg.delta_tol;
  doc.max_iter = cfg.effective_max_iter(n);
  doc.scaling = to_string(cfg.strategy);
  doc.reorthogonalize = cfg.reorthogonalize;
  return doc;
}

ReportDocument make_document(const MinresReport& rep, const KrylovConfig& cfg,
                             std::size_t n) {
  ReportDocument doc =
      make_document(static_cast<const SolveReport&>(rep), cfg, n, "minres");
  doc.x_mr = rep.x_mr;
  doc.g_mr = rep.g_mr;
  doc.residual_history = rep.residual_history;
  doc.x_gap = rep.x_gap;
  if (!rep.residual_history.empty()) {
    const double rn = rep.residual_history.back();
    doc.residual_sq = rn * rn;
  }
  return doc;
}

namespace {

class JsonWriter {
 public:
  void begin() { out_ << "{"; }
  void end() { out_ << "}"; }

  void key(const std::string& k) {
    if (!first_) out_ << ",";
    first_ = false;
    out_ << "\"" << k << "\":";
  }

  void value(double v) { out_ << format_double(v); }
  void value(std::size_t v) { out_ << v; }
  void value(int v) { out_ << v; }
  void value(bool v) { out_ << (v ? "true" : "false"); }
  void value(const std::string& s) { out_ << "\"" << s << "\""; }
  void null() { out_ << "null"; }

  void value(const std::vector<double>& v) {
    out_ << "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) out_ << ",";
      out_ << format_double(v[i]);
    }
    out_ << "]";
  }

  void value(const std::vector<Vector>& cols) {
    out_ << "[";
    for (std::size_t i = 0; i < cols.size(); ++i) {
      if (i) out_ << ",";
      value(cols[i]);
    }
    out_ << "]";
  }

  void raw(const std::string& s) { out_ << s; }

  std::string str() const { return out_.str(); }

 private:
  std::ostringstream out_;
  bool first_ = true;
};

void require_finite_doc(const ReportDocument& doc) {
  auto check_scalar = [](double v) {
    if (!std::isfinite(v)) throw IoError("report contains a non-finite value");
  };
  auto check_vec = [&](const Vector& v) {
    for (double e : v) check_scalar(e);
  };
  check_scalar(doc.delta_r);
  check_scalar(doc.residual_norm);
  if (doc.residual_sq) check_scalar(*doc.residual_sq);
  if (doc.x) check_vec(*doc.x);
  if (doc.x_mr) check_vec(*doc.x_mr);
  if (doc.g_mr) check_vec(*doc.g_mr);
  if (doc.certificate_y) check_vec(*doc.certificate_y);
  if (doc.certificate_y_normalized) check_vec(*doc.certificate_y_normalized);
  if (doc.x_gap) check_scalar(*doc.x_gap);
  if (doc.residual_history) check_vec(*doc.residual_history);
  check_vec(doc.trace.alphas);
  check_vec(doc.trace.betas);
  check_vec(doc.trace.thetas);
  check_vec(doc.trace.qnorms);
  check_vec(doc.trace.deltas);
  if (doc.q_columns) {
    for (const auto& col : *doc.q_columns) check_vec(col);
  }
  if (doc.y_columns) {
    for (const auto& col : *doc.y_columns) check_vec(col);
  }
  check_scalar(doc.q_tol);
  check_scalar(doc.delta_tol);
  if (doc.solve_seconds) check_scalar(*doc.solve_seconds);
}

}  // namespace

std::string serialize_report(const ReportDocument& doc) {
  require_finite_doc(doc);
  JsonWriter w;
  w.begin();
  w.key("schema_version");
  w.value(doc.schema_version);
  w.key("method");
  w.value(doc.method);
  w.key("status");
  w.value(doc.status);
  w.key("verdict");
  if (doc.verdict) w.value(*doc.verdict); else w.null();
  w.key("n");
  w.value(doc.n);
  w.key("r");
  w.value(doc.r);
  w.key("delta_r");
  w.value(doc.delta_r);
  w.key("residual_norm");
  w.value(doc.residual_norm);
  w.key("residual_sq");
  if (doc.residual_sq) w.value(*doc.residual_sq); else w.null();
  w.key("x");
  if (doc.x) w.value(*doc.x); else w.null();
  w.key("x_mr");
  if (doc.x_mr) w.value(*doc.x_mr); else w.null();
  w.key("g_mr");
  if (doc.g_mr) w.value(*doc.g_mr); else w.null();
  w.key("certificate_y");
  if (doc.certificate_y) w.value(*doc.certificate_y); else w.null();
  w.key("certificate_y_normalized");
  if (doc.certificate_y_normalized) w.value(*doc.certificate_y_normalized); else w.null();
  w.key("x_gap");
  if (doc.x_gap) w.value(*doc.x_gap); else w.null();
  w.key("residual_history");
  if (doc.residual_history) w.value(*doc.residual_history); else w.null();

  JsonWriter trace;
  trace.begin();
  trace.key("alphas");
  trace.value(doc.trace.alphas);
  trace.key("betas");
  trace.value(doc.trace.betas);
  trace.key("thetas");
  trace.value(doc.trace.thetas);
  trace.key("qnorms");
  trace.value(doc.trace.qnorms);
  trace.key("deltas");
  trace.value(doc.trace.deltas);
  trace.end();
  w.key("trace");
  w.raw(trace.str());

  w.key("q_columns");
  if (doc.q_columns) w.value(*doc.q_columns); else w.null();
  w.key("y_columns");
  if (doc.y_columns) w.value(*doc.y_columns); else w.null();

  JsonWriter config;
  config.begin();
  config.key("q_tol");
  config.value(doc.q_tol);
  config.key("delta_tol");
  config.value(doc.delta_tol);
  config.key("max_iter");
  config.value(doc.max_iter);
  config.key("scaling");
  config.value(doc.scaling);
  config.key("reorthogonalize");
  config.value(doc.reorthogonalize);
  config.end();
  w.key("config");
  w.raw(config.str());

  JsonWriter timings;
  timings.begin();
  timings.key("solve_seconds");
  if (doc.solve_seconds) timings.value(*doc.solve_seconds); else timings.null();
  timings.end();
  w.key("timings");
  w.raw(timings.str());

  w.end();
  return w.str() + "\n";
}

ReportDocument parse_report(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid report JSON: ") + e.what(), 0);
  }

  auto opt_double = [](const nlohmann::json& v) -> std::optional<double> {
    if (v.is_null()) return std::nullopt;
    return v.get<double>();
  };
  auto opt_vec = [](const nlohmann::json& v) -> std::optional<Vector> {
    if (v.is_null()) return std::nullopt;
    return v.get<Vector>();
  };
  auto opt_cols = [](const nlohmann::json& v) -> std::optional<std::vector<Vector>> {
    if (v.is_null()) return std::nullopt;
    return v.get<std::vector<Vector>>();
  };

  try {
    ReportDocument doc;
    doc.schema_version = j.at("schema_version").get<int>();
    if (doc.schema_version != 1) {
      throw ParseError("unsupported schema_version " +
                           std::to_string(doc.schema_version),
                       0);
    }
    doc.method = j.at("method").get<std::string>();
    doc.status = j.at("status").get<std::string>();
    if (!j.at("verdict").is_null()) doc.verdict = j.at("verdict").get<std::string>();
    doc.n = j.at("n").get<std::size_t>();
    doc.r = j.at("r").get<std::size_t>();
    doc.delta_r = j.at("delta_r").get<double>();
    doc.residual_norm = j.at("residual_norm").get<double>();
    doc.residual_sq = opt_double(j.at("residual_sq"));
    doc.x = opt_vec(j.at("x"));
    doc.x_mr = opt_vec(j.at("x_mr"));
    doc.g_mr = opt_vec(j.at("g_mr"));
    doc.certificate_y = opt_vec(j.at("certificate_y"));
    doc.certificate_y_normalized = opt_vec(j.at("certificate_y_normalized"));
    doc.x_gap = opt_double(j.at("x_gap"));
    if (!j.at("residual_history").is_null()) {
      doc.residual_history = j.at("residual_history").get<std::vector<double>>();
    }
    const auto& tr = j.at("trace");
    doc.trace.alphas = tr.at("alphas").get<std::vector<double>>();
    doc.trace.betas = tr.at("betas").get<std::vector<double>>();
    doc.trace.thetas = tr.at("thetas").get<std::vector<double>>();
    doc.trace.qnorms = tr.at("qnorms").get<std::vector<double>>();
    doc.trace.deltas = tr.at("deltas").get<std::vector<double>>();
    doc.q_columns = opt_cols(j.at("q_columns"));
    doc.y_columns = opt_cols(j.at("y_columns"));
    const auto& cfg = j.at("config");
    doc.q_tol = cfg.at("q_tol").get<double>();
    doc.delta_tol = cfg.at("delta_tol").get<double>();
    doc.max_iter = cfg.at("max_iter").get<std::size_t>();
    doc.scaling = cfg.at("scaling").get<std::string>();
    doc.reorthogonalize = cfg.at("reorthogonalize").get<bool>();
    doc.solve_seconds = opt_double(j.at("timings").at("solve_seconds"));
    return doc;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("report JSON missing or mistyped field: ") +
                         e.what(),
                     0);
  }
}

namespace {

void write_table(std::ostream& os, const std::string& name,
                 const std::vector<Vector>& columns) {
  if (columns.empty()) return;
  const std::size_t n = columns.front().size();
  os << name << " =\n";
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& col : columns) os << format_cell(col[i]);
    os << "\n";
  }
  os << "\n";
}

void write_row(std::ostream& os, const std::string& name, const Vector& v) {
  os << name << " =\n";
  for (double e : v) os << format_cell(e);
  os << "\n\n";
}

}  // namespace

void write_report(const ReportDocument& doc, std::ostream& os,
                  ReportFormat format) {
  if (format == ReportFormat::json) {
    os << serialize_report(doc);
    return;
  }
  require_finite_doc(doc);

  os << "method: " << doc.method << "\n";
  os << "status: " << doc.status << "\n";
  os << "verdict: " << (doc.verdict ? *doc.verdict : "undetermined") << "\n";
  os << "n = " << doc.n << ", r = " << doc.r << "\n\n";

  if (doc.q_columns) write_table(os, "q", *doc.q_columns);
  if (doc.y_columns) write_table(os, "y", *doc.y_columns);
  if (!doc.trace.deltas.empty()) write_row(os, "delta", doc.trace.deltas);
  if (doc.x) write_row(os, "x", *doc.x);
  if (doc.x_mr) write_row(os, "xMR", *doc.x_mr);
  if (doc.certificate_y) write_row(os, "certificate y", *doc.certificate_y);
  if (doc.certificate_y_normalized) {
    write_row(os, "certificate y (normalized)", *doc.certificate_y_normalized);
  }

  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6e", doc.delta_r);
  os << "delta_r = " << buf << "\n";
  std::snprintf(buf, sizeof(buf), "%.6e", doc.residual_norm);
  os << "residual_norm = " << buf << "\n";
  if (doc.residual_sq) {
    std::snprintf(buf, sizeof(buf), "%.6e", *doc.residual_sq);
    os << "residual_sq = " << buf << "\n";
  }
  if (doc.x_gap) {
    std::snprintf(buf, sizeof(buf), "%.6e", *doc.x_gap);
    os << "x_gap = " << buf << "\n";
  }
}

void write_report(const ReportDocument& doc, const std::string& path,
                  ReportFormat format) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  write_report(doc, out, format);
  if (!out) throw IoError("write failed on '" + path + "'");
}

}  // namespace unkry::io

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "support.hpp"
#include "unkry/cli.hpp"
#include "unkry/io.hpp"

namespace fs = std::filesystem;

namespace {

struct RunResult {
  int code = -1;
  std::string out;
  std::string err;
};

RunResult run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  auto* old_out = std::cout.rdbuf(out.rdbuf());
  auto* old_err = std::cerr.rdbuf(err.rdbuf());
  RunResult r;
  r.code = unkry::cli::run_cli(args);
  std::cout.rdbuf(old_out);
  std::cerr.rdbuf(old_err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

fs::path scratch_dir() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() /
                 ("unkry_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string write_file(const std::string& name, const std::string& content) {
  const fs::path p = scratch_dir() / name;
  std::ofstream f(p);
  f << content;
  return p.string();
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

TEST_CASE("compatible demo exits 0 with a parsable json report") {
  const auto r = run({"--demo", "compatible"});
  CHECK(r.code == 0);
  const auto doc = unkry::io::parse_report(r.out);
  CHECK(doc.method == "krylov");
  REQUIRE(doc.verdict.has_value());
  CHECK(*doc.verdict == "compatible");
  CHECK(doc.n == 7);
  CHECK(doc.r == 6);
  REQUIRE(doc.x.has_value());
  CHECK((*doc.x)[0] == doctest::Approx(-1.0));
  CHECK_FALSE(doc.solve_seconds.has_value());
}

TEST_CASE("incompatible demo exits 1; minres adds the least-squares fields") {
  const auto plain = run({"--demo", "incompatible"});
  CHECK(plain.code == 1);
  const auto doc1 = unkry::io::parse_report(plain.out);
  CHECK(*doc1.verdict == "incompatible");
  REQUIRE(doc1.certificate_y.has_value());
  CHECK_FALSE(doc1.x.has_value());

  const auto mr = run({"--demo", "incompatible", "--method", "minres"});
  CHECK(mr.code == 1);
  const auto doc2 = unkry::io::parse_report(mr.out);
  CHECK(doc2.method == "minres");
  REQUIRE(doc2.x_mr.has_value());
  CHECK((*doc2.x_mr)[0] == doctest::Approx(-0.6).epsilon(1e-8));
  REQUIRE(doc2.residual_sq.has_value());
  CHECK(*doc2.residual_sq == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("cg on the indefinite demo reports a breakdown, exit 3") {
  const auto r = run({"--demo", "compatible", "--method", "cg"});
  CHECK(r.code == 3);
  CHECK(r.err.find("curvature") != std::string::npos);
}

TEST_CASE("cg on a definite file problem exits 0") {
  const std::string mtx = write_file("spd.mtx",
                                     "%%MatrixMarket matrix coordinate real symmetric\n"
                                     "2 2 3\n"
                                     "1 1 2\n"
                                     "2 1 1\n"
                                     "2 2 3\n");
  const std::string vec = write_file("spd_c.txt", "1\n1\n");
  const std::string out = (scratch_dir() / "cg.json").string();
  const auto r =
      run({"--matrix", mtx, "--c", vec, "--method", "cg", "--output", out});
  CHECK(r.code == 0);
  const auto doc = unkry::io::parse_report(slurp(out));
  CHECK(doc.method == "cg");
  // H x = -c for H = [[2,1],[1,3]], c = (1,1): x = (-2/5, -1/5).
  REQUIRE(doc.x.has_value());
  CHECK((*doc.x)[0] == doctest::Approx(-0.4));
  CHECK((*doc.x)[1] == doctest::Approx(-0.2));
}

TEST_CASE("rhs-is-b negates the vector: solving Hx = b") {
  const std::string mtx = write_file("neg.mtx",
                                     "%%MatrixMarket matrix coordinate real symmetric\n"
                                     "2 2 2\n"
                                     "1 1 2\n"
                                     "2 2 4\n");
  const std::string c_file = write_file("neg_c.txt", "-2\n-8\n");
  const std::string b_file = write_file("neg_b.txt", "2\n8\n");
  const std::string out1 = (scratch_dir() / "neg1.json").string();
  const std::string out2 = (scratch_dir() / "neg2.json").string();
  const auto r1 = run({"--matrix", mtx, "--c", c_file, "--output", out1});
  const auto r2 = run({"--matrix", mtx, "--c", b_file, "--rhs-is-b",
                       "--output", out2});
  CHECK(r1.code == 0);
  CHECK(r2.code == 0);
  // Identical inputs after negation: byte-identical reports.
  CHECK(slurp(out1) == slurp(out2));
  const auto doc = unkry::io::parse_report(slurp(out1));
  REQUIRE(doc.x.has_value());
  CHECK((*doc.x)[0] == doctest::Approx(1.0));
  CHECK((*doc.x)[1] == doctest::Approx(2.0));
}

TEST_CASE("usage errors exit 2") {
  // No inputs at all.
  CHECK(run({}).code == 2);
  // Demo mixed with explicit paths.
  CHECK(run({"--demo", "compatible", "--matrix", "x.mtx"}).code == 2);
  // Unknown method / format / scaling values.
  CHECK(run({"--demo", "compatible", "--method", "bogus"}).code == 2);
  CHECK(run({"--demo", "compatible", "--format", "xml"}).code == 2);
  CHECK(run({"--demo", "compatible", "--scaling", "weird"}).code == 2);
  // Unknown flag.
  CHECK(run({"--demo", "compatible", "--frobnicate"}).code == 2);
  // Matrix without vector.
  CHECK(run({"--matrix", "x.mtx"}).code == 2);
}

TEST_CASE("input errors exit 2") {
  const auto missing = run({"--matrix", (scratch_dir() / "nope.mtx").string(),
                            "--c", (scratch_dir() / "nope.txt").string()});
  CHECK(missing.code == 2);
  CHECK_FALSE(missing.err.empty());

  const std::string bad = write_file("bad.mtx", "not a matrix\n");
  const std::string vec = write_file("some_c.txt", "1\n");
  CHECK(run({"--matrix", bad, "--c", vec}).code == 2);

  // Dimension mismatch between files.
  const std::string mtx = write_file("dim.mtx",
                                     "%%MatrixMarket matrix coordinate real symmetric\n"
                                     "2 2 1\n"
                                     "1 1 1\n");
  const std::string vec3 = write_file("dim_c.txt", "1\n2\n3\n");
  CHECK(run({"--matrix", mtx, "--c", vec3}).code == 2);
}

TEST_CASE("iteration cap exits 3 and still writes the partial report") {
  const std::string out = (scratch_dir() / "cap.json").string();
  const auto r = run({"--demo", "compatible", "--max-iter", "2",
                      "--output", out});
  CHECK(r.code == 3);
  const auto doc = unkry::io::parse_report(slurp(out));
  CHECK(doc.status == "max_iter_reached");
  CHECK_FALSE(doc.verdict.has_value());
  CHECK(doc.r == 2);
  CHECK(doc.max_iter == 2);
}

TEST_CASE("text format renders the table layout") {
  const auto r = run({"--demo", "compatible", "--format", "text"});
  CHECK(r.code == 0);
  CHECK(r.out.find("q =\n") != std::string::npos);
  CHECK(r.out.find("delta =\n") != std::string::npos);
  CHECK(r.out.find("x =\n") != std::string::npos);
  CHECK(r.out.find("verdict: compatible") != std::string::npos);
}

TEST_CASE("timings are opt-in") {
  const auto without = run({"--demo", "compatible"});
  CHECK(without.out.find("\"solve_seconds\":null") != std::string::npos);
  const auto with = run({"--demo", "compatible", "--timings"});
  CHECK(with.out.find("\"solve_seconds\":null") == std::string::npos);
  const auto doc = unkry::io::parse_report(with.out);
  REQUIRE(doc.solve_seconds.has_value());
  CHECK(*doc.solve_seconds >= 0.0);
}

TEST_CASE("repeated runs of the same problem are byte-identical") {
  const auto a = run({"--demo", "incompatible", "--method", "minres"});
  const auto b = run({"--demo", "incompatible", "--method", "minres"});
  CHECK(a.out == b.out);
}

TEST_CASE("help exits 0") {
  const auto r = run({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("--matrix") != std::string::npos);
}

TEST_CASE("alternate scalings work end to end") {
  for (const char* s : {"qnorm", "unit"}) {
    const auto r = run({"--demo", "compatible", "--scaling", s});
    CAPTURE(s);
    CHECK(r.code == 0);
    const auto doc = unkry::io::parse_report(r.out);
    CHECK(*doc.verdict == "compatible");
    CHECK(doc.scaling == s);
    REQUIRE(doc.x.has_value());
    CHECK((*doc.x)[2] == doctest::Approx(-1.0).epsilon(1e-8));
  }
  // The normalized scaling breaks down on this instance (zero pivot): 3.
  const auto r = run({"--demo", "compatible", "--scaling", "normalized"});
  CHECK(r.code == 3);
}

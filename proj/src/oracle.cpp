#include "unkry/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "unkry/errors.hpp"

namespace unkry::oracle {

namespace {

// Minimal dense row-major matrix used only inside this translation unit.
struct Mat {
  std::size_t n = 0;
  Vector a;

  explicit Mat(std::size_t dim) : n(dim), a(dim * dim, 0.0) {}
  double& at(std::size_t i, std::size_t j) { return a[i * n + j]; }
  double at(std::size_t i, std::size_t j) const { return a[i * n + j]; }
};

double off_diagonal_norm(const Mat& m) {
  double s = 0.0;
  for (std::size_t i = 0; i < m.n; ++i) {
    for (std::size_t j = 0; j < m.n; ++j) {
      if (i != j) s += m.at(i, j) * m.at(i, j);
    }
  }
  return std::sqrt(s);
}

double frobenius(const Mat& m) {
  double s = 0.0;
  for (double e : m.a) s += e * e;
  return std::sqrt(s);
}

}  // namespace

double EigenDecomposition::max_abs_eigenvalue() const {
  double m = 0.0;
  for (double l : eigenvalues) m = std::max(m, std::abs(l));
  return m;
}

Vector dense_solve(const DenseSymmetric& H, const Vector& b) {
  const std::size_t n = H.dim();
  if (b.size() != n) {
    throw DimensionMismatch("dense_solve: rhs size " + std::to_string(b.size()) +
                            " vs dim " + std::to_string(n));
  }
  Mat a(n);
  a.a = H.data();
  Vector x = b;

  double amax = 0.0;
  for (double e : a.a) amax = std::max(amax, std::abs(e));
  const double pivot_tol =
      amax * static_cast<double>(n) * std::numeric_limits<double>::epsilon();

  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);

  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    double best = std::abs(a.at(perm[col], col));
    for (std::size_t i = col + 1; i < n; ++i) {
      const double v = std::abs(a.at(perm[i], col));
      if (v > best) {
        best = v;
        piv = i;
      }
    }
    if (best <= pivot_tol) {
      throw SingularMatrix("dense_solve: pivot " + std::to_string(best) +
                           " at column " + std::to_string(col));
    }
    std::swap(perm[col], perm[piv]);
    const std::size_t prow = perm[col];
    for (std::size_t i = col + 1; i < n; ++i) {
      const std::size_t row = perm[i];
      const double f = a.at(row, col) / a.at(prow, col);
      if (f == 0.0) continue;
      for (std::size_t j = col; j < n; ++j) a.at(row, j) -= f * a.at(prow, j);
      x[row] -= f * x[prow];
    }
  }

  Vector out(n, 0.0);
  for (std::size_t ii = n; ii-- > 0;) {
    const std::size_t row = perm[ii];
    double s = x[row];
    for (std::size_t j = ii + 1; j < n; ++j) s -= a.at(row, j) * out[j];
    out[ii] = s / a.at(row, ii);
  }
  return out;
}

EigenDecomposition eigendecompose(const DenseSymmetric& H) {
  const std::size_t n = H.dim();
  Mat a(n);
  a.a = H.data();
  Mat v(n);
  for (std::size_t i = 0; i < n; ++i) v.at(i, i) = 1.0;

  const double fro = frobenius(a);
  const double stop = 1e-12 * fro;
  const int max_sweeps = 100;

  int sweep = 0;
  while (off_diagonal_norm(a) > stop) {
    if (++sweep > max_sweeps) {
      throw JacobiNoConvergence("eigendecompose: off-diagonal mass " +
                                std::to_string(off_diagonal_norm(a)) +
                                " after " + std::to_string(max_sweeps) +
                                " sweeps");
    }
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a.at(p, q);
        if (apq == 0.0) continue;
        const double tau = (a.at(q, q) - a.at(p, p)) / (2.0 * apq);
        const double t = (tau >= 0.0)
                             ? 1.0 / (tau + std::sqrt(1.0 + tau * tau))
                             : -1.0 / (-tau + std::sqrt(1.0 + tau * tau));
        const double cs = 1.0 / std::sqrt(1.0 + t * t);
        const double sn = t * cs;

        for (std::size_t i = 0; i < n; ++i) {
          const double aip = a.at(i, p);
          const double aiq = a.at(i, q);
          a.at(i, p) = cs * aip - sn * aiq;
          a.at(i, q) = sn * aip + cs * aiq;
        }
        for (std::size_t j = 0; j < n; ++j) {
          const double apj = a.at(p, j);
          const double aqj = a.at(q, j);
          a.at(p, j) = cs * apj - sn * aqj;
          a.at(q, j) = sn * apj + cs * aqj;
        }
        for (std::size_t i = 0; i < n; ++i) {
          const double vip = v.at(i, p);
          const double viq = v.at(i, q);
          v.at(i, p) = cs * vip - sn * viq;
          v.at(i, q) = sn * vip + cs * viq;
        }
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return a.at(i, i) < a.at(j, j);
  });

  EigenDecomposition ed;
  ed.eigenvalues.resize(n);
  ed.eigenvectors.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    ed.eigenvalues[j] = a.at(order[j], order[j]);
    Vector col(n);
    for (std::size_t i = 0; i < n; ++i) col[i] = v.at(i, order[j]);
    ed.eigenvectors[j] = std::move(col);
  }
  return ed;
}

std::vector<Vector> nullspace_basis(const EigenDecomposition& ed, double tol) {
  const double cut = tol * ed.max_abs_eigenvalue();
  std::vector<Vector> z;
  for (std::size_t j = 0; j < ed.dim(); ++j) {
    if (std::abs(ed.eigenvalues[j]) <= cut) z.push_back(ed.eigenvectors[j]);
  }
  return z;
}

Vector pinv_solve(const EigenDecomposition& ed, const Vector& c, double tol) {
  const std::size_t n = ed.dim();
  if (c.size() != n) {
    throw DimensionMismatch("pinv_solve: vector size " + std::to_string(c.size()) +
                            " vs dim " + std::to_string(n));
  }
  const double cut = tol * ed.max_abs_eigenvalue();
  Vector x(n, 0.0);
  for (std::size_t j = 0; j < n; ++j) {
    const double lambda = ed.eigenvalues[j];
    if (std::abs(lambda) <= cut) continue;
    const double w = -dot(ed.eigenvectors[j], c) / lambda;
    for (std::size_t i = 0; i < n; ++i) x[i] += w * ed.eigenvectors[j][i];
  }
  return x;
}

std::pair<KrylovBasis, std::size_t> krylov_grade(const SymmetricOperator& H,
                                                 const Vector& c) {
  if (norm2(c) == 0.0) throw ZeroRightHandSide("krylov_grade: c = 0");
  const std::size_t n = H.dim();
  if (c.size() != n) {
    throw DimensionMismatch("krylov_grade: vector size " +
                            std::to_string(c.size()) + " vs dim " +
                            std::to_string(n));
  }
  const double rank_tol = 1e-10;

  KrylovBasis basis;
  std::vector<Vector> ortho;  // orthonormal basis of the span so far
  Vector col = c;
  for (std::size_t m = 0; m <= n; ++m) {
    basis.columns.push_back(col);
    Vector w = col;
    const double scale = norm2(w);
    // Two Gram-Schmidt passes keep the basis orthogonal enough for the
    // rank decision even when the raw Krylov columns are ill-conditioned.
    for (int pass = 0; pass < 2; ++pass) {
      for (const Vector& u : ortho) {
        const double mu = dot(u, w);
        for (std::size_t i = 0; i < n; ++i) w[i] -= mu * u[i];
      }
    }
    const double rem = norm2(w);
    if (rem <= rank_tol * scale) {
      basis.rank = m;
      return {basis, m};
    }
    ortho.push_back(scaled(1.0 / rem, w));
    col = H.apply(col);
  }
  // The n+1st column is always dependent; reaching here means the rank
  // tolerance never triggered, so the grade is n.
  basis.rank = n;
  return {basis, n};
}

std::pair<std::vector<double>, Vector> minres_qp(
    const SymmetricOperator& H, const Vector& c, std::size_t k,
    const std::vector<LanczosTriple>& triples) {
  const std::size_t n = H.dim();
  if (c.size() != n) {
    throw DimensionMismatch("minres_qp: vector size " + std::to_string(c.size()) +
                            " vs dim " + std::to_string(n));
  }
  if (triples.size() < k + 1) {
    throw DimensionMismatch("minres_qp: need " + std::to_string(k + 1) +
                            " triples, got " + std::to_string(triples.size()));
  }
  double denom = 0.0;
  std::vector<double> qq(k + 1, 0.0);
  for (std::size_t i = 0; i <= k; ++i) {
    qq[i] = dot(triples[i].q, triples[i].q);
    if (qq[i] <= 0.0) {
      throw ZeroQInBasis("minres_qp: q_" + std::to_string(i) + " is zero");
    }
    denom += triples[i].delta * triples[i].delta / qq[i];
  }
  std::vector<double> gammas(k + 1, 0.0);
  Vector x(n, 0.0);
  for (std::size_t i = 0; i <= k; ++i) {
    gammas[i] = (1.0 / denom) * triples[i].delta / qq[i];
    for (std::size_t j = 0; j < n; ++j) x[j] += gammas[i] * triples[i].y[j];
  }
  return {gammas, x};
}

}  // namespace unkry::oracle

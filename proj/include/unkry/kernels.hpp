#pragma once

#include <cstddef>

namespace unkry::kernels {

// Problem sizes below this run the serial path even when OpenMP is enabled.
inline constexpr std::size_t parallel_threshold = 256;

// Reference implementations. Plain loops, always available, used by the
// tests as the ground truth for the dispatching versions below.
namespace serial {

// y = A x for a dense row-major n x n matrix.
void matvec(std::size_t n, const double* a, const double* x, double* y);

// y += alpha * x.
void axpy(std::size_t n, double alpha, const double* x, double* y);

// x *= alpha.
void scal(std::size_t n, double alpha, double* x);

double dot(std::size_t n, const double* x, const double* y);

}  // namespace serial

// Dispatching versions. matvec parallelizes over rows and axpy/scal over
// elements, so their results are bitwise identical to the serial reference
// for every thread count. Reductions (dot) stay serial to keep results
// deterministic; at the supported sizes they are not worth parallelizing.
void matvec(std::size_t n, const double* a, const double* x, double* y);
void axpy(std::size_t n, double alpha, const double* x, double* y);
void scal(std::size_t n, double alpha, double* x);
double dot(std::size_t n, const double* x, const double* y);

}  // namespace unkry::kernels

#pragma once

#include <vector>

#include "numrad/complex_matrix.hpp"

namespace numrad {

/// Eigendecomposition H = Q diag(eigenvalues) Q* of a Hermitian matrix.
/// Eigenvalues are sorted descending; eigenvector columns are unit vectors.
struct HermitianEigen {
    std::vector<double> eigenvalues;
    ComplexMatrix eigenvectors;
};

/// Full eigendecomposition via cyclic complex Jacobi rotations.
///
/// The input must be Hermitian within 1e-12 * max(1, ||H||_F); it is
/// symmetrized exactly before factorization. Sweeps stop once the
/// off-diagonal Frobenius mass drops below 1e-14 * ||H||_F (at most 30
/// sweeps; exceeding that throws std::runtime_error).
HermitianEigen hermitian_eigen(const ComplexMatrix& h);

/// Eigenvalues only (descending), skipping eigenvector accumulation.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& h);

namespace detail {

/// In-place Jacobi kernel on a row-major n x n Hermitian buffer.
/// `v` (optional) accumulates rotations and must hold the identity on entry.
/// Returns false if the off-diagonal target was not reached in max_sweeps.
bool jacobi_hermitian(cplx* a, cplx* v, std::size_t n, double off_target, int max_sweeps);

/// Largest eigenvalue of the Hermitian buffer `a` (destroyed in place).
/// Hot path for support-function evaluation; no symmetry pre-check.
double top_eigenvalue_inplace(cplx* a, std::size_t n, double fro);

}  // namespace detail

}  // namespace numrad

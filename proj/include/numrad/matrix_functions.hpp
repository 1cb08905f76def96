#pragma once

#include "numrad/complex_matrix.hpp"
#include "numrad/hermitian_eigen.hpp"
#include "numrad/interval.hpp"

namespace numrad {

/// Certification padding for eigenvalue-derived scalars:
/// 100 * n * eps * max(1, ||A||_F), with n the larger dimension.
double pad_for(const ComplexMatrix& a);

/// PSD square root of a Hermitian matrix. Negative eigenvalues (roundoff
/// on nominally PSD input) are clamped to zero before square-rooting.
ComplexMatrix psd_sqrt(const ComplexMatrix& h);

/// Operator absolute value |A| = (A*A)^{1/2}.
ComplexMatrix abs_value(const ComplexMatrix& a);

/// Operator norm ||A|| = sigma_max(A) as a certified interval of width
/// at most pad_for(A). Rectangular input is allowed.
Interval op_norm(const ComplexMatrix& a);

}  // namespace numrad

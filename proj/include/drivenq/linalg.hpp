// linalg.hpp — dense complex linear algebra used by every other module:
// general (non-Hermitian) eigendecomposition, linear solves, matrix exponential.
#pragma once

#include <Eigen/Dense>

#include <complex>
#include <stdexcept>
#include <string>

namespace drivenq {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

// ---------------------------------------------------------------- errors ---

struct NumericError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NonSquare : NumericError {
    using NumericError::NumericError;
};
struct NonFinite : NumericError {
    using NumericError::NumericError;
};
struct NonConvergence : NumericError {
    using NumericError::NumericError;
};
struct Singular : NumericError {
    using NumericError::NumericError;
};
struct DimensionMismatch : NumericError {
    using NumericError::NumericError;
};

bool all_finite(const ComplexMatrix& A);
void require_finite(const ComplexMatrix& A, const std::string& where);
void require_square(const ComplexMatrix& A, const std::string& where);

// ------------------------------------------------------ eigendecomposition ---

struct EigenDecomposition {
    ComplexVector values;
    // Columns are unit 2-norm right eigenvectors, values[i] <-> right_vectors.col(i).
    ComplexMatrix right_vectors;
    // Columns y_i satisfy y_i^H A = values[i] y_i^H; empty unless requested.
    ComplexMatrix left_vectors;
    // max_i ||A v_i - lambda_i v_i||_2 / ||A||_F
    double residual = 0.0;
};

EigenDecomposition eig_general(const ComplexMatrix& A, bool want_left = false,
                               double tol = 1e-9);

// 2-norm condition number of the eigenvector matrix (Gram conditioning of the
// basis); diverges at an exceptional point where eigenvectors coalesce.
double eigenvector_condition(const ComplexMatrix& right_vectors);

// ------------------------------------------------------------------ solves ---

// Solves A x = b; throws Singular on rank deficiency, verifies
// ||A x - b|| <= tol * ||A||_F * max(||x||, ||b||/||A||_F).
ComplexVector solve_linear(const ComplexMatrix& A, const ComplexVector& b,
                           double tol = 1e-10);

// ------------------------------------------------------------- exponential ---

// exp(A) by scaling-and-squaring with a Pade core.
ComplexMatrix matrix_exp(const ComplexMatrix& A);

}  // namespace drivenq

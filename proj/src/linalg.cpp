#include "drivenq/linalg.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace drivenq {

bool all_finite(const ComplexMatrix& A) {
    for (Eigen::Index j = 0; j < A.cols(); ++j)
        for (Eigen::Index i = 0; i < A.rows(); ++i) {
            const Complex& z = A(i, j);
            if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
        }
    return true;
}

void require_finite(const ComplexMatrix& A, const std::string& where) {
    if (!all_finite(A)) throw NonFinite(where + ": non-finite entry");
}

void require_square(const ComplexMatrix& A, const std::string& where) {
    if (A.rows() != A.cols() || A.rows() < 1)
        throw NonSquare(where + ": matrix is " + std::to_string(A.rows()) + "x" +
                        std::to_string(A.cols()));
}

namespace {

// Match each right eigenvalue with the conjugate of an eigenvalue of A^H,
// greedily by distance; returns the permutation applied to the A^H columns.
std::vector<Eigen::Index> match_conjugate(const ComplexVector& right,
                                          const ComplexVector& adjoint) {
    const Eigen::Index n = right.size();
    std::vector<Eigen::Index> perm(n, -1);
    std::vector<bool> used(n, false);
    for (Eigen::Index i = 0; i < n; ++i) {
        double best = std::numeric_limits<double>::infinity();
        Eigen::Index pick = -1;
        for (Eigen::Index k = 0; k < n; ++k) {
            if (used[k]) continue;
            const double d = std::abs(std::conj(adjoint[k]) - right[i]);
            if (d < best) {
                best = d;
                pick = k;
            }
        }
        perm[i] = pick;
        used[pick] = true;
    }
    return perm;
}

}  // namespace

EigenDecomposition eig_general(const ComplexMatrix& A, bool want_left, double tol) {
    require_square(A, "eig_general");
    require_finite(A, "eig_general");
    if (tol <= 0) throw NumericError("eig_general: tol must be positive");

    const Eigen::Index n = A.rows();
    EigenDecomposition out;

    Eigen::ComplexEigenSolver<ComplexMatrix> solver(A, /*computeEigenvectors=*/true);
    if (solver.info() != Eigen::Success)
        throw NonConvergence("eig_general: QR iteration did not converge");

    out.values = solver.eigenvalues();
    out.right_vectors = solver.eigenvectors();
    for (Eigen::Index i = 0; i < n; ++i) {
        const double nrm = out.right_vectors.col(i).norm();
        if (nrm > 0) out.right_vectors.col(i) /= nrm;
    }

    const double scale = std::max(A.norm(), std::numeric_limits<double>::min());
    double residual = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) {
        const double r =
            (A * out.right_vectors.col(i) - out.values[i] * out.right_vectors.col(i))
                .norm();
        residual = std::max(residual, r / scale);
    }
    out.residual = residual;
    if (residual > tol)
        throw NonConvergence("eig_general: residual " + std::to_string(residual) +
                             " above tol");

    if (want_left) {
        Eigen::ComplexEigenSolver<ComplexMatrix> adj(A.adjoint(), true);
        if (adj.info() != Eigen::Success)
            throw NonConvergence("eig_general: left-eigenvector QR did not converge");
        const auto perm = match_conjugate(out.values, adj.eigenvalues());
        out.left_vectors.resize(n, n);
        for (Eigen::Index i = 0; i < n; ++i)
            out.left_vectors.col(i) = adj.eigenvectors().col(perm[i]);
    }
    return out;
}

double eigenvector_condition(const ComplexMatrix& right_vectors) {
    Eigen::JacobiSVD<ComplexMatrix> svd(right_vectors);
    const auto& s = svd.singularValues();
    const double smin = s(s.size() - 1);
    if (smin <= 0) return std::numeric_limits<double>::infinity();
    return s(0) / smin;
}

ComplexVector solve_linear(const ComplexMatrix& A, const ComplexVector& b, double tol) {
    require_square(A, "solve_linear");
    require_finite(A, "solve_linear");
    if (b.size() != A.rows()) throw DimensionMismatch("solve_linear: size of b");
    if (!b.allFinite()) throw NonFinite("solve_linear: non-finite entry in b");

    Eigen::FullPivLU<ComplexMatrix> lu(A);
    if (!lu.isInvertible())
        throw Singular("solve_linear: matrix is rank deficient (rank " +
                       std::to_string(lu.rank()) + " of " + std::to_string(A.rows()) +
                       ")");
    ComplexVector x = lu.solve(b);
    // One step of iterative refinement keeps the residual contract at mild
    // conditioning.
    x += lu.solve(b - A * x);

    const double normA = std::max(A.norm(), std::numeric_limits<double>::min());
    const double bound = tol * normA * std::max(x.norm(), b.norm() / normA);
    if ((A * x - b).norm() > std::max(bound, 1e-300))
        throw NonConvergence("solve_linear: residual above contract");
    return x;
}

ComplexMatrix matrix_exp(const ComplexMatrix& A) {
    require_square(A, "matrix_exp");
    require_finite(A, "matrix_exp");
    return A.exp();
}

}  // namespace drivenq

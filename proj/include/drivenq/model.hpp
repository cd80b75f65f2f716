// model.hpp — Hamiltonian + jump channels with time-dependent rates; the single
// source of truth every representation (superoperator, Bloch) is derived from.
#pragma once

#include "drivenq/linalg.hpp"

#include <vector>

namespace drivenq {

struct RateLaw {
    enum class Kind { constant, cosine };
    Kind kind = Kind::constant;
    double gamma0 = 0.0;  // rate amplitude, inverse time
    double omega = 0.0;   // drive angular frequency (cosine only)

    double operator()(double t) const {
        return kind == Kind::constant ? gamma0 : gamma0 * (1.0 + std::cos(omega * t));
    }
    static RateLaw constant(double g0);
    static RateLaw cosine(double g0, double om);
};

struct JumpChannel {
    ComplexMatrix L;
    RateLaw rate;
};

struct ModelSpec {
    int dim = 0;
    ComplexMatrix H;  // Hermitian, dim x dim
    std::vector<JumpChannel> channels;

    static ModelSpec make(const ComplexMatrix& H, std::vector<JumpChannel> channels);
    void validate() const;
};

struct DensityMatrix {
    ComplexMatrix rho;

    // Largest violation of Hermiticity / unit trace / positivity, for checks.
    double hermiticity_defect() const;
    double trace_defect() const;
    double min_eigenvalue() const;
    bool is_physical(double tol = 1e-10) const;
};

DensityMatrix pure_state(const ComplexVector& psi);
DensityMatrix maximally_mixed(int dim);

// Pauli matrices and common jump operators.
ComplexMatrix pauli(int a);  // 0 = I, 1 = x, 2 = y, 3 = z
ComplexMatrix sigma_plus();
ComplexMatrix sigma_minus();  // sigma_minus |1> = |0>

}  // namespace drivenq

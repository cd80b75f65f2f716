#include "drivenq/model.hpp"

namespace drivenq {

RateLaw RateLaw::constant(double g0) {
    if (g0 < 0) throw NumericError("RateLaw: gamma0 must be >= 0");
    return RateLaw{Kind::constant, g0, 0.0};
}

RateLaw RateLaw::cosine(double g0, double om) {
    if (g0 < 0) throw NumericError("RateLaw: gamma0 must be >= 0");
    if (om < 0) throw NumericError("RateLaw: omega must be >= 0");
    return RateLaw{Kind::cosine, g0, om};
}

ModelSpec ModelSpec::make(const ComplexMatrix& H, std::vector<JumpChannel> channels) {
    ModelSpec m;
    m.dim = static_cast<int>(H.rows());
    m.H = H;
    m.channels = std::move(channels);
    m.validate();
    return m;
}

void ModelSpec::validate() const {
    require_square(H, "ModelSpec.H");
    require_finite(H, "ModelSpec.H");
    const double hnorm = std::max(H.norm(), 1.0);
    if ((H - ComplexMatrix(H.adjoint())).norm() > 1e-12 * hnorm)
        throw NumericError("ModelSpec: H is not Hermitian");
    for (const auto& ch : channels) {
        require_finite(ch.L, "ModelSpec.channel.L");
        if (ch.L.rows() != dim || ch.L.cols() != dim)
            throw DimensionMismatch("ModelSpec: channel operator is not dim x dim");
        if (ch.rate.gamma0 < 0) throw NumericError("ModelSpec: negative rate");
    }
}

double DensityMatrix::hermiticity_defect() const {
    return (rho - ComplexMatrix(rho.adjoint())).norm();
}

double DensityMatrix::trace_defect() const { return std::abs(rho.trace() - Complex(1.0)); }

double DensityMatrix::min_eigenvalue() const {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(
        ComplexMatrix(0.5 * (rho + rho.adjoint())));
    return es.eigenvalues().minCoeff();
}

bool DensityMatrix::is_physical(double tol) const {
    return hermiticity_defect() <= tol && trace_defect() <= tol &&
           min_eigenvalue() >= -tol;
}

DensityMatrix pure_state(const ComplexVector& psi) {
    ComplexVector v = psi / psi.norm();
    return DensityMatrix{v * v.adjoint()};
}

DensityMatrix maximally_mixed(int dim) {
    return DensityMatrix{ComplexMatrix::Identity(dim, dim) / double(dim)};
}

ComplexMatrix pauli(int a) {
    ComplexMatrix s(2, 2);
    const Complex i(0, 1);
    switch (a) {
        case 0: s << 1, 0, 0, 1; break;
        case 1: s << 0, 1, 1, 0; break;
        case 2: s << 0, -i, i, 0; break;
        case 3: s << 1, 0, 0, -1; break;
        default: throw NumericError("pauli: index out of range");
    }
    return s;
}

ComplexMatrix sigma_plus() {
    ComplexMatrix s(2, 2);
    s << 0, 0, 1, 0;  // |1><0|
    return s;
}

ComplexMatrix sigma_minus() {
    ComplexMatrix s(2, 2);
    s << 0, 1, 0, 0;  // |0><1|
    return s;
}

}  // namespace drivenq

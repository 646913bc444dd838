#include "qthermo/state.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "qthermo/ops.hpp"

namespace qthermo {

DensityMatrix2::DensityMatrix2(const Eigen::Matrix2cd& m, Frame frame, StateTolerances tol)
    : m_(m), frame_(frame) {
    const double herm = (m - m.adjoint()).cwiseAbs().maxCoeff();
    if (herm > tol.hermiticity)
        throw std::domain_error("DensityMatrix2: hermiticity violation " + std::to_string(herm));
    const double tr_err = std::abs(m.trace() - complexd(1.0, 0.0));
    if (tr_err > tol.trace)
        throw std::domain_error("DensityMatrix2: trace deviates from 1 by " + std::to_string(tr_err));
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> es(0.5 * (m + m.adjoint()));
    const double min_eig = es.eigenvalues().minCoeff();
    if (min_eig < -tol.positivity)
        throw std::domain_error("DensityMatrix2: negative eigenvalue " + std::to_string(min_eig));
}

DensityMatrix2 DensityMatrix2::from_bloch(double p1, complexd s, Frame frame) {
    if (!(p1 >= 0.0 && p1 <= 1.0))
        throw std::domain_error("from_bloch: p1 must lie in [0, 1]");
    if (std::norm(s) > p1 * (1.0 - p1) + 1e-12)
        throw std::domain_error("from_bloch: |s|^2 exceeds p1(1-p1), state not positive");
    Eigen::Matrix2cd m;
    m(0, 0) = 1.0 - p1;
    m(1, 1) = p1;
    m(1, 0) = s;
    m(0, 1) = std::conj(s);
    return DensityMatrix2(m, frame);
}

DensityMatrix2 DensityMatrix2::to_lab(double t, double omega_L) const {
    if (frame_ == Frame::Lab) throw std::domain_error("to_lab: state is already lab-frame");
    return from_bloch(p1(), s() * std::exp(complexd(0, -omega_L * t)), Frame::Lab);
}

DensityMatrix2 DensityMatrix2::to_rotating(double t, double omega_L) const {
    if (frame_ == Frame::Rotating) throw std::domain_error("to_rotating: state is already rotating-frame");
    return from_bloch(p1(), s() * std::exp(complexd(0, omega_L * t)), Frame::Rotating);
}

DensityMatrix2 thermal_state(const SystemParams& params) {
    const double nbar = params.nbar();
    return DensityMatrix2::from_bloch(nbar / (2.0 * nbar + 1.0), 0.0, Frame::Rotating);
}

DensityMatrix2 ground_state(Frame frame) { return DensityMatrix2::from_bloch(0.0, 0.0, frame); }

DensityMatrix2 excited_state(Frame frame) { return DensityMatrix2::from_bloch(1.0, 0.0, frame); }

}  // namespace qthermo

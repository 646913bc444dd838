// ops.hpp — Pauli matrices, vectorization and superoperator helpers for 2x2 systems

#pragma once

#include <complex>

#include <Eigen/Dense>

namespace qthermo::ops {

using complexd = std::complex<double>;

// Bare basis ordering is fixed throughout: index 0 = |0> (ground), index 1 = |1>.
inline Eigen::Matrix2cd identity() { return Eigen::Matrix2cd::Identity(); }

inline Eigen::Matrix2cd sigma_x() {
    Eigen::Matrix2cd m;
    m << 0, 1, 1, 0;
    return m;
}

inline Eigen::Matrix2cd sigma_y() {
    Eigen::Matrix2cd m;
    m << 0, complexd(0, 1), complexd(0, -1), 0;
    return m;
}

// sigma_z = |1><1| - |0><0|
inline Eigen::Matrix2cd sigma_z() {
    Eigen::Matrix2cd m;
    m << -1, 0, 0, 1;
    return m;
}

// raising operator |1><0|
inline Eigen::Matrix2cd sigma_plus() {
    Eigen::Matrix2cd m;
    m << 0, 0, 1, 0;
    return m;
}

// lowering operator |0><1|
inline Eigen::Matrix2cd sigma_minus() {
    Eigen::Matrix2cd m;
    m << 0, 1, 0, 0;
    return m;
}

// Column-stacking vectorization: vec(rho) = (rho00, rho10, rho01, rho11).
inline Eigen::Vector4cd vec(const Eigen::Matrix2cd& m) {
    return Eigen::Map<const Eigen::Vector4cd>(m.data());
}

inline Eigen::Matrix2cd unvec(const Eigen::Vector4cd& v) {
    return Eigen::Map<const Eigen::Matrix2cd>(v.data());
}

inline Eigen::Matrix4cd kron(const Eigen::Matrix2cd& a, const Eigen::Matrix2cd& b) {
    Eigen::Matrix4cd out;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            out.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
    return out;
}

// vec(A rho B) = (B^T kron A) vec(rho)
inline Eigen::Matrix4cd sandwich(const Eigen::Matrix2cd& a, const Eigen::Matrix2cd& b) {
    return kron(b.transpose(), a);
}

inline Eigen::Matrix4cd left_mult(const Eigen::Matrix2cd& a) {
    return kron(Eigen::Matrix2cd::Identity(), a);
}

inline Eigen::Matrix4cd right_mult(const Eigen::Matrix2cd& b) {
    return kron(b.transpose(), Eigen::Matrix2cd::Identity());
}

// D_X[rho] = X rho X† - (1/2){X†X, rho} as a superoperator
inline Eigen::Matrix4cd dissipator(const Eigen::Matrix2cd& x) {
    const Eigen::Matrix2cd xdx = x.adjoint() * x;
    return sandwich(x, x.adjoint()) - 0.5 * left_mult(xdx) - 0.5 * right_mult(xdx);
}

// vec(-i [H, rho]) = -i (I kron H - H^T kron I) vec(rho)
inline Eigen::Matrix4cd hamiltonian_superop(const Eigen::Matrix2cd& h) {
    return complexd(0, -1) * (left_mult(h) - right_mult(h));
}

inline double fro_norm(const Eigen::MatrixXcd& m) { return m.norm(); }

inline double max_abs(const Eigen::MatrixXcd& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace qthermo::ops

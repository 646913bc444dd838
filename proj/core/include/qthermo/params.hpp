// params.hpp — Driven-qubit and bath scalar parameters. Units: hbar = k_B = 1,
// so every energy is an angular frequency and temperatures enter as the
// dimensionless ratio x = omega / T.

#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>

namespace qthermo {

// Thermal occupation N(nu) = 1 / (exp(nu/T) - 1) of a bath mode at frequency nu.
// Strict domain: nu > 0 and T > 0.
inline double thermal_occupation(double nu, double temperature) {
    if (!(nu > 0.0)) throw std::domain_error("thermal_occupation: nu must be > 0");
    if (!(temperature > 0.0)) throw std::domain_error("thermal_occupation: temperature must be > 0");
    return 1.0 / std::expm1(nu / temperature);
}

inline double rabi_frequency(double g, double delta) { return std::hypot(g, delta); }

// Scalar parameters of the driven qubit in a thermal bath.
//
// Stored fields are the drive frequency omega_L, the detuning delta, the Rabi
// coupling g, the bare decay rate gamma = Gamma(omega_qb), and the temperature
// ratio x_L = omega_L / T. Everything else (omega_qb, T, Omega, nbar) is
// derived on demand so it can never drift out of sync.
struct SystemParams {
    double omega_L = 1.0;  // drive angular frequency
    double delta = 0.0;    // omega_qb - omega_L
    double g = 0.0;        // Rabi coupling
    double gamma = 0.0;    // spontaneous emission rate at omega_qb
    double x_L = 1.0;      // omega_L / T  (dimensionless)

    double omega_qb() const { return omega_L + delta; }
    double temperature() const { return omega_L / x_L; }
    double rabi() const { return rabi_frequency(g, delta); }
    double nbar() const { return thermal_occupation(omega_qb(), temperature()); }
};

inline SystemParams make_params(double omega_L, double delta, double g, double gamma, double x_L) {
    if (!(omega_L > 0.0)) throw std::domain_error("make_params: omega_L must be > 0");
    if (!(g >= 0.0)) throw std::domain_error("make_params: g must be >= 0");
    if (!(gamma >= 0.0)) throw std::domain_error("make_params: gamma must be >= 0");
    if (!(x_L > 0.0)) throw std::domain_error("make_params: x_L must be > 0");
    if (!(omega_L + delta > 0.0)) throw std::domain_error("make_params: omega_qb must be > 0");
    return SystemParams{omega_L, delta, g, gamma, x_L};
}

inline double thermal_occupation(double nu, const SystemParams& params) {
    return thermal_occupation(nu, params.temperature());
}

}  // namespace qthermo

// state.hpp — 2x2 density matrix with frame tagging and Bloch-vector views

#pragma once

#include <complex>

#include <Eigen/Dense>

#include "qthermo/params.hpp"

namespace qthermo {

using complexd = std::complex<double>;

// Frame tag: lab-frame rho(t) and rotating-frame rho~ differ only by the
// phase of the coherence, but the thermodynamic formulas are frame specific,
// so mixing frames is a contract error rather than a silent conversion.
enum class Frame { Lab, Rotating };

struct StateTolerances {
    double hermiticity = 1e-12;
    double trace = 1e-12;
    double positivity = 1e-10;  // smallest admissible eigenvalue is -positivity
};

// Hermitian, unit-trace, positive 2x2 density matrix in the bare basis
// {|0>, |1>}, index 0 = |0>. Immutable value type; the constructor validates
// and never renormalizes silently.
class DensityMatrix2 {
  public:
    DensityMatrix2(const Eigen::Matrix2cd& m, Frame frame, StateTolerances tol = {});

    // Bloch views: p1 = <1|rho|1>, s = <1|rho|0>.
    static DensityMatrix2 from_bloch(double p1, complexd s, Frame frame);

    double p1() const { return m_(1, 1).real(); }
    complexd s() const { return m_(1, 0); }
    const Eigen::Matrix2cd& matrix() const { return m_; }
    Frame frame() const { return frame_; }

    // Phase transform between frames at time t (drive frequency omega_L).
    DensityMatrix2 to_lab(double t, double omega_L) const;
    DensityMatrix2 to_rotating(double t, double omega_L) const;

  private:
    Eigen::Matrix2cd m_;
    Frame frame_;
};

// Gibbs state of the bare qubit, diagonal with p1 = nbar/(2 nbar + 1).
DensityMatrix2 thermal_state(const SystemParams& params);

// Ground and excited states (rotating frame unless specified).
DensityMatrix2 ground_state(Frame frame = Frame::Rotating);
DensityMatrix2 excited_state(Frame frame = Frame::Rotating);

}  // namespace qthermo

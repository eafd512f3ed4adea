#ifndef BLOCHGATE_DECOUPLING_HPP
#define BLOCHGATE_DECOUPLING_HPP

#include <string>
#include <vector>

#include "blochgate/gates.hpp"
#include "blochgate/linalg.hpp"
#include "blochgate/spinors.hpp"

namespace blochgate {

/// A fixed classical bath vector B in the same coordinates as the gate
/// angles: the coupling Hamiltonian is sigma . B.
struct BathSpec {
  double magnitude = 0.0;  // |B| >= 0
  BlochAngles angles{0.0, 0.0};
};

/// Pulse realization: Ideal applies the gate matrix instantaneously; Finite
/// evolves under pulse-plus-bath for the given duration, normalized so the
/// bare pulse reproduces the gate exactly.
struct PulseModel {
  enum class Kind { Ideal, Finite };

  Kind kind = Kind::Ideal;
  double duration = 0.0;  // > 0 when kind is Finite

  static PulseModel ideal() { return {Kind::Ideal, 0.0}; }
  static PulseModel finite(double duration);
};

/// One decoupling experiment: free evolution for tau, the inverse pulse,
/// free evolution for tau, the pulse, repeated for the cycle count.
struct CycleSpec {
  GateFamily family = GateFamily::P1;  // rotation families only
  BlochAngles gate_angles{0.0, 0.0};
  BathSpec bath;
  double tau = 0.0;   // >= 0
  int cycles = 1;     // >= 1
  PulseModel pulse;
};

/// Outcome of a simulated cycle sequence. fidelity = |trace| / 2 measures
/// phase-invariant overlap with the identity; residual is the distance to
/// the nearest phase multiple of the identity,
/// min over alpha of || U - e^{i alpha} I ||.
struct SimResult {
  Mat2C total_unitary;
  double fidelity = 0.0;  // in [0, 1]
  double residual = 0.0;
};

/// H = sigma . B for B = magnitude * momentum_unit(angles). Hermitian and
/// traceless. Throws std::invalid_argument for negative magnitude.
Mat2C bath_hamiltonian(const BathSpec& b);

/// U(t) = exp(-i H t) through the closed Pauli form
/// cos(|B| t) I - i sin(|B| t) (B_hat . sigma) for H = sigma . B. Throws
/// std::invalid_argument unless H is Hermitian and traceless within tol.
Mat2C free_evolution(const Mat2C& h, double t, Tolerance tol = {});

/// || G H + H G ||. Vanishes exactly when the pulse decouples the bath.
double anticommutator_norm(const Mat2C& g, const Mat2C& h);

/// Evolution under pulse-plus-bath for the pulse duration, with
/// H_pulse = -(pi / (2 * duration)) (axis . sigma) so that a zero-magnitude
/// bath gives exp(i (pi/2) axis . sigma) exactly. The inverse pulse is the
/// same construction with the negated axis. Throws std::invalid_argument
/// for non-positive duration or a non-unit axis.
Mat2C finite_pulse_unitary(Vec3R axis, double duration, const BathSpec& bath,
                           Tolerance tol = {});

/// Simulates the full sequence and reports the total unitary, fidelity, and
/// identity residual. With the bath direction equal to the gate angles the
/// gate anticommutes with H, every cycle collapses to the identity, and the
/// fidelity is 1 for any tau, magnitude, and cycle count. Throws
/// std::invalid_argument on invalid cycle parameters (non-rotation family,
/// negative tau, cycles < 1, bad pulse duration).
SimResult dd_cycle(const CycleSpec& c);

struct SweepRow {
  double value = 0.0;
  double fidelity = 0.0;
  double residual = 0.0;
};

/// Evaluates dd_cycle on a uniform grid of one parameter, rows in ascending
/// parameter order, value_i = from + (to - from) * i / (steps - 1).
/// parameter is one of tau, bath_theta, bath_phi, bath_mag, pulse_duration;
/// sweeping pulse_duration switches the pulse model to Finite at each grid
/// value. Throws std::invalid_argument for an unknown parameter name,
/// steps < 2, from >= to, or a grid value outside the parameter's domain.
std::vector<SweepRow> sweep(const CycleSpec& c, const std::string& parameter,
                            double from, double to, int steps);

}  // namespace blochgate

#endif

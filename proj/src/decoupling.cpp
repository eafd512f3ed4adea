#include "blochgate/decoupling.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace blochgate {

PulseModel PulseModel::finite(double duration) {
  if (duration <= 0.0) {
    throw std::invalid_argument("PulseModel: finite duration must be > 0");
  }
  return {Kind::Finite, duration};
}

Mat2C bath_hamiltonian(const BathSpec& b) {
  if (b.magnitude < 0.0) {
    throw std::invalid_argument("bath_hamiltonian: magnitude must be >= 0");
  }
  return pauli_dot(b.magnitude * momentum_unit(b.angles));
}

Mat2C free_evolution(const Mat2C& h, double t, Tolerance tol) {
  if (!is_hermitian(h, tol) || std::abs(trace(h)) > tol.eps) {
    throw std::invalid_argument(
        "free_evolution: Hamiltonian must be Hermitian and traceless");
  }
  const Vec3R b = pauli_vector(h);
  const double mag = norm(b);
  if (mag == 0.0) return Mat2C::identity();
  // exp(-i (sigma . B) t) = cos(|B| t) I - i sin(|B| t) (B_hat . sigma).
  return exp_pauli(-mag * t, normalized(b), tol);
}

double anticommutator_norm(const Mat2C& g, const Mat2C& h) {
  return frobenius(g * h + h * g);
}

Mat2C finite_pulse_unitary(Vec3R axis, double duration, const BathSpec& bath,
                           Tolerance tol) {
  if (duration <= 0.0) {
    throw std::invalid_argument("finite_pulse_unitary: duration must be > 0");
  }
  if (std::abs(norm(axis) - 1.0) > tol.eps) {
    throw std::invalid_argument("finite_pulse_unitary: axis must be unit");
  }
  const Vec3R pulse_field = (-kPi / (2.0 * duration)) * axis;
  const Vec3R total = pulse_field + bath.magnitude * momentum_unit(bath.angles);
  return free_evolution(pauli_dot(total), duration, tol);
}

SimResult dd_cycle(const CycleSpec& c) {
  if (!is_rotation_family(c.family)) {
    throw std::invalid_argument("dd_cycle: rotation families only");
  }
  if (c.tau < 0.0) throw std::invalid_argument("dd_cycle: tau must be >= 0");
  if (c.cycles < 1) throw std::invalid_argument("dd_cycle: cycles must be >= 1");

  const Mat2C h = bath_hamiltonian(c.bath);
  const Mat2C u_tau = free_evolution(h, c.tau);
  Mat2C pulse;
  Mat2C pulse_inv;
  if (c.pulse.kind == PulseModel::Kind::Ideal) {
    pulse = gate(c.family, c.gate_angles);
    pulse_inv = adjoint(pulse);
  } else {
    const Vec3R axis = rotation_axis(c.family, c.gate_angles);
    pulse = finite_pulse_unitary(axis, c.pulse.duration, c.bath);
    pulse_inv = finite_pulse_unitary(-axis, c.pulse.duration, c.bath);
  }
  const Mat2C cycle = pulse * u_tau * pulse_inv * u_tau;
  Mat2C total = Mat2C::identity();
  for (int i = 0; i < c.cycles; ++i) total = cycle * total;

  const double overlap = std::abs(trace(total));
  const double fro = frobenius(total);
  SimResult r;
  r.total_unitary = total;
  r.fidelity = std::clamp(0.5 * overlap, 0.0, 1.0);
  r.residual = std::sqrt(std::max(0.0, fro * fro + 2.0 - 2.0 * overlap));
  return r;
}

std::vector<SweepRow> sweep(const CycleSpec& c, const std::string& parameter,
                            double from, double to, int steps) {
  if (steps < 2) throw std::invalid_argument("sweep: steps must be >= 2");
  if (!(from < to)) throw std::invalid_argument("sweep: need from < to");
  const bool known = parameter == "tau" || parameter == "bath_theta" ||
                     parameter == "bath_phi" || parameter == "bath_mag" ||
                     parameter == "pulse_duration";
  if (!known) {
    throw std::invalid_argument("sweep: unknown parameter '" + parameter + "'");
  }
  std::vector<SweepRow> rows;
  rows.reserve(static_cast<size_t>(steps));
  for (int i = 0; i < steps; ++i) {
    const double value =
        from + (to - from) * static_cast<double>(i) /
                   static_cast<double>(steps - 1);
    CycleSpec point = c;
    if (parameter == "tau") {
      point.tau = value;
    } else if (parameter == "bath_theta") {
      point.bath.angles = BlochAngles(value, c.bath.angles.phi);
    } else if (parameter == "bath_phi") {
      point.bath.angles = BlochAngles(c.bath.angles.theta, value);
    } else if (parameter == "bath_mag") {
      point.bath.magnitude = value;
    } else {
      point.pulse = PulseModel::finite(value);
    }
    const SimResult res = dd_cycle(point);
    rows.push_back({value, res.fidelity, res.residual});
  }
  return rows;
}

}  // namespace blochgate

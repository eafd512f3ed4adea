#include "blochgate/spinors.hpp"

#include <cmath>
#include <stdexcept>

namespace blochgate {

BlochAngles::BlochAngles(double t, double p) : theta(t), phi(p) {
  if (!(theta >= 0.0 && theta <= kPi)) {
    throw std::invalid_argument("BlochAngles: theta outside [0, pi]");
  }
  if (!std::isfinite(phi)) {
    throw std::invalid_argument("BlochAngles: phi not finite");
  }
  phi = std::fmod(phi, kTwoPi);
  if (phi < 0.0) phi += kTwoPi;
  // fmod of a value just below a multiple of 2*pi can round back up to 2*pi.
  if (phi >= kTwoPi) phi = 0.0;
}

QubitKind antipodal_partner(QubitKind k) {
  switch (k) {
    case QubitKind::ChiPlus: return QubitKind::ChiMinus;
    case QubitKind::ChiMinus: return QubitKind::ChiPlus;
    case QubitKind::EtaPlus: return QubitKind::EtaMinus;
    case QubitKind::EtaMinus: return QubitKind::EtaPlus;
    case QubitKind::Zero: return QubitKind::One;
    case QubitKind::One: return QubitKind::Zero;
  }
  throw std::logic_error("antipodal_partner: bad kind");
}

const char* kind_name(QubitKind k) {
  switch (k) {
    case QubitKind::ChiPlus: return "chi+";
    case QubitKind::ChiMinus: return "chi-";
    case QubitKind::EtaPlus: return "eta+";
    case QubitKind::EtaMinus: return "eta-";
    case QubitKind::Zero: return "|0>";
    case QubitKind::One: return "|1>";
  }
  throw std::logic_error("kind_name: bad kind");
}

Vec3R momentum_unit(BlochAngles a) {
  return {std::sin(a.theta) * std::cos(a.phi),
          std::sin(a.theta) * std::sin(a.phi), std::cos(a.theta)};
}

Spinor qubit_components(QubitKind k, double theta, double phi) {
  const double c = std::cos(0.5 * theta);
  const double s = std::sin(0.5 * theta);
  const cplx eip = std::polar(1.0, phi);
  const cplx eimp = std::polar(1.0, -phi);
  const cplx eihp = std::polar(1.0, 0.5 * phi);
  const cplx eimhp = std::polar(1.0, -0.5 * phi);
  switch (k) {
    case QubitKind::ChiPlus: return {cplx(c), eip * s};
    case QubitKind::ChiMinus: return {-eimp * s, cplx(c)};
    case QubitKind::EtaPlus: return {eimhp * c, eihp * s};
    case QubitKind::EtaMinus: return {-eimhp * s, eihp * c};
    case QubitKind::Zero: return {cplx(1.0), cplx(0.0)};
    case QubitKind::One: return {cplx(0.0), cplx(1.0)};
  }
  throw std::logic_error("qubit_components: bad kind");
}

Spinor make_qubit(QubitKind k, BlochAngles a) {
  return qubit_components(k, a.theta, a.phi);
}

std::pair<cplx, cplx> eta_chi_phase(BlochAngles a, Tolerance tol) {
  const cplx plus = std::polar(1.0, 0.5 * a.phi);
  const cplx minus = std::polar(1.0, -0.5 * a.phi);
  const Spinor chi_p = make_qubit(QubitKind::ChiPlus, a);
  const Spinor chi_m = make_qubit(QubitKind::ChiMinus, a);
  const Spinor eta_p = make_qubit(QubitKind::EtaPlus, a);
  const Spinor eta_m = make_qubit(QubitKind::EtaMinus, a);
  if (norm(chi_p - plus * eta_p) > tol.eps ||
      norm(chi_m - minus * eta_m) > tol.eps) {
    throw std::logic_error("eta_chi_phase: convention relation violated");
  }
  return {plus, minus};
}

double helicity_residual(const Spinor& s, BlochAngles a, int h) {
  if (h != 1 && h != -1) {
    throw std::invalid_argument("helicity_residual: h must be +1 or -1");
  }
  const Mat2C sp = pauli_dot(momentum_unit(a));
  return norm(sp * s - cplx(h) * s);
}

Mat2C projector(int h, BlochAngles a) {
  if (h != 1 && h != -1) {
    throw std::invalid_argument("projector: h must be +1 or -1");
  }
  const Mat2C sp = pauli_dot(momentum_unit(a));
  return 0.5 * (Mat2C::identity() + static_cast<double>(h) * sp);
}

BlochAngles discrete_parity(BlochAngles a) {
  return BlochAngles(kPi - a.theta, a.phi + kPi);
}

MappingPhase parity_phase(QubitKind k, BlochAngles a, Tolerance tol) {
  if (k == QubitKind::Zero || k == QubitKind::One) {
    throw std::invalid_argument(
        "parity_phase: defined for the helicity families only");
  }
  // The eta components are 4*pi-periodic in phi, so the transformed state is
  // evaluated at the raw shifted angles. Reducing phi + pi mod 2*pi first
  // would silently flip the eta hop phase on half the sphere.
  const Spinor mapped = qubit_components(k, kPi - a.theta, a.phi + kPi);
  const QubitKind partner = antipodal_partner(k);
  const Spinor same = make_qubit(k, a);
  const Spinor other = make_qubit(partner, a);
  const cplx onto_other = inner(other, mapped);
  const cplx onto_same = inner(same, mapped);
  // Leak measured on the residual vector itself; a difference of squared
  // norms would lose half the significant digits to cancellation.
  const double residual = norm(mapped - onto_other * other);
  if (std::abs(onto_same) > tol.eps || residual > tol.eps) {
    throw std::runtime_error("parity_phase: state did not map to its partner");
  }
  const cplx phase = onto_other / std::abs(onto_other);
  return {k, partner, phase, residual};
}

}  // namespace blochgate

#include "blochgate/gates.hpp"

#include <cmath>
#include <stdexcept>

namespace blochgate {

const char* family_name(GateFamily f) {
  switch (f) {
    case GateFamily::P1: return "P1";
    case GateFamily::P2: return "P2";
    case GateFamily::P3: return "P3";
    case GateFamily::P4: return "P4";
    case GateFamily::P1t: return "P1t";
    case GateFamily::P2t: return "P2t";
  }
  throw std::logic_error("family_name: bad family");
}

GateFamily parse_family(const std::string& name) {
  if (name == "P1") return GateFamily::P1;
  if (name == "P2") return GateFamily::P2;
  if (name == "P3") return GateFamily::P3;
  if (name == "P4") return GateFamily::P4;
  if (name == "P1t") return GateFamily::P1t;
  if (name == "P2t") return GateFamily::P2t;
  throw std::invalid_argument("parse_family: unknown family '" + name + "'");
}

bool is_rotation_family(GateFamily f) {
  return f == GateFamily::P1 || f == GateFamily::P2 || f == GateFamily::P3 ||
         f == GateFamily::P4;
}

Spinor orthogonal_complement(const Spinor& s, Tolerance tol) {
  if (std::abs(norm(s) - 1.0) > tol.eps) {
    throw std::invalid_argument("orthogonal_complement: spinor not normalized");
  }
  return {-std::conj(s.c1), std::conj(s.c0)};
}

Mat2C pi_matrix(const OrthonormalPair& pair, const PhasePair& phases,
                Tolerance tol) {
  if (std::abs(norm(pair.psi) - 1.0) > tol.eps ||
      std::abs(norm(pair.psi_perp) - 1.0) > tol.eps ||
      std::abs(inner(pair.psi, pair.psi_perp)) > tol.eps) {
    throw std::invalid_argument("pi_matrix: pair not orthonormal");
  }
  if (std::abs(std::abs(phases.d1) - 1.0) > tol.eps ||
      std::abs(std::abs(phases.d2) - 1.0) > tol.eps) {
    throw std::invalid_argument("pi_matrix: phases not unit modulus");
  }
  return phases.d1 * outer(pair.psi, pair.psi_perp) +
         phases.d2 * outer(pair.psi_perp, pair.psi);
}

OrthonormalPair family_pair(GateFamily f, BlochAngles a) {
  switch (f) {
    case GateFamily::P1:
    case GateFamily::P3:
    case GateFamily::P1t:
      return {make_qubit(QubitKind::ChiPlus, a),
              make_qubit(QubitKind::ChiMinus, a)};
    case GateFamily::P2:
    case GateFamily::P4:
    case GateFamily::P2t:
      return {make_qubit(QubitKind::EtaPlus, a),
              make_qubit(QubitKind::EtaMinus, a)};
  }
  throw std::logic_error("family_pair: bad family");
}

PhasePair family_phases(GateFamily f, BlochAngles a) {
  switch (f) {
    case GateFamily::P1:
      return {std::polar(1.0, -a.phi), -std::polar(1.0, a.phi)};
    case GateFamily::P2:
      return {cplx(0.0, 1.0), cplx(0.0, 1.0)};
    case GateFamily::P3:
    case GateFamily::P4:
      return {cplx(-1.0), cplx(1.0)};
    case GateFamily::P1t:
    case GateFamily::P2t:
      return {cplx(1.0), cplx(1.0)};
  }
  throw std::logic_error("family_phases: bad family");
}

Mat2C gate(GateFamily f, BlochAngles a) {
  const double st = std::sin(a.theta);
  const double ct = std::cos(a.theta);
  const double sp = std::sin(a.phi);
  const double cp = std::cos(a.phi);
  const cplx eip = std::polar(1.0, a.phi);
  const cplx eimp = std::polar(1.0, -a.phi);
  const cplx i(0.0, 1.0);
  Mat2C m;
  switch (f) {
    case GateFamily::P1:
      m.e = {cplx(0.0), eimp, -eip, cplx(0.0)};
      return m;
    case GateFamily::P2:
      m.e = {-i * st, i * eimp * ct, i * eip * ct, i * st};
      return m;
    case GateFamily::P3:
      // Component expansion of -|chi+><chi-| + |chi-><chi+|.
      m.e = {i * st * sp, -eimp * cplx(cp, ct * sp), eip * cplx(cp, -ct * sp),
             -i * st * sp};
      return m;
    case GateFamily::P4:
      // Component expansion of -|eta+><eta-| + |eta-><eta+|; the half-angle
      // phases cancel pairwise, leaving -P1.
      m.e = {cplx(0.0), -eimp, eip, cplx(0.0)};
      return m;
    case GateFamily::P1t:
      m.e = {cplx(-st * cp), eimp * cplx(ct * cp, sp), eip * cplx(ct * cp, -sp),
             cplx(st * cp)};
      return m;
    case GateFamily::P2t:
      m.e = {cplx(-st), eimp * ct, eip * ct, cplx(st)};
      return m;
  }
  throw std::logic_error("gate: bad family");
}

Vec3R rotation_axis(GateFamily f, BlochAngles a) {
  switch (f) {
    case GateFamily::P1:
      return {-std::sin(a.phi), std::cos(a.phi), 0.0};
    case GateFamily::P2:
      return {std::cos(a.theta) * std::cos(a.phi),
              std::cos(a.theta) * std::sin(a.phi), -std::sin(a.theta)};
    case GateFamily::P3:
    case GateFamily::P4:
      return su2_axis_angle(gate(f, a)).axis;
    case GateFamily::P1t:
    case GateFamily::P2t:
      throw std::invalid_argument(
          "rotation_axis: determinant -1 family has no rotation axis");
  }
  throw std::logic_error("rotation_axis: bad family");
}

namespace {

bool action_defined(GateFamily f, QubitKind k) {
  const bool chi = k == QubitKind::ChiPlus || k == QubitKind::ChiMinus;
  const bool eta = k == QubitKind::EtaPlus || k == QubitKind::EtaMinus;
  switch (f) {
    case GateFamily::P1: return true;
    case GateFamily::P2:
    case GateFamily::P4:
    case GateFamily::P2t: return eta;
    case GateFamily::P3:
    case GateFamily::P1t: return chi;
  }
  return false;
}

}  // namespace

MappingPhase gate_action(GateFamily f, QubitKind k, BlochAngles a,
                         Tolerance tol) {
  if (!action_defined(f, k)) {
    throw std::invalid_argument("gate_action: family " +
                                std::string(family_name(f)) +
                                " has no defined action on " + kind_name(k));
  }
  const Spinor image = gate(f, a) * make_qubit(k, a);
  const QubitKind partner = antipodal_partner(k);
  const Spinor target = make_qubit(partner, a);
  const cplx onto_target = inner(target, image);
  // Leak measured on the residual vector itself; a difference of squared
  // norms would lose half the significant digits to cancellation.
  const double residual = norm(image - onto_target * target);
  if (residual > tol.eps) {
    throw std::runtime_error(
        "gate_action: image leaked off the antipodal partner");
  }
  const cplx phase = onto_target / std::abs(onto_target);
  return {k, partner, phase, residual};
}

}  // namespace blochgate

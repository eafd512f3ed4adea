#ifndef BLOCHGATE_SPINORS_HPP
#define BLOCHGATE_SPINORS_HPP

#include <utility>

#include "blochgate/linalg.hpp"

namespace blochgate {

/// Polar coordinates on the Bloch sphere, doubling as the direction of the
/// physical three-momentum. theta lies in [0, pi]; phi is stored reduced to
/// [0, 2*pi). At the poles phi is kept as given rather than canonicalized,
/// since the half-angle spinor family carries phi-dependent phases there
/// (a gauge choice, not an observable).
struct BlochAngles {
  double theta = 0.0;
  double phi = 0.0;

  BlochAngles(double t, double p);
};

/// The four helicity qubits plus the computational basis. chi/eta label the
/// two phase conventions for the same pair of antipodal states; the sign is
/// the helicity.
enum class QubitKind { ChiPlus, ChiMinus, EtaPlus, EtaMinus, Zero, One };

/// Orthogonal partner within the same family (chi+ <-> chi-, eta+ <-> eta-,
/// 0 <-> 1).
QubitKind antipodal_partner(QubitKind k);

const char* kind_name(QubitKind k);

/// Record of a state mapping: source went to phase * target with the given
/// decomposition residual (leak onto the orthogonal complement).
struct MappingPhase {
  QubitKind source;
  QubitKind target;
  cplx phase;       // unit modulus
  double residual;  // <= tol for a valid mapping
};

/// Unit momentum direction (sin t cos p, sin t sin p, cos t).
Vec3R momentum_unit(BlochAngles a);

/// Component formulas of the six states, evaluated at raw angles. phi enters
/// exactly as passed: the eta family is 4*pi-periodic in phi, so callers that
/// track parity phases must not pre-reduce it.
Spinor qubit_components(QubitKind k, double theta, double phi);

/// The named state at the stored (reduced) angles. Normalized; the chi and
/// eta pairs are exactly orthonormal.
Spinor make_qubit(QubitKind k, BlochAngles a);

/// The phases (e^{+i phi/2}, e^{-i phi/2}) relating the two conventions,
/// chi_pm = e^{+-i phi/2} eta_pm. Checks the relation and throws
/// std::logic_error if it fails beyond tol.
std::pair<cplx, cplx> eta_chi_phase(BlochAngles a, Tolerance tol = {});

/// || (sigma . p_hat) s - h s || for h = +-1.
double helicity_residual(const Spinor& s, BlochAngles a, int h);

/// Helicity projector (I +- sigma . p_hat) / 2 for h = +-1.
Mat2C projector(int h, BlochAngles a);

/// Point inversion on the sphere: (theta, phi) -> (pi - theta, phi + pi),
/// reduced. Applying it twice returns the original angles.
BlochAngles discrete_parity(BlochAngles a);

/// Action of the discrete parity map on one of the four helicity states:
/// evaluates the source formula at the unreduced parity angles and
/// decomposes it on the basis at the original angles. The result records
/// the target kind and the unit transformation phase. Composing the hop at
/// `a` with the hop at discrete_parity(a) yields phase +1 for the chi family
/// and -1 for the eta family (the half-angle phases are 4*pi-periodic).
/// Throws std::invalid_argument for the computational basis kinds and
/// std::runtime_error if the decomposition leaks beyond tol.
MappingPhase parity_phase(QubitKind k, BlochAngles a, Tolerance tol = {});

}  // namespace blochgate

#endif

#ifndef BLOCHGATE_SO3_HPP
#define BLOCHGATE_SO3_HPP

#include "blochgate/gates.hpp"
#include "blochgate/linalg.hpp"
#include "blochgate/spinors.hpp"

namespace blochgate {

/// The rotation induced by a unitary through the trace map
/// R_ij = Re Tr(sigma_i M sigma_j M^dag) / 2. Global phases cancel, so any
/// unitary (including determinant -1 ones) yields a proper rotation. Throws
/// std::invalid_argument on non-unitary input and std::logic_error if a
/// trace picks up an imaginary part beyond tol (cannot happen for unitary M;
/// the assertion guards the implementation).
Mat3R induced_rotation(const Mat2C& m, Tolerance tol = {});

/// Inverse coordinate map: theta = arccos(z / ||v||), phi from the
/// two-argument arctangent of (y, x) reduced to [0, 2*pi). On the z axis
/// (x = y = 0) phi is 0 by convention. Throws std::invalid_argument on the
/// zero vector. Left inverse of momentum_unit away from the poles.
BlochAngles angles_from_cartesian(Vec3R v);

/// Point-inversion residual for the rotation families: the larger of
/// || R(gate) p_hat + p_hat || and the conjugation residual
/// || gate (sigma . p_hat) gate^dag + sigma . p_hat ||. Both vanish for
/// P1 through P4. Throws std::invalid_argument for P1t, P2t.
double verify_point_inversion(GateFamily f, BlochAngles a, Tolerance tol = {});

}  // namespace blochgate

#endif

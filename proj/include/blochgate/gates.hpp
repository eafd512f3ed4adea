#ifndef BLOCHGATE_GATES_HPP
#define BLOCHGATE_GATES_HPP

#include <string>

#include "blochgate/linalg.hpp"
#include "blochgate/spinors.hpp"

namespace blochgate {

/// The six coordinate-dependent NOT gate families. P1 and P3 are built on
/// the chi pair, P2 and P4 on the eta pair; P1t and P2t are the Hermitian
/// (trivial-phase) variants on chi and eta respectively.
enum class GateFamily { P1, P2, P3, P4, P1t, P2t };

/// CLI token for the family (P1, P2, P3, P4, P1t, P2t).
const char* family_name(GateFamily f);

/// Parses a family token. Throws std::invalid_argument on unknown names.
GateFamily parse_family(const std::string& name);

/// True for P1, P2, P3, P4: unit determinant, square to -I, and realize a
/// rotation (the phase pair multiplies to -1). False for the Hermitian
/// det = -1 families P1t, P2t.
bool is_rotation_family(GateFamily f);

/// An orthonormal basis pair (psi, psi_perp).
struct OrthonormalPair {
  Spinor psi;
  Spinor psi_perp;
};

/// The two unit phases (d1, d2) weighting the off-diagonal outer products.
struct PhasePair {
  cplx d1;
  cplx d2;
};

/// (alpha, beta) -> (-conj(beta), conj(alpha)). Output is orthogonal to the
/// input; applying twice negates. Throws std::invalid_argument if the input
/// is not normalized within tol.
Spinor orthogonal_complement(const Spinor& s, Tolerance tol = {});

/// d1 |psi><psi_perp| + d2 |psi_perp><psi|. In the pair's own basis this is
/// [[0, d1], [d2, 0]] with determinant -d1*d2; it sends psi to d2*psi_perp
/// and psi_perp to d1*psi. Throws std::invalid_argument if the pair is not
/// orthonormal within tol or the phases are not unit modulus.
Mat2C pi_matrix(const OrthonormalPair& pair, const PhasePair& phases,
                Tolerance tol = {});

/// The basis pair a family is built on: (chi+, chi-) for P1, P3, P1t;
/// (eta+, eta-) for P2, P4, P2t.
OrthonormalPair family_pair(GateFamily f, BlochAngles a);

/// The defining phase choice per family. Only P1's pair depends on the
/// angles: (e^{-i phi}, -e^{i phi}). P2 is (i, i), P3 and P4 are (-1, +1),
/// P1t and P2t are (1, 1).
PhasePair family_phases(GateFamily f, BlochAngles a);

/// Closed-form gate matrix in the computational basis. Independent of the
/// outer-product construction; agreement with pi_matrix over the family
/// phase choices is a test surface, not an assumption here.
Mat2C gate(GateFamily f, BlochAngles a);

/// Unit rotation axis n with gate = exp(i (pi/2) n.sigma): the printed axes
/// (-sin phi, cos phi, 0) for P1 and (cos t cos p, cos t sin p, -sin t) for
/// P2, and the numerically recovered axis for P3, P4. Perpendicular to the
/// momentum direction. Throws std::invalid_argument for P1t, P2t (det = -1,
/// not special-unitary rotations).
Vec3R rotation_axis(GateFamily f, BlochAngles a);

/// Applies the gate to the named state and decomposes the image on the
/// state's antipodal partner, returning the unit mapping phase. Allowed
/// kinds follow each family's defined action: P1 accepts all six kinds,
/// P2, P4, P2t the eta pair, P3, P1t the chi pair. Other combinations
/// throw std::invalid_argument; a decomposition leak beyond tol throws
/// std::runtime_error.
MappingPhase gate_action(GateFamily f, QubitKind k, BlochAngles a,
                         Tolerance tol = {});

}  // namespace blochgate

#endif

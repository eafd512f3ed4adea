#ifndef BLOCHGATE_WEYL_HPP
#define BLOCHGATE_WEYL_HPP

#include <utility>

#include "blochgate/gates.hpp"
#include "blochgate/linalg.hpp"
#include "blochgate/spinors.hpp"

namespace blochgate {

/// The four gamma matrices in the chiral (Weyl) representation, metric
/// signature (+, -, -, -).
struct GammaSet {
  Mat4C g0, g1, g2, g3;

  const Mat4C& operator[](int mu) const;
};

/// g0 = [[0, I], [I, 0]], gi = [[0, sigma_i], [-sigma_i, 0]].
GammaSet gamma_weyl();

/// Max over all 16 index pairs of || g_mu g_nu + g_nu g_mu - 2 eta_munu I ||.
double clifford_residual(const GammaSet& g);

/// Residual of the chiral block decoupling of the massless momentum-space
/// Dirac operator: assembles gamma^mu p_mu for p = (E, E p_hat) and checks
/// that the diagonal 2x2 blocks vanish while the off-diagonal blocks are the
/// two Weyl operators E*I - sigma.p (upper right) and E*I + sigma.p (lower
/// left). Throws std::invalid_argument for E <= 0.
double weyl_block_residual(double energy, BlochAngles a);

/// Massless momentum-space plane wave of definite helicity. energy_sign
/// tags the sign of the frequency in the position-space phase convention;
/// the momentum-space content is identical for both signs.
struct PlaneWave {
  Spinor spinor;
  int helicity;     // +1 or -1
  double pmag;      // three-momentum magnitude; E = pmag
  BlochAngles angles;
  int energy_sign;  // +1 or -1
};

/// Builds the plane wave with spinor chi_h(a). Throws std::invalid_argument
/// for pmag <= 0 or a sign outside {+1, -1}.
PlaneWave plane_wave(BlochAngles a, double pmag, int h, int es);

/// || (sigma . p_hat) s - h s || for the wave's spinor: the momentum-space
/// residual of the matching Weyl equation. Independent of energy_sign.
double weyl_residual(const PlaneWave& w);

/// The anti-unitary helicity flip s -> -i sigma_2 conj(s), i.e.
/// (c0, c1) -> (-conj(c1), conj(c0)). Sends chi+ to chi- and chi- to -chi+
/// exactly; applying twice negates. Used as an oracle for the unitary gates.
Spinor wigner_flip(const Spinor& s);

/// Residual of the unitary helicity symmetry for a rotation-family gate:
/// the larger of || (sigma . p_hat)(G chi+) + (G chi+) || (the image solves
/// the negative-helicity equation) and the conjugation route
/// || G (sigma . p_hat) G^dag (G chi+) - (G chi+) ||. Throws
/// std::invalid_argument for P1t, P2t.
double unitary_symmetry_check(GateFamily f, BlochAngles a);

/// The Hermitian matrix E*I + sigma.p for a massless four-momentum
/// p = (E, E p_hat): trace 2E, determinant 0, eigenvalues {2E, 0}.
struct FourMomentumMatrix {
  Mat2C m;
  double energy;
  BlochAngles angles;
};

/// Throws std::invalid_argument for E <= 0.
FourMomentumMatrix four_momentum_matrix(double energy, BlochAngles a);

/// Twistor decomposition residuals: first
/// || (E*I + sigma.p) - 2E |chi+><chi+| ||, then the parity-conjugated form
/// || G (E*I + sigma.p) G^dag - 2E |chi-><chi-| || for a rotation-family
/// gate G. The rescaling by sqrt(2E) lives in these identities; spinors
/// stay unit-normalized. Throws std::invalid_argument for E <= 0 or a
/// non-rotation family.
std::pair<double, double> twistor_check(double energy, BlochAngles a,
                                        GateFamily f);

}  // namespace blochgate

#endif

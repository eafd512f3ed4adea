#include "blochgate/weyl.hpp"

#include <cmath>
#include <stdexcept>

namespace blochgate {

namespace {

Mat4C from_blocks(const Mat2C& tl, const Mat2C& tr, const Mat2C& bl,
                  const Mat2C& br) {
  Mat4C m;
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) {
      m(r, c) = tl(r, c);
      m(r, c + 2) = tr(r, c);
      m(r + 2, c) = bl(r, c);
      m(r + 2, c + 2) = br(r, c);
    }
  }
  return m;
}

Mat2C block(const Mat4C& m, int row, int col) {
  Mat2C b;
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) {
      b(r, c) = m(2 * row + r, 2 * col + c);
    }
  }
  return b;
}

constexpr double kMetric[4] = {1.0, -1.0, -1.0, -1.0};

}  // namespace

const Mat4C& GammaSet::operator[](int mu) const {
  switch (mu) {
    case 0: return g0;
    case 1: return g1;
    case 2: return g2;
    case 3: return g3;
  }
  throw std::out_of_range("GammaSet: index must be 0..3");
}

GammaSet gamma_weyl() {
  const Mat2C z = Mat2C::zero();
  const Mat2C id = Mat2C::identity();
  GammaSet g;
  g.g0 = from_blocks(z, id, id, z);
  g.g1 = from_blocks(z, pauli(1), cplx(-1.0) * pauli(1), z);
  g.g2 = from_blocks(z, pauli(2), cplx(-1.0) * pauli(2), z);
  g.g3 = from_blocks(z, pauli(3), cplx(-1.0) * pauli(3), z);
  return g;
}

double clifford_residual(const GammaSet& g) {
  double worst = 0.0;
  for (int mu = 0; mu < 4; ++mu) {
    for (int nu = 0; nu < 4; ++nu) {
      const Mat4C anti = g[mu] * g[nu] + g[nu] * g[mu];
      const Mat4C expected = cplx(2.0 * kMetric[mu] *
                                  (mu == nu ? 1.0 : 0.0)) * Mat4C::identity();
      worst = std::max(worst, frobenius(anti - expected));
    }
  }
  return worst;
}

double weyl_block_residual(double energy, BlochAngles a) {
  if (energy <= 0.0) {
    throw std::invalid_argument("weyl_block_residual: energy must be > 0");
  }
  const GammaSet g = gamma_weyl();
  const Vec3R p = energy * momentum_unit(a);
  // Lower-index momentum (E, -p) contracted with the upper-index gammas.
  const Mat4C slash = cplx(energy) * g.g0 +
                      cplx(-p.x) * g.g1 + cplx(-p.y) * g.g2 +
                      cplx(-p.z) * g.g3;
  const Mat2C sp = pauli_dot(p);
  const Mat2C e_id = cplx(energy) * Mat2C::identity();
  double worst = frobenius(block(slash, 0, 0));
  worst = std::max(worst, frobenius(block(slash, 1, 1)));
  worst = std::max(worst, frobenius(block(slash, 0, 1) - (e_id - sp)));
  worst = std::max(worst, frobenius(block(slash, 1, 0) - (e_id + sp)));
  return worst;
}

PlaneWave plane_wave(BlochAngles a, double pmag, int h, int es) {
  if (pmag <= 0.0) {
    throw std::invalid_argument("plane_wave: momentum magnitude must be > 0");
  }
  if ((h != 1 && h != -1) || (es != 1 && es != -1)) {
    throw std::invalid_argument("plane_wave: signs must be +1 or -1");
  }
  const QubitKind k = h == 1 ? QubitKind::ChiPlus : QubitKind::ChiMinus;
  return {make_qubit(k, a), h, pmag, a, es};
}

double weyl_residual(const PlaneWave& w) {
  return helicity_residual(w.spinor, w.angles, w.helicity);
}

Spinor wigner_flip(const Spinor& s) {
  return {-std::conj(s.c1), std::conj(s.c0)};
}

double unitary_symmetry_check(GateFamily f, BlochAngles a) {
  if (!is_rotation_family(f)) {
    throw std::invalid_argument(
        "unitary_symmetry_check: rotation families only");
  }
  const Mat2C g = gate(f, a);
  const Mat2C sp = pauli_dot(momentum_unit(a));
  const Spinor image = g * make_qubit(QubitKind::ChiPlus, a);
  const double direct = norm(sp * image + image);
  const double conjugated = norm(g * sp * adjoint(g) * image - image);
  return std::max(direct, conjugated);
}

FourMomentumMatrix four_momentum_matrix(double energy, BlochAngles a) {
  if (energy <= 0.0) {
    throw std::invalid_argument("four_momentum_matrix: energy must be > 0");
  }
  const Mat2C m = cplx(energy) * Mat2C::identity() +
                  pauli_dot(energy * momentum_unit(a));
  return {m, energy, a};
}

std::pair<double, double> twistor_check(double energy, BlochAngles a,
                                        GateFamily f) {
  if (!is_rotation_family(f)) {
    throw std::invalid_argument("twistor_check: rotation families only");
  }
  const Mat2C sp = four_momentum_matrix(energy, a).m;
  const cplx two_e(2.0 * energy);
  const Spinor chi_p = make_qubit(QubitKind::ChiPlus, a);
  const Spinor chi_m = make_qubit(QubitKind::ChiMinus, a);
  const double first = frobenius(sp - two_e * outer(chi_p, chi_p));
  const Mat2C g = gate(f, a);
  const double second =
      frobenius(g * sp * adjoint(g) - two_e * outer(chi_m, chi_m));
  return {first, second};
}

}  // namespace blochgate

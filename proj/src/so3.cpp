#include "blochgate/so3.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace blochgate {

Mat3R induced_rotation(const Mat2C& m, Tolerance tol) {
  if (!is_unitary(m, tol)) {
    throw std::invalid_argument("induced_rotation: input not unitary");
  }
  const Mat2C md = adjoint(m);
  Mat3R r;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      const cplx t = 0.5 * trace(pauli(i + 1) * m * pauli(j + 1) * md);
      if (std::abs(t.imag()) > tol.eps) {
        throw std::logic_error("induced_rotation: trace not real");
      }
      r.e[static_cast<size_t>(3 * i + j)] = t.real();
    }
  }
  return r;
}

BlochAngles angles_from_cartesian(Vec3R v) {
  const double n = norm(v);
  if (n == 0.0) {
    throw std::invalid_argument("angles_from_cartesian: zero vector");
  }
  const double theta = std::acos(std::clamp(v.z / n, -1.0, 1.0));
  double phi = (v.x == 0.0 && v.y == 0.0) ? 0.0 : std::atan2(v.y, v.x);
  if (phi < 0.0) phi += kTwoPi;
  return BlochAngles(theta, phi);
}

double verify_point_inversion(GateFamily f, BlochAngles a, Tolerance tol) {
  if (!is_rotation_family(f)) {
    throw std::invalid_argument(
        "verify_point_inversion: rotation families only");
  }
  const Mat2C g = gate(f, a);
  const Vec3R p = momentum_unit(a);
  const Vec3R rotated = induced_rotation(g, tol) * p;
  const double rotation_residual = norm(rotated + p);
  const Mat2C sp = pauli_dot(p);
  const double conjugation_residual = frobenius(g * sp * adjoint(g) + sp);
  return std::max(rotation_residual, conjugation_residual);
}

}  // namespace blochgate

#include "blochgate/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace blochgate {

double norm(Vec3R a) { return std::sqrt(dot(a, a)); }

Vec3R normalized(Vec3R a) {
  double n = norm(a);
  if (n == 0.0) throw std::invalid_argument("normalized: zero vector");
  return (1.0 / n) * a;
}

double norm(const Spinor& s) { return std::sqrt(std::norm(s.c0) + std::norm(s.c1)); }

Mat4C Mat4C::identity() {
  Mat4C m;
  for (int i = 0; i < 4; ++i) m(i, i) = 1.0;
  return m;
}

Mat2C operator*(const Mat2C& a, const Mat2C& b) {
  Mat2C r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r(i, j) = a(i, 0) * b(0, j) + a(i, 1) * b(1, j);
  return r;
}

Mat2C operator+(const Mat2C& a, const Mat2C& b) {
  Mat2C r;
  for (int k = 0; k < 4; ++k) r.e[k] = a.e[k] + b.e[k];
  return r;
}

Mat2C operator-(const Mat2C& a, const Mat2C& b) {
  Mat2C r;
  for (int k = 0; k < 4; ++k) r.e[k] = a.e[k] - b.e[k];
  return r;
}

Mat2C operator*(cplx s, const Mat2C& a) {
  Mat2C r;
  for (int k = 0; k < 4; ++k) r.e[k] = s * a.e[k];
  return r;
}

Spinor operator*(const Mat2C& a, const Spinor& s) {
  return {a(0, 0) * s.c0 + a(0, 1) * s.c1, a(1, 0) * s.c0 + a(1, 1) * s.c1};
}

Mat3R operator*(const Mat3R& a, const Mat3R& b) {
  Mat3R r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      double s = 0;
      for (int k = 0; k < 3; ++k) s += a(i, k) * b(k, j);
      r(i, j) = s;
    }
  return r;
}

Mat3R operator-(const Mat3R& a, const Mat3R& b) {
  Mat3R r;
  for (int k = 0; k < 9; ++k) r.e[k] = a.e[k] - b.e[k];
  return r;
}

Vec3R operator*(const Mat3R& a, Vec3R v) {
  return {a(0, 0) * v.x + a(0, 1) * v.y + a(0, 2) * v.z,
          a(1, 0) * v.x + a(1, 1) * v.y + a(1, 2) * v.z,
          a(2, 0) * v.x + a(2, 1) * v.y + a(2, 2) * v.z};
}

Mat3R transpose(const Mat3R& a) {
  Mat3R r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r(i, j) = a(j, i);
  return r;
}

double det(const Mat3R& a) {
  return a(0, 0) * (a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1)) -
         a(0, 1) * (a(1, 0) * a(2, 2) - a(1, 2) * a(2, 0)) +
         a(0, 2) * (a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0));
}

Mat4C operator*(const Mat4C& a, const Mat4C& b) {
  Mat4C r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      cplx s = 0;
      for (int k = 0; k < 4; ++k) s += a(i, k) * b(k, j);
      r(i, j) = s;
    }
  return r;
}

Mat4C operator+(const Mat4C& a, const Mat4C& b) {
  Mat4C r;
  for (int k = 0; k < 16; ++k) r.e[k] = a.e[k] + b.e[k];
  return r;
}

Mat4C operator-(const Mat4C& a, const Mat4C& b) {
  Mat4C r;
  for (int k = 0; k < 16; ++k) r.e[k] = a.e[k] - b.e[k];
  return r;
}

Mat4C operator*(cplx s, const Mat4C& a) {
  Mat4C r;
  for (int k = 0; k < 16; ++k) r.e[k] = s * a.e[k];
  return r;
}

Mat2C adjoint(const Mat2C& a) {
  return {{std::conj(a(0, 0)), std::conj(a(1, 0)), std::conj(a(0, 1)), std::conj(a(1, 1))}};
}

Mat4C adjoint(const Mat4C& a) {
  Mat4C r;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) r(i, j) = std::conj(a(j, i));
  }
  return r;
}

cplx det(const Mat2C& a) { return a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0); }

cplx trace(const Mat2C& a) { return a(0, 0) + a(1, 1); }

cplx trace(const Mat4C& a) {
  return a(0, 0) + a(1, 1) + a(2, 2) + a(3, 3);
}

double frobenius(const Mat2C& a) {
  double s = 0;
  for (const cplx& x : a.e) s += std::norm(x);
  return std::sqrt(s);
}

double frobenius(const Mat3R& a) {
  double s = 0;
  for (double x : a.e) s += x * x;
  return std::sqrt(s);
}

double frobenius(const Mat4C& a) {
  double s = 0;
  for (const cplx& x : a.e) s += std::norm(x);
  return std::sqrt(s);
}

Mat2C outer(const Spinor& u, const Spinor& v) {
  return {{u.c0 * std::conj(v.c0), u.c0 * std::conj(v.c1),
           u.c1 * std::conj(v.c0), u.c1 * std::conj(v.c1)}};
}

bool is_unitary(const Mat2C& a, Tolerance tol) {
  return frobenius(a * adjoint(a) - Mat2C::identity()) <= tol.eps;
}

bool is_hermitian(const Mat2C& a, Tolerance tol) {
  return frobenius(a - adjoint(a)) <= tol.eps;
}

std::pair<double, double> hermitian_eigenvalues(const Mat2C& a) {
  double mean = 0.5 * (a(0, 0).real() + a(1, 1).real());
  double half_gap = 0.5 * (a(0, 0).real() - a(1, 1).real());
  double r = std::sqrt(half_gap * half_gap + std::norm(a(0, 1)));
  return {mean - r, mean + r};
}

Mat2C pauli(int i) {
  const cplx j(0.0, 1.0);
  switch (i) {
    case 1: return {{0, 1, 1, 0}};
    case 2: return {{0, -j, j, 0}};
    case 3: return {{1, 0, 0, -1}};
    default: throw std::invalid_argument("pauli: index must be 1, 2 or 3");
  }
}

Mat2C pauli_dot(Vec3R v) {
  return {{cplx(v.z), cplx(v.x, -v.y), cplx(v.x, v.y), cplx(-v.z)}};
}

Vec3R pauli_vector(const Mat2C& h) {
  return {h(0, 1).real(), -h(0, 1).imag(), h(0, 0).real()};
}

Mat2C exp_pauli(double c, Vec3R n, Tolerance tol) {
  if (std::abs(norm(n) - 1.0) > tol.eps)
    throw std::invalid_argument("exp_pauli: axis must be a unit vector");
  return cplx(std::cos(c)) * Mat2C::identity() + cplx(0.0, std::sin(c)) * pauli_dot(n);
}

AxisAngle su2_axis_angle(const Mat2C& m, Tolerance tol) {
  if (!is_unitary(m, tol) || std::abs(det(m) - cplx(1.0)) > tol.eps)
    throw std::invalid_argument("su2_axis_angle: input is not special-unitary");
  Mat2C id = Mat2C::identity();
  if (frobenius(m - id) <= tol.eps || frobenius(m + id) <= tol.eps)
    throw std::invalid_argument("su2_axis_angle: rotation axis undefined at +-identity");

  double cos_c = std::clamp(0.5 * trace(m).real(), -1.0, 1.0);
  double angle = std::acos(cos_c);
  double sin_c = std::sin(angle);
  // m - cos(c) I = i sin(c) n.sigma, so n_j = Im tr(sigma_j m) / (2 sin c).
  Vec3R axis{(trace(pauli(1) * m)).imag() / (2.0 * sin_c),
             (trace(pauli(2) * m)).imag() / (2.0 * sin_c),
             (trace(pauli(3) * m)).imag() / (2.0 * sin_c)};
  return {angle, normalized(axis)};
}

bool close(double a, double b, Tolerance tol) { return std::abs(a - b) <= tol.eps; }
bool close(cplx a, cplx b, Tolerance tol) { return std::abs(a - b) <= tol.eps; }
bool close(Vec3R a, Vec3R b, Tolerance tol) { return norm(a - b) <= tol.eps; }
bool close(const Spinor& a, const Spinor& b, Tolerance tol) { return norm(a - b) <= tol.eps; }
bool close(const Mat2C& a, const Mat2C& b, Tolerance tol) { return frobenius(a - b) <= tol.eps; }
bool close(const Mat3R& a, const Mat3R& b, Tolerance tol) { return frobenius(a - b) <= tol.eps; }
bool close(const Mat4C& a, const Mat4C& b, Tolerance tol) { return frobenius(a - b) <= tol.eps; }

PhaseMatch close_up_to_phase(const Spinor& u, const Spinor& v, Tolerance tol) {
  cplx overlap = inner(v, u);
  if (std::abs(overlap) == 0.0) return {false, cplx(1.0)};
  cplx phase = overlap / std::abs(overlap);
  return {norm(u - phase * v) <= tol.eps, phase};
}

}  // namespace blochgate

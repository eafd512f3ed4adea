#ifndef BLOCHGATE_LINALG_HPP
#define BLOCHGATE_LINALG_HPP

#include <array>
#include <complex>
#include <utility>

namespace blochgate {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

/// Absolute comparison tolerance. Everything in this library is closed-form,
/// so residuals are pure rounding; 1e-12 leaves two orders of headroom.
struct Tolerance {
  double eps = 1e-12;
};

// ---------------------------------------------------------------------------
// Real 3-vectors
// ---------------------------------------------------------------------------

struct Vec3R {
  double x = 0.0, y = 0.0, z = 0.0;
};

inline Vec3R operator+(Vec3R a, Vec3R b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
inline Vec3R operator-(Vec3R a, Vec3R b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
inline Vec3R operator-(Vec3R a) { return {-a.x, -a.y, -a.z}; }
inline Vec3R operator*(double s, Vec3R a) { return {s * a.x, s * a.y, s * a.z}; }

inline double dot(Vec3R a, Vec3R b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
double norm(Vec3R a);
Vec3R normalized(Vec3R a);

// ---------------------------------------------------------------------------
// Spinors (complex 2-vectors on the computational basis)
// ---------------------------------------------------------------------------

struct Spinor {
  cplx c0{}, c1{};
};

inline Spinor operator+(const Spinor& a, const Spinor& b) { return {a.c0 + b.c0, a.c1 + b.c1}; }
inline Spinor operator-(const Spinor& a, const Spinor& b) { return {a.c0 - b.c0, a.c1 - b.c1}; }
inline Spinor operator-(const Spinor& a) { return {-a.c0, -a.c1}; }
inline Spinor operator*(cplx s, const Spinor& a) { return {s * a.c0, s * a.c1}; }

/// Inner product with the left argument conjugated: inner(u, v) = <u|v>.
inline cplx inner(const Spinor& u, const Spinor& v) {
  return std::conj(u.c0) * v.c0 + std::conj(u.c1) * v.c1;
}
double norm(const Spinor& s);

// ---------------------------------------------------------------------------
// Dense fixed-size matrices, row-major
// ---------------------------------------------------------------------------

struct Mat2C {
  std::array<cplx, 4> e{};

  cplx& operator()(int r, int c) { return e[2 * r + c]; }
  const cplx& operator()(int r, int c) const { return e[2 * r + c]; }

  static Mat2C identity() { return {{cplx(1), cplx(0), cplx(0), cplx(1)}}; }
  static Mat2C zero() { return {}; }
};

struct Mat3R {
  std::array<double, 9> e{};

  double& operator()(int r, int c) { return e[3 * r + c]; }
  const double& operator()(int r, int c) const { return e[3 * r + c]; }

  static Mat3R identity() { return {{1, 0, 0, 0, 1, 0, 0, 0, 1}}; }
};

struct Mat4C {
  std::array<cplx, 16> e{};

  cplx& operator()(int r, int c) { return e[4 * r + c]; }
  const cplx& operator()(int r, int c) const { return e[4 * r + c]; }

  static Mat4C identity();
};

Mat2C operator*(const Mat2C& a, const Mat2C& b);
Mat2C operator+(const Mat2C& a, const Mat2C& b);
Mat2C operator-(const Mat2C& a, const Mat2C& b);
Mat2C operator*(cplx s, const Mat2C& a);
Spinor operator*(const Mat2C& a, const Spinor& s);

Mat3R operator*(const Mat3R& a, const Mat3R& b);
Mat3R operator-(const Mat3R& a, const Mat3R& b);
Vec3R operator*(const Mat3R& a, Vec3R v);
Mat3R transpose(const Mat3R& a);
double det(const Mat3R& a);

Mat4C operator*(const Mat4C& a, const Mat4C& b);
Mat4C operator+(const Mat4C& a, const Mat4C& b);
Mat4C operator-(const Mat4C& a, const Mat4C& b);
Mat4C operator*(cplx s, const Mat4C& a);

Mat2C adjoint(const Mat2C& a);
Mat4C adjoint(const Mat4C& a);
cplx det(const Mat2C& a);
cplx trace(const Mat2C& a);
cplx trace(const Mat4C& a);

/// Frobenius norm, the canonical residual norm throughout.
double frobenius(const Mat2C& a);
double frobenius(const Mat3R& a);
double frobenius(const Mat4C& a);

/// Outer product |u><v| (right argument conjugated).
Mat2C outer(const Spinor& u, const Spinor& v);

bool is_unitary(const Mat2C& a, Tolerance tol = {});
bool is_hermitian(const Mat2C& a, Tolerance tol = {});

/// Eigenvalues of a Hermitian 2x2, ascending.
std::pair<double, double> hermitian_eigenvalues(const Mat2C& a);

// ---------------------------------------------------------------------------
// Pauli algebra
// ---------------------------------------------------------------------------

/// sigma_i for i in {1, 2, 3}. Throws std::out_of_range otherwise.
Mat2C pauli(int i);

/// v . sigma = v_x sigma_1 + v_y sigma_2 + v_z sigma_3 (v need not be unit).
Mat2C pauli_dot(Vec3R v);

/// Inverse of pauli_dot on Hermitian traceless input: h = pauli_dot(result).
Vec3R pauli_vector(const Mat2C& h);

/// exp(i c n.sigma) = cos(c) I + i sin(c) n.sigma for a unit axis n.
/// Throws std::invalid_argument if n is not unit within tol.
Mat2C exp_pauli(double c, Vec3R n, Tolerance tol = {});

struct AxisAngle {
  double angle = 0.0;  // in (0, pi)
  Vec3R axis;
};

/// Inverts exp_pauli: m = exp(i c n.sigma) with c in (0, pi).
/// Throws std::invalid_argument if m is not special-unitary within tol or is
/// within tol of +-I (axis undefined).
AxisAngle su2_axis_angle(const Mat2C& m, Tolerance tol = {});

// ---------------------------------------------------------------------------
// Tolerance-aware comparison
// ---------------------------------------------------------------------------

bool close(double a, double b, Tolerance tol = {});
bool close(cplx a, cplx b, Tolerance tol = {});
bool close(Vec3R a, Vec3R b, Tolerance tol = {});
bool close(const Spinor& a, const Spinor& b, Tolerance tol = {});
bool close(const Mat2C& a, const Mat2C& b, Tolerance tol = {});
bool close(const Mat3R& a, const Mat3R& b, Tolerance tol = {});
bool close(const Mat4C& a, const Mat4C& b, Tolerance tol = {});

struct PhaseMatch {
  bool match = false;
  cplx phase{};  // unit modulus when match is true
};

/// Global-phase-insensitive spinor comparison. The returned phase is the unit
/// complex number psi with u ~ psi * v, computed as <v|u> normalized; so
/// close_up_to_phase(u, exp(i a) * u) reports psi = exp(-i a). Both inputs
/// are expected normalized.
PhaseMatch close_up_to_phase(const Spinor& u, const Spinor& v, Tolerance tol = {});

}  // namespace blochgate

#endif

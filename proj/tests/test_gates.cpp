#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <stdexcept>

#include "blochgate/gates.hpp"
#include "oracle.hpp"

using namespace blochgate;

namespace {
constexpr GateFamily kAll[] = {GateFamily::P1,  GateFamily::P2,
                               GateFamily::P3,  GateFamily::P4,
                               GateFamily::P1t, GateFamily::P2t};
constexpr GateFamily kRotations[] = {GateFamily::P1, GateFamily::P2,
                                     GateFamily::P3, GateFamily::P4};
}  // namespace

TEST_CASE("family names parse and print") {
  for (GateFamily f : kAll) {
    CHECK(parse_family(family_name(f)) == f);
  }
  CHECK(parse_family("P1") == GateFamily::P1);
  CHECK(parse_family("P2t") == GateFamily::P2t);
  CHECK_THROWS_AS(parse_family("BAD"), std::invalid_argument);
  CHECK_THROWS_AS(parse_family(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_family("p1"), std::invalid_argument);
  CHECK(is_rotation_family(GateFamily::P4));
  CHECK(!is_rotation_family(GateFamily::P1t));
  CHECK(!is_rotation_family(GateFamily::P2t));
}

TEST_CASE("orthogonal_complement convention and involution") {
  const Spinor s{cplx(0.6), cplx(0.0, 0.8)};
  const Spinor c = orthogonal_complement(s);
  CHECK(std::abs(c.c0 - cplx(0.0, 0.8)) < 1e-15);
  CHECK(std::abs(c.c1 - cplx(0.6)) < 1e-15);
  CHECK(std::abs(inner(s, c)) < 1e-15);
  // applying twice negates
  const Spinor cc = orthogonal_complement(c);
  CHECK(norm(cc + s) < 1e-15);
  CHECK_THROWS_AS(orthogonal_complement(Spinor{cplx(1.0), cplx(1.0)}),
                  std::invalid_argument);
}

TEST_CASE("pi_matrix validates its inputs") {
  const Spinor psi{cplx(1.0), cplx(0.0)};
  const Spinor perp{cplx(0.0), cplx(1.0)};
  const Mat2C m =
      pi_matrix({psi, perp}, {cplx(0.0, 1.0), cplx(0.0, 1.0)});
  // d1 |psi><perp| + d2 |perp><psi| = i sigma1 here
  CHECK(frobenius(m - cplx(0.0, 1.0) * pauli(1)) < 1e-15);
  CHECK(norm(m * psi - cplx(0.0, 1.0) * perp) < 1e-15);
  CHECK(norm(m * perp - cplx(0.0, 1.0) * psi) < 1e-15);

  CHECK_THROWS_AS(pi_matrix({psi, psi}, {cplx(1.0), cplx(1.0)}),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      pi_matrix({Spinor{cplx(2.0), cplx(0.0)}, perp}, {cplx(1.0), cplx(1.0)}),
      std::invalid_argument);
  CHECK_THROWS_AS(pi_matrix({psi, perp}, {cplx(0.5), cplx(1.0)}),
                  std::invalid_argument);
}

TEST_CASE("closed forms at special angles") {
  // phi = 0 collapses P1 to the real antisymmetric NOT
  const Mat2C p1 = gate(GateFamily::P1, BlochAngles(0.3, 0.0));
  CHECK(std::abs(p1(0, 0)) < 1e-15);
  CHECK(std::abs(p1(0, 1) - cplx(1.0)) < 1e-15);
  CHECK(std::abs(p1(1, 0) + cplx(1.0)) < 1e-15);
  CHECK(std::abs(p1(1, 1)) < 1e-15);

  // theta = pi/2 diagonalizes P2 up to the cos(theta) epsilon
  const Mat2C p2 = gate(GateFamily::P2, BlochAngles(0.5 * kPi, 0.0));
  CHECK(std::abs(p2(0, 0) - cplx(0.0, -1.0)) < 1e-15);
  CHECK(std::abs(p2(1, 1) - cplx(0.0, 1.0)) < 1e-15);
  CHECK(std::abs(p2(0, 1)) < 1e-15);
  CHECK(std::abs(p2(1, 0)) < 1e-15);

  // P2t at theta = 0: [[0, 1], [1, 0]] exactly (sigma1)
  const Mat2C p2t = gate(GateFamily::P2t, BlochAngles(0.0, 0.0));
  CHECK(frobenius(p2t - pauli(1)) < 1e-15);
}

TEST_CASE("family cross relations") {
  oracle::AngleSampler rng(29);
  for (int i = 0; i < 200; ++i) {
    const BlochAngles a = rng.angles();
    CHECK(frobenius(gate(GateFamily::P4, a) + gate(GateFamily::P1, a)) <
          1e-14);
    CHECK(frobenius(gate(GateFamily::P2, a) -
                    cplx(0.0, 1.0) * gate(GateFamily::P2t, a)) < 1e-14);
  }
}

TEST_CASE("unitarity, determinant, and squares per family") {
  oracle::AngleSampler rng(37);
  for (int i = 0; i < 300; ++i) {
    const BlochAngles a = rng.angles();
    for (GateFamily f : kAll) {
      const Mat2C g = gate(f, a);
      CHECK(is_unitary(g));
      const cplx expected_det =
          is_rotation_family(f) ? cplx(1.0) : cplx(-1.0);
      CHECK(std::abs(det(g) - expected_det) < 1e-13);
      const Mat2C sq = g * g;
      const Mat2C expected_sq = is_rotation_family(f)
                                    ? cplx(-1.0) * Mat2C::identity()
                                    : Mat2C::identity();
      CHECK(frobenius(sq - expected_sq) < 1e-13);
    }
  }
}

TEST_CASE("outer-product construction equals the closed form") {
  oracle::AngleSampler rng(41);
  double worst = 0.0;
  for (int i = 0; i < 500; ++i) {
    const BlochAngles a = rng.angles();
    for (GateFamily f : kAll) {
      const OrthonormalPair pair = family_pair(f, a);
      const PhasePair phases = family_phases(f, a);
      const Mat2C built = pi_matrix(pair, phases);
      worst = std::max(worst, frobenius(built - gate(f, a)));
    }
  }
  CHECK(worst < 1e-13);
}

TEST_CASE("gate_action covers exactly the defined kinds") {
  const BlochAngles a(0.9, 2.1);
  // P1 acts on everything
  for (QubitKind k : {QubitKind::ChiPlus, QubitKind::ChiMinus,
                      QubitKind::EtaPlus, QubitKind::EtaMinus,
                      QubitKind::Zero, QubitKind::One}) {
    const MappingPhase mp = gate_action(GateFamily::P1, k, a);
    CHECK(mp.target == antipodal_partner(k));
    CHECK(mp.residual < 1e-13);
  }
  // eta-native families reject chi and the computational basis
  for (GateFamily f : {GateFamily::P2, GateFamily::P4, GateFamily::P2t}) {
    CHECK_NOTHROW(gate_action(f, QubitKind::EtaPlus, a));
    CHECK_THROWS_AS(gate_action(f, QubitKind::ChiPlus, a),
                    std::invalid_argument);
    CHECK_THROWS_AS(gate_action(f, QubitKind::Zero, a),
                    std::invalid_argument);
  }
  // chi-native families reject eta
  for (GateFamily f : {GateFamily::P3, GateFamily::P1t}) {
    CHECK_NOTHROW(gate_action(f, QubitKind::ChiMinus, a));
    CHECK_THROWS_AS(gate_action(f, QubitKind::EtaMinus, a),
                    std::invalid_argument);
  }
}

TEST_CASE("P1 action phases match the tabulated forms") {
  oracle::AngleSampler rng(43);
  for (int i = 0; i < 300; ++i) {
    const BlochAngles a = rng.angles();
    const cplx eip = std::polar(1.0, a.phi);
    const struct {
      QubitKind kind;
      cplx phase;
    } rows[] = {
        {QubitKind::ChiPlus, -eip},  {QubitKind::ChiMinus, std::conj(eip)},
        {QubitKind::EtaPlus, cplx(-1.0)}, {QubitKind::EtaMinus, cplx(1.0)},
        {QubitKind::Zero, -eip},     {QubitKind::One, std::conj(eip)},
    };
    for (const auto& row : rows) {
      const MappingPhase mp = gate_action(GateFamily::P1, row.kind, a);
      CHECK(std::abs(mp.phase - row.phase) < 1e-12);
    }
  }
}

TEST_CASE("native action phases for the other families") {
  oracle::AngleSampler rng(47);
  for (int i = 0; i < 300; ++i) {
    const BlochAngles a = rng.angles();
    const cplx im(0.0, 1.0);
    CHECK(std::abs(gate_action(GateFamily::P2, QubitKind::EtaPlus, a).phase -
                   im) < 1e-12);
    CHECK(std::abs(gate_action(GateFamily::P2, QubitKind::EtaMinus, a).phase -
                   im) < 1e-12);
    CHECK(std::abs(gate_action(GateFamily::P3, QubitKind::ChiPlus, a).phase -
                   cplx(1.0)) < 1e-12);
    CHECK(std::abs(gate_action(GateFamily::P3, QubitKind::ChiMinus, a).phase +
                   cplx(1.0)) < 1e-12);
    CHECK(std::abs(gate_action(GateFamily::P4, QubitKind::EtaPlus, a).phase -
                   cplx(1.0)) < 1e-12);
    CHECK(std::abs(gate_action(GateFamily::P4, QubitKind::EtaMinus, a).phase +
                   cplx(1.0)) < 1e-12);
    for (QubitKind k : {QubitKind::ChiPlus, QubitKind::ChiMinus}) {
      CHECK(std::abs(gate_action(GateFamily::P1t, k, a).phase - cplx(1.0)) <
            1e-12);
    }
    for (QubitKind k : {QubitKind::EtaPlus, QubitKind::EtaMinus}) {
      CHECK(std::abs(gate_action(GateFamily::P2t, k, a).phase - cplx(1.0)) <
            1e-12);
    }
  }
}

TEST_CASE("rotation axes are unit, orthogonal to p, and generate the gate") {
  oracle::AngleSampler rng(53);
  for (int i = 0; i < 300; ++i) {
    const BlochAngles a = rng.angles();
    const Vec3R p = momentum_unit(a);
    for (GateFamily f : kRotations) {
      const Vec3R n = rotation_axis(f, a);
      CHECK(norm(n) == doctest::Approx(1.0).epsilon(1e-13));
      CHECK(std::abs(dot(n, p)) < 1e-13);
      CHECK(frobenius(gate(f, a) - exp_pauli(0.5 * kPi, n)) < 1e-12);
    }
    // closed axis forms for the first two families
    const Vec3R a1 = rotation_axis(GateFamily::P1, a);
    CHECK(norm(a1 - Vec3R{-std::sin(a.phi), std::cos(a.phi), 0.0}) < 1e-13);
    const Vec3R a2 = rotation_axis(GateFamily::P2, a);
    CHECK(norm(a2 - Vec3R{std::cos(a.theta) * std::cos(a.phi),
                          std::cos(a.theta) * std::sin(a.phi),
                          -std::sin(a.theta)}) < 1e-13);
  }
  CHECK_THROWS_AS(rotation_axis(GateFamily::P1t, BlochAngles(0.4, 0.4)),
                  std::invalid_argument);
  CHECK_THROWS_AS(rotation_axis(GateFamily::P2t, BlochAngles(0.4, 0.4)),
                  std::invalid_argument);
}

TEST_CASE("adjoint undoes the gate") {
  oracle::AngleSampler rng(59);
  for (int i = 0; i < 200; ++i) {
    const BlochAngles a = rng.angles();
    for (GateFamily f : kAll) {
      const Mat2C g = gate(f, a);
      CHECK(frobenius(adjoint(g) * g - Mat2C::identity()) < 1e-14);
    }
  }
}

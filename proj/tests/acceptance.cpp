// Acceptance gate: nine end-to-end criteria, one line of output each.
// Exit code 0 only if every criterion holds at its stated tolerance.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>

#include "blochgate/decoupling.hpp"
#include "blochgate/gates.hpp"
#include "blochgate/linalg.hpp"
#include "blochgate/so3.hpp"
#include "blochgate/spinors.hpp"
#include "blochgate/weyl.hpp"
#include "oracle.hpp"
#include "run_cli.hpp"

using namespace blochgate;

namespace {

constexpr GateFamily kAll[] = {GateFamily::P1,  GateFamily::P2,
                               GateFamily::P3,  GateFamily::P4,
                               GateFamily::P1t, GateFamily::P2t};
constexpr GateFamily kRotations[] = {GateFamily::P1, GateFamily::P2,
                                     GateFamily::P3, GateFamily::P4};

int failures = 0;

void report(int idx, const char* name, bool pass, const std::string& detail) {
  std::printf("[%s] criterion %d: %s (%s)\n", pass ? "PASS" : "FAIL", idx,
              name, detail.c_str());
  if (!pass) ++failures;
}

void report_residual(int idx, const char* name, double worst, double tol) {
  char detail[96];
  std::snprintf(detail, sizeof detail, "max residual %.3g, tolerance %.3g",
                worst, tol);
  report(idx, name, worst <= tol, detail);
}

double& grow(double& worst, double candidate) {
  if (candidate > worst) worst = candidate;
  return worst;
}

}  // namespace

int main() {
  // 1: gate algebra across all six families
  {
    oracle::AngleSampler rng(42);
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
      const BlochAngles a = rng.angles();
      for (GateFamily f : kAll) {
        const Mat2C g = gate(f, a);
        grow(worst, frobenius(adjoint(g) * g - Mat2C::identity()));
        const bool rot = is_rotation_family(f);
        grow(worst, std::abs(det(g) - (rot ? cplx(1.0) : cplx(-1.0))));
        const Mat2C sq_want = rot ? cplx(-1.0) * Mat2C::identity()
                                  : Mat2C::identity();
        grow(worst, frobenius(g * g - sq_want));
      }
      grow(worst, frobenius(gate(GateFamily::P4, a) + gate(GateFamily::P1, a)));
      grow(worst, frobenius(gate(GateFamily::P2, a) -
                            cplx(0.0, 1.0) * gate(GateFamily::P2t, a)));
    }
    report_residual(1, "gate algebra and cross relations", worst, 1e-12);
  }

  // 2: outer-product construction equals the closed forms
  {
    oracle::AngleSampler rng(43);
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
      const BlochAngles a = rng.angles();
      for (GateFamily f : kAll) {
        const Mat2C built = pi_matrix(family_pair(f, a), family_phases(f, a));
        grow(worst, frobenius(built - gate(f, a)));
      }
    }
    report_residual(2, "construction equivalence", worst, 1e-13);
  }

  // 3: tabulated action of the first family on all six qubit kinds
  {
    oracle::AngleSampler rng(44);
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
      const BlochAngles a = rng.angles();
      const cplx eip = std::polar(1.0, a.phi);
      const struct {
        QubitKind kind;
        cplx phase;
      } rows[] = {
          {QubitKind::ChiPlus, -eip},
          {QubitKind::ChiMinus, std::conj(eip)},
          {QubitKind::EtaPlus, cplx(-1.0)},
          {QubitKind::EtaMinus, cplx(1.0)},
          {QubitKind::Zero, -eip},
          {QubitKind::One, std::conj(eip)},
      };
      for (const auto& row : rows) {
        const MappingPhase mp = gate_action(GateFamily::P1, row.kind, a);
        grow(worst, std::abs(mp.phase - row.phase));
        grow(worst, mp.residual);
      }
    }
    report_residual(3, "action table phases", worst, 1e-12);
  }

  // 4: induced rotations are proper, compose, and invert the point
  {
    oracle::AngleSampler rng(45);
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
      const BlochAngles a = rng.angles();
      const GateFamily f = kRotations[i % 4];
      const Mat2C g = gate(f, a);
      const Mat3R r = induced_rotation(g);
      grow(worst, frobenius(transpose(r) * r - Mat3R::identity()));
      grow(worst, std::abs(det(r) - 1.0));
      grow(worst, verify_point_inversion(f, a));
      const BlochAngles b = rng.angles();
      const Mat2C h = gate(kRotations[(i + 1) % 4], b);
      grow(worst, frobenius(induced_rotation(g * h) -
                            r * induced_rotation(h)));
    }
    for (int i = 0; i < 100; ++i) {
      const BlochAngles a = rng.angles();
      const double c2 = std::cos(2.0 * a.phi);
      const double s2 = std::sin(2.0 * a.phi);
      Mat3R want = Mat3R::identity();
      want(0, 0) = -c2;
      want(0, 1) = -s2;
      want(1, 0) = -s2;
      want(1, 1) = c2;
      want(2, 2) = -1.0;
      grow(worst, frobenius(induced_rotation(gate(GateFamily::P1, a)) - want));
    }
    report_residual(4, "induced rotations and point inversion", worst, 1e-12);
  }

  // 5: relativistic identities (scaled to each quantity's own tolerance)
  {
    oracle::AngleSampler rng(46);
    double worst_scaled = 0.0;
    grow(worst_scaled, clifford_residual(gamma_weyl()) / 1e-14);
    for (int i = 0; i < 1000; ++i) {
      const BlochAngles a = rng.angles();
      const double e = rng.uniform(0.1, 10.0);
      for (int h : {+1, -1}) {
        grow(worst_scaled,
             weyl_residual(plane_wave(a, e, h, +1)) / 1e-14);
        grow(worst_scaled,
             helicity_residual(
                 make_qubit(h > 0 ? QubitKind::ChiPlus : QubitKind::ChiMinus,
                            a),
                 a, h) /
                 1e-14);
      }
      const Mat2C pp = projector(+1, a);
      const Mat2C pm = projector(-1, a);
      grow(worst_scaled, frobenius(pp + pm - Mat2C::identity()) / 1e-14);
      grow(worst_scaled, frobenius(pp * pp - pp) / 1e-14);
      const GateFamily f = kRotations[i % 4];
      grow(worst_scaled, unitary_symmetry_check(f, a) / 1e-13);
      const auto [direct, conjugated] = twistor_check(e, a, f);
      grow(worst_scaled, direct / 1e-12);
      grow(worst_scaled, conjugated / 1e-12);
      const Mat2C m = four_momentum_matrix(e, a).m;
      grow(worst_scaled,
           std::abs(det(m)) / (1e-12 * (2.0 * e) * (2.0 * e)));
      grow(worst_scaled, weyl_block_residual(e, a) / 1e-12);
    }
    char detail[96];
    std::snprintf(detail, sizeof detail,
                  "worst residual at %.3g of its tolerance", worst_scaled);
    report(5, "plane-wave, symmetry, and twistor identities",
           worst_scaled <= 1.0, detail);
  }

  // 6: applying the coordinate inversion twice is +1 on chi, -1 on eta
  {
    oracle::AngleSampler rng(47);
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
      const BlochAngles a = rng.angles();
      for (QubitKind k : {QubitKind::ChiPlus, QubitKind::ChiMinus,
                          QubitKind::EtaPlus, QubitKind::EtaMinus}) {
        const MappingPhase first = parity_phase(k, a);
        const MappingPhase second =
            parity_phase(first.target, discrete_parity(a));
        const bool is_chi =
            k == QubitKind::ChiPlus || k == QubitKind::ChiMinus;
        const cplx want = is_chi ? cplx(1.0) : cplx(-1.0);
        grow(worst, std::abs(first.phase * second.phase - want));
      }
    }
    report_residual(6, "double inversion signs", worst, 1e-12);
  }

  // 7: decoupling dynamics
  {
    oracle::AngleSampler rng(48);
    double worst_aligned = 0.0;
    for (int i = 0; i < 1000; ++i) {
      const BlochAngles a = rng.angles();
      CycleSpec c;
      c.family = kRotations[i % 4];
      c.gate_angles = a;
      c.bath = BathSpec{rng.uniform(0.0, 10.0), a};
      c.tau = rng.uniform(0.0, 10.0);
      c.cycles = 1 + static_cast<int>(rng.uniform(0.0, 19.0));
      grow(worst_aligned, std::abs(dd_cycle(c).fidelity - 1.0));
    }

    // misaligned path cross-checked against the Taylor-series propagator
    double worst_misaligned = 0.0;
    for (int i = 0; i < 200; ++i) {
      CycleSpec c;
      c.family = GateFamily::P1;
      c.gate_angles = BlochAngles(0.5 * kPi, 0.5 * kPi);
      c.bath = BathSpec{rng.uniform(0.1, 10.0), BlochAngles(0.5 * kPi, 0.0)};
      c.tau = rng.uniform(0.0, 10.0);
      c.cycles = 1 + static_cast<int>(rng.uniform(0.0, 19.0));
      const SimResult got = dd_cycle(c);
      const Mat2C p = gate(c.family, c.gate_angles);
      const Mat2C u = oracle::expm(
          cplx(0.0, -c.tau) * bath_hamiltonian(c.bath));
      const Mat2C cycle = p * u * adjoint(p) * u;
      Mat2C total = Mat2C::identity();
      for (int n = 0; n < c.cycles; ++n) total = cycle * total;
      const double ref_fidelity = 0.5 * std::abs(trace(total));
      grow(worst_misaligned, std::abs(got.fidelity - ref_fidelity));
    }

    // finite pulses: deviation from the ideal cycle shrinks with duration
    CycleSpec base;
    base.family = GateFamily::P1;
    base.gate_angles = BlochAngles(0.5 * kPi, 0.0);
    base.bath = BathSpec{1.0, base.gate_angles};
    base.tau = 0.5;
    const Mat2C ideal_total = dd_cycle(base).total_unitary;
    double prev = -1.0;
    bool monotone = true;
    double first_dev = 0.0;
    double last_dev = 0.0;
    for (double d : {1.0, 0.5, 0.25, 0.1, 0.05, 0.025, 0.01}) {
      CycleSpec c = base;
      c.pulse = PulseModel::finite(d);
      const double dev =
          frobenius(dd_cycle(c).total_unitary - ideal_total);
      if (prev >= 0.0 && dev > prev) monotone = false;
      if (prev < 0.0) first_dev = dev;
      last_dev = dev;
      prev = dev;
    }
    if (!(last_dev < first_dev)) monotone = false;

    const bool pass = worst_aligned <= 1e-10 && worst_misaligned <= 1e-9 &&
                      monotone;
    char detail[128];
    std::snprintf(detail, sizeof detail,
                  "aligned %.3g (tol 1e-10), vs oracle %.3g (tol 1e-9), "
                  "finite-pulse monotone %s",
                  worst_aligned, worst_misaligned, monotone ? "yes" : "no");
    report(7, "decoupling dynamics", pass, detail);
  }

  // 8: matrix exponential against an independent Taylor oracle
  {
    oracle::AngleSampler rng(49);
    double worst_exp = 0.0;
    double worst_round = 0.0;
    for (int i = 0; i < 1000; ++i) {
      const Vec3R n = normalized(Vec3R{rng.uniform(-1.0, 1.0),
                                       rng.uniform(-1.0, 1.0),
                                       rng.uniform(-1.0, 1.0)});
      const double c = rng.uniform(-10.0, 10.0);
      grow(worst_exp,
           frobenius(exp_pauli(c, n) - oracle::exp_pauli_ref(c, n)));
      const double angle = rng.uniform(0.05, kPi - 0.05);
      const AxisAngle aa = su2_axis_angle(exp_pauli(angle, n));
      grow(worst_round, std::abs(aa.angle - angle));
      grow(worst_round, norm(aa.axis - n));
    }
    const bool pass = worst_exp <= 1e-12 && worst_round <= 1e-10;
    char detail[96];
    std::snprintf(detail, sizeof detail,
                  "vs oracle %.3g (tol 1e-12), round trip %.3g (tol 1e-10)",
                  worst_exp, worst_round);
    report(8, "exponential map and its inverse", pass, detail);
  }

  // 9: command-line contract
  {
    const auto t0 = std::chrono::steady_clock::now();
    const cli::Result first = cli::run("verify --samples 1000 --seed 42");
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    const cli::Result second = cli::run("verify --samples 1000 --seed 42");
    const bool deterministic =
        !first.out.empty() && first.out == second.out;

    bool goldens = true;
    const struct {
      const char* args;
      const char* golden;
    } cases[] = {
        {"gate --family P1 --phi 0 --format csv", "/gate_p1_phi0.csv"},
        {"gate --family P2 --theta 1.5707963267948966 --format pretty",
         "/gate_p2_half_pi.pretty"},
        {"gate --family P1 --phi 0 --format json", "/gate_p1_phi0.json"},
    };
    for (const auto& c : cases) {
      const cli::Result r = cli::run(c.args);
      if (r.exit_code != 0 ||
          r.out != cli::read_file(std::string(GOLDEN_DIR) + c.golden)) {
        goldens = false;
      }
    }

    const cli::Result bad = cli::run("gate --family BAD --phi 0");
    const bool usage_ok = bad.exit_code == 2 && bad.out.empty();

    const bool pass = first.exit_code == 0 && seconds < 5.0 &&
                      deterministic && goldens && usage_ok;
    char detail[160];
    std::snprintf(detail, sizeof detail,
                  "exit %d in %.2fs, rerun identical %s, goldens %s, "
                  "usage error %s",
                  first.exit_code, seconds, deterministic ? "yes" : "no",
                  goldens ? "yes" : "no", usage_ok ? "yes" : "no");
    report(9, "command-line contract", pass, detail);
  }

  std::printf("%d of 9 criteria passed\n", 9 - failures);
  return failures == 0 ? 0 : 1;
}

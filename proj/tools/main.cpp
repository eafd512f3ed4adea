#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "blochgate/decoupling.hpp"
#include "blochgate/gates.hpp"
#include "blochgate/linalg.hpp"
#include "blochgate/so3.hpp"
#include "blochgate/spinors.hpp"
#include "blochgate/verify.hpp"
#include "blochgate/weyl.hpp"

namespace {

using blochgate::BathSpec;
using blochgate::BlochAngles;
using blochgate::cplx;
using blochgate::CycleSpec;
using blochgate::GateFamily;
using blochgate::Mat2C;
using blochgate::PulseModel;
using blochgate::QubitKind;
using blochgate::Tolerance;
using blochgate::Vec3R;
using json = nlohmann::ordered_json;

// Canonicalize -0 so formatting is independent of how a zero was produced.
double canon(double x) { return x == 0.0 ? 0.0 : x; }

std::string fmt_real(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", canon(x));
  return buf;
}

std::string fmt_short(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", canon(x));
  return buf;
}

std::string fmt_cplx(cplx z) {
  return "[" + fmt_real(z.real()) + ", " + fmt_real(z.imag()) + "]";
}

std::string fmt_matrix_row(const Mat2C& m, int r) {
  return "[" + fmt_cplx(m(r, 0)) + ", " + fmt_cplx(m(r, 1)) + "]";
}

json json_cplx(cplx z) { return json::array({canon(z.real()), canon(z.imag())}); }

json json_mat2(const Mat2C& m) {
  return json::array({json::array({json_cplx(m(0, 0)), json_cplx(m(0, 1))}),
                      json::array({json_cplx(m(1, 0)), json_cplx(m(1, 1))})});
}

json json_vec3(Vec3R v) {
  return json::array({canon(v.x), canon(v.y), canon(v.z)});
}

/// Emits the assembled payload to --out or stdout. Returns the exit code.
int emit(const std::string& payload, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << payload;
    return 0;
  }
  std::ofstream f(out_path, std::ios::binary);
  f << payload;
  f.flush();
  if (!f) {
    std::cerr << "error: cannot write " << out_path << "\n";
    return 1;
  }
  return 0;
}

constexpr double kDegree = blochgate::kPi / 180.0;

struct AngleFlags {
  double theta = 0.0;
  double phi = 0.0;
  bool degrees = false;

  BlochAngles value() const {
    const double s = degrees ? kDegree : 1.0;
    return BlochAngles(s * theta, s * phi);
  }
};

std::vector<QubitKind> action_kinds(GateFamily f) {
  switch (f) {
    case GateFamily::P1:
      return {QubitKind::ChiPlus, QubitKind::ChiMinus, QubitKind::EtaPlus,
              QubitKind::EtaMinus, QubitKind::Zero, QubitKind::One};
    case GateFamily::P2:
    case GateFamily::P4:
    case GateFamily::P2t:
      return {QubitKind::EtaPlus, QubitKind::EtaMinus};
    case GateFamily::P3:
    case GateFamily::P1t:
      return {QubitKind::ChiPlus, QubitKind::ChiMinus};
  }
  return {};
}

// ---------------------------------------------------------------------------
// gate
// ---------------------------------------------------------------------------

int run_gate(const std::string& family_str, const AngleFlags& angles,
             const std::string& format, const std::string& out_path) {
  const GateFamily f = blochgate::parse_family(family_str);
  const BlochAngles a = angles.value();
  const Mat2C g = blochgate::gate(f, a);
  const cplx d = blochgate::det(g);
  const bool rotation = blochgate::is_rotation_family(f);
  const Vec3R axis = rotation ? blochgate::rotation_axis(f, a) : Vec3R{};
  struct Row {
    std::string source, target;
    cplx phase;
  };
  std::vector<Row> rows;
  for (QubitKind k : action_kinds(f)) {
    const blochgate::MappingPhase mp = blochgate::gate_action(f, k, a);
    rows.push_back({blochgate::kind_name(mp.source),
                    blochgate::kind_name(mp.target), mp.phase});
  }

  std::string payload;
  if (format == "pretty") {
    payload += "family: " + std::string(blochgate::family_name(f)) + "\n";
    payload += "theta: " + fmt_real(a.theta) + "\n";
    payload += "phi: " + fmt_real(a.phi) + "\n";
    payload += "matrix:\n";
    payload += "  " + fmt_matrix_row(g, 0) + "\n";
    payload += "  " + fmt_matrix_row(g, 1) + "\n";
    payload += "determinant: " + fmt_cplx(d) + "\n";
    if (rotation) {
      payload += "axis: [" + fmt_real(axis.x) + ", " + fmt_real(axis.y) +
                 ", " + fmt_real(axis.z) + "]\n";
    } else {
      payload += "axis: none (determinant -1, not a rotation)\n";
    }
    payload += "action:\n";
    for (const Row& r : rows) {
      payload += "  " + r.source + " -> " + r.target + "  phase " +
                 fmt_cplx(r.phase) + "\n";
    }
  } else if (format == "csv") {
    payload += "field,re,im\n";
    payload += "family," + std::string(blochgate::family_name(f)) + ",\n";
    payload += "theta," + fmt_real(a.theta) + ",\n";
    payload += "phi," + fmt_real(a.phi) + ",\n";
    for (int r = 0; r < 2; ++r) {
      for (int c = 0; c < 2; ++c) {
        payload += "m" + std::to_string(r) + std::to_string(c) + "," +
                   fmt_real(g(r, c).real()) + "," + fmt_real(g(r, c).imag()) +
                   "\n";
      }
    }
    payload += "det," + fmt_real(d.real()) + "," + fmt_real(d.imag()) + "\n";
    if (rotation) {
      payload += "axis_x," + fmt_real(axis.x) + ",\n";
      payload += "axis_y," + fmt_real(axis.y) + ",\n";
      payload += "axis_z," + fmt_real(axis.z) + ",\n";
    }
    for (const Row& r : rows) {
      payload += "action:" + r.source + "->" + r.target + "," +
                 fmt_real(r.phase.real()) + "," + fmt_real(r.phase.imag()) +
                 "\n";
    }
  } else {  // json
    json j;
    j["command"] = "gate";
    j["family"] = blochgate::family_name(f);
    j["theta"] = canon(a.theta);
    j["phi"] = canon(a.phi);
    j["matrix"] = json_mat2(g);
    j["determinant"] = json_cplx(d);
    j["axis"] = rotation ? json_vec3(axis) : json();
    json actions = json::array();
    for (const Row& r : rows) {
      actions.push_back(
          {{"source", r.source}, {"target", r.target}, {"phase", json_cplx(r.phase)}});
    }
    j["action"] = actions;
    payload = j.dump(2) + "\n";
  }
  return emit(payload, out_path);
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

int run_verify(int samples, std::uint64_t seed, std::optional<double> tol,
               const std::string& format, const std::string& out_path) {
  const blochgate::VerifyReport report =
      blochgate::run_verification(samples, seed, tol);

  std::string payload;
  if (format == "pretty") {
    payload += "verification report\n";
    payload += "samples: " + std::to_string(report.samples) + "\n";
    payload += "seed: " + std::to_string(report.seed) + "\n";
    payload += std::string("tolerance: ") +
               (tol ? fmt_real(*tol) : std::string("per-check defaults")) +
               "\n";
    payload += "checks:\n";
    for (const auto& c : report.checks) {
      char line[160];
      std::snprintf(line, sizeof line,
                    "  [%s] %-32s samples=%-5d max_residual=%-9s tol=%s\n",
                    c.pass ? "PASS" : "FAIL", c.name.c_str(), c.samples,
                    fmt_short(c.max_residual).c_str(),
                    fmt_short(c.tolerance).c_str());
      payload += line;
    }
    payload += "p1 action table:\n";
    for (const auto& r : report.p1_action_table) {
      char line[160];
      std::snprintf(line, sizeof line,
                    "  [%s] %-5s -> %-5s expected %-11s max_deviation=%s\n",
                    r.pass ? "PASS" : "FAIL", r.source.c_str(),
                    r.target.c_str(), r.expected_phase.c_str(),
                    fmt_short(r.max_deviation).c_str());
      payload += line;
    }
    if (!report.notes.empty()) {
      payload += "notes:\n";
      for (const auto& n : report.notes) payload += "  - " + n + "\n";
    }
    payload += std::string("overall: ") + (report.pass ? "PASS" : "FAIL") + "\n";
  } else if (format == "csv") {
    payload += "check,samples,max_residual,tolerance,status\n";
    for (const auto& c : report.checks) {
      payload += c.name + "," + std::to_string(c.samples) + "," +
                 fmt_real(c.max_residual) + "," + fmt_real(c.tolerance) + "," +
                 (c.pass ? "pass" : "fail") + "\n";
    }
    for (const auto& r : report.p1_action_table) {
      payload += "p1_action:" + r.source + "->" + r.target + "," +
                 std::to_string(report.samples) + "," +
                 fmt_real(r.max_deviation) + "," + fmt_real(r.tolerance) +
                 "," + (r.pass ? "pass" : "fail") + "\n";
    }
  } else {  // json
    json j;
    j["command"] = "verify";
    j["samples"] = report.samples;
    j["seed"] = report.seed;
    if (tol) {
      j["tol"] = *tol;
    } else {
      j["tol"] = json();
    }
    json checks = json::array();
    for (const auto& c : report.checks) {
      checks.push_back({{"name", c.name},
                        {"samples", c.samples},
                        {"max_residual", c.max_residual},
                        {"tolerance", c.tolerance},
                        {"pass", c.pass}});
    }
    j["checks"] = checks;
    json table = json::array();
    for (const auto& r : report.p1_action_table) {
      table.push_back({{"source", r.source},
                       {"target", r.target},
                       {"expected_phase", r.expected_phase},
                       {"max_deviation", r.max_deviation},
                       {"tolerance", r.tolerance},
                       {"pass", r.pass}});
    }
    j["p1_action_table"] = table;
    j["notes"] = report.notes;
    j["pass"] = report.pass;
    payload = j.dump(2) + "\n";
  }
  const int emit_rc = emit(payload, out_path);
  if (emit_rc != 0) return emit_rc;
  return report.pass ? 0 : 1;
}

// ---------------------------------------------------------------------------
// dd
// ---------------------------------------------------------------------------

struct DdFlags {
  std::string family = "P1";
  AngleFlags gate_angles;
  double bath_theta = 0.0;
  double bath_phi = 0.0;
  double bath_mag = 1.0;
  double tau = 1.0;
  int cycles = 1;
  std::string pulse = "ideal";
  double pulse_duration = 0.1;

  CycleSpec spec() const {
    CycleSpec c;
    c.family = blochgate::parse_family(family);
    c.gate_angles = gate_angles.value();
    const double s = gate_angles.degrees ? kDegree : 1.0;
    c.bath = BathSpec{bath_mag, BlochAngles(s * bath_theta, s * bath_phi)};
    c.tau = tau;
    c.cycles = cycles;
    if (pulse == "ideal") {
      c.pulse = PulseModel::ideal();
    } else if (pulse == "finite") {
      c.pulse = PulseModel::finite(pulse_duration);
    } else {
      throw std::invalid_argument("--pulse must be ideal or finite");
    }
    return c;
  }
};

int run_dd(const DdFlags& flags, const std::string& format,
           const std::string& out_path) {
  const CycleSpec c = flags.spec();
  const blochgate::SimResult r = blochgate::dd_cycle(c);

  std::string payload;
  if (format == "pretty") {
    payload += "family: " + std::string(blochgate::family_name(c.family)) + "\n";
    payload += "gate theta: " + fmt_real(c.gate_angles.theta) + "\n";
    payload += "gate phi: " + fmt_real(c.gate_angles.phi) + "\n";
    payload += "bath theta: " + fmt_real(c.bath.angles.theta) + "\n";
    payload += "bath phi: " + fmt_real(c.bath.angles.phi) + "\n";
    payload += "bath magnitude: " + fmt_real(c.bath.magnitude) + "\n";
    payload += "tau: " + fmt_real(c.tau) + "\n";
    payload += "cycles: " + std::to_string(c.cycles) + "\n";
    payload += std::string("pulse: ") +
               (c.pulse.kind == PulseModel::Kind::Ideal ? "ideal" : "finite") +
               "\n";
    if (c.pulse.kind == PulseModel::Kind::Finite) {
      payload += "pulse duration: " + fmt_real(c.pulse.duration) + "\n";
    }
    payload += "fidelity: " + fmt_real(r.fidelity) + "\n";
    payload += "residual: " + fmt_real(r.residual) + "\n";
    payload += "total unitary:\n";
    payload += "  " + fmt_matrix_row(r.total_unitary, 0) + "\n";
    payload += "  " + fmt_matrix_row(r.total_unitary, 1) + "\n";
  } else if (format == "csv") {
    payload += "field,re,im\n";
    payload += "fidelity," + fmt_real(r.fidelity) + ",\n";
    payload += "residual," + fmt_real(r.residual) + ",\n";
    for (int row = 0; row < 2; ++row) {
      for (int col = 0; col < 2; ++col) {
        const cplx z = r.total_unitary(row, col);
        payload += "u" + std::to_string(row) + std::to_string(col) + "," +
                   fmt_real(z.real()) + "," + fmt_real(z.imag()) + "\n";
      }
    }
  } else {  // json
    json j;
    j["command"] = "dd";
    j["family"] = blochgate::family_name(c.family);
    j["gate_theta"] = canon(c.gate_angles.theta);
    j["gate_phi"] = canon(c.gate_angles.phi);
    j["bath_theta"] = canon(c.bath.angles.theta);
    j["bath_phi"] = canon(c.bath.angles.phi);
    j["bath_mag"] = canon(c.bath.magnitude);
    j["tau"] = canon(c.tau);
    j["cycles"] = c.cycles;
    j["pulse"] =
        c.pulse.kind == PulseModel::Kind::Ideal ? "ideal" : "finite";
    if (c.pulse.kind == PulseModel::Kind::Finite) {
      j["pulse_duration"] = c.pulse.duration;
    }
    j["fidelity"] = canon(r.fidelity);
    j["residual"] = canon(r.residual);
    j["total_unitary"] = json_mat2(r.total_unitary);
    payload = j.dump(2) + "\n";
  }
  return emit(payload, out_path);
}

// ---------------------------------------------------------------------------
// sweep
// ---------------------------------------------------------------------------

int run_sweep(const DdFlags& flags, const std::string& parameter, double from,
              double to, int steps, const std::string& out_path) {
  const CycleSpec base = flags.spec();
  double lo = from;
  double hi = to;
  if (flags.gate_angles.degrees &&
      (parameter == "bath_theta" || parameter == "bath_phi")) {
    lo *= kDegree;
    hi *= kDegree;
  }
  const std::vector<blochgate::SweepRow> rows =
      blochgate::sweep(base, parameter, lo, hi, steps);
  std::string payload = "param,value,fidelity,residual\n";
  for (const auto& r : rows) {
    payload += parameter + "," + fmt_real(r.value) + "," +
               fmt_real(r.fidelity) + "," + fmt_real(r.residual) + "\n";
  }
  return emit(payload, out_path);
}

// ---------------------------------------------------------------------------
// weyl
// ---------------------------------------------------------------------------

int run_weyl(double energy, const AngleFlags& angles,
             const std::string& family_str, double tol,
             const std::string& format, const std::string& out_path) {
  if (energy <= 0.0) {
    throw std::invalid_argument("--energy must be > 0");
  }
  const GateFamily f = blochgate::parse_family(family_str);
  if (!blochgate::is_rotation_family(f)) {
    throw std::invalid_argument("weyl: rotation families only (P1..P4)");
  }
  const BlochAngles a = angles.value();
  const Mat2C sp = blochgate::four_momentum_matrix(energy, a).m;
  const cplx d = blochgate::det(sp);
  const cplx tr = blochgate::trace(sp);
  const double res_plus =
      blochgate::weyl_residual(blochgate::plane_wave(a, energy, +1, +1));
  const double res_minus =
      blochgate::weyl_residual(blochgate::plane_wave(a, energy, -1, +1));
  const double res_symmetry = blochgate::unitary_symmetry_check(f, a);
  const auto [tw_direct, tw_conjugated] =
      blochgate::twistor_check(energy, a, f);
  const double res_clifford =
      blochgate::clifford_residual(blochgate::gamma_weyl());
  const double res_blocks = blochgate::weyl_block_residual(energy, a);
  const double det_scale = 4.0 * energy * energy;
  const bool pass = res_plus <= tol && res_minus <= tol &&
                    res_symmetry <= tol && tw_direct <= tol &&
                    tw_conjugated <= tol && res_clifford <= tol &&
                    res_blocks <= tol && std::abs(d) <= tol * det_scale;

  std::string payload;
  if (format == "pretty") {
    payload += "energy: " + fmt_real(energy) + "\n";
    payload += "theta: " + fmt_real(a.theta) + "\n";
    payload += "phi: " + fmt_real(a.phi) + "\n";
    payload += "family: " + std::string(blochgate::family_name(f)) + "\n";
    payload += "sigma_p matrix:\n";
    payload += "  " + fmt_matrix_row(sp, 0) + "\n";
    payload += "  " + fmt_matrix_row(sp, 1) + "\n";
    payload += "trace: " + fmt_cplx(tr) + "\n";
    payload += "determinant: " + fmt_cplx(d) + "\n";
    payload += "residuals:\n";
    payload += "  chi+ helicity: " + fmt_real(res_plus) + "\n";
    payload += "  chi- helicity: " + fmt_real(res_minus) + "\n";
    payload += "  unitary symmetry: " + fmt_real(res_symmetry) + "\n";
    payload += "  twistor direct: " + fmt_real(tw_direct) + "\n";
    payload += "  twistor conjugated: " + fmt_real(tw_conjugated) + "\n";
    payload += "  clifford: " + fmt_real(res_clifford) + "\n";
    payload += "  block decoupling: " + fmt_real(res_blocks) + "\n";
    payload += std::string("status: ") + (pass ? "PASS" : "FAIL") + "\n";
  } else if (format == "csv") {
    payload += "field,re,im\n";
    payload += "energy," + fmt_real(energy) + ",\n";
    for (int r = 0; r < 2; ++r) {
      for (int c = 0; c < 2; ++c) {
        payload += "sigma_p" + std::to_string(r) + std::to_string(c) + "," +
                   fmt_real(sp(r, c).real()) + "," +
                   fmt_real(sp(r, c).imag()) + "\n";
      }
    }
    payload += "trace," + fmt_real(tr.real()) + "," + fmt_real(tr.imag()) + "\n";
    payload += "det," + fmt_real(d.real()) + "," + fmt_real(d.imag()) + "\n";
    payload += "res_chi_plus," + fmt_real(res_plus) + ",\n";
    payload += "res_chi_minus," + fmt_real(res_minus) + ",\n";
    payload += "res_unitary_symmetry," + fmt_real(res_symmetry) + ",\n";
    payload += "res_twistor_direct," + fmt_real(tw_direct) + ",\n";
    payload += "res_twistor_conjugated," + fmt_real(tw_conjugated) + ",\n";
    payload += "res_clifford," + fmt_real(res_clifford) + ",\n";
    payload += "res_block_decoupling," + fmt_real(res_blocks) + ",\n";
    payload += std::string("status,") + (pass ? "pass" : "fail") + ",\n";
  } else {  // json
    json j;
    j["command"] = "weyl";
    j["energy"] = canon(energy);
    j["theta"] = canon(a.theta);
    j["phi"] = canon(a.phi);
    j["family"] = blochgate::family_name(f);
    j["sigma_p"] = json_mat2(sp);
    j["trace"] = json_cplx(tr);
    j["determinant"] = json_cplx(d);
    j["residuals"] = {{"chi_plus_helicity", res_plus},
                      {"chi_minus_helicity", res_minus},
                      {"unitary_symmetry", res_symmetry},
                      {"twistor_direct", tw_direct},
                      {"twistor_conjugated", tw_conjugated},
                      {"clifford", res_clifford},
                      {"block_decoupling", res_blocks}};
    j["pass"] = pass;
    payload = j.dump(2) + "\n";
  }
  const int emit_rc = emit(payload, out_path);
  if (emit_rc != 0) return emit_rc;
  return pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Coordinate-dependent single-qubit NOT gates: construction, "
               "verification, and dynamical-decoupling simulation"};
  app.require_subcommand(1);

  const std::vector<std::string> formats = {"csv", "json", "pretty"};

  // gate
  auto* gate_cmd = app.add_subcommand("gate", "Render a gate family at given angles");
  std::string gate_family;
  AngleFlags gate_angles;
  std::string gate_format = "pretty";
  std::string gate_out;
  gate_cmd->add_option("--family", gate_family, "Gate family (P1, P2, P3, P4, P1t, P2t)")->required();
  gate_cmd->add_option("--theta", gate_angles.theta, "Polar angle (radians)");
  gate_cmd->add_option("--phi", gate_angles.phi, "Azimuthal angle (radians)");
  gate_cmd->add_flag("--degrees", gate_angles.degrees, "Interpret angles as degrees");
  gate_cmd->add_option("--format", gate_format, "Output format")
      ->check(CLI::IsMember(formats));
  gate_cmd->add_option("--out", gate_out, "Write output to a file");

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "Run the full property-verification suite");
  int verify_samples = 100;
  std::uint64_t verify_seed = 42;
  double verify_tol = 0.0;
  std::string verify_format = "pretty";
  std::string verify_out;
  verify_cmd->add_option("--samples", verify_samples, "Random samples per check")
      ->check(CLI::PositiveNumber);
  verify_cmd->add_option("--seed", verify_seed, "RNG seed");
  auto* tol_opt = verify_cmd->add_option(
      "--tol", verify_tol, "Override every check's tolerance");
  verify_cmd->add_option("--format", verify_format, "Output format")
      ->check(CLI::IsMember(formats));
  verify_cmd->add_option("--out", verify_out, "Write output to a file");

  // dd
  auto* dd_cmd = app.add_subcommand("dd", "Simulate a dynamical-decoupling cycle sequence");
  DdFlags dd_flags;
  std::string dd_format = "pretty";
  std::string dd_out;
  dd_cmd->add_option("--family", dd_flags.family, "Pulse gate family (P1..P4)");
  dd_cmd->add_option("--theta", dd_flags.gate_angles.theta, "Gate polar angle");
  dd_cmd->add_option("--phi", dd_flags.gate_angles.phi, "Gate azimuthal angle");
  dd_cmd->add_option("--bath-theta", dd_flags.bath_theta, "Bath polar angle");
  dd_cmd->add_option("--bath-phi", dd_flags.bath_phi, "Bath azimuthal angle");
  dd_cmd->add_option("--bath-mag", dd_flags.bath_mag, "Bath magnitude |B|");
  dd_cmd->add_option("--tau", dd_flags.tau, "Free-evolution interval");
  dd_cmd->add_option("--cycles", dd_flags.cycles, "Cycle count")
      ->check(CLI::PositiveNumber);
  dd_cmd->add_option("--pulse", dd_flags.pulse, "Pulse model (ideal, finite)")
      ->check(CLI::IsMember({"ideal", "finite"}));
  dd_cmd->add_option("--pulse-duration", dd_flags.pulse_duration,
                     "Finite pulse duration");
  dd_cmd->add_flag("--degrees", dd_flags.gate_angles.degrees,
                   "Interpret angles as degrees");
  dd_cmd->add_option("--format", dd_format, "Output format")
      ->check(CLI::IsMember(formats));
  dd_cmd->add_option("--out", dd_out, "Write output to a file");

  // sweep
  auto* sweep_cmd = app.add_subcommand("sweep", "Sweep one cycle parameter, emitting CSV");
  DdFlags sweep_flags;
  std::string sweep_param;
  double sweep_from = 0.0;
  double sweep_to = 0.0;
  int sweep_steps = 50;
  std::string sweep_out;
  sweep_cmd->add_option("--param", sweep_param, "Swept parameter")
      ->required()
      ->check(CLI::IsMember(
          {"tau", "bath_theta", "bath_phi", "bath_mag", "pulse_duration"}));
  sweep_cmd->add_option("--from", sweep_from, "Range start")->required();
  sweep_cmd->add_option("--to", sweep_to, "Range end")->required();
  sweep_cmd->add_option("--steps", sweep_steps, "Grid points (>= 2)");
  sweep_cmd->add_option("--family", sweep_flags.family, "Pulse gate family (P1..P4)");
  sweep_cmd->add_option("--theta", sweep_flags.gate_angles.theta, "Gate polar angle");
  sweep_cmd->add_option("--phi", sweep_flags.gate_angles.phi, "Gate azimuthal angle");
  sweep_cmd->add_option("--bath-theta", sweep_flags.bath_theta, "Bath polar angle");
  sweep_cmd->add_option("--bath-phi", sweep_flags.bath_phi, "Bath azimuthal angle");
  sweep_cmd->add_option("--bath-mag", sweep_flags.bath_mag, "Bath magnitude |B|");
  sweep_cmd->add_option("--tau", sweep_flags.tau, "Free-evolution interval");
  sweep_cmd->add_option("--cycles", sweep_flags.cycles, "Cycle count")
      ->check(CLI::PositiveNumber);
  sweep_cmd->add_option("--pulse", sweep_flags.pulse, "Pulse model (ideal, finite)")
      ->check(CLI::IsMember({"ideal", "finite"}));
  sweep_cmd->add_option("--pulse-duration", sweep_flags.pulse_duration,
                        "Finite pulse duration");
  sweep_cmd->add_flag("--degrees", sweep_flags.gate_angles.degrees,
                      "Interpret angles as degrees");
  sweep_cmd->add_option("--out", sweep_out, "Write the CSV to a file");

  // weyl
  auto* weyl_cmd = app.add_subcommand("weyl", "Plane-wave, symmetry, and twistor residuals");
  double weyl_energy = 1.0;
  AngleFlags weyl_angles;
  std::string weyl_family = "P1";
  double weyl_tol = 1e-12;
  std::string weyl_format = "pretty";
  std::string weyl_out;
  weyl_cmd->add_option("--energy", weyl_energy, "Energy E = |p| (> 0)");
  weyl_cmd->add_option("--theta", weyl_angles.theta, "Polar angle");
  weyl_cmd->add_option("--phi", weyl_angles.phi, "Azimuthal angle");
  weyl_cmd->add_option("--family", weyl_family, "Gate family (P1..P4)");
  weyl_cmd->add_option("--tol", weyl_tol, "Residual tolerance");
  weyl_cmd->add_flag("--degrees", weyl_angles.degrees,
                     "Interpret angles as degrees");
  weyl_cmd->add_option("--format", weyl_format, "Output format")
      ->check(CLI::IsMember(formats));
  weyl_cmd->add_option("--out", weyl_out, "Write output to a file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*gate_cmd) {
      return run_gate(gate_family, gate_angles, gate_format, gate_out);
    }
    if (*verify_cmd) {
      std::optional<double> tol;
      if (tol_opt->count() > 0) tol = verify_tol;
      return run_verify(verify_samples, verify_seed, tol, verify_format,
                        verify_out);
    }
    if (*dd_cmd) {
      return run_dd(dd_flags, dd_format, dd_out);
    }
    if (*sweep_cmd) {
      return run_sweep(sweep_flags, sweep_param, sweep_from, sweep_to,
                       sweep_steps, sweep_out);
    }
    if (*weyl_cmd) {
      return run_weyl(weyl_energy, weyl_angles, weyl_family, weyl_tol,
                      weyl_format, weyl_out);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

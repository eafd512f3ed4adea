#ifndef BLOCHGATE_VERIFY_HPP
#define BLOCHGATE_VERIFY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace blochgate {

/// One property checked over a batch of seeded-random samples.
struct CheckResult {
  std::string name;
  int samples = 0;        // sample draws this check consumed
  double max_residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

/// One row of the first family's action table: the target state and the
/// expected unit phase (symbolic in phi), with the worst deviation of the
/// computed phase from the expected one across samples.
struct ActionRow {
  std::string source;
  std::string target;
  std::string expected_phase;
  double max_deviation = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct VerifyReport {
  int samples = 0;
  std::uint64_t seed = 0;
  std::optional<double> tol_override;
  std::vector<CheckResult> checks;
  std::vector<ActionRow> p1_action_table;
  std::vector<std::string> notes;  // informational, not pass/fail
  bool pass = false;
};

/// Runs every library property over `samples` seeded-random configurations
/// (angles uniform on the sphere: theta = arccos(1 - 2u), phi = 2 pi v).
/// Each check carries its own tolerance unless tol_override is given, in
/// which case every check uses the override. Deterministic for a fixed
/// (samples, seed). Throws std::invalid_argument for samples < 1.
VerifyReport run_verification(int samples, std::uint64_t seed,
                              std::optional<double> tol_override = {});

}  // namespace blochgate

#endif

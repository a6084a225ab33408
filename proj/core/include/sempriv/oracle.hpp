#ifndef SEMPRIV_ORACLE_HPP
#define SEMPRIV_ORACLE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sempriv/channel.hpp"
#include "sempriv/joint_table.hpp"

namespace sempriv {

struct OracleOptions {
  std::size_t u_size = 0;   // 0 picks |S||F| + 1
  int restarts = 64;        // random restarts; structured starts run in addition
  int max_iters = 5000;     // per-start cap on row updates
  std::uint64_t seed = 0;
  std::optional<Channel> warm_start;  // extra deterministic start, padded to u_size
  bool include_efrl_seed = true;      // seed with the tuned EFRL channel when it fits
};

/// Best feasible point found for the leakage-constrained maximization of
/// I(U;F) over channels P(U|S,F) with |U| = u_size and I(U;S) <= epsilon.
/// Any feasible point is a lower bound on the supremum; optimality is only
/// approximated, feasibility is certified.
struct OracleResult {
  double value = 0.0;  // I(U;F) of the best feasible channel
  Channel channel;
  double leakage = 0.0;
  int restarts_used = 0;
  std::uint64_t seed = 0;
  std::size_t u_size = 0;
};

/// Multi-start coordinate ascent on the channel's row simplices with an
/// exact penalty for the leakage constraint and a feasibility-restoring
/// projection toward the constant channel. Deterministic for fixed inputs:
/// every start derives its stream from (seed, start index) and ties go to the
/// earliest start. Guards: |S|*|F| <= 16, u_size <= 64.
OracleResult estimate_h_eps(const JointTable& joint, const std::string& s_axis,
                            const std::string& f_axis, double epsilon,
                            const OracleOptions& opts = {});

struct SandwichRow {
  double epsilon = 0.0;
  double lower = 0.0;     // max(L_h1, [L_h2]^+, 0), or 0 past H(S)
  double estimate = 0.0;
  double upper = 0.0;     // H(F|S) + eps
  double leakage = 0.0;
  double lower_margin = 0.0;  // estimate - (lower - 1e-6)
  double upper_margin = 0.0;  // (upper + 1e-9) - estimate
  bool ok = false;
};

struct SandwichReport {
  std::vector<SandwichRow> rows;
  bool passed = false;
};

/// Run the oracle across an epsilon grid (ascending, warm-started) and check
/// the two-sided bound at every point. Violations are reported per-epsilon
/// with their margins.
SandwichReport verify_sandwich(const JointTable& joint, const std::string& s_axis,
                               const std::string& f_axis, std::vector<double> eps_grid,
                               const OracleOptions& opts = {});

}  // namespace sempriv

#endif

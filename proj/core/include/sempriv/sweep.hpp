#ifndef SEMPRIV_SWEEP_HPP
#define SEMPRIV_SWEEP_HPP

#include <optional>
#include <string>
#include <vector>

#include "sempriv/bounds.hpp"
#include "sempriv/joint_table.hpp"

namespace sempriv {

/// One epsilon grid point of a bound sweep. Utility columns are filled only
/// for three-variable joints, mechanism columns only when requested.
struct SweepRow {
  double epsilon = 0.0;
  double L_h1 = 0.0;
  std::optional<double> L_h2_clamped;
  double upper_h_eps = 0.0;
  std::optional<double> util_L1;
  std::optional<double> util_L2_clamped;
  std::optional<double> util_upper;
  std::optional<double> gap;
  std::optional<double> mechanism_leakage;
  std::optional<double> mechanism_utility_task;
};

/// Grid "start:step:end", inclusive of end up to round-off. step > 0.
std::vector<double> parse_sweep_spec(const std::string& spec);

/// Evaluate the bound formulas on a grid. The joint is over (S,F) or (S,F,H);
/// with_mechanism additionally tunes the constructive disclosure channel to
/// each epsilon and records its achieved leakage and task utility (requires a
/// task axis).
std::vector<SweepRow> bounds_sweep(const JointTable& joint, const std::string& s_axis,
                                   const std::string& f_axis,
                                   const std::optional<std::string>& h_axis,
                                   const std::vector<double>& eps_grid, bool with_mechanism);

/// Fixed-column CSV with header; "%.12g" number format, byte-stable.
std::string sweep_to_csv(const std::vector<SweepRow>& rows);

/// Minimal line plot of the three bound curves (lower 1, lower 2 clamped,
/// upper) against epsilon; utility curves when present, disclosure-value
/// curves otherwise.
std::string sweep_to_svg(const std::vector<SweepRow>& rows);

/// Deterministic "%.12g" rendering used by CSV/SVG output.
std::string format_double(double v);

}  // namespace sempriv

#endif

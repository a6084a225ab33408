#include "sempriv/bounds.hpp"

#include <algorithm>
#include <cmath>

#include "sempriv/errors.hpp"
#include "sempriv/info.hpp"

namespace sempriv {

namespace {
constexpr double kTightTol = 1e-10;
constexpr double kDegenerateTol = 1e-12;
}  // namespace

BoundsReport theorem1_bounds(const JointTable& joint, const std::string& s_axis,
                             const std::string& f_axis, double epsilon) {
  if (!(epsilon >= 0.0)) {
    throw validation_error("theorem1_bounds: epsilon must be non-negative");
  }
  JointTable j2 = marginalize(joint, {s_axis, f_axis});

  BoundsReport r;
  r.epsilon = epsilon;
  r.H_S = entropy(marginal_pmf(j2, s_axis));
  r.H_F_given_S = conditional_entropy(j2, {f_axis}, {s_axis});
  r.H_S_given_F = conditional_entropy(j2, {s_axis}, {f_axis});
  r.I_S_F = mutual_information(j2, {s_axis}, {f_axis});

  r.L_h1 = (r.H_F_given_S - r.H_S_given_F) + epsilon;
  r.upper_h_eps = r.H_F_given_S + epsilon;
  r.tight = r.H_S_given_F <= kTightTol || r.H_F_given_S <= kTightTol;

  if (r.H_S <= kDegenerateTol) {
    r.degenerate_s = true;  // alpha undefined, second bound not evaluable
  } else {
    const double alpha = epsilon / r.H_S;
    r.alpha = alpha;
    // Same association as L_h1 so that alpha = 1 reproduces it bit-for-bit.
    r.L_h2 = ((r.H_F_given_S - alpha * r.H_S_given_F) + epsilon) -
             (1.0 - alpha) * (std::log(r.I_S_F + 1.0) + 4.0);
    r.L_h2_clamped = std::max(*r.L_h2, 0.0);
  }
  return r;
}

BoundsReport utility_bounds(const JointTable& joint, const std::string& s_axis,
                            const std::string& f_axis, const std::string& h_axis, double epsilon,
                            std::optional<double> h_eps_estimate) {
  BoundsReport r = theorem1_bounds(joint, s_axis, f_axis, epsilon);
  const double h_f_given_h = conditional_entropy(joint, {f_axis}, {h_axis});
  const double h_h_given_f = conditional_entropy(joint, {h_axis}, {f_axis});
  r.H_F_given_H = h_f_given_h;
  r.H_H_given_F = h_h_given_f;

  r.util_L1 = r.L_h1 - h_f_given_h;
  if (r.L_h2) {
    r.util_L2 = *r.L_h2 - h_f_given_h;
    r.util_L2_clamped = std::max(*r.util_L2, 0.0);
  }
  if (h_eps_estimate) r.util_L3 = *h_eps_estimate - h_f_given_h;
  r.util_upper = r.upper_h_eps + h_h_given_f;
  r.gap = h_f_given_h + h_h_given_f;
  return r;
}

double corollary2_upper(const SemanticConstraints& c, double h_of_task, double epsilon) {
  if (c.gamma1 > c.gamma2) {
    throw validation_error("corollary2_upper: gamma1 > gamma2");
  }
  return epsilon + c.gamma2 - c.gamma1 + h_of_task;
}

ConstraintReport check_semantic_constraints(const JointTable& joint, const std::string& f_axis,
                                            const std::string& h_axis,
                                            const SemanticConstraints& c) {
  if (c.gamma1 > c.gamma2) {
    throw validation_error("check_semantic_constraints: gamma1 > gamma2");
  }
  ConstraintReport rep;
  rep.I_F_H = mutual_information(joint, {f_axis}, {h_axis});
  rep.H_H = entropy(marginal_pmf(joint, h_axis));
  rep.H_F = entropy(marginal_pmf(joint, f_axis));
  rep.gamma1_ok = c.gamma1 <= rep.I_F_H;
  rep.gamma2_ok = rep.I_F_H <= c.gamma2;
  rep.gamma2_lt_H_H = c.gamma2 < rep.H_H;
  rep.gamma3_ok = rep.H_F <= c.gamma3;
  return rep;
}

}  // namespace sempriv

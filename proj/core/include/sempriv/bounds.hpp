#ifndef SEMPRIV_BOUNDS_HPP
#define SEMPRIV_BOUNDS_HPP

#include <optional>
#include <string>

#include "sempriv/joint_table.hpp"

namespace sempriv {

/// Encoder-side constraints on the semantic: gamma1 <= I(F;H) <= gamma2 and a
/// compression budget gamma3. All in nats.
struct SemanticConstraints {
  double gamma1 = 0.0;
  double gamma2 = 0.0;
  double gamma3 = 0.0;
};

/// Closed-form lower/upper bounds on the leakage-constrained disclosure value
/// and on the task utility, all in nats, for one (joint, epsilon) pair.
/// Utility fields are present only when a task axis was supplied.
struct BoundsReport {
  double epsilon = 0.0;
  std::optional<double> alpha;        // epsilon / H(S); absent when H(S)=0
  double L_h1 = 0.0;                  // H(F|S) - H(S|F) + eps
  std::optional<double> L_h2;         // H(F|S) - a H(S|F) + eps - (1-a)(ln(I(S;F)+1)+4)
  std::optional<double> L_h2_clamped; // max(L_h2, 0)
  double upper_h_eps = 0.0;           // H(F|S) + eps
  bool tight = false;                 // H(S|F)=0 or H(F|S)=0: upper bound is achieved
  bool degenerate_s = false;          // H(S)=0

  std::optional<double> util_L1;         // L_h1 - H(F|H)
  std::optional<double> util_L2;         // L_h2 - H(F|H)
  std::optional<double> util_L2_clamped; // max(util_L2, 0)
  std::optional<double> util_L3;         // h_eps estimate - H(F|H), when supplied
  std::optional<double> util_upper;      // H(F|S) + eps + H(H|F)
  std::optional<double> gap;             // H(F|H) + H(H|F)
  std::optional<double> corollary2_upper;

  // Measured ingredients, for reporting and cross-checks.
  double H_S = 0.0;
  double H_F_given_S = 0.0;
  double H_S_given_F = 0.0;
  double I_S_F = 0.0;
  std::optional<double> H_F_given_H;
  std::optional<double> H_H_given_F;
};

/// Bounds on the disclosure value for a two-variable joint over (S, F).
BoundsReport theorem1_bounds(const JointTable& joint, const std::string& s_axis,
                             const std::string& f_axis, double epsilon);

/// Full report including the task-utility bounds, for a joint over (S, F, H).
/// h_eps_estimate, when given, fills util_L3.
BoundsReport utility_bounds(const JointTable& joint, const std::string& s_axis,
                            const std::string& f_axis, const std::string& h_axis, double epsilon,
                            std::optional<double> h_eps_estimate = std::nullopt);

/// Semantics-free utility ceiling: eps + gamma2 - gamma1 + H(h).
double corollary2_upper(const SemanticConstraints& c, double h_of_task, double epsilon);

struct ConstraintReport {
  double I_F_H = 0.0;
  double H_H = 0.0;
  double H_F = 0.0;
  bool gamma1_ok = false;  // gamma1 <= I(F;H)
  bool gamma2_ok = false;  // I(F;H) <= gamma2
  bool gamma2_lt_H_H = false;
  bool gamma3_ok = false;  // H(F) <= gamma3
  // The compression constraint is checked as an entropy bound on the semantic.
  bool gamma3_interpreted_as_entropy = true;
};

ConstraintReport check_semantic_constraints(const JointTable& joint, const std::string& f_axis,
                                            const std::string& h_axis,
                                            const SemanticConstraints& c);

}  // namespace sempriv

#endif

#ifndef SEMPRIV_INFO_HPP
#define SEMPRIV_INFO_HPP

#include <string>
#include <vector>

#include "sempriv/joint_table.hpp"

namespace sempriv {

/// Joint entropy H(axes) in nats, computed on the flattened marginal.
double joint_entropy(const JointTable& j, const std::vector<std::string>& axes);

/// H(target | given) in nats. Computed row-wise, so a target that is a
/// deterministic function of the condition yields exactly 0.0. Axis sets must
/// be disjoint and present.
double conditional_entropy(const JointTable& j, const std::vector<std::string>& target,
                           const std::vector<std::string>& given);

/// I(a ; b) = H(a) + H(b) - H(a,b) in nats; round-off below kClampTol is
/// clamped to 0. Axis sets must be disjoint and present.
double mutual_information(const JointTable& j, const std::vector<std::string>& a,
                          const std::vector<std::string>& b);

/// I(a ; b | c) in nats, clamped like mutual_information. Pairwise disjoint.
double conditional_mutual_information(const JointTable& j, const std::vector<std::string>& a,
                                      const std::vector<std::string>& b,
                                      const std::vector<std::string>& c);

}  // namespace sempriv

#endif

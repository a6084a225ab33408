#ifndef SEMPRIV_FRL_HPP
#define SEMPRIV_FRL_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "sempriv/channel.hpp"
#include "sempriv/joint_table.hpp"

namespace sempriv {

/// Functional-representation channel for a two-variable joint: a variable U0
/// independent of S such that F is recovered exactly from (U0, S) by the
/// decoder. Built by laying the conditional CDFs of F given each s on [0,1)
/// and refining at the union of their breakpoints; each refinement cell is one
/// U0 symbol whose probability is the cell length.
struct FrlOutput {
  std::vector<std::string> u_alphabet;   // one label per refinement cell
  std::vector<double> cell_lengths;      // P(U0 = cell), independent of S
  Channel channel;                       // P(U0 | S, F), inputs ordered (S, F)
  std::vector<std::size_t> decoder;      // decoder[cell * |S| + s] = f index
  std::size_t s_size = 0;
  std::size_t f_size = 0;

  std::size_t decode(std::size_t cell, std::size_t s) const { return decoder[cell * s_size + s]; }
};

FrlOutput construct_frl(const JointTable& joint, const std::string& s_axis,
                        const std::string& f_axis);

/// Randomized response over the given alphabet: reports the true symbol with
/// probability p, each other symbol with probability (1-p)/(|S|-1).
/// Requires p in [1/|S|, 1].
Channel randomized_response(const Axis& s_axis, double p,
                            const std::string& output_name = "W");

/// Disclosure channel U = (U0, W) with exact leakage, plus its measured
/// leakage I(U;S) and semantic utility I(U;F).
struct Mechanism {
  Channel channel;            // P(U | S, F)
  double leakage = 0.0;       // I(U;S) on the induced joint
  double utility_semantic = 0.0;  // I(U;F) on the induced joint
  double rr_prob = 1.0;       // truth-telling probability p of the W component
  bool epsilon_clamped = false;   // requested leakage exceeded H(S)
  bool degenerate_s = false;      // H(S) = 0; U = U0 alone
};

/// Attach a randomized response W over S to the FRL output and tune its
/// truth-telling probability by bisection until I((U0,W);S) hits epsilon
/// within 1e-9. W is conditionally independent of (U0,F) given S.
/// epsilon > H(S) is clamped to H(S) and flagged; H(S)=0 returns U=U0 flagged.
Mechanism tune_leakage(const JointTable& joint, const FrlOutput& frl, double epsilon,
                       const std::string& s_axis, const std::string& f_axis);

/// (I(U;F), I(U;H)) of the mechanism on a three-variable joint over (S,F,H).
std::pair<double, double> mechanism_utilities(const JointTable& joint3, const Mechanism& m,
                                              const std::string& f_axis,
                                              const std::string& h_axis);

}  // namespace sempriv

#endif

#ifndef SEMPRIV_CHANNEL_HPP
#define SEMPRIV_CHANNEL_HPP

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "sempriv/joint_table.hpp"

namespace sempriv {

/// Conditional distribution P(output | input tuple): one pmf row per input
/// tuple, rows stored contiguously (input tuples row-major, last input axis
/// fastest). Every row must be a valid pmf over the output alphabet.
class Channel {
 public:
  Channel(std::vector<Axis> input_axes, Axis output_axis, std::vector<double> rows);

  const std::vector<Axis>& input_axes() const noexcept { return input_axes_; }
  const Axis& output_axis() const noexcept { return output_axis_; }
  std::size_t input_count() const noexcept { return n_inputs_; }
  std::size_t output_size() const noexcept { return output_axis_.alphabet.size(); }

  std::span<const double> row(std::size_t input_index) const;
  const std::vector<double>& rows() const noexcept { return rows_; }

 private:
  std::vector<Axis> input_axes_;
  Axis output_axis_;
  std::vector<double> rows_;
  std::size_t n_inputs_;
};

/// Push a joint through a channel: result axes are j's axes followed by the
/// channel output axis. Channel input axes must all be present in j with
/// identical alphabets; the marginal of the result over j's axes is j itself.
JointTable extend_with_channel(const JointTable& j, const Channel& ch);

}  // namespace sempriv

#endif

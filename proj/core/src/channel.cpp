#include "sempriv/channel.hpp"

#include <cmath>
#include <unordered_set>

#include "sempriv/errors.hpp"

namespace sempriv {

Channel::Channel(std::vector<Axis> input_axes, Axis output_axis, std::vector<double> rows)
    : input_axes_(std::move(input_axes)), output_axis_(std::move(output_axis)),
      rows_(std::move(rows)) {
  if (input_axes_.empty()) {
    throw validation_error("channel: needs at least one input axis");
  }
  if (output_axis_.alphabet.empty()) {
    throw validation_error("channel: output alphabet must be non-empty");
  }
  std::unordered_set<std::string> names{output_axis_.name};
  n_inputs_ = 1;
  for (const auto& ax : input_axes_) {
    if (ax.alphabet.empty()) {
      throw validation_error("channel: input axis '" + ax.name + "' has empty alphabet");
    }
    if (!names.insert(ax.name).second) {
      throw validation_error("channel: axis name '" + ax.name + "' is not unique");
    }
    n_inputs_ *= ax.alphabet.size();
  }
  const std::size_t n_out = output_axis_.alphabet.size();
  if (rows_.size() != n_inputs_ * n_out) {
    throw validation_error("channel: expected " + std::to_string(n_inputs_ * n_out) +
                           " entries, got " + std::to_string(rows_.size()));
  }
  for (std::size_t r = 0; r < n_inputs_; ++r) {
    double mass = 0.0;
    for (std::size_t u = 0; u < n_out; ++u) {
      double p = rows_[r * n_out + u];
      if (!(p >= 0.0)) {
        throw validation_error("channel: negative probability in row " + std::to_string(r));
      }
      mass += p;
    }
    if (std::abs(mass - 1.0) > kMassTol) {
      throw validation_error("channel: row " + std::to_string(r) + " mass " +
                             std::to_string(mass) + " not within 1e-12 of 1");
    }
  }
}

std::span<const double> Channel::row(std::size_t input_index) const {
  const std::size_t n_out = output_size();
  return {rows_.data() + input_index * n_out, n_out};
}

JointTable extend_with_channel(const JointTable& j, const Channel& ch) {
  if (j.has_axis(ch.output_axis().name)) {
    throw validation_error("extend: output axis '" + ch.output_axis().name +
                           "' already present in joint");
  }
  // Locate each channel input axis inside the joint; alphabets must match.
  std::vector<std::size_t> input_pos;
  for (const auto& in : ch.input_axes()) {
    std::size_t k = j.axis_index(in.name);
    if (j.axes()[k].alphabet != in.alphabet) {
      throw validation_error("extend: alphabet mismatch on axis '" + in.name + "'");
    }
    input_pos.push_back(k);
  }
  std::vector<std::size_t> in_strides(ch.input_axes().size(), 1);
  for (std::size_t k = ch.input_axes().size(); k-- > 1;) {
    in_strides[k - 1] = in_strides[k] * ch.input_axes()[k].alphabet.size();
  }

  const std::size_t n_out = ch.output_size();
  std::vector<Axis> out_axes = j.axes();
  out_axes.push_back(ch.output_axis());
  std::vector<double> out_cells(j.cell_count() * n_out, 0.0);

  std::vector<std::size_t> coords(j.axis_count(), 0);
  for (std::size_t flat = 0; flat < j.cell_count(); ++flat) {
    std::size_t row_idx = 0;
    for (std::size_t k = 0; k < input_pos.size(); ++k) {
      row_idx += coords[input_pos[k]] * in_strides[k];
    }
    const double mass = j.cells()[flat];
    auto row = ch.row(row_idx);
    for (std::size_t u = 0; u < n_out; ++u) {
      out_cells[flat * n_out + u] = mass * row[u];
    }
    for (std::size_t k = j.axis_count(); k-- > 0;) {
      if (++coords[k] < j.axes()[k].alphabet.size()) break;
      coords[k] = 0;
    }
  }
  return JointTable(std::move(out_axes), std::move(out_cells));
}

}  // namespace sempriv

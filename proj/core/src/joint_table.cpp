#include "sempriv/joint_table.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <unordered_set>

#include "sempriv/errors.hpp"

namespace sempriv {

JointTable::JointTable(std::vector<Axis> axes, std::vector<double> cells)
    : axes_(std::move(axes)), cells_(std::move(cells)) {
  if (axes_.empty()) {
    throw validation_error("joint: needs at least one axis");
  }
  std::unordered_set<std::string> names;
  std::size_t expected = 1;
  for (const auto& ax : axes_) {
    if (ax.alphabet.empty()) {
      throw validation_error("joint: axis '" + ax.name + "' has empty alphabet");
    }
    if (!names.insert(ax.name).second) {
      throw validation_error("joint: duplicate axis name '" + ax.name + "'");
    }
    std::unordered_set<std::string> labels(ax.alphabet.begin(), ax.alphabet.end());
    if (labels.size() != ax.alphabet.size()) {
      throw validation_error("joint: axis '" + ax.name + "' has duplicate symbol labels");
    }
    expected *= ax.alphabet.size();
  }
  if (cells_.size() != expected) {
    throw validation_error("joint: expected " + std::to_string(expected) + " cells, got " +
                           std::to_string(cells_.size()));
  }
  double mass = 0.0;
  for (double c : cells_) {
    if (!(c >= 0.0)) {
      throw validation_error("joint: negative cell " + std::to_string(c));
    }
    mass += c;
  }
  if (std::abs(mass - 1.0) > kMassTol) {
    throw validation_error("joint: total mass " + std::to_string(mass) + " not within 1e-12 of 1");
  }
  strides_.assign(axes_.size(), 1);
  for (std::size_t k = axes_.size(); k-- > 1;) {
    strides_[k - 1] = strides_[k] * axes_[k].alphabet.size();
  }
}

std::size_t JointTable::axis_index(const std::string& name) const {
  for (std::size_t k = 0; k < axes_.size(); ++k) {
    if (axes_[k].name == name) return k;
  }
  throw validation_error("joint: unknown axis '" + name + "'");
}

bool JointTable::has_axis(const std::string& name) const noexcept {
  return std::any_of(axes_.begin(), axes_.end(),
                     [&](const Axis& ax) { return ax.name == name; });
}

std::size_t JointTable::flat_index(const std::vector<std::size_t>& coords) const {
  if (coords.size() != axes_.size()) {
    throw validation_error("joint: coordinate arity mismatch");
  }
  std::size_t idx = 0;
  for (std::size_t k = 0; k < coords.size(); ++k) {
    if (coords[k] >= axes_[k].alphabet.size()) {
      throw validation_error("joint: coordinate out of range on axis '" + axes_[k].name + "'");
    }
    idx += coords[k] * strides_[k];
  }
  return idx;
}

double JointTable::total_mass() const noexcept {
  return std::accumulate(cells_.begin(), cells_.end(), 0.0);
}

JointTable marginalize(const JointTable& j, const std::vector<std::string>& keep) {
  if (keep.empty()) {
    throw validation_error("marginalize: keep set must be non-empty");
  }
  std::vector<bool> kept(j.axis_count(), false);
  for (const auto& name : keep) {
    kept[j.axis_index(name)] = true;  // throws on unknown axis
  }

  std::vector<Axis> out_axes;
  std::vector<std::size_t> out_strides;
  std::size_t out_size = 1;
  for (std::size_t k = 0; k < j.axis_count(); ++k) {
    if (kept[k]) out_axes.push_back(j.axes()[k]);
  }
  out_strides.assign(out_axes.size(), 1);
  for (std::size_t k = out_axes.size(); k-- > 1;) {
    out_strides[k - 1] = out_strides[k] * out_axes[k].alphabet.size();
  }
  for (const auto& ax : out_axes) out_size *= ax.alphabet.size();

  // Map each source cell to its destination by walking the mixed-radix index.
  std::vector<double> out_cells(out_size, 0.0);
  const auto& cells = j.cells();
  std::vector<std::size_t> coords(j.axis_count(), 0);
  for (std::size_t flat = 0; flat < cells.size(); ++flat) {
    std::size_t dst = 0, ko = 0;
    for (std::size_t k = 0; k < j.axis_count(); ++k) {
      if (kept[k]) dst += coords[k] * out_strides[ko++];
    }
    out_cells[dst] += cells[flat];
    for (std::size_t k = j.axis_count(); k-- > 0;) {
      if (++coords[k] < j.axes()[k].alphabet.size()) break;
      coords[k] = 0;
    }
  }
  return JointTable(std::move(out_axes), std::move(out_cells));
}

Pmf marginal_pmf(const JointTable& j, const std::string& axis) {
  JointTable m = marginalize(j, {axis});
  return Pmf(m.axes()[0].alphabet, m.cells());
}

JointTable product_table(const std::vector<Pmf>& factors, const std::vector<std::string>& names) {
  if (factors.empty() || factors.size() != names.size()) {
    throw validation_error("product_table: factor/name arity mismatch");
  }
  std::vector<Axis> axes;
  std::size_t size = 1;
  for (std::size_t k = 0; k < factors.size(); ++k) {
    axes.push_back(Axis{names[k], factors[k].alphabet()});
    size *= factors[k].size();
  }
  std::vector<double> cells(size, 1.0);
  std::vector<std::size_t> coords(factors.size(), 0);
  for (std::size_t flat = 0; flat < size; ++flat) {
    for (std::size_t k = 0; k < factors.size(); ++k) {
      cells[flat] *= factors[k][coords[k]];
    }
    for (std::size_t k = factors.size(); k-- > 0;) {
      if (++coords[k] < factors[k].size()) break;
      coords[k] = 0;
    }
  }
  return JointTable(std::move(axes), std::move(cells));
}

}  // namespace sempriv

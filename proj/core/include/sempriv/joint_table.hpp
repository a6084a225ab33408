#ifndef SEMPRIV_JOINT_TABLE_HPP
#define SEMPRIV_JOINT_TABLE_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "sempriv/pmf.hpp"

namespace sempriv {

struct Axis {
  std::string name;
  std::vector<std::string> alphabet;

  bool operator==(const Axis&) const = default;
};

/// Dense N-way joint distribution over named axes. Cells are stored row-major
/// with the last axis varying fastest. Immutable after construction; total
/// mass must be 1 within kMassTol and every cell non-negative.
class JointTable {
 public:
  JointTable(std::vector<Axis> axes, std::vector<double> cells);

  const std::vector<Axis>& axes() const noexcept { return axes_; }
  const std::vector<double>& cells() const noexcept { return cells_; }
  std::size_t cell_count() const noexcept { return cells_.size(); }
  std::size_t axis_count() const noexcept { return axes_.size(); }

  /// Position of the named axis; throws validation_error if unknown.
  std::size_t axis_index(const std::string& name) const;
  bool has_axis(const std::string& name) const noexcept;

  /// Row-major stride of axis `k`.
  std::size_t stride(std::size_t k) const noexcept { return strides_[k]; }

  /// Flat cell index from one symbol index per axis.
  std::size_t flat_index(const std::vector<std::size_t>& coords) const;

  double total_mass() const noexcept;

 private:
  std::vector<Axis> axes_;
  std::vector<double> cells_;
  std::vector<std::size_t> strides_;
};

/// Sum out every axis not named in `keep`. Kept axes stay in their original
/// order regardless of the order of `keep`. `keep` must be a non-empty subset
/// of the table's axes.
JointTable marginalize(const JointTable& j, const std::vector<std::string>& keep);

/// Marginal over a single axis, as a Pmf.
Pmf marginal_pmf(const JointTable& j, const std::string& axis);

/// Product joint of independent marginals (test and construction helper).
JointTable product_table(const std::vector<Pmf>& factors, const std::vector<std::string>& names);

}  // namespace sempriv

#endif

#include "sempriv/info.hpp"

#include <algorithm>
#include <cmath>

#include "sempriv/errors.hpp"

namespace sempriv {

namespace {

void require_disjoint(const JointTable& j, const std::vector<std::string>& a,
                      const std::vector<std::string>& b) {
  for (const auto& name : a) {
    j.axis_index(name);
    if (std::find(b.begin(), b.end(), name) != b.end()) {
      throw validation_error("info: axis sets overlap on '" + name + "'");
    }
  }
  for (const auto& name : b) j.axis_index(name);
}

std::vector<std::string> unite(const std::vector<std::string>& a,
                               const std::vector<std::string>& b) {
  std::vector<std::string> u = a;
  u.insert(u.end(), b.begin(), b.end());
  return u;
}

double clamp_roundoff(double v) { return (v < 0.0 && v > -kClampTol) ? 0.0 : v; }

}  // namespace

double joint_entropy(const JointTable& j, const std::vector<std::string>& axes) {
  JointTable m = marginalize(j, axes);
  return entropy(std::span<const double>(m.cells()));
}

double conditional_entropy(const JointTable& j, const std::vector<std::string>& target,
                           const std::vector<std::string>& given) {
  if (target.empty()) {
    throw validation_error("conditional_entropy: target set must be non-empty");
  }
  require_disjoint(j, target, given);
  if (given.empty()) return joint_entropy(j, target);

  // Marginal over target+given, arranged given-major so each condition is one
  // contiguous row. Row-wise sum keeps deterministic targets at exactly 0.
  std::vector<std::string> ordered;
  for (const auto& ax : j.axes()) {
    if (std::find(given.begin(), given.end(), ax.name) != given.end()) ordered.push_back(ax.name);
  }
  std::size_t n_given_axes = ordered.size();
  for (const auto& ax : j.axes()) {
    if (std::find(target.begin(), target.end(), ax.name) != target.end())
      ordered.push_back(ax.name);
  }
  JointTable m = marginalize(j, ordered);

  // marginalize keeps original axis order, so re-derive strides that put the
  // given axes first.
  std::vector<std::size_t> perm_strides(m.axis_count());
  std::size_t row_len = 1, n_rows = 1;
  {
    std::vector<std::size_t> order_pos;  // positions (in m) of given axes, then target axes
    for (std::size_t i = 0; i < n_given_axes; ++i) order_pos.push_back(m.axis_index(ordered[i]));
    std::vector<std::size_t> target_pos;
    for (std::size_t i = n_given_axes; i < ordered.size(); ++i)
      target_pos.push_back(m.axis_index(ordered[i]));
    for (std::size_t p : target_pos) row_len *= m.axes()[p].alphabet.size();
    for (std::size_t p : order_pos) n_rows *= m.axes()[p].alphabet.size();

    std::size_t stride = 1;
    for (std::size_t i = target_pos.size(); i-- > 0;) {
      perm_strides[target_pos[i]] = stride;
      stride *= m.axes()[target_pos[i]].alphabet.size();
    }
    for (std::size_t i = order_pos.size(); i-- > 0;) {
      perm_strides[order_pos[i]] = stride;
      stride *= m.axes()[order_pos[i]].alphabet.size();
    }
  }

  std::vector<double> rearranged(m.cell_count());
  std::vector<std::size_t> coords(m.axis_count(), 0);
  for (std::size_t flat = 0; flat < m.cell_count(); ++flat) {
    std::size_t dst = 0;
    for (std::size_t k = 0; k < m.axis_count(); ++k) dst += coords[k] * perm_strides[k];
    rearranged[dst] = m.cells()[flat];
    for (std::size_t k = m.axis_count(); k-- > 0;) {
      if (++coords[k] < m.axes()[k].alphabet.size()) break;
      coords[k] = 0;
    }
  }

  double h = 0.0;
  for (std::size_t r = 0; r < n_rows; ++r) {
    const double* row = rearranged.data() + r * row_len;
    double row_mass = 0.0;
    for (std::size_t t = 0; t < row_len; ++t) row_mass += row[t];
    if (row_mass <= 0.0) continue;
    for (std::size_t t = 0; t < row_len; ++t) {
      if (row[t] > 0.0) h += row[t] * std::log(row_mass / row[t]);
    }
  }
  return h;
}

double mutual_information(const JointTable& j, const std::vector<std::string>& a,
                          const std::vector<std::string>& b) {
  if (a.empty() || b.empty()) {
    throw validation_error("mutual_information: axis sets must be non-empty");
  }
  require_disjoint(j, a, b);
  double v = joint_entropy(j, a) + joint_entropy(j, b) - joint_entropy(j, unite(a, b));
  return clamp_roundoff(v);
}

double conditional_mutual_information(const JointTable& j, const std::vector<std::string>& a,
                                      const std::vector<std::string>& b,
                                      const std::vector<std::string>& c) {
  if (a.empty() || b.empty()) {
    throw validation_error("conditional_mutual_information: a and b must be non-empty");
  }
  require_disjoint(j, a, b);
  if (c.empty()) return mutual_information(j, a, b);
  require_disjoint(j, a, c);
  require_disjoint(j, b, c);
  // I(a;b|c) = H(a,c) + H(b,c) - H(c) - H(a,b,c)
  double v = joint_entropy(j, unite(a, c)) + joint_entropy(j, unite(b, c)) -
             joint_entropy(j, c) - joint_entropy(j, unite(unite(a, b), c));
  return clamp_roundoff(v);
}

}  // namespace sempriv

#include "sempriv/pmf.hpp"

#include <cmath>
#include <unordered_set>

#include "sempriv/errors.hpp"

namespace sempriv {

Pmf::Pmf(std::vector<std::string> alphabet, std::vector<double> probs)
    : alphabet_(std::move(alphabet)), probs_(std::move(probs)) {
  if (alphabet_.empty()) {
    throw validation_error("pmf: alphabet must be non-empty");
  }
  if (alphabet_.size() != probs_.size()) {
    throw validation_error("pmf: alphabet size " + std::to_string(alphabet_.size()) +
                           " != probs size " + std::to_string(probs_.size()));
  }
  std::unordered_set<std::string> seen;
  for (const auto& label : alphabet_) {
    if (!seen.insert(label).second) {
      throw validation_error("pmf: duplicate symbol label '" + label + "'");
    }
  }
  double mass = 0.0;
  for (double p : probs_) {
    if (!(p >= 0.0)) {
      throw validation_error("pmf: negative probability " + std::to_string(p));
    }
    mass += p;
  }
  if (std::abs(mass - 1.0) > kMassTol) {
    throw validation_error("pmf: total mass " + std::to_string(mass) + " not within 1e-12 of 1");
  }
}

std::size_t Pmf::index_of(const std::string& label) const {
  for (std::size_t i = 0; i < alphabet_.size(); ++i) {
    if (alphabet_[i] == label) return i;
  }
  throw validation_error("pmf: unknown symbol label '" + label + "'");
}

double entropy(std::span<const double> probs) {
  double h = 0.0;
  for (double p : probs) {
    if (p > 0.0) h -= p * std::log(p);
  }
  // Mass within kMassTol of 1 can push the sum infinitesimally below zero.
  if (h < 0.0 && h > -kClampTol) h = 0.0;
  return h;
}

double entropy(const Pmf& p) { return entropy(std::span<const double>(p.probs())); }

}  // namespace sempriv

#ifndef SEMPRIV_PMF_HPP
#define SEMPRIV_PMF_HPP

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace sempriv {

// Mass-sum tolerance for distribution validation.
inline constexpr double kMassTol = 1e-12;
// Tolerance below which negative round-off in information quantities is clamped to 0.
inline constexpr double kClampTol = 1e-12;
// Tolerance for information-theoretic identities (chain rule etc.).
inline constexpr double kIdentityTol = 1e-10;

/// Probability mass function over a named finite alphabet.
/// Immutable after construction; construction validates non-negativity,
/// unit mass (within kMassTol) and label uniqueness.
class Pmf {
 public:
  Pmf(std::vector<std::string> alphabet, std::vector<double> probs);

  const std::vector<std::string>& alphabet() const noexcept { return alphabet_; }
  const std::vector<double>& probs() const noexcept { return probs_; }
  std::size_t size() const noexcept { return probs_.size(); }
  double operator[](std::size_t i) const { return probs_[i]; }

  /// Index of a symbol label; throws validation_error if absent.
  std::size_t index_of(const std::string& label) const;

 private:
  std::vector<std::string> alphabet_;
  std::vector<double> probs_;
};

/// Shannon entropy in nats, with 0 ln 0 = 0. Never negative.
double entropy(const Pmf& p);

/// Entropy of a raw probability vector (assumed validated by the caller).
double entropy(std::span<const double> probs);

}  // namespace sempriv

#endif

#ifndef SEMPRIV_DATASET_HPP
#define SEMPRIV_DATASET_HPP

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "sempriv/channel.hpp"
#include "sempriv/joint_table.hpp"

namespace sempriv {

/// Decoded IDX image/label pair.
struct ImageSet {
  std::uint32_t count = 0;
  std::uint32_t rows = 0;
  std::uint32_t cols = 0;
  std::vector<std::uint8_t> pixels;  // count * rows * cols, image-major
  std::vector<std::uint8_t> labels;  // count entries, each in 0..9

  std::span<const std::uint8_t> image(std::size_t i) const {
    const std::size_t n = std::size_t(rows) * cols;
    return {pixels.data() + i * n, n};
  }
};

/// Decode big-endian IDX payloads (magic 2051 for images, 2049 for labels).
/// Throws idx_parse_error naming the offending field on wrong magic, truncated
/// payload, or count mismatch.
ImageSet parse_idx(std::span<const std::uint8_t> images_bytes,
                   std::span<const std::uint8_t> labels_bytes);

/// Read and decode the two IDX files; throws data_error naming a missing file.
ImageSet load_idx_files(const std::filesystem::path& images_file,
                        const std::filesystem::path& labels_file);

/// Fraction of pixels at or above the binarization threshold.
double histogram_ratio(std::span<const std::uint8_t> image, std::uint8_t threshold);

/// Bucket of a white-pixel ratio: [0,.1) [.1,.15) [.15,.2) [.2,.25) [.25,.3)
/// [.3,.35) [.35,1], labeled 1..7. Ratio must lie in [0,1].
int interval_label(double ratio);

/// Empirical joint of (S, Z, H): private bit S = [Z = 5], digit label Z, and
/// the quantized-histogram label H. Probabilities are counts / total; integer
/// counts are kept alongside.
struct ExperimentJoint {
  JointTable joint;                 // axes ("S", {0,1}), ("Z", {0..9}), ("H", {1..7})
  std::vector<long long> counts;    // same layout as joint.cells()
  long long total = 0;
  Channel kernel_h_given_z;         // P(H | Z)
  Channel kernel_s_given_h;         // P(S | H)
};

ExperimentJoint build_experiment_joint(const ImageSet& imgs, std::uint8_t threshold);

}  // namespace sempriv

#endif

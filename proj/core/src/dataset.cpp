#include "sempriv/dataset.hpp"

#include <array>
#include <fstream>

#include "sempriv/errors.hpp"

namespace sempriv {

namespace {

constexpr std::uint32_t kImagesMagic = 2051;  // 0x00000803
constexpr std::uint32_t kLabelsMagic = 2049;  // 0x00000801

std::uint32_t read_be32(std::span<const std::uint8_t> bytes, std::size_t offset,
                        const char* field) {
  if (offset + 4 > bytes.size()) {
    throw idx_parse_error(field, "file too short for header field");
  }
  return (std::uint32_t(bytes[offset]) << 24) | (std::uint32_t(bytes[offset + 1]) << 16) |
         (std::uint32_t(bytes[offset + 2]) << 8) | std::uint32_t(bytes[offset + 3]);
}

}  // namespace

ImageSet parse_idx(std::span<const std::uint8_t> images_bytes,
                   std::span<const std::uint8_t> labels_bytes) {
  const std::uint32_t img_magic = read_be32(images_bytes, 0, "images.magic");
  if (img_magic != kImagesMagic) {
    throw idx_parse_error("images.magic", "expected 2051, got " + std::to_string(img_magic));
  }
  ImageSet set;
  set.count = read_be32(images_bytes, 4, "images.count");
  set.rows = read_be32(images_bytes, 8, "images.rows");
  set.cols = read_be32(images_bytes, 12, "images.cols");

  const std::size_t payload = std::size_t(set.count) * set.rows * set.cols;
  if (images_bytes.size() < 16 + payload) {
    throw idx_parse_error("images.payload",
                          "truncated: expected " + std::to_string(16 + payload) + " bytes, got " +
                              std::to_string(images_bytes.size()));
  }
  if (images_bytes.size() > 16 + payload) {
    throw idx_parse_error("images.payload", "trailing bytes after pixel data");
  }

  const std::uint32_t lbl_magic = read_be32(labels_bytes, 0, "labels.magic");
  if (lbl_magic != kLabelsMagic) {
    throw idx_parse_error("labels.magic", "expected 2049, got " + std::to_string(lbl_magic));
  }
  const std::uint32_t lbl_count = read_be32(labels_bytes, 4, "labels.count");
  if (lbl_count != set.count) {
    throw idx_parse_error("labels.count", "label count " + std::to_string(lbl_count) +
                                              " != image count " + std::to_string(set.count));
  }
  if (labels_bytes.size() != 8 + std::size_t(lbl_count)) {
    throw idx_parse_error("labels.payload",
                          "expected " + std::to_string(8 + lbl_count) + " bytes, got " +
                              std::to_string(labels_bytes.size()));
  }

  set.pixels.assign(images_bytes.begin() + 16, images_bytes.end());
  set.labels.assign(labels_bytes.begin() + 8, labels_bytes.end());
  for (std::size_t i = 0; i < set.labels.size(); ++i) {
    if (set.labels[i] > 9) {
      throw idx_parse_error("labels.payload", "label " + std::to_string(set.labels[i]) +
                                                  " at index " + std::to_string(i) +
                                                  " outside 0..9");
    }
  }
  return set;
}

ImageSet load_idx_files(const std::filesystem::path& images_file,
                        const std::filesystem::path& labels_file) {
  auto slurp = [](const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      throw data_error("cannot open '" + path.string() + "'");
    }
    return std::vector<std::uint8_t>(std::istreambuf_iterator<char>(in),
                                     std::istreambuf_iterator<char>());
  };
  const auto images = slurp(images_file);
  const auto labels = slurp(labels_file);
  return parse_idx(images, labels);
}

double histogram_ratio(std::span<const std::uint8_t> image, std::uint8_t threshold) {
  if (image.empty()) {
    throw validation_error("histogram_ratio: empty image");
  }
  std::size_t white = 0;
  for (std::uint8_t px : image) {
    if (px >= threshold) ++white;
  }
  return double(white) / double(image.size());
}

int interval_label(double ratio) {
  if (!(ratio >= 0.0 && ratio <= 1.0)) {
    throw validation_error("interval_label: ratio " + std::to_string(ratio) +
                           " outside [0,1]");
  }
  static constexpr std::array<double, 6> kEdges = {0.1, 0.15, 0.2, 0.25, 0.3, 0.35};
  int label = 1;
  for (double edge : kEdges) {
    if (ratio >= edge) ++label;
  }
  return label;
}

ExperimentJoint build_experiment_joint(const ImageSet& imgs, std::uint8_t threshold) {
  if (imgs.count == 0) {
    throw validation_error("build_experiment_joint: empty image set");
  }
  constexpr std::size_t kNS = 2, kNZ = 10, kNH = 7;
  std::vector<long long> counts(kNS * kNZ * kNH, 0);
  for (std::size_t i = 0; i < imgs.count; ++i) {
    const int z = imgs.labels[i];
    const int h = interval_label(histogram_ratio(imgs.image(i), threshold));
    const int s = z == 5 ? 1 : 0;
    ++counts[std::size_t(s) * kNZ * kNH + std::size_t(z) * kNH + std::size_t(h - 1)];
  }

  const long long total = imgs.count;
  std::vector<double> cells(counts.size());
  for (std::size_t i = 0; i < counts.size(); ++i) cells[i] = double(counts[i]) / double(total);

  Axis s_axis{"S", {"0", "1"}};
  Axis z_axis{"Z", {}};
  for (int z = 0; z < 10; ++z) z_axis.alphabet.push_back(std::to_string(z));
  Axis h_axis{"H", {}};
  for (int h = 1; h <= 7; ++h) h_axis.alphabet.push_back(std::to_string(h));
  JointTable joint({s_axis, z_axis, h_axis}, std::move(cells));

  // Empirical kernels. Unseen conditions get uniform rows.
  std::vector<double> hz_rows(kNZ * kNH, 0.0);
  for (std::size_t z = 0; z < kNZ; ++z) {
    long long z_total = 0;
    for (std::size_t s = 0; s < kNS; ++s)
      for (std::size_t h = 0; h < kNH; ++h) z_total += counts[s * kNZ * kNH + z * kNH + h];
    for (std::size_t h = 0; h < kNH; ++h) {
      long long c = counts[0 * kNZ * kNH + z * kNH + h] + counts[1 * kNZ * kNH + z * kNH + h];
      hz_rows[z * kNH + h] = z_total > 0 ? double(c) / double(z_total) : 1.0 / double(kNH);
    }
  }
  std::vector<double> sh_rows(kNH * kNS, 0.0);
  for (std::size_t h = 0; h < kNH; ++h) {
    long long h_total = 0;
    std::array<long long, kNS> by_s{0, 0};
    for (std::size_t s = 0; s < kNS; ++s)
      for (std::size_t z = 0; z < kNZ; ++z) {
        by_s[s] += counts[s * kNZ * kNH + z * kNH + h];
      }
    h_total = by_s[0] + by_s[1];
    for (std::size_t s = 0; s < kNS; ++s) {
      sh_rows[h * kNS + s] = h_total > 0 ? double(by_s[s]) / double(h_total) : 0.5;
    }
  }

  Channel kernel_h_given_z({z_axis}, Axis{"H", h_axis.alphabet}, std::move(hz_rows));
  Channel kernel_s_given_h({h_axis}, Axis{"S", s_axis.alphabet}, std::move(sh_rows));
  return ExperimentJoint{std::move(joint), std::move(counts), total,
                         std::move(kernel_h_given_z), std::move(kernel_s_given_h)};
}

}  // namespace sempriv

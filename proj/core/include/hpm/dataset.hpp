#pragma once

#include <Eigen/Dense>
#include <filesystem>
#include <string>
#include <vector>

#include "hpm/descriptor.hpp"

namespace hpm {

/// Paired (parameters -> quality) samples for one task; the training
/// material for a source process model.
struct ProcessDataset {
  TaskDescriptor descriptor;
  Eigen::MatrixXd inputs;   // samples x input features
  Eigen::MatrixXd outputs;  // samples x output features
  std::vector<std::string> input_names;
  std::vector<std::string> output_names;

  /// Throws std::invalid_argument on row mismatch, zero samples, name/column
  /// mismatches, or non-finite entries.
  void validate() const;
};

/// Canonical on-disk dataset format:
///   line 1: `# descriptor: id=<n>;<name>=<value>;...`
///   line 2: comma-separated headers with `in:`/`out:` prefixes
///   then one numeric row per sample (decimal point '.', LF endings).
/// Values are written with 17 significant digits so write/read round-trips
/// reproduce doubles exactly.
void write_dataset_csv(const ProcessDataset& dataset,
                       const std::filesystem::path& path);

/// Parses the format above. Parse errors carry the 1-based line number.
ProcessDataset read_dataset_csv(const std::filesystem::path& path);

}  // namespace hpm

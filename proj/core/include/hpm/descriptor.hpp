#pragma once

#include <string>
#include <vector>

namespace hpm {

/// Condition vector identifying one process variant (task). The values are
/// the fixed quantities that govern the process (for deep drawing: sheet
/// thickness, initial yield stress, flow-stress saturation); they are the
/// side information that lets a model be generated for a task with no data.
struct TaskDescriptor {
  std::vector<double> values;
  std::vector<std::string> names;
  int id = 0;

  /// Throws std::invalid_argument on empty/mismatched fields, non-finite
  /// values, or id < 1.
  void validate() const;

  std::size_t dim() const { return values.size(); }
};

/// Min-max normalizes every dimension to [0, 1] over the whole list.
/// The caller decides the basis: include the target descriptor in the list
/// when the normalized target must be placeable in the same unit box.
/// Throws if the list has fewer than two entries or a dimension is constant
/// (the error names the degenerate dimension).
std::vector<TaskDescriptor> normalize_descriptors(
    const std::vector<TaskDescriptor>& descriptors);

}  // namespace hpm

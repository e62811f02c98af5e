#include "hpm/descriptor.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace hpm {

void TaskDescriptor::validate() const {
  if (values.empty() || values.size() != names.size()) {
    throw std::invalid_argument(
        "TaskDescriptor: values and names must be non-empty and equally "
        "sized");
  }
  for (double v : values) {
    if (!std::isfinite(v)) {
      throw std::invalid_argument("TaskDescriptor: non-finite condition value");
    }
  }
  if (id < 1) {
    throw std::invalid_argument("TaskDescriptor: id must be >= 1");
  }
}

std::vector<TaskDescriptor> normalize_descriptors(
    const std::vector<TaskDescriptor>& descriptors) {
  if (descriptors.size() < 2) {
    throw std::invalid_argument(
        "normalize_descriptors: need at least 2 descriptors");
  }
  const std::size_t dim = descriptors.front().dim();
  for (const auto& d : descriptors) {
    d.validate();
    if (d.dim() != dim) {
      throw std::invalid_argument(
          "normalize_descriptors: descriptors have mixed dimensions");
    }
  }

  std::vector<double> lo(dim, std::numeric_limits<double>::infinity());
  std::vector<double> hi(dim, -std::numeric_limits<double>::infinity());
  for (const auto& d : descriptors) {
    for (std::size_t j = 0; j < dim; ++j) {
      lo[j] = std::min(lo[j], d.values[j]);
      hi[j] = std::max(hi[j], d.values[j]);
    }
  }
  for (std::size_t j = 0; j < dim; ++j) {
    if (!(hi[j] > lo[j])) {
      throw std::invalid_argument(
          "normalize_descriptors: dimension '" + descriptors.front().names[j] +
          "' (index " + std::to_string(j) + ") is constant across the set");
    }
  }

  std::vector<TaskDescriptor> out = descriptors;
  for (auto& d : out) {
    for (std::size_t j = 0; j < dim; ++j) {
      d.values[j] = (d.values[j] - lo[j]) / (hi[j] - lo[j]);
    }
  }
  return out;
}

}  // namespace hpm

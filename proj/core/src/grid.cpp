#include "hpm/grid.hpp"

#include <cstring>
#include <stdexcept>
#include <string>

namespace hpm {

std::uint64_t grid_fingerprint(const Eigen::MatrixXd& points) {
  // FNV-1a over the dimensions and raw entry bits, row-major.
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto mix = [&h](std::uint64_t v) {
    for (int i = 0; i < 8; ++i) {
      h ^= (v >> (8 * i)) & 0xffULL;
      h *= 0x100000001b3ULL;
    }
  };
  mix(static_cast<std::uint64_t>(points.rows()));
  mix(static_cast<std::uint64_t>(points.cols()));
  for (Eigen::Index i = 0; i < points.rows(); ++i) {
    for (Eigen::Index j = 0; j < points.cols(); ++j) {
      std::uint64_t bits;
      const double v = points(i, j);
      std::memcpy(&bits, &v, sizeof bits);
      mix(bits);
    }
  }
  return h;
}

Grid generate_ffd_grid(const Eigen::VectorXd& min, const Eigen::VectorXd& max,
                       int levels) {
  if (levels < 2) {
    throw std::invalid_argument("generate_ffd_grid: levels must be >= 2, got " +
                                std::to_string(levels));
  }
  if (min.size() == 0 || min.size() != max.size()) {
    throw std::invalid_argument(
        "generate_ffd_grid: min and max must be non-empty and equally sized");
  }
  const Eigen::Index factors = min.size();
  for (Eigen::Index j = 0; j < factors; ++j) {
    if (!(min[j] < max[j])) {
      throw std::invalid_argument(
          "generate_ffd_grid: min must be strictly below max in factor " +
          std::to_string(j));
    }
  }

  Eigen::Index rows = 1;
  for (Eigen::Index j = 0; j < factors; ++j) rows *= levels;

  // Axis values are computed once per level so every row reuses the exact
  // same double for a given (factor, level) pair.
  Eigen::MatrixXd axis(levels, factors);
  for (Eigen::Index j = 0; j < factors; ++j) {
    for (int l = 0; l < levels; ++l) {
      axis(l, j) =
          min[j] + (max[j] - min[j]) * (static_cast<double>(l) / (levels - 1));
    }
    axis(0, j) = min[j];
    axis(levels - 1, j) = max[j];
  }

  Grid grid;
  grid.points.resize(rows, factors);
  grid.levels = levels;
  grid.min = min;
  grid.max = max;
  for (Eigen::Index i = 0; i < rows; ++i) {
    // Mixed-radix decomposition of the row index; last factor varies fastest.
    Eigen::Index rem = i;
    for (Eigen::Index j = factors - 1; j >= 0; --j) {
      grid.points(i, j) = axis(rem % levels, j);
      rem /= levels;
    }
  }
  grid.fingerprint = grid_fingerprint(grid.points);
  return grid;
}

}  // namespace hpm

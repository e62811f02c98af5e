#pragma once

#include <Eigen/Dense>
#include <cstdint>

namespace hpm {

/// Full factorial design grid: `levels` equally spaced values per factor,
/// endpoints included, levels^factors rows in total. Row order is fixed with
/// the last factor varying fastest, so shapes sampled by independent runs are
/// landmark-aligned by construction.
struct Grid {
  Eigen::MatrixXd points;  // levels^factors rows x factors cols
  int levels = 0;
  Eigen::VectorXd min;
  Eigen::VectorXd max;
  std::uint64_t fingerprint = 0;

  Eigen::Index rows() const { return points.rows(); }
  Eigen::Index factors() const { return points.cols(); }
};

/// Hash of a point matrix (dimensions plus the bit patterns of every entry).
/// Two grids are interchangeable for shape sampling iff fingerprints match.
std::uint64_t grid_fingerprint(const Eigen::MatrixXd& points);

/// Builds the full factorial grid. Requires levels >= 2 and min_j < max_j
/// per factor; throws std::invalid_argument otherwise.
Grid generate_ffd_grid(const Eigen::VectorXd& min, const Eigen::VectorXd& max,
                       int levels);

}  // namespace hpm

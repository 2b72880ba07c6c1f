#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <utility>
#include <vector>

namespace covreg {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;
using Vec6 = Eigen::Matrix<double, 6, 1>;
using Mat6 = Eigen::Matrix<double, 6, 6>;
using Mat36 = Eigen::Matrix<double, 3, 6>;

/// 3x3 symmetric PSD matrix, metres^2.
using Covariance3 = Mat3;

/// 6x6 SPD covariance of a pose measurement twist.
using PoseNoise = Mat6;

/// Regularizer added to covariances before inversion / log-determinants.
inline constexpr double kCovEpsilon = 1e-8;

/// Lower-triangular factor of a 3x3 covariance, C = L L^T.
/// Entries may take any sign; the product is PSD regardless.
struct LowerTri3 {
  double l11 = 0.0, l21 = 0.0, l22 = 0.0, l31 = 0.0, l32 = 0.0, l33 = 0.0;

  Mat3 matrix() const {
    Mat3 m;
    m << l11, 0.0, 0.0, l21, l22, 0.0, l31, l32, l33;
    return m;
  }

  static LowerTri3 from_matrix(const Mat3& m) {
    return {m(0, 0), m(1, 0), m(1, 1), m(2, 0), m(2, 1), m(2, 2)};
  }

  double& operator[](int i) { return (&l11)[i]; }
  double operator[](int i) const { return (&l11)[i]; }
};

/// Row/column index of the i-th LowerTri3 entry, order (l11,l21,l22,l31,l32,l33).
inline std::pair<int, int> lower_tri_index(int i) {
  static constexpr int kRow[6] = {0, 1, 1, 2, 2, 2};
  static constexpr int kCol[6] = {0, 0, 1, 0, 1, 2};
  return {kRow[i], kCol[i]};
}

/// C = L L^T; symmetric PSD by construction for any real factor.
inline Covariance3 cholesky_build(const LowerTri3& f) {
  const Mat3 l = f.matrix();
  return l * l.transpose();
}

struct GaussianComponent {
  Vec3 mean = Vec3::Zero();
  Covariance3 cov = Covariance3::Zero();
};

/// Ordered point list with an optional parallel covariance list.
struct PointCloud {
  std::vector<Vec3> points;
  std::vector<Covariance3> covariances;  // empty or same length as points

  int size() const { return static_cast<int>(points.size()); }
  bool has_covariances() const { return !covariances.empty(); }
};

/// Index pair into (source, target) clouds. Duplicate targets are allowed:
/// nearest-neighbour matching naturally produces many-to-one pairs.
struct Correspondence {
  int source = 0;
  int target = 0;
};

using CorrespondenceSet = std::vector<Correspondence>;

}  // namespace covreg

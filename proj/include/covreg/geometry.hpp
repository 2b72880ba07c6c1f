#pragma once

#include <cstdint>
#include <vector>

#include "covreg/types.hpp"

namespace covreg {

/// Rigid transform: x -> R x + t. Rotation is kept orthonormal with det +1.
///
/// Perturbation convention (used by every Jacobian in this project):
/// right-multiplicative, T(xi) = T * Exp(xi) with twist xi = (rho, nu),
/// rotation part first.
struct PoseSE3 {
  Mat3 rotation = Mat3::Identity();
  Vec3 translation = Vec3::Zero();

  static PoseSE3 identity() { return {}; }

  Vec3 apply(const Vec3& p) const { return rotation * p + translation; }

  PoseSE3 compose(const PoseSE3& other) const {
    return {rotation * other.rotation, rotation * other.translation + translation};
  }

  PoseSE3 inverse() const {
    return {rotation.transpose(), -(rotation.transpose() * translation)};
  }

  Eigen::Matrix4d matrix() const {
    Eigen::Matrix4d m = Eigen::Matrix4d::Identity();
    m.block<3, 3>(0, 0) = rotation;
    m.block<3, 1>(0, 3) = translation;
    return m;
  }

  /// ||R^T R - I||_F, for validity checks.
  double orthonormality_error() const {
    return (rotation.transpose() * rotation - Mat3::Identity()).norm();
  }
};

Mat3 skew(const Vec3& v);
Vec3 unskew(const Mat3& m);

Mat3 so3_exp(const Vec3& rho);
/// Rotation angle < pi - 1e-6 required; throws LogMapSingularity otherwise.
Vec3 so3_log(const Mat3& r);

/// Geodesic angle between two rotations, radians.
double rotation_angle(const Mat3& a, const Mat3& b = Mat3::Identity());

/// xi = (rho, nu). Below angle 1e-8 the series forms are used (no angle division).
PoseSE3 se3_exp(const Vec6& xi);
Vec6 se3_log(const PoseSE3& t);

/// Left Jacobian of SE(3) and its inverse, evaluated by the convergent series
/// sum ad(xi)^n / (n+1)!. Satisfies Exp(xi + J_l(xi) dxi) ~ Exp(dxi) Exp(xi).
Mat6 se3_left_jacobian(const Vec6& xi);
Mat6 se3_left_jacobian_inverse(const Vec6& xi);

/// Expresses a component held in the frame of `pose` after transforming through
/// pose^{-1}: mean' = R^T (mean - t), cov' = R^T cov R.
GaussianComponent transform_component(const GaussianComponent& g, const PoseSE3& pose);

/// d = q - (R p + t).
inline Vec3 residual(const Vec3& q, const Vec3& p, const PoseSE3& t) {
  return q - t.apply(p);
}

/// n draws from N(mean, sigma_scale^2 * cov), deterministic per seed.
/// Sampling uses the eigenframe factor; negative eigenvalues are clamped to 0.
std::vector<Vec3> sample_component(const GaussianComponent& g, int n, double sigma_scale,
                                   std::uint64_t rng_seed);

}  // namespace covreg

#pragma once

#include <optional>
#include <vector>

#include "covreg/geometry.hpp"
#include "covreg/types.hpp"

namespace covreg {

/// Energy terms with (T, C)-independent constants dropped from `total`.
/// pose_logdet = 0.5 log|Gamma| is reported for reconciliation but is a
/// constant of the optimization and therefore excluded from `total`.
struct EnergyBreakdown {
  double corr_logdet = 0.0;     // 0.5 * sum log|2 C_i|
  double corr_quadratic = 0.0;  // 0.5 * sum d^T (2 C_i)^{-1} d
  double pose_logdet = 0.0;     // 0.5 * log|Gamma|
  double pose_quadratic = 0.0;  // 0.5 * xi^T Gamma^{-1} xi
  double total = 0.0;           // corr_logdet + corr_quadratic + pose_quadratic
};

using HessianSE3 = Mat6;

/// 0.5 [ log|2(C+eps I)| + d^T (2(C+eps I))^{-1} d ]; throws SingularCovariance
/// if the regularized matrix is not positive definite.
double correspondence_nll(const Vec3& d, const Covariance3& c, double eps = kCovEpsilon);

/// 0.5 xi^T Gamma^{-1} xi with xi = Log(T^{-1} T_tilde). The 0.5 log|Gamma|
/// constant is reported separately in EnergyBreakdown.
double pose_nll(const PoseSE3& t, const PoseSE3& t_tilde, const PoseNoise& gamma);

/// Total energy over a correspondence set; covs has one entry per pair.
EnergyBreakdown energy(const PoseSE3& t, const PointCloud& source, const PointCloud& target,
                       const CorrespondenceSet& corr, const std::vector<Covariance3>& covs,
                       const PoseSE3& t_tilde, const PoseNoise& gamma,
                       double eps = kCovEpsilon);

/// J = dd/dxi for d = q - T(xi) p under the right-perturbation convention:
/// columns [ R [p]_x | -R ].
Mat36 residual_jacobian(const Vec3& p, const PoseSE3& t);

/// Gauss-Newton Hessian H = sum J^T (2(C+eps I))^{-1} J [+ Gamma^{-1}].
/// Pass std::nullopt for gamma to drop the pose summand (test mode and the
/// exact-pose ablation).
HessianSE3 gn_hessian(const PoseSE3& t_hat, const PointCloud& source, const PointCloud& target,
                      const CorrespondenceSet& corr, const std::vector<Covariance3>& covs,
                      const std::optional<PoseNoise>& gamma, double eps = kCovEpsilon);

/// 0.5 log|H(T_hat)| + Phi(T_hat); with use_pose_likelihood = false the pose
/// terms and the Gamma^{-1} Hessian summand are dropped (the exact-pose
/// ablation). Throws NonPdHessian when H is not positive definite.
double laplace_loss(const PoseSE3& t_hat, const PointCloud& source, const PointCloud& target,
                    const CorrespondenceSet& corr, const std::vector<Covariance3>& covs,
                    const PoseSE3& t_tilde, const PoseNoise& gamma, bool use_pose_likelihood,
                    double eps = kCovEpsilon);

/// Default pose-measurement noise: diag(sigma_rot^2 x3, sigma_trans^2 x3),
/// sigma_rot = 0.01 rad, sigma_trans = 0.05 m.
PoseNoise default_pose_noise(double sigma_rot = 0.01, double sigma_trans = 0.05);

}  // namespace covreg

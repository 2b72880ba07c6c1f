#include "covreg/likelihood.hpp"

#include <cmath>

#include "covreg/errors.hpp"

namespace covreg {

namespace {

double logdet_llt(const Eigen::LLT<Mat3>& llt) {
  const Mat3 l = llt.matrixL();
  return 2.0 * (std::log(l(0, 0)) + std::log(l(1, 1)) + std::log(l(2, 2)));
}

Eigen::LLT<Mat3> factor_2c(const Covariance3& c, double eps) {
  const Mat3 m = 2.0 * (c + eps * Mat3::Identity());
  Eigen::LLT<Mat3> llt(m);
  if (llt.info() != Eigen::Success || m(0, 0) <= 0.0) {
    throw SingularCovariance("correspondence covariance singular after regularization");
  }
  return llt;
}

}  // namespace

double correspondence_nll(const Vec3& d, const Covariance3& c, double eps) {
  const auto llt = factor_2c(c, eps);
  return 0.5 * (logdet_llt(llt) + d.dot(llt.solve(d)));
}

double pose_nll(const PoseSE3& t, const PoseSE3& t_tilde, const PoseNoise& gamma) {
  const Vec6 xi = se3_log(t.inverse().compose(t_tilde));
  return 0.5 * xi.dot(gamma.llt().solve(xi));
}

EnergyBreakdown energy(const PoseSE3& t, const PointCloud& source, const PointCloud& target,
                       const CorrespondenceSet& corr, const std::vector<Covariance3>& covs,
                       const PoseSE3& t_tilde, const PoseNoise& gamma, double eps) {
  if (covs.size() != corr.size()) {
    throw DataError("energy: covariance list length must equal correspondence count");
  }
  EnergyBreakdown e;
  for (std::size_t k = 0; k < corr.size(); ++k) {
    const Vec3 d = residual(target.points[corr[k].target], source.points[corr[k].source], t);
    const auto llt = factor_2c(covs[k], eps);
    e.corr_logdet += 0.5 * logdet_llt(llt);
    e.corr_quadratic += 0.5 * d.dot(llt.solve(d));
  }
  const Eigen::LLT<Mat6> gamma_llt(gamma);
  Mat6 gl = gamma_llt.matrixL();
  double logdet_gamma = 0.0;
  for (int i = 0; i < 6; ++i) logdet_gamma += 2.0 * std::log(gl(i, i));
  e.pose_logdet = 0.5 * logdet_gamma;
  e.pose_quadratic = pose_nll(t, t_tilde, gamma);
  e.total = e.corr_logdet + e.corr_quadratic + e.pose_quadratic;
  return e;
}

Mat36 residual_jacobian(const Vec3& p, const PoseSE3& t) {
  Mat36 j;
  j.block<3, 3>(0, 0) = t.rotation * skew(p);
  j.block<3, 3>(0, 3) = -t.rotation;
  return j;
}

HessianSE3 gn_hessian(const PoseSE3& t_hat, const PointCloud& source, const PointCloud& target,
                      const CorrespondenceSet& corr, const std::vector<Covariance3>& covs,
                      const std::optional<PoseNoise>& gamma, double eps) {
  if (covs.size() != corr.size()) {
    throw DataError("gn_hessian: covariance list length must equal correspondence count");
  }
  (void)target;
  Mat6 h = Mat6::Zero();
  for (std::size_t k = 0; k < corr.size(); ++k) {
    const Mat36 j = residual_jacobian(source.points[corr[k].source], t_hat);
    const auto llt = factor_2c(covs[k], eps);
    h += j.transpose() * llt.solve(j);
  }
  if (gamma) {
    h += gamma->inverse();
  }
  // Constructed symmetric; enforce it exactly against accumulation drift.
  h = (0.5 * (h + h.transpose())).eval();
  return h;
}

double laplace_loss(const PoseSE3& t_hat, const PointCloud& source, const PointCloud& target,
                    const CorrespondenceSet& corr, const std::vector<Covariance3>& covs,
                    const PoseSE3& t_tilde, const PoseNoise& gamma, bool use_pose_likelihood,
                    double eps) {
  const std::optional<PoseNoise> h_gamma =
      use_pose_likelihood ? std::optional<PoseNoise>(gamma) : std::nullopt;
  const Mat6 h = gn_hessian(t_hat, source, target, corr, covs, h_gamma, eps);

  Eigen::LLT<Mat6> llt(h);
  if (llt.info() != Eigen::Success || h(0, 0) <= 0.0) {
    throw NonPdHessian("laplace_loss: Gauss-Newton Hessian not positive definite");
  }
  Mat6 l = llt.matrixL();
  double logdet_h = 0.0;
  for (int i = 0; i < 6; ++i) logdet_h += 2.0 * std::log(l(i, i));

  const EnergyBreakdown e = energy(t_hat, source, target, corr, covs, t_tilde, gamma, eps);
  const double phi =
      use_pose_likelihood ? e.total : (e.corr_logdet + e.corr_quadratic);
  return 0.5 * logdet_h + phi;
}

PoseNoise default_pose_noise(double sigma_rot, double sigma_trans) {
  PoseNoise g = PoseNoise::Zero();
  for (int i = 0; i < 3; ++i) g(i, i) = sigma_rot * sigma_rot;
  for (int i = 3; i < 6; ++i) g(i, i) = sigma_trans * sigma_trans;
  return g;
}

}  // namespace covreg

#include "covreg/geometry.hpp"

#include <cmath>
#include <random>

#include "covreg/errors.hpp"

namespace covreg {

namespace {
constexpr double kTinyAngle = 1e-8;
constexpr double kLogMapMargin = 1e-6;
}  // namespace

Mat3 skew(const Vec3& v) {
  Mat3 m;
  m << 0.0, -v.z(), v.y(), v.z(), 0.0, -v.x(), -v.y(), v.x(), 0.0;
  return m;
}

Vec3 unskew(const Mat3& m) { return Vec3(m(2, 1), m(0, 2), m(1, 0)); }

Mat3 so3_exp(const Vec3& rho) {
  const double theta = rho.norm();
  const Mat3 k = skew(rho);
  if (theta < kTinyAngle) {
    return Mat3::Identity() + k + 0.5 * k * k;
  }
  const double a = std::sin(theta) / theta;
  const double b = (1.0 - std::cos(theta)) / (theta * theta);
  return Mat3::Identity() + a * k + b * k * k;
}

Vec3 so3_log(const Mat3& r) {
  const double c = std::clamp(0.5 * (r.trace() - 1.0), -1.0, 1.0);
  const double theta = std::acos(c);
  if (theta > M_PI - kLogMapMargin) {
    throw LogMapSingularity("so3_log: rotation angle within 1e-6 of pi");
  }
  const Vec3 w = unskew(r - r.transpose());
  if (theta < kTinyAngle) {
    // theta/(2 sin theta) = 1/2 + theta^2/12 + O(theta^4)
    return (0.5 + theta * theta / 12.0) * w;
  }
  return (theta / (2.0 * std::sin(theta))) * w;
}

double rotation_angle(const Mat3& a, const Mat3& b) {
  const double c = std::clamp(0.5 * ((a.transpose() * b).trace() - 1.0), -1.0, 1.0);
  return std::acos(c);
}

PoseSE3 se3_exp(const Vec6& xi) {
  const Vec3 rho = xi.head<3>();
  const Vec3 nu = xi.tail<3>();
  const double theta = rho.norm();
  const Mat3 k = skew(rho);

  Mat3 v;
  if (theta < kTinyAngle) {
    v = Mat3::Identity() + 0.5 * k + (1.0 / 6.0) * k * k;
  } else {
    const double t2 = theta * theta;
    v = Mat3::Identity() + ((1.0 - std::cos(theta)) / t2) * k +
        ((theta - std::sin(theta)) / (t2 * theta)) * k * k;
  }
  return {so3_exp(rho), v * nu};
}

Vec6 se3_log(const PoseSE3& t) {
  const Vec3 rho = so3_log(t.rotation);
  const double theta = rho.norm();
  const Mat3 k = skew(rho);

  Mat3 vinv;
  if (theta < kTinyAngle) {
    vinv = Mat3::Identity() - 0.5 * k + (1.0 / 12.0) * k * k;
  } else {
    const double half = 0.5 * theta;
    const double c = (1.0 - half * std::cos(half) / std::sin(half)) / (theta * theta);
    vinv = Mat3::Identity() - 0.5 * k + c * k * k;
  }
  Vec6 xi;
  xi.head<3>() = rho;
  xi.tail<3>() = vinv * t.translation;
  return xi;
}

namespace {

// ad(xi) for xi = (rho, nu): [[skew(rho), 0], [skew(nu), skew(rho)]].
Mat6 se3_ad(const Vec6& xi) {
  Mat6 ad = Mat6::Zero();
  const Mat3 kr = skew(xi.head<3>());
  ad.block<3, 3>(0, 0) = kr;
  ad.block<3, 3>(3, 3) = kr;
  ad.block<3, 3>(3, 0) = skew(xi.tail<3>());
  return ad;
}

}  // namespace

Mat6 se3_left_jacobian(const Vec6& xi) {
  // J_l = sum_{n>=0} ad^n / (n+1)!; terms decay factorially for |xi| < pi.
  Mat6 j = Mat6::Identity();
  Mat6 term = Mat6::Identity();
  const Mat6 ad = se3_ad(xi);
  for (int n = 1; n <= 30; ++n) {
    term = (term * ad) / static_cast<double>(n + 1);
    j += term;
    if (term.norm() < 1e-17) break;
  }
  return j;
}

Mat6 se3_left_jacobian_inverse(const Vec6& xi) {
  return se3_left_jacobian(xi).inverse();
}

GaussianComponent transform_component(const GaussianComponent& g, const PoseSE3& pose) {
  GaussianComponent out;
  out.mean = pose.rotation.transpose() * (g.mean - pose.translation);
  out.cov = pose.rotation.transpose() * g.cov * pose.rotation;
  return out;
}

std::vector<Vec3> sample_component(const GaussianComponent& g, int n, double sigma_scale,
                                   std::uint64_t rng_seed) {
  std::vector<Vec3> out;
  out.reserve(std::max(n, 0));
  if (n <= 0) return out;

  Eigen::SelfAdjointEigenSolver<Mat3> eig(g.cov);
  Vec3 scale;
  for (int i = 0; i < 3; ++i) {
    scale[i] = sigma_scale * std::sqrt(std::max(eig.eigenvalues()[i], 0.0));
  }
  const Mat3 basis = eig.eigenvectors();

  std::mt19937_64 rng(rng_seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (int i = 0; i < n; ++i) {
    Vec3 z;
    z << gauss(rng), gauss(rng), gauss(rng);
    out.push_back(g.mean + basis * scale.cwiseProduct(z));
  }
  return out;
}

}  // namespace covreg

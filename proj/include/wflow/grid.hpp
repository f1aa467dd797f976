#pragma once

#include <Eigen/Dense>
#include <complex>

namespace wflow {

using cplx = std::complex<double>;

// Collocation grid on S^2: Gauss-Legendre nodes in colatitude (lmax+1 of
// them, pole-free) times 2*lmax+2 uniform longitudes.  Quadrature is exact
// for integrands that are polynomials of degree <= 2*lmax+1 in cos(theta)
// per azimuthal mode, which covers products of harmonics up to that degree.
//
// Two stereographic charts are carried per node:
//   north chart  z = tan(theta/2) e^{+i phi}   (origin at theta=0)
//   south chart  w = cot(theta/2) e^{-i phi}   (origin at theta=pi, w = 1/z)
// log_flat is log(2/(1+|z|^2)), the round metric's flat-chart factor, so
// that g_round = e^{2*log_flat} |dz|^2 in either chart.
struct Grid {
  int lmax = 0;
  int ntheta = 0;
  int nphi = 0;

  Eigen::ArrayXd theta;    // ntheta, increasing
  Eigen::ArrayXd x;        // cos(theta), decreasing
  Eigen::ArrayXd wtheta;   // GL weights, sum = 2
  Eigen::ArrayXd phi;      // nphi, 2*pi*k/nphi
  double wphi = 0.0;       // 2*pi/nphi

  Eigen::ArrayXd sin_theta, cos_theta, csc_theta, cot_theta;

  // chart data per theta row (phi dependence is the explicit phase factor)
  Eigen::ArrayXd north_r;         // |z| = tan(theta/2)
  Eigen::ArrayXd south_r;         // |w| = cot(theta/2)
  Eigen::ArrayXd north_log_flat;  // log(2/(1+|z|^2)) = log(1+cos theta)
  Eigen::ArrayXd south_log_flat;  // log(1-cos theta)

  // chart validity; polar caps are excluded from the opposite chart and the
  // two charts overlap on theta in [pi/3, 2pi/3]
  static constexpr double kNorthMax = 2.0943951023931953;  // 2*pi/3
  static constexpr double kSouthMin = 1.0471975511965976;  // pi/3

  int nodes() const { return ntheta * nphi; }
  int node(int j, int k) const { return j * nphi + k; }

  bool north_valid(int j) const { return theta[j] <= kNorthMax; }
  bool south_valid(int j) const { return theta[j] >= kSouthMin; }

  // embedding of the node into R^3 (unit sphere)
  Eigen::Vector3d point(int j, int k) const {
    return {sin_theta[j] * std::cos(phi[k]), sin_theta[j] * std::sin(phi[k]), cos_theta[j]};
  }

  static Grid make(int lmax);
};

// Gauss-Legendre nodes/weights on [-1,1], nodes descending.
void gauss_legendre(int n, Eigen::ArrayXd& x, Eigen::ArrayXd& w);

}  // namespace wflow

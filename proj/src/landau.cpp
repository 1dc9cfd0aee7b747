#include "hfatom/landau.hpp"

#include <cmath>
#include <limits>

#include "hfatom/quadrature.hpp"

namespace hfatom {

namespace {

double scale_residual(double L, double sqrtB) { return L * std::sinh(0.5 * L) - sqrtB; }

}  // namespace

FieldScale solve_scale(double B) {
  if (!std::isfinite(B) || B <= 0.0)
    throw std::invalid_argument("solve_scale: B must be finite and positive");
  const double sqrtB = std::sqrt(B);

  // L sinh(L/2) is strictly increasing from 0, so a sign-changing bracket
  // always exists inside [lo, hi].
  double lo = 1e-6;
  while (scale_residual(lo, sqrtB) > 0.0 && lo > 1e-300) lo *= 0.5;
  double hi = 10.0 * std::log(B + 2.0);
  while (!(scale_residual(hi, sqrtB) > 0.0)) hi *= 2.0;

  for (int it = 0; it < 200 && hi - lo > 1e-14 * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (scale_residual(mid, sqrtB) > 0.0)
      hi = mid;
    else
      lo = mid;
  }

  double L = 0.5 * (lo + hi);
  for (int it = 0; it < 4; ++it) {  // Newton polish
    const double s = std::sinh(0.5 * L), c = std::cosh(0.5 * L);
    const double g = L * s - sqrtB;
    const double dg = s + 0.5 * L * c;
    const double step = g / dg;
    if (!std::isfinite(step)) break;
    L -= step;
    if (std::abs(step) < 1e-16 * L) break;
  }

  FieldScale fs;
  fs.B = B;
  fs.L = L;
  fs.residual = std::abs(scale_residual(L, sqrtB));
  return fs;
}

double scaled_potential(const FieldScale& fs, double r, double z) {
  if (!(r > 0.0)) throw std::invalid_argument("scaled_potential: r must be positive");
  const double a = fs.L * r / std::sqrt(fs.B);
  return 1.0 / (fs.L * std::hypot(a, z));
}

double scaled_potential(double B, double r, double z) {
  return scaled_potential(solve_scale(B), r, z);
}

double delta_bound(const FieldScale& fs, double lambda, double T, double r) {
  if (!(lambda > 0.0)) throw std::invalid_argument("delta_bound: lambda must be positive");
  if (!(T >= 0.0)) throw std::invalid_argument("delta_bound: T must be nonnegative");
  if (!(r > 0.0)) throw std::invalid_argument("delta_bound: r must be positive");
  return (lambda / r + 8.0 * std::pow(lambda, 0.25) * std::pow(T, 0.75) * std::sqrt(r)) / fs.L;
}

double delta_bound(const DeltaBoundInputs& in) {
  return delta_bound(solve_scale(in.B), in.lambda, in.T, in.r);
}

LandauKernelValue landau_kernel(double B, const Eigen::Vector2d& x_perp,
                                const Eigen::Vector2d& y_perp) {
  if (!(B > 0.0)) throw std::invalid_argument("landau_kernel: B must be positive");
  const double cross = x_perp.x() * y_perp.y() - x_perp.y() * y_perp.x();
  const double dist2 = (x_perp - y_perp).squaredNorm();
  const std::complex<double> exponent(-0.25 * dist2 * B, 0.5 * cross * B);
  LandauKernelValue out;
  out.value = (B / (2.0 * M_PI)) * std::exp(exponent);
  out.B = B;
  out.x_perp = x_perp;
  out.y_perp = y_perp;
  return out;
}

double landau_averaged_potential(double B, double z, double abs_tol) {
  if (!(B > 0.0))
    throw std::invalid_argument("landau_averaged_potential: B must be positive");
  // In units t = sqrt(B) s the average is sqrt(B) * int_0^inf e^{-t^2/2}
  // t (y^2 + t^2)^{-1/2} dt with y = sqrt(B) |z|; the integrand is smooth and
  // the tail beyond t = 14 is below 1e-40.
  const double y = std::sqrt(B) * std::abs(z);
  QuadratureOptions opt;
  opt.abs_tol = abs_tol;
  auto integrand = [y](double t) { return std::exp(-0.5 * t * t) * t / std::hypot(y, t); };
  auto q = integrate_adaptive(integrand, 0.0, 14.0, opt);
  if (!q.converged)
    throw NumericError("landau_averaged_potential: quadrature did not converge",
                       std::sqrt(B) * q.value, q.error, q.intervals);
  return std::sqrt(B) * q.value;
}

double landau_averaged_potential_analytic(double B, double z) {
  if (!(B > 0.0))
    throw std::invalid_argument("landau_averaged_potential_analytic: B must be positive");
  const double y = std::sqrt(B) * std::abs(z);
  if (y < 26.0) {
    return std::sqrt(B) * std::exp(0.5 * y * y) * std::sqrt(M_PI / 2.0) *
           std::erfc(y / std::sqrt(2.0));
  }
  // asymptotic tail: (1/y)(1 - 1/y^2 + 3/y^4 - 15/y^6 + 105/y^8)
  const double u = 1.0 / (y * y);
  return std::sqrt(B) / y * (1.0 + u * (-1.0 + u * (3.0 + u * (-15.0 + u * 105.0))));
}

}  // namespace hfatom

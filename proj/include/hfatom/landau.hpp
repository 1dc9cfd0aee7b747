#ifndef HFATOM_LANDAU_HPP
#define HFATOM_LANDAU_HPP

#include <Eigen/Dense>
#include <complex>

#include "hfatom/types.hpp"

namespace hfatom {

// Solution of sqrt(B) = L * sinh(L/2), the longitudinal rescaling attached to
// field strength B.  residual is the achieved |L sinh(L/2) - sqrt(B)|.
struct FieldScale {
  double B = 0.0;
  double L = 0.0;
  double residual = 0.0;
};

FieldScale solve_scale(double B);

// V_{B,r}(z) = L^{-1} (B^{-1} L^2 r^2 + z^2)^{-1/2}, the scaled transverse
// Coulomb slice at distance r > 0.  The overload taking a FieldScale avoids
// re-solving the scale equation in grid assembly loops.
double scaled_potential(const FieldScale& fs, double r, double z);
double scaled_potential(double B, double r, double z);

struct DeltaBoundInputs {
  double lambda = 0.0;  // integral of |psi|^2
  double T = 0.0;       // integral of |psi'|^2
  double r = 0.0;       // transverse distance
  double B = 0.0;       // field strength
};

// L(B)^{-1} [ lambda/r + 8 lambda^{1/4} T^{3/4} sqrt(r) ], the delta
// approximation error bound controlling |psi(0)|^2 - int V_{B,r} |psi|^2.
double delta_bound(const DeltaBoundInputs& in);
double delta_bound(const FieldScale& fs, double lambda, double T, double r);

struct LandauKernelValue {
  std::complex<double> value;
  double B = 0.0;
  Eigen::Vector2d x_perp;
  Eigen::Vector2d y_perp;
  // The full projector carries a spin-down factor; all states here are
  // spin-polarized, so it is tracked as metadata only.
  bool spin_down = true;
};

// Lowest-Landau-band projector kernel in the symmetric gauge,
// (B/2pi) exp{ i/2 (x cross y) B - 1/4 (x-y)^2 B }.
LandauKernelValue landau_kernel(double B, const Eigen::Vector2d& x_perp,
                                const Eigen::Vector2d& y_perp);

// Coulomb potential averaged against the m = 0 lowest-Landau transverse
// density (B/2pi) exp(-B s^2 / 2), evaluated by adaptive quadrature.
// Throws NumericError (carrying the achieved tolerance) on non-convergence.
double landau_averaged_potential(double B, double z, double abs_tol = 1e-10);

// Same quantity through the scaled complementary error function; used as the
// independent route in tests and as the fast evaluator in dense grid loops.
double landau_averaged_potential_analytic(double B, double z);

}  // namespace hfatom

#endif

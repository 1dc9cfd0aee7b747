#ifndef HFATOM_MEANFIELD_HPP
#define HFATOM_MEANFIELD_HPP

#include <Eigen/Dense>

#include "hfatom/types.hpp"

namespace hfatom {

// Closed-form hyper-strong energy: -(lambda/4)(1 - lambda/2 + lambda^2/12)
// for lambda < 2, constant -1/6 beyond; C^1 at the match point.
double hyperstrong_energy(double lambda);

struct HyperstrongMinimum {
  double energy = 0.0;
  Density1D density;      // mass lambda
  int iterations = 0;
  double gradient_norm = 0.0;
  bool converged = false;
};

// Constrained minimization of int (d sqrt(rho)/dz)^2 - rho(0) + (1/2) int rho^2
// over int rho = lambda, by projected gradient descent on psi = sqrt(rho)
// with backtracking steps.  The delta attraction is the shared on-site -1/dx
// realization.  Throws NumericError with the last iterate on non-convergence.
HyperstrongMinimum minimize_hyperstrong(double lambda, const Grid1D& grid,
                                        int max_iter = 200000, double tol = 1e-9);

struct MeanfieldResidual {
  double interior_norm = 0.0;   // discrete L2 residual away from the origin
  double jump_mismatch = 0.0;   // log-derivative jump at 0 vs -psi(0)
  double combined = 0.0;
};

// Residual of -psi'' - delta(z) psi(0) + lambda psi^3 = -mu psi for a
// unit-mass psi; certifies minimizer output.
MeanfieldResidual meanfield_residual(const Wavefunction1D& psi, double lambda, double mu);

// Rayleigh-quotient multiplier for the mean-field equation at unit mass.
double meanfield_multiplier(const Wavefunction1D& psi, double lambda);

// w_{Z,a,b}(z) = (1/(Z^2 a)) (b^2/(2b+1)) e^{-b|z|/(Z a)}: the positive
// definite exponential minorant bought with a slice of kinetic energy.
double w_potential(double Z, double a, double b, double z);

// Lowest eigenvalue of p^2 + delta(z) - w_scale * W_b(z) on the grid, with
// W_b(z) = (b^2/(2b+1)) e^{-b|z|}.  The continuum operator is nonnegative at
// w_scale = 1; doubling the potential breaks it, which is the sharpness probe.
double verify_operator_inequality(double b, const Grid1D& grid, double w_scale = 1.0);

struct BoundCertificate {
  double Z = 0.0;
  int N = 0;
  double epsilon = 0.0;
  double a = 0.0;  // N^{-1-epsilon}
  double b = 0.0;  // N^{epsilon}
  Density1D sigma;
  double lower_bound = 0.0;
  double one_particle_energy = 0.0;
  double self_energy_correction = 0.0;  // (N^2/2) int int sigma w sigma
  double w0_correction = 0.0;           // w(0)/2
  double discretization_error = 0.0;    // Richardson step of the 1-particle solve
};

// Many-body lower bound N * inf spec[(1 - a(N-1)/2) p^2 - delta + N (sigma*w)
// - w(0)/2] - (N^2/2) int int sigma w sigma, on sigma's grid.  Valid for the
// rescaled delta model up to the flagged discretization error.
BoundCertificate lower_bound(double Z, int N, const Density1D& sigma, double epsilon);

// Unit-mass Gaussian profile on a grid (used as the reference sigma).
Density1D gaussian_density(const Grid1D& grid, double width, double mass = 1.0);

}  // namespace hfatom

#endif

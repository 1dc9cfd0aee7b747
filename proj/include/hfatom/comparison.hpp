#ifndef HFATOM_COMPARISON_HPP
#define HFATOM_COMPARISON_HPP

#include <Eigen/Dense>
#include <vector>

#include "hfatom/types.hpp"

namespace hfatom {

// Closed-form solution of the reflection-symmetrized model: decay rates
// kappa_n = 1/2 - (n-1)/(4Z), binding condition N < 2Z+1, and ground energy
// -sum kappa_n^2 clamped at N_o electrons.
struct ComparisonSolution {
  double Z = 0.0;
  int N = 0;
  Eigen::VectorXd kappas;
  bool bound = false;   // all kappa_n strictly positive
  double energy = 0.0;  // -sum_{n<=min(N,N_o)} kappa_n^2
  int N_o = 0;          // largest integer < 2Z+1
};

ComparisonSolution solve_comparison(double Z, int N);

// Largest integer strictly smaller than 2Z+1 (the maximal number of bound
// electrons in the symmetrized model).
int critical_number(double Z);

// Equivalent form of the bound-state energy in lambda = N/Z,
// -(1/4) { N (1 - lambda/2 + lambda^2/12) + (lambda/2 - lambda^2/8)
//          + lambda^2/(24 N) }; valid for N < 2Z+1.
double comparison_energy_lambda_form(double Z, int N);

// Normalization constant of the product-exponential ground state: one-sided
// exponential integrals over the cone times the 2^N N! symmetry multiplicity.
double tilde_normalization(double Z, int N);

// Normalized ground-state amplitude at an arbitrary point: sort |z_i| into
// the cone and evaluate c * prod exp(-kappa_i |z|_(i)).  Invariant under sign
// flips and permutations.  Throws std::domain_error in the unbound regime
// (the zero-mode machinery handles that case).
double tilde_wavefunction(const Eigen::VectorXd& z, double Z, int N);

// gamma_{i,i+1} of the modified operator that the appendix zero mode solves,
// on the cone 0 <= z_1 <= ... <= z_N; defined in the regime N > N_o.
// Satisfies gamma <= 1.
double appendix_gamma(int i, const Eigen::VectorXd& z_sorted, double Z, int N);

struct ZeroModeReport {
  double max_relative_residual = 0.0;  // of A_n psi = 0 at interior points
  double attraction_jump_error = 0.0;  // log-derivative jump at z = 0 faces vs -1
  double pair_jump_error = 0.0;        // pair-face jumps vs gamma/(2Z)
  int points = 0;
};

// Checks the factorization A_n = d/dz_n - d/dz_n(ln psi) annihilates the
// ground state (psi-tilde when bound, the appendix zero mode otherwise) and
// that the log-derivative jumps across the cone faces match the delta
// strengths.  Sample points must be interior; a point on a face is a domain
// error (the derivative jumps there).
ZeroModeReport zero_mode_residual(double Z, int N,
                                  const std::vector<Eigen::VectorXd>& sample_points);

}  // namespace hfatom

#endif

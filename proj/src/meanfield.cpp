#include "hfatom/meanfield.hpp"

#include <cmath>

#include "hfatom/quadrature.hpp"
#include "hfatom/schrod1d.hpp"

namespace hfatom {

namespace {

// Quadratic form of the Dirichlet 3-point Laplacian times dx (coefficients).
void laplacian_apply(const Eigen::VectorXd& psi, double invdx2, Eigen::VectorXd& out) {
  const Eigen::Index n = psi.size();
  out = 2.0 * invdx2 * psi;
  out.head(n - 1) -= invdx2 * psi.tail(n - 1);
  out.tail(n - 1) -= invdx2 * psi.head(n - 1);
}

double hyperstrong_functional(const Eigen::VectorXd& psi, const Grid1D& grid,
                              Eigen::VectorXd& kpsi) {
  const double dx = grid.dx();
  laplacian_apply(psi, 1.0 / (dx * dx), kpsi);
  const double kinetic = psi.dot(kpsi) * dx;
  const double attraction = psi[grid.center()] * psi[grid.center()];
  const double repulsion = 0.5 * psi.array().pow(4).sum() * dx;
  return kinetic - attraction + repulsion;
}

}  // namespace

double hyperstrong_energy(double lambda) {
  if (!(lambda >= 0.0))
    throw std::invalid_argument("hyperstrong_energy: lambda must be nonnegative");
  if (lambda >= 2.0) return -1.0 / 6.0;
  return -0.25 * lambda + 0.125 * lambda * lambda - lambda * lambda * lambda / 48.0;
}

namespace {

// Thomas solve of (K + I) d = g with K the Dirichlet 3-point Laplacian; the
// H^1 preconditioner that removes the dx^-2 stiffness from the descent.
void sobolev_solve(const Eigen::VectorXd& g, double invdx2, Eigen::VectorXd& d,
                   Eigen::VectorXd& cwork, Eigen::VectorXd& dwork) {
  const Eigen::Index n = g.size();
  const double diag = 2.0 * invdx2 + 1.0;
  const double off = -invdx2;
  cwork.resize(n);
  dwork.resize(n);
  double denom = diag;
  cwork[0] = off / denom;
  dwork[0] = g[0] / denom;
  for (Eigen::Index i = 1; i < n; ++i) {
    denom = diag - off * cwork[i - 1];
    cwork[i] = off / denom;
    dwork[i] = (g[i] - off * dwork[i - 1]) / denom;
  }
  d.resize(n);
  d[n - 1] = dwork[n - 1];
  for (Eigen::Index i = n - 2; i >= 0; --i) d[i] = dwork[i] - cwork[i] * d[i + 1];
}

}  // namespace

HyperstrongMinimum minimize_hyperstrong(double lambda, const Grid1D& grid, int max_iter,
                                        double tol) {
  if (!(lambda > 0.0))
    throw std::invalid_argument("minimize_hyperstrong: lambda must be positive");
  const double dx = grid.dx();
  const double invdx2 = 1.0 / (dx * dx);
  const int n = grid.n;
  const int c = grid.center();

  // Exponential seed with the delta-well decay; mass constraint psi^t psi = lambda/dx.
  Eigen::VectorXd psi(n);
  for (int j = 0; j < n; ++j) psi[j] = std::exp(-0.5 * std::abs(grid.node(j)));
  psi *= std::sqrt(lambda / dx) / psi.norm();

  Eigen::VectorXd kpsi(n), grad(n), dir(n), trial(n), ktrial(n), cwork(n), dwork(n);
  double energy = hyperstrong_functional(psi, grid, kpsi);
  double step = 1.0;
  HyperstrongMinimum out;

  int it = 0;
  int flat = 0;
  for (; it < max_iter; ++it) {
    grad = 2.0 * dx * kpsi;
    grad[c] -= 2.0 * psi[c];
    grad += (2.0 * dx) * psi.array().cube().matrix();
    grad -= (grad.dot(psi) / psi.squaredNorm()) * psi;  // tangent projection
    out.gradient_norm = grad.norm() * std::sqrt(dx);
    if (out.gradient_norm <= tol * std::max(1.0, std::abs(energy))) {
      out.converged = true;
      break;
    }

    sobolev_solve(grad, invdx2, dir, cwork, dwork);
    dir -= (dir.dot(psi) / psi.squaredNorm()) * psi;
    const double slope = grad.dot(dir);  // positive: dir is a descent direction

    bool accepted = false;
    for (int bt = 0; bt < 60; ++bt) {
      trial = psi - step * dir;
      trial *= std::sqrt(lambda / dx) / trial.norm();
      const double etrial = hyperstrong_functional(trial, grid, ktrial);
      if (etrial <= energy - 1e-4 * step * slope) {
        const double drop = energy - etrial;
        psi.swap(trial);
        kpsi.swap(ktrial);
        energy = etrial;
        step = std::min(step * 1.25, 8.0);
        accepted = true;
        flat = drop <= 1e-15 * std::max(1.0, std::abs(energy)) ? flat + 1 : 0;
        break;
      }
      step *= 0.5;
    }
    if (!accepted || flat > 30) {
      // No descent direction makes progress beyond rounding: stationary.
      out.converged = true;
      break;
    }
  }

  out.energy = energy;
  out.iterations = it;
  out.density.grid = grid;
  out.density.values = psi.array().square();
  if (!out.converged)
    throw NumericError("minimize_hyperstrong: flow did not reach stationarity", energy,
                       out.gradient_norm, it);
  return out;
}

double meanfield_multiplier(const Wavefunction1D& psi, double lambda) {
  const Grid1D& grid = psi.grid;
  const double dx = grid.dx();
  Eigen::VectorXd kpsi;
  laplacian_apply(psi.values, 1.0 / (dx * dx), kpsi);
  const double kinetic = psi.values.dot(kpsi) * dx;
  const double attraction = psi.values[grid.center()] * psi.values[grid.center()];
  const double quartic = psi.values.array().pow(4).sum() * dx;
  // Multiply the equation by psi and integrate; unit mass assumed.
  return -(kinetic - attraction + lambda * quartic);
}

MeanfieldResidual meanfield_residual(const Wavefunction1D& psi, double lambda,
                                     double mu) {
  if (!psi.values.allFinite())
    throw std::invalid_argument("meanfield_residual: psi must be finite");
  const Grid1D& grid = psi.grid;
  const double dx = grid.dx();
  const int n = grid.n;
  const int c = grid.center();
  Eigen::VectorXd kpsi;
  laplacian_apply(psi.values, 1.0 / (dx * dx), kpsi);

  MeanfieldResidual out;
  double acc = 0.0;
  for (int j = 1; j < n - 1; ++j) {
    if (j == c) continue;
    const double r = kpsi[j] + lambda * std::pow(psi.values[j], 3) + mu * psi.values[j];
    acc += r * r * dx;
  }
  out.interior_norm = std::sqrt(acc);

  // Second-order one-sided derivatives around the origin.
  const auto& v = psi.values;
  const double dplus = (-3.0 * v[c] + 4.0 * v[c + 1] - v[c + 2]) / (2.0 * dx);
  const double dminus = (3.0 * v[c] - 4.0 * v[c - 1] + v[c - 2]) / (2.0 * dx);
  out.jump_mismatch = std::abs((dplus - dminus) + v[c]);
  out.combined = out.interior_norm + out.jump_mismatch;
  return out;
}

double w_potential(double Z, double a, double b, double z) {
  if (!(Z > 0.0) || !(a > 0.0) || !(b > 0.0))
    throw std::invalid_argument("w_potential: Z, a, b must be positive");
  return (b * b / ((2.0 * b + 1.0) * Z * Z * a)) * std::exp(-b * std::abs(z) / (Z * a));
}

double verify_operator_inequality(double b, const Grid1D& grid, double w_scale) {
  if (!(b > 0.0)) throw std::invalid_argument("verify_operator_inequality: b > 0");
  Eigen::VectorXd pot(grid.n);
  const double amp = b * b / (2.0 * b + 1.0);
  for (int j = 0; j < grid.n; ++j)
    pot[j] = -w_scale * amp * std::exp(-b * std::abs(grid.node(j)));
  pot[grid.center()] += 1.0 / grid.dx();  // repulsive delta
  return ground_energy_only(pot, grid);
}

Density1D gaussian_density(const Grid1D& grid, double width, double mass) {
  if (!(width > 0.0)) throw std::invalid_argument("gaussian_density: width > 0");
  Density1D d;
  d.grid = grid;
  d.values.resize(grid.n);
  for (int j = 0; j < grid.n; ++j) {
    const double z = grid.node(j);
    d.values[j] = std::exp(-0.5 * z * z / (width * width)) / (width * std::sqrt(2.0 * M_PI));
  }
  d.project_mass(mass);
  return d;
}

namespace {

double one_particle_ground(const Grid1D& grid, double alpha, const Eigen::VectorXd& conv_n,
                           double w0) {
  // alpha p^2 - delta + conv_n - w0/2 == alpha (p^2 + V/alpha)
  Eigen::VectorXd pot = conv_n;
  pot.array() -= 0.5 * w0;
  pot[grid.center()] -= 1.0 / grid.dx();
  return alpha * ground_energy_only(pot / alpha, grid);
}

}  // namespace

BoundCertificate lower_bound(double Z, int N, const Density1D& sigma, double epsilon) {
  if (!(Z > 0.0) || N < 1) throw std::invalid_argument("lower_bound: bad Z or N");
  if (!(epsilon > 0.0 && epsilon < 0.5))
    throw std::invalid_argument("lower_bound: epsilon must lie in (0, 1/2)");

  BoundCertificate cert;
  cert.Z = Z;
  cert.N = N;
  cert.epsilon = epsilon;
  cert.a = std::pow(N, -1.0 - epsilon);
  cert.b = std::pow(N, epsilon);
  cert.sigma = sigma;
  cert.sigma.project_mass(1.0);

  const double borrowed = cert.a * (N - 1) / 2.0;
  if (!(borrowed < 1.0))
    throw std::invalid_argument("lower_bound: kinetic term exhausted, a(N-1)/2 >= 1");
  const double alpha = 1.0 - borrowed;

  const Grid1D& grid = sigma.grid;
  const double dx = grid.dx();
  const int n = grid.n;
  const double w0 = w_potential(Z, cert.a, cert.b, 0.0);
  cert.w0_correction = 0.5 * w0;

  // Direct-summation convolution; certificates should not carry transform
  // truncation error.
  Eigen::VectorXd conv = Eigen::VectorXd::Zero(n);
  Eigen::VectorXd wtable(2 * n - 1);
  for (int k = 0; k < 2 * n - 1; ++k)
    wtable[k] = w_potential(Z, cert.a, cert.b, (k - (n - 1)) * dx);
  for (int i = 0; i < n; ++i) {
    double s = 0.0;
    for (int j = 0; j < n; ++j) s += wtable[i - j + (n - 1)] * cert.sigma.values[j];
    conv[i] = s * dx;
  }

  cert.self_energy_correction =
      0.5 * N * N * cert.sigma.values.dot(conv) * dx;

  const Eigen::VectorXd conv_n = N * conv;
  cert.one_particle_energy = one_particle_ground(grid, alpha, conv_n, w0);
  cert.lower_bound = N * cert.one_particle_energy - cert.self_energy_correction;

  // 1-particle discretization flag: same operator on the 2x-coarser grid.
  if (n >= 5) {
    const int nc = (n - 1) / 2 + 1;
    if (nc % 2 == 1 && nc >= 3) {
      Grid1D coarse(grid.half_width, nc);
      Eigen::VectorXd conv_c(nc);
      for (int j = 0; j < nc; ++j) conv_c[j] = conv_n[2 * j];
      const double ec = one_particle_ground(coarse, alpha, conv_c, w0);
      cert.discretization_error =
          N * std::abs(cert.one_particle_energy - ec) / 3.0;
    }
  }
  return cert;
}

}  // namespace hfatom

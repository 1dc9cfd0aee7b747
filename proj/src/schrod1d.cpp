#include "hfatom/schrod1d.hpp"

#include <cmath>
#include <limits>

namespace hfatom {

namespace {

// Number of eigenvalues of the tridiagonal (diag, off) strictly below x.
int sturm_count(const Eigen::VectorXd& diag, double off, double x) {
  const int n = static_cast<int>(diag.size());
  const double off2 = off * off;
  int count = 0;
  double q = diag[0] - x;
  if (q < 0.0) ++count;
  for (int i = 1; i < n; ++i) {
    if (q == 0.0) q = 1e-300;
    q = diag[i] - x - off2 / q;
    if (q < 0.0) ++count;
  }
  return count;
}

double sturm_lowest(const Eigen::VectorXd& diag, double off) {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  const int n = static_cast<int>(diag.size());
  for (int i = 0; i < n; ++i) {  // Gershgorin bracket
    const double radius = (i == 0 || i == n - 1) ? std::abs(off) : 2.0 * std::abs(off);
    lo = std::min(lo, diag[i] - radius);
    hi = std::max(hi, diag[i] + radius);
  }
  const double scale = std::max(std::abs(lo), std::abs(hi));
  for (int it = 0; it < 200 && hi - lo > 4.0 * 2.2e-16 * scale; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (sturm_count(diag, off, mid) >= 1)
      hi = mid;
    else
      lo = mid;
  }
  return 0.5 * (lo + hi);
}

// Thomas solve of (T - sigma) x = rhs with tiny-pivot replacement, for
// inverse iteration near an eigenvalue.
void shifted_solve(const Eigen::VectorXd& diag, double off, double sigma,
                   Eigen::VectorXd& x) {
  const int n = static_cast<int>(diag.size());
  static thread_local Eigen::VectorXd c, d;
  c.resize(n);
  d.resize(n);
  double denom = diag[0] - sigma;
  if (std::abs(denom) < 1e-300) denom = 1e-300;
  c[0] = off / denom;
  d[0] = x[0] / denom;
  for (int i = 1; i < n; ++i) {
    denom = diag[i] - sigma - off * c[i - 1];
    if (std::abs(denom) < 1e-300) denom = 1e-300;
    c[i] = off / denom;
    d[i] = (x[i] - off * d[i - 1]) / denom;
  }
  x[n - 1] = d[n - 1];
  for (int i = n - 2; i >= 0; --i) x[i] = d[i] - c[i] * x[i + 1];
}

}  // namespace

Eigen::VectorXd delta_well_potential(const Grid1D& grid, double Z,
                                     DeltaRegularization scheme, double width) {
  Eigen::VectorXd v = Eigen::VectorXd::Zero(grid.n);
  if (scheme == DeltaRegularization::OnSite) {
    v[grid.center()] = -Z / grid.dx();
  } else {
    if (!(width > 0.0))
      throw std::invalid_argument("delta_well_potential: Gaussian scheme needs width > 0");
    const double norm = 1.0 / (width * std::sqrt(2.0 * M_PI));
    for (int j = 0; j < grid.n; ++j) {
      const double z = grid.node(j);
      v[j] = -Z * norm * std::exp(-0.5 * z * z / (width * width));
    }
  }
  return v;
}

double ground_energy_only(const Eigen::VectorXd& potential, const Grid1D& grid) {
  if (potential.size() != grid.n)
    throw std::invalid_argument("ground_energy_only: potential size mismatch");
  if (!potential.allFinite())
    throw std::invalid_argument("ground_energy_only: potential must be finite");
  const double dx = grid.dx();
  const Eigen::VectorXd diag = potential.array() + 2.0 / (dx * dx);
  return sturm_lowest(diag, -1.0 / (dx * dx));
}

GroundState ground_state(const Eigen::VectorXd& potential, const Grid1D& grid,
                         const EigensolverOptions& opt) {
  if (potential.size() != grid.n)
    throw std::invalid_argument("ground_state: potential size mismatch");
  if (!potential.allFinite())
    throw std::invalid_argument("ground_state: potential must be finite");

  const double dx = grid.dx();
  const double off = -1.0 / (dx * dx);
  const Eigen::VectorXd diag = potential.array() + 2.0 / (dx * dx);
  const double energy0 = sturm_lowest(diag, off);
  const double normest = diag.cwiseAbs().maxCoeff() + 2.0 * std::abs(off);

  // Inverse iteration from a flat start; the shift is the converged Sturm
  // eigenvalue, so one or two sweeps usually suffice.
  Eigen::VectorXd v = Eigen::VectorXd::Ones(grid.n);
  v.normalize();
  double energy = energy0;
  double resid = std::numeric_limits<double>::infinity();
  int it = 0;
  for (; it < opt.max_iterations; ++it) {
    shifted_solve(diag, off, energy0, v);
    v.normalize();
    // Rayleigh quotient and residual of the coefficient-space eigenproblem.
    Eigen::VectorXd hv = diag.cwiseProduct(v);
    hv.head(grid.n - 1) += off * v.tail(grid.n - 1);
    hv.tail(grid.n - 1) += off * v.head(grid.n - 1);
    energy = v.dot(hv);
    resid = (hv - energy * v).norm();
    if (resid <= opt.residual_tol * normest) break;
  }
  if (resid > opt.residual_tol * normest)
    throw NumericError("ground_state: inverse iteration did not converge", energy, resid,
                       it);

  GroundState out;
  out.psi.grid = grid;
  out.psi.values = v / std::sqrt(dx);  // discrete L2 normalization
  if (out.psi.values[grid.center()] < 0.0) out.psi.values = -out.psi.values;
  out.report.energy = energy;
  out.report.method = "eigensolver";
  out.report.dx = dx;
  out.report.error_estimate = resid;
  out.report.residual = resid;
  out.report.iterations = it + 1;
  return out;
}

DeltaWellSolution delta_well_exact(double Z) {
  if (!(Z > 0.0)) throw std::invalid_argument("delta_well_exact: Z must be positive");
  DeltaWellSolution out;
  out.Z = Z;
  out.amplitude = std::sqrt(0.5 * Z);
  out.decay_rate = 0.5 * Z;
  out.report.energy = -0.25 * Z * Z;
  out.report.method = "analytic";
  return out;
}

double zero_energy_solution(double b, double z) {
  return 1.0 - std::exp(-b * std::abs(z)) / (2.0 * b + 1.0);
}

double wtilde_potential(double b, double z) {
  const double u = std::exp(-b * std::abs(z));
  return b * b * u / (2.0 * b + 1.0 - u);
}

ZeroEnergyReport zero_energy_check(double b, int samples, double z_lo, double z_hi) {
  if (!(b > 0.0)) throw std::invalid_argument("zero_energy_check: b must be positive");
  ZeroEnergyReport out;
  out.samples = samples;
  for (int k = 0; k < samples; ++k) {
    double z = z_lo + (z_hi - z_lo) * k / (samples - 1.0);
    if (k % 2 == 1) z = -z;  // the solution is even; exercise both sides
    const double u = std::exp(-b * std::abs(z));
    const double f = 1.0 - u / (2.0 * b + 1.0);
    const double fpp = -b * b * u / (2.0 * b + 1.0);  // analytic second derivative
    const double residual = -fpp - wtilde_potential(b, z) * f;
    out.max_ode_residual = std::max(out.max_ode_residual, std::abs(residual));
  }
  const double jump = 2.0 * b / (2.0 * b + 1.0);  // f'(0+) - f'(0-)
  out.jump_mismatch = std::abs(jump - zero_energy_solution(b, 0.0));
  return out;
}

HydrogenExpansionResult hydrogen_expansion(double B) {
  if (!(B > 2.0 * std::exp(1.0)))
    throw std::invalid_argument("hydrogen_expansion: requires B > 2e");
  const double euler = 0.57721566490153286;
  const double C = 0.5 * euler;
  const double l = std::log(0.5 * B);
  const double ll = std::log(l);
  HydrogenExpansionResult out;
  out.value = -0.25 * l * l + l * ll - (C + M_LN2) * l - ll * ll +
              2.0 * (C - 1.0 + M_LN2) * ll;
  return out;
}

}  // namespace hfatom

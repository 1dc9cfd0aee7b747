#include "hfatom/fewbody.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>

#include "hfatom/landau.hpp"
#include "hfatom/quadrature.hpp"

namespace hfatom {

namespace {

double gaussian_bump(double z, double width) {
  return std::exp(-0.5 * z * z / (width * width)) / (width * std::sqrt(2.0 * M_PI));
}

// 1D sample of a regularized delta at the difference/sum coordinate value.
double delta_sample(double z, const Regularization& reg, double dx, bool at_node) {
  if (reg.scheme == DeltaRegularization::OnSite) return at_node ? 1.0 / dx : 0.0;
  return gaussian_bump(z, reg.width);
}

void validate(ModelFamily family, const ModelParams& p, const Regularization& reg) {
  if (!(p.Z > 0.0)) throw std::invalid_argument("assemble: Z must be positive");
  if (p.N < 1) throw std::invalid_argument("assemble: N must be >= 1");
  const bool parametric =
      family == ModelFamily::ParametricUnscaled || family == ModelFamily::ParametricScaled;
  if (parametric) {
    if (static_cast<int>(p.transverse.size()) != p.N)
      throw std::invalid_argument("assemble: need one transverse vector per particle");
    for (const auto& v : p.transverse)
      if (!(v.norm() > 0.0))
        throw std::invalid_argument("assemble: transverse vectors must be nonzero");
    for (std::size_t i = 0; i < p.transverse.size(); ++i)
      for (std::size_t j = i + 1; j < p.transverse.size(); ++j)
        if (!((p.transverse[i] - p.transverse[j]).norm() > 0.0))
          throw std::invalid_argument(
              "assemble: coinciding transverse coordinates are refused");
    if (family == ModelFamily::ParametricScaled && !(p.B > 0.0))
      throw std::invalid_argument("assemble: scaled family needs B > 0");
  } else if (!p.transverse.empty()) {
    throw std::invalid_argument("assemble: transverse coordinates only apply to parametric families");
  }
  if (reg.scheme == DeltaRegularization::Gaussian && !(reg.width > 0.0))
    throw std::invalid_argument("assemble: Gaussian regularization needs width > 0");
}

}  // namespace

std::size_t dimension_budget() {
  if (const char* env = std::getenv("HFATOM_MAX_DIM")) {
    const long long v = std::atoll(env);
    if (v > 0) return static_cast<std::size_t>(v);
  }
  return 8'000'000;
}

HamiltonianHandle::HamiltonianHandle(ModelFamily family, ModelParams params, Grid1D grid,
                                     Regularization reg, Eigen::VectorXd diag)
    : family_(family), params_(std::move(params)), grid_(grid), reg_(reg),
      diag_(std::move(diag)) {
  strides_.resize(params_.N);
  std::size_t s = 1;
  for (int a = 0; a < params_.N; ++a) {
    strides_[a] = s;
    s *= grid_.n;
  }
}

void HamiltonianHandle::apply(const Eigen::VectorXd& x, Eigen::VectorXd& y) const {
  const std::size_t d = dimension();
  const int n = grid_.n;
  const double invdx2 = 1.0 / (grid_.dx() * grid_.dx());
  y = diag_.cwiseProduct(x);
  y += (2.0 * params_.N * invdx2) * x;  // the 2/dx^2 of every axis stencil
  for (int a = 0; a < params_.N; ++a) {
    const std::size_t s = strides_[a];
    const std::size_t block = s * n;
    for (std::size_t base = 0; base < d; base += block) {
      for (int k = 1; k < n; ++k) {
        const std::size_t row = base + k * s;
        // couple plane k with plane k-1 along axis a
        y.segment(row, s).noalias() -= invdx2 * x.segment(row - s, s);
        y.segment(row - s, s).noalias() -= invdx2 * x.segment(row, s);
      }
    }
  }
}

void HamiltonianHandle::symmetrize(Eigen::VectorXd& x) const {
  const int N = params_.N;
  if (N == 1) return;
  const std::size_t d = dimension();
  const int n = grid_.n;
  std::vector<int> perm(N);
  std::iota(perm.begin(), perm.end(), 0);
  Eigen::VectorXd acc = Eigen::VectorXd::Zero(d);
  std::vector<int> digits(N);
  int nperm = 0;
  do {
    bool identity = true;
    for (int a = 0; a < N; ++a) identity = identity && perm[a] == a;
    if (identity) {
      acc += x;
    } else {
      std::fill(digits.begin(), digits.end(), 0);
      for (std::size_t i = 0; i < d; ++i) {
        std::size_t pi = 0;
        for (int a = 0; a < N; ++a) pi += digits[perm[a]] * strides_[a];
        acc[pi] += x[i];
        for (int a = 0; a < N; ++a) {  // odometer increment
          if (++digits[a] < n) break;
          digits[a] = 0;
        }
      }
    }
    ++nperm;
  } while (std::next_permutation(perm.begin(), perm.end()));
  x = acc / nperm;
}

double HamiltonianHandle::norm_estimate() const {
  const double kinetic_max = 4.0 * params_.N / (grid_.dx() * grid_.dx());
  return std::max(std::abs(diag_.minCoeff()), diag_.maxCoeff() + kinetic_max);
}

HamiltonianHandle assemble(ModelFamily family, const ModelParams& params,
                           const Grid1D& grid, const Regularization& reg,
                           std::size_t max_dimension) {
  validate(family, params, reg);
  const int n = grid.n;
  const int N = params.N;
  double dim_check = 1.0;
  for (int a = 0; a < N; ++a) dim_check *= n;
  if (dim_check > static_cast<double>(max_dimension))
    throw CapacityError("assemble: n^N exceeds the configured dimension budget");
  const std::size_t dim = static_cast<std::size_t>(dim_check);
  const double dx = grid.dx();

  // Per-particle well samples and pair tables in the index difference/sum.
  Eigen::MatrixXd wells(n, N);
  FieldScale fs;
  if (family == ModelFamily::ParametricScaled) fs = solve_scale(params.B);
  for (int i = 0; i < N; ++i) {
    for (int j = 0; j < n; ++j) {
      const double z = grid.node(j);
      double w = 0.0;
      switch (family) {
        case ModelFamily::Delta:
          w = -params.Z * delta_sample(z, reg, dx, j == grid.center());
          break;
        case ModelFamily::DeltaRescaled:
        case ModelFamily::SymmetrizedComparison:
          w = -delta_sample(z, reg, dx, j == grid.center());
          break;
        case ModelFamily::ParametricUnscaled:
          w = -params.Z / std::hypot(z, params.transverse[i].norm());
          break;
        case ModelFamily::ParametricScaled:
          w = -params.Z * scaled_potential(fs, params.transverse[i].norm(), z);
          break;
      }
      wells(j, i) = w;
    }
  }

  // pair_diff(k) is the interaction sampled at z_i - z_j = (k - (n-1)) dx;
  // pair_sum(k) likewise at z_i + z_j.  The symmetric grid makes z_i = -z_j
  // exact, so the reflected delta lands on nodes.
  std::vector<Eigen::VectorXd> pair_diff;  // one table per (i<j) pair when needed
  Eigen::VectorXd pair_sum;
  const int table = 2 * n - 1;
  auto pair_index = [n](int ji, int jj) { return ji - jj + (n - 1); };
  if (N > 1) {
    switch (family) {
      case ModelFamily::Delta:
      case ModelFamily::DeltaRescaled:
      case ModelFamily::SymmetrizedComparison: {
        const double coupling = family == ModelFamily::Delta ? 1.0
                                : family == ModelFamily::DeltaRescaled
                                    ? 1.0 / params.Z
                                    : 0.5 / params.Z;
        Eigen::VectorXd t(table);
        for (int k = 0; k < table; ++k) {
          const double z = (k - (n - 1)) * dx;
          t[k] = coupling * delta_sample(z, reg, dx, k == n - 1);
        }
        pair_diff.assign(1, t);
        if (family == ModelFamily::SymmetrizedComparison) pair_sum = t;  // same profile
        break;
      }
      case ModelFamily::ParametricUnscaled:
      case ModelFamily::ParametricScaled: {
        for (int i = 0; i < N; ++i)
          for (int j = i + 1; j < N; ++j) {
            const double r = (params.transverse[i] - params.transverse[j]).norm();
            Eigen::VectorXd t(table);
            for (int k = 0; k < table; ++k) {
              const double z = (k - (n - 1)) * dx;
              t[k] = family == ModelFamily::ParametricUnscaled
                         ? 1.0 / std::hypot(z, r)
                         : scaled_potential(fs, r, z);
            }
            pair_diff.push_back(t);
          }
        break;
      }
    }
  }

  Eigen::VectorXd diag(dim);
  std::vector<int> digits(N, 0);
  for (std::size_t idx = 0; idx < dim; ++idx) {
    double v = 0.0;
    for (int a = 0; a < N; ++a) v += wells(digits[a], a);
    int pair = 0;
    for (int i = 0; i < N; ++i)
      for (int j = i + 1; j < N; ++j, ++pair) {
        const Eigen::VectorXd& t = pair_diff.size() == 1 ? pair_diff[0] : pair_diff[pair];
        v += t[pair_index(digits[i], digits[j])];
        if (pair_sum.size() > 0) v += pair_sum[digits[i] + digits[j]];
      }
    diag[idx] = v;
    for (int a = 0; a < N; ++a) {
      if (++digits[a] < n) break;
      digits[a] = 0;
    }
  }

  return HamiltonianHandle(family, params, grid, reg, std::move(diag));
}

EnergyReport ground_energy(const HamiltonianHandle& handle, SymmetrySector sector,
                           std::uint64_t seed, const LanczosOptions& opt,
                           Eigen::VectorXd* eigenvector) {
  ApplyFn apply = [&handle](const Eigen::VectorXd& x, Eigen::VectorXd& y) {
    handle.apply(x, y);
  };
  ProjectFn project = [&handle](Eigen::VectorXd& x) { handle.symmetrize(x); };
  const ProjectFn* proj = sector == SymmetrySector::Bosonic ? &project : nullptr;

  LanczosResult res = lanczos_lowest(apply, handle.dimension(), handle.norm_estimate(),
                                     seed, opt, proj, eigenvector);
  if (!res.converged)
    throw NumericError("ground_energy: Lanczos did not converge", res.eigenvalue,
                       res.residual, res.matvecs);
  EnergyReport rep;
  rep.energy = res.eigenvalue;
  rep.method = "eigensolver";
  rep.dx = handle.grid().dx();
  rep.error_estimate = res.residual;
  rep.residual = res.residual;
  rep.iterations = res.matvecs;
  return rep;
}

EnergyReport parametric_energy(double Z, int N,
                               const std::vector<Eigen::Vector2d>& x_perp,
                               const Grid1D& grid, std::uint64_t seed,
                               const LanczosOptions& opt) {
  ModelParams p;
  p.Z = Z;
  p.N = N;
  p.transverse = x_perp;
  const HamiltonianHandle h = assemble(ModelFamily::ParametricUnscaled, p, grid);
  return ground_energy(h, SymmetrySector::None, seed, opt);
}

SpotCheckResult superharmonic_spot_check(double Z, int N, const Eigen::Vector2d& center,
                                         double radius, int angular_points,
                                         const SpotCheckOptions& opt) {
  if (!(radius > 0.0)) throw std::invalid_argument("superharmonic_spot_check: radius > 0");
  if (!(radius < center.norm()))
    throw std::domain_error("superharmonic_spot_check: circle touches the origin");
  if (angular_points < 1)
    throw std::invalid_argument("superharmonic_spot_check: need angular points");
  if (N != 1 && !(N == 2 && opt.frozen.size() == 1))
    throw std::invalid_argument(
        "superharmonic_spot_check: N = 1, or N = 2 with one frozen coordinate");

  auto energy_at = [&](const Eigen::Vector2d& x1) {
    if (N == 1) {
      // one particle: the 1D solver is the cheap exact route
      Eigen::VectorXd pot(opt.grid.n);
      const double r = x1.norm();
      for (int j = 0; j < opt.grid.n; ++j)
        pot[j] = -Z / std::hypot(opt.grid.node(j), r);
      return ground_energy_only(pot, opt.grid);
    }
    std::vector<Eigen::Vector2d> xs{x1, opt.frozen[0]};
    return parametric_energy(Z, N, xs, opt.grid, opt.seed).energy;
  };

  SpotCheckResult out;
  out.center_energy = energy_at(center);
  out.circle_energies.reserve(angular_points);
  double sum = 0.0;
  for (int k = 0; k < angular_points; ++k) {
    const double th = 2.0 * M_PI * k / angular_points;
    const Eigen::Vector2d x = center + radius * Eigen::Vector2d(std::cos(th), std::sin(th));
    const double e = energy_at(x);
    out.circle_energies.push_back(e);
    out.circle_radii.push_back(x.norm());
    sum += e;
  }
  out.circle_average = sum / angular_points;
  return out;
}

EnergyReport extrapolate_delta_energy(double Z, int N,
                                      const std::vector<std::pair<Grid1D, Regularization>>& ladder,
                                      SymmetrySector sector, std::uint64_t seed,
                                      const LanczosOptions& opt) {
  if (ladder.size() < 2)
    throw std::invalid_argument("extrapolate_delta_energy: need at least two rungs");
  for (std::size_t k = 1; k < ladder.size(); ++k)
    if (!(ladder[k].first.dx() < ladder[k - 1].first.dx()))
      throw std::invalid_argument("extrapolate_delta_energy: ladder must refine dx");

  ModelParams p;
  p.Z = Z;
  p.N = N;
  std::vector<double> energies;
  for (const auto& [grid, reg] : ladder) {
    const HamiltonianHandle h = assemble(ModelFamily::Delta, p, grid, reg);
    energies.push_back(ground_energy(h, sector, seed, opt).energy);
  }
  const double ratio = ladder[ladder.size() - 2].first.dx() / ladder.back().first.dx();
  RichardsonResult rr = richardson_extrapolate(energies, ratio);
  EnergyReport rep;
  rep.energy = rr.value;
  rep.method = "extrapolated";
  rep.dx = ladder.back().first.dx();
  rep.error_estimate = rr.error_estimate;
  rep.monotone = rr.monotone;
  return rep;
}

}  // namespace hfatom

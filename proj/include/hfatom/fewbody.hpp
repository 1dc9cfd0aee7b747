#ifndef HFATOM_FEWBODY_HPP
#define HFATOM_FEWBODY_HPP

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "hfatom/lanczos.hpp"
#include "hfatom/schrod1d.hpp"
#include "hfatom/types.hpp"

namespace hfatom {

enum class ModelFamily {
  Delta,                  // -Z delta wells, unit pair deltas
  DeltaRescaled,          // -delta wells, 1/Z pair deltas
  ParametricUnscaled,     // Coulomb slices at transverse offsets x_perp
  ParametricScaled,       // V_{B,r} slices at transverse offsets y_perp
  SymmetrizedComparison,  // -delta wells, (1/2Z)[delta(z_i-z_j)+delta(z_i+z_j)]
};

struct ModelParams {
  double Z = 1.0;
  int N = 1;
  double B = 0.0;                           // scaled family only
  std::vector<Eigen::Vector2d> transverse;  // parametric families only
  double lambda() const { return N / Z; }
};

enum class SymmetrySector { Bosonic, None };

struct Regularization {
  DeltaRegularization scheme = DeltaRegularization::OnSite;
  double width = 0.0;  // Gaussian scheme only
};

// Dimension budget for n^N grids; overridable with HFATOM_MAX_DIM.
std::size_t dimension_budget();

// Assembled N-particle operator: the N-fold sum of 1D 3-point Laplacians plus
// a precomputed diagonal potential.  Immutable and safely shareable; apply()
// touches the 2N-stencil plus the diagonal and nothing else.
class HamiltonianHandle {
 public:
  HamiltonianHandle(ModelFamily family, ModelParams params, Grid1D grid,
                    Regularization reg, Eigen::VectorXd diag);

  ModelFamily family() const { return family_; }
  const ModelParams& params() const { return params_; }
  const Grid1D& grid() const { return grid_; }
  const Regularization& regularization() const { return reg_; }
  std::size_t dimension() const { return static_cast<std::size_t>(diag_.size()); }
  const Eigen::VectorXd& diagonal() const { return diag_; }

  void apply(const Eigen::VectorXd& x, Eigen::VectorXd& y) const;
  void symmetrize(Eigen::VectorXd& x) const;  // average over axis permutations
  double norm_estimate() const;

 private:
  ModelFamily family_;
  ModelParams params_;
  Grid1D grid_;
  Regularization reg_;
  Eigen::VectorXd diag_;
  std::vector<std::size_t> strides_;
};

HamiltonianHandle assemble(ModelFamily family, const ModelParams& params,
                           const Grid1D& grid, const Regularization& reg = {},
                           std::size_t max_dimension = dimension_budget());

// Lowest eigenvalue by seeded thick-restart Lanczos, optionally projected to
// the bosonic sector each iteration.  Deterministic for a fixed seed.
EnergyReport ground_energy(const HamiltonianHandle& handle, SymmetrySector sector,
                           std::uint64_t seed, const LanczosOptions& opt = {},
                           Eigen::VectorXd* eigenvector = nullptr);

// E_{Z,N}(x_perp): ground energy of the unscaled parametric family.
EnergyReport parametric_energy(double Z, int N,
                               const std::vector<Eigen::Vector2d>& x_perp,
                               const Grid1D& grid, std::uint64_t seed = 1,
                               const LanczosOptions& opt = {});

struct SpotCheckOptions {
  Grid1D grid{25.0, 2501};
  std::vector<Eigen::Vector2d> frozen;  // remaining transverse coordinates (N = 2)
  std::uint64_t seed = 1;
};

struct SpotCheckResult {
  double center_energy = 0.0;
  double circle_average = 0.0;
  std::vector<double> circle_energies;
  std::vector<double> circle_radii;  // |x_perp| of each circle sample
};

// Mean-value probe of the superharmonicity of E_{Z,N} in one transverse
// coordinate: average over an origin-avoiding circle vs the center value.
SpotCheckResult superharmonic_spot_check(double Z, int N, const Eigen::Vector2d& center,
                                         double radius, int angular_points,
                                         const SpotCheckOptions& opt = {});

// Richardson-extrapolated delta-model ground energy over a refinement ladder.
EnergyReport extrapolate_delta_energy(double Z, int N,
                                      const std::vector<std::pair<Grid1D, Regularization>>& ladder,
                                      SymmetrySector sector = SymmetrySector::None,
                                      std::uint64_t seed = 1,
                                      const LanczosOptions& opt = {});

}  // namespace hfatom

#endif

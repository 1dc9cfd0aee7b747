#ifndef HFATOM_TYPES_HPP
#define HFATOM_TYPES_HPP

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>
#include <string>

namespace hfatom {

// Thrown when an operation does not reach its requested accuracy.
// Carries the best value obtained so far and the achieved residual/tolerance.
class NumericError : public std::runtime_error {
 public:
  NumericError(const std::string& what, double best, double achieved, int iterations = 0)
      : std::runtime_error(what), best_value(best), achieved_tolerance(achieved),
        iterations(iterations) {}
  double best_value;
  double achieved_tolerance;
  int iterations;
};

// Thrown when a requested problem exceeds the configured size budget.
class CapacityError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Uniform symmetric grid on [-half_width, half_width] with an odd number of
// nodes, so z = 0 is always a node.
struct Grid1D {
  double half_width = 0.0;
  int n = 0;

  Grid1D() = default;
  Grid1D(double half_width_, int n_) : half_width(half_width_), n(n_) {
    if (!(half_width > 0.0) || !std::isfinite(half_width))
      throw std::invalid_argument("Grid1D: half_width must be positive and finite");
    if (n < 3 || n % 2 == 0)
      throw std::invalid_argument("Grid1D: n must be odd and >= 3");
  }

  double dx() const { return 2.0 * half_width / (n - 1); }
  double node(int j) const { return -half_width + j * dx(); }
  int center() const { return (n - 1) / 2; }

  Eigen::VectorXd nodes() const {
    return Eigen::VectorXd::LinSpaced(n, -half_width, half_width);
  }
};

// Energy value plus the discretization metadata needed to judge it.
struct EnergyReport {
  double energy = 0.0;
  std::string method;            // "eigensolver" | "analytic" | "extrapolated"
  double dx = 0.0;
  double error_estimate = 0.0;   // Richardson step or solver residual
  int iterations = 0;
  double residual = 0.0;
  bool monotone = true;          // false if an extrapolation ladder converged non-monotonically
};

// Real grid function, normalized so that sum(values^2) * dx = 1.
struct Wavefunction1D {
  Grid1D grid;
  Eigen::VectorXd values;

  double squared_norm() const { return values.squaredNorm() * grid.dx(); }

  // Fixes discrete L2 norm to one and the sign so the value at z = 0 is >= 0.
  void normalize() {
    double nrm = std::sqrt(squared_norm());
    if (nrm == 0.0) throw std::invalid_argument("Wavefunction1D: zero norm");
    values /= nrm;
    if (values[grid.center()] < 0.0) values = -values;
  }

  // Piecewise-linear continuous embedding.
  double operator()(double z) const {
    if (z <= -grid.half_width || z >= grid.half_width) return 0.0;
    double t = (z + grid.half_width) / grid.dx();
    int j = static_cast<int>(std::floor(t));
    if (j >= grid.n - 1) return values[grid.n - 1];
    double w = t - j;
    return (1.0 - w) * values[j] + w * values[j + 1];
  }
};

// Nonnegative grid function carrying a mass (integral) target.
struct Density1D {
  Grid1D grid;
  Eigen::VectorXd values;

  double mass() const { return values.sum() * grid.dx(); }

  void project_mass(double target) {
    if (!(target > 0.0)) throw std::invalid_argument("Density1D: target mass must be positive");
    double m = mass();
    if (m <= 0.0) throw std::invalid_argument("Density1D: cannot scale zero density");
    values *= target / m;
  }
};

}  // namespace hfatom

#endif

#ifndef HFATOM_LANCZOS_HPP
#define HFATOM_LANCZOS_HPP

#include <Eigen/Dense>
#include <cstdint>
#include <functional>

namespace hfatom {

struct LanczosOptions {
  double rel_tol = 1e-8;   // convergence: residual <= max(abs_tol, rel_tol * norm_estimate)
  double abs_tol = 0.0;
  int max_matvecs = 8000;
  int max_basis = 64;      // stored Lanczos vectors (thick restart beyond this)
  int keep = 16;           // Ritz vectors retained at a restart
  std::uint64_t memory_budget_bytes = 1'500'000'000;  // caps max_basis for huge problems
};

struct LanczosResult {
  double eigenvalue = 0.0;
  double residual = 0.0;   // explicit ||Av - lambda v|| at exit
  int matvecs = 0;
  bool converged = false;
};

using ApplyFn = std::function<void(const Eigen::VectorXd&, Eigen::VectorXd&)>;
using ProjectFn = std::function<void(Eigen::VectorXd&)>;

// Lowest eigenvalue of a symmetric operator by thick-restart Lanczos with
// full reorthogonalization inside the stored basis.  Deterministic for a
// fixed seed (single-threaded, fixed reduction order).  The optional
// projector is applied to the start vector and after every operator
// application; it must commute with the operator.
LanczosResult lanczos_lowest(const ApplyFn& apply, Eigen::Index dim,
                             double norm_estimate, std::uint64_t seed,
                             const LanczosOptions& opt = {},
                             const ProjectFn* project = nullptr,
                             Eigen::VectorXd* eigenvector = nullptr);

}  // namespace hfatom

#endif

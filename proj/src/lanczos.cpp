#include "hfatom/lanczos.hpp"

#include <algorithm>
#include <cmath>

#include "hfatom/types.hpp"

namespace hfatom {

namespace {

// splitmix64: tiny, platform-independent generator for reproducible starts.
struct SplitMix64 {
  std::uint64_t state;
  explicit SplitMix64(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  double uniform() {  // in [-0.5, 0.5)
    return static_cast<double>(next() >> 11) * (1.0 / 9007199254740992.0) - 0.5;
  }
};

void fill_random(Eigen::VectorXd& v, SplitMix64& rng) {
  for (Eigen::Index i = 0; i < v.size(); ++i) v[i] = rng.uniform();
}

}  // namespace

LanczosResult lanczos_lowest(const ApplyFn& apply, Eigen::Index dim,
                             double norm_estimate, std::uint64_t seed,
                             const LanczosOptions& opt, const ProjectFn* project,
                             Eigen::VectorXd* eigenvector) {
  if (dim < 1) throw std::invalid_argument("lanczos_lowest: empty problem");

  int m = std::min<Eigen::Index>(opt.max_basis, dim);
  const std::uint64_t per_vec = static_cast<std::uint64_t>(dim) * sizeof(double);
  if (per_vec * static_cast<std::uint64_t>(m) > opt.memory_budget_bytes)
    m = std::max<int>(32, static_cast<int>(opt.memory_budget_bytes / per_vec));
  const int keep = std::min(opt.keep, m - 8 > 1 ? m - 8 : 1);
  const double tol = std::max(opt.abs_tol, opt.rel_tol * norm_estimate);

  Eigen::MatrixXd V(dim, m + 1);          // Lanczos/Ritz basis + residual slot
  Eigen::MatrixXd T = Eigen::MatrixXd::Zero(m + 1, m + 1);
  Eigen::VectorXd w(dim), tmp(dim), coef(m + 1);

  SplitMix64 rng(seed ^ 0x5eed5eed5eed5eedull);
  {
    Eigen::VectorXd v0(dim);
    fill_random(v0, rng);
    if (project) (*project)(v0);
    double n0 = v0.norm();
    while (n0 < 1e-12) {  // projector may annihilate the start; redraw
      fill_random(v0, rng);
      if (project) (*project)(v0);
      n0 = v0.norm();
    }
    V.col(0) = v0 / n0;
  }

  LanczosResult out;
  int j = 0;          // vectors currently in the basis beyond the locked set
  int locked = 0;     // leading thick-restart block size
  double beta_prev = 0.0;
  Eigen::VectorXd ritz_coeff;

  auto reorthogonalize = [&](Eigen::VectorXd& x, int cols) {
    for (int pass = 0; pass < 2; ++pass) {
      coef.head(cols).noalias() = V.leftCols(cols).transpose() * x;
      x.noalias() -= V.leftCols(cols) * coef.head(cols);
    }
  };

  while (out.matvecs < opt.max_matvecs) {
    const int col = locked + j;  // index of the vector being expanded
    apply(V.col(col), w);
    if (project) (*project)(w);
    ++out.matvecs;

    if (j == 0 && locked > 0) {
      // First step after a thick restart: subtract the arrowhead couplings.
      for (int i = 0; i < locked; ++i) w -= T(i, col) * V.col(i);
    } else if (j > 0) {
      w -= beta_prev * V.col(col - 1);
    }
    const double alpha = V.col(col).dot(w);
    w -= alpha * V.col(col);
    T(col, col) = alpha;
    reorthogonalize(w, col + 1);
    double beta = w.norm();

    // Ritz values of the current projected block.
    const int k = col + 1;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(T.topLeftCorner(k, k));
    const double theta = es.eigenvalues()[0];
    const double resid_est = beta * std::abs(es.eigenvectors()(k - 1, 0));

    const bool basis_full = (k == m) || (k == dim);
    const bool exhausted = beta <= 1e-13 * std::max(1.0, norm_estimate);

    if (resid_est <= tol || basis_full || exhausted || out.matvecs >= opt.max_matvecs) {
      ritz_coeff = es.eigenvectors().col(0);
      out.eigenvalue = theta;
      // Assemble the Ritz vector, measure the true residual.
      tmp.noalias() = V.leftCols(k) * ritz_coeff;
      tmp.normalize();
      Eigen::VectorXd hv(dim);
      apply(tmp, hv);
      ++out.matvecs;
      out.residual = (hv - theta * tmp).norm();
      if (out.residual <= tol || (exhausted && k == dim)) {
        out.converged = true;
        if (eigenvector) *eigenvector = tmp;
        return out;
      }
      if (out.matvecs >= opt.max_matvecs) {
        if (eigenvector) *eigenvector = tmp;
        return out;  // converged stays false
      }

      // Thick restart: keep the lowest Ritz vectors, then the residual
      // direction as the next Lanczos vector.
      const int nk = std::min(keep, k - 1 > 0 ? k - 1 : 1);
      Eigen::MatrixXd Y(dim, nk);
      Y.noalias() = V.leftCols(k) * es.eigenvectors().leftCols(nk);
      V.leftCols(nk) = Y;
      if (exhausted) {
        // Krylov space closed before convergence; inject a fresh direction.
        fill_random(w, rng);
        if (project) (*project)(w);
        reorthogonalize(w, nk);
        beta = w.norm();
        if (beta < 1e-12) throw NumericError("lanczos_lowest: basis collapse",
                                             theta, out.residual, out.matvecs);
        T.setZero();
        for (int i = 0; i < nk; ++i) T(i, i) = es.eigenvalues()[i];
        V.col(nk) = w / beta;
        locked = nk;
        j = 0;
        beta_prev = 0.0;
        continue;
      }
      V.col(nk) = w / beta;
      T.setZero();
      for (int i = 0; i < nk; ++i) {
        T(i, i) = es.eigenvalues()[i];
        T(i, nk) = beta * es.eigenvectors()(k - 1, i);
        T(nk, i) = T(i, nk);
      }
      locked = nk;
      j = 0;
      beta_prev = 0.0;
      continue;
    }

    V.col(col + 1) = w / beta;
    T(col, col + 1) = beta;
    T(col + 1, col) = beta;
    beta_prev = beta;
    ++j;
  }

  throw NumericError("lanczos_lowest: no convergence within matvec budget",
                     out.eigenvalue, out.residual, out.matvecs);
}

}  // namespace hfatom

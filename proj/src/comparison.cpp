#include "hfatom/comparison.hpp"

#include <algorithm>
#include <cmath>

namespace hfatom {

namespace {

Eigen::VectorXd kappa_vector(double Z, int N) {
  Eigen::VectorXd k(N);
  for (int n = 1; n <= N; ++n) k[n - 1] = 0.5 - (n - 1) / (4.0 * Z);
  return k;
}

void check_params(double Z, int N) {
  if (!(Z > 0.0)) throw std::invalid_argument("comparison: Z must be positive");
  if (N < 1) throw std::invalid_argument("comparison: N must be >= 1");
}

// Log-derivative of the cone profile factor carrying rank i (1-based), as a
// function of the coordinate magnitude t.  Ranks beyond N_o only occur for
// the appendix zero mode, whose trailing factors are (1 + |kappa_i| t).
double rank_log_derivative(const Eigen::VectorXd& kappas, int N_o, int rank, double t) {
  if (rank <= N_o) return -kappas[rank - 1];
  const double ak = std::abs(kappas[rank - 1]);
  return ak / (1.0 + ak * t);
}

// Unnormalized cone profile (psi-tilde if bound, psi-check otherwise) and its
// per-rank factors, at sorted magnitudes t_1 <= ... <= t_N.
double cone_profile(const Eigen::VectorXd& kappas, int N_o,
                    const Eigen::VectorXd& t_sorted) {
  double v = 1.0;
  const int N = static_cast<int>(t_sorted.size());
  for (int i = 1; i <= N; ++i) {
    if (i <= N_o)
      v *= std::exp(-kappas[i - 1] * t_sorted[i - 1]);
    else
      v *= 1.0 + std::abs(kappas[i - 1]) * t_sorted[i - 1];
  }
  return v;
}

}  // namespace

int critical_number(double Z) {
  if (!(Z > 0.0)) throw std::invalid_argument("critical_number: Z must be positive");
  const double x = 2.0 * Z + 1.0;
  int n = static_cast<int>(std::ceil(x)) - 1;
  if (!(n < x)) --n;  // guard the integer-boundary case
  return n;
}

ComparisonSolution solve_comparison(double Z, int N) {
  check_params(Z, N);
  ComparisonSolution out;
  out.Z = Z;
  out.N = N;
  out.kappas = kappa_vector(Z, N);
  out.N_o = critical_number(Z);
  out.bound = out.kappas[N - 1] > 0.0;
  const int m = std::min(N, out.N_o);
  out.energy = -out.kappas.head(m).squaredNorm();
  return out;
}

double comparison_energy_lambda_form(double Z, int N) {
  check_params(Z, N);
  const double lam = N / Z;
  return -0.25 * (N * (1.0 - 0.5 * lam + lam * lam / 12.0) +
                  (0.5 * lam - lam * lam / 8.0) + lam * lam / (24.0 * N));
}

double tilde_normalization(double Z, int N) {
  check_params(Z, N);
  const Eigen::VectorXd k = kappa_vector(Z, N);
  if (!(k[N - 1] > 0.0))
    throw std::domain_error("tilde_normalization: state is not square integrable");
  // c^2 = prod_j (tail sum T_j) / N!, folded together to stay in range.
  double c2 = 1.0;
  double tail = 0.0;
  for (int j = N; j >= 1; --j) {
    tail += k[j - 1];
    c2 *= tail / (N - j + 1);
  }
  return std::sqrt(c2);
}

double tilde_wavefunction(const Eigen::VectorXd& z, double Z, int N) {
  check_params(Z, N);
  if (z.size() != N) throw std::invalid_argument("tilde_wavefunction: z size mismatch");
  const Eigen::VectorXd k = kappa_vector(Z, N);
  if (!(k[N - 1] > 0.0))
    throw std::domain_error(
        "tilde_wavefunction: unbound regime; use the appendix zero mode instead");
  Eigen::VectorXd t = z.cwiseAbs();
  std::sort(t.data(), t.data() + N);
  double v = tilde_normalization(Z, N);
  for (int i = 0; i < N; ++i) v *= std::exp(-k[i] * t[i]);
  return v;
}

double appendix_gamma(int i, const Eigen::VectorXd& z_sorted, double Z, int N) {
  check_params(Z, N);
  const int N_o = critical_number(Z);
  if (N <= N_o)
    throw std::domain_error("appendix_gamma: defined only in the unbound regime N > N_o");
  if (i < 1 || i >= N) throw std::domain_error("appendix_gamma: need 1 <= i <= N-1");
  if (z_sorted.size() != N)
    throw std::invalid_argument("appendix_gamma: z size mismatch");
  for (int j = 0; j < N; ++j) {
    if (z_sorted[j] < 0.0 || (j > 0 && z_sorted[j] < z_sorted[j - 1]))
      throw std::domain_error("appendix_gamma: point must lie in the cone");
  }
  const Eigen::VectorXd k = kappa_vector(Z, N);
  if (i <= N_o - 1) return 1.0;
  if (i == N_o) {
    const double ak = std::abs(k[N_o]);  // |kappa_{N_o + 1}|
    return 4.0 * Z * (k[N_o - 1] + ak / (1.0 + ak * z_sorted[N_o - 1]));
  }
  const double ai = std::abs(k[i - 1]);
  const double aj = std::abs(k[i]);
  return 1.0 / ((1.0 + ai * z_sorted[i - 1]) * (1.0 + aj * z_sorted[i]));
}

ZeroModeReport zero_mode_residual(double Z, int N,
                                  const std::vector<Eigen::VectorXd>& sample_points) {
  check_params(Z, N);
  const Eigen::VectorXd k = kappa_vector(Z, N);
  const int N_o = critical_number(Z);
  const bool bound = k[N - 1] > 0.0;
  const int rank_cut = bound ? N : N_o;  // exponential factors up to here

  ZeroModeReport out;
  out.points = static_cast<int>(sample_points.size());

  for (const auto& z : sample_points) {
    if (z.size() != N)
      throw std::invalid_argument("zero_mode_residual: sample size mismatch");
    // Interior means: no coordinate at zero, no two magnitudes equal.
    Eigen::VectorXd t = z.cwiseAbs();
    std::vector<int> order(N);
    for (int j = 0; j < N; ++j) order[j] = j;
    std::sort(order.begin(), order.end(), [&](int a, int b) { return t[a] < t[b]; });
    Eigen::VectorXd ts(N);
    for (int r = 0; r < N; ++r) ts[r] = t[order[r]];
    for (int r = 0; r < N; ++r) {
      if (ts[r] == 0.0 || (r > 0 && ts[r] == ts[r - 1]))
        throw std::domain_error("zero_mode_residual: sample lies on a cone face");
    }

    const double psi = cone_profile(k, rank_cut, ts);
    for (int r = 0; r < N; ++r) {
      const int coord = order[r];
      const double sgn = z[coord] > 0.0 ? 1.0 : -1.0;
      const double dln = sgn * rank_log_derivative(k, rank_cut, r + 1, ts[r]);
      // Independent product-rule evaluation of d psi / d z_coord.
      double dpsi;
      if (r + 1 <= rank_cut) {
        dpsi = psi * (-k[r] * sgn);
      } else {
        const double ak = std::abs(k[r]);
        const double rest = cone_profile(k, rank_cut, ts) / (1.0 + ak * ts[r]);
        dpsi = rest * ak * sgn;
      }
      const double residual = std::abs(dpsi - psi * dln) / std::abs(psi);
      out.max_relative_residual = std::max(out.max_relative_residual, residual);
    }

    // Attraction face: send the smallest magnitude to zero; the jump of the
    // partial log-derivative must equal the well coupling -1 (the wells are
    // -delta(z_i) for every Z, fixing kappa_1 = 1/2).
    const double attraction_jump = 2.0 * rank_log_derivative(k, rank_cut, 1, 0.0);
    out.attraction_jump_error =
        std::max(out.attraction_jump_error, std::abs(attraction_jump - (-1.0)));

    // Pair faces: collapse neighbouring ranks to a common value and compare
    // the jump of (d_i - d_{i+1}) ln psi with gamma_{i,i+1}/(2Z).
    for (int i = 1; i <= N - 1; ++i) {
      const double tface = 0.5 * (ts[i - 1] + ts[i]);
      const double gi = rank_log_derivative(k, rank_cut, i, tface);
      const double gj = rank_log_derivative(k, rank_cut, i + 1, tface);
      const double jump = 2.0 * (gj - gi);
      double gamma = 1.0;
      if (!bound) {
        Eigen::VectorXd zface = ts;
        zface[i - 1] = zface[i] = tface;
        gamma = appendix_gamma(i, zface, Z, N);
      }
      out.pair_jump_error =
          std::max(out.pair_jump_error, std::abs(jump - gamma / (2.0 * Z)));
    }
  }
  return out;
}

}  // namespace hfatom

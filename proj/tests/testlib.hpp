#ifndef HFATOM_TESTS_TESTLIB_HPP
#define HFATOM_TESTS_TESTLIB_HPP

// Shared measurement helpers for the unit and acceptance suites.  Everything
// here is an independent route: plain quadrature against closed formulas,
// never the code path under test.

#include <cmath>
#include <complex>
#include <functional>
#include <vector>

#include "hfatom/landau.hpp"
#include "hfatom/quadrature.hpp"

namespace testlib {

// Smooth H^1 test profiles: Gaussians and polynomial-times-Gaussian shapes.
struct Profile {
  std::function<double(double)> p;   // polynomial factor
  std::function<double(double)> dp;  // its derivative
  double s;                          // Gaussian width
};

inline std::vector<Profile> lemma_profiles() {
  std::vector<Profile> out;
  auto add = [&out](std::function<double(double)> p, std::function<double(double)> dp,
                    double s) { out.push_back({std::move(p), std::move(dp), s}); };
  add([](double) { return 1.0; }, [](double) { return 0.0; }, 1.0);
  add([](double) { return 1.0; }, [](double) { return 0.0; }, 0.5);
  add([](double) { return 1.0; }, [](double) { return 0.0; }, 2.0);
  add([](double z) { return z; }, [](double) { return 1.0; }, 1.0);
  add([](double z) { return 1.0 + z * z; }, [](double z) { return 2.0 * z; }, 1.0);
  add([](double z) { return z * z; }, [](double z) { return 2.0 * z; }, 0.7);
  add([](double z) { return 1.0 + 0.5 * z; }, [](double) { return 0.5; }, 1.5);
  add([](double z) { return z * z * z; }, [](double z) { return 3.0 * z * z; }, 1.0);
  add([](double z) { return 1.0 + z + z * z; }, [](double z) { return 1.0 + 2.0 * z; },
      0.8);
  add([](double z) { return 2.0 - z * z; }, [](double z) { return -2.0 * z; }, 1.2);
  return out;
}

struct MeasuredProfile {
  std::function<double(double)> psi;  // normalized
  double lambda = 1.0;                // int psi^2 (one after normalization)
  double T = 0.0;                     // int psi'^2
  double psi0_sq = 0.0;
};

inline MeasuredProfile measure(const Profile& pr) {
  const double s = pr.s;
  auto raw = [pr, s](double z) { return pr.p(z) * std::exp(-0.5 * z * z / (s * s)); };
  auto draw = [pr, s](double z) {
    return (pr.dp(z) - pr.p(z) * z / (s * s)) * std::exp(-0.5 * z * z / (s * s));
  };
  const double span = 12.0 * s + 6.0;
  hfatom::QuadratureOptions opt;
  opt.abs_tol = 1e-13;
  opt.rel_tol = 1e-13;
  const double nrm2 =
      hfatom::integrate_adaptive([&](double z) { return raw(z) * raw(z); }, -span, span, opt)
          .value;
  const double T =
      hfatom::integrate_adaptive([&](double z) { return draw(z) * draw(z); }, -span, span,
                                 opt)
          .value /
      nrm2;
  MeasuredProfile m;
  const double scale = 1.0 / std::sqrt(nrm2);
  m.psi = [raw, scale](double z) { return scale * raw(z); };
  m.T = T;
  m.psi0_sq = m.psi(0.0) * m.psi(0.0);
  return m;
}

// int V_{B,r}(z) |psi(z)|^2 dz with explicit breakpoints so the adaptive rule
// resolves the cusp of V at the origin.
inline double integrate_against_potential(const hfatom::FieldScale& fs, double r,
                                          const std::function<double(double)>& psi2,
                                          double span) {
  hfatom::QuadratureOptions opt;
  opt.abs_tol = 1e-12;
  opt.rel_tol = 1e-12;
  opt.max_intervals = 6000;
  auto f = [&](double z) { return hfatom::scaled_potential(fs, r, z) * psi2(z); };
  double total = 0.0;
  const double pts[5] = {-span, -r, 0.0, r, span};
  for (int k = 0; k < 4; ++k)
    total += hfatom::integrate_adaptive(f, pts[k], pts[k + 1], opt).value;
  return total;
}

// Two-dimensional tensor quadrature of the kernel product for the reproducing
// identity; complex-valued, independent of the kernel's own closed form.
inline std::complex<double> kernel_self_convolution(double B, const Eigen::Vector2d& x,
                                                    const Eigen::Vector2d& y) {
  using C = std::complex<double>;
  const Eigen::Vector2d mid = 0.5 * (x + y);
  const double span = 10.0 / std::sqrt(B);
  hfatom::QuadratureOptions opt;
  opt.abs_tol = 1e-10;
  opt.rel_tol = 1e-10;
  auto inner = [&](double u0) {
    auto f = [&](double u1) {
      const Eigen::Vector2d u(u0, u1);
      return hfatom::landau_kernel(B, x, u).value * hfatom::landau_kernel(B, u, y).value;
    };
    return hfatom::integrate_adaptive<C>(f, mid.y() - span, mid.y() + span, opt).value;
  };
  return hfatom::integrate_adaptive<C>(inner, mid.x() - span, mid.x() + span, opt).value;
}

}  // namespace testlib

#endif

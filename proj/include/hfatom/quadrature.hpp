#ifndef HFATOM_QUADRATURE_HPP
#define HFATOM_QUADRATURE_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <queue>
#include <vector>

namespace hfatom {

struct QuadratureOptions {
  double abs_tol = 1e-10;
  double rel_tol = 1e-12;
  int max_intervals = 2000;
};

template <class Value>
struct QuadratureResult {
  Value value{};
  double error = 0.0;
  bool converged = false;
  int intervals = 0;
};

namespace detail {

inline double qnorm(double v) { return std::abs(v); }
inline double qnorm(const std::complex<double>& v) { return std::abs(v); }

// Gauss-Kronrod 7-15 pair on [-1, 1].
constexpr int kKronrodPoints = 8;  // nonnegative abscissae
constexpr double kXgk[kKronrodPoints] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769, 0.741531185599394,
    0.586087235467691, 0.405845151377397, 0.207784955007898, 0.000000000000000};
constexpr double kWgk[kKronrodPoints] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250, 0.140653259715525,
    0.169004726639267, 0.190350578064785, 0.204432940075298, 0.209482141084728};
constexpr double kWg[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119, 0.417959183673469};

template <class F, class Value>
void kronrod_panel(F&& f, double a, double b, Value& kronrod, double& error) {
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (a + b);
  Value resg{};
  Value resk = kWgk[7] * Value(f(mid));
  resg += kWg[3] * Value(f(mid));
  for (int i = 0; i < 7; ++i) {
    const double dx = half * kXgk[i];
    const Value fsum = Value(f(mid - dx)) + Value(f(mid + dx));
    resk += kWgk[i] * fsum;
    if (i % 2 == 1) resg += kWg[i / 2] * fsum;
  }
  kronrod = resk * half;
  error = qnorm((resk - resg) * half);
  // QUADPACK-style sharpening of the raw |K - G| estimate
  error = std::min(error, std::pow(200.0 * error, 1.5) + 1e-300);
  error = std::max(error, 50.0 * 2.2e-16 * qnorm(kronrod));
}

}  // namespace detail

// Globally adaptive Gauss-Kronrod integration of f over [a, b].
// Works for real- and complex-valued integrands.
template <class Value = double, class F>
QuadratureResult<Value> integrate_adaptive(F&& f, double a, double b,
                                           const QuadratureOptions& opt = {}) {
  struct Segment {
    double a, b, error;
    Value value;
    bool operator<(const Segment& o) const { return error < o.error; }
  };

  QuadratureResult<Value> out;
  if (a == b) {
    out.converged = true;
    return out;
  }

  std::priority_queue<Segment> segs;
  Value v;
  double e;
  detail::kronrod_panel(f, a, b, v, e);
  segs.push({a, b, e, v});
  out.value = v;
  out.error = e;
  out.intervals = 1;

  while (out.intervals < opt.max_intervals) {
    const double target = std::max(opt.abs_tol, opt.rel_tol * detail::qnorm(out.value));
    if (out.error <= target) break;
    Segment worst = segs.top();
    segs.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    Value v1, v2;
    double e1, e2;
    detail::kronrod_panel(f, worst.a, mid, v1, e1);
    detail::kronrod_panel(f, mid, worst.b, v2, e2);
    out.value += (v1 + v2) - worst.value;
    out.error += (e1 + e2) - worst.error;
    segs.push({worst.a, mid, e1, v1});
    segs.push({mid, worst.b, e2, v2});
    ++out.intervals;
  }
  out.converged =
      out.error <= std::max(opt.abs_tol, opt.rel_tol * detail::qnorm(out.value));
  return out;
}

// Two-point Richardson step for a second-order sequence of values computed at
// spacings dx, dx/ratio, dx/ratio^2, ...  Returns the extrapolated value, the
// magnitude of the last extrapolation step, and whether the raw increments
// behaved monotonically.
struct RichardsonResult {
  double value = 0.0;
  double error_estimate = 0.0;
  bool monotone = true;
};

inline RichardsonResult richardson_extrapolate(const std::vector<double>& values,
                                               double ratio = 2.0, int order = 2) {
  RichardsonResult out;
  if (values.empty()) return out;
  if (values.size() == 1) {
    out.value = values[0];
    return out;
  }
  const double factor = std::pow(ratio, order);
  for (std::size_t k = 2; k < values.size(); ++k) {
    const double d1 = values[k - 1] - values[k - 2];
    const double d2 = values[k] - values[k - 1];
    if (d1 * d2 < 0.0) out.monotone = false;
  }
  const double last = values.back();
  const double prev = values[values.size() - 2];
  out.value = last + (last - prev) / (factor - 1.0);
  out.error_estimate = std::abs(last - prev) / (factor - 1.0);
  return out;
}

}  // namespace hfatom

#endif

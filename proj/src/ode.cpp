#include "massflow/ode.hpp"

#include <algorithm>

namespace massflow {

namespace {

// Dormand-Prince coefficients.
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561, a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                 a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784,
                 b6 = 11.0 / 84;
// embedded 4th order
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920, e5 = -17253.0 / 339200,
                 e6 = 22.0 / 525, e7 = -1.0 / 40;
// dense output (Shampine)
constexpr double d1 = -12715105075.0 / 11282082432.0, d3 = 87487479700.0 / 32700410799.0,
                 d4 = -10690763975.0 / 1880347072.0, d5 = 701980252875.0 / 199316789632.0,
                 d6 = -1453857185.0 / 822651844.0, d7 = 69997945.0 / 29380423.0;

}  // namespace

DormandPrince::Result DormandPrince::integrate(const Rhs& f, double x0,
                                               std::span<const double> y0,
                                               std::span<const double> xout,
                                               const Options& opt) {
  const std::size_t n = y0.size();
  Result res;
  res.samples.reserve(xout.size());
  std::vector<double> y(y0.begin(), y0.end());
  std::vector<double> k1(n), k2(n), k3(n), k4(n), k5(n), k6(n), k7(n), yt(n), ynew(n), yerr(n);
  double x = x0;
  const double x_end = xout.empty() ? x0 : xout.back();
  std::size_t next_out = 0;

  auto emit_up_to = [&](double xa, double xb, std::span<const double> ya,
                        std::span<const double> /*yb*/, double h) {
    // Dense output over the accepted step [xa, xb].
    while (next_out < xout.size() && xout[next_out] <= xb + 1e-14 * std::abs(xb)) {
      const double s = (h == 0.0) ? 0.0 : (xout[next_out] - xa) / h;
      const double s1 = 1.0 - s;
      std::vector<double> yi(n);
      for (std::size_t j = 0; j < n; ++j) {
        const double rcont1 = ya[j];
        const double ydiff = ynew[j] - ya[j];
        const double bspl = h * k1[j] - ydiff;
        const double rcont2 = ydiff;
        const double rcont3 = bspl;
        const double rcont4 = ydiff - h * k7[j] - bspl;
        const double rcont5 = h * (d1 * k1[j] + d3 * k3[j] + d4 * k4[j] + d5 * k5[j] +
                                   d6 * k6[j] + d7 * k7[j]);
        yi[j] = rcont1 + s * (rcont2 + s1 * (rcont3 + s * (rcont4 + s1 * rcont5)));
      }
      res.samples.push_back(std::move(yi));
      ++next_out;
    }
  };

  // Emit any samples at/before x0.
  while (next_out < xout.size() && xout[next_out] <= x0 + 1e-300) {
    res.samples.emplace_back(y.begin(), y.end());
    ++next_out;
  }
  if (opt.guard && opt.guard(x, y)) {
    res.stopped = true;
    res.x_stop = x;
    res.y_stop = y;
    return res;
  }

  const double span_len = x_end - x0;
  if (span_len <= 0.0) return res;
  double h = (opt.h_init > 0.0) ? opt.h_init : span_len / 100.0;
  const double h_min = span_len * opt.h_min_factor;
  f(x, y, k1);

  std::size_t iter_cap = 100000000;
  while (x < x_end && next_out < xout.size()) {
    if (--iter_cap == 0) throw StepSizeUnderflow("ODE step budget exhausted");
    if (h < h_min) throw StepSizeUnderflow("ODE step size underflow");
    h = std::min(h, x_end - x);
    // stages
    for (std::size_t j = 0; j < n; ++j) yt[j] = y[j] + h * a21 * k1[j];
    f(x + c2 * h, yt, k2);
    for (std::size_t j = 0; j < n; ++j) yt[j] = y[j] + h * (a31 * k1[j] + a32 * k2[j]);
    f(x + c3 * h, yt, k3);
    for (std::size_t j = 0; j < n; ++j) yt[j] = y[j] + h * (a41 * k1[j] + a42 * k2[j] + a43 * k3[j]);
    f(x + c4 * h, yt, k4);
    for (std::size_t j = 0; j < n; ++j)
      yt[j] = y[j] + h * (a51 * k1[j] + a52 * k2[j] + a53 * k3[j] + a54 * k4[j]);
    f(x + c5 * h, yt, k5);
    for (std::size_t j = 0; j < n; ++j)
      yt[j] = y[j] + h * (a61 * k1[j] + a62 * k2[j] + a63 * k3[j] + a64 * k4[j] + a65 * k5[j]);
    f(x + h, yt, k6);
    for (std::size_t j = 0; j < n; ++j)
      ynew[j] = y[j] + h * (b1 * k1[j] + b3 * k3[j] + b4 * k4[j] + b5 * k5[j] + b6 * k6[j]);
    f(x + h, ynew, k7);
    // error estimate
    double err = 0.0;
    bool finite = true;
    for (std::size_t j = 0; j < n; ++j) {
      yerr[j] = h * (e1 * k1[j] + e3 * k3[j] + e4 * k4[j] + e5 * k5[j] + e6 * k6[j] + e7 * k7[j]);
      const double sc = opt.atol + opt.rtol * std::max(std::abs(y[j]), std::abs(ynew[j]));
      err += (yerr[j] / sc) * (yerr[j] / sc);
      if (!std::isfinite(ynew[j])) finite = false;
    }
    err = std::sqrt(err / double(n));
    if (!finite) {
      h *= 0.25;
      continue;
    }
    if (err <= 1.0) {
      emit_up_to(x, x + h, y, ynew, h);
      x += h;
      y = ynew;
      std::swap(k1, k7);
      if (opt.guard && opt.guard(x, y)) {
        res.stopped = true;
        res.x_stop = x;
        res.y_stop = y;
        return res;
      }
    }
    const double fac = std::clamp(0.9 * std::pow(err > 0 ? err : 1e-10, -0.2), 0.2, 5.0);
    h *= fac;
  }
  return res;
}

}  // namespace massflow

#include "massflow/grid.hpp"

#include <algorithm>
#include <cmath>

namespace massflow {

RadialGrid::RadialGrid(double r_min, double r_max, std::size_t n, Spacing spacing)
    : r_min_(r_min), r_max_(r_max), spacing_(spacing) {
  if (!(r_min > 0.0)) throw BadGrid("r_min must be positive");
  if (!(r_max > r_min)) throw BadGrid("r_max must exceed r_min");
  if (n < 16) throw BadGrid("need at least 16 nodes");
  nodes_.resize(n);
  if (spacing == Spacing::uniform) {
    const double h = (r_max - r_min) / double(n - 1);
    for (std::size_t i = 0; i < n; ++i) nodes_[i] = r_min + h * double(i);
  } else {
    const double q = std::log(r_max / r_min) / double(n - 1);
    for (std::size_t i = 0; i < n; ++i) nodes_[i] = r_min * std::exp(q * double(i));
  }
  nodes_.front() = r_min;
  nodes_.back() = r_max;
}

std::size_t RadialGrid::interval(double r) const {
  auto it = std::upper_bound(nodes_.begin(), nodes_.end(), r);
  std::size_t i = (it == nodes_.begin()) ? 1 : std::size_t(it - nodes_.begin());
  i = std::min(i, nodes_.size() - 1);
  return i - 1;
}

std::size_t RadialGrid::nearest(double r) const {
  std::size_t i = interval(r);
  return (r - nodes_[i] <= nodes_[i + 1] - r) ? i : i + 1;
}

CubicSpline::CubicSpline(std::span<const double> x, std::span<const double> y)
    : x_(x.begin(), x.end()), y_(y.begin(), y.end()) {
  const std::size_t n = x_.size();
  if (n < 4) throw GridTooCoarse("cubic spline needs at least 4 points");
  // Solve for second derivatives m_i with not-a-knot conditions.
  std::vector<double> h(n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    h[i] = x_[i + 1] - x_[i];
    if (!(h[i] > 0.0)) throw BadGrid("spline abscissae must increase");
  }
  // Tridiagonal-with-corners system; small n so use full Thomas with the
  // not-a-knot rows folded in.
  std::vector<double> a(n, 0.0), b(n, 0.0), c(n, 0.0), d(n, 0.0);
  // not-a-knot at left: m0 (h1) - m1 (h0+h1) + m2 h0 = 0, folded below.
  for (std::size_t i = 1; i + 1 < n; ++i) {
    a[i] = h[i - 1];
    b[i] = 2.0 * (h[i - 1] + h[i]);
    c[i] = h[i];
    d[i] = 6.0 * ((y_[i + 1] - y_[i]) / h[i] - (y_[i] - y_[i - 1]) / h[i - 1]);
  }
  // Express m0 = alpha m1 + beta m2 and m_{n-1} = gamma m_{n-2} + delta m_{n-3}
  // from the not-a-knot conditions, then eliminate.
  const double al = (h[0] + h[1]) / h[1];
  const double be = -h[0] / h[1];
  const double ga = (h[n - 2] + h[n - 3]) / h[n - 3];
  const double de = -h[n - 2] / h[n - 3];
  // Row i=1: a[1] m0 + b[1] m1 + c[1] m2 = d[1]  ->  (b+al*a) m1 + (c+be*a) m2
  b[1] += al * a[1];
  c[1] += be * a[1];
  a[1] = 0.0;
  // Row i=n-2: a m_{n-3} + b m_{n-2} + c m_{n-1} = d -> fold m_{n-1}
  b[n - 2] += ga * c[n - 2];
  a[n - 2] += de * c[n - 2];
  c[n - 2] = 0.0;
  // Thomas solve on i = 1..n-2.
  std::vector<double> m(n, 0.0);
  for (std::size_t i = 2; i + 1 < n; ++i) {
    const double w = a[i] / b[i - 1];
    b[i] -= w * c[i - 1];
    d[i] -= w * d[i - 1];
  }
  m[n - 2] = d[n - 2] / b[n - 2];
  for (std::size_t i = n - 3; i >= 1; --i) {
    m[i] = (d[i] - c[i] * m[i + 1]) / b[i];
    if (i == 1) break;
  }
  m[0] = al * m[1] + be * m[2];
  m[n - 1] = ga * m[n - 2] + de * m[n - 3];
  // Convert to piecewise coefficients.
  b_.resize(n - 1);
  c_.resize(n - 1);
  d_.resize(n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    b_[i] = (y_[i + 1] - y_[i]) / h[i] - h[i] * (2.0 * m[i] + m[i + 1]) / 6.0;
    c_[i] = m[i] / 2.0;
    d_[i] = (m[i + 1] - m[i]) / (6.0 * h[i]);
  }
}

std::size_t CubicSpline::find(double x) const {
  auto it = std::upper_bound(x_.begin(), x_.end(), x);
  std::size_t i = (it == x_.begin()) ? 1 : std::size_t(it - x_.begin());
  i = std::min(i, x_.size() - 1);
  return i - 1;
}

double CubicSpline::value(double x) const {
  const std::size_t i = find(x);
  const double t = x - x_[i];
  return y_[i] + t * (b_[i] + t * (c_[i] + t * d_[i]));
}

double CubicSpline::deriv(double x) const {
  const std::size_t i = find(x);
  const double t = x - x_[i];
  return b_[i] + t * (2.0 * c_[i] + 3.0 * t * d_[i]);
}

double CubicSpline::deriv2(double x) const {
  const std::size_t i = find(x);
  const double t = x - x_[i];
  return 2.0 * c_[i] + 6.0 * t * d_[i];
}

double CubicSpline::integral(double a, double b) const {
  auto prim = [this](double x) {
    const std::size_t i = find(x);
    const double t = x - x_[i];
    double s = t * (y_[i] + t * (b_[i] / 2.0 + t * (c_[i] / 3.0 + t * d_[i] / 4.0)));
    return std::pair<std::size_t, double>(i, s);
  };
  auto [ia, sa] = prim(a);
  auto [ib, sb] = prim(b);
  double total = 0.0;
  for (std::size_t k = ia; k < ib; ++k) {
    const double h = x_[k + 1] - x_[k];
    total += h * (y_[k] + h * (b_[k] / 2.0 + h * (c_[k] / 3.0 + h * d_[k] / 4.0)));
  }
  return total + sb - sa;
}

std::vector<double> fd_weights(double x0, std::span<const double> x, int m) {
  // Fornberg (1988), generation of finite difference formulas on
  // arbitrarily spaced grids.
  const int n = int(x.size()) - 1;
  std::vector<std::vector<std::vector<double>>> delta(
      std::size_t(m + 1), std::vector<std::vector<double>>(std::size_t(n + 1),
                                                           std::vector<double>(std::size_t(n + 1), 0.0)));
  delta[0][0][0] = 1.0;
  double c1 = 1.0;
  for (int nn = 1; nn <= n; ++nn) {
    double c2 = 1.0;
    for (int nu = 0; nu < nn; ++nu) {
      const double c3 = x[std::size_t(nn)] - x[std::size_t(nu)];
      c2 *= c3;
      for (int mm = 0; mm <= std::min(nn, m); ++mm) {
        delta[std::size_t(mm)][std::size_t(nn)][std::size_t(nu)] =
            ((x[std::size_t(nn)] - x0) * delta[std::size_t(mm)][std::size_t(nn - 1)][std::size_t(nu)] -
             (mm > 0 ? double(mm) * delta[std::size_t(mm - 1)][std::size_t(nn - 1)][std::size_t(nu)] : 0.0)) /
            c3;
      }
    }
    for (int mm = 0; mm <= std::min(nn, m); ++mm) {
      delta[std::size_t(mm)][std::size_t(nn)][std::size_t(nn)] =
          c1 / c2 *
          ((mm > 0 ? double(mm) * delta[std::size_t(mm - 1)][std::size_t(nn - 1)][std::size_t(nn - 1)] : 0.0) -
           (x[std::size_t(nn - 1)] - x0) * delta[std::size_t(mm)][std::size_t(nn - 1)][std::size_t(nn - 1)]);
    }
    c1 = c2;
  }
  std::vector<double> w(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) w[i] = delta[std::size_t(m)][std::size_t(n)][i];
  return w;
}

std::vector<double> fd_derivative(const RadialGrid& grid, std::span<const double> f, int order) {
  const std::size_t n = grid.size();
  if (f.size() != n) throw BadGrid("profile size does not match grid");
  if (n < 5) throw GridTooCoarse("5-point stencil does not fit");
  std::vector<double> out(n);
  const auto& x = grid.nodes();
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t lo, m;
    if (i >= 2 && i + 2 < n) {
      lo = i - 2;
      m = 5;  // centered 5-point
    } else {
      // one-sided, order 2: 3 points for f', 4 for f''
      m = (order == 1) ? 3 : 4;
      lo = (i < 2) ? 0 : n - m;
    }
    auto w = fd_weights(x[i], std::span<const double>(&x[lo], m), order);
    double s = 0.0;
    for (std::size_t j = 0; j < m; ++j) s += w[j] * f[lo + j];
    out[i] = s;
  }
  return out;
}

InverseFit fit_inverse(std::span<const double> x, std::span<const double> y) {
  const std::size_t n = x.size();
  if (n < 3 || y.size() != n) throw NonConvergent("inverse fit needs >= 3 samples");
  double sx = 0.0, sxx = 0.0, sy = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double xi = 1.0 / x[i];
    sx += xi;
    sxx += xi * xi;
    sy += y[i];
    sxy += xi * y[i];
  }
  const double det = double(n) * sxx - sx * sx;
  InverseFit fit;
  fit.b = (double(n) * sxy - sx * sy) / det;
  fit.a = (sy - fit.b * sx) / double(n);
  for (std::size_t i = 0; i < n; ++i)
    fit.max_residual = std::max(fit.max_residual, std::abs(y[i] - fit.a - fit.b / x[i]));
  return fit;
}

std::vector<double> cumulative_integral(const RadialGrid& grid, std::span<const double> f) {
  CubicSpline s(grid.nodes(), f);
  std::vector<double> out(grid.size(), 0.0);
  for (std::size_t i = 1; i < grid.size(); ++i)
    out[i] = out[i - 1] + s.integral(grid[i - 1], grid[i]);
  return out;
}

}  // namespace massflow

#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "massflow/errors.hpp"

namespace massflow {

enum class Spacing { uniform, geometric };

/// Strictly increasing radial grid on [r_min, r_max], r_min > 0.
class RadialGrid {
 public:
  RadialGrid(double r_min, double r_max, std::size_t n, Spacing spacing);

  double r_min() const { return r_min_; }
  double r_max() const { return r_max_; }
  std::size_t size() const { return nodes_.size(); }
  Spacing spacing() const { return spacing_; }
  double operator[](std::size_t i) const { return nodes_[i]; }
  const std::vector<double>& nodes() const { return nodes_; }

  bool contains(double r) const { return r >= r_min_ && r <= r_max_; }
  /// Index of the interval [r_i, r_{i+1}] containing r (clamped).
  std::size_t interval(double r) const;
  /// Nearest node index to r.
  std::size_t nearest(double r) const;

 private:
  double r_min_, r_max_;
  Spacing spacing_;
  std::vector<double> nodes_;
};

/// Cubic spline through (x_i, y_i), not-a-knot end conditions.
/// Profiles are stored at grid nodes; the spline supplies off-node values.
class CubicSpline {
 public:
  CubicSpline() = default;
  CubicSpline(std::span<const double> x, std::span<const double> y);

  double value(double x) const;
  double deriv(double x) const;
  double deriv2(double x) const;
  /// Integral of the spline over [a, b].
  double integral(double a, double b) const;

  bool empty() const { return x_.empty(); }

 private:
  std::size_t find(double x) const;
  std::vector<double> x_, y_, b_, c_, d_;  // piecewise y + b t + c t^2 + d t^3
};

/// Finite-difference weights on arbitrary nodes (Fornberg's algorithm).
/// Returns weights w such that f^(m)(x0) ~= sum_i w[i] f(x[i]).
std::vector<double> fd_weights(double x0, std::span<const double> x, int m);

/// Derivative of nodal data along the grid: centered 5-point stencils in the
/// interior, one-sided order-2 stencils at the boundary.
std::vector<double> fd_derivative(const RadialGrid& grid, std::span<const double> f, int order = 1);

/// Least-squares fit of y ~= a + b * (1/x). Returns {a, b, max residual}.
struct InverseFit {
  double a = 0.0;
  double b = 0.0;
  double max_residual = 0.0;
};
InverseFit fit_inverse(std::span<const double> x, std::span<const double> y);

/// Cumulative integral of nodal data from node 0, spline-accurate.
std::vector<double> cumulative_integral(const RadialGrid& grid, std::span<const double> f);

}  // namespace massflow

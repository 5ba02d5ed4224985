#pragma once

#include <array>
#include <cmath>
#include <functional>
#include <span>
#include <vector>

#include "massflow/errors.hpp"

namespace massflow {

/// Adaptive Dormand-Prince 5(4) for small dense systems.
/// Integrates y' = f(x, y) from x0 to x1, sampling the solution at the
/// requested output abscissae (which must lie in [x0, x1], increasing).
class DormandPrince {
 public:
  using Rhs = std::function<void(double, std::span<const double>, std::span<double>)>;
  /// Returns true if integration should stop at the current state.
  using Guard = std::function<bool(double, std::span<const double>)>;

  struct Options {
    double rtol = 1e-10;
    double atol = 1e-12;
    double h_init = 0.0;       // 0: automatic
    double h_min_factor = 1e-14;
    Guard guard;               // optional early-stop predicate
  };

  struct Result {
    std::vector<std::vector<double>> samples;  // one state vector per output x
    bool stopped = false;                      // guard fired
    double x_stop = 0.0;                       // abscissa where guard fired
    std::vector<double> y_stop;
  };

  static Result integrate(const Rhs& f, double x0, std::span<const double> y0,
                          std::span<const double> xout, const Options& opt = {});
};

}  // namespace massflow

#pragma once

#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "massflow/grid.hpp"
#include "massflow/sphere_grid.hpp"

namespace massflow {

struct FlatTag {};
struct SchwarzschildTag {
  double m = 0.0;
};
using ClosedForm = std::variant<FlatTag, SchwarzschildTag>;

/// Spherically symmetric 3-metric g = u(r)^2 dr^2 + r^2 dOmega^2.
class RadialMetric {
 public:
  RadialMetric(RadialGrid grid, std::vector<double> u,
               std::optional<ClosedForm> closed_form = std::nullopt);

  const RadialGrid& grid() const { return grid_; }
  const std::vector<double>& u_nodes() const { return u_; }
  const std::optional<ClosedForm>& closed_form() const { return cf_; }

  double u(double r) const;
  /// du/dr; analytic for closed-form metrics, spline elsewhere.
  double du(double r) const;

  bool is_flat_tagged() const { return cf_ && std::holds_alternative<FlatTag>(*cf_); }
  std::optional<double> schwarzschild_mass() const;

 private:
  RadialGrid grid_;
  std::vector<double> u_;
  std::optional<ClosedForm> cf_;
  CubicSpline spline_;
};

/// Conformally flat 3-metric g = phi(rho)^4 delta.
class ConformalMetric {
 public:
  ConformalMetric(RadialGrid grid, std::vector<double> phi);

  const RadialGrid& grid() const { return grid_; }
  const std::vector<double>& phi_nodes() const { return phi_; }
  double phi(double rho) const { return spline_.value(rho); }
  double dphi(double rho) const { return spline_.deriv(rho); }
  double d2phi(double rho) const { return spline_.deriv2(rho); }
  /// Area radius of the coordinate sphere: rho * phi(rho)^2.
  double area_radius_of(double rho) const { return rho * phi(rho) * phi(rho); }

 private:
  RadialGrid grid_;
  std::vector<double> phi_;
  CubicSpline spline_;
};

/// Quasi-spherical metric with u(r, theta, phi) on a product grid; the shift
/// fields beta1, beta2 are identically zero in this version.
class QSGridMetric {
 public:
  QSGridMetric(RadialGrid rgrid, SphereGrid sgrid, std::vector<double> u);

  const RadialGrid& rgrid() const { return rgrid_; }
  const SphereGrid& sgrid() const { return sgrid_; }
  const std::vector<double>& u_all() const { return u_; }
  /// Angular slice at radial node ir.
  std::span<const double> slice(std::size_t ir) const;
  double u(std::size_t ir, std::size_t i, std::size_t j) const {
    return u_[ir * sgrid_.size() + sgrid_.index(i, j)];
  }
  double beta1(std::size_t, std::size_t, std::size_t) const { return 0.0; }
  double beta2(std::size_t, std::size_t, std::size_t) const { return 0.0; }

 private:
  RadialGrid rgrid_;
  SphereGrid sgrid_;
  std::vector<double> u_;
};

// CSV profile exchange; header row "r,u" or "rho,phi", 17 significant digits.
void write_radial_csv(const std::string& path, const RadialMetric& g);
void write_conformal_csv(const std::string& path, const ConformalMetric& g);
RadialMetric read_radial_csv(const std::string& path);
ConformalMetric read_conformal_csv(const std::string& path);

}  // namespace massflow

#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "massflow/errors.hpp"

namespace massflow {

/// Quadrature grid on S^2: Gauss-Legendre nodes in x = cos(theta) crossed
/// with uniform nodes in phi. No pole nodes. Exact for spherical harmonics
/// up to degree 2 n_theta - 1; the harmonic transform resolves l <= n_theta-1.
class SphereGrid {
 public:
  SphereGrid(std::size_t n_theta, std::size_t n_phi);

  std::size_t n_theta() const { return n_theta_; }
  std::size_t n_phi() const { return n_phi_; }
  std::size_t size() const { return n_theta_ * n_phi_; }
  std::size_t degree() const { return n_theta_ - 1; }  // max resolved l

  double x(std::size_t i) const { return x_[i]; }          // cos(theta_i)
  double theta(std::size_t i) const { return theta_[i]; }
  double phi(std::size_t j) const { return phi_[j]; }
  /// Quadrature weight of node (i, j); weights sum to 4*pi.
  double weight(std::size_t i, std::size_t j) const { return w_[i] * dphi_; }
  std::size_t index(std::size_t i, std::size_t j) const { return i * n_phi_ + j; }

  double integrate(std::span<const double> f) const;
  double mean(std::span<const double> f) const { return integrate(f) / (4.0 * pi()); }

  /// Real spherical harmonic analysis/synthesis. Coefficient layout:
  /// m = 0 block (l = 0..L), then per m = 1..L a cos block and a sin block
  /// (l = m..L each); (L+1)^2 coefficients total.
  std::size_t n_coeff() const;
  std::vector<double> analyze(std::span<const double> f) const;
  std::vector<double> synthesize(std::span<const double> coeff) const;
  /// Applies the Laplace-Beltrami operator of the unit sphere spectrally.
  std::vector<double> laplacian(std::span<const double> f) const;
  /// Multiplies coefficients by -l(l+1) in place.
  void scale_by_eigenvalue(std::span<double> coeff) const;
  /// Index of (l, m, kind) in the coefficient layout; kind 0 = cos, 1 = sin.
  std::size_t coeff_index(std::size_t l, std::size_t m, int kind) const;

  /// Grid field of the orthonormal real harmonic Y_{lm} (m >= 0: cos branch,
  /// pass kind = 1 for the sin branch).
  std::vector<double> harmonic_field(std::size_t l, std::size_t m, int kind = 0) const;

  static double pi() { return 3.14159265358979323846; }

 private:
  std::size_t n_theta_, n_phi_;
  double dphi_;
  std::vector<double> x_, w_, theta_, phi_;
  // Normalized associated Legendre table: q_[i * n_pairs + pair(l,m)].
  std::vector<double> qtab_;
  std::size_t pair_index(std::size_t l, std::size_t m) const;
  std::vector<double> cos_mphi_, sin_mphi_;  // [m * n_phi + j]
};

/// Gauss-Legendre nodes and weights on [-1, 1].
void gauss_legendre(std::size_t n, std::vector<double>& x, std::vector<double>& w);

/// Orthonormal theta-part of the real spherical harmonics at one point:
/// fills q[pair(l,m)] for all l <= L, m <= l.
void normalized_assoc_legendre(std::size_t L, double x, std::span<double> q);

}  // namespace massflow

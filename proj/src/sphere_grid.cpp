#include "massflow/sphere_grid.hpp"

#include <cmath>

namespace massflow {

void gauss_legendre(std::size_t n, std::vector<double>& x, std::vector<double>& w) {
  x.assign(n, 0.0);
  w.assign(n, 0.0);
  const double pi = SphereGrid::pi();
  for (std::size_t k = 0; k < (n + 1) / 2; ++k) {
    // Newton from the Chebyshev-like initial guess.
    double xk = std::cos(pi * (double(k) + 0.75) / (double(n) + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = xk;
      for (std::size_t l = 2; l <= n; ++l) {
        const double p2 = ((2.0 * double(l) - 1.0) * xk * p1 - (double(l) - 1.0) * p0) / double(l);
        p0 = p1;
        p1 = p2;
      }
      dp = double(n) * (xk * p1 - p0) / (xk * xk - 1.0);
      const double dx = p1 / dp;
      xk -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    x[k] = -xk;
    x[n - 1 - k] = xk;
    const double wk = 2.0 / ((1.0 - xk * xk) * dp * dp);
    w[k] = wk;
    w[n - 1 - k] = wk;
  }
}

void normalized_assoc_legendre(std::size_t L, double x, std::span<double> q) {
  // q[l(l+1)/2 + m]; orthonormal over the sphere: 2*pi*int q_l0^2 dx = 1 etc.
  const double s = std::sqrt(std::max(0.0, 1.0 - x * x));
  auto idx = [](std::size_t l, std::size_t m) { return l * (l + 1) / 2 + m; };
  q[0] = 1.0 / std::sqrt(4.0 * SphereGrid::pi());
  for (std::size_t m = 1; m <= L; ++m)
    q[idx(m, m)] = std::sqrt((2.0 * double(m) + 1.0) / (2.0 * double(m))) * s * q[idx(m - 1, m - 1)];
  for (std::size_t m = 0; m <= L; ++m) {
    if (m + 1 <= L) q[idx(m + 1, m)] = std::sqrt(2.0 * double(m) + 3.0) * x * q[idx(m, m)];
    for (std::size_t l = m + 2; l <= L; ++l) {
      const double lm = double(l), mm = double(m);
      const double alpha = std::sqrt((2.0 * lm - 1.0) * (2.0 * lm + 1.0) / ((lm - mm) * (lm + mm)));
      const double beta = std::sqrt((2.0 * lm + 1.0) * (lm + mm - 1.0) * (lm - mm - 1.0) /
                                    ((lm - mm) * (lm + mm) * (2.0 * lm - 3.0)));
      q[idx(l, m)] = alpha * x * q[idx(l - 1, m)] - beta * q[idx(l - 2, m)];
    }
  }
}

std::size_t SphereGrid::pair_index(std::size_t l, std::size_t m) const { return l * (l + 1) / 2 + m; }

SphereGrid::SphereGrid(std::size_t n_theta, std::size_t n_phi)
    : n_theta_(n_theta), n_phi_(n_phi) {
  if (n_theta < 4) throw BadGrid("n_theta must be at least 4");
  if (n_phi < 2 * n_theta - 1) throw BadGrid("n_phi must be at least 2 n_theta - 1");
  gauss_legendre(n_theta, x_, w_);
  dphi_ = 2.0 * pi() / double(n_phi);
  theta_.resize(n_theta);
  for (std::size_t i = 0; i < n_theta; ++i) theta_[i] = std::acos(x_[i]);
  phi_.resize(n_phi);
  for (std::size_t j = 0; j < n_phi; ++j) phi_[j] = dphi_ * double(j);
  const std::size_t L = degree();
  const std::size_t np = (L + 1) * (L + 2) / 2;
  qtab_.resize(n_theta * np);
  for (std::size_t i = 0; i < n_theta; ++i)
    normalized_assoc_legendre(L, x_[i], std::span<double>(&qtab_[i * np], np));
  cos_mphi_.resize((L + 1) * n_phi);
  sin_mphi_.resize((L + 1) * n_phi);
  for (std::size_t m = 0; m <= L; ++m)
    for (std::size_t j = 0; j < n_phi; ++j) {
      cos_mphi_[m * n_phi + j] = std::cos(double(m) * phi_[j]);
      sin_mphi_[m * n_phi + j] = std::sin(double(m) * phi_[j]);
    }
}

double SphereGrid::integrate(std::span<const double> f) const {
  double total = 0.0;
  for (std::size_t i = 0; i < n_theta_; ++i) {
    double row = 0.0;
    for (std::size_t j = 0; j < n_phi_; ++j) row += f[index(i, j)];
    total += w_[i] * row;
  }
  return total * dphi_;
}

std::size_t SphereGrid::n_coeff() const {
  const std::size_t L = degree();
  return (L + 1) * (L + 1);
}

std::size_t SphereGrid::coeff_index(std::size_t l, std::size_t m, int kind) const {
  const std::size_t L = degree();
  if (m == 0) return l;
  // cos blocks then sin block per m: offset(m) = (L+1) + sum_{k=1}^{m-1} 2(L+1-k)
  std::size_t off = (L + 1);
  for (std::size_t k = 1; k < m; ++k) off += 2 * (L + 1 - k);
  off += (kind == 1 ? (L + 1 - m) : 0);
  return off + (l - m);
}

std::vector<double> SphereGrid::analyze(std::span<const double> f) const {
  const std::size_t L = degree();
  const std::size_t np = (L + 1) * (L + 2) / 2;
  // phi transform
  std::vector<double> fc((L + 1) * n_theta_, 0.0), fs((L + 1) * n_theta_, 0.0);
  for (std::size_t i = 0; i < n_theta_; ++i) {
    for (std::size_t m = 0; m <= L; ++m) {
      double sc = 0.0, ss = 0.0;
      const double* cm = &cos_mphi_[m * n_phi_];
      const double* sm = &sin_mphi_[m * n_phi_];
      const double* fi = &f[i * n_phi_];
      for (std::size_t j = 0; j < n_phi_; ++j) {
        sc += fi[j] * cm[j];
        ss += fi[j] * sm[j];
      }
      fc[m * n_theta_ + i] = sc * dphi_;
      fs[m * n_theta_ + i] = ss * dphi_;
    }
  }
  // theta projection
  std::vector<double> coeff(n_coeff(), 0.0);
  const double rt2 = std::sqrt(2.0);
  for (std::size_t m = 0; m <= L; ++m) {
    for (std::size_t l = m; l <= L; ++l) {
      double sc = 0.0, ss = 0.0;
      for (std::size_t i = 0; i < n_theta_; ++i) {
        const double qq = w_[i] * qtab_[i * np + pair_index(l, m)];
        sc += qq * fc[m * n_theta_ + i];
        ss += qq * fs[m * n_theta_ + i];
      }
      if (m == 0) {
        coeff[coeff_index(l, 0, 0)] = sc;
      } else {
        coeff[coeff_index(l, m, 0)] = rt2 * sc;
        coeff[coeff_index(l, m, 1)] = rt2 * ss;
      }
    }
  }
  return coeff;
}

std::vector<double> SphereGrid::synthesize(std::span<const double> coeff) const {
  const std::size_t L = degree();
  const std::size_t np = (L + 1) * (L + 2) / 2;
  const double rt2 = std::sqrt(2.0);
  std::vector<double> gc((L + 1) * n_theta_, 0.0), gs((L + 1) * n_theta_, 0.0);
  for (std::size_t m = 0; m <= L; ++m) {
    for (std::size_t i = 0; i < n_theta_; ++i) {
      double sc = 0.0, ss = 0.0;
      for (std::size_t l = m; l <= L; ++l) {
        const double qq = qtab_[i * np + pair_index(l, m)];
        if (m == 0) {
          sc += coeff[coeff_index(l, 0, 0)] * qq;
        } else {
          sc += coeff[coeff_index(l, m, 0)] * rt2 * qq;
          ss += coeff[coeff_index(l, m, 1)] * rt2 * qq;
        }
      }
      gc[m * n_theta_ + i] = sc;
      gs[m * n_theta_ + i] = ss;
    }
  }
  std::vector<double> f(size(), 0.0);
  for (std::size_t i = 0; i < n_theta_; ++i) {
    for (std::size_t j = 0; j < n_phi_; ++j) {
      double v = gc[i];  // m = 0
      for (std::size_t m = 1; m <= L; ++m)
        v += gc[m * n_theta_ + i] * cos_mphi_[m * n_phi_ + j] +
             gs[m * n_theta_ + i] * sin_mphi_[m * n_phi_ + j];
      f[index(i, j)] = v;
    }
  }
  return f;
}

void SphereGrid::scale_by_eigenvalue(std::span<double> coeff) const {
  const std::size_t L = degree();
  for (std::size_t m = 0; m <= L; ++m)
    for (std::size_t l = m; l <= L; ++l) {
      const double ev = -double(l) * (double(l) + 1.0);
      coeff[coeff_index(l, m, 0)] *= ev;
      if (m > 0) coeff[coeff_index(l, m, 1)] *= ev;
    }
}

std::vector<double> SphereGrid::laplacian(std::span<const double> f) const {
  auto c = analyze(f);
  scale_by_eigenvalue(c);
  return synthesize(c);
}

std::vector<double> SphereGrid::harmonic_field(std::size_t l, std::size_t m, int kind) const {
  std::vector<double> c(n_coeff(), 0.0);
  c[coeff_index(l, m, kind)] = 1.0;
  return synthesize(c);
}

}  // namespace massflow

// Copyright 2026 The besov-euler Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "oracles.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace oracle {

std::vector<std::complex<double>> direct_dft(std::span<const double> samples, int dim,
                                             std::size_t n) {
  std::size_t total = 1;
  for (int a = 0; a < dim; ++a) total *= n;
  if (samples.size() != total) throw std::invalid_argument("direct_dft: size mismatch");
  const std::size_t half = n / 2 + 1;
  std::size_t spectral = half;
  for (int a = 0; a + 1 < dim; ++a) spectral *= n;

  std::vector<std::complex<double>> out(spectral);
  std::vector<long> k(dim);
  std::vector<std::size_t> x(dim);
  for (std::size_t s = 0; s < spectral; ++s) {
    std::size_t rest = s;
    for (int a = dim - 1; a >= 0; --a) {
      const std::size_t extent = a == dim - 1 ? half : n;
      const std::size_t slot = rest % extent;
      rest /= extent;
      k[a] = (a == dim - 1 || slot < n / 2) ? static_cast<long>(slot)
                                             : static_cast<long>(slot) - static_cast<long>(n);
    }
    std::complex<double> acc = 0.0;
    for (std::size_t i = 0; i < total; ++i) {
      std::size_t r = i;
      for (int a = dim - 1; a >= 0; --a) {
        x[a] = r % n;
        r /= n;
      }
      long phase = 0;
      for (int a = 0; a < dim; ++a) phase += k[a] * static_cast<long>(x[a]);
      const long m = ((phase % static_cast<long>(n)) + static_cast<long>(n)) % static_cast<long>(n);
      const double angle = -2.0 * std::numbers::pi * static_cast<double>(m) / static_cast<double>(n);
      acc += samples[i] * std::complex<double>(std::cos(angle), std::sin(angle));
    }
    out[s] = acc / static_cast<double>(total);
  }
  return out;
}

namespace {

double simpson(const std::function<double(double)>& f, double a, double b, double fa, double fm,
               double fb, double whole, double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = f(lm), frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  if (depth <= 0 || std::abs(left + right - whole) <= 15.0 * tol)
    return left + right + (left + right - whole) / 15.0;
  return simpson(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         simpson(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

}  // namespace

double integrate(const std::function<double(double)>& f, double a, double b, double tol) {
  // Split into panels first so oscillatory integrands are sampled densely.
  constexpr int kPanels = 64;
  double sum = 0.0;
  for (int i = 0; i < kPanels; ++i) {
    const double lo = a + (b - a) * i / kPanels;
    const double hi = a + (b - a) * (i + 1) / kPanels;
    const double flo = f(lo), fhi = f(hi), fm = f(0.5 * (lo + hi));
    const double whole = (hi - lo) / 6.0 * (flo + 4.0 * fm + fhi);
    sum += simpson(f, lo, hi, flo, fm, fhi, whole, tol / kPanels, 40);
  }
  return sum;
}

double cosine_average(double p) {
  return integrate([p](double x) { return std::pow(std::abs(std::cos(x)), p); }, 0.0,
                   std::numbers::pi) /
         std::numbers::pi;
}

double transition(double s) {
  if (s <= 0.0) return 0.0;
  if (s >= 1.0) return 1.0;
  const double a = std::exp(-1.0 / s);
  const double b = std::exp(-1.0 / (1.0 - s));
  return a / (a + b);
}

double bump(double t, double inner, double outer) {
  t = std::abs(t);
  if (t <= inner) return 1.0;
  if (t >= outer) return 0.0;
  return transition((outer - t) / (outer - inner));
}

double block_multiplier(int j, double t) {
  auto chi = [](double r) { return bump(r, 1.0, 4.0 / 3.0); };
  if (j <= -2) return 0.0;
  if (j == -1) return chi(t);
  const double u = std::ldexp(t, -j);
  return chi(0.5 * u) - chi(u);
}

Profile::Profile(int dim, double box_length) : length(box_length), d(dim) {
  const double step = 2.0 * std::numbers::pi / box_length;
  const double inner = std::pow(4.0, -dim), outer = std::pow(2.0, -dim);
  for (long k = -static_cast<long>(outer / step) - 1; k <= static_cast<long>(outer / step) + 1; ++k) {
    const double x = step * static_cast<double>(k);
    const double h = bump(x, inner, outer);
    if (h > 0.0) {
      xi.push_back(x);
      hat.push_back(h);
    }
  }
}

double Profile::value(double x) const {
  double s = 0.0;
  for (std::size_t i = 0; i < xi.size(); ++i) s += hat[i] * std::cos(xi[i] * x);
  return s / length;
}

double Profile::d1(double x) const {
  double s = 0.0;
  for (std::size_t i = 0; i < xi.size(); ++i) s -= hat[i] * xi[i] * std::sin(xi[i] * x);
  return s / length;
}

double Profile::d2(double x) const {
  double s = 0.0;
  for (std::size_t i = 0; i < xi.size(); ++i) s -= hat[i] * xi[i] * xi[i] * std::cos(xi[i] * x);
  return s / length;
}

ProductComponents product_components(const Profile& phi, int n, double s, double x1, double x2) {
  const double w = 17.0 / 12.0 * std::ldexp(1.0, n);
  const double a = phi.value(x1), a1 = phi.d1(x1), a2 = phi.d2(x1);
  const double b = phi.value(x2), b1 = phi.d1(x2), b2 = phi.d2(x2);
  const double c = std::cos(w * x1), sn = std::sin(w * x1);
  const double k3 = 12.0 / 17.0 * std::pow(2.0, -n * (s + 2.0));
  const double k2 = std::pow(2.0, -n * (s + 1.0));
  const double k1 = 17.0 / 12.0 * std::pow(2.0, -n * s);

  // g = (12/17) 2^{-n} (-a b1, a1 b),  f = 2^{-n(s+1)} (-d_2 psi, d_1 psi), psi = a c b.
  ProductComponents out;
  out.first = k3 * a * a1 * c * b1 * b1 - k2 * a * a * sn * b1 * b1 - k3 * a1 * a * c * b * b2;
  out.second = (k1 * a * a * c + k2 * a * a1 * sn - k3 * a * a2 * c + k3 * a1 * a1 * c) * b * b1;
  return out;
}

Line least_squares(std::span<const double> x, std::span<const double> y) {
  const double n = static_cast<double>(x.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
  }
  const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  return {slope, (sy - slope * sx) / n};
}

Line log2_fit(std::span<const double> x, std::span<const double> y) {
  std::vector<double> ly;
  for (double v : y) ly.push_back(std::log2(v));
  return least_squares(x, ly);
}

}  // namespace oracle

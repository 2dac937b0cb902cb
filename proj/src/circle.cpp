#include "tto/circle.hpp"

#include <cmath>

namespace tto {

namespace {

void require_grid(int grid_size) {
  if (grid_size < 8 || !is_power_of_two(grid_size)) {
    throw ConfigError("grid size must be a power of two >= 8, got " +
                      std::to_string(grid_size));
  }
}

void require_compatible(const CircleFunction& f, const CircleFunction& g) {
  if (!f.compatible(g)) {
    throw DimensionError("grid mismatch: " + std::to_string(f.grid_size) +
                         " vs " + std::to_string(g.grid_size));
  }
}

}  // namespace

Complex grid_point(int grid_size, int k) {
  const double t = 2.0 * kPi * static_cast<double>(k) / grid_size;
  return {std::cos(t), std::sin(t)};
}

CircleFunction sample_fn(const std::function<Complex(Complex)>& evaluator,
                         int grid_size) {
  require_grid(grid_size);
  CircleFunction f;
  f.grid_size = grid_size;
  f.samples.resize(grid_size);
  for (int k = 0; k < grid_size; ++k) f.samples[k] = evaluator(grid_point(grid_size, k));
  return f;
}

CircleFunction constant_fn(Complex value, int grid_size) {
  require_grid(grid_size);
  return {grid_size, std::vector<Complex>(grid_size, value)};
}

CircleFunction multiply(const CircleFunction& f, const CircleFunction& g) {
  require_compatible(f, g);
  CircleFunction out{f.grid_size, f.samples};
  for (int k = 0; k < f.grid_size; ++k) out.samples[k] *= g.samples[k];
  return out;
}

CircleFunction add(const CircleFunction& f, const CircleFunction& g) {
  require_compatible(f, g);
  CircleFunction out{f.grid_size, f.samples};
  for (int k = 0; k < f.grid_size; ++k) out.samples[k] += g.samples[k];
  return out;
}

CircleFunction subtract(const CircleFunction& f, const CircleFunction& g) {
  require_compatible(f, g);
  CircleFunction out{f.grid_size, f.samples};
  for (int k = 0; k < f.grid_size; ++k) out.samples[k] -= g.samples[k];
  return out;
}

CircleFunction conjugate(const CircleFunction& f) {
  CircleFunction out{f.grid_size, f.samples};
  for (auto& s : out.samples) s = std::conj(s);
  return out;
}

CircleFunction scale(Complex c, const CircleFunction& f) {
  CircleFunction out{f.grid_size, f.samples};
  for (auto& s : out.samples) s *= c;
  return out;
}

Complex inner_product(const CircleFunction& f, const CircleFunction& g) {
  require_compatible(f, g);
  Complex acc = 0.0;
  for (int k = 0; k < f.grid_size; ++k) acc += f.samples[k] * std::conj(g.samples[k]);
  return acc / static_cast<double>(f.grid_size);
}

double l2_norm(const CircleFunction& f) {
  double acc = 0.0;
  for (const auto& s : f.samples) acc += std::norm(s);
  return std::sqrt(acc / f.grid_size);
}

void fft_inplace(std::vector<Complex>& a, bool inverse) {
  const std::size_t n = a.size();
  if (!is_power_of_two(static_cast<int>(n))) {
    throw ConfigError("fft size must be a power of two");
  }
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  std::vector<Complex> twiddles(n / 2);
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const double step = 2.0 * kPi / static_cast<double>(len) * (inverse ? 1.0 : -1.0);
    // direct evaluation per index keeps the twiddles accurate to an ulp
    for (std::size_t k = 0; k < len / 2; ++k) {
      const double ang = step * static_cast<double>(k);
      twiddles[k] = Complex(std::cos(ang), std::sin(ang));
    }
    for (std::size_t i = 0; i < n; i += len) {
      for (std::size_t k = 0; k < len / 2; ++k) {
        const Complex u = a[i + k];
        const Complex v = a[i + k + len / 2] * twiddles[k];
        a[i + k] = u + v;
        a[i + k + len / 2] = u - v;
      }
    }
  }
}

std::vector<Complex> fourier(const CircleFunction& f) {
  std::vector<Complex> bins = f.samples;
  fft_inplace(bins, /*inverse=*/false);
  const double inv = 1.0 / f.grid_size;
  for (auto& c : bins) c *= inv;
  return bins;
}

CircleFunction synthesize(const std::vector<Complex>& coeffs_bin_order) {
  std::vector<Complex> samples = coeffs_bin_order;
  fft_inplace(samples, /*inverse=*/true);
  return {static_cast<int>(samples.size()), std::move(samples)};
}

CircleFunction riesz_project(RieszSign sign, const CircleFunction& f) {
  auto bins = fourier(f);
  const int m = f.grid_size;
  const int half = m / 2;
  // The Nyquist bin cannot be attributed to either side; treat energy there
  // as out-of-band content.
  double total = 0.0;
  for (const auto& c : bins) total += std::norm(c);
  if (std::norm(bins[half]) > kTailEnergyTol * (1.0 + total)) {
    throw AliasingError("out-of-band energy at the Nyquist index");
  }
  bins[half] = 0.0;
  if (sign == RieszSign::plus) {
    for (int n = -1; n > -half; --n) bins[((n % m) + m) % m] = 0.0;
  } else {
    for (int n = 0; n < half; ++n) bins[n] = 0.0;
  }
  return synthesize(bins);
}

FourierWindow fourier_window(const CircleFunction& f, int lo, int hi) {
  if (lo > hi) throw DomainError("window lo > hi");
  const int half = f.grid_size / 2;
  if (hi >= half || lo <= -half) {
    throw AliasingError("window exceeds the representable band");
  }
  auto bins = fourier(f);
  FourierWindow w;
  w.lo = lo;
  w.hi = hi;
  w.coeffs.resize(static_cast<std::size_t>(hi - lo + 1));
  for (int n = lo; n <= hi; ++n) w.coeffs[n - lo] = coeff_at(bins, n);
  return w;
}

double tail_energy_below(const std::vector<Complex>& bins, int lo) {
  const int m = static_cast<int>(bins.size());
  const int half = m / 2;
  double acc = std::norm(bins[half]);  // Nyquist
  for (int n = -half + 1; n < lo; ++n) acc += std::norm(coeff_at(bins, n));
  return acc;
}

}  // namespace tto

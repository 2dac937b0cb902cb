#pragma once

#include <functional>
#include <vector>

#include "tto/types.hpp"

namespace tto {

// A function on the unit circle, stored as equispaced samples:
// samples[k] = f(exp(2*pi*i*k/M)).  Grids are powers of two, M >= 8.
// Values are immutable after construction; all operations below are pure.
struct CircleFunction {
  int grid_size = 0;
  std::vector<Complex> samples;

  bool compatible(const CircleFunction& other) const {
    return grid_size == other.grid_size;
  }
};

// A contiguous slice of Fourier coefficients: coeffs[n - lo] multiplies z^n.
struct FourierWindow {
  int lo = 0;
  int hi = -1;
  std::vector<Complex> coeffs;

  // Band descriptor with no attached data, used to request windows.
  static FourierWindow band(int lo, int hi) { return {lo, hi, {}}; }
  int width() const { return hi - lo + 1; }
};

Complex grid_point(int grid_size, int k);

CircleFunction sample_fn(const std::function<Complex(Complex)>& evaluator,
                         int grid_size);
CircleFunction constant_fn(Complex value, int grid_size);

CircleFunction multiply(const CircleFunction& f, const CircleFunction& g);
CircleFunction add(const CircleFunction& f, const CircleFunction& g);
CircleFunction subtract(const CircleFunction& f, const CircleFunction& g);
CircleFunction conjugate(const CircleFunction& f);
CircleFunction scale(Complex c, const CircleFunction& f);

// <f, g> = (1/M) sum_k f(t_k) conj(g(t_k)); equals the Fourier pairing for
// band-limited inputs.
Complex inner_product(const CircleFunction& f, const CircleFunction& g);
double l2_norm(const CircleFunction& f);

// In-place radix-2 transform; size must be a power of two.  Forward maps
// samples to unnormalized bin sums; inverse undoes it up to a factor n.
void fft_inplace(std::vector<Complex>& a, bool inverse);

// True Fourier coefficients in bin order: result[n mod M] = hat_f(n).
std::vector<Complex> fourier(const CircleFunction& f);
CircleFunction synthesize(const std::vector<Complex>& coeffs_bin_order);

inline Complex coeff_at(const std::vector<Complex>& bins, int n) {
  const int m = static_cast<int>(bins.size());
  return bins[((n % m) + m) % m];
}

enum class RieszSign { plus, minus };

// Index filter: plus keeps n >= 0, minus keeps n <= -1.  Energy in the
// Nyquist bin signals aliasing and raises AliasingError.
CircleFunction riesz_project(RieszSign sign, const CircleFunction& f);

// Extract coefficients on [lo, hi]; the band must sit strictly inside the
// representable range (anti-aliasing contract).
FourierWindow fourier_window(const CircleFunction& f, int lo, int hi);

// Energy of hat_f(n) over n < lo plus the Nyquist bin.
double tail_energy_below(const std::vector<Complex>& bins, int lo);

}  // namespace tto

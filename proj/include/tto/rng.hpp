#pragma once

#include <cstdint>
#include <random>

#include "tto/types.hpp"

namespace tto {

// Deterministic random source shared by the harness and tests.  Doubles are
// produced by an explicit 53-bit mapping instead of std::uniform_real_distribution,
// so identical seeds give identical streams across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  double uniform() {  // [0, 1)
    return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
  }

  double uniform(double a, double b) { return a + (b - a) * uniform(); }

  // Independent real and imaginary parts, uniform on [-1, 1].
  Complex complex_box() { return {uniform(-1.0, 1.0), uniform(-1.0, 1.0)}; }

  Complex unimodular() {
    const double t = uniform(0.0, 2.0 * kPi);
    return {std::cos(t), std::sin(t)};
  }

  // Uniform w.r.t. area on the disk of radius rmax.
  Complex in_disk(double rmax) {
    const double r = rmax * std::sqrt(uniform());
    return r * unimodular();
  }

  std::uint64_t integer(std::uint64_t n) {  // [0, n)
    return gen_() % n;
  }

  CVector vector(int n) {
    CVector v(n);
    for (int i = 0; i < n; ++i) v(i) = complex_box();
    return v;
  }

  CMatrix matrix(int rows, int cols) {
    CMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) m(i, j) = complex_box();
    return m;
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace tto

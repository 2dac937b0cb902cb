#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace tto {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

inline constexpr double kPi = 3.141592653589793238462643383279502884;

// Default tolerance for structural predicates (conjugation checks etc.).
inline constexpr double kDefaultTol = 1e-10;

// Threshold for the Fourier tail-energy checks used by the anti-aliasing
// contract and Hankel window validation.
inline constexpr double kTailEnergyTol = 1e-13;

// Bad grid size or other construction-time misconfiguration.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Operands defined on incompatible grids or with mismatched matrix shapes.
struct DimensionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Spectral content detected outside the representable band.
struct AliasingError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Mathematical precondition violated (point outside the disk, divisibility, ...).
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A coefficient window too narrow for the requested operator.
struct TruncationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Structured input failed validation (e.g. a claimed conjugation that is not one).
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

}  // namespace tto

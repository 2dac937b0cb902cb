#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "tto/circle.hpp"
#include "tto/rng.hpp"
#include "tto/types.hpp"

namespace tto {

// A finite Blaschke product c * prod_i (z - a_i) / (1 - conj(a_i) z) with
// |a_i| < 1 and |c| = 1.  Zeros are kept in a canonical order (modulus, then
// argument) so downstream bases and matrices are deterministic.  Degree 0
// (no zeros) represents a unimodular constant.
class BlaschkeProduct {
 public:
  BlaschkeProduct() : constant_(1.0) {}
  explicit BlaschkeProduct(std::vector<Complex> zeros, Complex constant = Complex(1.0));

  static BlaschkeProduct zpow(int n);  // z^n

  int degree() const { return static_cast<int>(zeros_.size()); }
  const std::vector<Complex>& zeros() const { return zeros_; }
  Complex constant() const { return constant_; }

  // All zeros at the origin (within matching tolerance).
  bool is_monomial() const;

  Complex evaluate(Complex z) const;
  CircleFunction sample(int grid_size) const;

  BlaschkeProduct times(const BlaschkeProduct& other) const;

  // this / divisor when the divisor's zeros (with multiplicity) are contained
  // in ours; the quotient constant satisfies divisor * quotient == *this.
  std::optional<BlaschkeProduct> divide_out(const BlaschkeProduct& divisor) const;

  // Inner functions are compared up to a unimodular factor.
  bool equal_up_to_constant(const BlaschkeProduct& other, double tol = 1e-12) const;

  std::string label() const;  // "z^3", "1", or "blaschke[...]"

  nlohmann::json to_json() const;
  static BlaschkeProduct from_json(const nlohmann::json& j);

  // Zero-matching tolerance used by divide_out and is_monomial.
  static constexpr double kZeroMatchTol = 1e-12;

 private:
  std::vector<Complex> zeros_;
  Complex constant_;
};

Complex blaschke_eval(const BlaschkeProduct& b, Complex z);
std::optional<BlaschkeProduct> blaschke_divide(const BlaschkeProduct& alpha,
                                               const BlaschkeProduct& theta);

// A finite Laurent band: coeffs[n - lo] multiplies z^n.  Canonical form trims
// zero coefficients at both ends; the zero symbol has an empty band.
class LaurentSymbol {
 public:
  LaurentSymbol() = default;
  LaurentSymbol(int lo, std::vector<Complex> coeffs);

  static LaurentSymbol monomial(int n, Complex c = Complex(1.0));
  static LaurentSymbol random_band(int lo, int hi, Rng& rng);

  bool is_zero() const { return coeffs_.empty(); }
  int band_min() const { return lo_; }
  int band_max() const { return lo_ + static_cast<int>(coeffs_.size()) - 1; }
  Complex coeff(int n) const;

  LaurentSymbol conjugated() const;       // coefficients of conj(phi)
  LaurentSymbol shifted(int k) const;     // phi * z^k
  LaurentSymbol times(const LaurentSymbol& other) const;
  LaurentSymbol plus(const LaurentSymbol& other) const;

  Complex evaluate(Complex t) const;      // t on the unit circle
  CircleFunction sample(int grid_size) const;

  std::string encode() const;                       // "n:re,im;..."
  static LaurentSymbol parse(const std::string&);   // inverse of encode

 private:
  void trim();
  int lo_ = 0;
  std::vector<Complex> coeffs_;
};

}  // namespace tto

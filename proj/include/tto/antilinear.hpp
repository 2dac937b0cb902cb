#pragma once

#include <string>

#include <nlohmann/json_fwd.hpp>

#include "tto/types.hpp"

namespace tto {

// Matrix calculus for linear and antilinear maps between finite-dimensional
// coordinate spaces.
//
// Conventions, fixed here and reused by every other module:
//   * A linear map acts as v |-> M v.
//   * An antilinear map is stored as the matrix of its composition with
//     entrywise conjugation, i.e. it acts as v |-> M conj(v).  Under this
//     representation the antilinear adjoint (defined through the pairing
//     <Xf, g> = conj(<f, X# g>)) is the plain transpose of M, with no
//     entrywise conjugation.  This correspondence is not assumed: the unit
//     tests fix it by a brute-force pairing check before anything relies
//     on it.
//   * Direct sums are index concatenation; the first summand occupies the
//     leading coordinates.

struct LinearMap {
  CMatrix m;

  LinearMap() = default;
  explicit LinearMap(CMatrix mat) : m(std::move(mat)) {}
  static LinearMap identity(int n) { return LinearMap(CMatrix::Identity(n, n)); }
  static LinearMap zero(int rows, int cols) { return LinearMap(CMatrix::Zero(rows, cols)); }

  int rows() const { return static_cast<int>(m.rows()); }
  int cols() const { return static_cast<int>(m.cols()); }
  CVector apply(const CVector& v) const { return m * v; }
};

struct AntilinearMap {
  CMatrix m;

  AntilinearMap() = default;
  explicit AntilinearMap(CMatrix mat) : m(std::move(mat)) {}
  // Entrywise conjugation J on C^n has the identity matrix here.
  static AntilinearMap conjugation_j(int n) { return AntilinearMap(CMatrix::Identity(n, n)); }

  int rows() const { return static_cast<int>(m.rows()); }
  int cols() const { return static_cast<int>(m.cols()); }
  CVector apply(const CVector& v) const { return m * v.conjugate(); }
};

// Antilinear adjoint: the unique X# with <Xf, g> = conj(<f, X# g>).
AntilinearMap sharp(const AntilinearMap& x);
LinearMap adjoint(const LinearMap& a);

// compose(a, b) applies b first.  Kind bookkeeping:
// linear . linear and antilinear . antilinear are linear, mixed pairs are
// antilinear.
LinearMap compose(const LinearMap& a, const LinearMap& b);
AntilinearMap compose(const LinearMap& a, const AntilinearMap& b);
AntilinearMap compose(const AntilinearMap& a, const LinearMap& b);
LinearMap compose(const AntilinearMap& a, const AntilinearMap& b);

// (X1 diamond X2) f = X1 f (+) X2 f : vertical stack.
// (Y1 boxplus Y2)(f (+) g) = Y1 f + Y2 g : horizontal stack.
LinearMap diamond(const LinearMap& x1, const LinearMap& x2);
AntilinearMap diamond(const AntilinearMap& x1, const AntilinearMap& x2);
LinearMap boxplus(const LinearMap& y1, const LinearMap& y2);
AntilinearMap boxplus(const AntilinearMap& y1, const AntilinearMap& y2);

LinearMap block_diag(const LinearMap& a, const LinearMap& b);

// True iff the matrix is unitary and symmetric within tol; equivalent to
// C^2 = I together with <Cf, Cg> = <g, f> (checked against the definition by
// brute force in the tests).
bool check_conjugation(const AntilinearMap& c, double tol = kDefaultTol);

// True iff X# = X, i.e. the stored matrix is symmetric within tol.
bool check_antiselfadjoint(const AntilinearMap& x, double tol = kDefaultTol);

// Normalized stacked/summed pair built from two conjugations on C^n,
// together with the projection q = c_diamond . c_boxplus.
struct ConjugationPair {
  AntilinearMap c_diamond;  // (1/sqrt 2) C1 diamond C2 : n -> 2n
  AntilinearMap c_boxplus;  // (1/sqrt 2) C1 boxplus C2 : 2n -> n
  LinearMap q;              // orthogonal projection on C^{2n}, rank n
};

ConjugationPair c_pair(const AntilinearMap& c1, const AntilinearMap& c2,
                       double tol = kDefaultTol);

double operator_norm(const CMatrix& m);  // largest singular value
double max_abs_entry(const CMatrix& m);
int numerical_rank(const CMatrix& m, double threshold = 0.5);

nlohmann::json to_json(const LinearMap& a);
nlohmann::json to_json(const AntilinearMap& x);
// Reads either kind; `kind` reports "linear" or "antilinear".
CMatrix matrix_from_json(const nlohmann::json& j, std::string* kind = nullptr);

}  // namespace tto

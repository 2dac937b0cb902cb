#pragma once

#include <optional>

#include "tto/operators.hpp"

namespace tto {

// Builds every matrix the identity registry needs for one configuration
// (theta, alpha dividing theta, grid).  All operators are expressed against
// the orthonormal bases of the three model spaces involved; identities on the
// big space are assembled through the embedding matrices below.
//
// Block conventions, fixed here and used by every identity:
//   e1 : inclusion of the alpha space into the theta space
//   e2 : multiplication by alpha, quotient space -> theta space
//   f1 : inclusion of the quotient space into the theta space
//   f2 : multiplication by theta/alpha, alpha space -> theta space
// [e1 | e2] and [f1 | f2] are unitary.  The projection onto a subspace as an
// operator on the theta space is the embedding times its adjoint; as a map
// onto the subspace's own coordinates it is the plain adjoint.
//
// Monomial configurations (all zeros at the origin, unit constants) follow an
// exact coefficient path with no sampling; anything else goes through the
// grid.  The two paths are compared against each other in the tests.
class OperatorWorkspace {
 public:
  enum class Space { theta, alpha, quotient };
  enum class Factor { alpha, alpha_bar, theta, theta_bar, quotient, quotient_bar };

  // A symbol in whichever representation the active path uses.
  struct Symbol {
    LaurentSymbol laurent;
    CircleFunction samples;
    bool exact = true;
  };

  OperatorWorkspace(const BlaschkeProduct& theta, const BlaschkeProduct& alpha,
                    int grid_size);

  // True when the configuration qualifies for the exact coefficient path.
  static bool exact_eligible(const BlaschkeProduct& theta, const BlaschkeProduct& alpha);

  bool exact() const { return exact_; }
  int grid_size() const { return grid_; }
  int dim(Space s) const;
  const BlaschkeProduct& inner(Space s) const;
  const ModelBasis& basis(Space s) const;

  const CMatrix& e1() const { return e1_; }
  const CMatrix& e2() const { return e2_; }
  const CMatrix& f1() const { return f1_; }
  const CMatrix& f2() const { return f2_; }

  // Conjugation matrix of one space, and the block conjugation on the theta
  // space attached to the alpha splitting (coincides with the theta
  // conjugation when alpha == theta).
  const CMatrix& conjugation(Space s) const;
  const CMatrix& c_split() const { return c_split_; }

  Symbol symbol(const LaurentSymbol& phi) const;
  Symbol symbol_sampled(const CircleFunction& samples) const;  // grid path only
  Symbol conj(const Symbol& s) const;
  Symbol times(const Symbol& s, Factor f) const;

  // Compression of multiplication by the symbol: dim(to) x dim(from).
  CMatrix atto(const Symbol& s, Space from, Space to) const;

  // tilde-hankel of inner(to) composed with the hankel of the symbol on the
  // `from` basis; the coefficient window is handled internally.
  CMatrix hankel_compose(const Symbol& s, Space from, Space to) const;

 private:
  CircleFunction factor_fn(Factor f) const;

  BlaschkeProduct theta_, alpha_, quotient_;
  int grid_;
  bool exact_;
  ModelBasis basis_theta_, basis_alpha_, basis_quot_;
  std::optional<CircleFunction> theta_fn_, alpha_fn_, quot_fn_;
  CMatrix e1_, e2_, f1_, f2_;
  CMatrix c_theta_, c_alpha_, c_quot_, c_split_;
};

}  // namespace tto

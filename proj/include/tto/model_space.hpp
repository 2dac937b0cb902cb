#pragma once

#include <utility>
#include <vector>

#include "tto/antilinear.hpp"
#include "tto/blaschke.hpp"
#include "tto/circle.hpp"

namespace tto {

// Orthonormal Takenaka-Malmquist basis of the model space attached to a
// finite Blaschke product, realized on a sample grid.  For theta = z^N this
// is exactly the monomial basis 1, z, ..., z^{N-1}.
struct ModelBasis {
  BlaschkeProduct theta;
  int grid_size = 0;
  std::vector<CircleFunction> functions;

  int dim() const { return static_cast<int>(functions.size()); }
};

// e_k(z) = sqrt(1-|a_k|^2)/(1 - conj(a_k) z) * prod_{j<k} (z-a_j)/(1 - conj(a_j) z),
// following the canonical zero order of theta.  Degree 0 raises DomainError.
ModelBasis tm_basis(const BlaschkeProduct& theta, int grid_size);

// Internal variant that admits the trivial space (degree 0, no functions);
// identity plumbing for the degenerate alpha = theta case.
ModelBasis tm_basis_or_trivial(const BlaschkeProduct& theta, int grid_size);

// Closed-form value of basis element k at any z in the open disk.
Complex tm_eval(const BlaschkeProduct& theta, int k, Complex z);

CMatrix gram(const ModelBasis& basis);

// Coordinates of the model-space projection of f, computed through the
// factorization P_theta = theta P^- conj(theta) P.
CVector model_project(const CircleFunction& f, const ModelBasis& basis);

CircleFunction reconstruct(const ModelBasis& basis, const CVector& coords);

// Value at an interior point of the function with the given coordinates.
Complex eval_coords(const ModelBasis& basis, const CVector& coords, Complex z);

// (k_lambda, conjugate kernel) for the model space of theta:
//   k(z)  = (1 - conj(theta(lambda)) theta(z)) / (1 - conj(lambda) z)
//   kc(z) = (theta(z) - theta(lambda)) / (z - lambda)
std::pair<CircleFunction, CircleFunction> kernels(const BlaschkeProduct& theta,
                                                  Complex lambda, int grid_size);

// Matrix of f |-> eta * f from `from` coordinates into `to` coordinates.
// Requires eta * from.theta to divide to.theta; an isometry in that case.
LinearMap inner_mult_embed(const BlaschkeProduct& eta, const ModelBasis& from,
                           const ModelBasis& to);

}  // namespace tto

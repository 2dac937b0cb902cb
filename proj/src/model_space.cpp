#include "tto/model_space.hpp"

#include <cmath>

namespace tto {

ModelBasis tm_basis_or_trivial(const BlaschkeProduct& theta, int grid_size) {
  ModelBasis basis;
  basis.theta = theta;
  basis.grid_size = grid_size;
  const auto& zeros = theta.zeros();
  // Running product of the first k Moebius factors, updated in place.
  CircleFunction tail = constant_fn(1.0, grid_size);
  for (int k = 0; k < theta.degree(); ++k) {
    const Complex a = zeros[k];
    const double norm_const = std::sqrt(1.0 - std::norm(a));
    CircleFunction e = sample_fn(
        [&](Complex z) { return norm_const / (1.0 - std::conj(a) * z); }, grid_size);
    e = multiply(e, tail);
    basis.functions.push_back(e);
    tail = multiply(tail, sample_fn([&](Complex z) {
                      return (z - a) / (1.0 - std::conj(a) * z);
                    }, grid_size));
  }
  return basis;
}

ModelBasis tm_basis(const BlaschkeProduct& theta, int grid_size) {
  if (theta.degree() == 0) {
    throw DomainError("model space of a constant inner function is trivial");
  }
  return tm_basis_or_trivial(theta, grid_size);
}

Complex tm_eval(const BlaschkeProduct& theta, int k, Complex z) {
  const auto& zeros = theta.zeros();
  if (k < 0 || k >= theta.degree()) throw DomainError("basis index out of range");
  const Complex a = zeros[k];
  Complex value = std::sqrt(1.0 - std::norm(a)) / (1.0 - std::conj(a) * z);
  for (int j = 0; j < k; ++j) {
    value *= (z - zeros[j]) / (1.0 - std::conj(zeros[j]) * z);
  }
  return value;
}

CMatrix gram(const ModelBasis& basis) {
  const int n = basis.dim();
  CMatrix g(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      g(i, j) = inner_product(basis.functions[j], basis.functions[i]);
  return g;
}

CVector model_project(const CircleFunction& f, const ModelBasis& basis) {
  const CircleFunction theta_fn = basis.theta.sample(basis.grid_size);
  const CircleFunction analytic = riesz_project(RieszSign::plus, f);
  const CircleFunction inner_part =
      riesz_project(RieszSign::minus, multiply(conjugate(theta_fn), analytic));
  const CircleFunction projected = multiply(theta_fn, inner_part);
  CVector coords(basis.dim());
  for (int i = 0; i < basis.dim(); ++i) {
    coords(i) = inner_product(projected, basis.functions[i]);
  }
  return coords;
}

CircleFunction reconstruct(const ModelBasis& basis, const CVector& coords) {
  if (coords.size() != basis.dim()) throw DimensionError("coordinate count mismatch");
  CircleFunction acc = constant_fn(0.0, basis.grid_size);
  for (int i = 0; i < basis.dim(); ++i) {
    acc = add(acc, scale(coords(i), basis.functions[i]));
  }
  return acc;
}

Complex eval_coords(const ModelBasis& basis, const CVector& coords, Complex z) {
  if (coords.size() != basis.dim()) throw DimensionError("coordinate count mismatch");
  Complex acc = 0.0;
  for (int i = 0; i < basis.dim(); ++i) acc += coords(i) * tm_eval(basis.theta, i, z);
  return acc;
}

std::pair<CircleFunction, CircleFunction> kernels(const BlaschkeProduct& theta,
                                                  Complex lambda, int grid_size) {
  if (std::abs(lambda) >= 1.0) {
    throw DomainError("kernel parameter must lie inside the open disk");
  }
  const Complex tl = theta.evaluate(lambda);
  CircleFunction k = sample_fn(
      [&](Complex z) {
        return (1.0 - std::conj(tl) * theta.evaluate(z)) / (1.0 - std::conj(lambda) * z);
      },
      grid_size);
  CircleFunction kc = sample_fn(
      [&](Complex z) { return (theta.evaluate(z) - tl) / (z - lambda); }, grid_size);
  return {k, kc};
}

LinearMap inner_mult_embed(const BlaschkeProduct& eta, const ModelBasis& from,
                           const ModelBasis& to) {
  if (from.grid_size != to.grid_size) throw DimensionError("bases on different grids");
  if (!to.theta.divide_out(eta.times(from.theta))) {
    throw DomainError("inner_mult_embed requires eta * from to divide to");
  }
  const CircleFunction eta_fn = eta.sample(from.grid_size);
  CMatrix m(to.dim(), from.dim());
  for (int j = 0; j < from.dim(); ++j) {
    const CircleFunction shifted = multiply(eta_fn, from.functions[j]);
    for (int i = 0; i < to.dim(); ++i) {
      m(i, j) = inner_product(shifted, to.functions[i]);
    }
  }
  return LinearMap(std::move(m));
}

}  // namespace tto

#include "tto/workspace.hpp"

#include <cmath>

namespace tto {

namespace {

CMatrix flip(int n) {
  CMatrix m = CMatrix::Zero(n, n);
  for (int i = 0; i < n; ++i) m(i, n - 1 - i) = 1.0;
  return m;
}

CMatrix shift_embed(int rows, int shift, int cols) {
  // z^shift * (monomial basis of size cols) inside a space of size rows.
  CMatrix m = CMatrix::Zero(rows, cols);
  for (int j = 0; j < cols; ++j)
    if (shift + j < rows) m(shift + j, j) = 1.0;
  return m;
}

bool plain_monomial(const BlaschkeProduct& b) {
  return b.is_monomial() && std::abs(b.constant() - Complex(1.0)) < 1e-14;
}

}  // namespace

bool OperatorWorkspace::exact_eligible(const BlaschkeProduct& theta,
                                       const BlaschkeProduct& alpha) {
  return plain_monomial(theta) && plain_monomial(alpha);
}

OperatorWorkspace::OperatorWorkspace(const BlaschkeProduct& theta,
                                     const BlaschkeProduct& alpha, int grid_size)
    : theta_(theta), alpha_(alpha), grid_(grid_size) {
  const auto q = theta.divide_out(alpha);
  if (!q) throw DomainError("alpha must divide theta");
  if (alpha.degree() == 0 || theta.degree() == 0) {
    throw DomainError("nonconstant inner functions required");
  }
  quotient_ = *q;
  exact_ = exact_eligible(theta_, alpha_);

  const int n = theta_.degree();
  const int d = alpha_.degree();
  const int r = quotient_.degree();

  if (exact_) {
    e1_ = shift_embed(n, 0, d);
    e2_ = shift_embed(n, d, r);
    f1_ = shift_embed(n, 0, r);
    f2_ = shift_embed(n, r, d);
    c_theta_ = flip(n);
    c_alpha_ = flip(d);
    c_quot_ = flip(r);
    c_split_ = e1_ * c_alpha_ * e1_.transpose() + e2_ * c_quot_ * e2_.transpose();
    return;
  }

  basis_theta_ = tm_basis(theta_, grid_);
  basis_alpha_ = tm_basis(alpha_, grid_);
  basis_quot_ = tm_basis_or_trivial(quotient_, grid_);
  theta_fn_ = theta_.sample(grid_);
  alpha_fn_ = alpha_.sample(grid_);
  quot_fn_ = quotient_.sample(grid_);

  e1_ = inner_mult_embed(BlaschkeProduct(), basis_alpha_, basis_theta_).m;
  e2_ = inner_mult_embed(alpha_, basis_quot_, basis_theta_).m;
  f1_ = inner_mult_embed(BlaschkeProduct(), basis_quot_, basis_theta_).m;
  f2_ = inner_mult_embed(quotient_, basis_alpha_, basis_theta_).m;

  c_theta_ = c_theta_matrix(basis_theta_).m;
  c_alpha_ = c_theta_matrix(basis_alpha_).m;
  c_quot_ = c_theta_matrix(basis_quot_).m;
  c_split_ = e1_ * c_alpha_ * e1_.transpose() + e2_ * c_quot_ * e2_.transpose();
}

int OperatorWorkspace::dim(Space s) const { return inner(s).degree(); }

const BlaschkeProduct& OperatorWorkspace::inner(Space s) const {
  switch (s) {
    case Space::theta: return theta_;
    case Space::alpha: return alpha_;
    default: return quotient_;
  }
}

const ModelBasis& OperatorWorkspace::basis(Space s) const {
  if (exact_) throw ConfigError("exact workspace carries no sampled bases");
  switch (s) {
    case Space::theta: return basis_theta_;
    case Space::alpha: return basis_alpha_;
    default: return basis_quot_;
  }
}

const CMatrix& OperatorWorkspace::conjugation(Space s) const {
  switch (s) {
    case Space::theta: return c_theta_;
    case Space::alpha: return c_alpha_;
    default: return c_quot_;
  }
}

OperatorWorkspace::Symbol OperatorWorkspace::symbol(const LaurentSymbol& phi) const {
  Symbol s;
  s.laurent = phi;
  s.exact = exact_;
  if (!exact_) s.samples = phi.sample(grid_);
  return s;
}

OperatorWorkspace::Symbol OperatorWorkspace::symbol_sampled(const CircleFunction& samples) const {
  if (exact_) throw ConfigError("sampled symbols need the grid path");
  Symbol s;
  s.exact = false;
  s.samples = samples;
  return s;
}

OperatorWorkspace::Symbol OperatorWorkspace::conj(const Symbol& s) const {
  Symbol out;
  out.exact = s.exact;
  if (s.exact) {
    out.laurent = s.laurent.conjugated();
  } else {
    out.samples = conjugate(s.samples);
  }
  return out;
}

CircleFunction OperatorWorkspace::factor_fn(Factor f) const {
  switch (f) {
    case Factor::alpha: return *alpha_fn_;
    case Factor::alpha_bar: return conjugate(*alpha_fn_);
    case Factor::theta: return *theta_fn_;
    case Factor::theta_bar: return conjugate(*theta_fn_);
    case Factor::quotient: return *quot_fn_;
    default: return conjugate(*quot_fn_);
  }
}

OperatorWorkspace::Symbol OperatorWorkspace::times(const Symbol& s, Factor f) const {
  Symbol out;
  out.exact = s.exact;
  if (s.exact) {
    int shift = 0;
    switch (f) {
      case Factor::alpha: shift = alpha_.degree(); break;
      case Factor::alpha_bar: shift = -alpha_.degree(); break;
      case Factor::theta: shift = theta_.degree(); break;
      case Factor::theta_bar: shift = -theta_.degree(); break;
      case Factor::quotient: shift = quotient_.degree(); break;
      case Factor::quotient_bar: shift = -quotient_.degree(); break;
    }
    out.laurent = s.laurent.shifted(shift);
  } else {
    out.samples = multiply(s.samples, factor_fn(f));
  }
  return out;
}

CMatrix OperatorWorkspace::atto(const Symbol& s, Space from, Space to) const {
  if (exact_) {
    CMatrix m(dim(to), dim(from));
    for (int i = 0; i < dim(to); ++i)
      for (int j = 0; j < dim(from); ++j) m(i, j) = s.laurent.coeff(i - j);
    return m;
  }
  return atto_matrix_sampled(s.samples, basis(from), basis(to)).m;
}

CMatrix OperatorWorkspace::hankel_compose(const Symbol& s, Space from, Space to) const {
  if (exact_) {
    // The analytic-completion step reads exactly one negative coefficient per
    // output row, so the composition collapses to index arithmetic.
    const int p = inner(to).degree();
    CMatrix m(dim(to), dim(from));
    for (int i = 0; i < dim(to); ++i)
      for (int j = 0; j < dim(from); ++j) m(i, j) = s.laurent.coeff(i - p - j);
    return m;
  }
  const int guard = std::min(64, grid_ / 8);
  const FourierWindow window = FourierWindow::band(-grid_ / 2 + guard, -1);
  const CMatrix hk = hankel_matrix_sampled(s.samples, basis(from), window).m;
  CircleFunction to_fn = to == Space::theta   ? *theta_fn_
                         : to == Space::alpha ? *alpha_fn_
                                              : *quot_fn_;
  const CMatrix thk = tilde_hankel_matrix_sampled(to_fn, window, basis(to)).m;
  return thk * hk;
}

}  // namespace tto

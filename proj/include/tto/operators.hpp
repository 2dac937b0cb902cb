#pragma once

#include <string>
#include <vector>

#include "tto/antilinear.hpp"
#include "tto/blaschke.hpp"
#include "tto/model_space.hpp"

namespace tto {

// Matrix of the model-space conjugation f |-> theta conj(z) conj(f) in the
// given basis.  Entries are <C e_j, e_i>; the result is unitary-symmetric and
// maps the space into itself (both facts exercised by the tests).
AntilinearMap c_theta_matrix(const ModelBasis& basis);

// Block conjugation attached to the orthogonal splitting of the model space
// of theta along a strict divisor alpha: acts as the alpha-conjugation on the
// first block and as the alpha-twisted quotient conjugation on the second.
AntilinearMap c_split_matrix(const BlaschkeProduct& alpha, const BlaschkeProduct& theta,
                             int grid_size);

// Compression of multiplication by the symbol, domain model space of theta,
// codomain model space of alpha (alpha == theta gives the square case).
LinearMap atto_matrix(const LaurentSymbol& phi, const BlaschkeProduct& theta,
                      const BlaschkeProduct& alpha, int grid_size);

// Sampled-symbol variants used when the symbol is not a Laurent polynomial.
LinearMap atto_matrix_sampled(const CircleFunction& symbol, const ModelBasis& domain,
                              const ModelBasis& codomain);

// Co-analytic compression: rows are the Fourier coefficients of the symbol
// times each domain element, on the window [lo, -1].  A tail-energy check
// below the window guards against truncation.
LinearMap hankel_matrix(const LaurentSymbol& phi, const ModelBasis& domain,
                        const FourierWindow& window);
LinearMap hankel_matrix_sampled(const CircleFunction& symbol, const ModelBasis& domain,
                                const FourierWindow& window);

// Analytic completion: maps windowed co-analytic coefficients into the
// codomain model space.
LinearMap tilde_hankel_matrix(const BlaschkeProduct& psi, const FourierWindow& window,
                              const ModelBasis& codomain);
LinearMap tilde_hankel_matrix(const LaurentSymbol& psi, const FourierWindow& window,
                              const ModelBasis& codomain);
LinearMap tilde_hankel_matrix_sampled(const CircleFunction& psi, const FourierWindow& window,
                                      const ModelBasis& codomain);

// Enumeration of shift-intertwining conjugations at monomial scale.  The
// candidates are C = M_{z^k} J on the Fourier window [-search_k, search_k];
// admissible means C maps z^gamma_deg * (monomials below alpha_deg) into the
// monomial model space of z^theta_deg.
struct MzClassification {
  int alpha_deg = 0;
  int theta_deg = 0;
  int gamma_deg = 0;
  int search_k = 0;
  std::vector<int> beta_degrees;            // admissible targets, as degrees
  std::vector<AntilinearMap> witnesses;     // window matrix per admissible beta
};

MzClassification mz_conjugation_enumerate(int alpha_deg, int theta_deg, int gamma_deg,
                                          int search_k);

struct NamedConjugation {
  std::string name;
  AntilinearMap map;
};

// All conjugations on the monomial model space of z^theta_deg whose
// restrictions to the two blocks of the alpha-splitting come from
// shift-intertwining conjugations, filtered by the requirement that the two
// image blocks again decompose the space orthogonally.
std::vector<NamedConjugation> dichotomy_check(int alpha_deg, int theta_deg);

}  // namespace tto

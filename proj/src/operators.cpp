#include "tto/operators.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

namespace tto {

namespace {

CircleFunction conj_z(int grid_size) {
  return sample_fn([](Complex z) { return std::conj(z); }, grid_size);
}

void require_band_fits(const LaurentSymbol& phi, int extra_degree, int grid_size) {
  if (phi.is_zero()) return;
  const int half = grid_size / 2;
  const int reach = std::max(std::abs(phi.band_min()), std::abs(phi.band_max())) +
                    extra_degree + 1;
  if (reach >= half) {
    throw AliasingError("symbol band too wide for the grid");
  }
}

}  // namespace

AntilinearMap c_theta_matrix(const ModelBasis& basis) {
  const int n = basis.dim();
  const CircleFunction theta_zbar =
      multiply(basis.theta.sample(basis.grid_size), conj_z(basis.grid_size));
  CMatrix m(n, n);
  for (int j = 0; j < n; ++j) {
    const CircleFunction image = multiply(theta_zbar, conjugate(basis.functions[j]));
    for (int i = 0; i < n; ++i) m(i, j) = inner_product(image, basis.functions[i]);
  }
  return AntilinearMap(std::move(m));
}

AntilinearMap c_split_matrix(const BlaschkeProduct& alpha, const BlaschkeProduct& theta,
                             int grid_size) {
  if (alpha.degree() < 1 || alpha.degree() >= theta.degree()) {
    throw DomainError("splitting wants 1 <= deg alpha < deg theta");
  }
  const auto quotient = theta.divide_out(alpha);
  if (!quotient) throw DomainError("alpha does not divide theta");

  const ModelBasis big = tm_basis(theta, grid_size);
  const ModelBasis small = tm_basis(alpha, grid_size);
  const ModelBasis quot = tm_basis(*quotient, grid_size);

  const CMatrix e1 = inner_mult_embed(BlaschkeProduct(), small, big).m;
  const CMatrix e2 = inner_mult_embed(alpha, quot, big).m;
  const CMatrix ca = c_theta_matrix(small).m;
  const CMatrix cq = c_theta_matrix(quot).m;
  return AntilinearMap(e1 * ca * e1.transpose() + e2 * cq * e2.transpose());
}

LinearMap atto_matrix_sampled(const CircleFunction& symbol, const ModelBasis& domain,
                              const ModelBasis& codomain) {
  CMatrix m(codomain.dim(), domain.dim());
  for (int j = 0; j < domain.dim(); ++j) {
    const CircleFunction image = multiply(symbol, domain.functions[j]);
    for (int i = 0; i < codomain.dim(); ++i) {
      m(i, j) = inner_product(image, codomain.functions[i]);
    }
  }
  return LinearMap(std::move(m));
}

LinearMap atto_matrix(const LaurentSymbol& phi, const BlaschkeProduct& theta,
                      const BlaschkeProduct& alpha, int grid_size) {
  if (theta.degree() == 0 || alpha.degree() == 0) {
    throw DomainError("compression needs nonconstant inner functions");
  }
  require_band_fits(phi, std::max(theta.degree(), alpha.degree()), grid_size);
  const ModelBasis domain = tm_basis(theta, grid_size);
  const ModelBasis codomain = tm_basis(alpha, grid_size);
  return atto_matrix_sampled(phi.sample(grid_size), domain, codomain);
}

LinearMap hankel_matrix_sampled(const CircleFunction& symbol, const ModelBasis& domain,
                                const FourierWindow& window) {
  if (window.hi != -1) throw DomainError("hankel window must end at index -1");
  if (window.lo <= -domain.grid_size / 2) {
    throw AliasingError("hankel window exceeds the representable band");
  }
  const int width = std::max(window.width(), 0);
  CMatrix m(width, domain.dim());
  for (int j = 0; j < domain.dim(); ++j) {
    const auto bins = fourier(multiply(symbol, domain.functions[j]));
    if (tail_energy_below(bins, window.lo) > kTailEnergyTol) {
      throw TruncationError("co-analytic energy below the hankel window");
    }
    for (int r = 0; r < width; ++r) m(r, j) = coeff_at(bins, window.lo + r);
  }
  return LinearMap(std::move(m));
}

LinearMap hankel_matrix(const LaurentSymbol& phi, const ModelBasis& domain,
                        const FourierWindow& window) {
  if (!phi.is_zero() && window.lo > phi.band_min() && window.lo <= -1) {
    throw TruncationError("window misses part of the symbol band");
  }
  return hankel_matrix_sampled(phi.sample(domain.grid_size), domain, window);
}

LinearMap tilde_hankel_matrix_sampled(const CircleFunction& psi, const FourierWindow& window,
                                      const ModelBasis& codomain) {
  if (window.width() > 0 && window.lo <= -codomain.grid_size / 2) {
    throw AliasingError("window exceeds the representable band");
  }
  const int width = std::max(window.width(), 0);
  CMatrix m(codomain.dim(), width);
  for (int i = 0; i < codomain.dim(); ++i) {
    // <psi z^n, e_i> is the (-n)-th coefficient of psi * conj(e_i).
    const auto bins = fourier(multiply(psi, conjugate(codomain.functions[i])));
    for (int r = 0; r < width; ++r) m(i, r) = coeff_at(bins, -(window.lo + r));
  }
  return LinearMap(std::move(m));
}

LinearMap tilde_hankel_matrix(const BlaschkeProduct& psi, const FourierWindow& window,
                              const ModelBasis& codomain) {
  return tilde_hankel_matrix_sampled(psi.sample(codomain.grid_size), window, codomain);
}

LinearMap tilde_hankel_matrix(const LaurentSymbol& psi, const FourierWindow& window,
                              const ModelBasis& codomain) {
  return tilde_hankel_matrix_sampled(psi.sample(codomain.grid_size), window, codomain);
}

MzClassification mz_conjugation_enumerate(int alpha_deg, int theta_deg, int gamma_deg,
                                          int search_k) {
  if (alpha_deg < 1 || theta_deg < alpha_deg || gamma_deg < 0) {
    throw DomainError("enumeration wants 1 <= alpha_deg <= theta_deg and gamma_deg >= 0");
  }
  if (search_k <= 0) throw DomainError("empty search band");

  MzClassification out;
  out.alpha_deg = alpha_deg;
  out.theta_deg = theta_deg;
  out.gamma_deg = gamma_deg;
  out.search_k = search_k;

  const int dim = 2 * search_k + 1;  // Fourier indices -K..K, coordinate n+K
  for (int k = -search_k; k <= search_k; ++k) {
    // Candidate C = M_{z^k} J sends the coefficient at index m to index k-m.
    bool admissible = true;
    for (int j = 0; j < alpha_deg && admissible; ++j) {
      const int image = k - (gamma_deg + j);
      admissible = image >= 0 && image < theta_deg;
    }
    if (!admissible) continue;
    out.beta_degrees.push_back(k + 1);
    CMatrix w = CMatrix::Zero(dim, dim);
    for (int n = -search_k; n <= search_k; ++n) {
      const int m = k - n;
      if (m >= -search_k && m <= search_k) w(n + search_k, m + search_k) = 1.0;
    }
    out.witnesses.emplace_back(std::move(w));
  }
  return out;
}

std::vector<NamedConjugation> dichotomy_check(int alpha_deg, int theta_deg) {
  if (alpha_deg < 1 || alpha_deg >= theta_deg) {
    throw DomainError("dichotomy wants 1 <= alpha_deg < theta_deg");
  }
  const int n = theta_deg;
  const int d = alpha_deg;
  const int search = 2 * theta_deg + 2;

  // Restriction of a candidate to the lower block is a shift conjugation
  // mapping the alpha block into the whole space...
  const auto lower = mz_conjugation_enumerate(d, n, 0, search);
  // ...and the restriction to the upper block maps z^d * (quotient block)
  // into the whole space.
  const auto upper = mz_conjugation_enumerate(n - d, n, d, search);

  std::vector<NamedConjugation> survivors;
  for (const int b1 : lower.beta_degrees) {
    for (const int b2 : upper.beta_degrees) {
      const int k1 = b1 - 1, k2 = b2 - 1;
      const int g1 = k1 - d + 1;      // lower image block starts at z^g1
      const int g2 = k2 - n + 1;      // upper image block starts at z^g2
      // The two image blocks must decompose the space orthogonally:
      // {g1..g1+d-1} and {g2..g2+n-d-1} partition {0..n-1}.
      std::set<int> covered;
      for (int j = 0; j < d; ++j) covered.insert(g1 + j);
      for (int j = 0; j < n - d; ++j) covered.insert(g2 + j);
      if (static_cast<int>(covered.size()) != n || *covered.begin() != 0 ||
          *covered.rbegin() != n - 1) {
        continue;
      }
      CMatrix m = CMatrix::Zero(n, n);
      for (int j = 0; j < d; ++j) m(k1 - j, j) = 1.0;
      for (int j = d; j < n; ++j) m(k2 - j, j) = 1.0;
      AntilinearMap cand{std::move(m)};
      if (!check_conjugation(cand, 1e-14)) continue;

      std::string name;
      if (g1 == n - d && g2 == 0) {
        name = "C_{z^" + std::to_string(n) + "}";
      } else if (g1 == 0 && g2 == d) {
        name = "C_{z^" + std::to_string(d) + ",z^" + std::to_string(n - d) + "}";
      } else {
        name = "C[k1=" + std::to_string(k1) + ",k2=" + std::to_string(k2) + "]";
      }
      survivors.push_back({std::move(name), std::move(cand)});
    }
  }
  // Deterministic order: whole-space flip first, then by name.
  const std::string whole = "C_{z^" + std::to_string(n) + "}";
  std::sort(survivors.begin(), survivors.end(),
            [&](const NamedConjugation& a, const NamedConjugation& b) {
              const int ra = a.name == whole ? 0 : 1;
              const int rb = b.name == whole ? 0 : 1;
              return ra != rb ? ra < rb : a.name < b.name;
            });
  return survivors;
}

}  // namespace tto

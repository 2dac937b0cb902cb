#include <doctest.h>

#include <nlohmann/json.hpp>

#include "tto/antilinear.hpp"
#include "tto/rng.hpp"

using namespace tto;

namespace {

Complex vdot(const CVector& u, const CVector& v) { return (v.adjoint() * u)(0, 0); }

CMatrix flip(int n) {
  CMatrix m = CMatrix::Zero(n, n);
  for (int i = 0; i < n; ++i) m(i, n - 1 - i) = 1.0;
  return m;
}

AntilinearMap random_conjugation(int n, Rng& rng) {
  Eigen::HouseholderQR<CMatrix> qr(rng.matrix(n, n));
  const CMatrix q = qr.householderQ() * CMatrix::Identity(n, n);
  return AntilinearMap(q * q.transpose());
}

}  // namespace

// The defining pairing <Xf, g> = conj(<f, X# g>) is the oracle that pins the
// adjoint to the plain transpose in this representation.  Everything else in
// the module leans on this test.
TEST_CASE("adjoint pairing brute force") {
  Rng rng(101);
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const AntilinearMap x(rng.matrix(3, 4));
    const AntilinearMap xs = sharp(x);
    CHECK(xs.rows() == 4);
    const CVector f = rng.vector(4);
    const CVector g = rng.vector(3);
    worst = std::max(worst,
                     std::abs(vdot(x.apply(f), g) - std::conj(vdot(f, xs.apply(g)))));
  }
  CHECK(worst < 1e-12);
  // entrywise conjugation and the flip are their own adjoints
  const AntilinearMap j = AntilinearMap::conjugation_j(4);
  CHECK(operator_norm(sharp(j).m - j.m) == 0.0);
  const AntilinearMap c3(flip(3));
  CHECK(operator_norm(sharp(c3).m - c3.m) == 0.0);
}

TEST_CASE("composition kinds and involutions") {
  const AntilinearMap j = AntilinearMap::conjugation_j(3);
  const LinearMap jj = compose(j, j);
  CHECK(operator_norm(jj.m - CMatrix::Identity(3, 3)) == 0.0);
  const AntilinearMap c3(flip(3));
  CHECK(operator_norm(compose(c3, c3).m - CMatrix::Identity(3, 3)) == 0.0);

  Rng rng(7);
  const AntilinearMap x1(rng.matrix(3, 2));
  const AntilinearMap x2(rng.matrix(4, 3));
  const LinearMap prod = compose(x2, x1);
  CHECK(operator_norm(adjoint(prod).m - compose(sharp(x1), sharp(x2)).m) < 1e-13);

  // applying maps matches the matrix calculus
  const CVector v = rng.vector(2);
  const CVector via_maps = x2.apply(x1.apply(v));
  CHECK((via_maps - prod.apply(v)).norm() < 1e-13);

  CHECK_THROWS_AS(compose(x1, x2), DimensionError);
}

TEST_CASE("adjoint rules for mixed compositions") {
  Rng rng(31);
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const AntilinearMap x(rng.matrix(4, 3));
    const LinearMap a(rng.matrix(3, 5));
    const LinearMap b(rng.matrix(2, 4));
    worst = std::max(worst, operator_norm(sharp(sharp(x)).m - x.m));
    worst = std::max(worst,
                     operator_norm(sharp(compose(x, a)).m - compose(adjoint(a), sharp(x)).m));
    worst = std::max(worst,
                     operator_norm(sharp(compose(b, x)).m - compose(sharp(x), adjoint(b)).m));
  }
  CHECK(worst < 1e-12);
}

TEST_CASE("stacking and summing") {
  const LinearMap i2 = LinearMap::identity(2);
  CVector v(2);
  v << 1.0, 0.0;
  const CVector stacked = diamond(i2, i2).apply(v);
  CHECK(stacked.size() == 4);
  CHECK(std::abs(stacked(0) - 1.0) == 0.0);
  CHECK(std::abs(stacked(2) - 1.0) == 0.0);

  CVector w(4);
  w << 1.0, 0.0, 1.0, 0.0;
  const CVector summed = boxplus(i2, i2).apply(w);
  CHECK(std::abs(summed(0) - 2.0) == 0.0);
  CHECK(std::abs(summed(1)) == 0.0);

  Rng rng(17);
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const AntilinearMap x1(rng.matrix(3, 2));
    const AntilinearMap x2(rng.matrix(4, 2));
    worst = std::max(worst, operator_norm(sharp(diamond(x1, x2)).m -
                                          boxplus(sharp(x1), sharp(x2)).m));
    const AntilinearMap y1(rng.matrix(2, 3));
    const AntilinearMap y2(rng.matrix(2, 4));
    worst = std::max(worst, operator_norm(sharp(boxplus(y1, y2)).m -
                                          diamond(sharp(y1), sharp(y2)).m));
    const LinearMap a(rng.matrix(5, 7));
    worst = std::max(worst, operator_norm(sharp(compose(a, diamond(x1, x2))).m -
                                          compose(boxplus(sharp(x1), sharp(x2)), adjoint(a)).m));
    const LinearMap b(rng.matrix(7, 5));
    worst = std::max(worst, operator_norm(sharp(compose(boxplus(sharp(x1), sharp(x2)), b)).m -
                                          compose(adjoint(b), diamond(x1, x2)).m));
  }
  CHECK(worst < 1e-12);
  CHECK_THROWS_AS(diamond(AntilinearMap(CMatrix::Zero(2, 2)), AntilinearMap(CMatrix::Zero(2, 3))),
                  DimensionError);
}

TEST_CASE("conjugation predicate matches the definition") {
  Rng rng(23);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 2 + static_cast<int>(rng.integer(4));
    AntilinearMap c = random_conjugation(n, rng);
    if (trial % 2 == 1) c.m(0, n - 1) += rng.uniform(1e-4, 1e-1);  // spoiled candidate
    // definitional defect: involution plus the pairing isometry, the latter
    // both in matrix form and sampled at random vectors
    double defect = operator_norm(compose(c, c).m - CMatrix::Identity(n, n));
    defect = std::max(defect,
                      operator_norm(c.m.adjoint() * c.m - CMatrix::Identity(n, n)));
    for (int t = 0; t < 20; ++t) {
      const CVector f = rng.vector(n);
      const CVector g = rng.vector(n);
      defect = std::max(defect,
                        std::abs(vdot(c.apply(f), c.apply(g)) - vdot(g, f)));
    }
    // predicate defect: unitarity plus symmetry of the stored matrix
    double pred = operator_norm(c.m * c.m.adjoint() - CMatrix::Identity(n, n));
    pred = std::max(pred, operator_norm(c.m - c.m.transpose().eval()));
    // the two characterizations vanish together, up to a modest factor
    CHECK(defect <= 10.0 * pred + 1e-12);
    CHECK(pred <= 10.0 * defect + 1e-12);
    CHECK(check_conjugation(c, 1e-10) == (pred <= 1e-10));
  }

  CHECK(check_conjugation(AntilinearMap::conjugation_j(3)));
  CMatrix rot(2, 2);
  rot << 0.0, -1.0, 1.0, 0.0;
  // direct arithmetic: applying it twice negates the vector
  const AntilinearMap r(rot);
  CVector e0(2);
  e0 << 1.0, 0.0;
  CHECK((r.apply(r.apply(e0)) + e0).norm() == 0.0);
  CHECK_FALSE(check_conjugation(r));

  CMatrix blockflip = CMatrix::Zero(5, 5);
  for (int i = 0; i < 3; ++i) blockflip(i, 2 - i) = 1.0;
  blockflip(3, 4) = blockflip(4, 3) = 1.0;
  CHECK(check_conjugation(AntilinearMap(blockflip)));
}

TEST_CASE("antilinear selfadjointness predicate") {
  Rng rng(29);
  // compression-against-flip is symmetric
  const int n = 5;
  CMatrix toeplitz(n, n);
  std::vector<Complex> t(2 * n - 1);
  for (auto& c : t) c = rng.complex_box();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) toeplitz(i, j) = t[i - j + n - 1];
  const AntilinearMap folded = compose(LinearMap(toeplitz), AntilinearMap(flip(n)));
  CHECK(check_antiselfadjoint(folded));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) CHECK(std::abs(folded.m(i, j) - t[i + j]) < 1e-15);

  CMatrix rot(2, 2);
  rot << 0.0, -1.0, 1.0, 0.0;
  const AntilinearMap unfolded = compose(LinearMap(rot), AntilinearMap::conjugation_j(2));
  CHECK_FALSE(check_antiselfadjoint(unfolded));

  CHECK(check_antiselfadjoint(AntilinearMap(flip(4))));
  CHECK(check_antiselfadjoint(random_conjugation(4, rng)));
}

TEST_CASE("symmetry transfers to products with the conjugation") {
  Rng rng(37);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 2 + static_cast<int>(rng.integer(4));
    const AntilinearMap c = random_conjugation(n, rng);
    const LinearMap a0(rng.matrix(n, n));
    // symmetrized operator: a = (a0 + C a0* C) / 2 satisfies C a C = a*
    const LinearMap a(0.5 * (a0.m + compose(c, compose(adjoint(a0), c)).m));
    CHECK(operator_norm(compose(c, compose(a, c)).m - adjoint(a).m) < 1e-12);
    CHECK(check_antiselfadjoint(compose(a, c), 1e-12));
    CHECK(check_antiselfadjoint(compose(c, a), 1e-12));
    // and the three statements agree on a generic (non-symmetric) operator
    const LinearMap b(rng.matrix(n, n));
    const bool sym = operator_norm(compose(c, compose(b, c)).m - adjoint(b).m) < 1e-10;
    CHECK(sym == check_antiselfadjoint(compose(b, c)));
    CHECK(sym == check_antiselfadjoint(compose(c, b)));
  }
}

TEST_CASE("normalized pair and its projection") {
  // entrywise conjugation twice: q is the averaging projection
  const AntilinearMap j2 = AntilinearMap::conjugation_j(2);
  const ConjugationPair pr = c_pair(j2, j2);
  CMatrix expected(4, 4);
  expected << 0.5, 0, 0.5, 0, 0, 0.5, 0, 0.5, 0.5, 0, 0.5, 0, 0, 0.5, 0, 0.5;
  CHECK(operator_norm(pr.q.m - expected) < 1e-15);

  // flip against block flip
  const AntilinearMap whole(flip(5));
  CMatrix blockflip = CMatrix::Zero(5, 5);
  for (int i = 0; i < 3; ++i) blockflip(i, 2 - i) = 1.0;
  blockflip(3, 4) = blockflip(4, 3) = 1.0;
  const AntilinearMap split(blockflip);
  const ConjugationPair pr2 = c_pair(whole, split);
  CHECK(operator_norm(pr2.q.m * pr2.q.m - pr2.q.m) < 1e-12);
  CHECK(operator_norm(pr2.q.m - pr2.q.m.adjoint().eval()) < 1e-12);
  CHECK(numerical_rank(pr2.q.m) == 5);
  CHECK(operator_norm(compose(pr2.c_boxplus, pr2.c_diamond).m - CMatrix::Identity(5, 5)) <
        1e-12);
  CHECK(operator_norm(sharp(pr2.c_diamond).m - pr2.c_boxplus.m) < 1e-15);

  Rng rng(41);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 2 + static_cast<int>(rng.integer(4));
    const AntilinearMap c1 = random_conjugation(n, rng);
    const AntilinearMap c2 = random_conjugation(n, rng);
    const ConjugationPair pr3 = c_pair(c1, c2);
    // columns of the stack are fixed by the projection
    CHECK(operator_norm(compose(pr3.q, pr3.c_diamond).m - pr3.c_diamond.m) < 1e-12);
    const CVector f = rng.vector(n);
    CVector in_range(2 * n), in_kernel(2 * n);
    in_range.head(n) = c1.apply(f);
    in_range.tail(n) = c2.apply(f);
    in_kernel.head(n) = c1.apply(f);
    in_kernel.tail(n) = -c2.apply(f);
    CHECK((pr3.q.m * in_range - in_range).norm() < 1e-12);
    CHECK((pr3.q.m * in_kernel).norm() < 1e-12);
  }

  // the kernel parameterization hangs on the stacking order: for a
  // non-commuting pair the swapped vector is not annihilated
  CVector f(5);
  f << 1.0, 0.0, 0.0, 0.0, 0.0;
  CVector swapped(10);
  swapped.head(5) = split.apply(f);
  swapped.tail(5) = -whole.apply(f);
  CHECK((pr2.q.m * swapped).norm() > 0.1);

  CHECK_THROWS_AS(c_pair(AntilinearMap(CMatrix::Zero(3, 3)), j2), DimensionError);
  CMatrix rot(2, 2);
  rot << 0.0, -1.0, 1.0, 0.0;
  CHECK_THROWS_AS(c_pair(AntilinearMap(rot), j2), ValidationError);
}

TEST_CASE("block diagonal folding") {
  CHECK(operator_norm(block_diag(LinearMap::identity(2), LinearMap::identity(2)).m -
                      CMatrix::Identity(4, 4)) == 0.0);

  Rng rng(43);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 2 + static_cast<int>(rng.integer(4));
    const AntilinearMap c1 = random_conjugation(n, rng);
    const AntilinearMap c2 = random_conjugation(n, rng);
    const LinearMap a = compose(c1, c2);  // symmetric for both conjugations
    const ConjugationPair pr = c_pair(c1, c2);
    const LinearMap folded = compose(pr.c_boxplus, compose(block_diag(a, a), pr.c_diamond));
    CHECK(operator_norm(folded.m - adjoint(a).m) < 1e-12);
  }

  // real diagonal with entrywise conjugation: the fold reproduces the matrix
  CMatrix d = CMatrix::Zero(3, 3);
  d(0, 0) = 1.0;
  d(1, 1) = -2.0;
  d(2, 2) = 0.25;
  const AntilinearMap j3 = AntilinearMap::conjugation_j(3);
  const ConjugationPair pr = c_pair(j3, j3);
  const LinearMap folded = compose(pr.c_boxplus, compose(block_diag(LinearMap(d), LinearMap(d)), pr.c_diamond));
  CHECK(operator_norm(folded.m - d) < 1e-14);
}

TEST_CASE("matrix serialization") {
  Rng rng(47);
  const LinearMap a(rng.matrix(2, 3));
  const auto j = to_json(a);
  CHECK(j.at("kind") == "linear");
  CHECK(j.at("rows") == 2);
  std::string kind;
  const CMatrix back = matrix_from_json(j, &kind);
  CHECK(kind == "linear");
  CHECK(operator_norm(back - a.m) == 0.0);

  const AntilinearMap x(rng.matrix(3, 3));
  const auto jx = to_json(x);
  CHECK(jx.at("kind") == "antilinear");
  CHECK(operator_norm(matrix_from_json(jx) - x.m) == 0.0);
}

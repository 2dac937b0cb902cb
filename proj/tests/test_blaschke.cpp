#include <doctest.h>

#include <nlohmann/json.hpp>

#include "tto/blaschke.hpp"

using namespace tto;

TEST_CASE("point evaluation") {
  const BlaschkeProduct b({Complex(0.5, 0.0)});
  CHECK(std::abs(b.evaluate({0.5, 0.0})) < 1e-15);
  CHECK(std::abs(b.evaluate({0.0, 0.0}) - Complex(-0.5, 0.0)) < 1e-15);

  const BlaschkeProduct cube({Complex(0.0), Complex(0.0), Complex(0.0)});
  CHECK(std::abs(cube.evaluate({0.0, 1.0}) - Complex(0.0, -1.0)) < 1e-15);
  CHECK(cube.is_monomial());

  CHECK_THROWS_AS(blaschke_eval(b, {2.0, 0.0}), DomainError);
  CHECK_THROWS_AS(BlaschkeProduct({Complex(1.0, 0.0)}), DomainError);
  CHECK_THROWS_AS(BlaschkeProduct({}, Complex(2.0, 0.0)), DomainError);
}

TEST_CASE("unimodular on the circle") {
  Rng rng(21);
  for (int trial = 0; trial < 5; ++trial) {
    std::vector<Complex> zeros;
    for (int i = 0; i < 4; ++i) zeros.push_back(rng.in_disk(0.9));
    const BlaschkeProduct b(zeros, rng.unimodular());
    const auto samples = b.sample(64);
    for (const auto& s : samples.samples) CHECK(std::abs(std::abs(s) - 1.0) < 1e-12);
  }
}

TEST_CASE("division") {
  const auto z3 = BlaschkeProduct::zpow(3);
  const auto z5 = BlaschkeProduct::zpow(5);
  const auto q = blaschke_divide(z3, z5);
  REQUIRE(q.has_value());
  CHECK(q->degree() == 2);
  CHECK(q->is_monomial());

  const auto self = blaschke_divide(z5, z5);
  REQUIRE(self.has_value());
  CHECK(self->degree() == 0);

  const BlaschkeProduct alpha({Complex(0.5, 0.0)});
  const BlaschkeProduct theta({Complex(0.0), Complex(0.5, 0.0), Complex(-0.25, 0.0)});
  const auto quot = blaschke_divide(alpha, theta);
  REQUIRE(quot.has_value());
  CHECK(quot->degree() == 2);
  // multiset difference: {0, -1/4} remain
  CHECK(std::abs(quot->zeros()[0]) < 1e-14);
  CHECK(std::abs(quot->zeros()[1] - Complex(-0.25, 0.0)) < 1e-14);
  // evaluate(theta) == evaluate(alpha) * evaluate(quotient) on the circle
  for (int k = 0; k < 64; ++k) {
    const Complex t = grid_point(64, k);
    CHECK(std::abs(theta.evaluate(t) - alpha.evaluate(t) * quot->evaluate(t)) < 1e-13);
  }

  CHECK_FALSE(blaschke_divide(BlaschkeProduct({Complex(0.3, 0.0)}), z5).has_value());
  CHECK_FALSE(blaschke_divide(z5, z3).has_value());
}

TEST_CASE("canonical zero order") {
  const BlaschkeProduct a({{0.5, 0.0}, {0.0, 0.0}, {-0.25, 0.0}});
  const BlaschkeProduct b({{-0.25, 0.0}, {0.5, 0.0}, {0.0, 0.0}});
  for (int i = 0; i < 3; ++i) CHECK(a.zeros()[i] == b.zeros()[i]);
  CHECK(a.equal_up_to_constant(b));
  CHECK(a.equal_up_to_constant(BlaschkeProduct(a.zeros(), Complex(0.0, 1.0))));
  CHECK_FALSE(a.equal_up_to_constant(BlaschkeProduct::zpow(3)));
}

TEST_CASE("serialization") {
  const BlaschkeProduct b({{0.5, -0.25}, {0.0, 0.1}}, Complex(0.0, 1.0));
  const auto j = b.to_json();
  CHECK(j.contains("zeros"));
  CHECK(j.contains("constant"));
  const auto back = BlaschkeProduct::from_json(j);
  CHECK(back.equal_up_to_constant(b));
  CHECK(std::abs(back.constant() - b.constant()) < 1e-15);
}

TEST_CASE("laurent symbols") {
  LaurentSymbol s(-2, {Complex(1.0), Complex(0.0), Complex(2.0), Complex(0.0)});
  CHECK(s.band_min() == -2);
  CHECK(s.band_max() == 0);  // trailing zero trimmed
  CHECK(std::abs(s.coeff(-2) - 1.0) < 1e-15);
  CHECK(std::abs(s.coeff(0) - 2.0) < 1e-15);
  CHECK(std::abs(s.coeff(5)) == 0.0);

  const auto conj_s = s.conjugated();
  CHECK(conj_s.band_min() == 0);
  CHECK(conj_s.band_max() == 2);
  CHECK(std::abs(conj_s.coeff(2) - std::conj(s.coeff(-2))) < 1e-15);

  const auto shifted = s.shifted(3);
  CHECK(shifted.band_min() == 1);

  const auto prod = LaurentSymbol::monomial(1).times(LaurentSymbol::monomial(-1));
  CHECK(prod.band_min() == 0);
  CHECK(prod.band_max() == 0);

  const auto sum = LaurentSymbol::monomial(1).plus(LaurentSymbol::monomial(-1, {-1.0, 0.0}));
  CHECK(std::abs(sum.coeff(1) - 1.0) < 1e-15);
  CHECK(std::abs(sum.coeff(-1) + 1.0) < 1e-15);

  // sampling matches direct evaluation
  const auto f = s.sample(32);
  for (int k = 0; k < 32; ++k) {
    CHECK(std::abs(f.samples[k] - s.evaluate(grid_point(32, k))) < 1e-13);
  }

  const auto parsed = LaurentSymbol::parse(s.encode());
  for (int n = -3; n <= 3; ++n) CHECK(std::abs(parsed.coeff(n) - s.coeff(n)) < 1e-15);
  CHECK_THROWS_AS(LaurentSymbol::parse("oops"), ConfigError);
}

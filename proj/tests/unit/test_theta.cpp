#include "support.hpp"

using namespace ehs;

namespace {

// The raw double product to 600 factors at 80 digits, independent of the
// truncation rule and the tabulated powers in ThetaEvaluator.
BigComplex long_product(const BigComplex& x, const BigComplex& p) {
  BigComplex result(1);
  BigComplex pj(1);
  for (int j = 0; j < 600; ++j) {
    result *= (BigComplex(1) - x * pj) * (BigComplex(1) - pj * p / x);
    pj *= p;
  }
  return result;
}

}  // namespace

TEST_CASE("theta at p = 0 and at its zeros") {
  PrecisionContext ctx;
  CHECK(theta_E(BigComplex(Real(0.5)), BigComplex(0), ctx) == BigComplex(Real(0.5)));
  CHECK(theta_E(BigComplex(1), BigComplex(Real(0.3)), ctx).is_zero());

  test::Rng rng(21);
  const BigComplex p = rng.nome();
  CHECK(theta_E(p, p, ctx).is_zero());
}

TEST_CASE("theta against a long-product oracle at higher precision") {
  PrecisionContext ctx;
  PrecisionContext wide(80);
  test::Rng rng(22);
  std::vector<std::pair<BigComplex, BigComplex>> cases{{BigComplex(Real(0.5)), BigComplex(Real(0.1))}};
  for (int i = 0; i < 20; ++i) cases.emplace_back(rng.complex(), rng.nome());
  for (const auto& [x, p] : cases) {
    BigComplex oracle;
    {
      ScopedPrecision scope(wide);
      oracle = long_product(x, p);
    }
    const BigComplex value = theta_E(x, p, ctx);
    CHECK(test::rel(value, oracle) < test::tol(2));
  }
}

TEST_CASE("truncation length") {
  CHECK(truncation_length(Real(0.1), Real(1), 50) == 55);
  CHECK(truncation_length(Real(0.5), Real(1), 50) == 183);
  // A large |x| or 1/|x| lengthens the product symmetrically.
  CHECK(truncation_length(Real(0.5), Real(8), 50) == truncation_length(Real(0.5), Real(0.125), 50));
  CHECK(truncation_length(Real(0.5), Real(8), 50) == 186);
}

TEST_CASE("theta domain errors") {
  PrecisionContext ctx;
  CHECK_THROWS_AS(theta_E(BigComplex(0), BigComplex(Real(0.3)), ctx), DomainError);
  CHECK_THROWS_AS(theta_E(BigComplex(2), BigComplex(1), ctx), DomainError);
  CHECK_THROWS_AS(theta_E(BigComplex(2), BigComplex(Real(0), Real(1.5)), ctx), DomainError);
}

TEST_CASE("multi-argument theta") {
  PrecisionContext ctx;
  const BigComplex p(Real(0.2));
  CHECK(theta_E_multi({}, p, ctx) == BigComplex(1));
  const BigComplex u(Real(0.7), Real(0.4));
  const std::vector<BigComplex> one{u};
  CHECK(theta_E_multi(one, p, ctx) == theta_E(u, p, ctx));
  const std::vector<BigComplex> two{BigComplex(Real(0.5)), BigComplex(2)};
  CHECK(theta_E_multi(two, BigComplex(0), ctx) == BigComplex(Real(-0.5)));
}

TEST_CASE("quasi-periodicity and reflection") {
  PrecisionContext ctx;
  test::Rng rng(23);
  for (int i = 0; i < 100; ++i) {
    const BigComplex x = rng.complex();
    const BigComplex p = rng.nome();
    const BigComplex ex = theta_E(x, p, ctx);
    CHECK(test::rel(theta_E(p * x, p, ctx), -ex / x) < test::tol(5));
    CHECK(test::rel(ex, -x * theta_E(inverse(x), p, ctx)) < test::tol(5));
  }
}

TEST_CASE("elliptic numbers") {
  PrecisionContext ctx;
  test::Rng rng(24);
  const EllipticBase base{rng.nome(), rng.complex(), BigComplex(1)};
  CHECK(test::rel(elliptic_number(BigComplex(1), base, ctx), BigComplex(1)) < test::tol(3));
  CHECK(elliptic_number(BigComplex(0), base, ctx).is_zero());

  SUBCASE("oddness") {
    for (int i = 0; i < 20; ++i) {
      const BigComplex x(Real(rng.uniform(-2, 2)));
      CHECK(test::rel(elliptic_number(-x, base, ctx), -elliptic_number(x, base, ctx)) < test::tol(5));
    }
  }

  SUBCASE("trigonometric numbers at p = 0") {
    const EllipticBase trig{BigComplex(0), rng.complex(), BigComplex(1)};
    for (int i = 0; i < 20; ++i) {
      const BigComplex x(Real(rng.uniform(-2, 2)));
      auto power = [&](const BigComplex& z) { return principal_power(trig.q, z, ctx); };
      const BigComplex half(Real(0.5));
      const BigComplex expected =
          (power(x * half) - power(-x * half)) / (power(half) - power(-half));
      CHECK(test::rel(elliptic_number(x, trig, ctx), expected) < test::tol(5));
    }
  }

  SUBCASE("rational limit as q tends to 1") {
    const EllipticBase near_one{BigComplex(0), BigComplex(Real(1) + Real::pow10(-10)), BigComplex(1)};
    for (double x : {-1.7, 0.3, 2.5}) {
      CHECK(test::rel(elliptic_number(BigComplex(Real(x)), near_one, ctx), BigComplex(Real(x))) < 1e-8);
    }
  }

  SUBCASE("degenerate base") {
    const EllipticBase bad{rng.nome(), BigComplex(1), BigComplex(1)};
    CHECK_THROWS_AS(elliptic_number(BigComplex(Real(0.5)), bad, ctx), DomainError);
  }
}

TEST_CASE("addition formula for elliptic numbers") {
  PrecisionContext ctx;
  test::Rng rng(25);
  for (bool trigonometric : {false, true}) {
    for (int i = 0; i < 100; ++i) {
      const EllipticBase base{trigonometric ? BigComplex(0) : rng.nome(), rng.complex(), BigComplex(1)};
      auto num = [&](double u) { return elliptic_number(BigComplex(Real(u)), base, ctx); };
      const double x = rng.uniform(-2, 2), y = rng.uniform(-2, 2), z = rng.uniform(-2, 2), w = rng.uniform(-2, 2);
      const BigComplex lhs = num(x + z) * num(x - z) * num(y + w) * num(y - w);
      const BigComplex first = num(x + y) * num(x - y) * num(z + w) * num(z - w);
      const BigComplex second = num(x + w) * num(x - w) * num(y + z) * num(y - z);
      // Measured against the largest term: the right side may cancel.
      const Real scale = max(max(abs(lhs), abs(first)), abs(second));
      CHECK((abs(lhs - first - second) / scale).to_double() < test::tol(5));
    }
  }
}

TEST_CASE("additive elliptic Pochhammer") {
  PrecisionContext ctx;
  const EllipticBase base{BigComplex(Real(0.1)), BigComplex(Real(0.7)), BigComplex(1)};
  CHECK(elliptic_pochhammer_additive(BigComplex(Real(0.3)), 0, base, ctx) == BigComplex(1));
  CHECK(test::rel(elliptic_pochhammer_additive(BigComplex(1), 2, base, ctx),
                  elliptic_number(BigComplex(2), base, ctx)) < test::tol(3));

  // Factor by factor from the closed form q^{(1-x)/2} E(q^x) / E(q).
  BigComplex oracle(1);
  for (int k = 0; k < 3; ++k) {
    const BigComplex x = BigComplex(Real(0.3)) + BigComplex(k);
    const BigComplex qx = principal_power(base.q, x, ctx);
    const BigComplex pre = principal_power(base.q, (BigComplex(1) - x) / BigComplex(2), ctx);
    oracle *= pre * theta_E(qx, base.p, ctx) / theta_E(base.q, base.p, ctx);
  }
  CHECK(test::rel(elliptic_pochhammer_additive(BigComplex(Real(0.3)), 3, base, ctx), oracle) < test::tol(3));
  CHECK_THROWS_AS(elliptic_pochhammer_additive(BigComplex(1), -1, base, ctx), DomainError);
}

#include <algorithm>

#include "support.hpp"

using namespace ehs;

namespace {

CnParams balanced_cn(test::Rng& rng, int n, int N) {
  CnParams P;
  P.n = n;
  P.N = N;
  P.base = rng.base();
  P.a = rng.complex();
  P.b = rng.complex();
  P.c = rng.complex();
  P.d = rng.complex();
  P.e = P.a * P.a * pow(P.base.q, N + 1) / (P.b * P.c * P.d * pow(P.base.x, n - 1));
  return P;
}

LemmaParams balanced_lemma(test::Rng& rng, int n, std::optional<int> N) {
  LemmaParams P;
  P.N = N;
  P.p = rng.nome();
  P.q = rng.complex();
  P.a = rng.complex();
  P.b = rng.complex();
  P.c = rng.complex();
  P.d = rng.complex();
  for (int i = 0; i < n; ++i) P.xs.push_back(rng.complex());
  const long exponent = N ? *N + 2 - n : 3 - n;
  P.e = P.a * P.a * pow(P.q, exponent) / (P.b * P.c * P.d);
  return P;
}

OmegaParams generic_omega(test::Rng& rng, int n, int N) {
  OmegaParams P;
  P.n = n;
  P.N = N;
  P.base = rng.base();
  P.a = rng.complex();
  for (int i = 0; i < 4; ++i) P.bs.push_back(rng.complex());
  return P;
}

}  // namespace

TEST_CASE("one-variable series") {
  PrecisionContext ctx;
  test::Rng rng(41);
  const BigComplex p = rng.nome(), q = rng.complex();
  const BigComplex a = rng.complex(), b = rng.complex(), c = rng.complex(), d = rng.complex();
  const std::vector<BigComplex> four{b, c, d, rng.complex()};
  CHECK(omega_one_var(a, four, 0, q, p, ctx) == BigComplex(1));

  const int N = 3;
  const BigComplex e = a * a * pow(q, N + 1) / (b * c * d);
  const std::vector<BigComplex> bs{b, c, d, e};
  CHECK(test::rel(omega_one_var(a, bs, N, q, p, ctx), jackson_rhs(a, b, c, d, N, q, p, ctx)) < test::tol(15));
}

TEST_CASE("additive to multiplicative") {
  PrecisionContext ctx;
  test::Rng rng(42);
  const BigComplex q = rng.complex();
  const std::vector<BigComplex> us{BigComplex(0), BigComplex(1)};
  const auto ms = additive_to_multiplicative(us, q, ctx);
  CHECK(ms[0] == BigComplex(1));
  CHECK(test::rel(ms[1], q) < test::tol(2));

  // An additively balanced set lands on the multiplicative surface.
  const int N = 2;
  const BigComplex a(Real(0.4)), b(Real(-0.3)), c(Real(1.1)), d(Real(0.7));
  const BigComplex e = BigComplex(2) * a + BigComplex(N + 1) - b - c - d;
  const std::vector<BigComplex> additive{a, b, c, d, e};
  const auto m = additive_to_multiplicative(additive, q, ctx);
  const EllipticBase base{rng.nome(), q, BigComplex(1)};
  const CnParams P{m[0], m[1], m[2], m[3], m[4], 1, N, base};
  CHECK(balancing_residual(P, ctx).to_double() < test::tol(5));

  const EllipticBase additive_base{rng.nome(), q, BigComplex(1)};
  const std::vector<BigComplex> bs{additive.begin() + 1, additive.end()};
  CHECK(test::rel(omega_additive(additive[0], N, bs, additive_base, ctx),
                  jackson_rhs_additive(additive[0], additive[1], additive[2], additive[3], N, additive_base, ctx)) <
        test::tol(15));
}

TEST_CASE("C_n Jackson sum") {
  PrecisionContext ctx;
  test::Rng rng(43);

  SUBCASE("trivial terms") {
    const CnParams P = balanced_cn(rng, 3, 2);
    CHECK(cn_term(Partition::zero(3, 2), P, ctx) == BigComplex(1));
    const CnParams empty = balanced_cn(rng, 2, 0);
    CHECK(cn_lhs(empty, ctx) == BigComplex(1));
    CHECK(cn_rhs(empty, ctx) == BigComplex(1));
  }

  SUBCASE("one row is the one-variable sum") {
    const CnParams P = balanced_cn(rng, 1, 3);
    const std::vector<BigComplex> bs{P.b, P.c, P.d, P.e};
    CHECK(test::rel(cn_lhs(P, ctx), omega_one_var(P.a, bs, 3, P.base.q, P.base.p, ctx)) < test::tol(5));
    CHECK(test::rel(cn_rhs(P, ctx), jackson_rhs(P.a, P.b, P.c, P.d, 3, P.base.q, P.base.p, ctx)) < test::tol(5));
  }

  SUBCASE("both sides agree") {
    for (auto [n, N] : {std::pair{1, 1}, {2, 1}, {2, 2}, {3, 2}}) {
      const CnParams P = balanced_cn(rng, n, N);
      CHECK(test::rel(cn_lhs(P, ctx), cn_rhs(P, ctx)) < test::tol(15));
    }
  }

  SUBCASE("summation order does not matter") {
    const CnParams P = balanced_cn(rng, 3, 3);
    CHECK(test::rel(cn_lhs(P, ctx), cn_lhs(P, ctx, SumOrder::reversed)) < test::tol(5));
  }

  SUBCASE("balancing is enforced") {
    CnParams P = balanced_cn(rng, 2, 2);
    P.e *= BigComplex(Real(1.001));
    CHECK_THROWS_AS(require_balanced(P, ctx), ConstraintError);
    CHECK_THROWS_AS(cn_lhs(P, ctx), ConstraintError);
  }

  SUBCASE("a pole is reported, not returned") {
    CnParams P = balanced_cn(rng, 2, 2);
    P.b = P.a * P.base.q;
    P.e = P.a * P.a * pow(P.base.q, 3) / (P.b * P.c * P.d * P.base.x);
    CHECK_THROWS_AS(cn_lhs(P, ctx), PoleError);
  }

  SUBCASE("right side recursion in N") {
    for (int n = 1; n <= 3; ++n) {
      const CnParams P = balanced_cn(rng, n, 2);
      const BigComplex lhs = cn_rhs_closed_form(P.a, P.b, P.c, P.d, n, 3, P.base, ctx);
      const BigComplex rhs = rhs_recursion_factor(P.a, P.b, P.c, P.d, n, P.base, ctx) *
                             cn_rhs_closed_form(P.a * P.base.q, P.b, P.c, P.d, n, 2, P.base, ctx);
      CHECK(test::rel(lhs, rhs) < test::tol(15));
    }
  }
}

TEST_CASE("two-valued sum over independent variables") {
  PrecisionContext ctx;
  test::Rng rng(44);

  SUBCASE("explicit expansion at n = 1") {
    const LemmaParams P = balanced_lemma(rng, 1, std::nullopt);
    const BigComplex x = P.xs[0];
    auto E = [&](const BigComplex& z) { return theta_E(z, P.p, ctx); };
    const BigComplex aqx = P.a * P.q * x;
    const BigComplex expected =
        BigComplex(1) - E(P.b * x) * E(P.c * x) * E(P.d * x) * E(P.e * x) /
                            (E(aqx / P.b) * E(aqx / P.c) * E(aqx / P.d) * E(aqx / P.e));
    CHECK(test::rel(warnaar_lemma_lhs(P, ctx), expected) < test::tol(5));
    const BigComplex aq = P.a * P.q;
    const BigComplex closed = E(aq / (P.b * P.c)) * E(aq / (P.b * P.d)) * E(aq / (P.c * P.d)) * E(aq * x * x) /
                              (E(aq / (P.b * P.c * P.d * x)) * E(aqx / P.b) * E(aqx / P.c) * E(aqx / P.d));
    CHECK(test::rel(warnaar_lemma_rhs(P, ctx), closed) < test::tol(5));
  }

  SUBCASE("both sides agree") {
    for (int n : {1, 2, 3, 5}) {
      const LemmaParams P = balanced_lemma(rng, n, std::nullopt);
      CHECK(test::rel(warnaar_lemma_lhs(P, ctx), warnaar_lemma_rhs(P, ctx)) < test::tol(15));
    }
  }
}

TEST_CASE("terminating sum over independent variables") {
  PrecisionContext ctx;
  test::Rng rng(45);

  SUBCASE("n = 1 is the one-variable Jackson sum") {
    const LemmaParams P = balanced_lemma(rng, 1, 2);
    const BigComplex x = P.xs[0];
    const std::vector<BigComplex> bs{P.b * x, P.c * x, P.d * x, P.e * x};
    CHECK(test::rel(warnaar_thm51_lhs(P, ctx), omega_one_var(P.a * x * x, bs, 2, P.q, P.p, ctx)) < test::tol(5));
  }

  SUBCASE("N = 1 reduces termwise to the two-valued sum") {
    const LemmaParams general = balanced_lemma(rng, 3, 1);
    LemmaParams two_valued = general;
    two_valued.N.reset();
    for (unsigned mask = 0; mask < 8; ++mask) {
      const std::vector<int> k{int(mask >> 2 & 1U), int(mask >> 1 & 1U), int(mask & 1U)};
      CHECK(test::rel(warnaar_thm51_term(k, general, ctx), warnaar_lemma_term(k, two_valued, ctx)) < test::tol(10));
    }
  }

  SUBCASE("both sides agree") {
    for (auto [n, N] : {std::pair{2, 2}, {3, 1}, {1, 3}}) {
      const LemmaParams P = balanced_lemma(rng, n, N);
      CHECK(test::rel(warnaar_thm51_lhs(P, ctx), warnaar_thm51_rhs(P, ctx)) < test::tol(15));
    }
  }
}

TEST_CASE("generic sum over partitions") {
  PrecisionContext ctx;
  test::Rng rng(46);

  SUBCASE("reproduces the C_n sum") {
    const CnParams P = balanced_cn(rng, 2, 2);
    CHECK(omega_Omega(to_omega(P), ctx) == cn_lhs(P, ctx));
    CHECK(omega_Omega(generic_omega(rng, 2, 0), ctx) == BigComplex(1));
  }

  SUBCASE("unbalanced sum against direct terms") {
    const OmegaParams P = generic_omega(rng, 2, 1);
    BigComplex direct(0);
    for (const auto& lambda : enumerate(2, 1)) direct += omega_term_direct(lambda, P, ctx);
    CHECK(test::rel(omega_Omega(P, ctx), direct) < test::tol(5));
  }

  SUBCASE("factorization into A, B and the b-Pochhammers") {
    const OmegaParams P = generic_omega(rng, 2, 2);
    for (const auto& lambda : enumerate(2, 2)) {
      BigComplex bs_part(1);
      for (const auto& b : P.bs) {
        bs_part *= part_poch(b, lambda, P.base, ctx) / part_poch(P.a * P.base.q / b, lambda, P.base, ctx);
      }
      const BigComplex product = A_factor(lambda, P, ctx) * B_factor(lambda, P, ctx) * bs_part;
      CHECK(test::rel(omega_term(lambda, P, ctx), product) < test::tol(5));
      CHECK(test::rel(omega_term_direct(lambda, P, ctx), product) < test::tol(5));
    }
    CHECK(A_factor(Partition::zero(2, 2), P, ctx) == BigComplex(1));
    CHECK(B_factor(Partition::zero(2, 2), P, ctx) == BigComplex(1));
  }

  SUBCASE("termwise duality and invariance of A and B") {
    for (auto [n, N] : {std::pair{2, 2}, {3, 2}, {1, 4}}) {
      const OmegaParams P = generic_omega(rng, n, N);
      const OmegaParams D = dual(P);
      CHECK(D.n == N);
      CHECK(D.N == n);
      for (const auto& lambda : enumerate(n, N)) {
        const Partition conj = conjugate(lambda);
        CHECK(test::rel(omega_term(lambda, P, ctx), omega_term(conj, D, ctx)) < test::tol(5));
        CHECK(test::rel(A_factor(lambda, P, ctx), A_factor(conj, D, ctx)) < test::tol(5));
        CHECK(test::rel(B_factor(lambda, P, ctx), B_factor(conj, D, ctx)) < test::tol(5));
      }
    }
  }

  SUBCASE("box ratios") {
    const OmegaParams P = generic_omega(rng, 2, 3);
    const OmegaParams D = dual(P);
    for (const auto& lambda : enumerate(2, 3)) {
      for (const Box& box : addable_boxes(lambda)) {
        const BigComplex direct = A_factor(add_box(lambda, box), P, ctx) / A_factor(lambda, P, ctx);
        const BigComplex closed = a_box_ratio(lambda, box, P, ctx);
        CHECK(test::rel(closed, direct) < test::tol(5));
        CHECK(test::rel(a_box_ratio_conjugate(lambda, box, P, ctx), direct) < test::tol(5));
        CHECK(test::rel(a_box_ratio(conjugate(lambda), Box{box.value, box.row}, D, ctx), closed) < test::tol(5));
      }
    }
  }
}

TEST_CASE("Bailey transformation") {
  PrecisionContext ctx;
  test::Rng rng(47);
  auto sample = [&](int N) {
    BaileyParams P;
    P.N = N;
    P.p = rng.nome();
    P.q = rng.complex();
    P.a = rng.complex();
    P.b = rng.complex();
    P.c = rng.complex();
    P.d = rng.complex();
    P.e = rng.complex();
    P.f = rng.complex();
    P.g = pow(P.a, 3) * pow(P.q, N + 2) / (P.b * P.c * P.d * P.e * P.f);
    return P;
  };

  const BaileyParams empty = sample(0);
  CHECK(bailey_lhs(empty, ctx) == BigComplex(1));
  CHECK(bailey_rhs(empty, ctx) == BigComplex(1));

  const BaileyParams P = sample(2);
  CHECK(test::rel(P.lambda_bailey(), P.q * P.a * P.a / (P.b * P.c * P.d)) < test::tol(3));
  CHECK(test::rel(bailey_lhs(P, ctx), bailey_rhs(P, ctx)) < test::tol(15));

  SUBCASE("a cancelling pair gives the Jackson sum") {
    // e = aq/d cancels d on the left and λd/a on the right.
    BaileyParams J = sample(3);
    J.e = J.a * J.q / J.d;
    J.g = J.a * J.a * pow(J.q, 4) / (J.b * J.c * J.f);
    const BigComplex closed = jackson_rhs(J.a, J.b, J.c, J.f, 3, J.q, J.p, ctx);
    CHECK(test::rel(bailey_lhs(J, ctx), closed) < test::tol(15));
    CHECK(test::rel(bailey_rhs(J, ctx), closed) < test::tol(15));
  }

  SUBCASE("balancing is enforced") {
    BaileyParams bad = sample(2);
    bad.g *= BigComplex(2);
    CHECK_THROWS_AS(bailey_lhs(bad, ctx), ConstraintError);
  }
}

#include <string>
#include <tuple>

#include "ehs/series.hpp"

namespace ehs {

namespace {

// [u]_k with every factor checked against the pole threshold.
BigComplex additive_denominator(const BigComplex& u, int k, const EllipticBase& base, const PrecisionContext& ctx,
                                const char* where) {
  BigComplex result(1);
  for (int j = 0; j < k; ++j) {
    BigComplex factor = elliptic_number(u + BigComplex(j), base, ctx);
    if (abs(factor) < ctx.pole_threshold()) throw PoleError(where, j);
    result *= factor;
  }
  return result;
}

}  // namespace

BigComplex BaileyParams::lambda_bailey() const { return q * a * a / (b * c * d); }

Real balancing_tolerance(const PrecisionContext& ctx) { return ctx.tolerance_with_offset(3); }

Real balancing_residual(const BaileyParams& params, const PrecisionContext& ctx) {
  ScopedPrecision scope(ctx);
  BigComplex target = pow(params.a, 3) * pow(params.q, params.N + 2);
  BigComplex product = params.b * params.c * params.d * params.e * params.f * params.g;
  return abs(product - target) / abs(target);
}

BigComplex omega_one_var(const BigComplex& a, std::span<const BigComplex> bs, int N, const BigComplex& q,
                         const BigComplex& p, const PrecisionContext& ctx) {
  if (N < 0) throw ConfigError("terminator N must be nonnegative");
  ScopedPrecision scope(ctx);
  ThetaEvaluator theta(p, ctx);
  using Role = QPochTable::Role;

  std::vector<QPochTable> numer;
  std::vector<QPochTable> denom;
  numer.emplace_back(a, q, N, theta, Role::numerator, "(a;q)_k");
  numer.emplace_back(pow(q, -N), q, N, theta, Role::numerator, "(q^-N;q)_k");
  denom.emplace_back(q, q, N, theta, Role::denominator, "(q;q)_k");
  denom.emplace_back(a * pow(q, N + 1), q, N, theta, Role::denominator, "(aq^{N+1};q)_k");
  const BigComplex aq = a * q;
  for (size_t s = 0; s < bs.size(); ++s) {
    numer.emplace_back(bs[s], q, N, theta, Role::numerator, "(b;q)_k");
    denom.emplace_back(aq / bs[s], q, N, theta, Role::denominator, "(aq/b_" + std::to_string(s + 1) + ";q)_k");
  }
  const BigComplex e_a = checked_theta(theta, a, "E(a)", 0);
  const ThetaTable well_poised(a, q * q, N, theta);

  // the k = 0 term is exactly 1
  BigComplex sum(1);
  BigComplex qk = q;
  for (int k = 1; k <= N; ++k) {
    BigComplex num = well_poised[k] * qk;
    BigComplex den = e_a;
    for (const auto& t : numer) num *= t[k];
    for (const auto& t : denom) den *= t[k];
    sum += num / den;
    qk *= q;
  }
  return sum;
}

std::vector<BigComplex> additive_to_multiplicative(std::span<const BigComplex> us, const BigComplex& q,
                                                   const PrecisionContext& ctx) {
  if (q.is_zero()) throw DomainError("additive parameters need q != 0");
  std::vector<BigComplex> out;
  out.reserve(us.size());
  for (const auto& u : us) out.push_back(principal_power(q, u, ctx));
  return out;
}

BigComplex omega_additive(const BigComplex& a, int N, std::span<const BigComplex> bs, const EllipticBase& base,
                          const PrecisionContext& ctx) {
  if (N < 0) throw ConfigError("terminator N must be nonnegative");
  ScopedPrecision scope(ctx);
  auto number = [&](const BigComplex& u) { return elliptic_number(u, base, ctx); };
  auto poch = [&](const BigComplex& u, int k) { return elliptic_pochhammer_additive(u, k, base, ctx); };
  auto den_poch = [&](const BigComplex& u, int k) {
    return additive_denominator(u, k, base, ctx, "additive ω denominator");
  };

  const BigComplex one(1);
  const BigComplex minus_n(-N);
  const BigComplex a_number = number(a);
  if (abs(a_number) < ctx.pole_threshold()) throw PoleError("[a]", 0);

  BigComplex sum;
  for (int k = 0; k <= N; ++k) {
    BigComplex num = number(a + BigComplex(2 * k)) * poch(a, k) * poch(minus_n, k);
    BigComplex den = a_number * den_poch(one, k) * den_poch(one + a + BigComplex(N), k);
    for (const auto& b : bs) {
      num *= poch(b, k);
      den *= den_poch(one + a - b, k);
    }
    sum += num / den;
  }
  return sum;
}

BigComplex jackson_rhs_additive(const BigComplex& a, const BigComplex& b, const BigComplex& c, const BigComplex& d,
                                int N, const EllipticBase& base, const PrecisionContext& ctx) {
  ScopedPrecision scope(ctx);
  auto poch = [&](const BigComplex& u) { return elliptic_pochhammer_additive(u, N, base, ctx); };
  auto den_poch = [&](const BigComplex& u) {
    return additive_denominator(u, N, base, ctx, "additive Jackson closed form");
  };
  const BigComplex a1 = a + BigComplex(1);
  BigComplex num = poch(a1) * poch(a1 - b - c) * poch(a1 - b - d) * poch(a1 - c - d);
  BigComplex den = den_poch(a1 - b) * den_poch(a1 - c) * den_poch(a1 - d) * den_poch(a1 - b - c - d);
  return num / den;
}

BigComplex bailey_rhs_additive(std::span<const BigComplex> params, int N, const EllipticBase& base,
                               const PrecisionContext& ctx) {
  if (params.size() != 7) throw ConfigError("additive Bailey needs (a, b, c, d, e, f, g)");
  ScopedPrecision scope(ctx);
  const auto& [a, b, c, d, e, f, g] =
      std::tie(params[0], params[1], params[2], params[3], params[4], params[5], params[6]);
  auto poch = [&](const BigComplex& u) { return elliptic_pochhammer_additive(u, N, base, ctx); };
  auto den_poch = [&](const BigComplex& u) {
    return additive_denominator(u, N, base, ctx, "additive Bailey prefactor");
  };
  const BigComplex one(1);
  const BigComplex lambda = BigComplex(2) * a + one - b - c - d;
  BigComplex num = poch(a + one) * poch(a + one - e - f) * poch(lambda + one - e) * poch(lambda + one - f);
  BigComplex den = den_poch(a + one - e) * den_poch(a + one - f) * den_poch(lambda + one - e - f) * den_poch(lambda + one);
  const std::vector<BigComplex> shifted{lambda + b - a, lambda + c - a, lambda + d - a, e, f, g};
  return num / den * omega_additive(lambda, N, shifted, base, ctx);
}

BigComplex jackson_rhs(const BigComplex& a, const BigComplex& b, const BigComplex& c, const BigComplex& d, int N,
                       const BigComplex& q, const BigComplex& p, const PrecisionContext& ctx) {
  if (N < 0) throw ConfigError("terminator N must be nonnegative");
  ScopedPrecision scope(ctx);
  ThetaEvaluator theta(p, ctx);
  const BigComplex aq = a * q;
  BigComplex num = qpoch(aq, q, N, theta) * qpoch(aq / (b * c), q, N, theta) * qpoch(aq / (b * d), q, N, theta) *
                   qpoch(aq / (c * d), q, N, theta);
  BigComplex den = qpoch_denominator(aq / b, q, N, theta, "(aq/b;q)_N") *
                   qpoch_denominator(aq / c, q, N, theta, "(aq/c;q)_N") *
                   qpoch_denominator(aq / d, q, N, theta, "(aq/d;q)_N") *
                   qpoch_denominator(aq / (b * c * d), q, N, theta, "(aq/bcd;q)_N");
  return num / den;
}

namespace {

void require_balanced(const BaileyParams& params, const PrecisionContext& ctx) {
  if (!(balancing_residual(params, ctx) < balancing_tolerance(ctx))) {
    throw ConstraintError("Bailey parameters violate bcdefg = a^3 q^{N+2}");
  }
}

}  // namespace

BigComplex bailey_lhs(const BaileyParams& params, const PrecisionContext& ctx) {
  require_balanced(params, ctx);
  const std::vector<BigComplex> bs{params.b, params.c, params.d, params.e, params.f, params.g};
  return omega_one_var(params.a, bs, params.N, params.q, params.p, ctx);
}

BigComplex bailey_rhs(const BaileyParams& params, const PrecisionContext& ctx) {
  require_balanced(params, ctx);
  ScopedPrecision scope(ctx);
  const int N = params.N;
  const BigComplex& q = params.q;
  const BigComplex& a = params.a;
  const BigComplex& e = params.e;
  const BigComplex& f = params.f;
  const BigComplex lambda = params.lambda_bailey();
  ThetaEvaluator theta(params.p, ctx);

  const BigComplex aq = a * q;
  const BigComplex lq = lambda * q;
  BigComplex num = qpoch(aq, q, N, theta) * qpoch(aq / (e * f), q, N, theta) * qpoch(lq / e, q, N, theta) *
                   qpoch(lq / f, q, N, theta);
  BigComplex den = qpoch_denominator(aq / e, q, N, theta, "(aq/e;q)_N") *
                   qpoch_denominator(aq / f, q, N, theta, "(aq/f;q)_N") *
                   qpoch_denominator(lq / (e * f), q, N, theta, "(λq/ef;q)_N") *
                   qpoch_denominator(lq, q, N, theta, "(λq;q)_N");
  const BigComplex ratio = lambda / a;
  const std::vector<BigComplex> bs{ratio * params.b, ratio * params.c, ratio * params.d, e, f, params.g};
  return num / den * omega_one_var(lambda, bs, N, q, params.p, ctx);
}

}  // namespace ehs

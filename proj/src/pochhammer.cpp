#include "ehs/pochhammer.hpp"

namespace ehs {

BigComplex checked_theta(const ThetaEvaluator& theta, const BigComplex& x, const std::string& where, long index) {
  if (x.is_zero()) throw PoleError(where + " (zero argument)", index);
  BigComplex value = theta(x);
  ScopedPrecision scope(theta.context());
  if (abs(value) < theta.context().pole_threshold()) throw PoleError(where, index);
  return value;
}

BigComplex qpoch(const BigComplex& a, const BigComplex& q, long k, const ThetaEvaluator& theta) {
  ScopedPrecision scope(theta.context());
  BigComplex result(1);
  if (k >= 0) {
    BigComplex arg = a;
    for (long j = 0; j < k; ++j) {
      result *= theta(arg);
      arg *= q;
    }
    return result;
  }
  BigComplex arg = a * pow(q, k);
  for (long j = 0; j < -k; ++j) {
    result *= checked_theta(theta, arg, "(a;q)_k with k < 0", j);
    arg *= q;
  }
  return inverse(result);
}

BigComplex qpoch_denominator(const BigComplex& a, const BigComplex& q, long k, const ThetaEvaluator& theta,
                             const std::string& where) {
  ScopedPrecision scope(theta.context());
  BigComplex result(1);
  BigComplex arg = a;
  for (long j = 0; j < k; ++j) {
    result *= checked_theta(theta, arg, where, j);
    arg *= q;
  }
  return result;
}

BigComplex qpoch(const BigComplex& a, long k, const EllipticBase& base, const PrecisionContext& ctx) {
  ThetaEvaluator theta(base.p, ctx);
  return qpoch(a, base.q, k, theta);
}

BigComplex qpoch_multi(std::span<const BigComplex> as, long k, const EllipticBase& base, const PrecisionContext& ctx) {
  ScopedPrecision scope(ctx);
  ThetaEvaluator theta(base.p, ctx);
  BigComplex result(1);
  for (const auto& a : as) result *= qpoch(a, base.q, k, theta);
  return result;
}

BigComplex part_poch(const BigComplex& a, const Partition& lambda, const BigComplex& q, const BigComplex& x,
                     const ThetaEvaluator& theta) {
  ScopedPrecision scope(theta.context());
  BigComplex result(1);
  BigComplex row_arg = a;
  const BigComplex xinv = inverse(x);
  for (int j = 0; j < lambda.length(); ++j) {
    result *= qpoch(row_arg, q, lambda[j], theta);
    row_arg *= xinv;
  }
  return result;
}

BigComplex part_poch(const BigComplex& a, const Partition& lambda, const EllipticBase& base,
                     const PrecisionContext& ctx) {
  ThetaEvaluator theta(base.p, ctx);
  return part_poch(a, lambda, base.q, base.x, theta);
}

BigComplex part_poch_multi(std::span<const BigComplex> as, const Partition& lambda, const EllipticBase& base,
                           const PrecisionContext& ctx) {
  ScopedPrecision scope(ctx);
  ThetaEvaluator theta(base.p, ctx);
  BigComplex result(1);
  for (const auto& a : as) result *= part_poch(a, lambda, base.q, base.x, theta);
  return result;
}

std::pair<BigComplex, BigComplex> dp_identity_sides(const BigComplex& a, int n, const EllipticBase& base,
                                                    const PrecisionContext& ctx) {
  if (n < 1) throw ConfigError("dp identity needs n >= 1");
  ScopedPrecision scope(ctx);
  ThetaEvaluator theta(base.p, ctx);
  const BigComplex& q = base.q;
  const BigComplex aq = a * q;

  BigComplex left = qpoch(aq, q, n, theta);
  BigComplex right = qpoch(aq, q * q, n, theta);
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      left *= theta(a * pow(q, i + j));
      right *= theta(a * pow(q, i + j - 1));
    }
  }
  return {left, right};
}

Real dp_identity_residual(const BigComplex& a, int n, const EllipticBase& base, const PrecisionContext& ctx) {
  auto [left, right] = dp_identity_sides(a, n, base, ctx);
  ScopedPrecision scope(ctx);
  return rel_error(left, right);
}

QPochTable::QPochTable(const BigComplex& a, const BigComplex& q, int max_k, const ThetaEvaluator& theta, Role role,
                       const std::string& label) {
  ScopedPrecision scope(theta.context());
  prefix_.reserve(static_cast<size_t>(max_k) + 1);
  prefix_.emplace_back(1);
  BigComplex arg = a;
  for (int k = 0; k < max_k; ++k) {
    BigComplex factor = role == Role::denominator ? checked_theta(theta, arg, label, k) : theta(arg);
    prefix_.push_back(prefix_.back() * factor);
    arg *= q;
  }
}

PartPochTable::PartPochTable(const BigComplex& a, const BigComplex& q, const BigComplex& x, int n, int N,
                             const ThetaEvaluator& theta, QPochTable::Role role, const std::string& label) {
  ScopedPrecision scope(theta.context());
  rows_.reserve(static_cast<size_t>(n));
  BigComplex row_arg = a;
  const BigComplex xinv = inverse(x);
  for (int j = 0; j < n; ++j) {
    rows_.emplace_back(row_arg, q, N, theta, role, label + " row " + std::to_string(j + 1));
    row_arg *= xinv;
  }
}

BigComplex PartPochTable::operator()(const Partition& lambda) const {
  BigComplex result(1);
  for (int j = 0; j < lambda.length(); ++j) result *= rows_.at(static_cast<size_t>(j))[lambda[j]];
  return result;
}

ThetaTable::ThetaTable(const BigComplex& a, const BigComplex& q, int max_m, const ThetaEvaluator& theta) {
  ScopedPrecision scope(theta.context());
  values_.reserve(static_cast<size_t>(max_m) + 1);
  BigComplex arg = a;
  for (int m = 0; m <= max_m; ++m) {
    values_.push_back(theta(arg));
    arg *= q;
  }
}

}  // namespace ehs

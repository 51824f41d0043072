#include <string>

#include "ehs/series.hpp"

namespace ehs {

namespace {

using Role = QPochTable::Role;

int lemma_exponent(const LemmaParams& params) {
  const int n = static_cast<int>(params.xs.size());
  return params.N ? *params.N + 2 - n : 3 - n;
}

void require_balanced(const LemmaParams& params, const PrecisionContext& ctx) {
  if (params.xs.empty()) throw ConfigError("Warnaar sums need at least one variable x_i");
  if (params.N && *params.N < 0) throw ConfigError("terminator N must be nonnegative");
  if (!(balancing_residual(params, ctx) < balancing_tolerance(ctx))) {
    throw ConstraintError(params.N ? "parameters violate a^2 q^{N+2-n} = bcde"
                                   : "parameters violate a^2 q^{3-n} = bcde");
  }
}

// Tabulates every factor of the multi-index sums. `top` is the largest
// value of any k_i: 1 for the two-valued sum, N for the general one.
class WarnaarSummand {
 public:
  WarnaarSummand(const LemmaParams& params, bool general, const PrecisionContext& ctx)
      : n_(static_cast<int>(params.xs.size())), top_(general ? *params.N : 1), general_(general), q_(params.q) {
    ScopedPrecision scope(ctx);
    ThetaEvaluator theta(params.p, ctx);
    const BigComplex& a = params.a;
    const BigComplex& q = params.q;
    const BigComplex aq = a * q;
    const int K = top_;

    for (int i = 0; i < n_; ++i) {
      const BigComplex& xi = params.xs[static_cast<size_t>(i)];
      const std::string row = " i=" + std::to_string(i + 1);
      std::vector<QPochTable> num;
      std::vector<QPochTable> den;
      for (const auto* s : {&params.b, &params.c, &params.d, &params.e}) {
        num.emplace_back(*s * xi, q, K, theta, Role::numerator, "(s x_i;q)");
        den.emplace_back(aq * xi / *s, q, K, theta, Role::denominator, "(aq x_i/s;q)" + row);
      }
      if (general_) {
        const BigComplex ax2 = a * xi * xi;
        num.emplace_back(ax2, q, K, theta, Role::numerator, "(a x_i^2;q)");
        num.emplace_back(pow(q, -K), q, K, theta, Role::numerator, "(q^-N;q)");
        den.emplace_back(q, q, K, theta, Role::denominator, "(q;q)" + row);
        den.emplace_back(ax2 * pow(q, K + 1), q, K, theta, Role::denominator, "(a q^{N+1} x_i^2;q)" + row);
        row_num_.emplace_back(ax2, q * q, K, theta);
        row_den_.push_back(checked_theta(theta, ax2, "E(a x_i^2)" + row, i + 1));
      }
      poch_num_.push_back(std::move(num));
      poch_den_.push_back(std::move(den));
    }
    for (int i = 0; i < n_; ++i) {
      for (int j = i + 1; j < n_; ++j) {
        const BigComplex& xi = params.xs[static_cast<size_t>(i)];
        const BigComplex& xj = params.xs[static_cast<size_t>(j)];
        const std::string where = " (i,j)=(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
        const BigComplex ratio = xi / xj;
        const BigComplex prod = a * xi * xj;
        diff_num_.emplace_back(ratio * pow(q, -K), q, 2 * K, theta);
        diff_den_.push_back(checked_theta(theta, ratio, "E(x_i/x_j)" + where, 0));
        sum_num_.emplace_back(prod, q, 2 * K, theta);
        sum_den_.push_back(checked_theta(theta, prod * pow(q, K), "E(a x_i x_j q^N)" + where, 0));
      }
    }
  }

  BigComplex term(std::span<const int> k) const {
    if (static_cast<int>(k.size()) != n_) throw ConfigError("multi-index length must equal the number of x_i");
    for (int ki : k) {
      if (ki < 0 || ki > top_) throw ConfigError("multi-index entry out of range");
    }
    BigComplex num(1);
    BigComplex den(1);
    for (int i = 0; i < n_; ++i) {
      const int ki = k[static_cast<size_t>(i)];
      const size_t row = static_cast<size_t>(i);
      for (const auto& t : poch_num_[row]) num *= t[ki];
      for (const auto& t : poch_den_[row]) den *= t[ki];
      if (general_) {
        num *= row_num_[row][ki] * pow(q_, static_cast<long>(i + 1) * ki);
        den *= row_den_[row];
      } else {
        BigComplex sign_power = pow(q_, static_cast<long>(i) * ki);
        num *= ki % 2 == 0 ? sign_power : -sign_power;
      }
    }
    size_t pair = 0;
    for (int i = 0; i < n_; ++i) {
      for (int j = i + 1; j < n_; ++j, ++pair) {
        const int ki = k[static_cast<size_t>(i)];
        const int kj = k[static_cast<size_t>(j)];
        num *= diff_num_[pair][ki - kj + top_] * sum_num_[pair][ki + kj];
        den *= diff_den_[pair] * sum_den_[pair];
      }
    }
    return num / den;
  }

  BigComplex sum() const {
    std::vector<int> k(static_cast<size_t>(n_), 0);
    BigComplex total;
    while (true) {
      total += term(k);
      int pos = n_ - 1;
      while (pos >= 0 && k[static_cast<size_t>(pos)] == top_) k[static_cast<size_t>(pos--)] = 0;
      if (pos < 0) break;
      ++k[static_cast<size_t>(pos)];
    }
    return total;
  }

 private:
  int n_;
  int top_;
  bool general_;
  BigComplex q_;
  std::vector<std::vector<QPochTable>> poch_num_;
  std::vector<std::vector<QPochTable>> poch_den_;
  std::vector<ThetaTable> row_num_;
  std::vector<BigComplex> row_den_;
  std::vector<ThetaTable> diff_num_;  // E(q^m x_i/x_j), m = -K..K
  std::vector<BigComplex> diff_den_;
  std::vector<ThetaTable> sum_num_;  // E(a x_i x_j q^m), m = 0..2K
  std::vector<BigComplex> sum_den_;
};

}  // namespace

Real balancing_residual(const LemmaParams& params, const PrecisionContext& ctx) {
  ScopedPrecision scope(ctx);
  BigComplex target = params.a * params.a * pow(params.q, lemma_exponent(params));
  BigComplex product = params.b * params.c * params.d * params.e;
  return abs(product - target) / abs(target);
}

BigComplex warnaar_lemma_term(std::span<const int> k, const LemmaParams& params, const PrecisionContext& ctx) {
  if (params.N) throw ConfigError("the two-valued sum takes no terminator N");
  return WarnaarSummand(params, false, ctx).term(k);
}

BigComplex warnaar_lemma_lhs(const LemmaParams& params, const PrecisionContext& ctx) {
  if (params.N) throw ConfigError("the two-valued sum takes no terminator N");
  require_balanced(params, ctx);
  return WarnaarSummand(params, false, ctx).sum();
}

BigComplex warnaar_lemma_rhs(const LemmaParams& params, const PrecisionContext& ctx) {
  if (params.N) throw ConfigError("the two-valued sum takes no terminator N");
  require_balanced(params, ctx);
  ScopedPrecision scope(ctx);
  const long n = static_cast<long>(params.xs.size());
  const BigComplex& a = params.a;
  const BigComplex& b = params.b;
  const BigComplex& c = params.c;
  const BigComplex& d = params.d;
  const BigComplex& q = params.q;
  const BigComplex aq = a * q;
  ThetaEvaluator theta(params.p, ctx);

  const BigComplex qinv = inverse(q);
  BigComplex value =
      qpoch(aq / (b * c), qinv, n, theta) * qpoch(aq / (b * d), qinv, n, theta) * qpoch(aq / (c * d), qinv, n, theta);
  const BigComplex shifted = a * pow(q, 2 - n) / (b * c * d);
  for (long i = 0; i < n; ++i) {
    const BigComplex& xi = params.xs[static_cast<size_t>(i)];
    const std::string row = " i=" + std::to_string(i + 1);
    value *= theta(aq * xi * xi);
    value /= checked_theta(theta, shifted / xi, "E(aq^{2-n}/bcd x_i)" + row, i + 1) *
             checked_theta(theta, aq * xi / b, "E(aq x_i/b)" + row, i + 1) *
             checked_theta(theta, aq * xi / c, "E(aq x_i/c)" + row, i + 1) *
             checked_theta(theta, aq * xi / d, "E(aq x_i/d)" + row, i + 1);
  }
  return value;
}

BigComplex warnaar_thm51_term(std::span<const int> k, const LemmaParams& params, const PrecisionContext& ctx) {
  if (!params.N) throw ConfigError("the general sum needs a terminator N");
  return WarnaarSummand(params, true, ctx).term(k);
}

BigComplex warnaar_thm51_lhs(const LemmaParams& params, const PrecisionContext& ctx) {
  if (!params.N) throw ConfigError("the general sum needs a terminator N");
  require_balanced(params, ctx);
  return WarnaarSummand(params, true, ctx).sum();
}

BigComplex warnaar_thm51_rhs(const LemmaParams& params, const PrecisionContext& ctx) {
  if (!params.N) throw ConfigError("the general sum needs a terminator N");
  require_balanced(params, ctx);
  ScopedPrecision scope(ctx);
  const int N = *params.N;
  const long n = static_cast<long>(params.xs.size());
  const BigComplex& a = params.a;
  const BigComplex& b = params.b;
  const BigComplex& c = params.c;
  const BigComplex& d = params.d;
  const BigComplex& q = params.q;
  const BigComplex aq = a * q;
  ThetaEvaluator theta(params.p, ctx);

  const BigComplex shifted = a * pow(q, 2 - n) / (b * c * d);
  BigComplex value(1);
  for (long i = 1; i <= n; ++i) {
    const BigComplex& xi = params.xs[static_cast<size_t>(i - 1)];
    const BigComplex aqi = a * pow(q, 2 - i);
    const std::string row = " i=" + std::to_string(i);
    value *= qpoch(aq * xi * xi, q, N, theta) * qpoch(aqi / (b * c), q, N, theta) * qpoch(aqi / (b * d), q, N, theta) *
             qpoch(aqi / (c * d), q, N, theta);
    value /= qpoch_denominator(shifted / xi, q, N, theta, "(aq^{2-n}/bcd x_i;q)" + row) *
             qpoch_denominator(aq * xi / b, q, N, theta, "(aq x_i/b;q)" + row) *
             qpoch_denominator(aq * xi / c, q, N, theta, "(aq x_i/c;q)" + row) *
             qpoch_denominator(aq * xi / d, q, N, theta, "(aq x_i/d;q)" + row);
  }
  return value;
}

}  // namespace ehs

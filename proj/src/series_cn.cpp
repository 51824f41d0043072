#include <algorithm>
#include <string>

#include "ehs/series.hpp"

namespace ehs {

namespace {

using Role = QPochTable::Role;

// a q^{qe} x^{xe}
BigComplex monomial(const BigComplex& a, const BigComplex& q, long qe, const BigComplex& x, long xe) {
  return a * pow(q, qe) * pow(x, xe);
}

std::string pair_label(const char* what, int i, int j) {
  return std::string(what) + " (i,j)=(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

void require_shape(const Partition& lambda, int n, int N) {
  if (lambda.length() != n || lambda.cap() != N) {
    throw ConfigError("partition " + lambda.render() + " is not in Λ_{" + std::to_string(n) + "," +
                      std::to_string(N) + "}");
  }
}

}  // namespace

// ---------------------------------------------------------------- balancing

Real balancing_residual(const CnParams& params, const PrecisionContext& ctx) {
  ScopedPrecision scope(ctx);
  const auto& base = params.base;
  BigComplex target = params.a * params.a * pow(base.q, params.N + 1);
  BigComplex product = params.b * params.c * params.d * params.e * pow(base.x, params.n - 1);
  return abs(product - target) / abs(target);
}

void require_balanced(const CnParams& params, const PrecisionContext& ctx) {
  if (params.n < 1 || params.N < 0) throw ConfigError("C_n sum needs n >= 1 and N >= 0");
  if (!(balancing_residual(params, ctx) < balancing_tolerance(ctx))) {
    throw ConstraintError("parameters violate bcde x^{n-1} = a^2 q^{N+1}");
  }
}

OmegaParams to_omega(const CnParams& params) {
  return {params.a, {params.b, params.c, params.d, params.e}, params.n, params.N, params.base};
}

OmegaParams dual(const OmegaParams& params) {
  const auto& base = params.base;
  OmegaParams out;
  out.a = params.a * base.q * base.x;
  out.bs = params.bs;
  out.n = params.N;
  out.N = params.n;
  out.base = {base.p, inverse(base.x), inverse(base.q)};
  return out;
}

// ---------------------------------------------------------------- tables

struct OmegaSummand::Tables {
  int n;
  int N;
  BigComplex q;
  BigComplex x;
  // row i (0-based): E(a x^{-2i} q^{2m}) and E(a x^{-2i})
  std::vector<ThetaTable> row_num;
  std::vector<BigComplex> row_den;
  // pair difference d = j - i: E(x^d q^m), E(x^d), (x^{d+1};q)_m, (q x^{d-1};q)_m
  std::vector<ThetaTable> diff_num;
  std::vector<BigComplex> diff_den;
  std::vector<QPochTable> diff_poch_num;
  std::vector<QPochTable> diff_poch_den;
  // pair sum s = i + j (1-based rows), indexed s - 3:
  // E(a x^{2-s} q^m), E(a x^{2-s}), (a x^{3-s};q)_m, (a q x^{1-s};q)_m
  std::vector<ThetaTable> sum_num;
  std::vector<BigComplex> sum_den;
  std::vector<QPochTable> sum_poch_num;
  std::vector<QPochTable> sum_poch_den;
  // (a x^{1-n};q,x)_λ / (a q^{N+1};q,x)_λ
  std::vector<PartPochTable> a_pp;  // {num, den}
  // (q^{-N};q,x)_λ / (q x^{n-1};q,x)_λ
  std::vector<PartPochTable> b_pp;  // {num, den}
  // (b_s;q,x)_λ / (aq/b_s;q,x)_λ
  std::vector<PartPochTable> bs_num;
  std::vector<PartPochTable> bs_den;
};

OmegaSummand::OmegaSummand(const OmegaParams& params, const PrecisionContext& ctx)
    : tables_(std::make_unique<Tables>()) {
  if (params.n < 0 || params.N < 0) throw ConfigError("Ω sum needs n >= 0 and N >= 0");
  ScopedPrecision scope(ctx);
  params.base.validate();
  const int n = params.n;
  const int N = params.N;
  const BigComplex& a = params.a;
  const BigComplex& q = params.base.q;
  const BigComplex& x = params.base.x;
  ThetaEvaluator theta(params.base.p, ctx);
  Tables& t = *tables_;
  t.n = n;
  t.N = N;
  t.q = q;
  t.x = x;

  const BigComplex q2 = q * q;
  for (int i = 0; i < n; ++i) {
    const BigComplex arg = a * pow(x, -2L * i);
    t.row_num.emplace_back(arg, q2, N, theta);
    t.row_den.push_back(checked_theta(theta, arg, "E(a x^{2(1-i)}) row " + std::to_string(i + 1), i + 1));
  }
  for (int d = 1; d < n; ++d) {
    const BigComplex xd = pow(x, d);
    t.diff_num.emplace_back(xd, q, N, theta);
    t.diff_den.push_back(checked_theta(theta, xd, "E(x^{j-i}) with j-i=" + std::to_string(d), d));
    t.diff_poch_num.emplace_back(xd * x, q, N, theta, Role::numerator, "(x^{j-i+1};q)");
    t.diff_poch_den.emplace_back(q * pow(x, d - 1), q, N, theta, Role::denominator,
                                 "(q x^{j-i-1};q) with j-i=" + std::to_string(d));
  }
  for (int s = 3; s <= 2 * n - 1; ++s) {
    const BigComplex arg = a * pow(x, 2 - s);
    t.sum_num.emplace_back(arg, q, 2 * N, theta);
    t.sum_den.push_back(checked_theta(theta, arg, "E(a x^{2-i-j}) with i+j=" + std::to_string(s), s));
    t.sum_poch_num.emplace_back(arg * x, q, 2 * N, theta, Role::numerator, "(a x^{3-i-j};q)");
    t.sum_poch_den.emplace_back(a * q * pow(x, 1 - s), q, 2 * N, theta, Role::denominator,
                                "(aq x^{1-i-j};q) with i+j=" + std::to_string(s));
  }
  t.a_pp.emplace_back(a * pow(x, 1 - n), q, x, n, N, theta, Role::numerator, "(a x^{1-n};q,x)");
  t.a_pp.emplace_back(a * pow(q, N + 1), q, x, n, N, theta, Role::denominator, "(a q^{N+1};q,x)");
  t.b_pp.emplace_back(pow(q, -N), q, x, n, N, theta, Role::numerator, "(q^{-N};q,x)");
  t.b_pp.emplace_back(q * pow(x, n - 1), q, x, n, N, theta, Role::denominator, "(q x^{n-1};q,x)");
  const BigComplex aq = a * q;
  for (size_t s = 0; s < params.bs.size(); ++s) {
    t.bs_num.emplace_back(params.bs[s], q, x, n, N, theta, Role::numerator, "(b;q,x)");
    t.bs_den.emplace_back(aq / params.bs[s], q, x, n, N, theta, Role::denominator,
                          "(aq/b_" + std::to_string(s + 1) + ";q,x)");
  }
}

OmegaSummand::~OmegaSummand() = default;
OmegaSummand::OmegaSummand(OmegaSummand&&) noexcept = default;
OmegaSummand& OmegaSummand::operator=(OmegaSummand&&) noexcept = default;

BigComplex OmegaSummand::term(const Partition& lambda) const {
  const Tables& t = *tables_;
  require_shape(lambda, t.n, t.N);
  if (lambda.boxes() == 0) return BigComplex(1);
  BigComplex num(1);
  BigComplex den(1);
  for (int i = 0; i < t.n; ++i) {
    const int li = lambda[i];
    num *= t.row_num[static_cast<size_t>(i)][li] * pow(t.q, li) * pow(t.x, 2L * i * li);
    den *= t.row_den[static_cast<size_t>(i)];
  }
  for (int i = 0; i < t.n; ++i) {
    for (int j = i + 1; j < t.n; ++j) {
      const size_t d = static_cast<size_t>(j - i - 1);
      const size_t s = static_cast<size_t>(i + j + 2 - 3);
      const int diff = lambda[i] - lambda[j];
      const int sum = lambda[i] + lambda[j];
      num *= t.diff_num[d][diff] * t.sum_num[s][sum] * t.sum_poch_num[s][sum] * t.diff_poch_num[d][diff];
      den *= t.diff_den[d] * t.sum_den[s] * t.sum_poch_den[s][sum] * t.diff_poch_den[d][diff];
    }
  }
  num *= t.a_pp[0](lambda);
  den *= t.a_pp[1](lambda);
  for (const auto& table : t.bs_num) num *= table(lambda);
  for (const auto& table : t.bs_den) den *= table(lambda);
  num *= t.b_pp[0](lambda);
  den *= t.b_pp[1](lambda);
  return num / den;
}

BigComplex OmegaSummand::a_part(const Partition& lambda) const {
  const Tables& t = *tables_;
  require_shape(lambda, t.n, t.N);
  if (lambda.boxes() == 0) return BigComplex(1);
  BigComplex num = t.a_pp[0](lambda);
  BigComplex den = t.a_pp[1](lambda);
  for (int i = 0; i < t.n; ++i) {
    num *= t.row_num[static_cast<size_t>(i)][lambda[i]];
    den *= t.row_den[static_cast<size_t>(i)];
    for (int j = i + 1; j < t.n; ++j) {
      const size_t s = static_cast<size_t>(i + j + 2 - 3);
      const int sum = lambda[i] + lambda[j];
      num *= t.sum_num[s][sum] * t.sum_poch_num[s][sum];
      den *= t.sum_den[s] * t.sum_poch_den[s][sum];
    }
  }
  return num / den;
}

BigComplex OmegaSummand::b_part(const Partition& lambda) const {
  const Tables& t = *tables_;
  require_shape(lambda, t.n, t.N);
  if (lambda.boxes() == 0) return BigComplex(1);
  BigComplex num = t.b_pp[0](lambda);
  BigComplex den = t.b_pp[1](lambda);
  for (int i = 0; i < t.n; ++i) {
    num *= pow(t.q, lambda[i]) * pow(t.x, 2L * i * lambda[i]);
    for (int j = i + 1; j < t.n; ++j) {
      const size_t d = static_cast<size_t>(j - i - 1);
      const int diff = lambda[i] - lambda[j];
      num *= t.diff_num[d][diff] * t.diff_poch_num[d][diff];
      den *= t.diff_den[d] * t.diff_poch_den[d][diff];
    }
  }
  return num / den;
}

BigComplex OmegaSummand::bs_part(const Partition& lambda) const {
  const Tables& t = *tables_;
  require_shape(lambda, t.n, t.N);
  if (lambda.boxes() == 0) return BigComplex(1);
  BigComplex num(1);
  BigComplex den(1);
  for (const auto& table : t.bs_num) num *= table(lambda);
  for (const auto& table : t.bs_den) den *= table(lambda);
  return num / den;
}

// ---------------------------------------------------------------- direct route

BigComplex omega_term_direct(const Partition& lambda, const OmegaParams& params, const PrecisionContext& ctx) {
  require_shape(lambda, params.n, params.N);
  ScopedPrecision scope(ctx);
  const int n = params.n;
  const int N = params.N;
  const BigComplex& a = params.a;
  const BigComplex& q = params.base.q;
  const BigComplex& x = params.base.x;
  ThetaEvaluator theta(params.base.p, ctx);

  BigComplex value(1);
  for (int i = 1; i <= n; ++i) {
    const long li = lambda[i - 1];
    value *= theta(monomial(a, q, 2 * li, x, 2L * (1 - i))) /
             checked_theta(theta, monomial(a, q, 0, x, 2L * (1 - i)), "E(a x^{2(1-i)})", i);
    value *= pow(q, li) * pow(x, 2L * (i - 1) * li);
  }
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      const long diff = lambda[i - 1] - lambda[j - 1];
      const long sum = lambda[i - 1] + lambda[j - 1];
      value *= theta(monomial(1, q, diff, x, j - i)) / checked_theta(theta, pow(x, j - i), pair_label("E(x^{j-i})", i, j), 0);
      value *= theta(monomial(a, q, sum, x, 2 - i - j)) /
               checked_theta(theta, monomial(a, q, 0, x, 2 - i - j), pair_label("E(a x^{2-i-j})", i, j), 0);
      value *= qpoch(monomial(a, q, 0, x, 3 - i - j), q, sum, theta) * qpoch(pow(x, j - i + 1), q, diff, theta);
      value /= qpoch_denominator(monomial(a, q, 1, x, 1 - i - j), q, sum, theta, pair_label("(aq x^{1-i-j};q)", i, j));
      value /= qpoch_denominator(monomial(q, q, 0, x, j - i - 1), q, diff, theta, pair_label("(q x^{j-i-1};q)", i, j));
    }
  }
  std::vector<BigComplex> numer{monomial(a, q, 0, x, 1 - n)};
  std::vector<BigComplex> denom{monomial(q, q, 0, x, n - 1)};
  for (const auto& b : params.bs) {
    numer.push_back(b);
    denom.push_back(a * q / b);
  }
  numer.push_back(pow(q, -N));
  denom.push_back(monomial(a, q, N + 1, x, 0));
  for (const auto& arg : numer) value *= part_poch(arg, lambda, q, x, theta);
  for (const auto& arg : denom) {
    BigComplex pp(1);
    for (int j = 1; j <= n; ++j) {
      pp *= qpoch_denominator(monomial(arg, q, 0, x, 1 - j), q, lambda[j - 1], theta, "partition Pochhammer row");
    }
    value /= pp;
  }
  return value;
}

BigComplex omega_term(const Partition& lambda, const OmegaParams& params, const PrecisionContext& ctx) {
  return OmegaSummand(params, ctx).term(lambda);
}

BigComplex omega_Omega(const OmegaParams& params, const PrecisionContext& ctx, SumOrder order) {
  ScopedPrecision scope(ctx);
  if (params.n == 0) return BigComplex(1);
  OmegaSummand summand(params, ctx);
  auto partitions = enumerate(params.n, params.N);
  if (order == SumOrder::reversed) std::reverse(partitions.begin(), partitions.end());
  BigComplex sum;
  for (const auto& lambda : partitions) sum += summand.term(lambda);
  return sum;
}

BigComplex A_factor(const Partition& lambda, const OmegaParams& params, const PrecisionContext& ctx) {
  return OmegaSummand(params, ctx).a_part(lambda);
}

BigComplex B_factor(const Partition& lambda, const OmegaParams& params, const PrecisionContext& ctx) {
  return OmegaSummand(params, ctx).b_part(lambda);
}

// ---------------------------------------------------------------- box ratio

BigComplex a_box_ratio(const Partition& lambda, const Box& box, const OmegaParams& params,
                       const PrecisionContext& ctx) {
  add_box(lambda, box);  // validates the box
  ScopedPrecision scope(ctx);
  const int n = params.n;
  const int N = params.N;
  const long k = box.row;
  const long l = box.value;
  const BigComplex& a = params.a;
  const BigComplex& q = params.base.q;
  const BigComplex& x = params.base.x;
  ThetaEvaluator theta(params.base.p, ctx);
  auto E = [&](long qe, long xe) { return theta(monomial(a, q, qe, x, xe)); };
  auto Eden = [&](long qe, long xe) { return checked_theta(theta, monomial(a, q, qe, x, xe), "A box ratio", k); };

  BigComplex value = E(2 * l, 2 - 2 * k) * E(2 * l - 1, 1 - 2 * k) * E(l - 1, 2 - n - k);
  value /= Eden(2 * l - 1, 2 - 2 * k) * Eden(2 * l - 2, 3 - 2 * k) * Eden(l + N, 1 - k);
  for (long i = 1; i <= n; ++i) {
    const long li = lambda[static_cast<int>(i - 1)];
    value *= E(li + l, 2 - i - k) * E(li + l - 1, 3 - i - k);
    value /= Eden(li + l - 1, 2 - i - k) * Eden(li + l, 1 - i - k);
  }
  return value;
}

BigComplex a_box_ratio_conjugate(const Partition& lambda, const Box& box, const OmegaParams& params,
                                 const PrecisionContext& ctx) {
  add_box(lambda, box);
  ScopedPrecision scope(ctx);
  const long n = params.n;
  const int N = params.N;
  const long k = box.row;
  const long l = box.value;
  const BigComplex& a = params.a;
  const BigComplex& q = params.base.q;
  const BigComplex& x = params.base.x;
  const Partition conj = conjugate(lambda);
  ThetaEvaluator theta(params.base.p, ctx);
  auto E = [&](long qe, long xe) { return theta(monomial(a, q, qe, x, xe)); };
  auto Eden = [&](long qe, long xe) { return checked_theta(theta, monomial(a, q, qe, x, xe), "A box ratio", k); };

  BigComplex value = E(2 * l, 2 - 2 * k) * E(2 * l - 1, 1 - 2 * k) * E(l + N - 1, 2 - k);
  value /= Eden(2 * l - 1, 2 - 2 * k) * Eden(2 * l - 2, 3 - 2 * k) * Eden(l, 1 - k - n);
  for (long i = 1; i <= N; ++i) {
    const long ci = conj[static_cast<int>(i - 1)];
    value *= E(l + i - 1, 1 - k - ci) * E(l + i - 2, 2 - k - ci);
    value /= Eden(l + i, 1 - k - ci) * Eden(l + i - 1, 2 - k - ci);
  }
  return value;
}

// ---------------------------------------------------------------- C_n Jackson

BigComplex cn_term(const Partition& lambda, const CnParams& params, const PrecisionContext& ctx) {
  require_balanced(params, ctx);
  return OmegaSummand(to_omega(params), ctx).term(lambda);
}

BigComplex cn_lhs(const CnParams& params, const PrecisionContext& ctx, SumOrder order) {
  require_balanced(params, ctx);
  return omega_Omega(to_omega(params), ctx, order);
}

BigComplex cn_rhs_closed_form(const BigComplex& a, const BigComplex& b, const BigComplex& c, const BigComplex& d,
                              int n, int N, const EllipticBase& base, const PrecisionContext& ctx) {
  if (n < 1 || N < 0) throw ConfigError("C_n closed form needs n >= 1 and N >= 0");
  ScopedPrecision scope(ctx);
  base.validate();
  const BigComplex& q = base.q;
  const BigComplex& x = base.x;
  ThetaEvaluator theta(base.p, ctx);
  const Partition rectangle = Partition::full(n, N);
  const BigComplex aq = a * q;

  BigComplex num(1);
  for (const auto& arg : {aq, aq / (b * c), aq / (b * d), aq / (c * d)}) num *= part_poch(arg, rectangle, q, x, theta);
  BigComplex den(1);
  for (const auto& arg : {aq / b, aq / c, aq / d, aq / (b * c * d)}) {
    PartPochTable table(arg, q, x, n, N, theta, Role::denominator, "closed-form denominator");
    den *= table(rectangle);
  }
  return num / den;
}

BigComplex cn_rhs(const CnParams& params, const PrecisionContext& ctx) {
  require_balanced(params, ctx);
  return cn_rhs_closed_form(params.a, params.b, params.c, params.d, params.n, params.N, params.base, ctx);
}

BigComplex rhs_recursion_factor(const BigComplex& a, const BigComplex& b, const BigComplex& c, const BigComplex& d,
                                int n, const EllipticBase& base, const PrecisionContext& ctx) {
  ScopedPrecision scope(ctx);
  const BigComplex aq = a * base.q;
  const BigComplex xinv = inverse(base.x);
  ThetaEvaluator theta(base.p, ctx);
  BigComplex num(1);
  for (const auto& arg : {aq, aq / (b * c), aq / (b * d), aq / (c * d)}) num *= qpoch(arg, xinv, n, theta);
  BigComplex den(1);
  for (const auto& arg : {aq / b, aq / c, aq / d, aq / (b * c * d)}) {
    den *= qpoch_denominator(arg, xinv, n, theta, "(.;x^{-1})_n recursion factor");
  }
  return num / den;
}

}  // namespace ehs

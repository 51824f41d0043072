#include "ehs/theta.hpp"

#include <cmath>

namespace ehs {

void EllipticBase::validate() const {
  if (!p.is_zero() && !(abs(p) < Real(1))) throw DomainError("elliptic nome must satisfy |p| < 1");
  if (q.is_zero()) throw DomainError("base q must be nonzero");
  if (x.is_zero()) throw DomainError("step x must be nonzero");
}

long truncation_length(const Real& abs_p, const Real& abs_x, int digits) {
  if (!(abs_p > Real(0)) || !(abs_p < Real(1))) throw DomainError("truncation_length needs 0 < |p| < 1");
  if (abs_x.is_zero()) throw DomainError("truncation_length needs x != 0");
  double ln_scale = std::fabs(log(abs_x).to_double());  // ln max(|x|, 1/|x|, 1)
  double numerator = (digits + 5) * std::log(10.0) + ln_scale;
  double ratio = numerator / -log(abs_p).to_double();
  // the ratio is exact at integers for |p| = 10^-k; absorb binary rounding
  return static_cast<long>(std::ceil(ratio - 1e-9));
}

ThetaEvaluator::ThetaEvaluator(BigComplex p, const PrecisionContext& ctx)
    : p_(std::move(p)), ctx_(ctx), trivial_(p_.is_zero()) {
  ScopedPrecision scope(ctx_);
  if (!trivial_) {
    abs_p_ = abs(p_);
    if (!(abs_p_ < Real(1))) throw DomainError("elliptic nome must satisfy |p| < 1");
  }
  powers_.emplace_back(1);
}

void ThetaEvaluator::grow(long count) const {
  while (static_cast<long>(powers_.size()) < count) {
    powers_.push_back(powers_.back() * p_);
  }
}

BigComplex ThetaEvaluator::operator()(const BigComplex& x) const {
  ScopedPrecision scope(ctx_);
  if (x.is_zero()) throw DomainError("E(x) is undefined at x = 0");
  if (trivial_) return BigComplex(1) - x;

  const long terms = truncation_length(abs_p_, abs(x), ctx_.digits());
  grow(2 * terms + 1);

  // ∏ (1 - x p^j)(1 - p^{j+1}/x) = ∏ (1 + p^{2j+1} - x p^j - p^{j+1}/x)
  const BigComplex xinv = inverse(x);
  // the zeros x = 1 and x = p of the j = 0 factor are returned exactly
  if (x == p_) return BigComplex(0);
  BigComplex acc = (BigComplex(1) - x) * (BigComplex(1) - p_ * xinv);
  Real t1;
  Real t2;
  Real fr;
  Real fi;
  auto mulc = [&](mpfr_ptr rr, mpfr_ptr ri, const BigComplex& u, const BigComplex& v) {
    mpfr_mul(t1.get(), u.re.get(), v.re.get(), MPFR_RNDN);
    mpfr_mul(t2.get(), u.im.get(), v.im.get(), MPFR_RNDN);
    mpfr_sub(rr, t1.get(), t2.get(), MPFR_RNDN);
    mpfr_mul(t1.get(), u.re.get(), v.im.get(), MPFR_RNDN);
    mpfr_mul(t2.get(), u.im.get(), v.re.get(), MPFR_RNDN);
    mpfr_add(ri, t1.get(), t2.get(), MPFR_RNDN);
  };
  BigComplex a;
  BigComplex b;
  BigComplex factor;
  for (long j = 1; j < terms; ++j) {
    const BigComplex& odd = powers_[static_cast<size_t>(2 * j + 1)];
    mulc(a.re.get(), a.im.get(), x, powers_[static_cast<size_t>(j)]);
    mulc(b.re.get(), b.im.get(), xinv, powers_[static_cast<size_t>(j + 1)]);
    mpfr_add_ui(fr.get(), odd.re.get(), 1, MPFR_RNDN);
    mpfr_sub(fr.get(), fr.get(), a.re.get(), MPFR_RNDN);
    mpfr_sub(factor.re.get(), fr.get(), b.re.get(), MPFR_RNDN);
    mpfr_sub(fi.get(), odd.im.get(), a.im.get(), MPFR_RNDN);
    mpfr_sub(factor.im.get(), fi.get(), b.im.get(), MPFR_RNDN);
    mulc(fr.get(), fi.get(), acc, factor);
    mpfr_swap(acc.re.get(), fr.get());
    mpfr_swap(acc.im.get(), fi.get());
  }
  return acc;
}

BigComplex theta_E(const BigComplex& x, const BigComplex& p, const PrecisionContext& ctx) {
  return ThetaEvaluator(p, ctx)(x);
}

BigComplex theta_E_multi(std::span<const BigComplex> args, const BigComplex& p, const PrecisionContext& ctx) {
  ScopedPrecision scope(ctx);
  ThetaEvaluator theta(p, ctx);
  BigComplex result(1);
  for (const auto& x : args) result *= theta(x);
  return result;
}

BigComplex elliptic_number(const BigComplex& x_add, const EllipticBase& base, const PrecisionContext& ctx) {
  ScopedPrecision scope(ctx);
  ThetaEvaluator theta(base.p, ctx);
  BigComplex denominator = theta(base.q);
  if (denominator.is_zero()) throw DomainError("degenerate base: E(q) = 0");
  BigComplex qx = principal_power(base.q, x_add, ctx);
  if (qx.is_zero()) return BigComplex(0);
  BigComplex prefactor = principal_power(base.q, (BigComplex(1) - x_add) / BigComplex(2), ctx);
  return prefactor * theta(qx) / denominator;
}

BigComplex elliptic_pochhammer_additive(const BigComplex& x_add, int n, const EllipticBase& base,
                                        const PrecisionContext& ctx) {
  if (n < 0) throw DomainError("elliptic Pochhammer length must be nonnegative");
  ScopedPrecision scope(ctx);
  BigComplex result(1);
  for (int k = 0; k < n; ++k) result *= elliptic_number(x_add + BigComplex(k), base, ctx);
  return result;
}

}  // namespace ehs

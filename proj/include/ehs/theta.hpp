#pragma once

#include <span>
#include <vector>

#include "ehs/numerics.hpp"

namespace ehs {

/// The base triple shared by every series: elliptic nome p, base q and the
/// principal-specialization step x.
struct EllipticBase {
  BigComplex p;
  BigComplex q;
  BigComplex x;

  /// Throws DomainError unless p = 0 or 0 < |p| < 1, and q, x are nonzero.
  void validate() const;
};

/// Smallest J with |p|^J · max(|x|, 1/|x|, 1) below 10^{-(digits+5)},
/// from the closed-form ceiling. Requires 0 < |p| < 1.
long truncation_length(const Real& abs_p, const Real& abs_x, int digits);

/// Evaluates E(x) = ∏_{j>=0} (1 - x p^j)(1 - p^{j+1}/x) for one fixed p.
///
/// Powers of p are tabulated on first use and reused across calls, which is
/// what makes the evaluator worth keeping around inside a series. Not safe
/// to share between threads while it is still growing its table.
class ThetaEvaluator {
 public:
  ThetaEvaluator(BigComplex p, const PrecisionContext& ctx);

  const BigComplex& nome() const noexcept { return p_; }
  const PrecisionContext& context() const noexcept { return ctx_; }

  BigComplex operator()(const BigComplex& x) const;

 private:
  void grow(long count) const;

  BigComplex p_;
  PrecisionContext ctx_;
  bool trivial_;  // p == 0
  Real abs_p_;
  mutable std::vector<BigComplex> powers_;  // p^0 .. p^{m}
};

/// E(x) for the nome p. p = 0 returns 1 - x exactly.
BigComplex theta_E(const BigComplex& x, const BigComplex& p, const PrecisionContext& ctx);

/// E(x_1) ··· E(x_m); the empty product is 1.
BigComplex theta_E_multi(std::span<const BigComplex> args, const BigComplex& p, const PrecisionContext& ctx);

/// Additive elliptic number [x] = q^{(1-x)/2} E(q^x) / E(q), normalized so
/// that [1] = 1. Throws DomainError if E(q) = 0.
BigComplex elliptic_number(const BigComplex& x_add, const EllipticBase& base, const PrecisionContext& ctx);

/// [x]_n = [x][x+1]···[x+n-1].
BigComplex elliptic_pochhammer_additive(const BigComplex& x_add, int n, const EllipticBase& base,
                                        const PrecisionContext& ctx);

}  // namespace ehs

#pragma once

// Elliptic hypergeometric series in multiplicative notation: the one-variable
// very-well-poised sums, the C_n Jackson sum over Λ_{nN} and its closed
// form, Warnaar's sums over independent variables x_1..x_n, the generic
// Ω sum with its duality, and the Bailey ₁₀ω₉ transformation.
//
// All evaluators throw PoleError when a denominator factor drops below the
// context's pole threshold and ConstraintError when an identity's balancing
// condition is required but violated.

#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "ehs/partitions.hpp"
#include "ehs/pochhammer.hpp"

namespace ehs {

/// a, b, c, d, e of the C_n Jackson sum with b c d e x^{n-1} = a^2 q^{N+1}.
struct CnParams {
  BigComplex a, b, c, d, e;
  int n = 1;
  int N = 0;
  EllipticBase base;
};

/// Parameters of Warnaar's sums over independent x_1..x_n. N is absent for
/// the two-valued sum (balancing a^2 q^{3-n} = bcde) and present for the
/// (N+1)^n-term sum (balancing a^2 q^{N+2-n} = bcde).
struct LemmaParams {
  BigComplex a, b, c, d, e;
  std::vector<BigComplex> xs;
  std::optional<int> N;
  BigComplex p;
  BigComplex q;
};

/// a; b_1..b_{r-3}; terminator q^{-N} of the Ω^{(n)}_{r+1,r} sum. Balancing
/// is not required.
struct OmegaParams {
  BigComplex a;
  std::vector<BigComplex> bs;
  int n = 1;
  int N = 0;
  EllipticBase base;
};

/// Multiplicative ₁₀ω₉ parameters with b c d e f g = a^3 q^{N+2}.
struct BaileyParams {
  BigComplex a, b, c, d, e, f, g;
  int N = 0;
  BigComplex p;
  BigComplex q;

  /// q a^2 / (b c d), the image of λ = 2a + 1 - b - c - d.
  BigComplex lambda_bailey() const;
};

// ---------------------------------------------------------------- balancing

/// |bcde x^{n-1} - a^2 q^{N+1}| / |a^2 q^{N+1}|
Real balancing_residual(const CnParams& params, const PrecisionContext& ctx);
/// Uses 3 - n when N is absent and N + 2 - n otherwise.
Real balancing_residual(const LemmaParams& params, const PrecisionContext& ctx);
Real balancing_residual(const BaileyParams& params, const PrecisionContext& ctx);

/// Balancing residuals must stay below 10^{-(digits-3)}.
Real balancing_tolerance(const PrecisionContext& ctx);

// ---------------------------------------------------------------- one variable

/// Σ_{k=0}^{N} E(aq^{2k})/E(a) (a, b_1.., q^{-N};q)_k / (q, aq/b_1.., aq^{N+1};q)_k q^k
BigComplex omega_one_var(const BigComplex& a, std::span<const BigComplex> bs, int N, const BigComplex& q,
                         const BigComplex& p, const PrecisionContext& ctx);

/// u ↦ q^u with the principal branch.
std::vector<BigComplex> additive_to_multiplicative(std::span<const BigComplex> us, const BigComplex& q,
                                                   const PrecisionContext& ctx);

/// The additive series ₍r+1₎ω_r(a; -N, b_1..b_{r-3}) built from elliptic numbers.
BigComplex omega_additive(const BigComplex& a, int N, std::span<const BigComplex> bs, const EllipticBase& base,
                          const PrecisionContext& ctx);

/// Additive closed form of ₈ω₇(a; -N, b, c, d, e) under balancing.
BigComplex jackson_rhs_additive(const BigComplex& a, const BigComplex& b, const BigComplex& c, const BigComplex& d,
                                int N, const EllipticBase& base, const PrecisionContext& ctx);

/// Additive right side of the Bailey transformation: prefactor times
/// ₁₀ω₉(λ; -N, λ+b-a, λ+c-a, λ+d-a, e, f, g) with λ = 2a + 1 - b - c - d.
/// `params` is (a, b, c, d, e, f, g).
BigComplex bailey_rhs_additive(std::span<const BigComplex> params, int N, const EllipticBase& base,
                               const PrecisionContext& ctx);

/// Multiplicative one-variable Jackson closed form
/// (aq, aq/bc, aq/bd, aq/cd;q)_N / (aq/b, aq/c, aq/d, aq/bcd;q)_N.
BigComplex jackson_rhs(const BigComplex& a, const BigComplex& b, const BigComplex& c, const BigComplex& d, int N,
                       const BigComplex& q, const BigComplex& p, const PrecisionContext& ctx);

BigComplex bailey_lhs(const BaileyParams& params, const PrecisionContext& ctx);
BigComplex bailey_rhs(const BaileyParams& params, const PrecisionContext& ctx);

// ---------------------------------------------------------------- C_n / Ω sums

OmegaParams to_omega(const CnParams& params);

/// (a, q, x, n, N) ↦ (aqx, x^{-1}, q^{-1}, N, n); bs and p unchanged.
OmegaParams dual(const OmegaParams& params);

/// Table-driven evaluator for summands of the Ω sum over Λ_{nN}.
///
/// Every theta value and Pochhammer prefix product the sum can touch is
/// computed once on construction (denominators pole-checked there), after
/// which the object is read-only.
class OmegaSummand {
 public:
  OmegaSummand(const OmegaParams& params, const PrecisionContext& ctx);
  ~OmegaSummand();
  OmegaSummand(OmegaSummand&&) noexcept;
  OmegaSummand& operator=(OmegaSummand&&) noexcept;

  /// The full summand, grouped as in the C_n Jackson sum.
  BigComplex term(const Partition& lambda) const;
  /// A_λ: the factors carrying a.
  BigComplex a_part(const Partition& lambda) const;
  /// B_λ: the factors independent of a and the b_s.
  BigComplex b_part(const Partition& lambda) const;
  /// ∏_s (b_s;q,x)_λ / (aq/b_s;q,x)_λ
  BigComplex bs_part(const Partition& lambda) const;

 private:
  struct Tables;
  std::unique_ptr<Tables> tables_;
};

/// Summand recomputed from qpoch/part_poch primitives without tables.
BigComplex omega_term_direct(const Partition& lambda, const OmegaParams& params, const PrecisionContext& ctx);

BigComplex omega_term(const Partition& lambda, const OmegaParams& params, const PrecisionContext& ctx);

enum class SumOrder { forward, reversed };

/// Σ_{λ∈Λ_{nN}} of the Ω summand.
BigComplex omega_Omega(const OmegaParams& params, const PrecisionContext& ctx,
                       SumOrder order = SumOrder::forward);

BigComplex A_factor(const Partition& lambda, const OmegaParams& params, const PrecisionContext& ctx);
BigComplex B_factor(const Partition& lambda, const OmegaParams& params, const PrecisionContext& ctx);

/// A_{λ+}/A_λ in closed form, for λ+ = λ with `box` added.
BigComplex a_box_ratio(const Partition& lambda, const Box& box, const OmegaParams& params,
                       const PrecisionContext& ctx);
/// The same ratio rewritten through the conjugate partition of λ.
BigComplex a_box_ratio_conjugate(const Partition& lambda, const Box& box, const OmegaParams& params,
                                 const PrecisionContext& ctx);

/// Throws ConstraintError unless the Jackson balancing holds.
void require_balanced(const CnParams& params, const PrecisionContext& ctx);

BigComplex cn_term(const Partition& lambda, const CnParams& params, const PrecisionContext& ctx);
BigComplex cn_lhs(const CnParams& params, const PrecisionContext& ctx, SumOrder order = SumOrder::forward);
BigComplex cn_rhs(const CnParams& params, const PrecisionContext& ctx);

/// (aq, aq/bc, aq/bd, aq/cd;q,x)_{N^n} / (aq/b, aq/c, aq/d, aq/bcd;q,x)_{N^n};
/// needs no e and no balancing.
BigComplex cn_rhs_closed_form(const BigComplex& a, const BigComplex& b, const BigComplex& c, const BigComplex& d,
                              int n, int N, const EllipticBase& base, const PrecisionContext& ctx);

/// (aq, aq/bc, aq/bd, aq/cd;x^{-1})_n / (aq/b, aq/c, aq/d, aq/bcd;x^{-1})_n, the
/// factor peeled off when the terminator grows from N to N+1.
BigComplex rhs_recursion_factor(const BigComplex& a, const BigComplex& b, const BigComplex& c, const BigComplex& d,
                                int n, const EllipticBase& base, const PrecisionContext& ctx);

// ---------------------------------------------------------------- Warnaar sums

/// Summand of the two-valued sum at k ∈ {0,1}^n.
BigComplex warnaar_lemma_term(std::span<const int> k, const LemmaParams& params, const PrecisionContext& ctx);
BigComplex warnaar_lemma_lhs(const LemmaParams& params, const PrecisionContext& ctx);
BigComplex warnaar_lemma_rhs(const LemmaParams& params, const PrecisionContext& ctx);

/// Summand of the (N+1)^n-term sum at k ∈ {0..N}^n.
BigComplex warnaar_thm51_term(std::span<const int> k, const LemmaParams& params, const PrecisionContext& ctx);
BigComplex warnaar_thm51_lhs(const LemmaParams& params, const PrecisionContext& ctx);
BigComplex warnaar_thm51_rhs(const LemmaParams& params, const PrecisionContext& ctx);

}  // namespace ehs

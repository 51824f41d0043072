#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ehs/partitions.hpp"
#include "ehs/theta.hpp"

namespace ehs {

/// E(x), raising PoleError when |E(x)| falls below the context's pole
/// threshold. Used for every factor that ends up in a denominator.
BigComplex checked_theta(const ThetaEvaluator& theta, const BigComplex& x, const std::string& where, long index);

/// (a;q)_k = ∏_{j<k} E(a q^j) for k >= 0 and 1/(a q^k;q)_{-k} for k < 0.
BigComplex qpoch(const BigComplex& a, const BigComplex& q, long k, const ThetaEvaluator& theta);
BigComplex qpoch(const BigComplex& a, long k, const EllipticBase& base, const PrecisionContext& ctx);

/// (a;q)_k for k >= 0 with every factor pole-checked, for Pochhammers that
/// sit in a denominator.
BigComplex qpoch_denominator(const BigComplex& a, const BigComplex& q, long k, const ThetaEvaluator& theta,
                             const std::string& where);

/// (a_1,...,a_m;q)_k
BigComplex qpoch_multi(std::span<const BigComplex> as, long k, const EllipticBase& base, const PrecisionContext& ctx);

/// (a;q,x)_λ = ∏_{j=1}^n (a x^{1-j};q)_{λ_j}
BigComplex part_poch(const BigComplex& a, const Partition& lambda, const BigComplex& q, const BigComplex& x,
                     const ThetaEvaluator& theta);
BigComplex part_poch(const BigComplex& a, const Partition& lambda, const EllipticBase& base,
                     const PrecisionContext& ctx);

/// (a_1,...,a_m;q,x)_λ
BigComplex part_poch_multi(std::span<const BigComplex> as, const Partition& lambda, const EllipticBase& base,
                           const PrecisionContext& ctx);

/// Both sides of
///   (aq;q)_n ∏_{i<j} E(a q^{i+j}) = (aq;q^2)_n ∏_{i<j} E(a q^{i+j-1}).
std::pair<BigComplex, BigComplex> dp_identity_sides(const BigComplex& a, int n, const EllipticBase& base,
                                                    const PrecisionContext& ctx);
/// Relative residual between the two sides above.
Real dp_identity_residual(const BigComplex& a, int n, const EllipticBase& base, const PrecisionContext& ctx);

/// Prefix products (a;q)_0 .. (a;q)_{max_k}, built once and read-only after.
///
/// A table in the denominator role checks every factor against the pole
/// threshold while it is built, so lookups never need to.
class QPochTable {
 public:
  enum class Role { numerator, denominator };

  QPochTable(const BigComplex& a, const BigComplex& q, int max_k, const ThetaEvaluator& theta, Role role,
             const std::string& label);

  const BigComplex& operator[](int k) const { return prefix_.at(static_cast<size_t>(k)); }
  int max_k() const noexcept { return static_cast<int>(prefix_.size()) - 1; }

 private:
  std::vector<BigComplex> prefix_;
};

/// Row tables for (a;q,x)_λ over λ in Λ_{nN}.
class PartPochTable {
 public:
  PartPochTable(const BigComplex& a, const BigComplex& q, const BigComplex& x, int n, int N,
                const ThetaEvaluator& theta, QPochTable::Role role, const std::string& label);

  BigComplex operator()(const Partition& lambda) const;

 private:
  std::vector<QPochTable> rows_;
};

/// Tabulated E(a q^m) for m = 0..max_m.
class ThetaTable {
 public:
  ThetaTable(const BigComplex& a, const BigComplex& q, int max_m, const ThetaEvaluator& theta);
  const BigComplex& operator[](int m) const { return values_.at(static_cast<size_t>(m)); }

 private:
  std::vector<BigComplex> values_;
};

}  // namespace ehs

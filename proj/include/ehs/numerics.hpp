#pragma once

// Arbitrary-precision real and complex arithmetic on top of GNU MPFR.
//
// Every arithmetic result is rounded to the thread's current working
// precision, which is set for a scope with ScopedPrecision. Copies keep
// the precision of their source so values round-trip bit-exactly.

#include <mpfr.h>

#include <compare>
#include <string>
#include <string_view>

#include "ehs/errors.hpp"

namespace ehs {

/// Number of bits used for `digits` decimal digits.
mpfr_prec_t bits_for_digits(int digits);

/// Current thread-local working precision in bits.
mpfr_prec_t working_precision();

class Real {
 public:
  Real();
  Real(double v);  // NOLINT: implicit on purpose, literals are exact doubles
  Real(int v);     // NOLINT
  Real(long v);    // NOLINT
  /// Parses a decimal string ("1.25", "-3e-40"). Throws ConfigError.
  static Real parse(std::string_view text);
  static Real pi();
  /// 10^e at the working precision.
  static Real pow10(long e);

  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  mpfr_ptr get() noexcept { return value_; }
  mpfr_srcptr get() const noexcept { return value_; }
  mpfr_prec_t precision() const noexcept { return mpfr_get_prec(value_); }

  Real& operator+=(const Real& rhs);
  Real& operator-=(const Real& rhs);
  Real& operator*=(const Real& rhs);
  Real& operator/=(const Real& rhs);

  friend Real operator+(const Real& a, const Real& b);
  friend Real operator-(const Real& a, const Real& b);
  friend Real operator*(const Real& a, const Real& b);
  friend Real operator/(const Real& a, const Real& b);
  Real operator-() const;

  friend bool operator==(const Real& a, const Real& b);
  friend std::partial_ordering operator<=>(const Real& a, const Real& b);

  bool is_zero() const { return mpfr_zero_p(value_) != 0; }
  bool is_negative() const { return mpfr_sgn(value_) < 0; }
  bool is_finite() const { return mpfr_number_p(value_) != 0; }
  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }

  /// Scientific notation with `sig` significant digits, trailing zeros
  /// trimmed ("0.5", "-1.25e-40", "0").
  std::string to_string(int sig) const;
  /// Shortest decimal string that parses back to the identical value at
  /// this value's precision.
  std::string to_exact_string() const;

  /// Bitwise equality including precision.
  bool identical(const Real& other) const;

 private:
  mpfr_t value_;
};

Real abs(const Real& v);
Real sqrt(const Real& v);
Real exp(const Real& v);
Real log(const Real& v);
Real sin(const Real& v);
Real cos(const Real& v);
Real atan2(const Real& y, const Real& x);
Real hypot(const Real& x, const Real& y);
Real max(const Real& a, const Real& b);

/// Complex number with Real parts.
struct BigComplex {
  Real re;
  Real im;

  BigComplex() = default;
  BigComplex(Real r) : re(std::move(r)), im(0) {}  // NOLINT
  BigComplex(double r) : re(r), im(0) {}           // NOLINT
  BigComplex(int r) : re(r), im(0) {}              // NOLINT
  BigComplex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
  /// r·e^{iθ}
  static BigComplex polar(const Real& r, const Real& theta);

  BigComplex& operator+=(const BigComplex& rhs);
  BigComplex& operator-=(const BigComplex& rhs);
  BigComplex& operator*=(const BigComplex& rhs);
  BigComplex& operator/=(const BigComplex& rhs);

  friend BigComplex operator+(BigComplex a, const BigComplex& b) { return a += b; }
  friend BigComplex operator-(BigComplex a, const BigComplex& b) { return a -= b; }
  friend BigComplex operator*(BigComplex a, const BigComplex& b) { return a *= b; }
  friend BigComplex operator/(BigComplex a, const BigComplex& b) { return a /= b; }
  BigComplex operator-() const { return {-re, -im}; }

  friend bool operator==(const BigComplex& a, const BigComplex& b) {
    return a.re == b.re && a.im == b.im;
  }

  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  bool identical(const BigComplex& o) const { return re.identical(o.re) && im.identical(o.im); }
};

Real abs(const BigComplex& z);
BigComplex conj(const BigComplex& z);
BigComplex inverse(const BigComplex& z);
BigComplex exp(const BigComplex& z);
/// Principal logarithm, imaginary part in (-π, π].
BigComplex log(const BigComplex& z);
/// Integer power by repeated squaring; negative m inverts. 0^m for m <= 0 throws.
BigComplex pow(const BigComplex& z, long m);

/// Working precision and tolerance policy shared by every computation.
class PrecisionContext {
 public:
  static constexpr int kMinDigits = 20;
  static constexpr int kDefaultDigits = 50;
  static constexpr int kGuardDigits = 15;

  /// digits >= 20; pass_tolerance = 10^{-(digits-15)}, pole_threshold = 1e-6.
  explicit PrecisionContext(int digits = kDefaultDigits);
  PrecisionContext(int digits, Real pass_tolerance, Real pole_threshold);

  int digits() const noexcept { return digits_; }
  const Real& pass_tolerance() const noexcept { return pass_tolerance_; }
  const Real& pole_threshold() const noexcept { return pole_threshold_; }
  mpfr_prec_t bits() const noexcept { return bits_for_digits(digits_); }

  /// 10^{-(digits - offset)}: the tolerance scale for checks that are
  /// tighter or looser than pass_tolerance.
  Real tolerance_with_offset(int offset) const;

 private:
  int digits_;
  Real pass_tolerance_;
  Real pole_threshold_;
};

/// Sets the working precision for the lifetime of the object, restoring
/// the previous value on destruction.
class ScopedPrecision {
 public:
  explicit ScopedPrecision(const PrecisionContext& ctx);
  explicit ScopedPrecision(mpfr_prec_t bits);
  ~ScopedPrecision();
  ScopedPrecision(const ScopedPrecision&) = delete;
  ScopedPrecision& operator=(const ScopedPrecision&) = delete;

 private:
  mpfr_prec_t saved_;
};

/// |u - v| / max(|u|, |v|); 0 when u == v (including both zero).
Real rel_error(const BigComplex& u, const BigComplex& v);

/// exp(z · Log w) with the principal branch. Throws DomainError for w = 0
/// with Re z <= 0; 0^z = 0 for Re z > 0.
BigComplex principal_power(const BigComplex& w, const BigComplex& z, const PrecisionContext& ctx);

/// "re + imi" / "re - |im|i" with `sig` significant digits per part.
std::string format_complex(const BigComplex& z, int sig);

}  // namespace ehs

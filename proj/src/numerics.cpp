#include "ehs/numerics.hpp"

#include <cmath>
#include <cstring>
#include <memory>

namespace ehs {

namespace {

thread_local mpfr_prec_t g_precision = bits_for_digits(PrecisionContext::kDefaultDigits);

struct MpfrString {
  char* s;
  ~MpfrString() {
    if (s != nullptr) mpfr_free_str(s);
  }
};

// Trims trailing zeros of a mantissa "d.ddd000" (no sign, no exponent).
std::string trim_mantissa(std::string m) {
  if (m.find('.') == std::string::npos) return m;
  while (!m.empty() && m.back() == '0') m.pop_back();
  if (!m.empty() && m.back() == '.') m.pop_back();
  return m;
}

// Renders mpfr value with `n` significant digits (n == 0: round-trip exact).
std::string render(mpfr_srcptr v, int n) {
  if (mpfr_nan_p(v)) return "nan";
  if (mpfr_inf_p(v)) return mpfr_sgn(v) < 0 ? "-inf" : "inf";
  if (mpfr_zero_p(v)) return "0";
  mpfr_exp_t exp10 = 0;
  MpfrString raw{mpfr_get_str(nullptr, &exp10, 10, static_cast<size_t>(n), v, MPFR_RNDN)};
  std::string digits(raw.s);
  bool neg = false;
  if (!digits.empty() && digits[0] == '-') {
    neg = true;
    digits.erase(0, 1);
  }
  // value = 0.DIGITS × 10^exp10 = D.IGITS × 10^(exp10-1)
  long e = static_cast<long>(exp10) - 1;
  std::string out;
  if (e >= -5 && e < 21) {
    if (e >= 0) {
      std::string int_part;
      std::string frac_part;
      if (static_cast<size_t>(e + 1) <= digits.size()) {
        int_part = digits.substr(0, static_cast<size_t>(e + 1));
        frac_part = digits.substr(static_cast<size_t>(e + 1));
      } else {
        int_part = digits + std::string(static_cast<size_t>(e + 1) - digits.size(), '0');
      }
      out = frac_part.empty() ? int_part : trim_mantissa(int_part + "." + frac_part);
    } else {
      out = trim_mantissa("0." + std::string(static_cast<size_t>(-e - 1), '0') + digits);
    }
  } else {
    std::string mant = digits.substr(0, 1);
    if (digits.size() > 1) mant += "." + digits.substr(1);
    out = trim_mantissa(mant) + "e" + (e < 0 ? "-" : "+") + std::to_string(std::labs(e));
  }
  return neg ? "-" + out : out;
}

}  // namespace

mpfr_prec_t bits_for_digits(int digits) {
  return static_cast<mpfr_prec_t>(std::ceil(digits * 3.321928094887362)) + 1;
}

mpfr_prec_t working_precision() { return g_precision; }

// ---------------------------------------------------------------- Real

Real::Real() {
  mpfr_init2(value_, g_precision);
  mpfr_set_zero(value_, 1);
}

Real::Real(double v) {
  mpfr_init2(value_, g_precision);
  mpfr_set_d(value_, v, MPFR_RNDN);
}

Real::Real(int v) {
  mpfr_init2(value_, g_precision);
  mpfr_set_si(value_, v, MPFR_RNDN);
}

Real::Real(long v) {
  mpfr_init2(value_, g_precision);
  mpfr_set_si(value_, v, MPFR_RNDN);
}

Real Real::parse(std::string_view text) {
  std::string s(text);
  Real r;
  char* end = nullptr;
  if (!s.empty()) mpfr_strtofr(r.value_, s.c_str(), &end, 10, MPFR_RNDN);
  if (s.empty() || end == s.c_str() || *end != '\0') {
    throw ConfigError("not a decimal number: '" + s + "'");
  }
  return r;
}

Real Real::pi() {
  Real r;
  mpfr_const_pi(r.value_, MPFR_RNDN);
  return r;
}

Real Real::pow10(long e) {
  Real r;
  mpfr_ui_pow_ui(r.value_, 10, static_cast<unsigned long>(std::labs(e)), MPFR_RNDN);
  if (e < 0) mpfr_ui_div(r.value_, 1, r.value_, MPFR_RNDN);
  return r;
}

Real::Real(const Real& other) {
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept {
  mpfr_init2(value_, MPFR_PREC_MIN);
  mpfr_swap(value_, other.value_);
}

Real& Real::operator=(const Real& other) {
  if (this != &other) {
    mpfr_set_prec(value_, mpfr_get_prec(other.value_));
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

Real::~Real() { mpfr_clear(value_); }

// In-place ops keep the target precision only if it matches; otherwise the
// result is re-rounded at the working precision.
namespace {
inline void ensure_working(mpfr_ptr v) {
  if (mpfr_get_prec(v) != g_precision) mpfr_prec_round(v, g_precision, MPFR_RNDN);
}
}  // namespace

Real& Real::operator+=(const Real& rhs) {
  ensure_working(value_);
  mpfr_add(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}
Real& Real::operator-=(const Real& rhs) {
  ensure_working(value_);
  mpfr_sub(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}
Real& Real::operator*=(const Real& rhs) {
  ensure_working(value_);
  mpfr_mul(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}
Real& Real::operator/=(const Real& rhs) {
  ensure_working(value_);
  mpfr_div(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

Real operator+(const Real& a, const Real& b) {
  Real r;
  mpfr_add(r.value_, a.value_, b.value_, MPFR_RNDN);
  return r;
}
Real operator-(const Real& a, const Real& b) {
  Real r;
  mpfr_sub(r.value_, a.value_, b.value_, MPFR_RNDN);
  return r;
}
Real operator*(const Real& a, const Real& b) {
  Real r;
  mpfr_mul(r.value_, a.value_, b.value_, MPFR_RNDN);
  return r;
}
Real operator/(const Real& a, const Real& b) {
  Real r;
  mpfr_div(r.value_, a.value_, b.value_, MPFR_RNDN);
  return r;
}
Real Real::operator-() const {
  Real r;
  mpfr_neg(r.value_, value_, MPFR_RNDN);
  return r;
}

bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.value_, b.value_) != 0; }

std::partial_ordering operator<=>(const Real& a, const Real& b) {
  if (mpfr_unordered_p(a.value_, b.value_)) return std::partial_ordering::unordered;
  int c = mpfr_cmp(a.value_, b.value_);
  if (c < 0) return std::partial_ordering::less;
  if (c > 0) return std::partial_ordering::greater;
  return std::partial_ordering::equivalent;
}

std::string Real::to_string(int sig) const { return render(value_, sig < 1 ? 1 : sig); }

std::string Real::to_exact_string() const { return render(value_, 0); }

bool Real::identical(const Real& other) const {
  if (precision() != other.precision()) return false;
  if (mpfr_nan_p(value_) || mpfr_nan_p(other.value_)) return mpfr_nan_p(value_) && mpfr_nan_p(other.value_);
  return mpfr_equal_p(value_, other.value_) != 0 && mpfr_signbit(value_) == mpfr_signbit(other.value_);
}

#define EHS_UNARY(name, fn)          \
  Real name(const Real& v) {         \
    Real r;                          \
    fn(r.get(), v.get(), MPFR_RNDN); \
    return r;                        \
  }
EHS_UNARY(abs, mpfr_abs)
EHS_UNARY(sqrt, mpfr_sqrt)
EHS_UNARY(exp, mpfr_exp)
EHS_UNARY(log, mpfr_log)
EHS_UNARY(sin, mpfr_sin)
EHS_UNARY(cos, mpfr_cos)
#undef EHS_UNARY

Real atan2(const Real& y, const Real& x) {
  Real r;
  mpfr_atan2(r.get(), y.get(), x.get(), MPFR_RNDN);
  return r;
}

Real hypot(const Real& x, const Real& y) {
  Real r;
  mpfr_hypot(r.get(), x.get(), y.get(), MPFR_RNDN);
  return r;
}

Real max(const Real& a, const Real& b) { return a < b ? b : a; }

// ---------------------------------------------------------------- BigComplex

BigComplex BigComplex::polar(const Real& r, const Real& theta) {
  return {r * cos(theta), r * sin(theta)};
}

BigComplex& BigComplex::operator+=(const BigComplex& rhs) {
  re += rhs.re;
  im += rhs.im;
  return *this;
}

BigComplex& BigComplex::operator-=(const BigComplex& rhs) {
  re -= rhs.re;
  im -= rhs.im;
  return *this;
}

BigComplex& BigComplex::operator*=(const BigComplex& rhs) {
  Real nr = re * rhs.re - im * rhs.im;
  Real ni = re * rhs.im + im * rhs.re;
  re = std::move(nr);
  im = std::move(ni);
  return *this;
}

BigComplex& BigComplex::operator/=(const BigComplex& rhs) { return *this *= inverse(rhs); }

Real abs(const BigComplex& z) { return hypot(z.re, z.im); }

BigComplex conj(const BigComplex& z) { return {z.re, -z.im}; }

BigComplex inverse(const BigComplex& z) {
  if (z.is_zero()) throw DomainError("division by complex zero");
  Real d = z.re * z.re + z.im * z.im;
  return {z.re / d, -z.im / d};
}

BigComplex exp(const BigComplex& z) { return BigComplex::polar(exp(z.re), z.im); }

BigComplex log(const BigComplex& z) {
  if (z.is_zero()) throw DomainError("log of zero");
  // -0 imaginary part is treated as +0 so the negative real axis maps to +π
  Real im = z.im.is_zero() ? Real(0) : z.im;
  return {log(abs(z)), atan2(im, z.re)};
}

BigComplex pow(const BigComplex& z, long m) {
  if (m == 0) return BigComplex(1);
  if (z.is_zero()) {
    if (m < 0) throw DomainError("zero to a negative power");
    return BigComplex(0);
  }
  BigComplex base = m < 0 ? inverse(z) : z;
  unsigned long e = static_cast<unsigned long>(m < 0 ? -m : m);
  BigComplex result(1);
  while (e != 0) {
    if ((e & 1UL) != 0) result *= base;
    e >>= 1;
    if (e != 0) base *= base;
  }
  return result;
}

// ---------------------------------------------------------------- context

PrecisionContext::PrecisionContext(int digits) : digits_(digits) {
  if (digits < kMinDigits) {
    throw ConfigError("digits must be >= " + std::to_string(kMinDigits) + ", got " + std::to_string(digits));
  }
  ScopedPrecision scope(bits_for_digits(digits));
  pass_tolerance_ = Real::pow10(-(digits - kGuardDigits));
  pole_threshold_ = Real::pow10(-6);
}

PrecisionContext::PrecisionContext(int digits, Real pass_tolerance, Real pole_threshold)
    : digits_(digits), pass_tolerance_(std::move(pass_tolerance)), pole_threshold_(std::move(pole_threshold)) {
  if (digits < kMinDigits) {
    throw ConfigError("digits must be >= " + std::to_string(kMinDigits) + ", got " + std::to_string(digits));
  }
  ScopedPrecision scope(bits_for_digits(digits));
  if (!(pass_tolerance_ > Real::pow10(-digits))) {
    throw ConfigError("pass_tolerance must exceed 10^-digits");
  }
  if (!(pole_threshold_ > Real(0))) throw ConfigError("pole_threshold must be positive");
}

Real PrecisionContext::tolerance_with_offset(int offset) const {
  ScopedPrecision scope(*this);
  return Real::pow10(-(digits_ - offset));
}

ScopedPrecision::ScopedPrecision(const PrecisionContext& ctx) : ScopedPrecision(ctx.bits()) {}

ScopedPrecision::ScopedPrecision(mpfr_prec_t bits) : saved_(g_precision) { g_precision = bits; }

ScopedPrecision::~ScopedPrecision() { g_precision = saved_; }

// ---------------------------------------------------------------- ops

Real rel_error(const BigComplex& u, const BigComplex& v) {
  if (u == v) return Real(0);
  Real scale = max(abs(u), abs(v));
  return abs(u - v) / scale;
}

BigComplex principal_power(const BigComplex& w, const BigComplex& z, const PrecisionContext& ctx) {
  ScopedPrecision scope(ctx);
  if (w.is_zero()) {
    if (!(z.re > Real(0))) throw DomainError("0^z with Re z <= 0");
    return BigComplex(0);
  }
  if (z.is_zero()) return BigComplex(1);
  return exp(z * log(w));
}

std::string format_complex(const BigComplex& z, int sig) {
  std::string re = z.re.to_string(sig);
  if (z.im.is_negative()) return re + " - " + abs(z.im).to_string(sig) + "i";
  return re + " + " + z.im.to_string(sig) + "i";
}

}  // namespace ehs

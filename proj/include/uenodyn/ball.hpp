#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <stdexcept>
#include <string>

namespace uenodyn {

// Raised when an interval computation cannot certify its result at the
// configured precision cap.
struct PrecisionExhausted : std::runtime_error {
  explicit PrecisionExhausted(const std::string& what) : std::runtime_error(what) {}
};

constexpr mpfr_prec_t kDefaultPrec = 64;
constexpr mpfr_prec_t kMaxPrec = 4096;  // escalation cap (bits)

// Midpoint-radius interval over MPFR. The midpoint carries the working
// precision; the radius is a low-precision upper bound, all radius
// arithmetic rounds up. Every factory and operation returns an interval
// guaranteed to contain the exact value.
class Real {
 public:
  Real();
  explicit Real(mpfr_prec_t prec);
  Real(const Real&);
  Real(Real&&) noexcept;
  Real& operator=(const Real&);
  Real& operator=(Real&&) noexcept;
  ~Real();

  static Real exact(long v, mpfr_prec_t prec = kDefaultPrec);
  static Real exact(const mpz_class& v, mpfr_prec_t prec = kDefaultPrec);
  static Real exact(const mpq_class& v, mpfr_prec_t prec = kDefaultPrec);
  static Real from_endpoints(const mpq_class& lo, const mpq_class& hi,
                             mpfr_prec_t prec = kDefaultPrec);
  static Real pi(mpfr_prec_t prec = kDefaultPrec);
  // cos(2*pi*t) and sin(2*pi*t) for rational t.
  static Real cos2pi(const mpq_class& t, mpfr_prec_t prec = kDefaultPrec);
  static Real sin2pi(const mpq_class& t, mpfr_prec_t prec = kDefaultPrec);

  Real operator+(const Real&) const;
  Real operator-(const Real&) const;
  Real operator*(const Real&) const;
  Real operator/(const Real&) const;  // divisor must exclude zero
  Real operator-() const;

  Real abs() const;
  Real square() const;
  Real sqrt() const;  // lower endpoint clamped at 0 if the ball grazes it
  Real log() const;   // requires a strictly positive ball

  bool contains_zero() const;
  bool is_positive() const;  // certified > 0
  bool is_negative() const;
  // certified strict comparison; false means "not certified", not ">="
  bool less_than(const Real&) const;

  // Exact rational endpoints of the ball (mpfr values are dyadic).
  mpq_class lower() const;
  mpq_class upper() const;
  double mid_double() const;
  double rad_double() const;
  mpfr_prec_t precision() const { return prec_; }

  std::string str(int digits = 17) const;

 private:
  mpfr_t mid_;
  mpfr_t rad_;
  mpfr_prec_t prec_;

  void bump_ulp();  // absorb the rounding error of the last mid_ op
  friend class Complex;
};

// Rectangular complex ball.
class Complex {
 public:
  Complex() = default;
  Complex(Real re, Real im) : re_(std::move(re)), im_(std::move(im)) {}
  static Complex exact(const mpq_class& re, const mpq_class& im,
                       mpfr_prec_t prec = kDefaultPrec);
  // exp(2*pi*i*t)
  static Complex root_of_unity(const mpq_class& t, mpfr_prec_t prec = kDefaultPrec);

  const Real& re() const { return re_; }
  const Real& im() const { return im_; }

  Complex operator+(const Complex&) const;
  Complex operator-(const Complex&) const;
  Complex operator*(const Complex&) const;
  Complex operator-() const;
  Complex conj() const;

  Real abs2() const;  // |z|^2
  Real abs() const;

  std::string str(int digits = 17) const;

 private:
  Real re_, im_;
};

}  // namespace uenodyn

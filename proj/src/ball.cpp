#include "uenodyn/ball.hpp"

#include <sstream>

namespace uenodyn {

namespace {
constexpr mpfr_prec_t kRadPrec = 32;
}

Real::Real() : Real(kDefaultPrec) {}

Real::Real(mpfr_prec_t prec) : prec_(prec) {
  mpfr_init2(mid_, prec_);
  mpfr_init2(rad_, kRadPrec);
  mpfr_set_zero(mid_, 1);
  mpfr_set_zero(rad_, 1);
}

Real::Real(const Real& o) : prec_(o.prec_) {
  mpfr_init2(mid_, prec_);
  mpfr_init2(rad_, kRadPrec);
  mpfr_set(mid_, o.mid_, MPFR_RNDN);
  mpfr_set(rad_, o.rad_, MPFR_RNDU);
}

Real::Real(Real&& o) noexcept : prec_(o.prec_) {
  mpfr_init2(mid_, prec_);
  mpfr_init2(rad_, kRadPrec);
  mpfr_swap(mid_, o.mid_);
  mpfr_swap(rad_, o.rad_);
}

Real& Real::operator=(const Real& o) {
  if (this != &o) {
    mpfr_set_prec(mid_, o.prec_);
    prec_ = o.prec_;
    mpfr_set(mid_, o.mid_, MPFR_RNDN);
    mpfr_set(rad_, o.rad_, MPFR_RNDU);
  }
  return *this;
}

Real& Real::operator=(Real&& o) noexcept {
  if (this != &o) {
    mpfr_swap(mid_, o.mid_);
    mpfr_swap(rad_, o.rad_);
    std::swap(prec_, o.prec_);
  }
  return *this;
}

Real::~Real() {
  mpfr_clear(mid_);
  mpfr_clear(rad_);
}

void Real::bump_ulp() {
  if (mpfr_zero_p(mid_)) return;
  mpfr_t e;
  mpfr_init2(e, kRadPrec);
  mpfr_abs(e, mid_, MPFR_RNDU);
  mpfr_mul_2si(e, e, 1 - static_cast<long>(prec_), MPFR_RNDU);
  mpfr_add(rad_, rad_, e, MPFR_RNDU);
  mpfr_clear(e);
}

Real Real::exact(long v, mpfr_prec_t prec) {
  Real r(prec);
  mpfr_set_si(r.mid_, v, MPFR_RNDN);
  r.bump_ulp();
  return r;
}

Real Real::exact(const mpz_class& v, mpfr_prec_t prec) {
  Real r(prec);
  mpfr_set_z(r.mid_, v.get_mpz_t(), MPFR_RNDN);
  r.bump_ulp();
  return r;
}

Real Real::exact(const mpq_class& v, mpfr_prec_t prec) {
  Real r(prec);
  mpfr_set_q(r.mid_, v.get_mpq_t(), MPFR_RNDN);
  r.bump_ulp();
  return r;
}

Real Real::from_endpoints(const mpq_class& lo, const mpq_class& hi, mpfr_prec_t prec) {
  if (lo > hi) throw std::invalid_argument("from_endpoints: lo > hi");
  Real r(prec);
  mpfr_t l, h;
  mpfr_init2(l, prec);
  mpfr_init2(h, prec);
  mpfr_set_q(l, lo.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(h, hi.get_mpq_t(), MPFR_RNDU);
  mpfr_add(r.mid_, l, h, MPFR_RNDN);
  mpfr_div_2ui(r.mid_, r.mid_, 1, MPFR_RNDN);
  // radius: max(mid-l, h-mid) rounded up, plus slack for mid rounding
  mpfr_t d1, d2;
  mpfr_init2(d1, kRadPrec);
  mpfr_init2(d2, kRadPrec);
  mpfr_sub(d1, r.mid_, l, MPFR_RNDU);
  mpfr_sub(d2, h, r.mid_, MPFR_RNDU);
  if (mpfr_cmp(d1, d2) >= 0)
    mpfr_set(r.rad_, d1, MPFR_RNDU);
  else
    mpfr_set(r.rad_, d2, MPFR_RNDU);
  r.bump_ulp();
  mpfr_clears(l, h, d1, d2, nullptr);
  return r;
}

Real Real::pi(mpfr_prec_t prec) {
  Real r(prec);
  mpfr_const_pi(r.mid_, MPFR_RNDN);
  r.bump_ulp();
  return r;
}

Real Real::operator+(const Real& o) const {
  Real r(std::max(prec_, o.prec_));
  mpfr_add(r.mid_, mid_, o.mid_, MPFR_RNDN);
  mpfr_add(r.rad_, rad_, o.rad_, MPFR_RNDU);
  r.bump_ulp();
  return r;
}

Real Real::operator-(const Real& o) const {
  Real r(std::max(prec_, o.prec_));
  mpfr_sub(r.mid_, mid_, o.mid_, MPFR_RNDN);
  mpfr_add(r.rad_, rad_, o.rad_, MPFR_RNDU);
  r.bump_ulp();
  return r;
}

Real Real::operator*(const Real& o) const {
  Real r(std::max(prec_, o.prec_));
  mpfr_mul(r.mid_, mid_, o.mid_, MPFR_RNDN);
  // |a|*rb + |b|*ra + ra*rb
  mpfr_t t, u;
  mpfr_init2(t, kRadPrec);
  mpfr_init2(u, kRadPrec);
  mpfr_abs(t, mid_, MPFR_RNDU);
  mpfr_mul(t, t, o.rad_, MPFR_RNDU);
  mpfr_abs(u, o.mid_, MPFR_RNDU);
  mpfr_mul(u, u, rad_, MPFR_RNDU);
  mpfr_add(t, t, u, MPFR_RNDU);
  mpfr_mul(u, rad_, o.rad_, MPFR_RNDU);
  mpfr_add(r.rad_, t, u, MPFR_RNDU);
  r.bump_ulp();
  mpfr_clears(t, u, nullptr);
  return r;
}

Real Real::operator/(const Real& o) const {
  if (o.contains_zero()) throw std::domain_error("ball division by interval containing 0");
  Real r(std::max(prec_, o.prec_));
  mpfr_div(r.mid_, mid_, o.mid_, MPFR_RNDN);
  // error bound: (|a|*rb + |b|*ra) / (|b| * (|b| - rb))
  mpfr_t ab, bb, num, den;
  mpfr_init2(ab, kRadPrec);
  mpfr_init2(bb, kRadPrec);
  mpfr_init2(num, kRadPrec);
  mpfr_init2(den, kRadPrec);
  mpfr_abs(ab, mid_, MPFR_RNDU);
  mpfr_abs(bb, o.mid_, MPFR_RNDD);
  mpfr_mul(num, ab, o.rad_, MPFR_RNDU);
  mpfr_mul(den, bb, rad_, MPFR_RNDU);
  mpfr_add(num, num, den, MPFR_RNDU);
  mpfr_sub(den, bb, o.rad_, MPFR_RNDD);
  mpfr_mul(den, den, bb, MPFR_RNDD);
  mpfr_div(num, num, den, MPFR_RNDU);
  mpfr_add(r.rad_, r.rad_, num, MPFR_RNDU);
  r.bump_ulp();
  mpfr_clears(ab, bb, num, den, nullptr);
  return r;
}

Real Real::operator-() const {
  Real r(*this);
  mpfr_neg(r.mid_, r.mid_, MPFR_RNDN);
  return r;
}

namespace {
mpq_class qabs_max(const mpq_class& a, const mpq_class& b) {
  mpq_class x = a < 0 ? mpq_class(-a) : a;
  mpq_class y = b < 0 ? mpq_class(-b) : b;
  return x > y ? x : y;
}
}  // namespace

Real Real::abs() const {
  if (!contains_zero()) return is_negative() ? -*this : *this;
  // straddles zero: [0, max(|lo|,|hi|)]
  return from_endpoints(0, qabs_max(lower(), upper()), prec_);
}

Real Real::square() const {
  if (!contains_zero()) {
    Real a = is_negative() ? -*this : *this;
    return a * a;
  }
  mpq_class m = qabs_max(lower(), upper());
  return from_endpoints(0, m * m, prec_);
}

Real Real::sqrt() const {
  mpq_class lo = lower(), hi = upper();
  if (hi < 0) throw std::domain_error("sqrt of negative ball");
  if (lo < 0) lo = 0;
  Real r(prec_);
  mpfr_t l, h;
  mpfr_init2(l, prec_);
  mpfr_init2(h, prec_);
  mpfr_set_q(l, lo.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(h, hi.get_mpq_t(), MPFR_RNDU);
  mpfr_sqrt(l, l, MPFR_RNDD);
  mpfr_sqrt(h, h, MPFR_RNDU);
  mpfr_add(r.mid_, l, h, MPFR_RNDN);
  mpfr_div_2ui(r.mid_, r.mid_, 1, MPFR_RNDN);
  mpfr_t d;
  mpfr_init2(d, kRadPrec);
  mpfr_sub(d, h, l, MPFR_RNDU);
  mpfr_div_2ui(d, d, 1, MPFR_RNDU);
  mpfr_set(r.rad_, d, MPFR_RNDU);
  r.bump_ulp();
  r.bump_ulp();
  mpfr_clears(l, h, d, nullptr);
  return r;
}

Real Real::log() const {
  if (!is_positive()) throw std::domain_error("log of non-positive ball");
  Real r(prec_);
  mpfr_t l, h;
  mpfr_init2(l, prec_);
  mpfr_init2(h, prec_);
  mpq_class lo = lower(), hi = upper();
  mpfr_set_q(l, lo.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(h, hi.get_mpq_t(), MPFR_RNDU);
  mpfr_log(l, l, MPFR_RNDD);
  mpfr_log(h, h, MPFR_RNDU);
  mpfr_add(r.mid_, l, h, MPFR_RNDN);
  mpfr_div_2ui(r.mid_, r.mid_, 1, MPFR_RNDN);
  mpfr_t d;
  mpfr_init2(d, kRadPrec);
  mpfr_sub(d, h, l, MPFR_RNDU);
  mpfr_div_2ui(d, d, 1, MPFR_RNDU);
  mpfr_set(r.rad_, d, MPFR_RNDU);
  r.bump_ulp();
  r.bump_ulp();
  mpfr_clears(l, h, d, nullptr);
  return r;
}

namespace {
// trig of 2*pi*t via argument ball; |d cos/d x| <= 1 so the input radius
// transfers directly to the output radius.
Real trig2pi(const mpq_class& t, mpfr_prec_t prec, bool is_cos) {
  Real angle = Real::pi(prec) * Real::exact(2 * t, prec);
  Real r(prec);
  if (is_cos)
    mpfr_cos(r.mid_, angle.mid_, MPFR_RNDN);
  else
    mpfr_sin(r.mid_, angle.mid_, MPFR_RNDN);
  mpfr_set(r.rad_, angle.rad_, MPFR_RNDU);
  r.bump_ulp();
  return r;
}
}  // namespace

Real Real::cos2pi(const mpq_class& t, mpfr_prec_t prec) { return trig2pi(t, prec, true); }
Real Real::sin2pi(const mpq_class& t, mpfr_prec_t prec) { return trig2pi(t, prec, false); }

bool Real::contains_zero() const { return !(is_positive() || is_negative()); }

bool Real::is_positive() const {
  if (mpfr_sgn(mid_) <= 0) return false;
  mpfr_t t;
  mpfr_init2(t, kRadPrec);
  mpfr_sub(t, mid_, rad_, MPFR_RNDD);
  bool pos = mpfr_sgn(t) > 0;
  mpfr_clear(t);
  return pos;
}

bool Real::is_negative() const {
  if (mpfr_sgn(mid_) >= 0) return false;
  mpfr_t t;
  mpfr_init2(t, kRadPrec);
  mpfr_add(t, mid_, rad_, MPFR_RNDU);
  bool neg = mpfr_sgn(t) < 0;
  mpfr_clear(t);
  return neg;
}

bool Real::less_than(const Real& o) const { return (o - *this).is_positive(); }

mpq_class Real::lower() const {
  mpfr_t t;
  mpfr_init2(t, prec_ + kRadPrec);
  mpfr_sub(t, mid_, rad_, MPFR_RNDD);
  mpq_class q;
  mpfr_get_q(q.get_mpq_t(), t);
  mpfr_clear(t);
  return q;
}

mpq_class Real::upper() const {
  mpfr_t t;
  mpfr_init2(t, prec_ + kRadPrec);
  mpfr_add(t, mid_, rad_, MPFR_RNDU);
  mpq_class q;
  mpfr_get_q(q.get_mpq_t(), t);
  mpfr_clear(t);
  return q;
}

double Real::mid_double() const { return mpfr_get_d(mid_, MPFR_RNDN); }
double Real::rad_double() const { return mpfr_get_d(rad_, MPFR_RNDU); }

std::string Real::str(int digits) const {
  std::ostringstream os;
  os.precision(digits);
  os << mid_double() << " +/- " << rad_double();
  return os.str();
}

Complex Complex::exact(const mpq_class& re, const mpq_class& im, mpfr_prec_t prec) {
  return Complex(Real::exact(re, prec), Real::exact(im, prec));
}

Complex Complex::root_of_unity(const mpq_class& t, mpfr_prec_t prec) {
  return Complex(Real::cos2pi(t, prec), Real::sin2pi(t, prec));
}

Complex Complex::operator+(const Complex& o) const {
  return Complex(re_ + o.re_, im_ + o.im_);
}

Complex Complex::operator-(const Complex& o) const {
  return Complex(re_ - o.re_, im_ - o.im_);
}

Complex Complex::operator*(const Complex& o) const {
  return Complex(re_ * o.re_ - im_ * o.im_, re_ * o.im_ + im_ * o.re_);
}

Complex Complex::operator-() const { return Complex(-re_, -im_); }

Complex Complex::conj() const { return Complex(re_, -im_); }

Real Complex::abs2() const { return re_.square() + im_.square(); }

Real Complex::abs() const { return abs2().sqrt(); }

std::string Complex::str(int digits) const {
  std::ostringstream os;
  os << "(" << re_.str(digits) << ", " << im_.str(digits) << ")";
  return os.str();
}

}  // namespace uenodyn

#include "qcong/bigfloat.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace qcong {

BigFloat BigFloat::from_long(long v, long prec) {
  BigFloat r(prec);
  mpfr_set_si(r.x_, v, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::from_rat(const Rat& v, long prec) {
  BigFloat r(prec);
  mpfr_set_q(r.x_, v.get_mpq_t(), MPFR_RNDN);
  return r;
}

BigFloat BigFloat::from_string(const std::string& s, long prec) {
  BigFloat r(prec);
  if (mpfr_set_str(r.x_, s.c_str(), 10, MPFR_RNDN) != 0)
    throw std::invalid_argument("BigFloat::from_string: bad literal: " + s);
  return r;
}

BigFloat BigFloat::pow2(long e, long prec) {
  BigFloat r(prec);
  mpfr_set_si_2exp(r.x_, 1, e, MPFR_RNDN);
  return r;
}

std::string BigFloat::str(long digits) const {
  mpfr_exp_t e;
  char* s = mpfr_get_str(nullptr, &e, 10, static_cast<size_t>(digits), x_,
                         MPFR_RNDN);
  std::string mant(s);
  mpfr_free_str(s);
  if (mpfr_zero_p(x_)) return "0";
  std::string sign;
  if (mant[0] == '-') {
    sign = "-";
    mant = mant.substr(1);
  }
  // mant is the digit string with implied decimal point before position e.
  return sign + "0." + mant + "e" + std::to_string(static_cast<long>(e));
}

static long max_prec(const BigFloat& a, const BigFloat& b) {
  return std::max(a.precision(), b.precision());
}

BigFloat BigFloat::operator-() const {
  BigFloat r(precision());
  mpfr_neg(r.x_, x_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::operator+(const BigFloat& o) const {
  BigFloat r(max_prec(*this, o));
  mpfr_add(r.x_, x_, o.x_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::operator-(const BigFloat& o) const {
  BigFloat r(max_prec(*this, o));
  mpfr_sub(r.x_, x_, o.x_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::operator*(const BigFloat& o) const {
  BigFloat r(max_prec(*this, o));
  mpfr_mul(r.x_, x_, o.x_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::operator/(const BigFloat& o) const {
  BigFloat r(max_prec(*this, o));
  mpfr_div(r.x_, x_, o.x_, MPFR_RNDN);
  return r;
}

BigFloat abs(const BigFloat& x) {
  BigFloat r(x.precision());
  mpfr_abs(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}

BigFloat sqrt(const BigFloat& x) {
  BigFloat r(x.precision());
  mpfr_sqrt(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}

BigFloat exp(const BigFloat& x) {
  BigFloat r(x.precision());
  mpfr_exp(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}

BigFloat log(const BigFloat& x) {
  BigFloat r(x.precision());
  mpfr_log(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}

BigFloat pow_si(const BigFloat& x, long e) {
  BigFloat r(x.precision());
  mpfr_pow_si(r.raw(), x.raw(), e, MPFR_RNDN);
  return r;
}

BigFloat const_pi(long prec) {
  BigFloat r(prec);
  mpfr_const_pi(r.raw(), MPFR_RNDN);
  return r;
}

BigComplex BigComplex::operator/(const BigComplex& o) const {
  BigFloat n2 = o.re * o.re + o.im * o.im;
  return {(re * o.re + im * o.im) / n2, (im * o.re - re * o.im) / n2};
}

BigFloat abs(const BigComplex& z) { return sqrt(z.re * z.re + z.im * z.im); }

}  // namespace qcong

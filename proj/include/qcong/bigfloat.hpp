#ifndef QCONG_BIGFLOAT_HPP
#define QCONG_BIGFLOAT_HPP

#include <mpfr.h>

#include <string>
#include <utility>

#include "qcong/multipoly.hpp"

namespace qcong {

// Arbitrary-precision real number (MPFR wrapper, round-to-nearest). Every
// value carries its own precision in bits; binary operations round into the
// larger precision of the two operands, so each operation is correct to 1/2
// ulp at that precision.
class BigFloat {
 public:
  explicit BigFloat(long prec = 256) { mpfr_init2(x_, prec); mpfr_set_zero(x_, 1); }
  BigFloat(const BigFloat& o) {
    mpfr_init2(x_, mpfr_get_prec(o.x_));
    mpfr_set(x_, o.x_, MPFR_RNDN);
  }
  BigFloat(BigFloat&& o) noexcept {
    mpfr_init2(x_, mpfr_get_prec(o.x_));
    mpfr_swap(x_, o.x_);
  }
  BigFloat& operator=(const BigFloat& o) {
    if (this != &o) {
      mpfr_set_prec(x_, mpfr_get_prec(o.x_));
      mpfr_set(x_, o.x_, MPFR_RNDN);
    }
    return *this;
  }
  BigFloat& operator=(BigFloat&& o) noexcept {
    if (this != &o) mpfr_swap(x_, o.x_);
    return *this;
  }
  ~BigFloat() { mpfr_clear(x_); }

  static BigFloat from_long(long v, long prec);
  static BigFloat from_rat(const Rat& v, long prec);
  static BigFloat from_string(const std::string& s, long prec);
  // 2^e, exact; handy for tolerances tied to the working precision.
  static BigFloat pow2(long e, long prec);

  long precision() const { return mpfr_get_prec(x_); }
  bool is_zero() const { return mpfr_zero_p(x_) != 0; }
  int sign() const { return mpfr_sgn(x_); }
  double to_double() const { return mpfr_get_d(x_, MPFR_RNDN); }
  // Decimal rendering with the given number of significant digits.
  std::string str(long digits = 30) const;

  mpfr_ptr raw() { return x_; }
  mpfr_srcptr raw() const { return x_; }

  BigFloat operator-() const;
  BigFloat operator+(const BigFloat& o) const;
  BigFloat operator-(const BigFloat& o) const;
  BigFloat operator*(const BigFloat& o) const;
  BigFloat operator/(const BigFloat& o) const;
  BigFloat& operator+=(const BigFloat& o) { return *this = *this + o; }
  BigFloat& operator-=(const BigFloat& o) { return *this = *this - o; }
  BigFloat& operator*=(const BigFloat& o) { return *this = *this * o; }
  BigFloat& operator/=(const BigFloat& o) { return *this = *this / o; }

  int cmp(const BigFloat& o) const { return mpfr_cmp(x_, o.x_); }
  bool operator<(const BigFloat& o) const { return cmp(o) < 0; }
  bool operator<=(const BigFloat& o) const { return cmp(o) <= 0; }
  bool operator>(const BigFloat& o) const { return cmp(o) > 0; }
  bool operator>=(const BigFloat& o) const { return cmp(o) >= 0; }
  bool operator==(const BigFloat& o) const { return cmp(o) == 0; }

 private:
  mpfr_t x_;
};

BigFloat abs(const BigFloat& x);
BigFloat sqrt(const BigFloat& x);
BigFloat exp(const BigFloat& x);
BigFloat log(const BigFloat& x);
BigFloat pow_si(const BigFloat& x, long e);
BigFloat const_pi(long prec);

struct BigComplex {
  BigFloat re, im;

  explicit BigComplex(long prec = 256) : re(prec), im(prec) {}
  BigComplex(BigFloat r, BigFloat i) : re(std::move(r)), im(std::move(i)) {}
  static BigComplex real(BigFloat r) {
    BigComplex z(r.precision());
    z.re = std::move(r);
    return z;
  }

  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  BigComplex operator-() const { return {-re, -im}; }
  BigComplex operator+(const BigComplex& o) const { return {re + o.re, im + o.im}; }
  BigComplex operator-(const BigComplex& o) const { return {re - o.re, im - o.im}; }
  BigComplex operator*(const BigComplex& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  BigComplex operator/(const BigComplex& o) const;
  BigComplex& operator+=(const BigComplex& o) { return *this = *this + o; }
  BigComplex& operator-=(const BigComplex& o) { return *this = *this - o; }
  BigComplex& operator*=(const BigComplex& o) { return *this = *this * o; }
  BigComplex& operator/=(const BigComplex& o) { return *this = *this / o; }
};

// |z|, computed without overflow concerns at these precisions.
BigFloat abs(const BigComplex& z);

}  // namespace qcong

#endif

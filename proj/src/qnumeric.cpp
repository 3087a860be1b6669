#include "qcong/qnumeric.hpp"

#include <deque>

#include "qcong/padic.hpp"

namespace qcong {

BigComplex qpoch_finite(const BigComplex& x, const BigComplex& q, long k) {
  long prec = std::max(x.re.precision(), q.re.precision());
  BigComplex one = BigComplex::real(BigFloat::from_long(1, prec));
  BigComplex r = one;
  BigComplex xq = x;
  for (long j = 0; j < k; ++j) {
    r *= one - xq;
    xq *= q;
  }
  return r;
}

NumericValue qpoch_infinite(const BigComplex& x, const BigComplex& q,
                            const BigFloat& tol) {
  long prec = std::max(x.re.precision(), q.re.precision());
  BigFloat aq = abs(q);
  BigFloat one = BigFloat::from_long(1, prec);
  if (!(aq < one)) throw Inadmissible("qpoch_infinite: |q| >= 1");

  BigComplex cone = BigComplex::real(one);
  BigComplex r = cone;
  BigComplex xq = x;
  BigFloat half = BigFloat::from_rat(Rat(1, 2), prec);
  long j = 0;
  for (;; ++j) {
    // |log of the remaining product| <= 2 |x q^j| / (1 - |q|) once the
    // leading discarded factor satisfies |x q^j| <= 1/2.
    BigFloat m = abs(xq);
    if (m <= half) {
      BigFloat logtail = BigFloat::from_long(2, prec) * m / (one - aq);
      if (logtail <= tol) {
        NumericValue out;
        out.value = r;
        out.tail.trunc = j;
        out.tail.bound = abs(r) * BigFloat::from_long(2, prec) * logtail;
        out.tail.method = TailBound::Method::ProductLog;
        return out;
      }
    }
    if (j > 4 * prec + 64)
      throw PrecisionExhausted("qpoch_infinite: tail bound stalled");
    r *= cone - xq;
    xq *= q;
  }
}

NumericValue series_eval(const std::function<BigComplex(long)>& term,
                         const BigFloat& tol, long max_terms) {
  BigComplex t0 = term(0);
  long prec = t0.re.precision();
  BigFloat one = BigFloat::from_long(1, prec);
  BigFloat rho_cap = BigFloat::from_rat(Rat(99, 100), prec);

  BigComplex s = t0;
  BigFloat prev = abs(t0);
  std::deque<BigFloat> ratios;
  int zeros = prev.is_zero() ? 1 : 0;
  for (long k = 1; k < max_terms; ++k) {
    BigComplex t = term(k);
    s += t;
    BigFloat cur = abs(t);
    if (cur.is_zero()) {
      // Two consecutive vanishing terms: treat the series as terminated
      // (in-scope terminating sums vanish identically past their last term).
      if (++zeros >= 2) {
        NumericValue out;
        out.value = s;
        out.tail.trunc = k + 1;
        out.tail.bound = BigFloat(prec);
        out.tail.method = TailBound::Method::GeometricRatio;
        return out;
      }
      prev = cur;
      ratios.clear();
      continue;
    }
    zeros = 0;
    if (!prev.is_zero()) {
      ratios.push_back(cur / prev);
      if (ratios.size() > 6) ratios.pop_front();
    }
    prev = cur;
    if (ratios.size() == 6) {
      BigFloat rho = ratios[0];
      for (const auto& r : ratios)
        if (r > rho) rho = r;
      if (rho < rho_cap) {
        BigFloat bound = cur * rho / (one - rho);
        if (bound <= tol) {
          NumericValue out;
          out.value = s;
          out.tail.trunc = k + 1;
          out.tail.bound = bound;
          out.tail.method = TailBound::Method::GeometricRatio;
          return out;
        }
      }
    }
  }
  throw PrecisionExhausted("series_eval: no certified tail within max_terms");
}

BigFloat gamma_real(const BigFloat& x, long prec) {
  if (x.sign() <= 0 && mpfr_integer_p(x.raw()))
    throw PoleAtNonpositiveInteger("gamma_real: pole at " + x.str(8));
  BigFloat r(prec);
  mpfr_gamma(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}

BigFloat sumalt(const std::function<BigFloat(long)>& a, long n, long prec) {
  BigFloat d = pow_si(BigFloat::from_long(3, prec) +
                          sqrt(BigFloat::from_long(8, prec)),
                      n);
  d = (d + BigFloat::from_long(1, prec) / d) /
      BigFloat::from_long(2, prec);
  BigFloat b = BigFloat::from_long(-1, prec);
  BigFloat c = -d;
  BigFloat s(prec);
  for (long k = 0; k < n; ++k) {
    c = b - c;
    s += c * a(k);
    b = b * BigFloat::from_long((k + n) * (k - n), prec) /
        (BigFloat::from_rat(Rat(2 * k + 1, 2), prec) *
         BigFloat::from_long(k + 1, prec));
  }
  return s / d;
}

CheckResult check_ramanujan_series(long digits) {
  long prec = std::max(512L, 4 * digits + 64);
  auto a = [prec](long k) -> BigFloat {
    Rat t = pochhammer(Rat(1, 2), k);
    Rat f = 1;
    for (long j = 2; j <= k; ++j) f *= j;
    Rat r = t / f;
    Rat v = r * r;
    v *= v;
    v *= r;
    v *= (4 * k + 1);
    v.canonicalize();
    return BigFloat::from_rat(v, prec);
  };
  long stages = 2 * digits + 20;
  BigFloat s1 = sumalt(a, stages, prec);
  BigFloat s2 = sumalt(a, stages + 15, prec);

  BigFloat g = gamma_real(BigFloat::from_rat(Rat(3, 4), prec), prec);
  BigFloat rhs = BigFloat::from_long(2, prec) / pow_si(g, 4);

  BigFloat tol =
      exp(BigFloat::from_long(-digits, prec) * log(BigFloat::from_long(10, prec)));
  BigFloat diff = abs(s1 - rhs);
  BigFloat stab = abs(s1 - s2);

  CheckResult res;
  int achieved = 0;
  if (diff.is_zero()) {
    achieved = static_cast<int>(digits);
  } else {
    double lg = -log(diff).to_double() / 2.302585092994046;
    achieved = static_cast<int>(lg);
  }
  res.detail.push_back(
      {"decimal digits", static_cast<int>(digits), achieved});
  if (diff <= tol && stab <= tol)
    res.verdict = Verdict::Pass;
  else
    res.verdict = Verdict::Fail;
  return res;
}

}  // namespace qcong

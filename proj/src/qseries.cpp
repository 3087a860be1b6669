#include "qcong/qseries.hpp"

#include <stdexcept>

namespace qcong {

namespace {

Rat rat_pow(const Rat& c, long e) {
  if (e < 0) throw std::invalid_argument("rat_pow: negative exponent");
  Rat r = 1, b = c;
  long n = e;
  while (n > 0) {
    if (n & 1) r *= b;
    b *= b;
    n >>= 1;
  }
  r.canonicalize();
  return r;
}

Exps exps_scale(const Exps& e, long k) {
  Exps r;
  for (int i = 0; i < NVARS; ++i)
    r[i] = static_cast<std::int32_t>(e[i] * k);
  return r;
}

}  // namespace

MultiPoly qint(long n) {
  if (n < 1) throw std::invalid_argument("qint: n must be positive");
  MultiPoly p;
  for (long i = 0; i < n; ++i) p.add_term(1, exps_q(static_cast<std::int32_t>(i)));
  return p;
}

LaurentPoly qint_any(long n) {
  if (n > 0) return LaurentPoly(qint(n));
  if (n == 0) return LaurentPoly::zero();
  // (1 - q^n)/(1 - q) = -q^n (1 - q^{-n})/(1 - q) for n < 0.
  return LaurentPoly::monomial(-1, exps_q(static_cast<std::int32_t>(n))) *
         LaurentPoly(qint(-n));
}

LaurentPoly qpoch(const ParamExpr& x, int t, long k) {
  if (k < 0) throw std::invalid_argument("qpoch: negative length");
  LaurentPoly r = LaurentPoly::one();
  for (long j = 0; j < k; ++j) {
    LaurentPoly f = LaurentPoly::one() -
                    LaurentPoly::monomial(
                        x.c, exps_add(x.mon, exps_q(static_cast<std::int32_t>(t * j))));
    r *= f;
    if (r.is_zero()) break;
  }
  return r;
}

FactoredRat qbinomial(long x, long k, int t) {
  if (k < 0) return FactoredRat::zero();
  FactoredRat r(qpoch(pe_q(static_cast<std::int32_t>(t * (x - k + 1))), t, k));
  for (long j = 1; j <= k; ++j)
    r.div_factor(1, exps_q(static_cast<std::int32_t>(t * j)));
  return r;
}

void mul_poch(FactoredRat& t, const ParamExpr& x, int step, long len, int power) {
  for (long j = 0; j < len; ++j) {
    Exps mon = exps_add(x.mon, exps_q(static_cast<std::int32_t>(step * j)));
    for (int p = 0; p < power; ++p) t.mul_factor(x.c, mon);
  }
}

void div_poch(FactoredRat& t, const ParamExpr& x, int step, long len, int power) {
  for (long j = 0; j < len; ++j)
    t.div_factor(x.c, exps_add(x.mon, exps_q(static_cast<std::int32_t>(step * j))),
                 power);
}

FactoredRat term(const SeriesSpec& spec, long k) {
  if (k < 0) throw std::invalid_argument("term: negative index");
  FactoredRat t = FactoredRat::one();
  if (spec.vwp) {
    const ParamExpr& al = *spec.vwp;
    t.mul_factor(al.c, exps_add(al.mon, exps_q(static_cast<std::int32_t>(
                                            spec.vwp_step * k))));
    t.div_factor(al.c, al.mon);
  }
  for (const auto& u : spec.upper) mul_poch(t, u, spec.base_t, k);
  for (const auto& l : spec.lower) div_poch(t, l, spec.base_t, k);
  t.mul_monomial(rat_pow(spec.arg.c, k), exps_scale(spec.arg.mon, k));
  if (spec.binom2_qexp != 0 && k >= 2)
    t.mul_monomial(1, exps_q(static_cast<std::int32_t>(spec.binom2_qexp * k *
                                                       (k - 1) / 2)));
  if (spec.extra) t.mul(spec.extra(k));
  return t;
}

FactoredRat truncated_sum(const SeriesSpec& spec, long M) {
  std::vector<FactoredRat> terms;
  terms.reserve(static_cast<std::size_t>(M + 1));
  for (long k = 0; k <= M; ++k) terms.push_back(term(spec, k));
  return ratfunc_sum(terms);
}

}  // namespace qcong

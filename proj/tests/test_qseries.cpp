#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "qcong/congruence.hpp"
#include "qcong/numtheory.hpp"
#include "qcong/qseries.hpp"

using namespace qcong;

namespace {

MultiPoly qpow(int e) { return MultiPoly::variable(VQ, e); }

bool same_ratfunc(const FactoredRat& x, const FactoredRat& y) {
  return check_equal(x, y).passed();
}

// [m] as a factored rational (1 - q^m)/(1 - q); works for any integer m.
FactoredRat qint_fr(long m) {
  FactoredRat r = FactoredRat::one();
  r.mul_num(qint_any(m));
  return r;
}

}  // namespace

TEST_CASE("q-integers") {
  CHECK(qint(1) == MultiPoly::one());
  CHECK(qint(3) == MultiPoly::one() + qpow(1) + qpow(2));
  CHECK(qint(6) == cyclotomic(2) * cyclotomic(3) * cyclotomic(6));
  CHECK(qint_any(0).is_zero());
  CHECK(qint_any(-1) == LaurentPoly::monomial(-1, exps_q(-1)));
  // [-n] = -q^{-n} [n]
  for (long n = 1; n <= 6; ++n)
    CHECK(qint_any(-n) ==
          LaurentPoly::monomial(-1, exps_q(static_cast<int>(-n))) *
              LaurentPoly(qint(n)));
}

TEST_CASE("q-shifted factorial") {
  CHECK(qpoch(pe_var(VA), 1, 0) == LaurentPoly::one());
  LaurentPoly want = (LaurentPoly::one() - LaurentPoly::monomial(1, exps_q(1))) *
                     (LaurentPoly::one() - LaurentPoly::monomial(1, exps_q(3)));
  CHECK(qpoch(pe_q(1), 2, 2) == want);
  // (1; q)_k = 0 for k >= 1
  CHECK(qpoch(pe(1), 1, 1).is_zero());
}

TEST_CASE("q-shifted factorial splitting") {
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<int> kk(0, 6), ss(-3, 3), cc(-3, 3), ee(0, 2);
  for (int iter = 0; iter < 25; ++iter) {
    int k = kk(rng), l = kk(rng);
    Rat c(cc(rng), 2);
    c.canonicalize();
    if (c == 0) c = 1;
    ParamExpr x = pe_mon(c, exps_add(exps_var(VA, ee(rng)), exps_q(ss(rng))));
    ParamExpr xqk = pe_mon(x.c, exps_add(x.mon, exps_q(k)));
    CHECK(qpoch(x, 1, k + l) == qpoch(x, 1, k) * qpoch(xqk, 1, l));
  }
}

TEST_CASE("Gaussian binomial coefficients") {
  CHECK(same_ratfunc(qbinomial(7, 0), FactoredRat::one()));
  CHECK(same_ratfunc(qbinomial(2, 1),
                     FactoredRat::from_poly(MultiPoly::one() + qpow(1))));
  CHECK(same_ratfunc(
      qbinomial(4, 2),
      FactoredRat::from_poly((MultiPoly::one() + qpow(2)) *
                             (MultiPoly::one() + qpow(1) + qpow(2)))));
  CHECK(qbinomial(4, -1).is_zero());
  CHECK(check_equal(qbinomial(1, 2), FactoredRat::zero()).passed());
  // Symmetry and Pascal-type sanity at a point
  std::array<Rat, NVARS> pt{Rat(3, 7), Rat(1), Rat(1), Rat(1), Rat(1)};
  CHECK(qbinomial(9, 4).eval(pt) == qbinomial(9, 5).eval(pt));
}

TEST_CASE("binomial half identity") {
  // (q; q^2)_k/(q^2; q^2)_k = qbinomial(2k,k)/(-q; q)_k^2 for k <= 12
  for (long k = 0; k <= 12; ++k) {
    FactoredRat lhs(qpoch(pe_q(1), 2, k));
    div_poch(lhs, pe_q(2), 2, k);
    FactoredRat rhs = qbinomial(2 * k, k);
    div_poch(rhs, pe(-1, 1), 1, k, 2);
    CHECK(same_ratfunc(lhs, rhs));
  }
}

namespace {

// Summand [4k+1] (q;q^2)_k^6/(q^2;q^2)_k^6 q^k.
SeriesSpec spec_4k1_sixth() {
  SeriesSpec s;
  s.base_t = 2;
  for (int i = 0; i < 6; ++i) s.upper.push_back(pe_q(1));
  for (int i = 0; i < 6; ++i) s.lower.push_back(pe_q(2));
  s.arg = pe_q(1);
  s.vwp = pe_q(1);
  s.vwp_step = 4;
  return s;
}

}  // namespace

TEST_CASE("generic summand") {
  SeriesSpec s = spec_4k1_sixth();
  CHECK(same_ratfunc(term(s, 0), FactoredRat::one()));
  // k = 1: [5] (1-q)^6/(1-q^2)^6 q
  FactoredRat want = FactoredRat::from_poly(qint(5));
  for (int i = 0; i < 6; ++i) want.mul_factor(1, exps_q(1));
  for (int i = 0; i < 6; ++i) want.div_factor(1, exps_q(2));
  want.mul_monomial(1, exps_q(1));
  CHECK(same_ratfunc(term(s, 1), want));
}

TEST_CASE("summand ratio matches the analytic ratio") {
  SeriesSpec s = spec_4k1_sixth();
  std::array<Rat, NVARS> pt{Rat(2, 5), Rat(1), Rat(1), Rat(1), Rat(1)};
  Rat q = pt[VQ];
  for (long k = 0; k <= 5; ++k) {
    Rat q2k1 = 1, acc = 1;
    for (long i = 0; i < 2 * k + 1; ++i) q2k1 *= q;
    Rat q2k2 = q2k1 * q;
    Rat q4k1 = 1, q4k5;
    for (long i = 0; i < 4 * k + 1; ++i) q4k1 *= q;
    q4k5 = q4k1 * q * q * q * q;
    Rat ratio = (1 - q4k5) / (1 - q4k1) * q;
    Rat frac = (1 - q2k1) / (1 - q2k2);
    for (int i = 0; i < 6; ++i) ratio *= frac;
    CHECK(term(s, k + 1).eval(pt) == term(s, k).eval(pt) * ratio);
  }
}

TEST_CASE("truncated sums") {
  SeriesSpec s = spec_4k1_sixth();
  std::array<Rat, NVARS> pt{Rat(1, 3), Rat(1), Rat(1), Rat(1), Rat(1)};
  CHECK(truncated_sum(s, 0).eval(pt) == 1);
  Rat expect = 0;
  for (long k = 0; k <= 4; ++k) expect += term(s, k).eval(pt);
  CHECK(truncated_sum(s, 4).eval(pt) == expect);
}

TEST_CASE("Chu-Vandermonde style vanishing sum") {
  // sum_{k=0}^{m} (q^{-1-n}, q^{-1+n}; q^2)_k/(q^2;q^2)_k^2 q^{2k} = 0
  // for odd n > 1, m = n-1 or (n+1)/2.
  for (long n : {3L, 5L, 7L}) {
    SeriesSpec s;
    s.base_t = 2;
    s.upper = {pe_q(static_cast<int>(-1 - n)), pe_q(static_cast<int>(-1 + n))};
    s.lower = {pe_q(2), pe_q(2)};
    s.arg = pe_q(2);
    for (long m : {n - 1, (n + 1) / 2}) {
      FactoredRat sum = truncated_sum(s, m);
      CHECK(check_equal(sum, FactoredRat::zero()).passed());
    }
  }
}

TEST_CASE("central binomial square sum has a closed form") {
  // sum_{k=0}^n [4k+1] q^{-k} [2k,k]^2 (-q^{k+1};q)_{n-k}^4
  //   = q^{-n} [2n+1]^2 [2n,n]^2
  for (long n = 0; n <= 20; ++n) {
    std::vector<FactoredRat> terms;
    for (long k = 0; k <= n; ++k) {
      FactoredRat t = qbinomial(2 * k, k);
      t.mul(qbinomial(2 * k, k));
      t.mul_num(qint_any(4 * k + 1));
      t.mul_monomial(1, exps_q(static_cast<int>(-k)));
      mul_poch(t, pe(-1, static_cast<int>(k + 1)), 1, n - k, 4);
      terms.push_back(t);
    }
    FactoredRat lhs = ratfunc_sum(terms);
    FactoredRat rhs = qbinomial(2 * n, n);
    rhs.mul(qbinomial(2 * n, n));
    rhs.mul_num(qint_any(2 * n + 1));
    rhs.mul_num(qint_any(2 * n + 1));
    rhs.mul_monomial(1, exps_q(static_cast<int>(-n)));
    CHECK(same_ratfunc(lhs, rhs));
  }
}

TEST_CASE("octic weight sum has a closed form") {
  // sum_{k=0}^{N} [8k+1] (q;q^2)_k^2 (q;q^2)_{2k} (q^{-3};q^6)_k
  //   / ((q^2;q^2)_{2k} (q^6;q^6)_k (q^{-3};q^2)_k (q^6;q^2)_k) q^{2k}
  // = [4N+1][4N+3][2N+1][2][4] / ([3][2N+2][2N+4])
  //   / ((-q;q)_N^2 (-q;q)_{2N}^2 (-q^3;q^3)_N^2)
  //   * [2N,N] [4N,2N] [2N,N]_{q^3}
  for (long N = 0; N <= 20; ++N) {
    std::vector<FactoredRat> terms;
    for (long k = 0; k <= N; ++k) {
      FactoredRat t = FactoredRat::one();
      t.mul_num(qint_any(8 * k + 1));
      mul_poch(t, pe_q(1), 2, k, 2);
      mul_poch(t, pe_q(1), 2, 2 * k);
      mul_poch(t, pe_q(-3), 6, k);
      div_poch(t, pe_q(2), 2, 2 * k);
      div_poch(t, pe_q(6), 6, k);
      div_poch(t, pe_q(-3), 2, k);
      div_poch(t, pe_q(6), 2, k);
      t.mul_monomial(1, exps_q(static_cast<int>(2 * k)));
      terms.push_back(t);
    }
    FactoredRat lhs = ratfunc_sum(terms);

    FactoredRat rhs = qbinomial(2 * N, N);
    rhs.mul(qbinomial(4 * N, 2 * N));
    rhs.mul(qbinomial(2 * N, N, 3));
    for (long m : {4 * N + 1, 4 * N + 3, 2 * N + 1, 2L, 4L})
      rhs.mul_num(qint_any(m));
    for (long m : {3L, 2 * N + 2, 2 * N + 4}) {
      rhs.div_factor(1, exps_q(static_cast<int>(m)));
      rhs.mul_factor(1, exps_q(1));
    }
    div_poch(rhs, pe(-1, 1), 1, N, 2);
    div_poch(rhs, pe(-1, 1), 1, 2 * N, 2);
    div_poch(rhs, pe(-1, 3), 3, N, 2);
    CHECK(same_ratfunc(lhs, rhs));
  }
}

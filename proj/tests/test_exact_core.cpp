#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "qcong/factored_rat.hpp"
#include "qcong/multipoly.hpp"
#include "qcong/numtheory.hpp"

using namespace qcong;

namespace {

MultiPoly qpow(int e) { return MultiPoly::variable(VQ, e); }

MultiPoly qint_poly(long n) {
  MultiPoly p;
  for (long i = 0; i < n; ++i) p.add_term(1, exps_q(static_cast<std::int32_t>(i)));
  return p;
}

Rat rnd_rat(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 9);
  int n = 0;
  while (n == 0) n = num(rng);
  return Rat(n, den(rng));
}

}  // namespace

TEST_CASE("mobius basics") {
  CHECK(mobius(1) == 1);
  CHECK(mobius(4) == 0);
  CHECK(mobius(6) == 1);
  CHECK(mobius(30) == -1);
  CHECK(mobius(12) == 0);
}

TEST_CASE("kronecker symbol") {
  CHECK(kronecker_symbol(-3, 1) == 1);
  CHECK(kronecker_symbol(0, 9) == 0);
  // Euler criterion oracle for odd primes
  for (long p : {3L, 5L, 7L, 11L, 13L, 17L}) {
    for (long a = -20; a <= 20; ++a) {
      int expect = 0;
      long am = ((a % p) + p) % p;
      if (am != 0) {
        expect = -1;
        for (long x = 1; x < p; ++x)
          if ((x * x) % p == am) {
            expect = 1;
            break;
          }
      }
      CHECK(kronecker_symbol(a, p) == expect);
    }
  }
  // Multiplicativity in the bottom argument
  CHECK(kronecker_symbol(2, 15) == kronecker_symbol(2, 3) * kronecker_symbol(2, 5));
  CHECK(kronecker_symbol(-3, 35) ==
        kronecker_symbol(-3, 5) * kronecker_symbol(-3, 7));
  // (a/2) values
  CHECK(kronecker_symbol(7, 2) == 1);
  CHECK(kronecker_symbol(3, 2) == -1);
  CHECK(kronecker_symbol(6, 2) == 0);
}

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic(1) == qpow(1) - MultiPoly::one());
  for (long p : {2L, 3L, 5L, 7L, 11L, 13L}) CHECK(cyclotomic(p) == qint_poly(p));
  // Phi_6 = q^2 - q + 1
  MultiPoly phi6 = qpow(2) - qpow(1) + MultiPoly::one();
  CHECK(cyclotomic(6) == phi6);
  // Phi_6 by explicit exact division (q^6-1)(q-1)/((q^2-1)(q^3-1))
  MultiPoly num = (qpow(6) - MultiPoly::one()) * (qpow(1) - MultiPoly::one());
  MultiPoly den = (qpow(2) - MultiPoly::one()) * (qpow(3) - MultiPoly::one());
  auto quo = poly_exact_div(num, den);
  REQUIRE(quo.has_value());
  CHECK(*quo == phi6);
}

TEST_CASE("product of cyclotomics over divisors is the q-integer") {
  for (long n = 1; n <= 60; ++n) {
    MultiPoly prod = MultiPoly::one();
    for (long d : divisors(n))
      if (d > 1) prod *= cyclotomic(d);
    CHECK(prod == qint_poly(n));
  }
}

TEST_CASE("Phi_n(q^2) = Phi_n(q) Phi_2n(q) for odd n > 1") {
  for (long n = 3; n <= 31; n += 2) {
    MultiPoly lhs;
    for (const auto& [e, c] : cyclotomic(n).terms())
      lhs.add_term(c, exps_q(2 * e[VQ]));
    CHECK(lhs == cyclotomic(n) * cyclotomic(2 * n));
  }
}

TEST_CASE("exact division examples") {
  auto q1 = poly_exact_div(qpow(2) - MultiPoly::one(), qpow(1) - MultiPoly::one());
  REQUIRE(q1.has_value());
  CHECK(*q1 == qpow(1) + MultiPoly::one());
  auto q2 = poly_exact_div(qpow(2) + MultiPoly::one(), qpow(1) - MultiPoly::one());
  CHECK(!q2.has_value());
  // prod_{d|15, d>1} Phi_d / Phi_15 = Phi_3 Phi_5
  MultiPoly n15 = cyclotomic(3) * cyclotomic(5) * cyclotomic(15);
  auto q3 = poly_exact_div(n15, cyclotomic(15));
  REQUIRE(q3.has_value());
  CHECK(*q3 == cyclotomic(3) * cyclotomic(5));
}

TEST_CASE("valuation") {
  MultiPoly p3sq = qint_poly(3) * qint_poly(3);
  CHECK(valuation(p3sq, cyclotomic(3)) == 2);
  CHECK(valuation(qpow(1) - MultiPoly::one(), cyclotomic(3)) == 0);
  CHECK(valuation(qint_poly(9), cyclotomic(3)) == 1);
}

TEST_CASE("valuation is additive on products") {
  std::mt19937_64 rng(12345);
  for (int iter = 0; iter < 20; ++iter) {
    std::uniform_int_distribution<int> dd(2, 8), ee(0, 2);
    long d = dd(rng);
    int e1 = ee(rng), e2 = ee(rng);
    MultiPoly p = MultiPoly::one() + qpow(1) + qpow(dd(rng) + 5);
    MultiPoly r = MultiPoly::one() - qpow(1) + qpow(dd(rng) + 3);
    for (int i = 0; i < e1; ++i) p *= cyclotomic(d);
    for (int i = 0; i < e2; ++i) r *= cyclotomic(d);
    CHECK(valuation(p * r, cyclotomic(d)) == valuation(p, cyclotomic(d)) +
                                                 valuation(r, cyclotomic(d)));
  }
}

TEST_CASE("substitute_a zero iff divisible by a - q^n") {
  std::mt19937_64 rng(777);
  for (int iter = 0; iter < 20; ++iter) {
    std::uniform_int_distribution<int> nn(1, 6), tt(0, 3);
    int n = nn(rng);
    MultiPoly aminus = MultiPoly::variable(VA) - qpow(n);
    MultiPoly p;
    for (int t = 0; t <= tt(rng) + 1; ++t)
      p.add_term(rnd_rat(rng), exps_add(exps_q(tt(rng)), exps_var(VA, tt(rng))));
    if (p.is_zero()) p = MultiPoly::one();
    MultiPoly good = p * aminus;
    CHECK(substitute_a(good, LaurentPoly::monomial(1, exps_q(n))).is_zero());
    // A polynomial with a nonzero value at a = q^n must not vanish.
    MultiPoly bad = good + MultiPoly::one();
    CHECK(!substitute_a(bad, LaurentPoly::monomial(1, exps_q(n))).is_zero());
  }
}

TEST_CASE("substitution examples") {
  // (1 - a q^3) at a = q^{-3} -> 0
  MultiPoly f = MultiPoly::one() -
                MultiPoly::monomial(1, exps_add(exps_var(VA, 1), exps_q(3)));
  CHECK(substitute_a(f, LaurentPoly::monomial(1, exps_q(-3))).is_zero());
  // (a - q^3) at a = q^3 -> 0
  MultiPoly g = MultiPoly::variable(VA) - qpow(3);
  CHECK(substitute_a(g, LaurentPoly::monomial(1, exps_q(3))).is_zero());
  // (1 - a q)(1 - q/a) at a = q^n equals (1 - q^{n+1})(1 - q^{1-n})
  int n = 4;
  LaurentPoly oneminusaq(MultiPoly::one() - MultiPoly::monomial(1, exps_add(exps_var(VA, 1), exps_q(1))));
  LaurentPoly qovera = LaurentPoly::monomial(1, exps_sub(exps_q(1), exps_var(VA, 1)));
  LaurentPoly prod = oneminusaq * (LaurentPoly::one() - qovera);
  LaurentPoly got = prod.substitute(VA, 1, n);
  LaurentPoly want =
      (LaurentPoly::one() - LaurentPoly::monomial(1, exps_q(n + 1))) *
      (LaurentPoly::one() - LaurentPoly::monomial(1, exps_q(1 - n)));
  CHECK(got == want);
}

TEST_CASE("substitute with general Laurent value") {
  // p(a) = a^2 + a, value = q + q^{-1}
  MultiPoly p = MultiPoly::variable(VA, 2) + MultiPoly::variable(VA, 1);
  LaurentPoly val(qpow(2) + MultiPoly::one(), exps_q(-1));
  LaurentPoly got = substitute_a(p, val);
  std::array<Rat, NVARS> pt{Rat(2, 3), Rat(0), Rat(0), Rat(0), Rat(0)};
  Rat v = pt[VQ] + Rat(3, 2);
  CHECK(got.eval(pt) == v * v + v);
}

TEST_CASE("ratfunc_sum basics") {
  FactoredRat one = FactoredRat::one();
  FactoredRat q(LaurentPoly::monomial(1, exps_q(1)));
  FactoredRat s = ratfunc_sum({one, q});
  CHECK(s.den().empty());
  CHECK(s.num() == LaurentPoly(MultiPoly::one() + qpow(1)));

  // 1/(1-q) + q/(1-q) = (1+q)/(1-q), atom kept
  FactoredRat t1 = FactoredRat::one();
  t1.div_factor(1, exps_q(1));
  FactoredRat t2(LaurentPoly::monomial(1, exps_q(1)));
  t2.div_factor(1, exps_q(1));
  FactoredRat s2 = ratfunc_sum({t1, t2});
  REQUIRE(s2.den().size() == 1);
  CHECK(s2.den().begin()->second == 1);
  CHECK(s2.num() == LaurentPoly(MultiPoly::one() + qpow(1)));
}

TEST_CASE("ratfunc_sum agrees with termwise evaluation") {
  std::mt19937_64 rng(2024);
  for (int iter = 0; iter < 10; ++iter) {
    std::vector<FactoredRat> terms;
    std::uniform_int_distribution<int> kk(1, 4), mm(1, 5);
    for (int i = 0; i < 4; ++i) {
      FactoredRat t(LaurentPoly::monomial(rnd_rat(rng), exps_q(kk(rng))));
      for (int j = 0; j < kk(rng); ++j) t.div_factor(1, exps_q(mm(rng)));
      t.div_factor(Rat(1, 2), exps_sub(exps_var(VA, 1), exps_q(mm(rng))));
      terms.push_back(t);
    }
    FactoredRat s = ratfunc_sum(terms);
    std::array<Rat, NVARS> pt{Rat(3, 7), Rat(5, 2), Rat(1), Rat(1), Rat(1)};
    Rat expect = 0;
    for (const auto& t : terms) expect += t.eval(pt);
    CHECK(s.eval(pt) == expect);
  }
}

TEST_CASE("factored rat substitution is evaluation-compatible") {
  FactoredRat t = FactoredRat::one();
  t.mul_factor(1, exps_add(exps_var(VA, 1), exps_q(2)));           // (1 - a q^2)
  t.div_factor(1, exps_sub(exps_q(3), exps_var(VA, 1)));           // 1/(1 - q^3/a)
  t.div_factor(Rat(-1), exps_add(exps_var(VA, 2), exps_q(1)));     // 1/(1 + a^2 q)
  FactoredRat s = t.substitute(VA, -1, 5);  // a := -q^5
  std::array<Rat, NVARS> pt{Rat(2, 5), Rat(1), Rat(1), Rat(1), Rat(1)};
  std::array<Rat, NVARS> pta = pt;
  Rat q5;
  mpz_pow_ui(q5.get_num_mpz_t(), pt[VQ].get_num_mpz_t(), 5);
  mpz_pow_ui(q5.get_den_mpz_t(), pt[VQ].get_den_mpz_t(), 5);
  q5.canonicalize();
  pta[VA] = -q5;
  CHECK(s.eval(pt) == t.eval(pta));
}

#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <vector>

#include "qcong/congruence.hpp"
#include "qcong/numtheory.hpp"
#include "qcong/qseries.hpp"

using namespace qcong;

namespace {

MultiPoly qpow(int e) { return MultiPoly::variable(VQ, e); }

// ---------------------------------------------------------------------------
// Independent oracle: dense univariate polynomials over Q, with their own
// remainder/division code (no reuse of the sparse MultiPoly routines).
// ---------------------------------------------------------------------------
using Dense = std::vector<Rat>;  // coefficient of q^i at index i

Dense dense_from(const MultiPoly& p) {
  Dense d(static_cast<std::size_t>(p.degree(VQ)) + 1, Rat(0));
  for (const auto& [e, c] : p.terms()) {
    REQUIRE(e[VA] == 0);
    d[static_cast<std::size_t>(e[VQ])] = c;
  }
  while (d.size() > 1 && d.back() == 0) d.pop_back();
  return d;
}

bool dense_is_zero(const Dense& p) {
  for (const auto& c : p)
    if (c != 0) return false;
  return true;
}

Dense dense_mul(const Dense& x, const Dense& y) {
  Dense r(x.size() + y.size() - 1, Rat(0));
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < y.size(); ++j) r[i + j] += x[i] * y[j];
  while (r.size() > 1 && r.back() == 0) r.pop_back();
  return r;
}

Dense dense_sub(Dense x, const Dense& y) {
  if (y.size() > x.size()) x.resize(y.size(), Rat(0));
  for (std::size_t i = 0; i < y.size(); ++i) x[i] -= y[i];
  while (x.size() > 1 && x.back() == 0) x.pop_back();
  return x;
}

// Quotient and remainder by a polynomial with invertible leading coefficient.
void dense_divmod(const Dense& p, const Dense& d, Dense& quo, Dense& rem) {
  rem = p;
  quo.assign(p.size(), Rat(0));
  while (!dense_is_zero(rem) && rem.size() >= d.size()) {
    std::size_t shift = rem.size() - d.size();
    Rat c = rem.back() / d.back();
    quo[shift] = c;
    for (std::size_t i = 0; i < d.size(); ++i) rem[shift + i] -= c * d[i];
    while (rem.size() > 1 && rem.back() == 0) rem.pop_back();
  }
  while (quo.size() > 1 && quo.back() == 0) quo.pop_back();
}

int dense_valuation(const Dense& p, const Dense& d) {
  REQUIRE(!dense_is_zero(p));
  Dense cur = p, quo, rem;
  int v = 0;
  for (;;) {
    dense_divmod(cur, d, quo, rem);
    if (!dense_is_zero(rem)) return v;
    ++v;
    cur = quo;
  }
}

Rat rnd_rat(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-6, 6), den(1, 6);
  int n = 0;
  while (n == 0) n = num(rng);
  Rat r(n, den(rng));
  r.canonicalize();
  return r;
}

// ---------------------------------------------------------------------------
// Summand builders for the small worked instances.
// ---------------------------------------------------------------------------

// [4k+1] (q;q^2)_k^6/(q^2;q^2)_k^6 q^k
SeriesSpec lhs_sixth_power() {
  SeriesSpec s;
  s.base_t = 2;
  for (int i = 0; i < 6; ++i) s.upper.push_back(pe_q(1));
  for (int i = 0; i < 6; ++i) s.lower.push_back(pe_q(2));
  s.arg = pe_q(1);
  s.vwp = pe_q(1);
  s.vwp_step = 4;
  return s;
}

// (q;q^2)_k^4/(q^2;q^2)_k^4 q^{2k}
SeriesSpec rhs_fourth_power() {
  SeriesSpec s;
  s.base_t = 2;
  for (int i = 0; i < 4; ++i) s.upper.push_back(pe_q(1));
  for (int i = 0; i < 4; ++i) s.lower.push_back(pe_q(2));
  s.arg = pe_q(2);
  return s;
}

}  // namespace

TEST_CASE("modulus expansion") {
  auto ex = Modulus::qint(12).expand();
  std::vector<std::pair<long, int>> want{{2, 1}, {3, 1}, {4, 1}, {6, 1}, {12, 1}};
  CHECK(ex.cyclotomic == want);
  CHECK(ex.mixed.empty());

  auto exn = Modulus::cyclotomic_neg(9).expand();
  CHECK(exn.cyclotomic == std::vector<std::pair<long, int>>{{18, 1}});

  auto exp2 = Modulus::one_plus_qpow(6).expand();
  CHECK(exp2.cyclotomic ==
        std::vector<std::pair<long, int>>{{4, 1}, {12, 1}});

  // (1+q^m) * [m] = 1 - q^{2m} up to sign: together they cover divisors of 2m
  for (long m : {2L, 5L, 6L}) {
    Modulus both = Modulus::one_plus_qpow(m) * Modulus::qint(m);
    auto exb = both.expand();
    std::vector<std::pair<long, int>> expect;
    for (long d : divisors(2 * m))
      if (d > 1) expect.push_back({d, 1});
    CHECK(exb.cyclotomic == expect);
  }
}

TEST_CASE("central binomial modulus matches the polynomial") {
  for (long n : {3L, 4L, 6L}) {
    // Expand qbinomial(2n, n) to an honest polynomial.
    FactoredRat b = qbinomial(2 * n, n);
    MultiPoly den = MultiPoly::one();
    for (const auto& [atom, mult] : b.den())
      for (int i = 0; i < mult; ++i) den *= atom.poly();
    auto quo = poly_exact_div(b.num().body(), den);
    REQUIRE(quo.has_value());
    MultiPoly poly = *quo;
    for (long d = 2; d <= 2 * n; ++d) {
      int expect = static_cast<int>((2 * n) / d - 2 * (n / d));
      CHECK(valuation(poly * (MultiPoly::one() + qpow(1)),
                      cyclotomic(d)) -
                valuation(MultiPoly::one() + qpow(1), cyclotomic(d)) ==
            expect);
    }
    auto ex = Modulus::qbinom_2nn(n).expand();
    for (const auto& [d, e] : ex.cyclotomic)
      CHECK(e == valuation(poly, cyclotomic(d)));
  }
}

TEST_CASE("basic verdicts") {
  FactoredRat a = FactoredRat::from_poly(qint(3) * qint(3));
  CHECK(check_zero(a, Modulus::cyclotomic(3, 2)).passed());

  FactoredRat b = FactoredRat::from_poly(MultiPoly::one() + qpow(1));
  CHECK(check_zero(b, Modulus::cyclotomic(3)).verdict == Verdict::Fail);

  FactoredRat c =
      FactoredRat::from_poly(cyclotomic(5) * (MultiPoly::one() + qpow(1)));
  CHECK(check_zero(c, Modulus::cyclotomic(5)).passed());
}

TEST_CASE("sixth power sum instance at n = 3") {
  // LHS(n=3) == [3] q^{-1} RHS-sum(n=3) mod [3] Phi_3^2
  FactoredRat lhs = truncated_sum(lhs_sixth_power(), 2);
  FactoredRat rhs = truncated_sum(rhs_fourth_power(), 1);
  rhs.mul_num(qint_any(3));
  rhs.mul_monomial(1, exps_q(-1));
  Modulus m = Modulus::qint(3) * Modulus::cyclotomic(3, 2);
  CheckResult res = check_congruent(lhs, rhs, m);
  CHECK(res.passed());
  // detail: Phi_3 with required 3
  REQUIRE(res.detail.size() == 1);
  CHECK(res.detail[0].required == 3);
  CHECK(res.detail[0].achieved >= 3);

  // A perturbed right-hand side must fail.
  FactoredRat bad = rhs;
  bad.mul_monomial(1, exps_q(1));
  CHECK(check_congruent(lhs, bad, m).verdict == Verdict::Fail);
}

TEST_CASE("vanishing sum instances") {
  // sum_{k=0}^{1} [6k+1] (q;q^3)_k^4/(q^3;q^3)_k^4 q^k == 0 mod [2] Phi_2
  SeriesSpec s;
  s.base_t = 3;
  for (int i = 0; i < 4; ++i) s.upper.push_back(pe_q(1));
  for (int i = 0; i < 4; ++i) s.lower.push_back(pe_q(3));
  s.arg = pe_q(1);
  s.vwp = pe_q(1);
  s.vwp_step = 6;
  CHECK(check_zero(truncated_sum(s, 1),
                   Modulus::qint(2) * Modulus::cyclotomic(2))
            .passed());

  // sum_{k=0}^{(n+1)/2} [4k+1] (q^{-1};q^2)_k^2 (q;q^2)_k^2
  //   / ((q^4;q^2)_k^2 (q^2;q^2)_k^2) q^{4k} == 0 mod [5] Phi_5^2 at n = 5
  SeriesSpec t;
  t.base_t = 2;
  t.upper = {pe_q(-1), pe_q(-1), pe_q(1), pe_q(1)};
  t.lower = {pe_q(4), pe_q(4), pe_q(2), pe_q(2)};
  t.arg = pe_q(4);
  t.vwp = pe_q(1);
  t.vwp_step = 4;
  CHECK(check_zero(truncated_sum(t, 3),
                   Modulus::qint(5) * Modulus::cyclotomic(5, 2))
            .passed());
}

TEST_CASE("soundness against a dense univariate oracle") {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> dd(2, 8), ee(1, 3), tt(1, 3), mm(1, 6),
      deg(0, 6);
  int checked = 0;
  for (int iter = 0; iter < 50; ++iter) {
    long d = dd(rng);
    int e = ee(rng);
    // Random rational functions with pure-q atoms; bias A toward having a
    // Phi_d^j factor so both verdicts occur.
    auto rand_fr = [&](MultiPoly& outnum, MultiPoly& outden) {
      MultiPoly num;
      int topdeg = deg(rng) + 1;
      for (int i = 0; i <= topdeg; ++i) num.add_term(rnd_rat(rng), exps_q(i));
      if (num.is_zero()) num = MultiPoly::one();
      int boost = std::uniform_int_distribution<int>(0, e)(rng);
      for (int i = 0; i < boost; ++i) num *= cyclotomic(d);
      FactoredRat f = FactoredRat::from_poly(num);
      MultiPoly denp = MultiPoly::one();
      for (int i = 0, na = tt(rng); i < na; ++i) {
        int m = mm(rng);
        f.div_factor(1, exps_q(m));
        denp *= MultiPoly::one() - qpow(m);
      }
      outnum = num;
      outden = denp;
      return f;
    };
    MultiPoly na, da, nb, db;
    FactoredRat A = rand_fr(na, da);
    FactoredRat B = rand_fr(nb, db);

    CheckResult mine = check_congruent(A, B, Modulus::cyclotomic(d, e));
    REQUIRE(mine.verdict != Verdict::Skipped);

    // Oracle: difference numerator over the full product denominator, all in
    // dense univariate arithmetic. The numerators carry no q-shift here.
    Dense diff = dense_sub(dense_mul(dense_from(na), dense_from(db)),
                           dense_mul(dense_from(nb), dense_from(da)));
    Dense phi = dense_from(cyclotomic(d));
    if (dense_is_zero(diff)) {
      CHECK(mine.passed());
      continue;
    }
    int denv = dense_valuation(dense_mul(dense_from(da), dense_from(db)), phi);
    int achieved = dense_valuation(diff, phi) - denv;
    CHECK(mine.detail.size() == 1);
    CHECK(mine.detail[0].achieved == achieved);
    CHECK(mine.passed() == (achieved >= e));
    ++checked;
  }
  CHECK(checked >= 40);
}

TEST_CASE("symmetry and exponent monotonicity") {
  std::mt19937_64 rng(4321);
  std::uniform_int_distribution<int> dd(2, 6), mm(1, 5), deg(0, 5);
  for (int iter = 0; iter < 12; ++iter) {
    long d = dd(rng);
    auto rand_fr = [&] {
      MultiPoly num;
      for (int i = 0, td = deg(rng) + 1; i <= td; ++i)
        num.add_term(rnd_rat(rng), exps_q(i));
      if (num.is_zero()) num = MultiPoly::one();
      if (iter % 2) num *= cyclotomic(d);
      FactoredRat f = FactoredRat::from_poly(num);
      f.div_factor(1, exps_q(mm(rng)));
      return f;
    };
    FactoredRat A = rand_fr(), B = rand_fr();
    for (int e = 1; e <= 3; ++e) {
      Modulus m = Modulus::cyclotomic(d, e);
      CheckResult ab = check_congruent(A, B, m);
      CheckResult ba = check_congruent(B, A, m);
      CHECK(ab.verdict == ba.verdict);
      CHECK(ab.detail[0].achieved == ba.detail[0].achieved);
      if (e > 1 && ab.passed())
        CHECK(check_congruent(A, B, Modulus::cyclotomic(d, e - 1)).passed());
    }
  }
}

TEST_CASE("checking mod [n] equals checking every cyclotomic divisor") {
  std::mt19937_64 rng(777);
  std::uniform_int_distribution<int> nn(2, 10), deg(0, 8);
  for (int iter = 0; iter < 10; ++iter) {
    long n = nn(rng);
    MultiPoly num;
    for (int i = 0, td = deg(rng) + 1; i <= td; ++i)
      num.add_term(rnd_rat(rng), exps_q(i));
    if (num.is_zero()) num = MultiPoly::one();
    if (iter % 3 == 0) num *= qint(n);
    FactoredRat A = FactoredRat::from_poly(num);
    bool whole = check_zero(A, Modulus::qint(n)).passed();
    bool each = true;
    for (long d : divisors(n))
      if (d > 1) each = each && check_zero(A, Modulus::cyclotomic(d)).passed();
    CHECK(whole == each);
  }
}

TEST_CASE("mixed modulus factors") {
  long n = 4;
  // (1 - a q^n) * (1 + q + a) is divisible by 1 - a q^n
  FactoredRat good = FactoredRat::one();
  good.mul_factor(1, exps_add(exps_var(VA, 1), exps_q(static_cast<int>(n))));
  good.mul_num(MultiPoly::one() + qpow(1) + MultiPoly::variable(VA));
  CHECK(check_zero(good, Modulus::one_minus_aqn(n)).passed());
  CHECK_FALSE(check_zero(good, Modulus::a_minus_qn(n)).passed());

  FactoredRat bad = good;
  bad.mul_num(MultiPoly::one() + qpow(2));
  bad = ratfunc_sum({bad, FactoredRat::one()});
  CHECK(check_zero(bad, Modulus::one_minus_aqn(n)).verdict == Verdict::Fail);

  // (a - q^n)(1 - a q^n)(1 - a^2 q^{2n}) style: the symmetric factor needs
  // vanishing at both a = q^{-n} and a = -q^{-n}.
  FactoredRat sym = FactoredRat::one();
  sym.mul_factor(1, exps_add(exps_var(VA, 2), exps_q(static_cast<int>(2 * n))));
  CHECK(check_zero(sym, Modulus::one_minus_a2q2n(n)).passed());
  FactoredRat half = FactoredRat::one();
  half.mul_factor(1, exps_add(exps_var(VA, 1), exps_q(static_cast<int>(n))));
  CHECK(check_zero(half, Modulus::one_minus_a2q2n(n)).verdict == Verdict::Fail);

  // Denominator atom that collides with the modulus factor -> Skipped.
  FactoredRat col = FactoredRat::one();
  col.div_factor(1, exps_add(exps_var(VA, 1), exps_q(static_cast<int>(n))));
  CheckResult res = check_zero(col, Modulus::one_minus_aqn(n));
  CHECK(res.verdict == Verdict::Skipped);
  CHECK(res.reason.find("NonCoprimeDenominator") != std::string::npos);
}

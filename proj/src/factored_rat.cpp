#include "qcong/factored_rat.hpp"

#include <sstream>

namespace qcong {

MultiPoly DenAtom::poly() const {
  MultiPoly p = MultiPoly::monomial(1, neg_part());
  p.add_term(-c, pos_part());
  return p;
}

Rat DenAtom::eval_poly(const std::array<Rat, NVARS>& point) const {
  return poly().eval(point);
}

int DenAtom::cyclotomic_content(long d) const {
  if (d < 2 || !is_pure_q()) return 0;
  long m = mon[VQ];
  if (m == 0) return 0;
  if (m < 0) m = -m;
  // Roots of X^neg - c X^pos in q are the m-th roots of 1/c (or of c for
  // negative m; same root set up to inversion, and roots of unity are closed
  // under inversion). A primitive d-th root of unity occurs iff c = 1 and
  // d | m, or c = -1 and d | 2m but d does not divide m. Binomials have
  // simple roots, so the content is 0 or 1.
  if (c == 1) return d > 1 && m % d == 0 ? 1 : 0;
  if (c == -1) return (2 * m) % d == 0 && m % d != 0 ? 1 : 0;
  return 0;
}

std::string DenAtom::str() const {
  static const char* names[NVARS] = {"q", "a", "b", "c", "d"};
  std::ostringstream os;
  os << "(1 - " << c.get_str();
  for (int i = 0; i < NVARS; ++i) {
    if (mon[i] == 0) continue;
    os << "*" << names[i];
    if (mon[i] != 1) os << "^" << mon[i];
  }
  os << ")";
  return os.str();
}

void FactoredRat::mul_factor(const Rat& c, const Exps& mon) {
  DenAtom a{c, mon};
  if (a.is_const()) {
    num_ = num_.mul_monomial(Rat(1) - c, exps_zero());
    return;
  }
  // 1 - c X^mon = (X^neg - c X^pos) / X^neg
  num_ *= LaurentPoly(a.poly());
  num_ = num_.mul_monomial(1, exps_neg(a.neg_part()));
}

void FactoredRat::div_factor(const Rat& c, const Exps& mon, int mult) {
  if (mult == 0) return;
  if (mult < 0) throw std::invalid_argument("div_factor: negative multiplicity");
  DenAtom a{c, mon};
  if (a.is_const()) {
    Rat v = Rat(1) - c;
    if (v == 0) throw SingularTerm("division by the zero factor " + a.str());
    Rat inv = 1 / v;
    Rat pw = 1;
    for (int i = 0; i < mult; ++i) pw *= inv;
    num_ = num_.mul_monomial(pw, exps_zero());
    return;
  }
  Exps neg = a.neg_part();
  Exps credit = exps_zero();
  for (int i = 0; i < NVARS; ++i) credit[i] = neg[i] * mult;
  num_ = num_.mul_monomial(1, credit);
  den_[a] += mult;
}

void FactoredRat::mul(const FactoredRat& o) {
  num_ *= o.num_;
  for (const auto& [a, m] : o.den_) den_[a] += m;
}

namespace {

Rat rat_pow(const Rat& x, long e) {
  if (e == 0) return Rat(1);
  Rat base = e > 0 ? x : Rat(x.get_den(), x.get_num());
  unsigned long n = e > 0 ? e : -e;
  Rat pw;
  mpz_pow_ui(pw.get_num_mpz_t(), base.get_num_mpz_t(), n);
  mpz_pow_ui(pw.get_den_mpz_t(), base.get_den_mpz_t(), n);
  pw.canonicalize();
  return pw;
}

}  // namespace

FactoredRat FactoredRat::substitute(int v, const Rat& c, std::int32_t qexp) const {
  // The stored value is num / prod (X^neg - c0 X^pos)^m. Substituting
  // v := c q^qexp maps the atom polynomial to
  //   c^{neg_v} * X^{neg*} * (1 - c' X^{mon'})
  // with c' = c0 c^{e_v}, mon' = mon with the v-slot folded into q, and
  // neg* the image of X^neg. Dividing the substituted numerator by the new
  // atom and compensating by the leftover monomial keeps the value exact.
  FactoredRat r(num_.substitute(v, c, qexp));
  for (const auto& [a, m] : den_) {
    std::int32_t ev = a.mon[v];
    if (ev == 0) {
      r.den_[a] += m;
      continue;
    }
    if (c == 0) throw std::domain_error("substituting 0 into an atom");
    Rat cprime = a.c * rat_pow(c, ev);
    Exps monp = a.mon;
    monp[v] = 0;
    monp[VQ] += qexp * ev;
    Exps nega = a.neg_part();
    std::int32_t negv = nega[v];
    Exps negstar = nega;
    negstar[v] = 0;
    negstar[VQ] += qexp * negv;
    DenAtom na{cprime, monp};
    if (na.is_const() && cprime == 1)
      throw SingularTerm("denominator atom vanishes under substitution: " + a.str());
    // num' gains (c^{-neg_v} X^{neg' - neg*})^m; div_factor credits X^{neg'}.
    Rat adjc = rat_pow(c, -static_cast<long>(negv) * m);
    Exps adje = exps_zero();
    for (int i = 0; i < NVARS; ++i) adje[i] = -negstar[i] * m;
    r.num_ = r.num_.mul_monomial(adjc, adje);
    r.div_factor(cprime, monp, m);
  }
  return r;
}

Rat FactoredRat::eval(const std::array<Rat, NVARS>& point) const {
  Rat v = num_.eval(point);
  for (const auto& [a, m] : den_) {
    Rat av = a.eval_poly(point);
    if (av == 0) throw SingularTerm("evaluation at a denominator zero: " + a.str());
    for (int i = 0; i < m; ++i) v /= av;
  }
  return v;
}

std::string FactoredRat::str() const {
  std::ostringstream os;
  os << num_.str();
  for (const auto& [a, m] : den_) {
    os << " / " << a.str();
    if (m != 1) os << "^" << m;
  }
  return os.str();
}

FactoredRat ratfunc_sum(const std::vector<FactoredRat>& terms) {
  if (terms.empty()) return FactoredRat::zero();
  AtomSet uni;
  for (const auto& t : terms)
    for (const auto& [a, m] : t.den())
      if (int& u = uni[a]; m > u) u = m;
  LaurentPoly total;
  for (const auto& t : terms) {
    LaurentPoly n = t.num();
    for (const auto& [a, m] : uni) {
      auto it = t.den().find(a);
      int have = it == t.den().end() ? 0 : it->second;
      MultiPoly ap = a.poly();
      for (int i = have; i < m; ++i) n *= LaurentPoly(ap);
    }
    total += n;
  }
  FactoredRat r(std::move(total));
  r.den_ = std::move(uni);
  return r;
}

}  // namespace qcong

#ifndef QCONG_FACTORED_RAT_HPP
#define QCONG_FACTORED_RAT_HPP

#include <map>
#include <vector>

#include "qcong/multipoly.hpp"

namespace qcong {

struct SingularTerm : std::runtime_error {
  explicit SingularTerm(const std::string& what) : std::runtime_error(what) {}
};

// A denominator atom records the factor 1 - c * X^mon (X = (q,a,b,c,d), mon
// any integer vector, c a nonzero rational). Negative exponents are cleared
// by the identity
//   1 - c X^mon = (X^neg - c X^pos) / X^neg,   mon = pos - neg,
// so the atom *as stored in a denominator* stands for the polynomial
// X^neg - c X^pos, with the clearing monomial X^neg credited to the
// numerator at insertion time. (c, mon) is a canonical key.
struct DenAtom {
  Rat c;
  Exps mon;

  bool is_const() const {
    for (int i = 0; i < NVARS; ++i)
      if (mon[i] != 0) return false;
    return true;
  }
  bool is_pure_q() const {
    for (int i = 1; i < NVARS; ++i)
      if (mon[i] != 0) return false;
    return true;
  }
  Exps pos_part() const {
    Exps r = exps_zero();
    for (int i = 0; i < NVARS; ++i) r[i] = mon[i] > 0 ? mon[i] : 0;
    return r;
  }
  Exps neg_part() const {
    Exps r = exps_zero();
    for (int i = 0; i < NVARS; ++i) r[i] = mon[i] < 0 ? -mon[i] : 0;
    return r;
  }
  // The cleared polynomial X^neg - c X^pos.
  MultiPoly poly() const;
  // Exact value of the cleared polynomial at a rational point.
  Rat eval_poly(const std::array<Rat, NVARS>& point) const;
  // 1 if Phi_d divides the cleared polynomial (d >= 2), else 0. The cleared
  // polynomial is a binomial, so the cyclotomic valuation is at most 1.
  int cyclotomic_content(long d) const;

  bool operator<(const DenAtom& o) const {
    if (mon != o.mon) return mon < o.mon;
    return c < o.c;
  }
  bool operator==(const DenAtom& o) const { return mon == o.mon && c == o.c; }

  std::string str() const;
};

using AtomSet = std::map<DenAtom, int>;  // atom -> multiplicity

// Rational function kept as an expanded Laurent numerator over a multiset of
// unexpanded denominator atoms. Denominators are never reduced against the
// numerator here; congruence checking interprets them by valuation.
class FactoredRat {
 public:
  FactoredRat() : num_(LaurentPoly::one()) {}
  explicit FactoredRat(LaurentPoly num) : num_(std::move(num)) {}

  static FactoredRat zero() { return FactoredRat(LaurentPoly::zero()); }
  static FactoredRat one() { return FactoredRat(); }
  static FactoredRat from_poly(const MultiPoly& p) {
    return FactoredRat(LaurentPoly(p));
  }

  const LaurentPoly& num() const { return num_; }
  const AtomSet& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  // Multiply the numerator in place.
  void mul_num(const LaurentPoly& p) { num_ *= p; }
  void mul_num(const MultiPoly& p) { num_ *= LaurentPoly(p); }
  void mul_monomial(const Rat& c, const Exps& e) { num_ = num_.mul_monomial(c, e); }

  // Multiply by the factor 1 - c X^mon (numerator side).
  void mul_factor(const Rat& c, const Exps& mon);
  // Divide by the factor 1 - c X^mon: constant factors fold into the
  // numerator, genuine atoms join the denominator multiset with the clearing
  // monomial credited to the numerator. Throws SingularTerm on a factor that
  // is identically zero.
  void div_factor(const Rat& c, const Exps& mon, int mult = 1);

  void mul(const FactoredRat& o);
  void div(const FactoredRat& o) = delete;  // never needed; atoms only

  FactoredRat substitute(int v, const Rat& c, std::int32_t qexp) const;

  Rat eval(const std::array<Rat, NVARS>& point) const;

  std::string str() const;

 private:
  friend FactoredRat ratfunc_sum(const std::vector<FactoredRat>& terms);
  LaurentPoly num_;
  AtomSet den_;
};

// Exact sum over the union denominator (max multiplicity per atom).
FactoredRat ratfunc_sum(const std::vector<FactoredRat>& terms);

}  // namespace qcong

#endif

#ifndef QCONG_QSERIES_HPP
#define QCONG_QSERIES_HPP

#include <functional>
#include <optional>
#include <vector>

#include "qcong/factored_rat.hpp"

namespace qcong {

// A series parameter: the monomial c * X^mon with X = (q, a, b, c, d).
// Negative exponents (q/a-type parameters) are legal; the factored-rational
// layer clears them against the atom's own monomial.
struct ParamExpr {
  Rat c = 1;
  Exps mon = exps_zero();
};

inline ParamExpr pe(const Rat& c, std::int32_t qexp = 0) {
  return ParamExpr{c, exps_q(qexp)};
}
inline ParamExpr pe_q(std::int32_t qexp) { return ParamExpr{1, exps_q(qexp)}; }
inline ParamExpr pe_var(int v, std::int32_t e = 1, std::int32_t qexp = 0,
                        const Rat& c = 1) {
  return ParamExpr{c, exps_add(exps_var(v, e), exps_q(qexp))};
}
inline ParamExpr pe_mon(const Rat& c, const Exps& mon) { return ParamExpr{c, mon}; }

// The q-integer [n] = 1 + q + ... + q^{n-1}, n >= 1.
MultiPoly qint(long n);
// (1 - q^n)/(1 - q) for any integer n; Laurent for n <= 0 ([0] = 0,
// [-1] = -q^{-1}, ...).
LaurentPoly qint_any(long n);

// The finite q-shifted factorial (x; q^t)_k = prod_{j=0}^{k-1} (1 - x q^{tj}).
LaurentPoly qpoch(const ParamExpr& x, int t, long k);

// Gaussian binomial coefficient [x choose k] in base q^t:
// (q^{t(x-k+1)}; q^t)_k / (q^t; q^t)_k for k >= 0, zero for k < 0.
FactoredRat qbinomial(long x, long k, int t = 1);

// Generic k-th summand of a (very-well-poised) basic hypergeometric style
// sum. term(k) is
//   vwp-multiplier(k)
//   * prod_u (u; q^t)_k / prod_l (l; q^t)_k
//   * (arg.c * X^{arg.mon})^k * q^{binom2_qexp * k(k-1)/2}
//   * extra(k).
// The very-well-poised multiplier is (1 - alpha q^{vwp_step*k})/(1 - alpha).
struct SeriesSpec {
  std::vector<ParamExpr> upper;
  std::vector<ParamExpr> lower;
  int base_t = 1;
  ParamExpr arg = pe(1);
  std::int32_t binom2_qexp = 0;
  std::optional<ParamExpr> vwp;
  int vwp_step = 2;
  std::function<FactoredRat(long)> extra;
};

FactoredRat term(const SeriesSpec& spec, long k);
FactoredRat truncated_sum(const SeriesSpec& spec, long M);

// Convenience builders used pervasively by the statement registry: multiply
// or divide a term by (x; q^t)_len ^ power.
void mul_poch(FactoredRat& t, const ParamExpr& x, int step, long len,
              int power = 1);
void div_poch(FactoredRat& t, const ParamExpr& x, int step, long len,
              int power = 1);

}  // namespace qcong

#endif

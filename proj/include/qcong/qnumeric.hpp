#ifndef QCONG_QNUMERIC_HPP
#define QCONG_QNUMERIC_HPP

#include <functional>
#include <stdexcept>
#include <string>

#include "qcong/bigfloat.hpp"
#include "qcong/congruence.hpp"

namespace qcong {

struct Inadmissible : std::runtime_error {
  explicit Inadmissible(const std::string& what) : std::runtime_error(what) {}
};

struct PrecisionExhausted : std::runtime_error {
  explicit PrecisionExhausted(const std::string& what)
      : std::runtime_error(what) {}
};

struct PoleAtNonpositiveInteger : std::runtime_error {
  explicit PoleAtNonpositiveInteger(const std::string& what)
      : std::runtime_error(what) {}
};

// Certified bound on the magnitude of the discarded tail.
struct TailBound {
  enum class Method { GeometricRatio, ProductLog };
  long trunc = 0;  // index of the first discarded term/factor
  BigFloat bound;
  Method method = Method::GeometricRatio;
};

struct NumericValue {
  BigComplex value;
  TailBound tail;
};

// (x; q)_k = prod_{j<k} (1 - x q^j), finite and exact up to rounding.
BigComplex qpoch_finite(const BigComplex& x, const BigComplex& q, long k);

// (x; q)_infty, truncated once the log-tail bound drops below tol.
// Requires |q| < 1.
NumericValue qpoch_infinite(const BigComplex& x, const BigComplex& q,
                            const BigFloat& tol);

// Sums term(0) + term(1) + ... with an eventual-geometric-ratio tail bound:
// once the observed term ratios stay below some rho < 1 on a window and the
// majorized tail |t_k| rho/(1-rho) is below tol, the sum is accepted.
NumericValue series_eval(const std::function<BigComplex(long)>& term,
                         const BigFloat& tol, long max_terms = 200000);

// Real Gamma; throws PoleAtNonpositiveInteger at 0, -1, -2, ...
BigFloat gamma_real(const BigFloat& x, long prec);

// Accelerated sum of the alternating series sum_k (-1)^k a_k, a_k >= 0,
// by Cohen, Rodriguez Villegas and Zagier's Chebyshev method with n stages
// (roughly 0.76 decimal digits gained per stage).
BigFloat sumalt(const std::function<BigFloat(long)>& a, long n, long prec);

// The alternating series sum_k (-1)^k (4k+1) ((1/2)_k / k!)^5 equals
// 2 / Gamma(3/4)^4; checks agreement to the given number of decimal digits.
CheckResult check_ramanujan_series(long digits = 30);

}  // namespace qcong

#endif

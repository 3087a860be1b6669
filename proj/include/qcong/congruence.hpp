#ifndef QCONG_CONGRUENCE_HPP
#define QCONG_CONGRUENCE_HPP

#include <string>
#include <vector>

#include "qcong/factored_rat.hpp"

namespace qcong {

enum class FactorKind {
  Cyclotomic,     // Phi_d(q), param = d
  CyclotomicNeg,  // Phi_n(-q) for odd n > 1; equals Phi_2n(q)
  QInteger,       // [n] = prod_{d|n, d>1} Phi_d
  OnePlusQPow,    // 1 + q^m = prod_{d | 2m, d -| m} Phi_d
  QBinomial2NN,   // the base-q binomial (2n choose n)_q, param = n
  OneMinusAQn,    // 1 - a q^n
  AMinusQn,       // a - q^n
  OneMinusA2Q2n,  // 1 - a^2 q^{2n}
};

struct ModFactor {
  FactorKind kind;
  long param = 0;
  int exp = 1;
};

struct Modulus {
  std::vector<ModFactor> factors;

  Modulus& operator*=(const ModFactor& f) {
    factors.push_back(f);
    return *this;
  }
  Modulus operator*(const Modulus& o) const {
    Modulus r = *this;
    for (const auto& f : o.factors) r.factors.push_back(f);
    return r;
  }

  static Modulus cyclotomic(long d, int e = 1) { return {{{FactorKind::Cyclotomic, d, e}}}; }
  static Modulus cyclotomic_neg(long n, int e = 1) {
    return {{{FactorKind::CyclotomicNeg, n, e}}};
  }
  static Modulus qint(long n, int e = 1) { return {{{FactorKind::QInteger, n, e}}}; }
  static Modulus one_plus_qpow(long m, int e = 1) {
    return {{{FactorKind::OnePlusQPow, m, e}}};
  }
  static Modulus qbinom_2nn(long n, int e = 1) {
    return {{{FactorKind::QBinomial2NN, n, e}}};
  }
  static Modulus one_minus_aqn(long n) { return {{{FactorKind::OneMinusAQn, n, 1}}}; }
  static Modulus a_minus_qn(long n) { return {{{FactorKind::AMinusQn, n, 1}}}; }
  static Modulus one_minus_a2q2n(long n) {
    return {{{FactorKind::OneMinusA2Q2n, n, 1}}};
  }
  static Modulus one() { return {}; }

  // Aggregate cyclotomic exponents (index d >= 2) plus the mixed factors.
  struct Expanded {
    std::vector<std::pair<long, int>> cyclotomic;  // (d, exponent), d ascending
    std::vector<ModFactor> mixed;
  };
  Expanded expand() const;

  std::string str() const;
};

enum class Verdict { Pass, Fail, Skipped };

struct FactorDetail {
  std::string factor;
  int required = 0;
  int achieved = 0;
};

struct CheckResult {
  Verdict verdict = Verdict::Skipped;
  std::string reason;  // set for Skipped
  std::vector<FactorDetail> detail;
  double time_ms = 0.0;

  bool passed() const { return verdict == Verdict::Pass; }
  static CheckResult skipped(std::string why) {
    CheckResult r;
    r.verdict = Verdict::Skipped;
    r.reason = std::move(why);
    return r;
  }
};

CheckResult check_congruent(const FactoredRat& A, const FactoredRat& B,
                            const Modulus& m);
CheckResult check_zero(const FactoredRat& A, const Modulus& m);

// Exact equality of two factored rational functions (cross-multiplied).
CheckResult check_equal(const FactoredRat& A, const FactoredRat& B);

// Checks sum(terms) == 0 mod Phi_d(q)^e without expanding the exact sum: the
// common-denominator numerator is accumulated in Q[q]/Phi_d(q)^e, so the
// q-degree stays below e * deg(Phi_d) throughout. Requires every denominator
// atom to be a unit mod Phi_d; if that fails, or the fast accumulation does
// not certify the congruence, the exact path decides.
CheckResult check_sum_zero_cyclotomic(const std::vector<FactoredRat>& terms,
                                      long d, int e);

}  // namespace qcong

#endif

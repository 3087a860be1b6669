#include "qcong/congruence.hpp"

#include <chrono>
#include <map>
#include <sstream>

#include "qcong/numtheory.hpp"
#include "qcong/quotring.hpp"

namespace qcong {

Modulus::Expanded Modulus::expand() const {
  std::map<long, int> cyc;
  Expanded out;
  for (const auto& f : factors) {
    switch (f.kind) {
      case FactorKind::Cyclotomic:
        if (f.param >= 2) cyc[f.param] += f.exp;
        // Phi_1 = q - 1 never appears in a modulus here; d = 1 is rejected.
        else
          throw std::invalid_argument("modulus: Cyclotomic(d) needs d >= 2");
        break;
      case FactorKind::CyclotomicNeg:
        if (f.param < 3 || f.param % 2 == 0)
          throw std::invalid_argument("modulus: Phi_n(-q) needs odd n > 1");
        cyc[2 * f.param] += f.exp;
        break;
      case FactorKind::QInteger:
        for (long d : divisors(f.param))
          if (d > 1) cyc[d] += f.exp;
        break;
      case FactorKind::OnePlusQPow:
        for (long d : divisors(2 * f.param))
          if (f.param % d != 0) cyc[d] += f.exp;
        break;
      case FactorKind::QBinomial2NN:
        for (long d = 2; d <= 2 * f.param; ++d) {
          int v = static_cast<int>((2 * f.param) / d - 2 * (f.param / d));
          if (v > 0) cyc[d] += v * f.exp;
        }
        break;
      default:
        out.mixed.push_back(f);
    }
  }
  out.cyclotomic.assign(cyc.begin(), cyc.end());
  return out;
}

std::string Modulus::str() const {
  if (factors.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const auto& f : factors) {
    if (!first) os << "*";
    first = false;
    switch (f.kind) {
      case FactorKind::Cyclotomic: os << "Phi_" << f.param << "(q)"; break;
      case FactorKind::CyclotomicNeg: os << "Phi_" << f.param << "(-q)"; break;
      case FactorKind::QInteger: os << "[" << f.param << "]"; break;
      case FactorKind::OnePlusQPow: os << "(1+q^" << f.param << ")"; break;
      case FactorKind::QBinomial2NN:
        os << "qbinom(" << 2 * f.param << "," << f.param << ")";
        break;
      case FactorKind::OneMinusAQn: os << "(1-a*q^" << f.param << ")"; break;
      case FactorKind::AMinusQn: os << "(a-q^" << f.param << ")"; break;
      case FactorKind::OneMinusA2Q2n:
        os << "(1-a^2*q^" << 2 * f.param << ")";
        break;
    }
    if (f.exp != 1) os << "^" << f.exp;
  }
  return os.str();
}

namespace {

struct Timer {
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  double ms() const {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - t0)
        .count();
  }
};

// Is the substituted numerator zero? (a := c q^e into the difference).
bool vanishes_at(const FactoredRat& D, const Rat& c, std::int32_t e) {
  // Only the numerator matters for divisibility by the coprime mixed factor,
  // but the substitution must be legal: no atom may vanish. substitute()
  // throws SingularTerm in that case.
  FactoredRat s = D.substitute(VA, c, e);
  return s.num().is_zero();
}

}  // namespace

CheckResult check_congruent(const FactoredRat& A, const FactoredRat& B,
                            const Modulus& m) {
  Timer tm;
  CheckResult res;
  Modulus::Expanded ex = m.expand();

  FactoredRat negB = B;
  negB.mul_monomial(-1, exps_zero());
  FactoredRat D = ratfunc_sum({A, negB});

  bool zero = D.num().is_zero();
  bool ok = true;
  for (const auto& [d, e] : ex.cyclotomic) {
    FactorDetail fd;
    fd.factor = "Phi_" + std::to_string(d);
    fd.required = e;
    if (zero) {
      fd.achieved = e;
    } else {
      int den_v = 0;
      for (const auto& [atom, mult] : D.den())
        den_v += mult * atom.cyclotomic_content(d);
      int num_v = valuation(D.num().body(), cyclotomic(d));
      fd.achieved = num_v - den_v;
    }
    ok = ok && fd.achieved >= fd.required;
    res.detail.push_back(std::move(fd));
  }
  for (const auto& f : ex.mixed) {
    if (f.exp != 1) {
      res.verdict = Verdict::Skipped;
      res.reason = "mixed modulus factor with exponent > 1 is unsupported";
      res.time_ms = tm.ms();
      return res;
    }
    FactorDetail fd;
    fd.required = 1;
    try {
      switch (f.kind) {
        case FactorKind::OneMinusAQn:
          fd.factor = "1-a*q^" + std::to_string(f.param);
          fd.achieved = (zero || vanishes_at(D, 1, -static_cast<std::int32_t>(f.param)))
                            ? 1
                            : 0;
          break;
        case FactorKind::AMinusQn:
          fd.factor = "a-q^" + std::to_string(f.param);
          fd.achieved =
              (zero || vanishes_at(D, 1, static_cast<std::int32_t>(f.param))) ? 1 : 0;
          break;
        case FactorKind::OneMinusA2Q2n:
          fd.factor = "1-a^2*q^" + std::to_string(2 * f.param);
          fd.achieved =
              (zero || (vanishes_at(D, 1, -static_cast<std::int32_t>(f.param)) &&
                        vanishes_at(D, -1, -static_cast<std::int32_t>(f.param))))
                  ? 1
                  : 0;
          break;
        default:
          throw std::logic_error("unexpected mixed factor");
      }
    } catch (const SingularTerm& ex2) {
      res.verdict = Verdict::Skipped;
      res.reason = std::string("NonCoprimeDenominator: ") + ex2.what();
      res.time_ms = tm.ms();
      return res;
    }
    ok = ok && fd.achieved >= fd.required;
    res.detail.push_back(std::move(fd));
  }
  res.verdict = ok ? Verdict::Pass : Verdict::Fail;
  res.time_ms = tm.ms();
  return res;
}

CheckResult check_zero(const FactoredRat& A, const Modulus& m) {
  return check_congruent(A, FactoredRat::zero(), m);
}

CheckResult check_sum_zero_cyclotomic(const std::vector<FactoredRat>& terms,
                                      long d, int e) {
  Timer tm;
  Modulus m = Modulus::cyclotomic(d, e);
  auto exact = [&]() { return check_zero(ratfunc_sum(terms), m); };
  if (terms.empty()) return check_zero(FactoredRat::zero(), m);

  MultiPoly modp = cyclotomic(d);
  for (int i = 1; i < e; ++i) modp *= cyclotomic(d);
  QuotRing ring(modp);

  // Forward accumulation over the running union denominator U_k: whenever a
  // term raises an atom multiplicity, the accumulator is multiplied up to the
  // new union first, so acc always equals the numerator of the partial sum
  // written over U_k. Pochhammer denominators are nested, so the union grows
  // by exactly the new factors of each term.
  QuotPoly acc = quot_from_laurent(terms[0].num(), ring);
  AtomSet have = terms[0].den();
  for (const auto& [atom, mult] : have)
    if (atom.cyclotomic_content(d) > 0) return exact();
  for (std::size_t k = 1; k < terms.size(); ++k) {
    for (const auto& [atom, mult] : terms[k].den()) {
      auto it = have.find(atom);
      int old = it == have.end() ? 0 : it->second;
      if (mult > old) {
        if (atom.cyclotomic_content(d) > 0) return exact();
        QuotPoly f = quot_from_atom(atom, ring);
        for (int i = old; i < mult; ++i) acc = quot_mul(acc, f, ring);
        have[atom] = mult;
      }
    }
    QuotPoly t = quot_from_laurent(terms[k].num(), ring);
    for (const auto& [atom, mult] : have) {
      auto it = terms[k].den().find(atom);
      int cur = it == terms[k].den().end() ? 0 : it->second;
      if (cur < mult) {
        QuotPoly f = quot_from_atom(atom, ring);
        for (int i = cur; i < mult; ++i) t = quot_mul(t, f, ring);
      }
    }
    for (const auto& [key, v] : t) quot_add(acc, key, v, ring.D);
  }
  if (!quot_is_zero(acc)) return exact();

  CheckResult res;
  res.verdict = Verdict::Pass;
  FactorDetail fd;
  fd.factor = "Phi_" + std::to_string(d);
  fd.required = e;
  fd.achieved = e;
  res.detail.push_back(fd);
  res.time_ms = tm.ms();
  return res;
}

CheckResult check_equal(const FactoredRat& A, const FactoredRat& B) {
  Timer tm;
  FactoredRat negB = B;
  negB.mul_monomial(-1, exps_zero());
  FactoredRat D = ratfunc_sum({A, negB});
  CheckResult res;
  res.verdict = D.num().is_zero() ? Verdict::Pass : Verdict::Fail;
  FactorDetail fd;
  fd.factor = "exact-equality";
  fd.required = 1;
  fd.achieved = res.verdict == Verdict::Pass ? 1 : 0;
  res.detail.push_back(fd);
  res.time_ms = tm.ms();
  return res;
}

}  // namespace qcong

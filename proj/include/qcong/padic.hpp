#ifndef QCONG_PADIC_HPP
#define QCONG_PADIC_HPP

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qcong/congruence.hpp"
#include "qcong/statements.hpp"

namespace qcong {

struct NotPAdicallyIntegral : std::runtime_error {
  explicit NotPAdicallyIntegral(const std::string& what)
      : std::runtime_error(what) {}
};

// Residue arithmetic mod p^m. Division is restricted to units.
class PadicInt {
 public:
  PadicInt(long p, int m) : p_(p), m_(m), mod_(pow_int(p, m)) {}

  static PadicInt from_int(const Int& x, long p, int m);
  // Requires v_p(den(x)) = 0; throws NotPAdicallyIntegral otherwise.
  static PadicInt from_rat(const Rat& x, long p, int m);

  long prime() const { return p_; }
  int precision() const { return m_; }
  const Int& modulus() const { return mod_; }
  const Int& residue() const { return r_; }

  PadicInt operator+(const PadicInt& o) const;
  PadicInt operator-(const PadicInt& o) const;
  PadicInt operator*(const PadicInt& o) const;
  PadicInt inv() const;  // throws std::domain_error on a non-unit
  PadicInt pow(long e) const;

  bool operator==(const PadicInt& o) const {
    return p_ == o.p_ && m_ == o.m_ && r_ == o.r_;
  }

  static Int pow_int(long p, int m);

 private:
  long p_;
  int m_;
  Int mod_;
  Int r_ = 0;
};

// p-adic valuation; x must be nonzero.
long padic_val(const Int& x, long p);
long padic_val(const Rat& x, long p);

// Morita's p-adic Gamma function of a p-adically integral rational, mod p^m
// (computed with two guard digits of continuity precision).
PadicInt padic_gamma(const Rat& x, long p, int m);

// Coefficients of q^1..q^N of q prod_{n>=1} (1-q^{2n})^4 (1-q^{4n})^4, the
// weight-4 form whose p-th coefficient enters the (M.2) supercongruence.
std::vector<Int> eta_product_coeffs(long N);

// Exact rising factorial x(x+1)...(x+k-1).
Rat pochhammer(const Rat& x, long k);

struct PadicStatement {
  std::string id;
  StatementKind kind;
  std::string summary;
  std::string domain;  // residue-class condition on the prime p
  int power;           // modulus exponent m the statement asserts
  std::function<bool(long)> admissible;  // on primes only
  std::function<CheckResult(long p, int m)> run;
};

const std::vector<PadicStatement>& padic_statements();
const PadicStatement* find_padic_statement(const std::string& id);

// Verdict at one prime; m <= 0 means the statement's own power.
CheckResult check_padic(const std::string& id, long p, int m = 0);

// Runs check_padic over all primes in [lo, hi] admissible for the statement.
ScanReport padic_scan(const std::string& id, long lo, long hi, int m = 0);

std::string padic_catalog_json();

}  // namespace qcong

#endif

#ifndef QCONG_MULTIPOLY_HPP
#define QCONG_MULTIPOLY_HPP

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qcong {

using Int = mpz_class;
using Rat = mpq_class;

// Variable slots of the symbolic carrier: q and four auxiliary parameters.
enum Var : int { VQ = 0, VA = 1, VB = 2, VC = 3, VD = 4 };
constexpr int NVARS = 5;

using Exps = std::array<std::int32_t, NVARS>;

inline Exps exps_zero() { return Exps{0, 0, 0, 0, 0}; }

inline Exps exps_add(const Exps& x, const Exps& y) {
  Exps r;
  for (int i = 0; i < NVARS; ++i) r[i] = x[i] + y[i];
  return r;
}

inline Exps exps_sub(const Exps& x, const Exps& y) {
  Exps r;
  for (int i = 0; i < NVARS; ++i) r[i] = x[i] - y[i];
  return r;
}

inline Exps exps_neg(const Exps& x) {
  Exps r;
  for (int i = 0; i < NVARS; ++i) r[i] = -x[i];
  return r;
}

inline Exps exps_q(std::int32_t e) {
  Exps r = exps_zero();
  r[VQ] = e;
  return r;
}

inline Exps exps_var(int v, std::int32_t e) {
  Exps r = exps_zero();
  r[v] = e;
  return r;
}

struct NotDivisible : std::runtime_error {
  NotDivisible() : std::runtime_error("exact polynomial division failed") {}
};

// Sparse exact polynomial over Q in (q, a, b, c, d), nonnegative exponents.
// Canonical: no zero coefficients stored.
class MultiPoly {
 public:
  using TermMap = std::map<Exps, Rat>;

  MultiPoly() = default;

  static MultiPoly zero() { return MultiPoly(); }
  static MultiPoly one() { return constant(1); }
  static MultiPoly constant(const Rat& c);
  static MultiPoly monomial(const Rat& c, const Exps& e);
  static MultiPoly variable(int v, std::int32_t e = 1);

  const TermMap& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  std::size_t size() const { return t_.size(); }

  bool operator==(const MultiPoly& o) const { return t_ == o.t_; }
  bool operator!=(const MultiPoly& o) const { return !(*this == o); }

  MultiPoly operator-() const;
  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator-(const MultiPoly& o) const;
  MultiPoly operator*(const MultiPoly& o) const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

  MultiPoly& add_term(const Rat& c, const Exps& e);
  MultiPoly mul_monomial(const Rat& c, const Exps& e) const;
  MultiPoly mul_scalar(const Rat& c) const;

  // Largest exponent of variable v (0 for the zero polynomial).
  std::int32_t degree(int v) const;
  // Componentwise minimum of all exponent vectors (zero vector if empty).
  Exps min_exps() const;
  bool uses_var(int v) const;

  Rat coeff(const Exps& e) const;
  Rat eval(const std::array<Rat, NVARS>& point) const;

  // Substitute variable v := c * q^qexp (used for a := q^{+-n}, a := -q^{-n}).
  // Result may have negative q-exponents; returned as (poly, qshift) pairs is
  // the LaurentPoly's job, so this returns a map handled by LaurentPoly.
  friend class LaurentPoly;

  std::string str() const;  // human-readable, for diagnostics

 private:
  TermMap t_;
};

MultiPoly operator*(const Rat& c, const MultiPoly& p);

// p = d * q exactly, or NotDivisible. Divisor's leading coefficient in its
// main variable must be a monomial (true for every divisor this project
// needs: cyclotomics are monic in q, a - q^n is monic in a, 1 - a q^n has
// leading coefficient -q^n). A divisor violating that raises
// std::invalid_argument; see the design notes.
std::optional<MultiPoly> poly_exact_div(const MultiPoly& p, const MultiPoly& d);

// Largest e with d^e | p. Requires p != 0 and d non-constant.
int valuation(const MultiPoly& p, const MultiPoly& d);

// MultiPoly with a global monomial shift (any variable, any sign), i.e.
// body * q^s0 a^s1 b^s2 c^s3 d^s4. Normalized: body's min_exps is zero
// componentwise; the zero value has shift 0.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(MultiPoly body, Exps shift);
  explicit LaurentPoly(MultiPoly body) : LaurentPoly(std::move(body), exps_zero()) {}

  static LaurentPoly zero() { return LaurentPoly(); }
  static LaurentPoly one() { return LaurentPoly(MultiPoly::one()); }
  static LaurentPoly monomial(const Rat& c, const Exps& e);

  const MultiPoly& body() const { return body_; }
  const Exps& shift() const { return shift_; }
  bool is_zero() const { return body_.is_zero(); }

  bool operator==(const LaurentPoly& o) const {
    return shift_ == o.shift_ && body_ == o.body_;
  }

  LaurentPoly operator-() const;
  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly& operator+=(const LaurentPoly& o) { return *this = *this + o; }
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

  LaurentPoly mul_monomial(const Rat& c, const Exps& e) const;

  Rat eval(const std::array<Rat, NVARS>& point) const;

  // Substitute variable v := c * q^qexp exactly.
  LaurentPoly substitute(int v, const Rat& c, std::int32_t qexp) const;
  // Substitute variable v := general Laurent value in q.
  LaurentPoly substitute(int v, const LaurentPoly& value) const;

  std::string str() const;

 private:
  void normalize();
  MultiPoly body_;
  Exps shift_ = exps_zero();
};

// Substitute a := value into p (p must only use q and a), per the exact-core
// contract. Thin wrapper over LaurentPoly::substitute.
LaurentPoly substitute_a(const MultiPoly& p, const LaurentPoly& value);

}  // namespace qcong

#endif

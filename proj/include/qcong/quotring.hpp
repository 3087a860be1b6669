#ifndef QCONG_QUOTRING_HPP
#define QCONG_QUOTRING_HPP

#include <array>
#include <map>
#include <vector>

#include "qcong/factored_rat.hpp"

namespace qcong {

// Arithmetic in Q[q]/(P) for a monic modulus P with P(0) != 0 (cyclotomic
// powers), used to accumulate large sums without letting the q-degree grow
// past deg(P). Elements are dense coefficient vectors of size deg(P).
struct QuotRing {
  long D = 0;
  std::vector<Rat> P;     // monic, size D + 1
  std::vector<Rat> qinv;  // q^{-1} mod P

  explicit QuotRing(const MultiPoly& modp) {
    D = modp.degree(VQ);
    P.assign(static_cast<std::size_t>(D + 1), Rat(0));
    for (const auto& [e, c] : modp.terms())
      P[static_cast<std::size_t>(e[VQ])] = c;
    qinv.assign(static_cast<std::size_t>(D), Rat(0));
    for (long i = 1; i <= D; ++i)
      qinv[static_cast<std::size_t>(i - 1)] = -P[static_cast<std::size_t>(i)] / P[0];
  }

  std::vector<Rat> mul(const std::vector<Rat>& x, const std::vector<Rat>& y) const {
    std::vector<Rat> r(static_cast<std::size_t>(2 * D - 1), Rat(0));
    for (long i = 0; i < D; ++i) {
      if (x[static_cast<std::size_t>(i)] == 0) continue;
      for (long j = 0; j < D; ++j) {
        if (y[static_cast<std::size_t>(j)] == 0) continue;
        r[static_cast<std::size_t>(i + j)] +=
            x[static_cast<std::size_t>(i)] * y[static_cast<std::size_t>(j)];
      }
    }
    // q^D = -(P - q^D) since P is monic.
    for (long i = 2 * D - 2; i >= D; --i) {
      if (r[static_cast<std::size_t>(i)] == 0) continue;
      Rat top = r[static_cast<std::size_t>(i)];
      r[static_cast<std::size_t>(i)] = 0;
      for (long j = 0; j < D; ++j)
        r[static_cast<std::size_t>(i - D + j)] -= top * P[static_cast<std::size_t>(j)];
    }
    r.resize(static_cast<std::size_t>(D));
    return r;
  }

  // c * q^e mod P, any sign of e.
  std::vector<Rat> qpow(const Rat& c, long e) const {
    std::vector<Rat> r(static_cast<std::size_t>(D), Rat(0));
    if (e >= 0 && e < D) {
      r[static_cast<std::size_t>(e)] = c;
      return r;
    }
    r[0] = c;
    std::vector<Rat> b;
    long m = e;
    if (e > 0) {
      b.assign(static_cast<std::size_t>(D), Rat(0));
      b[1] = 1;
    } else {
      b = qinv;
      m = -e;
    }
    while (m > 0) {
      if (m & 1) r = mul(r, b);
      m >>= 1;
      if (m > 0) b = mul(b, b);
    }
    return r;
  }
};

// Polynomial in (a, b, c, d) with signed exponents and coefficients in
// Q[q]/(P), keyed by the parameter exponent vector.
using ParamKey = std::array<std::int32_t, 4>;
using QuotPoly = std::map<ParamKey, std::vector<Rat>>;

inline ParamKey param_part(const Exps& e) {
  return ParamKey{e[VA], e[VB], e[VC], e[VD]};
}

inline bool quot_is_zero(const QuotPoly& p) {
  for (const auto& [k, v] : p)
    for (const auto& c : v)
      if (c != 0) return false;
  return true;
}

inline void quot_add(QuotPoly& dst, const ParamKey& key,
                     const std::vector<Rat>& v, long D) {
  auto it = dst.find(key);
  if (it == dst.end()) {
    dst.emplace(key, v);
    return;
  }
  for (long i = 0; i < D; ++i)
    it->second[static_cast<std::size_t>(i)] += v[static_cast<std::size_t>(i)];
}

inline void quot_add(QuotPoly& dst, const QuotPoly& src, long D) {
  for (const auto& [key, v] : src) quot_add(dst, key, v, D);
}

inline QuotPoly quot_mul(const QuotPoly& x, const QuotPoly& y,
                         const QuotRing& ring) {
  QuotPoly r;
  for (const auto& [kx, vx] : x)
    for (const auto& [ky, vy] : y) {
      ParamKey k;
      for (int i = 0; i < 4; ++i) k[i] = kx[i] + ky[i];
      quot_add(r, k, ring.mul(vx, vy), ring.D);
    }
  return r;
}

inline QuotPoly quot_mul_monomial(const QuotPoly& x, const Rat& c,
                                  const Exps& mon, const QuotRing& ring) {
  QuotPoly r;
  ParamKey shift = param_part(mon);
  std::vector<Rat> qm = ring.qpow(c, mon[VQ]);
  for (const auto& [kx, vx] : x) {
    ParamKey k;
    for (int i = 0; i < 4; ++i) k[i] = kx[i] + shift[i];
    r.emplace(k, ring.mul(vx, qm));
  }
  return r;
}

// x * (1 - c X^mon).
inline QuotPoly quot_mul_factor(const QuotPoly& x, const Rat& c,
                                const Exps& mon, const QuotRing& ring) {
  QuotPoly r = quot_mul_monomial(x, -c, mon, ring);
  quot_add(r, x, ring.D);
  return r;
}

inline QuotPoly quot_from_laurent(const LaurentPoly& p, const QuotRing& ring) {
  QuotPoly r;
  for (const auto& [e, c] : p.body().terms()) {
    Exps total = exps_add(p.shift(), e);
    quot_add(r, param_part(total), ring.qpow(c, total[VQ]), ring.D);
  }
  return r;
}

// The cleared denominator polynomial X^neg - c X^pos of an atom.
inline QuotPoly quot_from_atom(const DenAtom& atom, const QuotRing& ring) {
  QuotPoly r;
  Exps neg = atom.neg_part(), pos = atom.pos_part();
  quot_add(r, param_part(neg), ring.qpow(1, neg[VQ]), ring.D);
  quot_add(r, param_part(pos), ring.qpow(-atom.c, pos[VQ]), ring.D);
  return r;
}

}  // namespace qcong

#endif

#include "qcong/padic.hpp"

#include <sstream>

#include <nlohmann/json.hpp>

#include "qcong/numtheory.hpp"

namespace qcong {

Int PadicInt::pow_int(long p, int m) {
  Int r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(p),
                static_cast<unsigned long>(m));
  return r;
}

PadicInt PadicInt::from_int(const Int& x, long p, int m) {
  PadicInt r(p, m);
  mpz_mod(r.r_.get_mpz_t(), x.get_mpz_t(), r.mod_.get_mpz_t());
  return r;
}

PadicInt PadicInt::from_rat(const Rat& x, long p, int m) {
  if (mpz_divisible_ui_p(x.get_den().get_mpz_t(),
                         static_cast<unsigned long>(p)))
    throw NotPAdicallyIntegral("denominator divisible by " +
                               std::to_string(p));
  PadicInt r(p, m);
  Int dinv;
  if (!mpz_invert(dinv.get_mpz_t(), x.get_den().get_mpz_t(),
                  r.mod_.get_mpz_t()))
    throw NotPAdicallyIntegral("denominator not invertible mod p^m");
  Int t = x.get_num() * dinv;
  mpz_mod(r.r_.get_mpz_t(), t.get_mpz_t(), r.mod_.get_mpz_t());
  return r;
}

PadicInt PadicInt::operator+(const PadicInt& o) const {
  PadicInt r(p_, m_);
  Int t = r_ + o.r_;
  mpz_mod(r.r_.get_mpz_t(), t.get_mpz_t(), mod_.get_mpz_t());
  return r;
}

PadicInt PadicInt::operator-(const PadicInt& o) const {
  PadicInt r(p_, m_);
  Int t = r_ - o.r_;
  mpz_mod(r.r_.get_mpz_t(), t.get_mpz_t(), mod_.get_mpz_t());
  return r;
}

PadicInt PadicInt::operator*(const PadicInt& o) const {
  PadicInt r(p_, m_);
  Int t = r_ * o.r_;
  mpz_mod(r.r_.get_mpz_t(), t.get_mpz_t(), mod_.get_mpz_t());
  return r;
}

PadicInt PadicInt::inv() const {
  PadicInt r(p_, m_);
  if (!mpz_invert(r.r_.get_mpz_t(), r_.get_mpz_t(), mod_.get_mpz_t()))
    throw std::domain_error("PadicInt::inv: non-unit");
  return r;
}

PadicInt PadicInt::pow(long e) const {
  if (e < 0) return inv().pow(-e);
  PadicInt r(p_, m_);
  mpz_powm_ui(r.r_.get_mpz_t(), r_.get_mpz_t(),
              static_cast<unsigned long>(e), mod_.get_mpz_t());
  return r;
}

long padic_val(const Int& x, long p) {
  if (x == 0) throw std::invalid_argument("padic_val: zero");
  Int t = x;
  long v = 0;
  while (mpz_divisible_ui_p(t.get_mpz_t(), static_cast<unsigned long>(p))) {
    mpz_divexact_ui(t.get_mpz_t(), t.get_mpz_t(),
                    static_cast<unsigned long>(p));
    ++v;
  }
  return v;
}

long padic_val(const Rat& x, long p) {
  return padic_val(x.get_num(), p) - padic_val(x.get_den(), p);
}

PadicInt padic_gamma(const Rat& x, long p, int m) {
  if (p < 3 || !is_prime(p))
    throw std::invalid_argument("padic_gamma: p must be an odd prime");
  if (m < 1) throw std::invalid_argument("padic_gamma: m must be positive");
  // Continuity guard: an integer N with N = x mod p^{m+2} pins Gamma_p(x)
  // mod p^m (Gamma_p is 1-Lipschitz).
  PadicInt approx = PadicInt::from_rat(x, p, m + 2);
  Int N = approx.residue();
  Int pm = PadicInt::pow_int(p, m);
  // prod_{0<j<N, p -| j} j = (-1)^(N div p^m) * prod_{0<j<N mod p^m, p -| j} j
  // mod p^m by the generalized Wilson theorem for odd p.
  Int u = N / pm, v = N % pm;
  Int prod = 1;
  if (pm.fits_ulong_p()) {
    unsigned long pmu = pm.get_ui(), vu = v.get_ui(), pu =
        static_cast<unsigned long>(p);
    unsigned long long acc = 1;
    for (unsigned long j = 1; j < vu; ++j)
      if (j % pu != 0)
        acc = static_cast<unsigned long long>(
            static_cast<unsigned __int128>(acc) * j % pmu);
    prod = static_cast<unsigned long>(acc);
  } else {
    for (Int j = 1; j < v; ++j)
      if (!mpz_divisible_ui_p(j.get_mpz_t(), static_cast<unsigned long>(p))) {
        prod *= j;
        mpz_mod(prod.get_mpz_t(), prod.get_mpz_t(), pm.get_mpz_t());
      }
  }
  // Gamma_p(N) = (-1)^N * prod_{0<j<N, p -| j} j, and the block reduction
  // contributes another (-1)^u.
  bool negate =
      (mpz_odd_p(N.get_mpz_t()) != 0) != (mpz_odd_p(u.get_mpz_t()) != 0);
  Int r = negate ? pm - prod : prod;
  return PadicInt::from_int(r, p, m);
}

std::vector<Int> eta_product_coeffs(long N) {
  if (N < 1) throw std::invalid_argument("eta_product_coeffs: N must be >= 1");
  // f holds prod (1-q^{2n})^4 (1-q^{4n})^4 truncated to degree N-1; the
  // leading q of the eta product shifts everything up by one at the end.
  std::vector<Int> f(static_cast<std::size_t>(N), Int(0));
  f[0] = 1;
  auto mul_one_minus_qs = [&](long s) {
    for (long i = N - 1; i >= s; --i)
      f[static_cast<std::size_t>(i)] -= f[static_cast<std::size_t>(i - s)];
  };
  for (long n = 1; 2 * n <= N - 1; ++n)
    for (int t = 0; t < 4; ++t) mul_one_minus_qs(2 * n);
  for (long n = 1; 4 * n <= N - 1; ++n)
    for (int t = 0; t < 4; ++t) mul_one_minus_qs(4 * n);
  std::vector<Int> out(static_cast<std::size_t>(N), Int(0));
  for (long i = 1; i <= N; ++i)
    out[static_cast<std::size_t>(i - 1)] = f[static_cast<std::size_t>(i - 1)];
  return out;  // out[j] is the coefficient of q^{j+1}
}

Rat pochhammer(const Rat& x, long k) {
  if (k < 0) throw std::invalid_argument("pochhammer: negative length");
  Rat r = 1, f = x;
  for (long j = 0; j < k; ++j) {
    r *= f;
    f += 1;
  }
  r.canonicalize();
  return r;
}

namespace {

Rat half() { return Rat(1, 2); }

Rat rpow(const Rat& c, long e) {
  Rat r = 1, b = c;
  long m = e;
  while (m > 0) {
    if (m & 1) r *= b;
    b *= b;
    m >>= 1;
  }
  r.canonicalize();
  return r;
}

Rat rat_pow_long(long base, long e) { return rpow(Rat(base), e); }

// v_p(lhs - rhs) >= m as a CheckResult.
CheckResult cong(const Rat& lhs, const Rat& rhs, long p, int m) {
  Rat diff = lhs - rhs;
  diff.canonicalize();
  CheckResult res;
  FactorDetail fd;
  fd.factor = "p=" + std::to_string(p);
  fd.required = m;
  if (diff == 0) {
    fd.achieved = m;
  } else {
    long v = padic_val(diff, p);
    fd.achieved = static_cast<int>(v < -1000 ? -1000 : v);
  }
  res.verdict = fd.achieved >= fd.required ? Verdict::Pass : Verdict::Fail;
  res.detail.push_back(fd);
  return res;
}

// Generic truncated sum: sum_{k=0}^{K} f(k).
Rat rsum(long K, const std::function<Rat(long)>& f) {
  Rat s = 0;
  for (long k = 0; k <= K; ++k) s += f(k);
  s.canonicalize();
  return s;
}

Rat fact(long k) {
  Rat r = 1;
  for (long j = 2; j <= k; ++j) r *= j;
  return r;
}

// The alternating fifth-power Van Hamme sum to (p-1)/2.
Rat sum_a2(long p) {
  return rsum((p - 1) / 2, [](long k) -> Rat {
    Rat t = rpow(pochhammer(half(), k), 5) / rpow(fact(k), 5);
    t *= (4 * k + 1);
    if (k & 1) t = -t;
    return t;
  });
}

// The fourth-power (M.2) sum to (p-1)/2.
Rat sum_m2(long p) {
  return rsum((p - 1) / 2, [](long k) -> Rat {
    return rpow(pochhammer(half(), k), 4) / rpow(fact(k), 4);
  });
}

// The cubic (H.2) sum to (p-1)/2.
Rat sum_h2(long p) {
  return rsum((p - 1) / 2, [](long k) -> Rat {
    return rpow(pochhammer(half(), k), 3) / rpow(fact(k), 3);
  });
}

Rat gamma_rat(const Rat& x, long p, int m, long power) {
  return Rat(padic_gamma(x, p, m).pow(power).residue());
}

Rat gamma_rat_inv(const Rat& x, long p, int m, long power) {
  return Rat(padic_gamma(x, p, m).pow(power).inv().residue());
}

}  // namespace

const std::vector<PadicStatement>& padic_statements() {
  static const std::vector<PadicStatement> reg = [] {
    std::vector<PadicStatement> v;
    auto add = [&](std::string id, StatementKind kind, std::string summary,
                   std::string domain, int power,
                   std::function<bool(long)> adm,
                   std::function<CheckResult(long, int)> run) {
      v.push_back({std::move(id), kind, std::move(summary), std::move(domain),
                   power, std::move(adm), std::move(run)});
    };

    add("P-A2", StatementKind::Proved,
        "alternating fifth-power half sum matches -p/Gamma_p(3/4)^4 or 0 by "
        "p mod 4",
        "odd prime p", 3, [](long) { return true; },
        [](long p, int m) {
          Rat rhs = 0;
          if (p % 4 == 1) rhs = Rat(-p) * gamma_rat_inv(Rat(3, 4), p, m, 4);
          return cong(sum_a2(p), rhs, p, m);
        });

    add("P-M2", StatementKind::Proved,
        "fourth-power half sum matches the p-th coefficient of the "
        "eta(2z)^4 eta(4z)^4 expansion",
        "odd prime p", 3, [](long) { return true; },
        [](long p, int m) {
          Rat ap(eta_product_coeffs(p)[static_cast<std::size_t>(p - 1)]);
          return cong(sum_m2(p), ap, p, m);
        });

    add("P-LONG", StatementKind::Proved,
        "weighted sixth-power half sum matches p times the fourth-power sum",
        "prime p > 3", 4, [](long p) { return p > 3; },
        [](long p, int m) {
          Rat lhs = rsum((p - 1) / 2, [](long k) -> Rat {
            Rat t = rpow(pochhammer(half(), k), 6) / rpow(fact(k), 6);
            t *= (4 * k + 1);
            return t;
          });
          return cong(lhs, Rat(p) * sum_m2(p), p, m);
        });

    add("P-H2", StatementKind::Proved,
        "cubic half sum matches -Gamma_p(1/4)^4 or 0 by p mod 4",
        "odd prime p", 2, [](long) { return true; },
        [](long p, int m) {
          Rat rhs = 0;
          if (p % 4 == 1) rhs = -gamma_rat(Rat(1, 4), p, m, 4);
          return cong(sum_h2(p), rhs, p, m);
        });

    add("P-A2H2", StatementKind::Proved,
        "alternating fifth-power half sum matches p times the cubic half sum",
        "odd prime p", 3, [](long) { return true; },
        [](long p, int m) {
          return cong(sum_a2(p), Rat(p) * sum_h2(p), p, m);
        });

    add("P-D2", StatementKind::Proved,
        "weighted third-base sixth-power full sum matches a "
        "Gamma_p(1/3)^9 multiple by p mod 6",
        "prime p > 3", 6, [](long p) { return p > 3; },
        [](long p, int m) {
          Rat lhs = rsum(p - 1, [](long k) -> Rat {
            Rat t = rpow(pochhammer(Rat(1, 3), k), 6) / rpow(fact(k), 6);
            t *= (6 * k + 1);
            return t;
          });
          Rat g9 = gamma_rat(Rat(1, 3), p, m, 9);
          Rat rhs;
          if (p % 6 == 1)
            rhs = Rat(-p) * g9;
          else
            rhs = Rat(-10) * rat_pow_long(p, 4) / 27 * g9;
          rhs.canonicalize();
          return cong(lhs, rhs, p, m);
        });

    add("P-DIV1", StatementKind::Proved,
        "linear-weight cubic half sum with 4^k matches p",
        "odd prime p", 3, [](long) { return true; },
        [](long p, int m) {
          Rat lhs = rsum((p - 1) / 2, [](long k) -> Rat {
            Rat t = rpow(pochhammer(half(), k), 3) / rpow(fact(k), 3);
            t *= (3 * k + 1);
            t *= rat_pow_long(4, k);
            return t;
          });
          return cong(lhs, Rat(p), p, m);
        });

    add("P-ZUD55", StatementKind::Proved,
        "alternating linear-weight cubic half sum with 8^k matches "
        "(-1)^((p-1)/2) p",
        "odd prime p", 3, [](long) { return true; },
        [](long p, int m) {
          Rat lhs = rsum((p - 1) / 2, [](long k) -> Rat {
            Rat t = rpow(pochhammer(half(), k), 3) / rpow(fact(k), 3);
            t *= (3 * k + 1);
            t *= rat_pow_long(8, k);
            if (k & 1) t = -t;
            return t;
          });
          Rat rhs(p);
          if (((p - 1) / 2) % 2 == 1) rhs = -rhs;
          return cong(lhs, rhs, p, m);
        });

    add("P-4KM1COR", StatementKind::Proved,
        "alternating shifted fifth-power sum matches a signed p multiple of "
        "a cubic sum",
        "odd prime p", 3, [](long) { return true; },
        [](long p, int m) {
          long K = (p + 1) / 2;
          Rat lhs = rsum(K, [](long k) -> Rat {
            Rat t = rpow(pochhammer(Rat(-1, 2), k), 5) / rpow(fact(k), 5);
            t *= (4 * k - 1);
            if (k & 1) t = -t;
            return t;
          });
          Rat rhs = rsum(K, [](long k) -> Rat {
            return rpow(pochhammer(Rat(-1, 2), k), 2) *
                   pochhammer(Rat(3, 2), k) / rpow(fact(k), 3);
          });
          rhs *= p;
          if (((p + 1) / 2) % 2 == 1) rhs = -rhs;
          return cong(lhs, rhs, p, m);
        });

    add("P-2P3COR", StatementKind::Proved,
        "weighted mixed fourth-power half sum matches 2p^3",
        "odd prime p", 4, [](long) { return true; },
        [](long p, int m) {
          Rat lhs = rsum((p - 1) / 2, [](long k) -> Rat {
            Rat t = pochhammer(Rat(-1, 2), k) *
                    rpow(pochhammer(half(), k), 3) /
                    (fact(k + 1) * rpow(fact(k), 3));
            t *= (4 * k + 1);
            return t;
          });
          return cong(lhs, 2 * rat_pow_long(p, 3), p, m);
        });

    add("P-A2-LIU", StatementKind::Conjecture,
        "alternating fifth-power half sum matches -(p^3/16) Gamma_p(1/4)^4 "
        "for p = 3 mod 4",
        "prime p > 3 with p = 3 mod 4", 4,
        [](long p) { return p > 3 && p % 4 == 3; },
        [](long p, int m) {
          Rat rhs = Rat(-1) * rat_pow_long(p, 3) / 16 *
                    gamma_rat(Rat(1, 4), p, m, 4);
          rhs.canonicalize();
          return cong(sum_a2(p), rhs, p, m);
        });

    add("P-3KM1", StatementKind::Conjecture,
        "shifted linear-weight mixed cubic sum with 4^k matches p",
        "odd prime p", 3, [](long) { return true; },
        [](long p, int m) {
          Rat lhs = rsum((p + 1) / 2, [](long k) -> Rat {
            Rat t = rpow(pochhammer(Rat(-1, 2), k), 2) *
                    pochhammer(half(), k) / rpow(fact(k), 3);
            t *= (3 * k - 1);
            t *= rat_pow_long(4, k);
            return t;
          });
          return cong(lhs, Rat(p), p, m);
        });

    add("P-75", StatementKind::Conjecture,
        "third-base weighted fourth-power sum with central factorials "
        "matches p (p = 1 mod 3)",
        "prime p = 1 mod 3", 3, [](long p) { return p % 3 == 1; },
        [](long p, int m) {
          Rat lhs = rsum((p - 1) / 3, [](long k) -> Rat {
            Rat t = rpow(pochhammer(Rat(1, 3), k), 4) * fact(2 * k) /
                    (rpow(fact(k), 4) * pochhammer(Rat(2, 3), 2 * k));
            t *= (6 * k + 1);
            return t;
          });
          return cong(lhs, Rat(p), p, m);
        });

    add("P-76", StatementKind::Conjecture,
        "third-base shifted weighted fourth-power sum with central "
        "factorials matches p (p = 2 mod 3)",
        "odd prime p = 2 mod 3", 3,
        [](long p) { return p > 2 && p % 3 == 2; },
        [](long p, int m) {
          Rat lhs = rsum((p + 1) / 3, [](long k) -> Rat {
            Rat t = rpow(pochhammer(Rat(-1, 3), k), 4) * fact(2 * k) /
                    (rpow(fact(k), 4) * pochhammer(Rat(-2, 3), 2 * k));
            t *= (6 * k - 1);
            return t;
          });
          return cong(lhs, Rat(p), p, m);
        });

    add("P-QDIXON5C", StatementKind::Conjecture,
        "alternating weighted mixed cubic sum vanishes mod p^2 "
        "(p = 3 mod 4)",
        "prime p = 3 mod 4", 2, [](long p) { return p % 4 == 3; },
        [](long p, int m) {
          Rat lhs = rsum((p - 1) / 2, [](long k) -> Rat {
            Rat t = pochhammer(half(), k) *
                    rpow(pochhammer(Rat(-1, 2), k), 2) /
                    (rpow(fact(k + 1), 2) * fact(k));
            t *= (4 * k + 1);
            if (k & 1) t = -t;
            return t;
          });
          return cong(lhs, 0, p, m);
        });

    add("P-QUARTIC1C", StatementKind::Conjecture,
        "quintic-weight quartic-structure sum vanishes mod p^2 "
        "(p = 5 mod 8)",
        "prime p = 5 mod 8", 2, [](long p) { return p % 8 == 5; },
        [](long p, int m) {
          Rat lhs = rsum((p - 1) / 2, [](long k) -> Rat {
            Rat t = pochhammer(Rat(1), 2 * k) * pochhammer(half(), 3 * k) *
                    pochhammer(Rat(1, 4), k);
            t /= rat_pow_long(32, k) * pochhammer(Rat(9, 8), k) *
                 rpow(pochhammer(Rat(1), k), 2) *
                 pochhammer(half(), 2 * k) * pochhammer(Rat(5, 4), k);
            t *= (5 * k + 1);
            return t;
          });
          return cong(lhs, 0, p, m);
        });

    add("P-QUARTIC2C", StatementKind::Conjecture,
        "quintic-weight quartic-structure sum vanishes mod p^3 "
        "(p = 5, 7 mod 8)",
        "prime p = 5 or 7 mod 8", 3,
        [](long p) { return p % 8 == 5 || p % 8 == 7; },
        [](long p, int m) {
          Rat lhs = rsum((p - 1) / 2, [](long k) -> Rat {
            Rat t = rpow(pochhammer(half(), k), 2) *
                    pochhammer(Rat(1), 3 * k);
            t /= rat_pow_long(8, k) * pochhammer(Rat(11, 8), k) *
                 pochhammer(Rat(9, 8), k) * pochhammer(Rat(1), 2 * k) *
                 pochhammer(Rat(1), k);
            t *= (5 * k + 2);
            return t;
          });
          return cong(lhs, 0, p, m);
        });

    return v;
  }();
  return reg;
}

const PadicStatement* find_padic_statement(const std::string& id) {
  for (const auto& s : padic_statements())
    if (s.id == id) return &s;
  return nullptr;
}

CheckResult check_padic(const std::string& id, long p, int m) {
  const PadicStatement* s = find_padic_statement(id);
  if (!s) return CheckResult::skipped("UnknownStatement: " + id);
  if (!is_prime(p) || p == 2)
    return CheckResult::skipped("p=" + std::to_string(p) +
                                " is not an odd prime");
  if (!s->admissible(p))
    return CheckResult::skipped("p=" + std::to_string(p) +
                                " outside domain: " + s->domain);
  return s->run(p, m > 0 ? m : s->power);
}

ScanReport padic_scan(const std::string& id, long lo, long hi, int m) {
  const PadicStatement* s = find_padic_statement(id);
  if (!s) throw std::invalid_argument("UnknownStatement: " + id);
  ScanReport rep;
  rep.id = id;
  rep.lo = lo;
  rep.hi = hi;
  for (long p = lo; p <= hi; ++p) {
    if (!is_prime(p) || p == 2 || !s->admissible(p)) continue;
    ++rep.tested;
    CheckResult r = s->run(p, m > 0 ? m : s->power);
    switch (r.verdict) {
      case Verdict::Pass:
        ++rep.pass;
        break;
      case Verdict::Fail:
        ++rep.fail;
        rep.failures.emplace_back(p, "p=" + std::to_string(p));
        break;
      case Verdict::Skipped:
        ++rep.skip;
        break;
    }
  }
  return rep;
}

std::string padic_catalog_json() {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& s : padic_statements())
    arr.push_back({{"id", s.id},
                   {"kind", kind_str(s.kind)},
                   {"summary", s.summary},
                   {"domain", s.domain},
                   {"power", s.power}});
  return arr.dump(2);
}

}  // namespace qcong

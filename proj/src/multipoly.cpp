#include "qcong/multipoly.hpp"

#include <algorithm>
#include <sstream>

namespace qcong {

MultiPoly MultiPoly::constant(const Rat& c) {
  MultiPoly p;
  if (c != 0) p.t_[exps_zero()] = c;
  return p;
}

MultiPoly MultiPoly::monomial(const Rat& c, const Exps& e) {
  MultiPoly p;
  if (c != 0) p.t_[e] = c;
  return p;
}

MultiPoly MultiPoly::variable(int v, std::int32_t e) {
  return monomial(1, exps_var(v, e));
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r;
  for (const auto& [e, c] : t_) r.t_[e] = -c;
  return r;
}

MultiPoly& MultiPoly::add_term(const Rat& c, const Exps& e) {
  if (c == 0) return *this;
  auto it = t_.find(e);
  if (it == t_.end()) {
    t_.emplace(e, c);
  } else {
    it->second += c;
    if (it->second == 0) t_.erase(it);
  }
  return *this;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  for (const auto& [e, c] : o.t_) add_term(c, e);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  for (const auto& [e, c] : o.t_) add_term(-c, e);
  return *this;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
  MultiPoly r = *this;
  r += o;
  return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
  MultiPoly r = *this;
  r -= o;
  return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  // Iterate over the smaller operand's terms for fewer map rebuilds.
  const MultiPoly* big = this;
  const MultiPoly* small = &o;
  if (big->t_.size() < small->t_.size()) std::swap(big, small);
  MultiPoly r;
  Rat prod;
  for (const auto& [e2, c2] : small->t_) {
    for (const auto& [e1, c1] : big->t_) {
      prod = c1 * c2;
      r.add_term(prod, exps_add(e1, e2));
    }
  }
  return r;
}

MultiPoly MultiPoly::mul_monomial(const Rat& c, const Exps& e) const {
  MultiPoly r;
  if (c == 0) return r;
  for (const auto& [e1, c1] : t_) r.t_[exps_add(e1, e)] = c1 * c;
  return r;
}

MultiPoly MultiPoly::mul_scalar(const Rat& c) const {
  return mul_monomial(c, exps_zero());
}

MultiPoly operator*(const Rat& c, const MultiPoly& p) { return p.mul_scalar(c); }

std::int32_t MultiPoly::degree(int v) const {
  std::int32_t d = 0;
  for (const auto& [e, c] : t_) d = std::max(d, e[v]);
  return d;
}

Exps MultiPoly::min_exps() const {
  if (t_.empty()) return exps_zero();
  Exps m = t_.begin()->first;
  for (const auto& [e, c] : t_)
    for (int i = 0; i < NVARS; ++i) m[i] = std::min(m[i], e[i]);
  return m;
}

bool MultiPoly::uses_var(int v) const {
  for (const auto& [e, c] : t_)
    if (e[v] != 0) return true;
  return false;
}

Rat MultiPoly::coeff(const Exps& e) const {
  auto it = t_.find(e);
  return it == t_.end() ? Rat(0) : it->second;
}

Rat MultiPoly::eval(const std::array<Rat, NVARS>& point) const {
  Rat sum = 0;
  for (const auto& [e, c] : t_) {
    Rat term = c;
    for (int i = 0; i < NVARS; ++i) {
      if (e[i] == 0) continue;
      Rat pw;
      mpz_pow_ui(pw.get_num_mpz_t(), point[i].get_num_mpz_t(), e[i]);
      mpz_pow_ui(pw.get_den_mpz_t(), point[i].get_den_mpz_t(), e[i]);
      pw.canonicalize();
      term *= pw;
    }
    sum += term;
  }
  return sum;
}

std::string MultiPoly::str() const {
  if (t_.empty()) return "0";
  static const char* names[NVARS] = {"q", "a", "b", "c", "d"};
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : t_) {
    if (!first) os << " + ";
    first = false;
    os << c.get_str();
    for (int i = 0; i < NVARS; ++i) {
      if (e[i] == 0) continue;
      os << "*" << names[i];
      if (e[i] != 1) os << "^" << e[i];
    }
  }
  return os.str();
}

namespace {

// View of a MultiPoly as a univariate polynomial in variable v with
// MultiPoly coefficients.
std::map<std::int32_t, MultiPoly> group_by_var(const MultiPoly& p, int v) {
  std::map<std::int32_t, MultiPoly> g;
  for (const auto& [e, c] : p.terms()) {
    Exps rest = e;
    std::int32_t d = rest[v];
    rest[v] = 0;
    g[d].add_term(c, rest);
  }
  return g;
}

// Divide every term of p by the monomial (c, e); nullopt if any term fails.
std::optional<MultiPoly> div_monomial(const MultiPoly& p, const Rat& c, const Exps& e) {
  MultiPoly r;
  for (const auto& [e1, c1] : p.terms()) {
    for (int i = 0; i < NVARS; ++i)
      if (e1[i] < e[i]) return std::nullopt;
    r.add_term(c1 / c, exps_sub(e1, e));
  }
  return r;
}

}  // namespace

std::optional<MultiPoly> poly_exact_div(const MultiPoly& p, const MultiPoly& d) {
  if (d.is_zero()) throw std::invalid_argument("division by zero polynomial");
  if (p.is_zero()) return MultiPoly::zero();
  if (d.size() == 1) {
    const auto& [e, c] = *d.terms().begin();
    return div_monomial(p, c, e);
  }
  // Main variable: the highest-index variable appearing in d. All divisors
  // arising here (cyclotomics, 1 - a q^n, a - q^n) then have a single-term
  // leading coefficient, which makes plain long division exact and safe.
  int v = -1;
  for (int i = NVARS - 1; i >= 0; --i)
    if (d.uses_var(i)) {
      v = i;
      break;
    }
  if (v < 0) {  // d is a nonzero constant
    return p.mul_scalar(Rat(1) / d.terms().begin()->second);
  }
  auto dg = group_by_var(d, v);
  std::int32_t dd = dg.rbegin()->first;
  const MultiPoly& lead = dg.rbegin()->second;
  if (lead.size() != 1)
    throw std::invalid_argument(
        "divisor leading coefficient is not a monomial; unsupported divisor shape");
  const Rat& lc = lead.terms().begin()->second;
  const Exps le = lead.terms().begin()->first;

  auto rg = group_by_var(p, v);
  MultiPoly quot;
  while (!rg.empty()) {
    std::int32_t rd = rg.rbegin()->first;
    if (rd < dd) return std::nullopt;
    auto t = div_monomial(rg.rbegin()->second, lc, le);
    if (!t) return std::nullopt;
    Exps tv = exps_var(v, rd - dd);
    quot += t->mul_monomial(1, tv);
    // rg -= t * x^{rd-dd} * d
    for (const auto& [de, dc] : dg) {
      MultiPoly sub = t->operator*(dc);
      auto it = rg.find(de + rd - dd);
      if (it == rg.end()) {
        if (!sub.is_zero()) rg.emplace(de + rd - dd, -sub);
      } else {
        it->second -= sub;
        if (it->second.is_zero()) rg.erase(it);
      }
    }
  }
  // Reattach the main variable and verify nothing remains.
  return quot;
}

int valuation(const MultiPoly& p, const MultiPoly& d) {
  if (p.is_zero()) throw std::invalid_argument("valuation of the zero polynomial");
  int e = 0;
  MultiPoly cur = p;
  for (;;) {
    auto nxt = poly_exact_div(cur, d);
    if (!nxt) return e;
    cur = std::move(*nxt);
    ++e;
  }
}

LaurentPoly::LaurentPoly(MultiPoly body, Exps shift)
    : body_(std::move(body)), shift_(shift) {
  normalize();
}

void LaurentPoly::normalize() {
  if (body_.is_zero()) {
    shift_ = exps_zero();
    return;
  }
  Exps m = body_.min_exps();
  bool any = false;
  for (int i = 0; i < NVARS; ++i) any = any || m[i] != 0;
  if (any) {
    body_ = body_.mul_monomial(1, exps_neg(m));
    shift_ = exps_add(shift_, m);
  }
}

LaurentPoly LaurentPoly::monomial(const Rat& c, const Exps& e) {
  return LaurentPoly(MultiPoly::constant(c), e);
}

LaurentPoly LaurentPoly::operator-() const { return LaurentPoly(-body_, shift_); }

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  Exps common;
  for (int i = 0; i < NVARS; ++i) common[i] = std::min(shift_[i], o.shift_[i]);
  MultiPoly s = body_.mul_monomial(1, exps_sub(shift_, common)) +
                o.body_.mul_monomial(1, exps_sub(o.shift_, common));
  return LaurentPoly(std::move(s), common);
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const { return *this + (-o); }

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  return LaurentPoly(body_ * o.body_, exps_add(shift_, o.shift_));
}

LaurentPoly LaurentPoly::mul_monomial(const Rat& c, const Exps& e) const {
  if (c == 0) return LaurentPoly();
  return LaurentPoly(body_.mul_scalar(c), exps_add(shift_, e));
}

Rat LaurentPoly::eval(const std::array<Rat, NVARS>& point) const {
  Rat v = body_.eval(point);
  for (int i = 0; i < NVARS; ++i) {
    if (shift_[i] == 0) continue;
    if (point[i] == 0) throw std::domain_error("evaluating Laurent shift at 0");
    std::int32_t e = shift_[i];
    Rat base = e > 0 ? point[i] : Rat(point[i].get_den(), point[i].get_num());
    std::int32_t n = e > 0 ? e : -e;
    Rat pw;
    mpz_pow_ui(pw.get_num_mpz_t(), base.get_num_mpz_t(), n);
    mpz_pow_ui(pw.get_den_mpz_t(), base.get_den_mpz_t(), n);
    pw.canonicalize();
    v *= pw;
  }
  return v;
}

LaurentPoly LaurentPoly::substitute(int v, const Rat& c, std::int32_t qexp) const {
  if (body_.is_zero()) return LaurentPoly();
  // Shift component in v becomes (c q^qexp)^{shift_[v]}.
  Exps sh = shift_;
  std::int32_t sv = sh[v];
  sh[v] = 0;
  sh[VQ] += qexp * sv;
  Rat scale = 1;
  if (sv != 0) {
    if (c == 0) throw std::domain_error("substituting 0 into a Laurent shift");
    Rat base = sv > 0 ? c : Rat(c.get_den(), c.get_num());
    std::int32_t n = sv > 0 ? sv : -sv;
    mpz_pow_ui(scale.get_num_mpz_t(), base.get_num_mpz_t(), n);
    mpz_pow_ui(scale.get_den_mpz_t(), base.get_den_mpz_t(), n);
    scale.canonicalize();
  }
  MultiPoly body;
  std::int32_t minq = 0;
  // First pass: the minimum q-offset, so the body keeps nonnegative exponents.
  for (const auto& [e, co] : body_.terms())
    minq = std::min(minq, e[VQ] + qexp * e[v]);
  for (const auto& [e, co] : body_.terms()) {
    Exps ne = e;
    std::int32_t ev = ne[v];
    ne[v] = 0;
    ne[VQ] = e[VQ] + qexp * ev - minq;
    Rat cc = co;
    if (ev != 0) {
      Rat pw;
      mpz_pow_ui(pw.get_num_mpz_t(), c.get_num_mpz_t(), ev);
      mpz_pow_ui(pw.get_den_mpz_t(), c.get_den_mpz_t(), ev);
      pw.canonicalize();
      cc *= pw;
    }
    body.add_term(cc, ne);
  }
  Exps fullsh = sh;
  fullsh[VQ] += minq;
  LaurentPoly r(std::move(body), fullsh);
  return r.mul_monomial(scale, exps_zero());
}

LaurentPoly LaurentPoly::substitute(int v, const LaurentPoly& value) const {
  if (body_.is_zero()) return LaurentPoly();
  if (shift_[v] != 0 && value.is_zero())
    throw std::domain_error("substituting 0 into a Laurent shift");
  // Monomial values take the fast path (also required when shift_[v] < 0).
  if (value.body().size() == 1) {
    const auto& [e, c] = *value.body().terms().begin();
    Exps full = exps_add(e, value.shift());
    for (int i = 1; i < NVARS; ++i)
      if (i != v && full[i] != 0)
        throw std::invalid_argument("substitute: value must be a Laurent poly in q");
    if (full[v] != 0) throw std::invalid_argument("substitute: self-referential value");
    return substitute(v, c, full[VQ]);
  }
  if (value.body().uses_var(v) || value.shift()[v] != 0)
    throw std::invalid_argument("substitute: self-referential value");
  if (shift_[v] < 0)
    throw std::domain_error("substitute: non-monomial value into negative power");
  // A positive v-shift folds into the body's v-exponents.
  std::int32_t extra = shift_[v];
  Exps sh = shift_;
  sh[v] = 0;
  std::int32_t dmax = body_.degree(v) + extra;
  std::vector<LaurentPoly> pw(dmax + 1);
  pw[0] = LaurentPoly::one();
  for (std::int32_t i = 1; i <= dmax; ++i) pw[i] = pw[i - 1] * value;
  LaurentPoly out;
  for (const auto& [e, c] : body_.terms()) {
    Exps rest = e;
    std::int32_t ev = rest[v] + extra;
    rest[v] = 0;
    out += pw[ev].mul_monomial(c, rest);
  }
  return LaurentPoly(out.body(), exps_add(out.shift(), sh));
}

std::string LaurentPoly::str() const {
  static const char* names[NVARS] = {"q", "a", "b", "c", "d"};
  std::ostringstream os;
  bool anyshift = false;
  for (int i = 0; i < NVARS; ++i) anyshift = anyshift || shift_[i] != 0;
  if (anyshift) {
    os << "(";
    for (int i = 0; i < NVARS; ++i)
      if (shift_[i] != 0) os << names[i] << "^" << shift_[i];
    os << ")*";
  }
  os << "(" << body_.str() << ")";
  return os.str();
}

LaurentPoly substitute_a(const MultiPoly& p, const LaurentPoly& value) {
  return LaurentPoly(p).substitute(VA, value);
}

}  // namespace qcong

#include "qcong/numtheory.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace qcong {

int mobius(long n) {
  if (n < 1) throw std::invalid_argument("mobius: n must be positive");
  int r = 1;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;
      r = -r;
    }
  }
  if (n > 1) r = -r;
  return r;
}

bool is_prime(long n) {
  if (n < 2) return false;
  for (long p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

std::vector<long> divisors(long n) {
  std::vector<long> ds;
  for (long d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      ds.push_back(d);
      if (d != n / d) ds.push_back(n / d);
    }
  }
  std::sort(ds.begin(), ds.end());
  return ds;
}

int kronecker_symbol(long a, long n) {
  if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
  int sign = 1;
  if (n < 0) {
    n = -n;
    if (a < 0) sign = -sign;
  }
  // (a/2) factor for each power of two in n.
  int twos = 0;
  while (n % 2 == 0) {
    n /= 2;
    ++twos;
  }
  if (twos > 0) {
    if (a % 2 == 0) return 0;
    long am8 = ((a % 8) + 8) % 8;
    int a2 = (am8 == 1 || am8 == 7) ? 1 : -1;
    if (twos % 2 == 1) sign *= a2;
  }
  // Now n odd positive: Jacobi symbol by quadratic reciprocity. The symbol
  // is periodic in a modulo n, so reduce into [0, n).
  a %= n;
  if (a < 0) a += n;
  while (a != 0) {
    while (a % 2 == 0) {
      a /= 2;
      long nm8 = n % 8;
      if (nm8 == 3 || nm8 == 5) sign = -sign;
    }
    std::swap(a, n);
    if (a % 4 == 3 && n % 4 == 3) sign = -sign;
    a %= n;
  }
  return n == 1 ? sign : 0;
}

const MultiPoly& cyclotomic(long n) {
  if (n < 1) throw std::invalid_argument("cyclotomic: n must be positive");
  static std::mutex mu;
  static std::map<long, std::unique_ptr<MultiPoly>> cache;
  {
    std::lock_guard<std::mutex> lk(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return *it->second;
  }
  MultiPoly num = MultiPoly::one();
  MultiPoly den = MultiPoly::one();
  for (long d : divisors(n)) {
    int mu_d = mobius(d);
    if (mu_d == 0) continue;
    MultiPoly f = MultiPoly::variable(VQ, static_cast<std::int32_t>(n / d)) -
                  MultiPoly::one();
    if (mu_d == 1)
      num *= f;
    else
      den *= f;
  }
  auto quo = poly_exact_div(num, den);
  if (!quo) throw std::logic_error("cyclotomic: Moebius product not divisible");
  auto holder = std::make_unique<MultiPoly>(std::move(*quo));
  std::lock_guard<std::mutex> lk(mu);
  auto [it, inserted] = cache.emplace(n, std::move(holder));
  return *it->second;
}

}  // namespace qcong

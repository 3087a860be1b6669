#ifndef QCONG_NUMTHEORY_HPP
#define QCONG_NUMTHEORY_HPP

#include <vector>

#include "qcong/multipoly.hpp"

namespace qcong {

int mobius(long n);

bool is_prime(long n);

std::vector<long> divisors(long n);

// Jacobi-Kronecker symbol (a/n), fully extended (n may be 0, negative, even).
int kronecker_symbol(long a, long n);

// Phi_n(q) as a MultiPoly in q, via the Moebius product
// prod_{d|n} (q^{n/d} - 1)^{mu(d)} computed with exact division. Cached;
// the cache is safe for concurrent use.
const MultiPoly& cyclotomic(long n);

}  // namespace qcong

#endif

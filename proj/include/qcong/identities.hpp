#ifndef QCONG_IDENTITIES_HPP
#define QCONG_IDENTITIES_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "qcong/qnumeric.hpp"
#include "qcong/qseries.hpp"

namespace qcong {

// Default numeric verification policy: 256-bit arithmetic, five seeded
// sample points per identity, residual tolerance 10^-25.
inline constexpr long kIdPrecision = 256;
inline constexpr long kIdPoints = 5;
inline constexpr const char* kIdTolerance = "1e-25";

// A transformation or summation formula with an exact terminating check
// (random rational parameters, symbolic q), a numeric check at seeded
// admissible points, or both.
struct Identity {
  std::string id;
  std::string summary;
  // Exact check at truncation size n; null when the entry has no
  // terminating form. Draws its rational parameters from the seed.
  std::function<CheckResult(long n, std::uint64_t seed)> exact;
  // Numeric check at `points` seeded admissible sample points; null when
  // the entry is exact-only.
  std::function<CheckResult(std::uint64_t seed, long points)> numeric;
};

const std::vector<Identity>& identities();
const Identity* find_identity(const std::string& id);
std::string identities_catalog_json();

// Exact path when the entry has one (using n), else the numeric path.
CheckResult check_identity(const std::string& id, long n = 2,
                           std::uint64_t seed = 1);
CheckResult check_identity_numeric(const std::string& id,
                                   std::uint64_t seed = 1,
                                   long points = kIdPoints);

// Residual of the nonterminating very-well-poised transformation at one
// real point; with d = q^{-n} it degenerates to the terminating one, so the
// two verification paths can be compared directly.
BigFloat newtf_residual(const Rat& q, const Rat& a, const Rat& b,
                        const Rat& c, const Rat& d, long prec = kIdPrecision);

// z^n C_n(x; beta | q) as an exact rational function in (z, beta, q),
// where x = (z + 1/z)/2; z is carried in variable slot a, beta in slot b.
FactoredRat ultraspherical_C(long n);

// Exact check of the linearization formula
// C_m C_n = sum_k <coefficient> C_{m+n-2k} with symbolic z, beta, q.
CheckResult verify_rogers_linearization(long m, long n);

// Numeric coefficientwise check (in powers of z^2, up to the given order)
// of the linearization of F_mu F_nu for real indices. Requires
// |q z^2 / beta| < 1 and non-integral mu, nu.
CheckResult verify_linearF(const Rat& mu, const Rat& nu, const Rat& z,
                           const Rat& beta, const Rat& q, long order = 20,
                           long prec = kIdPrecision);

}  // namespace qcong

#endif

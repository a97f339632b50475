#pragma once

#include <cstdint>
#include <optional>

#include "rankloc/poly.hpp"

namespace rankloc {

/// Enumeration guard shared by the exhaustive-count operations.
inline constexpr uint64_t kCandidateGuard = 10'000'000;

struct AdmissibleResult {
  bool admissible;
  double rhs;  // m/2 - log(m)/log(q) - log(5)/log(q)
};

/// Admissibility inequality lR < m/2 - log(m)/log(q) - log(5)/log(q),
/// under which a monic irreducible P of degree m with P = 1 (mod h),
/// deg h = lR, is guaranteed to exist. Evaluated in double precision with
/// a 1e-12 margin pushed toward "inadmissible" (a false negative only
/// skips a guarantee). Throws for m < 4, below the lemma's range.
/// (The slack constant log(5) is conservative; log(6/sqrt(m)+2) would
/// also work.)
AdmissibleResult admissible(uint32_t q, uint32_t m, uint32_t lR);

struct SearchReport {
  std::optional<UniPoly> found;  // the P found, monic irreducible of degree m
  std::optional<UniPoly> u;      // with found = u*h + a
  uint64_t tested = 0;           // candidates examined
  bool admissible = false;       // admissibility verdict for (q, m, deg h)
};

/// Deterministic search for monic irreducible P of degree m with
/// P = a (mod h): enumerates monic u of degree m - deg h in ascending
/// lexicographic order of the coefficient vector (constant coefficient
/// fastest-varying, coefficients ordered by canonical integer encoding),
/// returns the first irreducible u*h + a. Exhaustion is not an error:
/// found stays empty. Preconditions: deg a < deg h, gcd(a, h) = 1,
/// m >= deg h >= 1.
SearchReport find_prime(const SmallField& F, const UniPoly& h, uint32_t m, const UniPoly& a);

/// Exact #S_m(a, h) by exhaustive enumeration of monic u. Throws
/// GuardExceeded beyond kCandidateGuard candidates.
uint64_t count_progression(const SmallField& F, const UniPoly& h, uint32_t m, const UniPoly& a);

/// Both sides of the progression bound
///   |#S_m(a,h) - q^m/(m Phi(h))| <= (3T(m) + 2 deg h) q^{m/2}/m
/// and of the unconditioned bound
///   |#S_m - q^m/m| <= 2 q^{m/2}/m.
/// The pass flags are decided by exact integer comparison (both sides
/// squared to clear q^{m/2}); the double fields are for display.
struct BoundsReport {
  uint64_t count_class = 0;  // #S_m(a,h)
  double expected_class = 0, lhs_class = 0, rhs_class = 0;
  bool pass_class = false;

  uint64_t count_all = 0;  // #S_m
  double expected_all = 0, lhs_all = 0, rhs_all = 0;
  bool pass_all = false;
};

BoundsReport check_bounds(const SmallField& F, const UniPoly& h, uint32_t m, const UniPoly& a);

}  // namespace rankloc

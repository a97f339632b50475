#include "rankloc/dirichlet.hpp"

#include <cmath>
#include <stdexcept>

#include "rankloc/errors.hpp"

namespace rankloc {

AdmissibleResult admissible(uint32_t q, uint32_t m, uint32_t lR) {
  if (m < 4) throw std::domain_error("admissible: m < 4 is below the lemma range");
  if (q < 2) throw std::invalid_argument("admissible: q must be >= 2");
  double logq = std::log(double(q));
  double rhs = double(m) / 2.0 - std::log(double(m)) / logq - std::log(5.0) / logq;
  return {double(lR) < rhs - 1e-12, rhs};
}

namespace {

void check_progression_args(const SmallField& F, const UniPoly& h, uint32_t m, const UniPoly& a) {
  if (h.degree() < 1) throw std::invalid_argument("progression: deg h must be >= 1");
  if (!is_monic(F, h)) throw std::invalid_argument("progression: h must be monic");
  if (a.degree() >= h.degree()) throw std::invalid_argument("progression: deg a must be < deg h");
  if (!gcd(F, a, h).is_one())
    throw std::invalid_argument("progression: gcd(a, h) != 1, the class contains no irreducibles");
  if (m < uint32_t(h.degree())) throw std::invalid_argument("progression: m must be >= deg h");
}

// monic u of degree d from the enumeration index: base-q digits of idx are
// the coefficients, constant coefficient fastest-varying
UniPoly candidate_u(const SmallField& F, uint32_t d, uint64_t idx) {
  std::vector<Fq> c(d + 1);
  for (uint32_t i = 0; i < d; ++i) {
    c[i] = Fq{uint32_t(idx % F.q())};
    idx /= F.q();
  }
  c[d] = F.one();
  return UniPoly(std::move(c));
}

uint64_t pow_u64_guarded(uint64_t b, uint32_t e, uint64_t guard) {
  uint64_t r = 1;
  for (uint32_t i = 0; i < e; ++i) {
    r *= b;
    if (r > guard) throw GuardExceeded("progression: candidate space above enumeration guard");
  }
  return r;
}

}  // namespace

SearchReport find_prime(const SmallField& F, const UniPoly& h, uint32_t m, const UniPoly& a) {
  check_progression_args(F, h, m, a);
  SearchReport rep;
  try {
    rep.admissible = admissible(F.q(), m, uint32_t(h.degree())).admissible;
  } catch (const std::domain_error&) {
    rep.admissible = false;  // m < 4: no guarantee
  }
  uint32_t d = m - uint32_t(h.degree());
  uint64_t total = 1;
  for (uint32_t i = 0; i < d; ++i) {
    if (total > UINT64_MAX / F.q()) {
      total = UINT64_MAX;  // effectively unbounded; a hit arrives long before
      break;
    }
    total *= F.q();
  }
  for (uint64_t idx = 0; idx < total; ++idx) {
    UniPoly u = candidate_u(F, d, idx);
    UniPoly P = add(F, mul(F, u, h), a);  // monic of degree m by construction
    ++rep.tested;
    if (is_irreducible(F, P)) {
      rep.found = std::move(P);
      rep.u = std::move(u);
      break;
    }
  }
  return rep;
}

uint64_t count_progression(const SmallField& F, const UniPoly& h, uint32_t m, const UniPoly& a) {
  check_progression_args(F, h, m, a);
  uint32_t d = m - uint32_t(h.degree());
  uint64_t total = pow_u64_guarded(F.q(), d, kCandidateGuard);
  uint64_t count = 0;
  for (uint64_t idx = 0; idx < total; ++idx) {
    UniPoly P = add(F, mul(F, candidate_u(F, d, idx), h), a);
    if (is_irreducible(F, P)) ++count;
  }
  return count;
}

BoundsReport check_bounds(const SmallField& F, const UniPoly& h, uint32_t m, const UniPoly& a) {
  BoundsReport rep;
  rep.count_class = count_progression(F, h, m, a);
  rep.count_all = count_irreducibles(F.q(), m);

  uint64_t phi = totient(F, h);
  uint64_t tm = divisor_count(m);
  uint64_t H = uint64_t(h.degree());
  __int128 qm = 1;
  for (uint32_t i = 0; i < m; ++i) qm *= F.q();

  // progression bound, squared to keep q^{m/2} exact:
  //   (m*Phi*count - q^m)^2 <= ((3T(m)+2H)*Phi)^2 * q^m
  __int128 lhs = __int128(m) * phi * rep.count_class - qm;
  if (lhs < 0) lhs = -lhs;
  __int128 cbound = __int128(3 * tm + 2 * H) * phi;
  rep.pass_class = lhs * lhs <= cbound * cbound * qm;
  rep.expected_class = double(qm) / (double(m) * double(phi));
  rep.lhs_class = std::abs(double(rep.count_class) - rep.expected_class);
  rep.rhs_class = double(3 * tm + 2 * H) * std::pow(double(F.q()), m / 2.0) / m;

  // unconditioned bound: (m*count - q^m)^2 <= 4 q^m
  __int128 lhs2 = __int128(m) * rep.count_all - qm;
  if (lhs2 < 0) lhs2 = -lhs2;
  rep.pass_all = lhs2 * lhs2 <= 4 * qm;
  rep.expected_all = double(qm) / double(m);
  rep.lhs_all = std::abs(double(rep.count_all) - rep.expected_all);
  rep.rhs_all = 2.0 * std::pow(double(F.q()), m / 2.0) / m;
  return rep;
}

}  // namespace rankloc

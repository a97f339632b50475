#include "rankloc/poly.hpp"

#include <stdexcept>

#include "rankloc/errors.hpp"

namespace rankloc {

UniPoly UniPoly::monomial(uint32_t deg, Fq c) {
  std::vector<Fq> v(deg + 1, Fq{0});
  v[deg] = c;
  return UniPoly(std::move(v));
}

UniPoly UniPoly::from_ints(const SmallField& F, std::initializer_list<uint32_t> cs) {
  std::vector<Fq> v;
  v.reserve(cs.size());
  for (uint32_t c : cs) {
    F.check(Fq{c});
    v.push_back(Fq{c});
  }
  return UniPoly(std::move(v));
}

bool is_monic(const SmallField& F, const UniPoly& a) {
  (void)F;
  return !a.is_zero() && a.leading().v == 1;
}

UniPoly add(const SmallField& F, const UniPoly& a, const UniPoly& b) {
  size_t n = std::max(a.coeffs().size(), b.coeffs().size());
  std::vector<Fq> c(n);
  for (size_t i = 0; i < n; ++i) c[i] = F.add(a.coeff(i), b.coeff(i));
  return UniPoly(std::move(c));
}

UniPoly sub(const SmallField& F, const UniPoly& a, const UniPoly& b) {
  size_t n = std::max(a.coeffs().size(), b.coeffs().size());
  std::vector<Fq> c(n);
  for (size_t i = 0; i < n; ++i) c[i] = F.sub(a.coeff(i), b.coeff(i));
  return UniPoly(std::move(c));
}

UniPoly neg(const SmallField& F, const UniPoly& a) {
  std::vector<Fq> c(a.coeffs().begin(), a.coeffs().end());
  for (Fq& x : c) x = F.neg(x);
  return UniPoly(std::move(c));
}

UniPoly mul(const SmallField& F, const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return UniPoly::zero();
  std::vector<Fq> c(a.coeffs().size() + b.coeffs().size() - 1, Fq{0});
  for (size_t i = 0; i < a.coeffs().size(); ++i) {
    Fq ai = a.coeff(i);
    if (ai.v == 0) continue;
    for (size_t j = 0; j < b.coeffs().size(); ++j)
      c[i + j] = F.add(c[i + j], F.mul(ai, b.coeff(j)));
  }
  return UniPoly(std::move(c));
}

UniPoly scale(const SmallField& F, Fq c, const UniPoly& a) {
  std::vector<Fq> r(a.coeffs().begin(), a.coeffs().end());
  for (Fq& x : r) x = F.mul(c, x);
  return UniPoly(std::move(r));
}

std::pair<UniPoly, UniPoly> divmod(const SmallField& F, const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw std::domain_error("poly divmod: division by the zero polynomial");
  if (a.degree() < b.degree()) return {UniPoly::zero(), a};
  std::vector<Fq> rem(a.coeffs().begin(), a.coeffs().end());
  std::vector<Fq> quot(a.degree() - b.degree() + 1, Fq{0});
  Fq lead_inv = F.inv(b.leading());
  for (size_t k = rem.size(); k-- > size_t(b.degree());) {
    if (rem[k].v == 0) continue;
    Fq c = F.mul(rem[k], lead_inv);
    size_t shift = k - size_t(b.degree());
    quot[shift] = c;
    for (size_t i = 0; i < b.coeffs().size(); ++i)
      rem[shift + i] = F.sub(rem[shift + i], F.mul(c, b.coeff(i)));
  }
  return {UniPoly(std::move(quot)), UniPoly(std::move(rem))};
}

UniPoly mod(const SmallField& F, const UniPoly& a, const UniPoly& b) { return divmod(F, a, b).second; }

bool divides(const SmallField& F, const UniPoly& d, const UniPoly& a) {
  if (d.is_zero()) return a.is_zero();
  return mod(F, a, d).is_zero();
}

UniPoly make_monic(const SmallField& F, const UniPoly& a) {
  if (a.is_zero()) return a;
  return scale(F, F.inv(a.leading()), a);
}

UniPoly gcd(const SmallField& F, UniPoly a, UniPoly b) {
  while (!b.is_zero()) {
    UniPoly r = mod(F, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(F, a);
}

XgcdResult xgcd(const SmallField& F, const UniPoly& a, const UniPoly& b) {
  UniPoly r0 = a, r1 = b;
  UniPoly s0 = UniPoly::one(), s1 = UniPoly::zero();
  UniPoly t0 = UniPoly::zero(), t1 = UniPoly::one();
  while (!r1.is_zero()) {
    auto [q, r] = divmod(F, r0, r1);
    r0 = std::move(r1), r1 = std::move(r);
    UniPoly s2 = sub(F, s0, mul(F, q, s1));
    s0 = std::move(s1), s1 = std::move(s2);
    UniPoly t2 = sub(F, t0, mul(F, q, t1));
    t0 = std::move(t1), t1 = std::move(t2);
  }
  if (!r0.is_zero()) {
    Fq c = F.inv(r0.leading());
    r0 = scale(F, c, r0);
    s0 = scale(F, c, s0);
    t0 = scale(F, c, t0);
  }
  return {std::move(r0), std::move(s0), std::move(t0)};
}

Fq eval(const SmallField& F, const UniPoly& f, Fq x) {
  Fq r{0};
  for (size_t i = f.coeffs().size(); i-- > 0;) r = F.add(F.mul(r, x), f.coeff(i));
  return r;
}

UniPoly mul_mod(const SmallField& F, const UniPoly& a, const UniPoly& b, const UniPoly& m) {
  return mod(F, mul(F, a, b), m);
}

UniPoly pow_mod(const SmallField& F, UniPoly base, uint64_t exp, const UniPoly& m) {
  UniPoly r = mod(F, UniPoly::one(), m);
  base = mod(F, base, m);
  while (exp) {
    if (exp & 1) r = mul_mod(F, r, base, m);
    base = mul_mod(F, base, base, m);
    exp >>= 1;
  }
  return r;
}

UniPoly frobenius_power_mod(const SmallField& F, uint32_t k, const UniPoly& f) {
  UniPoly t = mod(F, UniPoly::x(), f);
  for (uint32_t i = 0; i < k; ++i) t = pow_mod(F, t, F.q(), f);
  return t;
}

namespace {

std::vector<uint32_t> prime_factors(uint32_t n) {
  std::vector<uint32_t> fs;
  for (uint32_t d = 2; uint64_t(d) * d <= n; ++d) {
    if (n % d == 0) {
      fs.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) fs.push_back(n);
  return fs;
}

}  // namespace

bool is_irreducible(const SmallField& F, const UniPoly& f) {
  long n = f.degree();
  if (n < 1) throw std::invalid_argument("is_irreducible: degree too small");
  if (n == 1) return true;
  // cheap reject: a root in F_q gives a linear factor
  for (uint32_t c = 0; c < F.q(); ++c)
    if (eval(F, f, Fq{c}).v == 0) return false;

  UniPoly x = mod(F, UniPoly::x(), f);
  UniPoly t = x;  // x^{q^k} mod f for k running upward
  std::vector<uint32_t> checks;  // gcd checkpoints at k = n/rho
  for (uint32_t rho : prime_factors(uint32_t(n))) checks.push_back(uint32_t(n) / rho);
  std::sort(checks.begin(), checks.end());
  size_t ci = 0;
  for (uint32_t k = 1; k <= uint32_t(n); ++k) {
    t = pow_mod(F, t, F.q(), f);
    while (ci < checks.size() && checks[ci] == k) {
      if (gcd(F, sub(F, t, x), f).degree() != 0) return false;
      ++ci;
    }
  }
  return sub(F, t, x).is_zero();
}

uint64_t count_irreducibles(uint32_t q, uint32_t m) {
  if (m < 1) throw std::invalid_argument("count_irreducibles: m must be >= 1");
  // (1/m) * sum_{d|m} mu(d) q^{m/d}
  auto mu = [](uint32_t n) -> int {
    int r = 1;
    for (uint32_t d = 2; d * d <= n; ++d) {
      if (n % d == 0) {
        n /= d;
        if (n % d == 0) return 0;
        r = -r;
      }
    }
    if (n > 1) r = -r;
    return r;
  };
  __int128 total = 0;
  for (uint32_t d = 1; d <= m; ++d) {
    if (m % d != 0) continue;
    int mud = mu(d);
    if (mud == 0) continue;
    __int128 pw = 1;
    for (uint32_t i = 0; i < m / d; ++i) {
      pw *= q;
      if (pw > (__int128(1) << 100)) throw GuardExceeded("count_irreducibles: q^m too large");
    }
    total += mud * pw;
  }
  total /= m;
  if (total < 0 || total > __int128(UINT64_MAX)) throw GuardExceeded("count_irreducibles: result overflows");
  return uint64_t(total);
}

uint64_t totient(const SmallField& F, const UniPoly& h) {
  if (h.degree() < 1) throw std::invalid_argument("totient: deg h must be >= 1");
  uint64_t dh = uint64_t(h.degree());
  uint64_t space = 1;
  for (uint64_t i = 0; i < dh; ++i) {
    space *= F.q();
    if (space > 10'000'000) throw GuardExceeded("totient: residue space above enumeration guard");
  }
  uint64_t count = 0;
  for (uint64_t idx = 1; idx < space; ++idx) {
    std::vector<Fq> c(dh);
    uint64_t v = idx;
    for (uint64_t i = 0; i < dh; ++i) {
      c[i] = Fq{uint32_t(v % F.q())};
      v /= F.q();
    }
    if (gcd(F, UniPoly(std::move(c)), h).is_one()) ++count;
  }
  return count;
}

uint64_t divisor_count(uint64_t m) {
  if (m < 1) throw std::invalid_argument("divisor_count: m must be >= 1");
  uint64_t count = 1;
  for (uint64_t d = 2; d * d <= m; ++d) {
    if (m % d != 0) continue;
    uint64_t mult = 0;
    while (m % d == 0) {
      m /= d;
      ++mult;
    }
    count *= mult + 1;
  }
  if (m > 1) count *= 2;
  return count;
}

RationalFunction RationalFunction::make(const SmallField& F, UniPoly num, UniPoly den) {
  if (den.is_zero()) throw std::domain_error("RationalFunction: zero denominator");
  if (num.is_zero()) return {UniPoly::zero(), UniPoly::one()};
  UniPoly g = gcd(F, num, den);
  if (g.degree() > 0) {
    num = divmod(F, num, g).first;
    den = divmod(F, den, g).first;
  }
  Fq lead_inv = F.inv(den.leading());
  return {scale(F, lead_inv, num), scale(F, lead_inv, den)};
}

long long Valuation::value() const {
  if (infinite_) throw std::logic_error("Valuation: infinite valuation has no integer value");
  return v_;
}

Valuation valuation(const SmallField& F, const RationalFunction& g, const UniPoly& P) {
  if (!is_monic(F, P) || P.degree() < 1 || !is_irreducible(F, P))
    throw std::invalid_argument("valuation: P must be monic irreducible");
  if (g.is_zero()) return Valuation::infinity();
  auto multiplicity = [&](UniPoly f) {
    long long n = 0;
    while (true) {
      auto [q, r] = divmod(F, f, P);
      if (!r.is_zero()) break;
      f = std::move(q);
      ++n;
    }
    return n;
  };
  return Valuation::finite(multiplicity(g.num) - multiplicity(g.den));
}

}  // namespace rankloc

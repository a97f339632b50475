#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

#include "rankloc/field.hpp"

namespace rankloc {

/// Dense univariate polynomial over F_q, ascending coefficients, no
/// trailing zeros stored. The zero polynomial is the empty vector and has
/// degree() == -1 (standing in for -infinity).
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Fq> coeffs) : c_(std::move(coeffs)) { trim(); }

  static UniPoly zero() { return {}; }
  static UniPoly constant(Fq c) { return UniPoly({c}); }
  static UniPoly one() { return constant(Fq{1}); }
  /// T
  static UniPoly x() { return UniPoly({Fq{0}, Fq{1}}); }
  static UniPoly monomial(uint32_t deg, Fq c = Fq{1});
  /// Convenience for literals: coefficients as canonical integer encodings.
  static UniPoly from_ints(const SmallField& F, std::initializer_list<uint32_t> cs);

  long degree() const { return long(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0].v == 1; }
  Fq coeff(size_t i) const { return i < c_.size() ? c_[i] : Fq{0}; }
  Fq leading() const { return c_.empty() ? Fq{0} : c_.back(); }
  std::span<const Fq> coeffs() const { return c_; }

  friend bool operator==(const UniPoly&, const UniPoly&) = default;

 private:
  void trim() {
    while (!c_.empty() && c_.back().v == 0) c_.pop_back();
  }
  std::vector<Fq> c_;
};

bool is_monic(const SmallField& F, const UniPoly& a);

UniPoly add(const SmallField& F, const UniPoly& a, const UniPoly& b);
UniPoly sub(const SmallField& F, const UniPoly& a, const UniPoly& b);
UniPoly neg(const SmallField& F, const UniPoly& a);
UniPoly mul(const SmallField& F, const UniPoly& a, const UniPoly& b);
UniPoly scale(const SmallField& F, Fq c, const UniPoly& a);

/// Euclidean division: a = q*b + r with deg r < deg b. Throws on b = 0.
std::pair<UniPoly, UniPoly> divmod(const SmallField& F, const UniPoly& a, const UniPoly& b);
UniPoly mod(const SmallField& F, const UniPoly& a, const UniPoly& b);
bool divides(const SmallField& F, const UniPoly& d, const UniPoly& a);

UniPoly make_monic(const SmallField& F, const UniPoly& a);
/// Monic gcd; gcd(a, 0) = monic(a), gcd(0, 0) = 0.
UniPoly gcd(const SmallField& F, UniPoly a, UniPoly b);

struct XgcdResult {
  UniPoly g, s, t;  // g = s*a + t*b, g monic (or zero)
};
XgcdResult xgcd(const SmallField& F, const UniPoly& a, const UniPoly& b);

Fq eval(const SmallField& F, const UniPoly& f, Fq x);

UniPoly mul_mod(const SmallField& F, const UniPoly& a, const UniPoly& b, const UniPoly& m);
UniPoly pow_mod(const SmallField& F, UniPoly base, uint64_t exp, const UniPoly& m);
/// x^{q^k} mod f.
UniPoly frobenius_power_mod(const SmallField& F, uint32_t k, const UniPoly& f);

/// Rabin's criterion: f of degree n is irreducible over F_q iff
/// x^{q^n} = x (mod f) and gcd(x^{q^{n/rho}} - x, f) = 1 for every prime
/// rho dividing n. Throws for deg f < 1.
bool is_irreducible(const SmallField& F, const UniPoly& f);

/// Exact number of monic irreducibles of degree m over F_q, by Moebius
/// inversion of q^m = sum_{d|m} d*N_d. Throws GuardExceeded if the count
/// does not fit in 64 bits.
uint64_t count_irreducibles(uint32_t q, uint32_t m);

/// Polynomial Euler totient: the number of nonzero polynomials of degree
/// < deg h that are coprime to h. Exact, by guarded enumeration of the
/// q^{deg h} residues.
uint64_t totient(const SmallField& F, const UniPoly& h);

/// Number of positive divisors of m.
uint64_t divisor_count(uint64_t m);

/// num/den in canonical form: den monic and nonzero, gcd(num, den) = 1.
struct RationalFunction {
  UniPoly num, den;

  static RationalFunction make(const SmallField& F, UniPoly num, UniPoly den);
  static RationalFunction from_poly(UniPoly p) { return {std::move(p), UniPoly::one()}; }
  static RationalFunction one() { return {UniPoly::one(), UniPoly::one()}; }
  bool is_zero() const { return num.is_zero(); }
};

/// Value of the discrete valuation v_p: either an integer or infinity
/// (the valuation of 0).
struct Valuation {
  static Valuation finite(long long n) { return {n, false}; }
  static Valuation infinity() { return {0, true}; }

  bool is_infinite() const { return infinite_; }
  long long value() const;
  bool operator==(long long n) const { return !infinite_ && v_ == n; }
  bool operator>=(long long n) const { return infinite_ || v_ >= n; }

 private:
  Valuation(long long v, bool inf) : v_(v), infinite_(inf) {}
  long long v_;
  bool infinite_;
};

/// v_p(g) for a monic irreducible P: multiplicity of P in the numerator
/// minus multiplicity in the denominator; infinity for g = 0. Throws when
/// P is not monic irreducible.
Valuation valuation(const SmallField& F, const RationalFunction& g, const UniPoly& P);

}  // namespace rankloc

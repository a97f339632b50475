#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rankloc/field.hpp"
#include "rankloc/poly.hpp"

namespace rankloc {

/// An element of F_{q^m}: ascending power-basis coordinates over F_q,
/// fixed length m (zero-padded). Interpreted relative to a FieldTower.
struct FqmElem {
  std::vector<Fq> c;

  bool is_zero() const {
    for (Fq x : c)
      if (x.v != 0) return false;
    return true;
  }
  friend bool operator==(const FqmElem&, const FqmElem&) = default;
};

/// The tower F_p < F_q = F_p[y]/(g) < F_{q^m} = F_q[x]/(f), together with
/// the distinguished element z, a root of the construction's prime P.
///
/// Default mode takes f := P itself, so z = x-bar costs nothing; the
/// explicit mode accepts any (f, z) pair and validates P(z) = 0, which is
/// what reproducing externally generated data requires. The F_q-basis of
/// F_{q^m} is always the power basis {1, x-bar, ..., x-bar^{m-1}}.
///
/// Immutable after construction; all operations are pure.
class FieldTower {
 public:
  /// Default mode: modulus := P, z := x-bar.
  FieldTower(SmallField base, const UniPoly& P);
  /// Explicit mode: modulus and z given; validates that modulus is monic
  /// irreducible of degree m = deg P and that P(z) = 0.
  FieldTower(SmallField base, UniPoly modulus, const UniPoly& P, FqmElem z);

  const SmallField& base() const { return base_; }
  uint32_t m() const { return m_; }
  const UniPoly& modulus() const { return modulus_; }
  const FqmElem& z() const { return z_; }

  bool operator==(const FieldTower& o) const {
    return base_ == o.base_ && modulus_ == o.modulus_ && z_ == o.z_;
  }

  FqmElem zero() const { return FqmElem{std::vector<Fq>(m_, Fq{0})}; }
  FqmElem one() const { return embed(base_.one()); }
  /// x-bar, the residue class of x.
  FqmElem gen() const;
  FqmElem embed(Fq c) const;
  /// The base-field value if the element lies in F_q.
  std::optional<Fq> as_base(const FqmElem& a) const;
  FqmElem from_coeffs(std::vector<Fq> c) const;  // validates length + range

  FqmElem add(const FqmElem& a, const FqmElem& b) const;
  FqmElem sub(const FqmElem& a, const FqmElem& b) const;
  FqmElem neg(const FqmElem& a) const;
  FqmElem mul(const FqmElem& a, const FqmElem& b) const;
  FqmElem scalar_mul(Fq c, const FqmElem& a) const;
  FqmElem inv(const FqmElem& a) const;  // throws on zero
  FqmElem div(const FqmElem& a, const FqmElem& b) const { return mul(a, inv(b)); }
  FqmElem pow(FqmElem a, uint64_t n) const;

  /// x^{q^i}; an F_q-linear field automorphism, period m.
  FqmElem frobenius(const FqmElem& a, uint64_t i = 1) const;

  /// Nr(x) = prod_{i=0}^{m-1} x^{q^i}, which lands in F_q.
  Fq norm(const FqmElem& a) const;

  /// Evaluates f in F_q[T] at an element of F_{q^m}.
  FqmElem eval_poly(const UniPoly& f, const FqmElem& x) const;

  /// m x n matrix of power-basis coordinates, one column per element.
  MatrixFq expand_columns(std::span<const FqmElem> v) const;

  void check(const FqmElem& a) const;
  std::string to_string(const FqmElem& a) const;  // generator printed as 'a'

 private:
  void build_frobenius_matrix();

  SmallField base_;
  uint32_t m_ = 0;
  UniPoly modulus_;
  FqmElem z_;
  MatrixFq frob_;  // coordinate matrix of x -> x^q
};

}  // namespace rankloc

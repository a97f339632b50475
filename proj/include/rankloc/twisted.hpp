#pragma once

#include <vector>

#include "rankloc/tower.hpp"

namespace rankloc {

/// Element of the twisted polynomial ring F_{q^m}{tau}: ascending
/// coefficients indexed by tau-power, no trailing zeros. Multiplication
/// follows (a tau^i)(b tau^j) = a b^{q^i} tau^{i+j}, so the ring is
/// noncommutative.
class TwistedPoly {
 public:
  TwistedPoly() = default;
  explicit TwistedPoly(std::vector<FqmElem> coeffs) : c_(std::move(coeffs)) { trim(); }

  long tau_degree() const { return long(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  std::span<const FqmElem> coeffs() const { return c_; }
  const FqmElem& coeff_ref(size_t i) const { return c_[i]; }

  friend bool operator==(const TwistedPoly&, const TwistedPoly&) = default;

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  std::vector<FqmElem> c_;
};

/// q-linearized polynomial sum a_i x^{q^i}: ascending coefficients indexed
/// by the q-power exponent [i]. Related to TwistedPoly coefficientwise by
/// the isomorphism iota: a_i tau^i <-> a_i x^{q^i}, which carries the
/// twisted product to composition.
class LinearizedPoly {
 public:
  LinearizedPoly() = default;
  explicit LinearizedPoly(std::vector<FqmElem> coeffs) : c_(std::move(coeffs)) { trim(); }

  long q_degree() const { return long(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  std::span<const FqmElem> coeffs() const { return c_; }

  friend bool operator==(const LinearizedPoly&, const LinearizedPoly&) = default;

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  std::vector<FqmElem> c_;
};

TwistedPoly t_add(const FieldTower& tw, const TwistedPoly& f, const TwistedPoly& g);
TwistedPoly t_sub(const FieldTower& tw, const TwistedPoly& f, const TwistedPoly& g);
TwistedPoly t_neg(const FieldTower& tw, const TwistedPoly& f);
/// The twisted product, bilinear extension of (a tau^i)(b tau^j) = a b^{q^i} tau^{i+j}.
TwistedPoly t_mul(const FieldTower& tw, const TwistedPoly& f, const TwistedPoly& g);
/// Left multiplication by a constant (a tau^0).
TwistedPoly t_scale(const FieldTower& tw, const FqmElem& a, const TwistedPoly& f);
TwistedPoly t_constant(const FieldTower& tw, const FqmElem& a);

/// iota and its inverse: the coefficient-preserving ring isomorphism onto
/// linearized polynomials under composition.
LinearizedPoly to_linearized(const TwistedPoly& f);
TwistedPoly to_twisted(const LinearizedPoly& f);

/// f acting as the F_q-linear operator sum a_i x^{q^i} on F_{q^m}.
FqmElem evaluate(const FieldTower& tw, const TwistedPoly& f, const FqmElem& x);
FqmElem evaluate(const FieldTower& tw, const LinearizedPoly& f, const FqmElem& x);

/// Coordinate matrix (m x m over F_q) of x -> f(x) in the power basis.
MatrixFq operator_matrix(const FieldTower& tw, const TwistedPoly& f);

/// Deterministic F_q-basis of {x in F_{q^m} : f(x) = 0}: the null space of
/// operator_matrix in reduced column-echelon form, ordered by pivot
/// position. Throws for f = 0 (the kernel would be the whole space).
std::vector<FqmElem> kernel_basis(const FieldTower& tw, const TwistedPoly& f);

}  // namespace rankloc

#pragma once

#include <memory>
#include <span>

#include "rankloc/twisted.hpp"

namespace rankloc {

/// The rank-1 Drinfeld module family phi^(g) with phi_T = T + g*tau,
/// reduced modulo P: phi_T-bar = z + g-bar*tau acting on F_{q^m}, where z
/// is the tower's designated root of P and g-bar = g(z) is the reduction
/// of g. Good reduction (v_P(g) = 0, so g-bar is defined and nonzero) is
/// enforced at construction. g = 1 is the Carlitz module.
///
/// a |-> phi_a is an F_q-algebra homomorphism determined by phi_T, so the
/// tau-degree of phi_a is deg_T(a) and its tau^0 coefficient is a(z).
class ReducedCarlitz {
 public:
  /// The Carlitz case g = 1.
  explicit ReducedCarlitz(std::shared_ptr<const FieldTower> tower)
      : ReducedCarlitz(std::move(tower), RationalFunction::one()) {}
  ReducedCarlitz(std::shared_ptr<const FieldTower> tower, const RationalFunction& g);

  const FieldTower& tower() const { return *tower_; }
  std::shared_ptr<const FieldTower> tower_ptr() const { return tower_; }
  const FqmElem& g_bar() const { return g_bar_; }
  const TwistedPoly& phi_T() const { return phi_T_; }

  /// Horner evaluation of a at phi_T inside the twisted ring.
  TwistedPoly phi_of(const UniPoly& a) const;

 private:
  std::shared_ptr<const FieldTower> tower_;
  FqmElem g_bar_;
  TwistedPoly phi_T_;
};

/// Good-reduction predicate for phi_T = T + g*tau at the prime (P):
/// v_P(g) = 0 and v_P(T) >= 0 (the latter always holds). Checked via the
/// discrete valuation, independently of the evaluation route used by the
/// ReducedCarlitz constructor.
bool check_good_reduction(const SmallField& F, const RationalFunction& g, const UniPoly& P);

/// The a-torsion phi-bar[a] inside F_{q^m}: basis of Ker iota(phi_a).
/// When the torsion is fully rational the dimension equals deg a;
/// fully_rational reports whether that holds (deliberately not an error,
/// the reciprocity cross-check probes both outcomes).
struct TorsionSpace {
  UniPoly a;
  std::vector<FqmElem> basis;
  bool fully_rational = false;

  uint32_t dim() const { return uint32_t(basis.size()); }
};

/// Throws when a(z) = 0 (inseparable division polynomial).
TorsionSpace torsion_space(const ReducedCarlitz& mod, const UniPoly& a);

/// Concatenated torsion bases of pairwise coprime factors; checks the
/// concatenation is F_q-independent and spans the product torsion, and
/// throws "direct sum violated" otherwise.
TorsionSpace torsion_direct_sum(const ReducedCarlitz& mod, std::span<const UniPoly> factors);

/// Executable form of Carlitz reciprocity: P splits completely in the
/// h-division field of phi^(g) iff P = Nr(g-bar) (mod h), with the norm
/// embedded as a constant polynomial. Requires P monic irreducible and
/// v_P(g) = v_P(h) = 0.
bool reciprocity_predicate(const SmallField& F, const UniPoly& P, const UniPoly& h,
                           const RationalFunction& g);

}  // namespace rankloc

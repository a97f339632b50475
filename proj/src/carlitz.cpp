#include "rankloc/carlitz.hpp"

#include <stdexcept>

namespace rankloc {

ReducedCarlitz::ReducedCarlitz(std::shared_ptr<const FieldTower> tower, const RationalFunction& g)
    : tower_(std::move(tower)) {
  const FieldTower& tw = *tower_;
  // reduce g at z; z generates F_{q^m} with minimal polynomial P, so
  // f(z) = 0 iff P | f, making this equivalent to v_P(g) = 0
  FqmElem den = tw.eval_poly(g.den, tw.z());
  if (den.is_zero())
    throw std::domain_error("ReducedCarlitz: bad reduction, v_P(denominator of g) > 0");
  FqmElem num = tw.eval_poly(g.num, tw.z());
  if (num.is_zero())
    throw std::domain_error("ReducedCarlitz: bad reduction, v_P(g) != 0 (g-bar vanishes)");
  g_bar_ = tw.div(num, den);
  phi_T_ = TwistedPoly({tw.z(), g_bar_});
}

TwistedPoly ReducedCarlitz::phi_of(const UniPoly& a) const {
  const FieldTower& tw = *tower_;
  TwistedPoly r;
  for (size_t i = a.coeffs().size(); i-- > 0;) {
    r = t_mul(tw, r, phi_T_);
    if (a.coeff(i).v != 0) r = t_add(tw, r, t_constant(tw, tw.embed(a.coeff(i))));
  }
  return r;
}

bool check_good_reduction(const SmallField& F, const RationalFunction& g, const UniPoly& P) {
  // for phi_T = T + g*tau: leading coefficient g needs v_P(g) = 0 and the
  // tau^0 coefficient T always has v_P(T) >= 0
  return valuation(F, g, P) == 0 && valuation(F, RationalFunction::from_poly(UniPoly::x()), P) >= 0;
}

TorsionSpace torsion_space(const ReducedCarlitz& mod, const UniPoly& a) {
  const FieldTower& tw = mod.tower();
  if (a.degree() < 1) throw std::invalid_argument("torsion_space: deg a must be >= 1");
  if (tw.eval_poly(a, tw.z()).is_zero())
    throw std::domain_error("torsion_space: a(z) = 0, inseparable division polynomial");
  TorsionSpace ts;
  ts.a = a;
  ts.basis = kernel_basis(tw, mod.phi_of(a));
  ts.fully_rational = long(ts.basis.size()) == a.degree();
  return ts;
}

TorsionSpace torsion_direct_sum(const ReducedCarlitz& mod, std::span<const UniPoly> factors) {
  const FieldTower& tw = mod.tower();
  const SmallField& F = tw.base();
  if (factors.empty()) throw std::invalid_argument("torsion_direct_sum: no factors");
  for (size_t i = 0; i < factors.size(); ++i)
    for (size_t j = i + 1; j < factors.size(); ++j)
      if (gcd(F, factors[i], factors[j]).degree() != 0)
        throw std::invalid_argument("torsion_direct_sum: factors are not pairwise coprime");

  TorsionSpace ts;
  ts.a = UniPoly::one();
  bool rational = true;
  for (const UniPoly& f : factors) {
    TorsionSpace part = torsion_space(mod, f);
    rational = rational && part.fully_rational;
    ts.a = mul(F, ts.a, f);
    ts.basis.insert(ts.basis.end(), part.basis.begin(), part.basis.end());
  }
  ts.fully_rational = rational && long(ts.basis.size()) == ts.a.degree();

  // the concatenation must be independent and must span the product torsion
  if (fq_rank(F, tw.expand_columns(ts.basis)) != ts.basis.size())
    throw std::logic_error("torsion_direct_sum: direct sum violated (dependent bases)");
  TwistedPoly phi_prod = mod.phi_of(ts.a);
  for (const FqmElem& b : ts.basis)
    if (!evaluate(tw, phi_prod, b).is_zero())
      throw std::logic_error("torsion_direct_sum: direct sum violated (element outside product torsion)");
  if (ts.basis.size() != torsion_space(mod, ts.a).basis.size())
    throw std::logic_error("torsion_direct_sum: direct sum violated (does not span product torsion)");
  return ts;
}

bool reciprocity_predicate(const SmallField& F, const UniPoly& P, const UniPoly& h,
                           const RationalFunction& g) {
  if (!is_monic(F, P) || P.degree() < 1 || !is_irreducible(F, P))
    throw std::invalid_argument("reciprocity_predicate: P must be monic irreducible");
  if (h.degree() < 1) throw std::invalid_argument("reciprocity_predicate: deg h must be >= 1");
  if (!(valuation(F, RationalFunction::from_poly(h), P) == 0))
    throw std::invalid_argument("reciprocity_predicate: v_P(h) != 0");
  if (!(valuation(F, g, P) == 0)) throw std::invalid_argument("reciprocity_predicate: v_P(g) != 0");

  auto tower = std::make_shared<FieldTower>(F, P);  // default mode: z is a root of P
  ReducedCarlitz phi(tower, g);
  Fq n = tower->norm(phi.g_bar());
  return mod(F, P, h) == UniPoly::constant(n);
}

}  // namespace rankloc

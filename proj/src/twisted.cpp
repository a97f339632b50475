#include "rankloc/twisted.hpp"

#include <stdexcept>

namespace rankloc {

TwistedPoly t_add(const FieldTower& tw, const TwistedPoly& f, const TwistedPoly& g) {
  size_t n = std::max(f.coeffs().size(), g.coeffs().size());
  std::vector<FqmElem> c(n, tw.zero());
  for (size_t i = 0; i < n; ++i) {
    if (i < f.coeffs().size()) c[i] = tw.add(c[i], f.coeffs()[i]);
    if (i < g.coeffs().size()) c[i] = tw.add(c[i], g.coeffs()[i]);
  }
  return TwistedPoly(std::move(c));
}

TwistedPoly t_neg(const FieldTower& tw, const TwistedPoly& f) {
  std::vector<FqmElem> c(f.coeffs().begin(), f.coeffs().end());
  for (FqmElem& x : c) x = tw.neg(x);
  return TwistedPoly(std::move(c));
}

TwistedPoly t_sub(const FieldTower& tw, const TwistedPoly& f, const TwistedPoly& g) {
  return t_add(tw, f, t_neg(tw, g));
}

TwistedPoly t_mul(const FieldTower& tw, const TwistedPoly& f, const TwistedPoly& g) {
  if (f.is_zero() || g.is_zero()) return TwistedPoly();
  std::vector<FqmElem> c(f.coeffs().size() + g.coeffs().size() - 1, tw.zero());
  for (size_t i = 0; i < f.coeffs().size(); ++i) {
    const FqmElem& a = f.coeffs()[i];
    if (a.is_zero()) continue;
    for (size_t j = 0; j < g.coeffs().size(); ++j) {
      const FqmElem& b = g.coeffs()[j];
      if (b.is_zero()) continue;
      c[i + j] = tw.add(c[i + j], tw.mul(a, tw.frobenius(b, i)));
    }
  }
  return TwistedPoly(std::move(c));
}

TwistedPoly t_scale(const FieldTower& tw, const FqmElem& a, const TwistedPoly& f) {
  std::vector<FqmElem> c(f.coeffs().begin(), f.coeffs().end());
  for (FqmElem& x : c) x = tw.mul(a, x);
  return TwistedPoly(std::move(c));
}

TwistedPoly t_constant(const FieldTower& tw, const FqmElem& a) {
  tw.check(a);
  return TwistedPoly({a});
}

LinearizedPoly to_linearized(const TwistedPoly& f) {
  return LinearizedPoly(std::vector<FqmElem>(f.coeffs().begin(), f.coeffs().end()));
}

TwistedPoly to_twisted(const LinearizedPoly& f) {
  return TwistedPoly(std::vector<FqmElem>(f.coeffs().begin(), f.coeffs().end()));
}

namespace {

FqmElem evaluate_span(const FieldTower& tw, std::span<const FqmElem> coeffs, const FqmElem& x) {
  tw.check(x);
  FqmElem acc = tw.zero();
  FqmElem xq = x;  // x^{q^i}
  for (size_t i = 0; i < coeffs.size(); ++i) {
    if (!coeffs[i].is_zero()) acc = tw.add(acc, tw.mul(coeffs[i], xq));
    if (i + 1 < coeffs.size()) xq = tw.frobenius(xq, 1);
  }
  return acc;
}

}  // namespace

FqmElem evaluate(const FieldTower& tw, const TwistedPoly& f, const FqmElem& x) {
  return evaluate_span(tw, f.coeffs(), x);
}

FqmElem evaluate(const FieldTower& tw, const LinearizedPoly& f, const FqmElem& x) {
  return evaluate_span(tw, f.coeffs(), x);
}

MatrixFq operator_matrix(const FieldTower& tw, const TwistedPoly& f) {
  uint32_t m = tw.m();
  MatrixFq A(m, m);
  for (uint32_t t = 0; t < m; ++t) {
    FqmElem basis_vec = tw.zero();
    basis_vec.c[t] = Fq{1};
    FqmElem img = evaluate(tw, f, basis_vec);
    for (uint32_t i = 0; i < m; ++i) A.at(i, t) = img.c[i];
  }
  return A;
}

std::vector<FqmElem> kernel_basis(const FieldTower& tw, const TwistedPoly& f) {
  if (f.is_zero())
    throw std::invalid_argument("kernel_basis: f = 0, kernel is the whole space");
  MatrixFq A = operator_matrix(tw, f);
  std::vector<std::vector<Fq>> ns = null_space(tw.base(), std::move(A));
  std::vector<FqmElem> basis;
  basis.reserve(ns.size());
  for (std::vector<Fq>& v : ns) basis.push_back(FqmElem{std::move(v)});
  return basis;
}

}  // namespace rankloc

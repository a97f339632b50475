#include "rankloc/tower.hpp"

#include <stdexcept>

namespace rankloc {

namespace {

UniPoly as_poly(const FqmElem& a) {
  return UniPoly(std::vector<Fq>(a.c.begin(), a.c.end()));
}

}  // namespace

FieldTower::FieldTower(SmallField base, const UniPoly& P) : base_(std::move(base)) {
  if (P.degree() < 1) throw std::invalid_argument("FieldTower: modulus must have degree >= 1");
  if (!is_monic(base_, P)) throw std::invalid_argument("FieldTower: modulus must be monic");
  if (!is_irreducible(base_, P)) throw std::invalid_argument("FieldTower: modulus is reducible over F_q");
  modulus_ = P;
  m_ = uint32_t(P.degree());
  z_ = gen();  // x-bar is a root of P by construction
  build_frobenius_matrix();
}

FieldTower::FieldTower(SmallField base, UniPoly modulus, const UniPoly& P, FqmElem z)
    : base_(std::move(base)) {
  if (modulus.degree() < 1) throw std::invalid_argument("FieldTower: modulus must have degree >= 1");
  if (!is_monic(base_, modulus)) throw std::invalid_argument("FieldTower: modulus must be monic");
  if (P.degree() != modulus.degree())
    throw std::invalid_argument("FieldTower: deg P must equal the extension degree m");
  if (!is_irreducible(base_, modulus))
    throw std::invalid_argument("FieldTower: modulus is reducible over F_q");
  if (!is_monic(base_, P) || !is_irreducible(base_, P))
    throw std::invalid_argument("FieldTower: P must be monic irreducible");
  modulus_ = std::move(modulus);
  m_ = uint32_t(modulus_.degree());
  check(z);
  z_ = std::move(z);
  build_frobenius_matrix();
  if (!eval_poly(P, z_).is_zero()) throw std::invalid_argument("FieldTower: z is not a root of P");
}

FqmElem FieldTower::gen() const {
  // residue class of x: for m = 1 the modulus is x + c0, so x-bar = -c0
  if (m_ == 1) return FqmElem{{base_.neg(modulus_.coeff(0))}};
  FqmElem g = zero();
  g.c[1] = base_.one();
  return g;
}

FqmElem FieldTower::embed(Fq c) const {
  base_.check(c);
  FqmElem r = zero();
  r.c[0] = c;
  return r;
}

std::optional<Fq> FieldTower::as_base(const FqmElem& a) const {
  check(a);
  for (size_t i = 1; i < a.c.size(); ++i)
    if (a.c[i].v != 0) return std::nullopt;
  return a.c[0];
}

FqmElem FieldTower::from_coeffs(std::vector<Fq> c) const {
  FqmElem r{std::move(c)};
  check(r);
  return r;
}

void FieldTower::check(const FqmElem& a) const {
  if (a.c.size() != m_)
    throw std::invalid_argument("FieldTower: element has " + std::to_string(a.c.size()) +
                                " coordinates, expected m = " + std::to_string(m_) +
                                " (tower mismatch?)");
  for (Fq x : a.c) base_.check(x);
}

FqmElem FieldTower::add(const FqmElem& a, const FqmElem& b) const {
  check(a), check(b);
  FqmElem r = a;
  for (uint32_t i = 0; i < m_; ++i) r.c[i] = base_.add(r.c[i], b.c[i]);
  return r;
}

FqmElem FieldTower::sub(const FqmElem& a, const FqmElem& b) const {
  check(a), check(b);
  FqmElem r = a;
  for (uint32_t i = 0; i < m_; ++i) r.c[i] = base_.sub(r.c[i], b.c[i]);
  return r;
}

FqmElem FieldTower::neg(const FqmElem& a) const {
  check(a);
  FqmElem r = a;
  for (Fq& x : r.c) x = base_.neg(x);
  return r;
}

FqmElem FieldTower::scalar_mul(Fq c, const FqmElem& a) const {
  base_.check(c);
  check(a);
  FqmElem r = a;
  for (Fq& x : r.c) x = base_.mul(c, x);
  return r;
}

FqmElem FieldTower::mul(const FqmElem& a, const FqmElem& b) const {
  check(a), check(b);
  std::vector<Fq> prod(2 * m_ - 1, Fq{0});
  for (uint32_t i = 0; i < m_; ++i) {
    if (a.c[i].v == 0) continue;
    for (uint32_t j = 0; j < m_; ++j)
      prod[i + j] = base_.add(prod[i + j], base_.mul(a.c[i], b.c[j]));
  }
  // reduce by the monic modulus
  for (size_t k = prod.size(); k-- > m_;) {
    Fq c = prod[k];
    if (c.v == 0) continue;
    prod[k] = Fq{0};
    for (uint32_t j = 0; j < m_; ++j)
      prod[k - m_ + j] = base_.sub(prod[k - m_ + j], base_.mul(c, modulus_.coeff(j)));
  }
  prod.resize(m_);
  return FqmElem{std::move(prod)};
}

FqmElem FieldTower::inv(const FqmElem& a) const {
  check(a);
  if (a.is_zero()) throw std::domain_error("FieldTower: division by zero");
  XgcdResult r = xgcd(base_, as_poly(a), modulus_);
  if (r.g.degree() != 0) throw std::logic_error("FieldTower: element not invertible (modulus reducible?)");
  // g = s*a + t*modulus with g = 1 after normalization
  FqmElem inv = zero();
  for (size_t i = 0; i < size_t(r.s.degree()) + 1 && i < m_; ++i) inv.c[i] = r.s.coeff(i);
  return inv;
}

FqmElem FieldTower::pow(FqmElem a, uint64_t n) const {
  check(a);
  FqmElem r = one();
  while (n) {
    if (n & 1) r = mul(r, a);
    a = mul(a, a);
    n >>= 1;
  }
  return r;
}

void FieldTower::build_frobenius_matrix() {
  frob_ = MatrixFq(m_, m_);
  FqmElem xq = pow(gen(), base_.q());
  FqmElem col = one();  // (x-bar^q)^t for t = 0, 1, ...
  for (uint32_t t = 0; t < m_; ++t) {
    for (uint32_t i = 0; i < m_; ++i) frob_.at(i, t) = col.c[i];
    if (t + 1 < m_) col = mul(col, xq);
  }
}

FqmElem FieldTower::frobenius(const FqmElem& a, uint64_t i) const {
  check(a);
  FqmElem r = a;
  for (uint64_t k = 0; k < i % m_; ++k) {
    FqmElem next = zero();
    for (uint32_t row = 0; row < m_; ++row) {
      Fq acc{0};
      for (uint32_t t = 0; t < m_; ++t) acc = base_.add(acc, base_.mul(frob_.at(row, t), r.c[t]));
      next.c[row] = acc;
    }
    r = std::move(next);
  }
  return r;
}

Fq FieldTower::norm(const FqmElem& a) const {
  check(a);
  FqmElem prod = one(), t = a;
  for (uint32_t i = 0; i < m_; ++i) {
    prod = mul(prod, t);
    if (i + 1 < m_) t = frobenius(t, 1);
  }
  std::optional<Fq> n = as_base(prod);
  if (!n) throw std::logic_error("FieldTower: norm left F_q (internal error)");
  return *n;
}

FqmElem FieldTower::eval_poly(const UniPoly& f, const FqmElem& x) const {
  check(x);
  FqmElem r = zero();
  for (size_t i = f.coeffs().size(); i-- > 0;) r = add(mul(r, x), embed(f.coeff(i)));
  return r;
}

MatrixFq FieldTower::expand_columns(std::span<const FqmElem> v) const {
  MatrixFq M(m_, v.size());
  for (size_t j = 0; j < v.size(); ++j) {
    check(v[j]);
    for (uint32_t i = 0; i < m_; ++i) M.at(i, j) = v[j].c[i];
  }
  return M;
}

std::string FieldTower::to_string(const FqmElem& a) const {
  check(a);
  // the extension generator prints as 'a' over a prime field (there is
  // only one generator in play) and as 'x' otherwise, with base-field
  // coefficients in 'a' and parenthesized
  const char* sym = base_.e() == 1 ? "a" : "x";
  std::string s;
  for (size_t i = a.c.size(); i-- > 0;) {
    if (a.c[i].v == 0) continue;
    if (!s.empty()) s += "+";
    std::string cs = base_.to_string(a.c[i]);
    if (i == 0) {
      s += cs;
    } else {
      if (cs != "1") s += base_.e() > 1 ? "(" + cs + ")" : cs;
      s += sym;
      if (i > 1) s += "^" + std::to_string(i);
    }
  }
  return s.empty() ? "0" : s;
}

}  // namespace rankloc

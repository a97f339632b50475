#include "rankloc/field.hpp"

#include <algorithm>
#include <stdexcept>

#include "rankloc/poly.hpp"

namespace rankloc {

namespace {

bool is_prime(uint32_t n) {
  if (n < 2) return false;
  for (uint32_t d = 2; uint64_t(d) * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

uint64_t ipow(uint64_t b, uint32_t e) {
  uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

}  // namespace

SmallField::SmallField(uint32_t p) : p_(p), e_(1), q_(p) {
  if (!is_prime(p)) throw std::invalid_argument("SmallField: p = " + std::to_string(p) + " is not prime");
  init_tables();
}

SmallField::SmallField(uint32_t p, uint32_t e, std::vector<uint32_t> modulus) : p_(p), e_(e) {
  if (!is_prime(p)) throw std::invalid_argument("SmallField: p = " + std::to_string(p) + " is not prime");
  if (e < 1) throw std::invalid_argument("SmallField: extension degree must be >= 1");
  uint64_t q = ipow(p, e);
  if (q > (uint64_t(1) << 31)) throw std::invalid_argument("SmallField: field too large");
  q_ = uint32_t(q);
  if (e == 1) {
    init_tables();
    return;
  }
  if (modulus.size() != size_t(e) + 1) throw std::invalid_argument("SmallField: modulus must have degree e");
  for (uint32_t c : modulus)
    if (c >= p) throw std::invalid_argument("SmallField: modulus coefficient out of range");
  if (modulus.back() != 1) throw std::invalid_argument("SmallField: modulus must be monic");
  modulus_ = std::move(modulus);

  SmallField fp(p);
  std::vector<Fq> mc(modulus_.size());
  for (size_t i = 0; i < modulus_.size(); ++i) mc[i] = Fq{modulus_[i]};
  if (!is_irreducible(fp, UniPoly(mc)))
    throw std::invalid_argument("SmallField: modulus is reducible over F_p");
  init_tables();
}

SmallField SmallField::with_default_modulus(uint32_t p, uint32_t e) {
  if (e == 1) return SmallField(p);
  SmallField fp(p);
  uint64_t total = ipow(p, e);
  for (uint64_t idx = 0; idx < total; ++idx) {
    std::vector<uint32_t> m(e + 1);
    uint64_t v = idx;
    for (uint32_t i = 0; i < e; ++i) {
      m[i] = uint32_t(v % p);
      v /= p;
    }
    m[e] = 1;
    std::vector<Fq> mc(m.size());
    for (size_t i = 0; i < m.size(); ++i) mc[i] = Fq{m[i]};
    if (is_irreducible(fp, UniPoly(mc))) return SmallField(p, e, std::move(m));
  }
  throw std::logic_error("SmallField: no irreducible modulus found");  // unreachable
}

SmallField SmallField::from_order(uint64_t q) {
  if (q < 2) throw std::invalid_argument("SmallField: q must be a prime power >= 2");
  uint64_t p = 0;
  for (uint64_t d = 2; d * d <= q; ++d)
    if (q % d == 0) {
      p = d;
      break;
    }
  if (p == 0) p = q;  // q itself prime
  uint32_t e = 0;
  uint64_t t = q;
  while (t % p == 0) {
    t /= p;
    ++e;
  }
  if (t != 1) throw std::invalid_argument("SmallField: q = " + std::to_string(q) + " is not a prime power");
  return with_default_modulus(uint32_t(p), e);
}

Fq SmallField::gen() const {
  if (e_ == 1) throw std::logic_error("SmallField: prime field has no extension generator");
  return Fq{p_};  // y = (0, 1, 0, ...)
}

Fq SmallField::from_coeffs(std::span<const uint32_t> c) const {
  if (c.size() > e_) throw std::invalid_argument("SmallField: too many coefficients for F_q element");
  uint32_t v = 0;
  for (size_t i = c.size(); i-- > 0;) {
    if (c[i] >= p_) throw std::invalid_argument("SmallField: coefficient out of F_p range");
    v = v * p_ + c[i];
  }
  return Fq{v};
}

std::vector<uint32_t> SmallField::coeffs(Fq a) const {
  check(a);
  std::vector<uint32_t> c(e_);
  uint32_t v = a.v;
  for (uint32_t i = 0; i < e_; ++i) {
    c[i] = v % p_;
    v /= p_;
  }
  return c;
}

void SmallField::check(Fq a) const {
  if (a.v >= q_)
    throw std::invalid_argument("SmallField: element " + std::to_string(a.v) + " out of range for q = " +
                                std::to_string(q_) + " (tower mismatch?)");
}

Fq SmallField::add_slow(Fq a, Fq b) const {
  uint32_t r = 0, mul = 1;
  uint32_t x = a.v, y = b.v;
  for (uint32_t i = 0; i < e_; ++i) {
    r += ((x + y) % p_) * mul;
    x /= p_, y /= p_;
    mul *= p_;
  }
  return Fq{r};
}

Fq SmallField::neg_slow(Fq a) const {
  uint32_t r = 0, mul = 1, x = a.v;
  for (uint32_t i = 0; i < e_; ++i) {
    r += ((p_ - x % p_) % p_) * mul;
    x /= p_;
    mul *= p_;
  }
  return Fq{r};
}

Fq SmallField::mul_slow(Fq a, Fq b) const {
  if (e_ == 1) return Fq{uint32_t(uint64_t(a.v) * b.v % p_)};
  std::vector<uint32_t> ca = coeffs(a), cb = coeffs(b);
  std::vector<uint32_t> prod(2 * e_ - 1, 0);
  for (uint32_t i = 0; i < e_; ++i) {
    if (!ca[i]) continue;
    for (uint32_t j = 0; j < e_; ++j) prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % p_;
  }
  for (size_t i = prod.size(); i-- > e_;) {
    uint32_t c = prod[i];
    if (!c) continue;
    prod[i] = 0;
    for (uint32_t j = 0; j < e_; ++j)
      prod[i - e_ + j] = (prod[i - e_ + j] + (p_ - c % p_) * modulus_[j]) % p_;
  }
  prod.resize(e_);
  return from_coeffs(prod);
}

Fq SmallField::inv_slow(Fq a) const {
  // a^(q-2); fine for the rare untabled fields
  Fq r = one(), b = a;
  uint64_t n = q_ - 2;
  while (n) {
    if (n & 1) r = mul_slow(r, b);
    b = mul_slow(b, b);
    n >>= 1;
  }
  return r;
}

Fq SmallField::inv(Fq a) const {
  check(a);
  if (a.v == 0) throw std::domain_error("SmallField: division by zero");
  if (tables_) return Fq{inv_[a.v]};
  return inv_slow(a);
}

Fq SmallField::pow(Fq a, uint64_t n) const {
  check(a);
  Fq r = one(), b = a;
  while (n) {
    if (n & 1) r = mul(r, b);
    b = mul(b, b);
    n >>= 1;
  }
  return r;
}

void SmallField::init_tables() {
  if (q_ > kTableLimit) return;
  add_.resize(size_t(q_) * q_);
  mul_.resize(size_t(q_) * q_);
  neg_.resize(q_);
  inv_.resize(q_);
  for (uint32_t i = 0; i < q_; ++i) {
    neg_[i] = neg_slow(Fq{i}).v;
    for (uint32_t j = 0; j < q_; ++j) {
      add_[size_t(i) * q_ + j] = add_slow(Fq{i}, Fq{j}).v;
      mul_[size_t(i) * q_ + j] = mul_slow(Fq{i}, Fq{j}).v;
    }
  }
  inv_[0] = 0;  // guarded by inv()
  for (uint32_t i = 1; i < q_; ++i) inv_[i] = inv_slow(Fq{i}).v;
  tables_ = true;
}

std::string SmallField::to_string(Fq a) const {
  check(a);
  if (e_ == 1) return std::to_string(a.v);
  std::vector<uint32_t> c = coeffs(a);
  std::string s;
  for (size_t i = c.size(); i-- > 0;) {
    if (!c[i]) continue;
    if (!s.empty()) s += "+";
    if (i == 0) {
      s += std::to_string(c[i]);
    } else {
      if (c[i] != 1) s += std::to_string(c[i]);
      s += "a";
      if (i > 1) s += "^" + std::to_string(i);
    }
  }
  return s.empty() ? "0" : s;
}

uint32_t fq_rank(const SmallField& F, MatrixFq M) {
  size_t rows = M.rows(), cols = M.cols();
  uint32_t rank = 0;
  for (size_t col = 0; col < cols && rank < rows; ++col) {
    size_t piv = rank;
    while (piv < rows && M.at(piv, col).v == 0) ++piv;
    if (piv == rows) continue;
    if (piv != rank)
      for (size_t j = col; j < cols; ++j) std::swap(M.at(rank, j), M.at(piv, j));
    Fq lead_inv = F.inv(M.at(rank, col));
    for (size_t i = rank + 1; i < rows; ++i) {
      Fq c = M.at(i, col);
      if (c.v == 0) continue;
      Fq factor = F.mul(c, lead_inv);
      for (size_t j = col; j < cols; ++j)
        M.at(i, j) = F.sub(M.at(i, j), F.mul(factor, M.at(rank, j)));
    }
    ++rank;
  }
  return rank;
}

std::vector<size_t> rref(const SmallField& F, MatrixFq& M) {
  size_t rows = M.rows(), cols = M.cols();
  std::vector<size_t> pivots;
  size_t r = 0;
  for (size_t col = 0; col < cols && r < rows; ++col) {
    size_t piv = r;
    while (piv < rows && M.at(piv, col).v == 0) ++piv;
    if (piv == rows) continue;
    if (piv != r)
      for (size_t j = 0; j < cols; ++j) std::swap(M.at(r, j), M.at(piv, j));
    Fq lead_inv = F.inv(M.at(r, col));
    for (size_t j = 0; j < cols; ++j) M.at(r, j) = F.mul(lead_inv, M.at(r, j));
    for (size_t i = 0; i < rows; ++i) {
      if (i == r) continue;
      Fq c = M.at(i, col);
      if (c.v == 0) continue;
      for (size_t j = 0; j < cols; ++j) M.at(i, j) = F.sub(M.at(i, j), F.mul(c, M.at(r, j)));
    }
    pivots.push_back(col);
    ++r;
  }
  return pivots;
}

std::vector<std::vector<Fq>> null_space(const SmallField& F, MatrixFq M) {
  size_t cols = M.cols();
  std::vector<size_t> pivots = rref(F, M);
  std::vector<bool> is_pivot(cols, false);
  for (size_t c : pivots) is_pivot[c] = true;

  std::vector<std::vector<Fq>> basis;
  for (size_t free_col = 0; free_col < cols; ++free_col) {
    if (is_pivot[free_col]) continue;
    std::vector<Fq> v(cols, Fq{0});
    v[free_col] = F.one();
    for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = F.neg(M.at(r, free_col));
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace rankloc

#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace rankloc {

/// An element of a small finite field F_q, q = p^e. The value is the
/// canonical integer encoding sum_i c_i p^i of the coefficient vector
/// (c_0, ..., c_{e-1}) over F_p with respect to the power basis of the
/// field's generator. Elements are plain values; all arithmetic goes
/// through the owning SmallField.
struct Fq {
  uint32_t v = 0;
  friend constexpr auto operator<=>(const Fq&, const Fq&) = default;
};

/// F_q = F_p[y]/(g) for a prime p and a monic irreducible g of degree e
/// (no modulus for e = 1). Immutable after construction; operations are
/// pure functions, so instances can be shared freely across threads.
///
/// For q up to kTableLimit full addition/multiplication tables are built
/// at construction and every operation is a table lookup; larger fields
/// fall back to coefficient arithmetic.
class SmallField {
 public:
  static constexpr uint32_t kTableLimit = 512;

  /// Prime field F_p.
  explicit SmallField(uint32_t p);

  /// F_{p^e} with an explicit monic irreducible modulus over F_p,
  /// ascending coefficients, length e+1.
  SmallField(uint32_t p, uint32_t e, std::vector<uint32_t> modulus);

  /// F_{p^e} with the default modulus: the monic irreducible of degree e
  /// whose ascending coefficient vector has the smallest base-p integer
  /// encoding. Deterministic, so serialized data stays portable.
  static SmallField with_default_modulus(uint32_t p, uint32_t e);

  /// Factors q = p^e and uses the default modulus.
  static SmallField from_order(uint64_t q);

  uint32_t p() const { return p_; }
  uint32_t e() const { return e_; }
  uint32_t q() const { return q_; }
  /// Ascending, length e+1; empty for e == 1.
  const std::vector<uint32_t>& modulus() const { return modulus_; }

  bool operator==(const SmallField& other) const {
    return p_ == other.p_ && e_ == other.e_ && modulus_ == other.modulus_;
  }

  Fq zero() const { return Fq{0}; }
  Fq one() const { return Fq{1}; }
  /// The residue class of y for e > 1; throws for prime fields.
  Fq gen() const;
  /// Embeds n mod p (a prime-field element).
  Fq from_int(uint64_t n) const { return Fq{uint32_t(n % p_)}; }
  /// Ascending F_p coordinates, at most e of them.
  Fq from_coeffs(std::span<const uint32_t> c) const;
  std::vector<uint32_t> coeffs(Fq a) const;  // length e

  bool is_zero(Fq a) const { return a.v == 0; }

  Fq add(Fq a, Fq b) const {
    check(a), check(b);
    if (tables_) return Fq{add_[size_t(a.v) * q_ + b.v]};
    return add_slow(a, b);
  }
  Fq sub(Fq a, Fq b) const { return add(a, neg(b)); }
  Fq neg(Fq a) const {
    check(a);
    if (tables_) return Fq{neg_[a.v]};
    return neg_slow(a);
  }
  Fq mul(Fq a, Fq b) const {
    check(a), check(b);
    if (tables_) return Fq{mul_[size_t(a.v) * q_ + b.v]};
    return mul_slow(a, b);
  }
  Fq inv(Fq a) const;  // throws on zero
  Fq div(Fq a, Fq b) const { return mul(a, inv(b)); }
  Fq pow(Fq a, uint64_t n) const;

  /// Validates that a is a canonical representative of this field.
  void check(Fq a) const;

  /// "3" for prime fields, "a^2+a+1" style otherwise (generator printed
  /// as 'a').
  std::string to_string(Fq a) const;

 private:
  SmallField() = default;
  void init_tables();
  Fq add_slow(Fq a, Fq b) const;
  Fq neg_slow(Fq a) const;
  Fq mul_slow(Fq a, Fq b) const;
  Fq inv_slow(Fq a) const;

  uint32_t p_ = 0, e_ = 0, q_ = 0;
  std::vector<uint32_t> modulus_;
  bool tables_ = false;
  std::vector<uint32_t> add_, mul_, neg_, inv_;
};

/// Dense row-major matrix over F_q. Entries are interpreted relative to a
/// SmallField supplied per operation.
class MatrixFq {
 public:
  MatrixFq() = default;
  MatrixFq(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  Fq& at(size_t i, size_t j) { return a_[i * cols_ + j]; }
  const Fq& at(size_t i, size_t j) const { return a_[i * cols_ + j]; }
  std::span<Fq> row(size_t i) { return {a_.data() + i * cols_, cols_}; }
  std::span<const Fq> row(size_t i) const { return {a_.data() + i * cols_, cols_}; }

  friend bool operator==(const MatrixFq&, const MatrixFq&) = default;

 private:
  size_t rows_ = 0, cols_ = 0;
  std::vector<Fq> a_;
};

/// Row-echelon rank over F_q.
uint32_t fq_rank(const SmallField& F, MatrixFq M);

/// Reduces M in place to reduced row-echelon form; returns pivot columns.
std::vector<size_t> rref(const SmallField& F, MatrixFq& M);

/// Basis of {x : Mx = 0}, one vector (length cols) per free column, in
/// ascending free-column order; the basis is in reduced column-echelon
/// form, so it is deterministic.
std::vector<std::vector<Fq>> null_space(const SmallField& F, MatrixFq M);

}  // namespace rankloc

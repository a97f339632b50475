#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "rankloc/carlitz.hpp"
#include "rankloc/dirichlet.hpp"

namespace rankloc {

/// Parameters of the construction. q = p^e comes from the SmallField the
/// code is built over; R = r + delta - 1; h = prod_i (T^R - a_i).
/// Validity conditions:
///   C1  gcd(q, R) = 1
///   C2  (s+1) r < ell R
///   C3  s+1 <= ell < q
///   C4  ell R <= m
/// plus delta >= 2, r >= 1, and the a_i pairwise distinct in F_q^*.
/// Strict mode additionally demands delta < R (equivalently r >= 2).
struct CodeParams {
  uint32_t r = 0, delta = 0, ell = 0, s = 0, m = 0;
  std::vector<Fq> a;
  std::optional<UniPoly> P;  // resolved by build_code when absent

  uint32_t R() const { return r + delta - 1; }
  uint32_t length() const { return ell * R(); }
  uint64_t fq_dimension(uint32_t m_) const { return uint64_t(m_) * (s + 1) * r; }
};

/// prod_i (T^R - a_i).
UniPoly locality_modulus(const SmallField& F, const CodeParams& params);

/// Throws std::invalid_argument naming the violated condition.
void validate_params(const SmallField& F, const CodeParams& params, bool strict_thm11 = false);

/// Externally supplied tower data for reproducing published instances:
/// an F_{q^m} modulus distinct from P, the root z of P, and optionally
/// the torsion bases, which are then validated instead of computed.
struct ExplicitConstruction {
  UniPoly fqm_modulus;
  FqmElem z;
  std::optional<std::vector<std::vector<FqmElem>>> bases;  // ell rows of R elements
};

/// A fully resolved code: tower, reduced Carlitz module, torsion bases
/// beta_j^(i), and group-major locality sets. Immutable after build; all
/// operations on it are pure.
class CodeInstance {
 public:
  const CodeParams& params() const { return params_; }
  const SmallField& field() const { return module_.tower().base(); }
  const FieldTower& tower() const { return module_.tower(); }
  const ReducedCarlitz& module() const { return module_; }
  const UniPoly& h() const { return h_; }
  const UniPoly& P() const { return *params_.P; }
  /// ell x R, row i spans W_i = phi-bar[T^R - a_i].
  const std::vector<std::vector<FqmElem>>& torsion_bases() const { return bases_; }
  const FqmElem& beta(uint32_t group, uint32_t j) const { return bases_[group][j]; }

  uint32_t length() const { return params_.length(); }
  /// Column t (0-based) belongs to group t / R at position t % R.
  uint32_t group_of(uint32_t col) const { return col / params_.R(); }
  /// 0-based columns of each locality set, group-major.
  std::vector<std::vector<uint32_t>> locality_sets() const;

  friend CodeInstance build_code(const SmallField& F, CodeParams params,
                                 const std::optional<ExplicitConstruction>& explicit_data);

 private:
  CodeInstance(CodeParams params, UniPoly h, ReducedCarlitz module,
               std::vector<std::vector<FqmElem>> bases)
      : params_(std::move(params)), h_(std::move(h)), module_(std::move(module)),
        bases_(std::move(bases)) {}

  CodeParams params_;
  UniPoly h_;
  ReducedCarlitz module_;
  std::vector<std::vector<FqmElem>> bases_;
};

/// Builds the code: validates parameters, resolves P (searching with
/// find_prime when absent), constructs the tower (default mode unless
/// explicit data is given), and computes or validates the torsion bases.
CodeInstance build_code(const SmallField& F, CodeParams params,
                        const std::optional<ExplicitConstruction>& explicit_data = std::nullopt);

/// A message: s+1 twisted-polynomial blocks g_0..g_s, each of tau-degree
/// at most r-1.
struct Message {
  std::vector<TwistedPoly> blocks;
};

void validate_message(const CodeInstance& code, const Message& msg);

/// Codeword of length ell*R over F_{q^m}; nullopt marks an erased entry.
struct Codeword {
  std::vector<std::optional<FqmElem>> entries;

  bool has_erasures() const {
    for (const auto& e : entries)
      if (!e) return true;
    return false;
  }
  friend bool operator==(const Codeword&, const Codeword&) = default;
};

/// f = sum_k g_k * phi_{T^R}^k in the twisted ring.
TwistedPoly message_polynomial(const CodeInstance& code, const Message& msg);

/// enc(f) = (f(beta_j^(i)))_{i,j}, group-major.
Codeword encode(const CodeInstance& code, const Message& msg);

/// f restricted to W_i: sum_k a_i^k iota(g_k), of q-degree <= r-1
/// (group is 0-based).
LinearizedPoly restriction(const CodeInstance& code, const Message& msg, uint32_t group);

/// Unique linearized polynomial of q-degree <= degree_bound - 1 through
/// the data; requires exactly degree_bound F_q-independent points (the
/// Moore matrix must be invertible).
LinearizedPoly interpolate_linearized(const FieldTower& tw, std::span<const FqmElem> points,
                                      std::span<const FqmElem> values, uint32_t degree_bound);

/// Repairs every erased entry from r surviving entries of its locality
/// set (lowest column indices first). Throws when a group has fewer than
/// r survivors.
Codeword recover(const CodeInstance& code, const Codeword& word);

/// m x (ell R) coordinate expansion; throws on erased entries.
MatrixFq codeword_matrix(const CodeInstance& code, const Codeword& word);

uint32_t rank_weight(const CodeInstance& code, const Codeword& word);
uint32_t rank_distance(const CodeInstance& code, const Codeword& x, const Codeword& y);

enum class VerifyMode { Exhaustive, Sampled };

struct VerifyOptions {
  VerifyMode mode = VerifyMode::Sampled;
  uint64_t samples = 1000;
  bool strict_thm11 = false;
  uint64_t seed = 1;

  static constexpr uint64_t kGlobalGuard = 10'000'000;  // codewords
  static constexpr uint64_t kLocalGuard = 1'000'000;    // local codewords
};

struct VerifyReport {
  bool params_ok = false;
  bool strict_checked = false, strict_ok = true;  // delta < R when requested

  uint64_t fq_dimension = 0;  // m (s+1) r
  bool injective = false;     // no nonzero message hit the zero codeword

  bool exhaustive = false;       // full message space enumerated
  bool exhaustive_fallback = false;  // guard exceeded, sampled instead
  uint64_t messages_checked = 0;
  uint32_t min_weight = 0;       // minimum observed nonzero rank weight
  uint32_t distance_formula = 0; // ell R - R s - r + 1
  bool distance_ok = false;

  std::vector<uint32_t> local_distance;  // per group
  bool local_exhaustive = false;
  bool local_ok = false;  // every group >= delta

  uint64_t singleton_lhs = 0, singleton_rhs = 0;  // dimension bound exponents
  bool singleton_ok = false;

  uint32_t locality_bound = 0;  // n - k + 1 - (ceil(k/r)-1)(delta-1)
  bool optimal = false;         // distance meets the locality bound

  bool pass = false;
};

VerifyReport verify_code(const CodeInstance& code, const VerifyOptions& opts);

}  // namespace rankloc

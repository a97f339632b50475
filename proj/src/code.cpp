#include "rankloc/code.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

#include "rankloc/errors.hpp"

namespace rankloc {

UniPoly locality_modulus(const SmallField& F, const CodeParams& params) {
  UniPoly h = UniPoly::one();
  for (Fq ai : params.a) {
    UniPoly factor = UniPoly::monomial(params.R());
    factor = sub(F, factor, UniPoly::constant(ai));
    h = mul(F, h, factor);
  }
  return h;
}

void validate_params(const SmallField& F, const CodeParams& params, bool strict_thm11) {
  uint32_t q = F.q(), R = params.R();
  if (params.r < 1) throw std::invalid_argument("params: r must be >= 1");
  if (params.delta < 2) throw std::invalid_argument("params: delta must be >= 2");
  if (params.ell < 1) throw std::invalid_argument("params: ell must be >= 1");
  if (params.m < 1) throw std::invalid_argument("params: m must be >= 1");
  for (uint32_t v : {params.r, params.delta, params.ell, params.s, params.m})
    if (v > 1'000'000) throw std::invalid_argument("params: value out of supported range");
  if (std::gcd(q, R) != 1) throw std::invalid_argument("params: C1 violated, gcd(q, R) != 1");
  if (!(uint64_t(params.s + 1) * params.r < uint64_t(params.ell) * R))
    throw std::invalid_argument("params: C2 violated, (s+1)r must be < ell*R");
  if (!(params.s + 1 <= params.ell && params.ell < q))
    throw std::invalid_argument("params: C3 violated, need s+1 <= ell < q");
  if (!(uint64_t(params.ell) * R <= params.m))
    throw std::invalid_argument("params: C4 violated, need ell*R <= m");
  if (strict_thm11 && !(params.delta < R))
    throw std::invalid_argument("params: strict mode requires delta < R (r >= 2)");

  if (params.a.size() != params.ell)
    throw std::invalid_argument("params: need exactly ell evaluation constants a_i");
  for (size_t i = 0; i < params.a.size(); ++i) {
    F.check(params.a[i]);
    if (params.a[i].v == 0) throw std::invalid_argument("params: a_i must be nonzero");
    for (size_t j = i + 1; j < params.a.size(); ++j)
      if (params.a[i] == params.a[j]) throw std::invalid_argument("params: a_i must be pairwise distinct");
  }

  if (params.P) {
    const UniPoly& P = *params.P;
    if (P.degree() != long(params.m)) throw std::invalid_argument("params: deg P != m");
    if (!is_monic(F, P) || !is_irreducible(F, P))
      throw std::invalid_argument("params: P must be monic irreducible");
    UniPoly h = locality_modulus(F, params);
    if (!(mod(F, P, h) == UniPoly::one()))
      throw std::invalid_argument("params: P != 1 (mod h)");
  }
}

CodeInstance build_code(const SmallField& F, CodeParams params,
                        const std::optional<ExplicitConstruction>& explicit_data) {
  validate_params(F, params);
  UniPoly h = locality_modulus(F, params);

  if (!params.P) {
    SearchReport rep = find_prime(F, h, params.m, UniPoly::one());
    if (!rep.found)
      throw std::invalid_argument("build_code: no monic irreducible P = 1 (mod h) of degree m = " +
                                  std::to_string(params.m) + " exists");
    params.P = *rep.found;
  }
  validate_params(F, params);  // now covers P

  std::shared_ptr<const FieldTower> tower;
  if (explicit_data) {
    tower = std::make_shared<FieldTower>(F, explicit_data->fqm_modulus, *params.P, explicit_data->z);
  } else {
    tower = std::make_shared<FieldTower>(F, *params.P);
  }
  ReducedCarlitz module(tower);  // the Carlitz case g = 1

  uint32_t R = params.R();
  std::vector<std::vector<FqmElem>> bases;
  if (explicit_data && explicit_data->bases) {
    bases = *explicit_data->bases;
    if (bases.size() != params.ell)
      throw std::invalid_argument("build_code: expected ell rows of explicit basis elements");
    for (uint32_t i = 0; i < params.ell; ++i) {
      if (bases[i].size() != R)
        throw std::invalid_argument("build_code: explicit basis row must have R elements");
      UniPoly factor = sub(F, UniPoly::monomial(R), UniPoly::constant(params.a[i]));
      TwistedPoly div_poly = module.phi_of(factor);
      for (const FqmElem& b : bases[i])
        if (!evaluate(*tower, div_poly, b).is_zero())
          throw std::invalid_argument("build_code: explicit basis element is not a torsion point of group " +
                                      std::to_string(i + 1));
      if (fq_rank(F, tower->expand_columns(bases[i])) != R)
        throw std::invalid_argument("build_code: explicit basis of group " + std::to_string(i + 1) +
                                    " is F_q-dependent");
    }
  } else {
    for (uint32_t i = 0; i < params.ell; ++i) {
      UniPoly factor = sub(F, UniPoly::monomial(R), UniPoly::constant(params.a[i]));
      TorsionSpace ts = torsion_space(module, factor);
      if (ts.dim() != R)
        throw std::invalid_argument("build_code: construction broken, dim phi[T^R - a_" +
                                    std::to_string(i + 1) + "] = " + std::to_string(ts.dim()) +
                                    " != R (P invalid)");
      bases.push_back(std::move(ts.basis));
    }
  }

  // the concatenated bases must be independent (W = direct sum of the W_i)
  std::vector<FqmElem> all;
  for (const auto& row : bases) all.insert(all.end(), row.begin(), row.end());
  if (fq_rank(F, tower->expand_columns(all)) != params.length())
    throw std::invalid_argument("build_code: torsion bases are not in direct sum");

  return CodeInstance(std::move(params), std::move(h), std::move(module), std::move(bases));
}

std::vector<std::vector<uint32_t>> CodeInstance::locality_sets() const {
  std::vector<std::vector<uint32_t>> sets(params_.ell);
  uint32_t R = params_.R();
  for (uint32_t i = 0; i < params_.ell; ++i) {
    sets[i].resize(R);
    for (uint32_t j = 0; j < R; ++j) sets[i][j] = i * R + j;
  }
  return sets;
}

void validate_message(const CodeInstance& code, const Message& msg) {
  if (msg.blocks.size() != size_t(code.params().s) + 1)
    throw std::invalid_argument("message: expected s+1 = " + std::to_string(code.params().s + 1) +
                                " blocks, got " + std::to_string(msg.blocks.size()));
  for (const TwistedPoly& g : msg.blocks) {
    if (g.tau_degree() > long(code.params().r) - 1)
      throw std::invalid_argument("message: block tau-degree exceeds r-1");
    for (const FqmElem& c : g.coeffs()) code.tower().check(c);
  }
}

TwistedPoly message_polynomial(const CodeInstance& code, const Message& msg) {
  validate_message(code, msg);
  const FieldTower& tw = code.tower();
  TwistedPoly phi_TR = code.module().phi_of(UniPoly::monomial(code.params().R()));
  TwistedPoly f;  // sum g_k * phi_{T^R}^k, Horner from the top block
  for (size_t k = msg.blocks.size(); k-- > 0;)
    f = t_add(tw, t_mul(tw, f, phi_TR), msg.blocks[k]);
  return f;
}

Codeword encode(const CodeInstance& code, const Message& msg) {
  const FieldTower& tw = code.tower();
  TwistedPoly f = message_polynomial(code, msg);
  Codeword w;
  w.entries.reserve(code.length());
  for (uint32_t i = 0; i < code.params().ell; ++i)
    for (uint32_t j = 0; j < code.params().R(); ++j)
      w.entries.emplace_back(evaluate(tw, f, code.beta(i, j)));
  return w;
}

LinearizedPoly restriction(const CodeInstance& code, const Message& msg, uint32_t group) {
  validate_message(code, msg);
  if (group >= code.params().ell) throw std::invalid_argument("restriction: group index out of range");
  const FieldTower& tw = code.tower();
  const SmallField& F = code.field();
  Fq ai = code.params().a[group];

  std::vector<FqmElem> coeffs(code.params().r, tw.zero());
  Fq ak = F.one();  // a_i^k
  for (const TwistedPoly& g : msg.blocks) {
    for (size_t j = 0; j < g.coeffs().size(); ++j)
      coeffs[j] = tw.add(coeffs[j], tw.scalar_mul(ak, g.coeffs()[j]));
    ak = F.mul(ak, ai);
  }
  return LinearizedPoly(std::move(coeffs));
}

LinearizedPoly interpolate_linearized(const FieldTower& tw, std::span<const FqmElem> points,
                                      std::span<const FqmElem> values, uint32_t degree_bound) {
  if (degree_bound < 1) throw std::invalid_argument("interpolate: degree bound must be >= 1");
  if (points.size() != degree_bound || values.size() != degree_bound)
    throw std::invalid_argument("interpolate: need exactly degree_bound points and values");
  uint32_t n = degree_bound;

  // Moore system M[i][j] = points[i]^{q^j}, solved over F_{q^m}
  std::vector<std::vector<FqmElem>> aug(n);
  for (uint32_t i = 0; i < n; ++i) {
    aug[i].reserve(n + 1);
    FqmElem pw = points[i];
    for (uint32_t j = 0; j < n; ++j) {
      aug[i].push_back(pw);
      if (j + 1 < n) pw = tw.frobenius(pw, 1);
    }
    aug[i].push_back(values[i]);
  }
  for (uint32_t col = 0; col < n; ++col) {
    uint32_t piv = col;
    while (piv < n && aug[piv][col].is_zero()) ++piv;
    if (piv == n)
      throw std::invalid_argument("interpolate: Moore matrix singular, points are F_q-linearly dependent");
    std::swap(aug[col], aug[piv]);
    FqmElem inv = tw.inv(aug[col][col]);
    for (uint32_t j = col; j <= n; ++j) aug[col][j] = tw.mul(inv, aug[col][j]);
    for (uint32_t i = 0; i < n; ++i) {
      if (i == col || aug[i][col].is_zero()) continue;
      FqmElem c = aug[i][col];
      for (uint32_t j = col; j <= n; ++j)
        aug[i][j] = tw.sub(aug[i][j], tw.mul(c, aug[col][j]));
    }
  }
  std::vector<FqmElem> coeffs(n);
  for (uint32_t i = 0; i < n; ++i) coeffs[i] = aug[i][n];
  return LinearizedPoly(std::move(coeffs));
}

Codeword recover(const CodeInstance& code, const Codeword& word) {
  if (word.entries.size() != code.length())
    throw std::invalid_argument("recover: codeword length mismatch");
  const FieldTower& tw = code.tower();
  uint32_t R = code.params().R(), r = code.params().r;

  Codeword out = word;
  for (uint32_t i = 0; i < code.params().ell; ++i) {
    std::vector<uint32_t> erased, survivors;
    for (uint32_t j = 0; j < R; ++j)
      (word.entries[i * R + j] ? survivors : erased).push_back(j);
    if (erased.empty()) continue;
    if (survivors.size() < r)
      throw std::invalid_argument("recover: insufficient survivors in group " + std::to_string(i + 1) +
                                  " (" + std::to_string(survivors.size()) + " < r = " + std::to_string(r) + ")");
    std::vector<FqmElem> points, values;
    for (uint32_t t = 0; t < r; ++t) {  // lowest column indices first
      points.push_back(code.beta(i, survivors[t]));
      values.push_back(*word.entries[i * R + survivors[t]]);
    }
    LinearizedPoly local = interpolate_linearized(tw, points, values, r);
    for (uint32_t j : erased) out.entries[i * R + j] = evaluate(tw, local, code.beta(i, j));
  }
  return out;
}

MatrixFq codeword_matrix(const CodeInstance& code, const Codeword& word) {
  if (word.entries.size() != code.length())
    throw std::invalid_argument("codeword_matrix: length mismatch");
  std::vector<FqmElem> cols;
  cols.reserve(word.entries.size());
  for (const auto& e : word.entries) {
    if (!e) throw std::invalid_argument("codeword_matrix: erased entries present");
    cols.push_back(*e);
  }
  return code.tower().expand_columns(cols);
}

uint32_t rank_weight(const CodeInstance& code, const Codeword& word) {
  return fq_rank(code.field(), codeword_matrix(code, word));
}

uint32_t rank_distance(const CodeInstance& code, const Codeword& x, const Codeword& y) {
  if (x.entries.size() != code.length() || y.entries.size() != code.length())
    throw std::invalid_argument("rank_distance: length mismatch");
  const FieldTower& tw = code.tower();
  Codeword diff;
  diff.entries.reserve(code.length());
  for (size_t t = 0; t < x.entries.size(); ++t) {
    if (!x.entries[t] || !y.entries[t])
      throw std::invalid_argument("rank_distance: erased entries present");
    diff.entries.emplace_back(tw.sub(*x.entries[t], *y.entries[t]));
  }
  return rank_weight(code, diff);
}

namespace {

// q^k capped at limit+1 (so "> limit" detects overflow without wrapping)
uint64_t pow_capped(uint64_t q, uint64_t k, uint64_t limit) {
  uint64_t r = 1;
  for (uint64_t i = 0; i < k; ++i) {
    if (r > limit / q) return limit + 1;
    r *= q;
  }
  return r;
}

void add_into(const SmallField& F, MatrixFq& acc, const MatrixFq& inc) {
  for (size_t i = 0; i < acc.rows(); ++i)
    for (size_t j = 0; j < acc.cols(); ++j) acc.at(i, j) = F.add(acc.at(i, j), inc.at(i, j));
}

// minimum rank over all nonzero F_q-combinations of the given basis
// matrices, by odometer enumeration; also reports whether a zero matrix
// was hit (combination in the kernel)
struct EnumResult {
  uint32_t min_rank = UINT32_MAX;
  bool hit_zero = false;
  uint64_t checked = 0;
};

EnumResult enumerate_span(const SmallField& F, const std::vector<MatrixFq>& basis, uint64_t space) {
  EnumResult res;
  if (basis.empty()) return res;
  size_t rows = basis[0].rows(), cols = basis[0].cols();
  MatrixFq cur(rows, cols);
  std::vector<uint32_t> digits(basis.size(), 0);
  for (uint64_t step = 1; step < space; ++step) {
    size_t i = 0;
    while (digits[i] == F.q() - 1) {
      digits[i] = 0;
      add_into(F, cur, basis[i]);
      ++i;
    }
    ++digits[i];
    add_into(F, cur, basis[i]);
    uint32_t w = fq_rank(F, cur);
    if (w == 0) res.hit_zero = true;
    res.min_rank = std::min(res.min_rank, w);
    ++res.checked;
  }
  return res;
}

Message random_message(const CodeInstance& code, std::mt19937_64& rng) {
  const FieldTower& tw = code.tower();
  uint32_t q = code.field().q();
  Message msg;
  bool nonzero = false;
  while (!nonzero) {
    msg.blocks.clear();
    for (uint32_t k = 0; k <= code.params().s; ++k) {
      std::vector<FqmElem> coeffs;
      for (uint32_t t = 0; t < code.params().r; ++t) {
        FqmElem c = tw.zero();
        for (uint32_t mu = 0; mu < tw.m(); ++mu) c.c[mu] = Fq{uint32_t(rng() % q)};
        nonzero = nonzero || !c.is_zero();
        coeffs.push_back(std::move(c));
      }
      msg.blocks.emplace_back(std::move(coeffs));
    }
  }
  return msg;
}

}  // namespace

VerifyReport verify_code(const CodeInstance& code, const VerifyOptions& opts) {
  const SmallField& F = code.field();
  const FieldTower& tw = code.tower();
  const CodeParams& p = code.params();
  uint32_t R = p.R(), n = p.length();

  VerifyReport rep;
  try {
    validate_params(F, p, false);
    rep.params_ok = true;
  } catch (const std::invalid_argument&) {
    rep.params_ok = false;
  }
  rep.strict_checked = opts.strict_thm11;
  rep.strict_ok = !opts.strict_thm11 || p.delta < R;

  rep.fq_dimension = uint64_t(p.fq_dimension(p.m));
  rep.distance_formula = n - R * p.s - p.r + 1;

  uint64_t space = pow_capped(F.q(), rep.fq_dimension, VerifyOptions::kGlobalGuard);
  bool want_exhaustive = opts.mode == VerifyMode::Exhaustive;
  rep.exhaustive = want_exhaustive && space <= VerifyOptions::kGlobalGuard;
  rep.exhaustive_fallback = want_exhaustive && !rep.exhaustive;

  if (rep.exhaustive) {
    // basis messages: one power-basis coefficient in one tau-slot of one block
    std::vector<MatrixFq> basis;
    for (uint32_t k = 0; k <= p.s; ++k)
      for (uint32_t t = 0; t < p.r; ++t)
        for (uint32_t mu = 0; mu < p.m; ++mu) {
          Message msg;
          msg.blocks.assign(p.s + 1, TwistedPoly());
          std::vector<FqmElem> coeffs(t + 1, tw.zero());
          coeffs[t].c[mu] = Fq{1};
          msg.blocks[k] = TwistedPoly(std::move(coeffs));
          basis.push_back(codeword_matrix(code, encode(code, msg)));
        }
    EnumResult res = enumerate_span(F, basis, space);
    rep.messages_checked = res.checked;
    rep.min_weight = res.min_rank;
    rep.injective = !res.hit_zero;
    rep.distance_ok = rep.min_weight == rep.distance_formula;
  } else {
    std::mt19937_64 rng(opts.seed);
    rep.injective = true;
    rep.min_weight = UINT32_MAX;
    uint64_t samples = std::max<uint64_t>(opts.samples, 1);
    for (uint64_t it = 0; it < samples; ++it) {
      uint32_t w = rank_weight(code, encode(code, random_message(code, rng)));
      if (w == 0) rep.injective = false;
      rep.min_weight = std::min(rep.min_weight, w);
      ++rep.messages_checked;
    }
    rep.distance_ok = rep.min_weight >= rep.distance_formula;
  }

  // local codes: evaluations of linearized polynomials of q-degree <= r-1
  // at the R basis points of each group
  uint64_t local_space = pow_capped(F.q(), uint64_t(p.m) * p.r, VerifyOptions::kLocalGuard);
  rep.local_exhaustive = local_space <= VerifyOptions::kLocalGuard;
  std::mt19937_64 local_rng(opts.seed + 1);
  for (uint32_t i = 0; i < p.ell; ++i) {
    uint32_t best = UINT32_MAX;
    if (rep.local_exhaustive) {
      std::vector<MatrixFq> basis;
      for (uint32_t t = 0; t < p.r; ++t)
        for (uint32_t mu = 0; mu < p.m; ++mu) {
          std::vector<FqmElem> coeffs(t + 1, tw.zero());
          coeffs[t].c[mu] = Fq{1};
          LinearizedPoly G(std::move(coeffs));
          std::vector<FqmElem> vals;
          for (uint32_t j = 0; j < R; ++j) vals.push_back(evaluate(tw, G, code.beta(i, j)));
          basis.push_back(tw.expand_columns(vals));
        }
      best = enumerate_span(F, basis, local_space).min_rank;
    } else {
      for (uint64_t it = 0; it < std::max<uint64_t>(opts.samples, 1); ++it) {
        std::vector<FqmElem> coeffs(p.r, tw.zero());
        bool nonzero = false;
        while (!nonzero)
          for (uint32_t t = 0; t < p.r; ++t) {
            for (uint32_t mu = 0; mu < p.m; ++mu) coeffs[t].c[mu] = Fq{uint32_t(local_rng() % F.q())};
            nonzero = nonzero || !coeffs[t].is_zero();
          }
        LinearizedPoly G(coeffs);
        std::vector<FqmElem> vals;
        for (uint32_t j = 0; j < R; ++j) vals.push_back(evaluate(tw, G, code.beta(i, j)));
        best = std::min(best, fq_rank(F, tw.expand_columns(vals)));
      }
    }
    rep.local_distance.push_back(best);
  }
  rep.local_ok = std::all_of(rep.local_distance.begin(), rep.local_distance.end(),
                             [&](uint32_t d) { return d >= p.delta; });

  // dimension bound: |C| <= q^{max(m,n)(min(m,n) - d + 1)}, exponents compared
  uint32_t d_used = rep.exhaustive ? rep.min_weight : rep.distance_formula;
  uint64_t mx = std::max(p.m, n), mn = std::min(p.m, n);
  rep.singleton_lhs = rep.fq_dimension;
  rep.singleton_rhs = mx * (mn - d_used + 1);
  rep.singleton_ok = rep.singleton_lhs <= rep.singleton_rhs;

  // locality bound: n - k + 1 - (ceil(k/r) - 1)(delta - 1) with k = (s+1)r
  uint32_t k = (p.s + 1) * p.r;
  rep.locality_bound = n - k + 1 - ((k + p.r - 1) / p.r - 1) * (p.delta - 1);
  rep.optimal = rep.distance_ok && d_used == rep.locality_bound;

  rep.pass = rep.params_ok && rep.strict_ok && rep.injective && rep.distance_ok && rep.local_ok &&
             rep.singleton_ok && rep.optimal;
  return rep;
}

}  // namespace rankloc

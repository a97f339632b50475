#include <doctest.h>

#include "rankloc/fixtures.hpp"
#include "rankloc/io.hpp"
#include "oracles.hpp"
#include "properties.hpp"

using namespace rankloc;

namespace {

CodeParams tiny_params() {
  CodeParams p;
  p.r = 1, p.delta = 2, p.ell = 2, p.s = 1, p.m = 5;
  p.a = {Fq{1}, Fq{2}};
  return p;
}

}  // namespace

TEST_SUITE("code") {

TEST_CASE("parameter validation") {
  SmallField F3(3);
  CodeParams p = tiny_params();
  validate_params(F3, p);

  CodeParams c1 = p;
  c1.r = 2;  // R = 3 shares a factor with q = 3
  CHECK_THROWS_WITH_AS(validate_params(F3, c1), doctest::Contains("C1"), std::invalid_argument);

  CodeParams c2 = p;
  c2.s = 3;  // (s+1)r = 4 = ell*R
  CHECK_THROWS_WITH_AS(validate_params(F3, c2), doctest::Contains("C2"), std::invalid_argument);

  CodeParams c3 = p;
  c3.ell = 3;  // ell = q
  c3.a = {Fq{1}, Fq{2}, Fq{1}};
  CHECK_THROWS_WITH_AS(validate_params(F3, c3), doctest::Contains("C3"), std::invalid_argument);

  CodeParams c4 = p;
  c4.m = 3;  // ell*R = 4 > m
  CHECK_THROWS_WITH_AS(validate_params(F3, c4), doctest::Contains("C4"), std::invalid_argument);

  CodeParams dupes = p;
  dupes.a = {Fq{1}, Fq{1}};
  CHECK_THROWS_AS(validate_params(F3, dupes), std::invalid_argument);
  CodeParams zero = p;
  zero.a = {Fq{1}, Fq{0}};
  CHECK_THROWS_AS(validate_params(F3, zero), std::invalid_argument);
  CodeParams small_delta = p;
  small_delta.delta = 1;
  CHECK_THROWS_AS(validate_params(F3, small_delta), std::invalid_argument);

  // strict mode requires delta < R, i.e. r >= 2
  CHECK_THROWS_AS(validate_params(F3, p, true), std::invalid_argument);
  SmallField F5(5);
  CodeParams strict_ok;
  strict_ok.r = 2, strict_ok.delta = 2, strict_ok.ell = 3, strict_ok.s = 2, strict_ok.m = 10;
  strict_ok.a = {Fq{1}, Fq{2}, Fq{3}};
  validate_params(F5, strict_ok, true);

  // P checks: degree, irreducibility, congruence
  CodeParams bad_p = p;
  bad_p.P = UniPoly::from_ints(F3, {1, 1});  // wrong degree
  CHECK_THROWS_AS(validate_params(F3, bad_p), std::invalid_argument);
  bad_p.P = parse_poly_text(F3, "T^5+T^4+2");  // not in the class (or reducible)
  CHECK_THROWS_AS(validate_params(F3, bad_p), std::invalid_argument);
}

TEST_CASE("locality modulus") {
  SmallField F3(3);
  CHECK(locality_modulus(F3, tiny_params()) == parse_poly_text(F3, "T^4+2"));
  SmallField F5(5);
  CodeParams p41;
  p41.r = 2, p41.delta = 2, p41.ell = 3, p41.s = 2, p41.m = 10;
  p41.a = {Fq{1}, Fq{2}, Fq{3}};
  CHECK(locality_modulus(F5, p41) == parse_poly_text(F5, "T^9+4T^6+T^3+4"));
}

TEST_CASE("build resolves P and torsion bases") {
  SmallField F3(3);
  CodeInstance code = build_code(F3, tiny_params());
  CHECK(code.P() == parse_poly_text(F3, "T^5+2T+1"));
  CHECK(code.length() == 4);
  CHECK(code.torsion_bases().size() == 2);
  for (const auto& row : code.torsion_bases()) CHECK(row.size() == 2);
  auto sets = code.locality_sets();
  CHECK(sets == std::vector<std::vector<uint32_t>>{{0, 1}, {2, 3}});
  CHECK(code.group_of(1) == 0);
  CHECK(code.group_of(2) == 1);

  // no P of the right class exists at m = 4
  CodeParams m4 = tiny_params();
  m4.m = 4;
  CHECK_THROWS_WITH_AS(build_code(F3, m4), doctest::Contains("no monic irreducible"),
                       std::invalid_argument);
}

TEST_CASE("build validates explicit bases") {
  CodeInstance good = fixtures::build_example41_code();
  CHECK(good.locality_sets().size() == 3);
  CHECK(good.locality_sets()[1] == std::vector<uint32_t>{3, 4, 5});

  // corrupting one basis element must be caught
  const auto& fx = fixtures::example41();
  SmallField F5(fx.p);
  CodeParams params;
  params.r = fx.r, params.delta = fx.delta, params.ell = fx.ell, params.s = fx.s, params.m = fx.m;
  for (uint32_t ai : fx.a) params.a.push_back(F5.from_int(ai));
  params.P = parse_poly_text(F5, fx.P);
  ExplicitConstruction ec;
  ec.fqm_modulus = parse_poly_text(F5, fx.fqm_modulus);
  FieldTower probe(F5, ec.fqm_modulus);
  ec.z = parse_fqm_text(probe, fx.z);
  std::vector<std::vector<FqmElem>> bases(3);
  for (uint32_t i = 0; i < 3; ++i)
    for (uint32_t j = 0; j < 3; ++j) bases[i].push_back(parse_fqm_text(probe, fx.betas[i * 3 + j]));
  bases[1][1] = probe.gen();  // not a torsion point of group 2
  ec.bases = bases;
  CHECK_THROWS_WITH_AS(build_code(F5, params, ec), doctest::Contains("torsion point"),
                       std::invalid_argument);
  bases[1][1] = bases[1][0];  // dependent row
  ec.bases = bases;
  CHECK_THROWS_WITH_AS(build_code(F5, params, ec), doctest::Contains("F_q-dependent"),
                       std::invalid_argument);
}

TEST_CASE("encode") {
  CodeInstance tiny = props::make_tiny_code();
  Message zero;
  zero.blocks.assign(2, TwistedPoly());
  Codeword zw = encode(tiny, zero);
  for (const auto& entry : zw.entries) CHECK(entry->is_zero());

  std::mt19937_64 rng(51);
  for (int it = 0; it < 50; ++it) {
    Message m1 = props::random_message(tiny, rng), m2 = props::random_message(tiny, rng);
    if (m1.blocks == m2.blocks) continue;
    CHECK_FALSE(encode(tiny, m1) == encode(tiny, m2));
  }

  // block degree overflow
  Message fat;
  fat.blocks.assign(2, TwistedPoly());
  fat.blocks[0] = TwistedPoly({tiny.tower().zero(), tiny.tower().one()});  // tau-degree 1 > r-1
  CHECK_THROWS_AS(encode(tiny, fat), std::invalid_argument);
  Message wrong_count;
  wrong_count.blocks.assign(3, TwistedPoly());
  CHECK_THROWS_AS(encode(tiny, wrong_count), std::invalid_argument);

  // the reference encodings, all nine
  CodeInstance e41 = fixtures::build_example41_code();
  Message msg = fixtures::example41_message(e41);
  Codeword w = encode(e41, msg);
  for (size_t t = 0; t < 9; ++t)
    CHECK(*w.entries[t] == parse_fqm_text(e41.tower(), fixtures::example41().encodings[t]));
}

TEST_CASE("restriction") {
  // s = 0: the restriction is iota(g_0) for every group
  SmallField F3(3);
  CodeParams p0 = tiny_params();
  p0.s = 0;
  CodeInstance code0 = build_code(F3, p0);
  std::mt19937_64 rng(52);
  Message m0;
  m0.blocks.push_back(TwistedPoly({oracle::random_fqm(code0.tower(), rng)}));
  CHECK(restriction(code0, m0, 0) == to_linearized(m0.blocks[0]));
  CHECK(restriction(code0, m0, 1) == to_linearized(m0.blocks[0]));

  // the printed group-2 recovery polynomial
  CodeInstance e41 = fixtures::build_example41_code();
  Message msg = fixtures::example41_message(e41);
  LinearizedPoly rec = restriction(e41, msg, 1);
  const auto& fx = fixtures::example41();
  CHECK(rec == LinearizedPoly({parse_fqm_text(e41.tower(), fx.recovery[0]),
                               parse_fqm_text(e41.tower(), fx.recovery[1])}));
  CHECK_THROWS_AS(restriction(e41, msg, 3), std::invalid_argument);

  // agreement with the full polynomial on the whole span of each W_i
  CodeInstance tiny = props::make_tiny_code();
  for (int it = 0; it < 100; ++it) {
    Message m = props::random_message(tiny, rng);
    TwistedPoly f = message_polynomial(tiny, m);
    for (uint32_t i = 0; i < tiny.params().ell; ++i) {
      LinearizedPoly fi = restriction(tiny, m, i);
      FqmElem v = tiny.tower().zero();
      for (uint32_t j = 0; j < tiny.params().R(); ++j)
        v = tiny.tower().add(v, tiny.tower().scalar_mul(oracle::random_fq(F3, rng), tiny.beta(i, j)));
      CHECK(evaluate(tiny.tower(), f, v) == evaluate(tiny.tower(), fi, v));
    }
  }
}

TEST_CASE("interpolation") {
  CodeInstance e41 = fixtures::build_example41_code();
  const FieldTower& tw = e41.tower();
  std::mt19937_64 rng(53);

  // degree bound 1: the unique map is (v / beta) x
  FqmElem beta = oracle::random_fqm_nonzero(tw, rng);
  FqmElem v = oracle::random_fqm(tw, rng);
  LinearizedPoly single = interpolate_linearized(tw, {{beta}}, {{v}}, 1);
  CHECK(evaluate(tw, single, beta) == v);
  if (!v.is_zero()) CHECK(single.coeffs()[0] == tw.div(v, beta));

  // all-zero values give the zero polynomial
  std::vector<FqmElem> pts{e41.beta(0, 0), e41.beta(0, 1)};
  std::vector<FqmElem> zeros{tw.zero(), tw.zero()};
  CHECK(interpolate_linearized(tw, pts, zeros, 2).is_zero());

  // the reference recovery polynomial from (beta_1^2, f_4), (beta_3^2, f_6)
  const auto& fx = fixtures::example41();
  Message msg = fixtures::example41_message(e41);
  Codeword w = encode(e41, msg);
  std::vector<FqmElem> p2{e41.beta(1, 0), e41.beta(1, 2)};
  std::vector<FqmElem> v2{*w.entries[3], *w.entries[5]};
  CHECK(interpolate_linearized(tw, p2, v2, 2) ==
        LinearizedPoly({parse_fqm_text(tw, fx.recovery[0]), parse_fqm_text(tw, fx.recovery[1])}));

  // F_q-dependent points are rejected
  std::vector<FqmElem> dep{beta, tw.scalar_mul(Fq{2}, beta)};
  std::vector<FqmElem> vals{v, v};
  CHECK_THROWS_WITH_AS(interpolate_linearized(tw, dep, vals, 2), doctest::Contains("singular"),
                       std::invalid_argument);
  CHECK_THROWS_AS(interpolate_linearized(tw, pts, zeros, 3), std::invalid_argument);
}

TEST_CASE("recover") {
  CodeInstance tiny = props::make_tiny_code();
  std::mt19937_64 rng(54);
  Message msg = props::random_message(tiny, rng);
  Codeword word = encode(tiny, msg);
  CHECK(recover(tiny, word) == word);  // no erasures

  Codeword both = word;
  both.entries[0] = std::nullopt;
  both.entries[1] = std::nullopt;  // whole group erased, survivors < r
  CHECK_THROWS_WITH_AS(recover(tiny, both), doctest::Contains("group 1"), std::invalid_argument);

  // the reference erased-entry repair
  CodeInstance e41 = fixtures::build_example41_code();
  Codeword w41 = encode(e41, fixtures::example41_message(e41));
  Codeword erased = w41;
  erased.entries[4] = std::nullopt;
  Codeword fixed = recover(e41, erased);
  CHECK(fixed == w41);
  CHECK(*fixed.entries[4] == parse_fqm_text(e41.tower(), fixtures::example41().encodings[4]));
}

TEST_CASE("rank distance") {
  CodeInstance tiny = props::make_tiny_code();
  std::mt19937_64 rng(55);
  Codeword a = encode(tiny, props::random_message(tiny, rng));
  CHECK(rank_distance(tiny, a, a) == 0);

  Message zero;
  zero.blocks.assign(2, TwistedPoly());
  Codeword zw = encode(tiny, zero);
  CHECK(rank_distance(tiny, a, zw) == rank_weight(tiny, a));

  for (int it = 0; it < 100; ++it) {
    Codeword x = encode(tiny, props::random_message(tiny, rng));
    Codeword y = encode(tiny, props::random_message(tiny, rng));
    Codeword z = encode(tiny, props::random_message(tiny, rng));
    CHECK(rank_distance(tiny, x, z) <= rank_distance(tiny, x, y) + rank_distance(tiny, y, z));
  }

  Codeword holed = a;
  holed.entries[2] = std::nullopt;
  CHECK_THROWS_AS(rank_distance(tiny, a, holed), std::invalid_argument);
  CHECK_THROWS_AS(rank_weight(tiny, holed), std::invalid_argument);
}

TEST_CASE("exhaustive verification of the tiny code") {
  CodeInstance tiny = props::make_tiny_code();
  VerifyOptions opts;
  opts.mode = VerifyMode::Exhaustive;
  VerifyReport rep = verify_code(tiny, opts);
  CHECK(rep.params_ok);
  CHECK(rep.exhaustive);
  CHECK_FALSE(rep.exhaustive_fallback);
  CHECK(rep.messages_checked == 59048);
  CHECK(rep.fq_dimension == 10);
  CHECK(rep.injective);
  CHECK(rep.min_weight == 2);
  CHECK(rep.distance_formula == 2);
  CHECK(rep.local_exhaustive);
  CHECK(rep.local_distance == std::vector<uint32_t>{2, 2});
  CHECK(rep.singleton_ok);
  CHECK(rep.locality_bound == 2);
  CHECK(rep.optimal);
  CHECK(rep.pass);
}

TEST_CASE("independent exhaustive enumeration agrees") {
  // enumerate every message explicitly through the public encoder; this
  // reruns the minimum-weight measurement without the span-enumeration
  // shortcut inside verify_code
  CodeInstance tiny = props::make_tiny_code();
  const FieldTower& tw = tiny.tower();
  uint32_t q = 3, m = 5;
  uint64_t total = 1;
  for (uint32_t i = 0; i < 2 * m; ++i) total *= q;
  uint32_t min_weight = UINT32_MAX;
  bool injective = true;
  for (uint64_t idx = 1; idx < total; ++idx) {
    uint64_t v = idx;
    Message msg;
    for (uint32_t k = 0; k < 2; ++k) {
      FqmElem c = tw.zero();
      for (uint32_t mu = 0; mu < m; ++mu) {
        c.c[mu] = Fq{uint32_t(v % q)};
        v /= q;
      }
      msg.blocks.push_back(TwistedPoly({c}));
    }
    uint32_t w = rank_weight(tiny, encode(tiny, msg));
    if (w == 0) injective = false;
    min_weight = std::min(min_weight, w);
  }
  CHECK(injective);
  CHECK(min_weight == 2);
}

TEST_CASE("sampled verification of the reference instance") {
  CodeInstance e41 = fixtures::build_example41_code();
  VerifyOptions opts;
  opts.mode = VerifyMode::Exhaustive;  // 5^60 messages: must fall back
  opts.samples = 300;
  VerifyReport rep = verify_code(e41, opts);
  CHECK_FALSE(rep.exhaustive);
  CHECK(rep.exhaustive_fallback);
  CHECK(rep.fq_dimension == 60);
  CHECK(rep.distance_formula == 2);
  CHECK(rep.injective);
  CHECK(rep.min_weight >= 2);
  CHECK_FALSE(rep.local_exhaustive);
  CHECK(rep.local_ok);
  CHECK(rep.locality_bound == 2);
  CHECK(rep.singleton_ok);
  CHECK(rep.optimal);
  CHECK(rep.pass);

  VerifyOptions strict = opts;
  strict.strict_thm11 = true;  // r = 2 > 1, so delta < R holds
  CHECK(verify_code(e41, strict).pass);

  VerifyOptions tiny_strict;
  tiny_strict.strict_thm11 = true;
  CHECK_FALSE(verify_code(props::make_tiny_code(), tiny_strict).pass);
}

}  // TEST_SUITE

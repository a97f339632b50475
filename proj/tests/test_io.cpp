#include <doctest.h>

#include "rankloc/fixtures.hpp"
#include "rankloc/io.hpp"
#include "oracles.hpp"
#include "properties.hpp"

using namespace rankloc;
using nlohmann::json;

TEST_SUITE("io") {

TEST_CASE("polynomial text parsing") {
  SmallField F5(5);
  UniPoly h = parse_poly_text(F5, "T^9+4T^6+T^3+4");
  CHECK(h.degree() == 9);
  CHECK(h.coeff(0) == Fq{4});
  CHECK(h.coeff(3) == Fq{1});
  CHECK(h.coeff(6) == Fq{4});
  CHECK(parse_poly_text(F5, poly_to_text(F5, h)) == h);

  SmallField F3(3);
  CHECK(parse_poly_text(F3, "T^2-1") == UniPoly::from_ints(F3, {2, 0, 1}));
  CHECK(parse_poly_text(F3, "-T+2T") == UniPoly::from_ints(F3, {0, 1}));
  CHECK(parse_poly_text(F3, "2*T^2 + 1") == UniPoly::from_ints(F3, {1, 0, 2}));
  CHECK(parse_poly_text(F3, "0") == UniPoly::zero());

  SmallField F8 = SmallField::from_order(8);
  UniPoly h8 = parse_poly_text(F8, "T^6+(a+1)T^3+a");
  CHECK(h8.degree() == 6);
  CHECK(h8.coeff(3) == F8.from_coeffs(std::vector<uint32_t>{1, 1}));
  CHECK(h8.coeff(0) == F8.gen());
  CHECK(parse_poly_text(F8, poly_to_text(F8, h8)) == h8);
  CHECK(parse_poly_text(F8, "T^6+(alpha+1)T^3+alpha") == h8);
  CHECK(parse_poly_text(F8, "T^6+(\xce\xb1+1)T^3+\xce\xb1") == h8);  // UTF-8 alpha
  CHECK(parse_fq_text(F8, "a^2+a") == F8.add(F8.mul(F8.gen(), F8.gen()), F8.gen()));

  CHECK_THROWS_AS(parse_poly_text(F3, "T^"), std::invalid_argument);
  CHECK_THROWS_AS(parse_poly_text(F3, "(T+1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_poly_text(F3, "aT"), std::invalid_argument);  // no generator over F_3
  CHECK_THROWS_AS(parse_poly_text(F3, "T+Q"), std::invalid_argument);
  CHECK_THROWS_AS(parse_poly_text(F3, ""), std::invalid_argument);
}

TEST_CASE("random polynomial text round trips") {
  std::mt19937_64 rng(61);
  for (uint64_t q : {3ull, 8ull}) {
    SmallField F = SmallField::from_order(q);
    for (int it = 0; it < 100; ++it) {
      UniPoly f = oracle::random_poly(F, 6, rng);
      CHECK(parse_poly_text(F, poly_to_text(F, f)) == f);
    }
  }
}

TEST_CASE("F_{q^m} element text") {
  CodeInstance e41 = fixtures::build_example41_code();
  const FieldTower& tw = e41.tower();
  FqmElem z = parse_fqm_text(tw, fixtures::example41().z);
  CHECK(z == tw.z());
  CHECK(parse_fqm_text(tw, tw.to_string(z)) == z);
  std::mt19937_64 rng(62);
  for (int it = 0; it < 100; ++it) {
    FqmElem x = oracle::random_fqm(tw, rng);
    CHECK(parse_fqm_text(tw, tw.to_string(x)) == x);
  }

  // e > 1 towers use 'x' for the extension generator and 'a' inside
  // coefficients
  SmallField F8 = SmallField::from_order(8);
  FieldTower tw8(F8, parse_poly_text(F8, "T^2+T+a+1"));
  for (int it = 0; it < 100; ++it) {
    FqmElem x = oracle::random_fqm(tw8, rng);
    CHECK(parse_fqm_text(tw8, tw8.to_string(x)) == x);
  }
}

TEST_CASE("json element round trips") {
  std::mt19937_64 rng(63);
  SmallField F8 = SmallField::from_order(8);
  for (int it = 0; it < 50; ++it) {
    Fq a = oracle::random_fq(F8, rng);
    CHECK(fq_from_json(F8, fq_to_json(F8, a), "t") == a);
    UniPoly f = oracle::random_poly(F8, 5, rng);
    CHECK(poly_from_json(F8, poly_to_json(F8, f), "t") == f);
  }
  SmallField F3(3);
  CHECK(fq_from_json(F3, json(2), "t") == Fq{2});  // bare integer accepted for e = 1
  CHECK_THROWS_AS(fq_from_json(F3, json::array({3}), "t"), std::invalid_argument);
}

TEST_CASE("code file round trip reproduces the instance and its report") {
  CodeInstance tiny = props::make_tiny_code();
  json j = code_to_json(tiny);
  CodeInstance back = code_from_json(j);
  CHECK(code_to_json(back) == j);

  VerifyOptions opts;
  opts.mode = VerifyMode::Exhaustive;
  VerifyReport r1 = verify_code(tiny, opts);
  VerifyReport r2 = verify_code(back, opts);
  CHECK(r1.min_weight == r2.min_weight);
  CHECK(r1.messages_checked == r2.messages_checked);
  CHECK(r1.local_distance == r2.local_distance);
  CHECK(r1.pass == r2.pass);

  // the example-scale instance round trips bit-exactly too
  CodeInstance e41 = fixtures::build_example41_code();
  json j41 = code_to_json(e41);
  CHECK(code_to_json(code_from_json(j41)) == j41);
  CHECK(j41["locality_sets"][1] == json::array({4, 5, 6}));
}

TEST_CASE("word and message files") {
  CodeInstance tiny = props::make_tiny_code();
  std::mt19937_64 rng(64);
  Message msg = props::random_message(tiny, rng);
  json mj = message_to_json(tiny, msg);
  Message msg2 = message_from_json(tiny, mj);
  CHECK(msg2.blocks == msg.blocks);

  Codeword word = encode(tiny, msg);
  word.entries[2] = std::nullopt;
  json wj = word_to_json(tiny, word, "tiny.json");
  CHECK(wj["entries"][2].is_null());
  Codeword back = word_from_json(tiny, wj);
  CHECK(back == word);

  wj["m"] = 7;  // self-description must match the code
  CHECK_THROWS_AS(word_from_json(tiny, wj), std::invalid_argument);
}

TEST_CASE("params file diagnostics") {
  json j{{"p", 3}, {"e", 1}, {"r", 1}, {"delta", 2}, {"ell", 2}, {"s", 1}, {"m", 5}};
  CHECK_THROWS_WITH_AS(params_from_json(j), doctest::Contains("'a'"), std::invalid_argument);
  j["a"] = json::array({json::array({1}), json::array({2})});
  ParsedParams pp = params_from_json(j);
  CHECK(pp.F.q() == 3);
  CHECK_FALSE(pp.explicit_data.has_value());

  json bad = j;
  bad["z"] = json::array();  // z without fqm_modulus
  CHECK_THROWS_WITH_AS(params_from_json(bad), doctest::Contains("together"), std::invalid_argument);

  json bases_only = j;
  bases_only["bases"] = json::array();
  CHECK_THROWS_AS(params_from_json(bases_only), std::invalid_argument);
}

}  // TEST_SUITE

#include "rankloc/io.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace rankloc {

using nlohmann::json;

namespace {

[[noreturn]] void parse_fail(const std::string& where, const std::string& what) {
  throw std::invalid_argument("parse error at " + where + ": " + what);
}

std::string normalize(std::string_view s) {
  std::string t;
  t.reserve(s.size());
  for (size_t i = 0; i < s.size();) {
    if (std::isspace(uint8_t(s[i])) || s[i] == '*') {
      ++i;
    } else if (s.compare(i, 5, "alpha") == 0) {
      t += 'a';
      i += 5;
    } else if (s.compare(i, 2, "\xce\xb1") == 0) {  // UTF-8 alpha
      t += 'a';
      i += 2;
    } else {
      t += s[i++];
    }
  }
  return t;
}

// signed depth-0 terms of a normalized sum
std::vector<std::pair<bool, std::string>> split_terms(const std::string& s, const std::string& where) {
  std::vector<std::pair<bool, std::string>> terms;
  bool neg = false;
  std::string cur;
  int depth = 0;
  for (char ch : s) {
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (depth < 0) parse_fail(where, "unbalanced ')'");
    if (depth == 0 && (ch == '+' || ch == '-')) {
      if (!cur.empty()) terms.emplace_back(neg, cur);
      else if (ch == '+' && !terms.empty()) parse_fail(where, "empty term");
      cur.clear();
      neg = ch == '-';
      continue;
    }
    cur += ch;
  }
  if (depth != 0) parse_fail(where, "unbalanced '('");
  if (cur.empty()) parse_fail(where, "empty term");
  terms.emplace_back(neg, cur);
  return terms;
}

uint64_t parse_uint(const std::string& s, size_t& pos, const std::string& where) {
  if (pos >= s.size() || !std::isdigit(uint8_t(s[pos]))) parse_fail(where, "expected a number");
  uint64_t v = 0;
  while (pos < s.size() && std::isdigit(uint8_t(s[pos]))) {
    v = v * 10 + uint64_t(s[pos] - '0');
    if (v > (uint64_t(1) << 40)) parse_fail(where, "number too large");
    ++pos;
  }
  return v;
}

// monomial [int]['a'['^'k]] over F_q; gen only valid for e > 1
Fq parse_coeff_monomial(const SmallField& F, const std::string& s, const std::string& where) {
  size_t pos = 0;
  Fq val = F.one();
  if (pos < s.size() && std::isdigit(uint8_t(s[pos]))) val = F.from_int(parse_uint(s, pos, where));
  if (pos < s.size() && s[pos] == 'a') {
    if (F.e() == 1) parse_fail(where, "generator 'a' in a prime-field coefficient");
    ++pos;
    uint64_t k = 1;
    if (pos < s.size() && s[pos] == '^') {
      ++pos;
      k = parse_uint(s, pos, where);
    }
    val = F.mul(val, F.pow(F.gen(), k));
  }
  if (pos != s.size()) parse_fail(where, "unexpected characters in coefficient '" + s + "'");
  return val;
}

Fq parse_coeff(const SmallField& F, std::string s, const std::string& where) {
  if (s.empty()) return F.one();
  if (s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
  if (s.find('(') != std::string::npos) parse_fail(where, "nested parentheses in coefficient");
  Fq acc = F.zero();
  for (auto& [neg, term] : split_terms(s, where)) {
    Fq v = parse_coeff_monomial(F, term, where);
    acc = F.add(acc, neg ? F.neg(v) : v);
  }
  return acc;
}

// generic "sum of coeff * var^k" parser; returns ascending coefficients
std::vector<Fq> parse_sym_poly(const SmallField& F, char var, std::string_view input,
                               const std::string& where) {
  std::string s = normalize(input);
  if (s.empty()) parse_fail(where, "empty polynomial text");
  std::vector<Fq> coeffs;
  auto at = [&](size_t deg) -> Fq& {
    if (coeffs.size() <= deg) coeffs.resize(deg + 1, Fq{0});
    return coeffs[deg];
  };
  for (auto& [neg, term] : split_terms(s, where)) {
    // locate the variable at depth 0
    size_t vpos = std::string::npos;
    int depth = 0;
    for (size_t i = 0; i < term.size(); ++i) {
      if (term[i] == '(') ++depth;
      if (term[i] == ')') --depth;
      if (depth == 0 && term[i] == var) {
        vpos = i;
        break;
      }
    }
    uint64_t deg = 0;
    std::string coeff_text;
    if (vpos == std::string::npos) {
      coeff_text = term;
    } else {
      coeff_text = term.substr(0, vpos);
      size_t pos = vpos + 1;
      deg = 1;
      if (pos < term.size() && term[pos] == '^') {
        ++pos;
        deg = parse_uint(term, pos, where);
      }
      if (pos != term.size()) parse_fail(where, "unexpected characters after variable in '" + term + "'");
      if (deg > 4096) parse_fail(where, "degree too large");
    }
    Fq v = parse_coeff(F, coeff_text, where);
    at(size_t(deg)) = F.add(at(size_t(deg)), neg ? F.neg(v) : v);
  }
  return coeffs;
}

}  // namespace

Fq parse_fq_text(const SmallField& F, std::string_view s) {
  return parse_coeff(F, normalize(s), "F_q element");
}

UniPoly parse_poly_text(const SmallField& F, std::string_view s) {
  return UniPoly(parse_sym_poly(F, 'T', s, "polynomial"));
}

FqmElem parse_fqm_text(const FieldTower& tw, std::string_view s) {
  char var = tw.base().e() == 1 ? 'a' : 'x';
  std::vector<Fq> c = parse_sym_poly(tw.base(), var, s, "F_{q^m} element");
  if (c.size() > tw.m()) parse_fail("F_{q^m} element", "degree exceeds m-1");
  c.resize(tw.m(), Fq{0});
  return tw.from_coeffs(std::move(c));
}

std::string poly_to_text(const SmallField& F, const UniPoly& f) {
  if (f.is_zero()) return "0";
  std::string s;
  for (size_t i = f.coeffs().size(); i-- > 0;) {
    Fq c = f.coeff(i);
    if (c.v == 0) continue;
    if (!s.empty()) s += "+";
    std::string cs = F.to_string(c);
    bool sum = cs.find('+') != std::string::npos;
    if (i == 0) {
      s += cs;
    } else {
      if (cs != "1") s += sum ? "(" + cs + ")" : cs;
      s += "T";
      if (i > 1) s += "^" + std::to_string(i);
    }
  }
  return s;
}

namespace {

const json& require(const json& j, const std::string& key, const std::string& where) {
  if (!j.is_object()) parse_fail(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) parse_fail(where, "missing field '" + key + "'");
  return *it;
}

bool is_nonneg_int(const json& j) {
  return j.is_number_unsigned() || (j.is_number_integer() && j.get<int64_t>() >= 0);
}

uint32_t get_u32(const json& j, const std::string& key, const std::string& where) {
  const json& v = require(j, key, where);
  if (!is_nonneg_int(v)) parse_fail(where + "." + key, "expected a non-negative integer");
  return v.get<uint32_t>();
}

}  // namespace

json fq_to_json(const SmallField& F, Fq a) {
  json arr = json::array();
  for (uint32_t c : F.coeffs(a)) arr.push_back(c);
  return arr;
}

Fq fq_from_json(const SmallField& F, const json& j, const std::string& where) {
  if (is_nonneg_int(j) && F.e() == 1) return F.from_int(j.get<uint64_t>());
  if (!j.is_array() || j.size() > F.e())
    parse_fail(where, "expected an array of at most e = " + std::to_string(F.e()) + " integers");
  std::vector<uint32_t> c;
  for (const json& x : j) {
    if (!is_nonneg_int(x) || x.get<uint64_t>() >= F.p())
      parse_fail(where, "coefficient must be an integer in [0, p)");
    c.push_back(x.get<uint32_t>());
  }
  return F.from_coeffs(c);
}

json fqm_to_json(const FieldTower& tw, const FqmElem& a) {
  json arr = json::array();
  for (Fq c : a.c) arr.push_back(fq_to_json(tw.base(), c));
  return arr;
}

FqmElem fqm_from_json(const FieldTower& tw, const json& j, const std::string& where) {
  if (!j.is_array() || j.size() != tw.m())
    parse_fail(where, "expected an array of m = " + std::to_string(tw.m()) + " F_q elements");
  std::vector<Fq> c;
  for (size_t i = 0; i < j.size(); ++i)
    c.push_back(fq_from_json(tw.base(), j[i], where + "[" + std::to_string(i) + "]"));
  return tw.from_coeffs(std::move(c));
}

json poly_to_json(const SmallField& F, const UniPoly& f) {
  json arr = json::array();
  for (Fq c : f.coeffs()) arr.push_back(fq_to_json(F, c));
  return arr;
}

UniPoly poly_from_json(const SmallField& F, const json& j, const std::string& where) {
  if (!j.is_array()) parse_fail(where, "expected a coefficient array");
  std::vector<Fq> c;
  for (size_t i = 0; i < j.size(); ++i)
    c.push_back(fq_from_json(F, j[i], where + "[" + std::to_string(i) + "]"));
  return UniPoly(std::move(c));
}

ParsedParams params_from_json(const json& j) {
  const std::string where = "params";
  uint32_t p = get_u32(j, "p", where);
  uint32_t e = get_u32(j, "e", where);

  SmallField F = [&] {
    if (j.contains("fq_modulus") && !j["fq_modulus"].is_null()) {
      const json& fm = j["fq_modulus"];
      if (!fm.is_array() || fm.size() != size_t(e) + 1)
        parse_fail(where + ".fq_modulus", "expected e+1 integers");
      std::vector<uint32_t> mc;
      for (const json& x : fm) {
        if (!is_nonneg_int(x)) parse_fail(where + ".fq_modulus", "expected integers");
        mc.push_back(x.get<uint32_t>());
      }
      return SmallField(p, e, std::move(mc));
    }
    return SmallField::with_default_modulus(p, e);
  }();

  CodeParams params;
  params.r = get_u32(j, "r", where);
  params.delta = get_u32(j, "delta", where);
  params.ell = get_u32(j, "ell", where);
  params.s = get_u32(j, "s", where);
  params.m = get_u32(j, "m", where);

  const json& aj = require(j, "a", where);
  if (!aj.is_array()) parse_fail(where + ".a", "expected an array");
  for (size_t i = 0; i < aj.size(); ++i)
    params.a.push_back(fq_from_json(F, aj[i], where + ".a[" + std::to_string(i) + "]"));

  if (j.contains("P") && !j["P"].is_null()) params.P = poly_from_json(F, j["P"], where + ".P");

  std::optional<ExplicitConstruction> explicit_data;
  bool has_mod = j.contains("fqm_modulus") && !j["fqm_modulus"].is_null();
  bool has_z = j.contains("z") && !j["z"].is_null();
  if (has_mod != has_z) parse_fail(where, "fqm_modulus and z must be given together");
  if (has_mod) {
    ExplicitConstruction ec;
    ec.fqm_modulus = poly_from_json(F, j["fqm_modulus"], where + ".fqm_modulus");
    if (ec.fqm_modulus.degree() != long(params.m))
      parse_fail(where + ".fqm_modulus", "degree must equal m");
    // z and bases need a tower to be decoded against; build a throwaway
    // one (build_code reconstructs and fully validates it later)
    if (!params.P) parse_fail(where, "explicit fqm_modulus requires P");
    FieldTower probe(F, ec.fqm_modulus);
    ec.z = fqm_from_json(probe, j["z"], where + ".z");
    if (j.contains("bases") && !j["bases"].is_null()) {
      const json& bj = j["bases"];
      if (!bj.is_array()) parse_fail(where + ".bases", "expected an array of basis rows");
      std::vector<std::vector<FqmElem>> rows;
      for (size_t i = 0; i < bj.size(); ++i) {
        if (!bj[i].is_array()) parse_fail(where + ".bases", "expected basis rows");
        std::vector<FqmElem> row;
        for (size_t k = 0; k < bj[i].size(); ++k)
          row.push_back(fqm_from_json(probe, bj[i][k],
                                      where + ".bases[" + std::to_string(i) + "][" + std::to_string(k) + "]"));
        rows.push_back(std::move(row));
      }
      ec.bases = std::move(rows);
    }
    explicit_data = std::move(ec);
  } else if (j.contains("bases") && !j["bases"].is_null()) {
    parse_fail(where, "explicit bases require fqm_modulus and z");
  }

  return {std::move(F), std::move(params), std::move(explicit_data)};
}

CodeInstance code_from_json(const json& j) {
  ParsedParams pp = params_from_json(j);
  return build_code(pp.F, std::move(pp.params), pp.explicit_data);
}

json code_to_json(const CodeInstance& code) {
  const SmallField& F = code.field();
  const FieldTower& tw = code.tower();
  json j;
  j["p"] = F.p();
  j["e"] = F.e();
  if (F.e() > 1) j["fq_modulus"] = F.modulus();
  j["r"] = code.params().r;
  j["delta"] = code.params().delta;
  j["ell"] = code.params().ell;
  j["s"] = code.params().s;
  j["m"] = code.params().m;
  json aj = json::array();
  for (Fq ai : code.params().a) aj.push_back(fq_to_json(F, ai));
  j["a"] = aj;
  j["P"] = poly_to_json(F, code.P());
  j["h"] = poly_to_json(F, code.h());
  j["fqm_modulus"] = poly_to_json(F, tw.modulus());
  j["z"] = fqm_to_json(tw, tw.z());
  json bases = json::array();
  for (const auto& row : code.torsion_bases()) {
    json rj = json::array();
    for (const FqmElem& b : row) rj.push_back(fqm_to_json(tw, b));
    bases.push_back(rj);
  }
  j["bases"] = bases;
  json sets = json::array();
  for (const auto& set : code.locality_sets()) {
    json sj = json::array();
    for (uint32_t col : set) sj.push_back(col + 1);  // columns are 1-based on disk
    sets.push_back(sj);
  }
  j["locality_sets"] = sets;
  return j;
}

json word_to_json(const CodeInstance& code, const Codeword& word, std::string_view code_ref) {
  const FieldTower& tw = code.tower();
  json j;
  j["code_ref"] = std::string(code_ref);
  j["p"] = code.field().p();
  j["e"] = code.field().e();
  j["m"] = code.params().m;
  json entries = json::array();
  for (const auto& entry : word.entries)
    entries.push_back(entry ? fqm_to_json(tw, *entry) : json(nullptr));
  j["entries"] = entries;
  return j;
}

Codeword word_from_json(const CodeInstance& code, const json& j) {
  const std::string where = "word";
  if (get_u32(j, "p", where) != code.field().p() || get_u32(j, "e", where) != code.field().e() ||
      get_u32(j, "m", where) != code.params().m)
    parse_fail(where, "word file (p, e, m) does not match the code");
  const json& entries = require(j, "entries", where);
  if (!entries.is_array() || entries.size() != code.length())
    parse_fail(where + ".entries", "expected ell*R = " + std::to_string(code.length()) + " entries");
  Codeword w;
  for (size_t i = 0; i < entries.size(); ++i) {
    if (entries[i].is_null())
      w.entries.emplace_back(std::nullopt);
    else
      w.entries.emplace_back(
          fqm_from_json(code.tower(), entries[i], where + ".entries[" + std::to_string(i) + "]"));
  }
  return w;
}

json message_to_json(const CodeInstance& code, const Message& msg) {
  const FieldTower& tw = code.tower();
  json j;
  j["p"] = code.field().p();
  j["e"] = code.field().e();
  j["m"] = code.params().m;
  json blocks = json::array();
  for (const TwistedPoly& g : msg.blocks) {
    json bj = json::array();
    for (const FqmElem& c : g.coeffs()) bj.push_back(fqm_to_json(tw, c));
    blocks.push_back(bj);
  }
  j["blocks"] = blocks;
  return j;
}

Message message_from_json(const CodeInstance& code, const json& j) {
  const std::string where = "message";
  const json& blocks = require(j, "blocks", where);
  if (!blocks.is_array()) parse_fail(where + ".blocks", "expected an array of blocks");
  Message msg;
  for (size_t k = 0; k < blocks.size(); ++k) {
    if (!blocks[k].is_array()) parse_fail(where + ".blocks", "each block is a coefficient array");
    std::vector<FqmElem> coeffs;
    for (size_t t = 0; t < blocks[k].size(); ++t)
      coeffs.push_back(fqm_from_json(code.tower(), blocks[k][t],
                                     where + ".blocks[" + std::to_string(k) + "][" + std::to_string(t) + "]"));
    msg.blocks.emplace_back(std::move(coeffs));
  }
  validate_message(code, msg);
  return msg;
}

}  // namespace rankloc

#include "rankloc/fixtures.hpp"

#include "rankloc/io.hpp"

namespace rankloc::fixtures {

const Example41& example41() {
  static const Example41 fixture;
  return fixture;
}

CodeInstance build_example41_code() {
  const Example41& fx = example41();
  SmallField F(fx.p);
  CodeParams params;
  params.r = fx.r, params.delta = fx.delta, params.ell = fx.ell, params.s = fx.s, params.m = fx.m;
  for (uint32_t ai : fx.a) params.a.push_back(F.from_int(ai));
  params.P = parse_poly_text(F, fx.P);

  ExplicitConstruction ec;
  ec.fqm_modulus = parse_poly_text(F, fx.fqm_modulus);
  FieldTower probe(F, ec.fqm_modulus);
  ec.z = parse_fqm_text(probe, fx.z);
  std::vector<std::vector<FqmElem>> bases(fx.ell);
  for (uint32_t i = 0; i < fx.ell; ++i)
    for (uint32_t j = 0; j < params.R(); ++j)
      bases[i].push_back(parse_fqm_text(probe, fx.betas[i * params.R() + j]));
  ec.bases = std::move(bases);
  return build_code(F, std::move(params), ec);
}

Message example41_message(const CodeInstance& code) {
  const Example41& fx = example41();
  Message msg;
  for (const auto& block : fx.message) {
    std::vector<FqmElem> coeffs;
    for (std::string_view c : block) coeffs.push_back(parse_fqm_text(code.tower(), c));
    msg.blocks.emplace_back(std::move(coeffs));
  }
  return msg;
}

namespace {

constexpr Table1Row kTable1[] = {
    {5, 3, 3, "1,2,3", "T^9+4T^6+T^3+4", 10, "T+2", "T^10+2T^9+4T^7+3T^6+T^4+2T^3+4T+4"},
    {5, 3, 3, "1,2,3", "T^9+4T^6+T^3+4", 11, "T^2+T", "T^11+T^10+4T^8+4T^7+T^5+T^4+4T^2+4T+1"},
    {5, 3, 3, "1,2,3", "T^9+4T^6+T^3+4", 12, "T^3+2", "T^12+T^9+4T^6+T^3+4"},
    {5, 3, 3, "1,2,3", "T^9+4T^6+T^3+4", 13, "T^4+2T+4", "T^13+T^10+4T^9+4T^7+T^6+T^4+4T^3+3T+2"},
    {5, 3, 3, "1,2,3", "T^9+4T^6+T^3+4", 14, "T^5+4T", "T^14+4T^11+4T^10+T^8+T^7+4T^5+4T^4+T+1"},
    {5, 3, 3, "1,2,3", "T^9+4T^6+T^3+4", 15, "T^6+T+2", "T^15+4T^12+T^10+3T^9+4T^7+2T^6+T^4+2T^3+4T+4"},
    {5, 3, 3, "1,2,3", "T^9+4T^6+T^3+4", 16, "T^7+3", "T^16+4T^13+T^10+3T^9+4T^7+2T^6+3T^3+3"},
    {5, 3, 3, "1,2,3", "T^9+4T^6+T^3+4", 17, "T^8", "T^17+4T^14+T^11+4T^8+1"},

    {7, 3, 2, "1,2", "T^6+4T^3+2", 7, "T", "T^7+4T^4+2T+1"},
    {7, 3, 2, "1,2", "T^6+4T^3+2", 8, "T^2+1", "T^8+T^6+4T^5+4T^3+2T^2+3"},
    {7, 3, 2, "1,2", "T^6+4T^3+2", 9, "T^3+1", "T^9+5T^6+6T^3+3"},
    {7, 3, 2, "1,2", "T^6+4T^3+2", 10, "T^4+T+5", "T^10+5T^7+5T^6+6T^4+6T^3+2T+4"},
    {7, 3, 2, "1,2", "T^6+4T^3+2", 11, "T^5+6", "T^11+4T^8+6T^6+2T^5+3T^3+6"},

    {8, 3, 2, "1,a", "T^6+(a+1)T^3+a", 7, "T+a^2+a", "T^7+(a^2+a)T^6+(a+1)T^4+T^3+aT+a^2+a"},
    {8, 3, 2, "1,a", "T^6+(a+1)T^3+a", 8, "T^2", "T^8+(a+1)T^5+aT^2+1"},
    {8, 3, 2, "1,a", "T^6+(a+1)T^3+a", 9, "T^3+aT", "T^9+aT^7+(a+1)T^6+(a^2+a)T^4+aT^3+a^2T+1"},
    {8, 3, 2, "1,a", "T^6+(a+1)T^3+a", 10, "T^4", "T^10+(a+1)T^7+aT^4+1"},
    {8, 3, 2, "1,a", "T^6+(a+1)T^3+a", 11, "T^5", "T^11+(a+1)T^8+aT^5+1"},
};

}  // namespace

std::span<const Table1Row> table1() { return kTable1; }

}  // namespace rankloc::fixtures

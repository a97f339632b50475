#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string_view>

#include "rankloc/code.hpp"

namespace rankloc::fixtures {

/// Reference instance behind `repro example41`: a (5^10, r=2, delta=2,
/// ell=3, s=2) code with externally generated modulus, root z, torsion
/// bases, one reference message, its nine encodings, and the group-2
/// recovery polynomial. All values are embedded as text so reproduction
/// needs no external inputs.
struct Example41 {
  uint32_t p = 5, e = 1;
  uint32_t r = 2, delta = 2, ell = 3, s = 2, m = 10;
  std::array<uint32_t, 3> a{1, 2, 3};
  std::string_view P = "T^10+4T^9+4T^7+T^6+T^4+4T^3+4T+2";
  std::string_view u = "T+4";  // P = u*h + 1
  std::string_view fqm_modulus = "T^10+3T^5+3T^4+2T^3+4T^2+T+2";
  std::string_view z = "3a^8+2a^7+a^5+4a^4+3a^3+2a^2+3a+2";
  // torsion bases, group-major (rows of W_1, W_2, W_3)
  std::array<std::string_view, 9> betas{
      "4a^8+2a^7+2a^5+2a^4+3a^2+1",
      "a^9+3a^8+4a^7+2a^6+2a^5+2a^4+4a^2+a",
      "4a^9+3a^8+4a^7+2a^5+a^3",
      "3a^9+2a^8+a^7+4a^6+2a^5+4a^4+2a^3+4",
      "a^8+4a^7+a^6+3a^5+a^4+4a^3+4a",
      "a^8+2a^7+4a^6+a^3+4a^2",
      "a^7+2a^6+4a^5+3a^4+3a^3+4",
      "a^9+4a^8+a^7+a^6+3a^4+4a",
      "4a^9+2a^7+3a^6+3a^5+4a^4+3a^3+4a^2",
  };
  // message blocks g_0, g_1, g_2 as ascending tau-coefficients
  std::array<std::array<std::string_view, 2>, 3> message{{
      {"1", "a"},        // g_0 = x + a x^5
      {"0", "a+1"},      // g_1 = (a+1) x^5
      {"a^2+a", "0"},    // g_2 = (a^2+a) x
  }};
  std::array<std::string_view, 9> encodings{
      "2a^9+a^8+2a^7+a^6+3a^3+3a^2+4a",
      "4a^9+2a^8+2a^6+4a^5+2a^4+3a^3+3a^2+3a+1",
      "3a^9+3a^8+a^7+3a^6+2a^5+3a^4+3a^2+1",
      "3a^9+a^8+2a^6+a^5+a^4+2a^2+3a+1",
      "3a^7+3a^6+3a^5+2a^4+4a^2+4a+2",
      "3a^9+4a^8+3a^7+3a^6+3a^5+4a^4+1",
      "4a^8+2a^7+2a^6+3a^2+a+3",
      "2a^8+3a^7+2a^6+2a^4+a^3+2a^2+3",
      "2a^9+2a^8+2a^7+2a^6+4a^5+a^4+4a^3+a^2+a+1",
  };
  // phi_{T^3} tau-coefficients as polynomials in z (ascending powers of tau)
  std::array<std::string_view, 4> phi_T3_in_z{"T^3", "T^10+T^6+T^2", "T^25+T^5+T", "1"};
  uint32_t erased_column = 5;  // 1-based; lies in group 2
  // recovery polynomial for group 2, ascending q-power coefficients
  std::array<std::string_view, 2> recovery{"4a^2+4a+1", "3a+2"};
};

const Example41& example41();

/// The fixture's CodeInstance (explicit tower, z, and torsion bases),
/// rebuilt through the ordinary validating construction path.
CodeInstance build_example41_code();

/// The fixture message g_0, g_1, g_2 decoded against the instance's tower.
Message example41_message(const CodeInstance& code);

/// One row of the `repro table1` reference set: P = u*h + 1 must be monic
/// irreducible of degree m and congruent to 1 mod h.
struct Table1Row {
  uint32_t q, R, ell;
  std::string_view a;  // comma-separated evaluation constants
  std::string_view h;
  uint32_t m;
  std::string_view u;
  std::string_view P;
};

std::span<const Table1Row> table1();

}  // namespace rankloc::fixtures

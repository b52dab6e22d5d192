#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "grbasis/bases.hpp"
#include "grbasis/galois.hpp"

namespace grbasis {

// "12" -> 12; the whole string must be an integer (whitespace trimmed).
std::int64_t parse_i64(const std::string& s);

// "3,1,2,1" -> {3, 1, 2, 1}
std::vector<std::int64_t> parse_int_list(const std::string& s);

// Ascending-coefficient polynomial literal over Z_{p^r}: "3,1,2,1" = 3 + x + 2x^2 + x^3.
Poly parse_poly(const ZrModulus& mod, const std::string& s);

// Ring spec "GR(p=2,r=2,m=3)" or "GR(p=2,r=2,m=3;h=3,1,2,1)".  Without an
// explicit modulus the canonical one is found by search + Hensel lifting.
// A nonempty modulus_override ("3,1,2,1") replaces any h from the spec string.
GaloisRingPtr parse_ring_spec(const std::string& spec, const std::string& modulus_override = "");

// Element literal "3,2,1" (ascending coefficients, at most m of them).
GrElem parse_element(const GaloisRingPtr& ring, const std::string& s);

// Basis literal "1,0;0,1": elements separated by ';'.
std::vector<GrElem> parse_basis_elements(const GaloisRingPtr& ring, const std::string& s);

// Matrix literal "1,0;0,1|0,1;1,1": rows separated by '|', entries by ';',
// coefficients by ','.
GrMatrix parse_gr_matrix(const GaloisRingPtr& ring, const std::string& s);

}  // namespace grbasis

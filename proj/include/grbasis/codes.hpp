#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "grbasis/bases.hpp"
#include "grbasis/galois.hpp"
#include "grbasis/rational.hpp"

namespace grbasis {

// Average homogeneous weight over a nonzero principal ideal:
//   Gamma = (p^m - 1) * p^{m(r-2)}  for GR(p^r, m)   (fractional when r = 1).
Rational gamma_value(const GaloisRingPtr& ring);
Rational gamma_value(const ZrModulus& mod);  // the m = 1 specialization (p-1)p^{r-2}

// The homogeneous weight itself.  Values are always integers:
//   w(0) = 0,
//   w(z) = p^{m(r-1)}            for z in (p^{r-1}) \ {0},
//   w(z) = (p^m - 1) p^{m(r-2)}  otherwise.
// For r = 1 every nonzero element falls in the first nonzero case with weight 1,
// i.e. the Hamming weight.
Rational homogeneous_weight(const GrElem& z);
Rational homogeneous_weight(const ZrElem& a);
Rational homogeneous_weight(const std::vector<ZrElem>& word);  // coordinate-wise sum
Rational homogeneous_weight(const std::vector<GrElem>& word);

// Weight configuration: the plain weight, or the normalized variant w / Gamma
// whose average over every nonzero principal ideal is exactly 1.
struct HomWeightParams {
    GaloisRingPtr ring;
    Rational gamma;
    bool normalized = false;

    static HomWeightParams make(const GaloisRingPtr& ring, bool normalized = false);
    Rational weight(const GrElem& z) const;
};

// Floating-point cross-check via the generating character
//   chi(z) = exp(2*pi*i * b_{m-1} / p^r),   b_{m-1} = last polynomial-basis coefficient:
//   w(z) = Gamma * (1 - |R^x|^{-1} * sum over units u of chi(z*u)).
// The only floating-point path in the library; everything else is exact.
double homogeneous_weight_by_character(const GrElem& z,
                                       std::int64_t guard = kDefaultEnumerationGuard);

// Exhaustively verifies both homogeneity axioms on the ring:
//   (i) Rx = Ry implies w(x) = w(y);
//   (ii) the weights over each nonzero principal ideal Rx sum to Gamma * |Rx|.
bool homogeneity_check(const GaloisRingPtr& ring, std::int64_t guard = kDefaultEnumerationGuard);

// ---------------------------------------------------------------------------
// Codes over the ring and their p^r-ary images.

struct LinearCode {
    GrMatrix generator;  // k x n over the ring

    explicit LinearCode(GrMatrix gen);
    const GaloisRingPtr& ring() const { return generator.ring(); }
    int k() const { return generator.rows(); }
    int n() const { return generator.cols(); }
};

// All distinct codewords (left combinations of the generator rows), sorted by
// symbol index vectors so the order is deterministic.
std::vector<std::vector<GrElem>> code_enumerate(const LinearCode& code,
                                                std::int64_t guard = kDefaultEnumerationGuard);

// Coordinate expansion of a word over GR into a word of length m*n over Z_{p^r}
// relative to the chosen basis (each symbol contributes its m coordinates).
std::vector<ZrElem> tau_image(const std::vector<GrElem>& word, const Basis& basis);

// A code over Z_{p^r} given by an explicit (deduplicated, sorted) word list.
struct ZrCode {
    ZrModulus mod;
    std::int64_t length = 0;
    std::vector<std::vector<ZrElem>> words;
};

// Enumerates all combinations of the rows of a generator matrix over Z_{p^r}.
ZrCode zr_code_from_generator(const ZrMatrix& gen, std::int64_t guard = kDefaultEnumerationGuard);

// The image of every codeword under tau; cardinality is preserved.
ZrCode image_code(const LinearCode& code, const Basis& basis,
                  std::int64_t guard = kDefaultEnumerationGuard);

// Average-weight identity for a code C over Z_{p^r}:
//   (sum of homogeneous weights) / |C|  ==  Gamma * |support(C)|
// where the support is the set of coordinates where C is not identically zero.
struct AverageWeightIdentity {
    Rational lhs;
    Rational rhs;
    bool ok = false;
};
AverageWeightIdentity lemma3_check(const ZrCode& code);

// Weight-sum identity for the full single-symbol code: summing the homogeneous
// weight of tau(x) over every ring element x gives m(p-1)p^{rm+r-2} for every
// basis (m(p-1)p^{m-1} in the r = 1 field case).
struct WeightSumCheck {
    std::int64_t computed = 0;
    std::int64_t expected = 0;
    bool ok = false;
};
WeightSumCheck proposition_sum(const GaloisRingPtr& ring, const Basis& basis,
                               std::int64_t guard = kDefaultEnumerationGuard);

// Exact statistics of a code under the homogeneous weight.  min_nonzero is the
// minimum nonzero weight = minimum homogeneous distance (the code is linear).
struct WeightStats {
    std::int64_t sum = 0;
    std::optional<std::int64_t> min_nonzero;
    std::map<std::int64_t, std::int64_t> distribution;  // weight -> multiplicity
};
WeightStats code_weight_stats(const ZrCode& code);
WeightStats code_weight_stats(const LinearCode& code, const Basis& basis,
                              std::int64_t guard = kDefaultEnumerationGuard);

}  // namespace grbasis

#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "grbasis/modring.hpp"

namespace grbasis {

// Polynomial over Z_{p^r} with ascending coefficients, trailing zeros trimmed.
class Poly {
public:
    explicit Poly(ZrModulus mod) : mod_(mod) {}
    Poly(ZrModulus mod, std::vector<std::int64_t> coeffs);

    static Poly monomial(ZrModulus mod, int deg, std::int64_t c = 1);
    // x^n - 1, the reference polynomial for Teichmuller-compatible moduli.
    static Poly x_power_minus_one(ZrModulus mod, std::int64_t n);

    const ZrModulus& modulus() const { return mod_; }
    // Degree of the zero polynomial is -1.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    std::int64_t coeff(int i) const {
        return (i >= 0 && i < static_cast<int>(coeffs_.size())) ? coeffs_[std::size_t(i)] : 0;
    }
    const std::vector<std::int64_t>& coeffs() const { return coeffs_; }

    bool is_zero() const { return coeffs_.empty(); }
    bool is_monic() const { return degree() >= 1 && coeffs_.back() == 1; }
    std::int64_t leading_coeff() const { return coeffs_.empty() ? 0 : coeffs_.back(); }

    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly scaled(std::int64_t c) const;
    Poly shifted(int k) const;  // multiply by x^k

    // Division with remainder; the divisor's leading coefficient must be a unit.
    std::pair<Poly, Poly> divmod(const Poly& divisor) const;
    Poly mod(const Poly& divisor) const { return divmod(divisor).second; }

    // this^e modulo `modpoly`.
    Poly pow_mod(std::uint64_t e, const Poly& modpoly) const;

    friend bool operator==(const Poly& a, const Poly& b) {
        return a.mod_ == b.mod_ && a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    std::string str() const;          // "3 + x + 2*x^2 + x^3"
    std::string literal() const;      // "3,1,2,1"

private:
    void trim();
    void require_same(const Poly& o) const {
        if (mod_ != o.mod_) throw RingMismatch("polynomials over different moduli");
    }

    ZrModulus mod_;
    std::vector<std::int64_t> coeffs_;
};

inline std::ostream& operator<<(std::ostream& os, const Poly& f) { return os << f.str(); }

// Coefficient-wise reduction mod p, from Z_{p^r}[x] down to F_p[x].
Poly reduce_mod_p(const Poly& f);

// Exhaustive trial division over F_p; requires a monic input of degree >= 1.
bool is_irreducible_mod_p(const Poly& f);

// True iff the residue of x generates the full unit group of F_p[x]/(f);
// requires a monic irreducible input.
bool is_primitive_mod_p(const Poly& f);

enum class PolyClass { NotMonic, Reducible, BasicIrreducible, BasicPrimitive };

std::string to_string(PolyClass c);

// Classifies a polynomial over Z_{p^r} by the behaviour of its reduction mod p.
PolyClass classify(const Poly& g);

// The unique monic lift h of a primitive pi in F_p[x] to Z_{p^r}[x] with
// h dividing x^{p^m - 1} - 1; computed by iterated factor refinement
// mod p^k -> mod p^{k+1} and verified by exact trial division.
Poly hensel_lift_primitive(const Poly& pi, std::int64_t r);

// Smallest monic primitive of degree m over F_p in base-p counting order,
// lifted to Z_{p^r}.  For m = 1 this yields x - g with g the lift of the
// smallest primitive root mod p satisfying g^{p-1} = 1 mod p^r.
Poly find_basic_primitive(std::int64_t p, std::int64_t r, std::int64_t m);

}  // namespace grbasis

#pragma once

#include <cstdint>
#include <memory>
#include <ostream>
#include <string>
#include <vector>

#include "grbasis/polyring.hpp"

namespace grbasis {

class GaloisRing;
using GaloisRingPtr = std::shared_ptr<const GaloisRing>;

// Default ceiling for operations that enumerate ring elements or codewords.
inline constexpr std::int64_t kDefaultEnumerationGuard = 1'000'000;

// Element of GR(p^r, m), stored as its coefficient vector over the
// polynomial basis {1, w, ..., w^{m-1}}.  Immutable value type.
class GrElem {
public:
    GrElem(GaloisRingPtr ring, std::vector<std::int64_t> coeffs);

    const GaloisRingPtr& ring() const { return ring_; }
    const std::vector<std::int64_t>& coeffs() const { return coeffs_; }
    ZrElem coeff(int i) const;

    bool is_zero() const;
    bool is_one() const;
    // Units are exactly the elements outside the maximal ideal (p).
    bool is_unit() const;

    friend GrElem operator+(const GrElem& a, const GrElem& b);
    friend GrElem operator-(const GrElem& a, const GrElem& b);
    friend GrElem operator*(const GrElem& a, const GrElem& b);
    GrElem operator-() const;
    GrElem scaled(std::int64_t c) const;
    GrElem scaled(const ZrElem& c) const;
    GrElem pow(std::uint64_t e) const;

    // Multiplicative inverse, solved through the multiplication-by-z matrix
    // over Z_{p^r}; throws NotAUnit for zero divisors.
    GrElem inverse() const;

    // Generalized Frobenius z -> sum p^i z_i^p, applied as a precomputed
    // Z_{p^r}-linear map on the coefficient vector.
    GrElem frobenius() const;
    GrElem frobenius_iter(std::int64_t k) const;
    // Generalized trace: sum of all m Frobenius iterates; lands in Z_{p^r}.
    ZrElem trace() const;

    // Index of the image in the residue field F_{p^m} (base-p digits).
    std::int64_t residue_index() const;
    // The r Teichmuller digits of the p-adic expansion z = sum p^i z_i.
    std::vector<GrElem> padic_digits() const;

    friend bool operator==(const GrElem& a, const GrElem& b);
    friend bool operator!=(const GrElem& a, const GrElem& b) { return !(a == b); }

    std::string str() const;      // "3 + 2*w + w^2"
    std::string literal() const;  // "3,2,1" (always m coefficients)

private:
    GaloisRingPtr ring_;
    std::vector<std::int64_t> coeffs_;
};

inline std::ostream& operator<<(std::ostream& os, const GrElem& z) { return os << z.str(); }

// The Galois ring GR(p^r, m) = Z_{p^r}[x]/(h) for a monic basic primitive h
// that divides x^{p^m-1} - 1, so the residue of x is a Teichmuller generator.
// Instances are immutable and shared through GaloisRingPtr.
class GaloisRing : public std::enable_shared_from_this<GaloisRing> {
public:
    // Builds the ring with the canonical modulus from find_basic_primitive.
    static GaloisRingPtr make(std::int64_t p, std::int64_t r, std::int64_t m);
    // Builds the ring with a caller-supplied modulus; the modulus must be
    // basic primitive and divide x^{p^m-1} - 1 over Z_{p^r}.
    static GaloisRingPtr make(std::int64_t p, std::int64_t r, std::int64_t m, const Poly& modulus);

    std::int64_t p() const { return zr_.p(); }
    std::int64_t r() const { return zr_.r(); }
    std::int64_t m() const { return m_; }
    const ZrModulus& zr() const { return zr_; }
    std::int64_t characteristic() const { return zr_.value(); }
    const Poly& modulus() const { return h_; }

    std::int64_t size() const { return size_; }                  // p^{rm}
    std::int64_t residue_size() const { return residue_size_; }  // p^m
    std::int64_t unit_count() const { return unit_count_; }      // (p^m-1) p^{(r-1)m}
    // |p^i R| for i = 0..r.
    std::vector<std::int64_t> ideal_sizes() const;

    GrElem zero() const;
    GrElem one() const;
    GrElem omega() const;                       // residue of x
    GrElem monomial(int j) const;               // w^j for 0 <= j < m
    GrElem element(std::vector<std::int64_t> coeffs) const;  // padded to m entries
    GrElem from_scalar(std::int64_t v) const;
    GrElem from_scalar(const ZrElem& v) const;

    // Enumeration order: index digits in base p^r, constant coefficient first.
    GrElem element_at(std::int64_t index) const;
    std::int64_t index_of(const GrElem& z) const;

    // {0, 1, w, w^2, ...}: the p^m solutions of t^{p^m} = t.
    std::vector<GrElem> teichmuller_set() const;
    GrElem teichmuller_lift(std::int64_t residue_index) const;

    // Recombine r Teichmuller digits into sum p^i d_i; rejects digits that
    // are not Teichmuller representatives.
    GrElem from_padic_digits(const std::vector<GrElem>& digits) const;

    friend bool operator==(const GaloisRing& a, const GaloisRing& b) {
        return a.zr_ == b.zr_ && a.m_ == b.m_ && a.h_ == b.h_;
    }
    friend bool operator!=(const GaloisRing& a, const GaloisRing& b) { return !(a == b); }

    std::string spec_string() const;  // "GR(p=2,r=2,m=3;h=3,1,2,1)"

private:
    friend class GrElem;
    friend GrElem operator*(const GrElem& a, const GrElem& b);
    GaloisRing(ZrModulus zr, std::int64_t m, Poly h);
    void build_tables();
    const std::int64_t* teich_row(std::int64_t slot) const {
        return teich_coeffs_.data() + slot * m_;
    }
    GrElem teichmuller_lift_slot(std::int64_t slot) const;
    std::vector<std::int64_t> mul_coeffs(const std::vector<std::int64_t>& a,
                                         const std::vector<std::int64_t>& b) const;

    ZrModulus zr_;
    std::int64_t m_;
    Poly h_;
    std::int64_t size_ = 0;
    std::int64_t residue_size_ = 0;
    std::int64_t unit_count_ = 0;
    std::vector<std::vector<std::int64_t>> red_rows_;  // w^{m+k} over the basis
    std::vector<std::int64_t> frob_;                   // m x m, row-major
    std::vector<std::int64_t> teich_coeffs_;           // p^m rows of m coefficients
    std::vector<std::int32_t> teich_lookup_;           // residue index -> slot
};

bool same_ring(const GrElem& a, const GrElem& b);

}  // namespace grbasis

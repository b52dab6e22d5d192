#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "grbasis/galois.hpp"

namespace grbasis {

// Dense matrix of Galois ring elements.  Rectangular in general; determinant,
// adjugate and inverse require a square shape.
class GrMatrix {
public:
    GrMatrix(GaloisRingPtr ring, int rows, int cols);

    static GrMatrix identity(const GaloisRingPtr& ring, int n);

    const GaloisRingPtr& ring() const { return ring_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    const GrElem& at(int i, int j) const;
    void set(int i, int j, const GrElem& v);

    GrElem det() const;
    GrMatrix adjugate() const;
    // det(M)^{-1} * adjugate(M); throws Singular when det is not a unit.
    GrMatrix inverse() const;
    GrMatrix transpose() const;

    friend GrMatrix operator*(const GrMatrix& a, const GrMatrix& b);
    friend bool operator==(const GrMatrix& a, const GrMatrix& b);
    friend bool operator!=(const GrMatrix& a, const GrMatrix& b) { return !(a == b); }

    bool is_identity() const;
    bool is_symmetric() const;

private:
    void require_square(const char* what) const;

    GaloisRingPtr ring_;
    int rows_;
    int cols_;
    std::vector<GrElem> data_;
};

// Ordered basis of GR(p^r, m) as a free Z_{p^r}-module.  Construction
// validates that the coordinate matrix has a unit determinant.
class Basis {
public:
    static Basis from_elements(const std::vector<GrElem>& elems);
    static Basis polynomial(const GaloisRingPtr& ring);

    const GaloisRingPtr& ring() const { return ring_; }
    std::int64_t size() const { return static_cast<std::int64_t>(elems_.size()); }
    const GrElem& element(int i) const { return elems_[std::size_t(i)]; }
    const std::vector<GrElem>& elements() const { return elems_; }

    // Row i expresses element i over the polynomial basis.
    const ZrMatrix& coordinate_matrix() const { return coord_; }
    const ZrMatrix& coordinate_inverse() const { return coord_inv_; }

    // Coordinates of z in this basis (the coordinate map tau).
    std::vector<ZrElem> coordinates(const GrElem& z) const;

    friend bool operator==(const Basis& a, const Basis& b) { return a.elems_ == b.elems_; }
    friend bool operator!=(const Basis& a, const Basis& b) { return !(a == b); }

    std::string literal() const;  // "1,0;0,1"

private:
    Basis(GaloisRingPtr ring, std::vector<GrElem> elems, ZrMatrix coord, ZrMatrix coord_inv);

    GaloisRingPtr ring_;
    std::vector<GrElem> elems_;
    ZrMatrix coord_;
    ZrMatrix coord_inv_;
};

// Matrix with entry (i, j) equal to the j-th Frobenius iterate of element i.
GrMatrix automorphism_matrix(const Basis& b);

// Same construction applied to the powers 1, w, ..., w^{m-1}: the Vandermonde
// matrix of the Frobenius conjugates of w.
GrMatrix frobenius_vandermonde(const GaloisRingPtr& ring);

// The unique trace-dual basis, read off the first row of the inverse of the
// automorphism matrix and re-verified through the trace pairing.
Basis dual_basis(const Basis& b);

// True iff trace(b_i * a_j) is the identity pairing.
bool is_dual_pair(const Basis& b, const Basis& a);

bool is_self_dual(const Basis& b);

// Order-sensitive: element i+1 must be the Frobenius image of element i,
// wrapping around at the end.
bool is_normal(const Basis& b);
// Relaxation: the elements form a single Frobenius orbit in some order.
bool is_normal_as_set(const Basis& b);

// Basis {alpha, alpha^f, ..., alpha^{f^{m-1}}}; throws NotABasis if the orbit
// is linearly dependent.
Basis normal_closure(const GrElem& alpha);

// All alpha (in enumeration order) whose Frobenius orbit is a basis.
// limit = 0 returns every generator.
std::vector<GrElem> normal_basis_generators(const GaloisRingPtr& ring, std::int64_t limit = 0,
                                            std::int64_t guard = kDefaultEnumerationGuard);

// Exhaustive search for self-dual bases, returned with elements in
// enumeration order.  The trace-pairing pruning keeps the search shallow; the
// guard bounds the number of extension steps.
std::vector<Basis> self_dual_bases(const GaloisRingPtr& ring,
                                   std::int64_t guard = kDefaultEnumerationGuard);

// (det B)^2 for the automorphism matrix B; always a scalar unit.
ZrElem automorphism_det_squared(const Basis& b);

struct BasisReport {
    bool is_basis = false;
    std::optional<GrElem> det_b;
    std::optional<ZrElem> det_b_squared;
    std::optional<bool> self_dual;
    std::optional<bool> normal;
    std::optional<Basis> dual;
};

// Full report for a candidate basis; a NotABasis failure is folded into the
// report instead of thrown.
BasisReport basis_report(const std::vector<GrElem>& candidates);

// Uniform random basis by rejection sampling on the coordinate matrix.
Basis random_basis(const GaloisRingPtr& ring, std::mt19937_64& rng);

}  // namespace grbasis

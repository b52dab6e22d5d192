#include "grbasis/bases.hpp"

#include <algorithm>
#include <sstream>

namespace grbasis {

// ---------------------------------------------------------------------------
// GrMatrix

GrMatrix::GrMatrix(GaloisRingPtr ring, int rows, int cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols),
      data_(std::size_t(rows) * cols, ring_->zero()) {
    if (rows < 0 || cols < 0) throw BadArgument("negative matrix dimension");
}

GrMatrix GrMatrix::identity(const GaloisRingPtr& ring, int n) {
    GrMatrix m(ring, n, n);
    for (int i = 0; i < n; ++i) m.set(i, i, ring->one());
    return m;
}

const GrElem& GrMatrix::at(int i, int j) const {
    if (i < 0 || i >= rows_ || j < 0 || j >= cols_) throw BadArgument("matrix index out of range");
    return data_[std::size_t(i) * cols_ + j];
}

void GrMatrix::set(int i, int j, const GrElem& v) {
    if (i < 0 || i >= rows_ || j < 0 || j >= cols_) throw BadArgument("matrix index out of range");
    if (!same_ring(v, data_.front())) throw RingMismatch("matrix entry from a different ring");
    data_[std::size_t(i) * cols_ + j] = v;
}

void GrMatrix::require_square(const char* what) const {
    if (!is_square()) throw BadArgument(std::string(what) + " requires a square matrix");
}

GrElem GrMatrix::det() const {
    require_square("determinant");
    return detail::expansion_det<GrElem>(rows_, ring_->one(), ring_->zero(),
                                         [this](int i, int j) { return at(i, j); });
}

GrMatrix GrMatrix::adjugate() const {
    require_square("adjugate");
    int n = rows_;
    GrMatrix adj(ring_, n, n);
    if (n == 0) return adj;
    if (n > 12) throw TooLarge("adjugate supports dimension <= 12");
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            auto entry = [&](int a, int b) {
                return at(a >= i ? a + 1 : a, b >= j ? b + 1 : b);
            };
            GrElem minor_det =
                detail::expansion_det<GrElem>(n - 1, ring_->one(), ring_->zero(), entry);
            adj.set(j, i, ((i + j) % 2 == 0) ? minor_det : -minor_det);
        }
    }
    return adj;
}

GrMatrix GrMatrix::inverse() const {
    require_square("inverse");
    GrElem d = det();
    if (!d.is_unit()) throw Singular("matrix determinant " + d.str() + " is not a unit");
    GrElem dinv = d.inverse();
    GrMatrix adj = adjugate();
    GrMatrix out(ring_, rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out.set(i, j, adj.at(i, j) * dinv);
    return out;
}

GrMatrix GrMatrix::transpose() const {
    GrMatrix out(ring_, cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out.set(j, i, at(i, j));
    return out;
}

GrMatrix operator*(const GrMatrix& a, const GrMatrix& b) {
    if (*a.ring_ != *b.ring_) throw RingMismatch("matrix product over different rings");
    if (a.cols_ != b.rows_) throw BadArgument("matrix product dimension mismatch");
    GrMatrix out(a.ring_, a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i) {
        for (int j = 0; j < b.cols_; ++j) {
            GrElem acc = a.ring_->zero();
            for (int k = 0; k < a.cols_; ++k) acc = acc + a.at(i, k) * b.at(k, j);
            out.set(i, j, acc);
        }
    }
    return out;
}

bool operator==(const GrMatrix& a, const GrMatrix& b) {
    if (*a.ring_ != *b.ring_ || a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
    return a.data_ == b.data_;
}

bool GrMatrix::is_identity() const {
    if (!is_square()) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) {
            const GrElem& v = at(i, j);
            if (i == j ? !v.is_one() : !v.is_zero()) return false;
        }
    return true;
}

bool GrMatrix::is_symmetric() const {
    if (!is_square()) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = i + 1; j < cols_; ++j)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Basis

namespace {

ZrMatrix coordinate_rows(const GaloisRingPtr& ring, const std::vector<GrElem>& elems) {
    int m = static_cast<int>(ring->m());
    ZrMatrix c(ring->zr(), m, m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) c.set(i, j, elems[std::size_t(i)].coeffs()[std::size_t(j)]);
    return c;
}

}  // namespace

Basis::Basis(GaloisRingPtr ring, std::vector<GrElem> elems, ZrMatrix coord, ZrMatrix coord_inv)
    : ring_(std::move(ring)), elems_(std::move(elems)), coord_(std::move(coord)),
      coord_inv_(std::move(coord_inv)) {}

Basis Basis::from_elements(const std::vector<GrElem>& elems) {
    if (elems.empty()) throw BadArgument("a basis needs at least one element");
    GaloisRingPtr ring = elems.front().ring();
    for (const auto& e : elems)
        if (!same_ring(e, elems.front())) throw RingMismatch("basis elements from different rings");
    if (static_cast<std::int64_t>(elems.size()) != ring->m())
        throw BadArgument("a basis of GR(p^r,m) needs exactly m elements, got " +
                          std::to_string(elems.size()));
    ZrMatrix coord = coordinate_rows(ring, elems);
    ZrElem d = coord.det();
    if (!d.is_unit())
        throw NotABasis("coordinate matrix determinant " + d.str() + " is not a unit mod " +
                        std::to_string(ring->characteristic()));
    return Basis(ring, elems, coord, coord.inverse());
}

Basis Basis::polynomial(const GaloisRingPtr& ring) {
    std::vector<GrElem> elems;
    for (int j = 0; j < ring->m(); ++j) elems.push_back(ring->monomial(j));
    return from_elements(elems);
}

std::vector<ZrElem> Basis::coordinates(const GrElem& z) const {
    if (*z.ring() != *ring_) throw RingMismatch("element belongs to a different ring");
    std::vector<ZrElem> row;
    row.reserve(std::size_t(ring_->m()));
    for (std::int64_t j = 0; j < ring_->m(); ++j)
        row.emplace_back(ring_->zr(), z.coeffs()[std::size_t(j)]);
    return mul_row(row, coord_inv_);
}

std::string Basis::literal() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < elems_.size(); ++i) {
        if (i) os << ';';
        os << elems_[i].literal();
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Basis predicates and constructions

GrMatrix automorphism_matrix(const Basis& b) {
    int m = static_cast<int>(b.ring()->m());
    GrMatrix out(b.ring(), m, m);
    for (int i = 0; i < m; ++i) {
        GrElem cur = b.element(i);
        for (int j = 0; j < m; ++j) {
            out.set(i, j, cur);
            if (j + 1 < m) cur = cur.frobenius();
        }
    }
    return out;
}

GrMatrix frobenius_vandermonde(const GaloisRingPtr& ring) {
    return automorphism_matrix(Basis::polynomial(ring));
}

Basis dual_basis(const Basis& b) {
    GrMatrix B = automorphism_matrix(b);
    GrMatrix Binv = [&] {
        try {
            return B.inverse();
        } catch (const Singular&) {
            throw InternalCheckFailure("automorphism matrix of a valid basis is singular");
        }
    }();
    std::vector<GrElem> dual_elems;
    int m = static_cast<int>(b.ring()->m());
    for (int j = 0; j < m; ++j) dual_elems.push_back(Binv.at(0, j));
    Basis dual = Basis::from_elements(dual_elems);
    if (!is_dual_pair(b, dual))
        throw InternalCheckFailure("computed dual basis fails the trace pairing");
    return dual;
}

bool is_dual_pair(const Basis& b, const Basis& a) {
    if (*b.ring() != *a.ring()) throw RingMismatch("bases of different rings");
    int m = static_cast<int>(b.ring()->m());
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
            ZrElem t = (b.element(i) * a.element(j)).trace();
            if (t.value() != (i == j ? 1 : 0)) return false;
        }
    }
    return true;
}

bool is_self_dual(const Basis& b) { return is_dual_pair(b, b); }

bool is_normal(const Basis& b) {
    int m = static_cast<int>(b.ring()->m());
    for (int i = 0; i < m; ++i)
        if (b.element(i).frobenius() != b.element((i + 1) % m)) return false;
    return true;
}

bool is_normal_as_set(const Basis& b) {
    int m = static_cast<int>(b.ring()->m());
    std::vector<std::int64_t> orbit, elems;
    GrElem cur = b.element(0);
    for (int i = 0; i < m; ++i) {
        orbit.push_back(b.ring()->index_of(cur));
        elems.push_back(b.ring()->index_of(b.element(i)));
        cur = cur.frobenius();
    }
    std::sort(orbit.begin(), orbit.end());
    std::sort(elems.begin(), elems.end());
    return orbit == elems;
}

Basis normal_closure(const GrElem& alpha) {
    std::vector<GrElem> orbit;
    GrElem cur = alpha;
    for (std::int64_t i = 0; i < alpha.ring()->m(); ++i) {
        orbit.push_back(cur);
        cur = cur.frobenius();
    }
    return Basis::from_elements(orbit);
}

namespace {

// Unit-determinant test without constructing a Basis (no exceptions as flow).
bool orbit_is_basis(const GaloisRingPtr& ring, const std::vector<GrElem>& elems) {
    return coordinate_rows(ring, elems).det().is_unit();
}

}  // namespace

std::vector<GrElem> normal_basis_generators(const GaloisRingPtr& ring, std::int64_t limit,
                                            std::int64_t guard) {
    if (ring->size() > guard)
        throw TooLarge("ring has " + std::to_string(ring->size()) +
                       " elements, above the enumeration guard " + std::to_string(guard));
    std::vector<GrElem> out;
    for (std::int64_t idx = 0; idx < ring->size(); ++idx) {
        GrElem alpha = ring->element_at(idx);
        std::vector<GrElem> orbit;
        GrElem cur = alpha;
        for (std::int64_t i = 0; i < ring->m(); ++i) {
            orbit.push_back(cur);
            cur = cur.frobenius();
        }
        if (orbit_is_basis(ring, orbit)) {
            out.push_back(alpha);
            if (limit > 0 && static_cast<std::int64_t>(out.size()) >= limit) break;
        }
    }
    return out;
}

namespace {

struct SelfDualSearch {
    const GaloisRingPtr& ring;
    std::int64_t guard;
    std::int64_t steps = 0;
    std::vector<GrElem> candidates;  // elements with trace(x^2) = 1
    std::vector<std::size_t> chosen;
    std::vector<Basis> found;

    void run() {
        for (std::int64_t idx = 0; idx < ring->size(); ++idx) {
            bump();
            GrElem x = ring->element_at(idx);
            if ((x * x).trace().value() == 1) candidates.push_back(x);
        }
        extend(0);
    }

    void bump() {
        if (++steps > guard)
            throw TooLarge("self-dual search exceeded the guard of " + std::to_string(guard) +
                           " steps");
    }

    void extend(std::size_t from) {
        if (static_cast<std::int64_t>(chosen.size()) == ring->m()) {
            std::vector<GrElem> elems;
            for (std::size_t c : chosen) elems.push_back(candidates[c]);
            if (orbit_is_basis(ring, elems)) found.push_back(Basis::from_elements(elems));
            return;
        }
        for (std::size_t c = from; c < candidates.size(); ++c) {
            bump();
            bool ok = true;
            for (std::size_t prev : chosen) {
                if ((candidates[prev] * candidates[c]).trace().value() != 0) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            chosen.push_back(c);
            extend(c + 1);
            chosen.pop_back();
        }
    }
};

}  // namespace

std::vector<Basis> self_dual_bases(const GaloisRingPtr& ring, std::int64_t guard) {
    if (ring->size() > guard)
        throw TooLarge("ring has " + std::to_string(ring->size()) +
                       " elements, above the enumeration guard " + std::to_string(guard));
    SelfDualSearch search{ring, guard, 0, {}, {}, {}};
    search.run();
    return search.found;
}

ZrElem automorphism_det_squared(const Basis& b) {
    GrElem d = automorphism_matrix(b).det();
    GrElem sq = d * d;
    for (std::int64_t i = 1; i < b.ring()->m(); ++i)
        if (sq.coeffs()[std::size_t(i)] != 0)
            throw InternalCheckFailure("(det B)^2 is not a scalar");
    ZrElem out(b.ring()->zr(), sq.coeffs()[0]);
    if (!out.is_unit()) throw InternalCheckFailure("(det B)^2 is not a unit");
    return out;
}

BasisReport basis_report(const std::vector<GrElem>& candidates) {
    BasisReport rep;
    try {
        Basis b = Basis::from_elements(candidates);
        rep.is_basis = true;
        rep.det_b = automorphism_matrix(b).det();
        rep.det_b_squared = automorphism_det_squared(b);
        rep.self_dual = is_self_dual(b);
        rep.normal = is_normal(b);
        rep.dual = dual_basis(b);
    } catch (const NotABasis&) {
        rep.is_basis = false;
    }
    return rep;
}

Basis random_basis(const GaloisRingPtr& ring, std::mt19937_64& rng) {
    std::int64_t q = ring->characteristic();
    std::uniform_int_distribution<std::int64_t> dist(0, q - 1);
    for (;;) {
        std::vector<GrElem> elems;
        for (std::int64_t i = 0; i < ring->m(); ++i) {
            std::vector<std::int64_t> c(std::size_t(ring->m()), 0);
            for (auto& x : c) x = dist(rng);
            elems.push_back(ring->element(std::move(c)));
        }
        if (orbit_is_basis(ring, elems)) return Basis::from_elements(elems);
    }
}

}  // namespace grbasis

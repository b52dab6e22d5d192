#include <doctest.h>

#include <random>
#include <set>

#include "grbasis/bases.hpp"

using namespace grbasis;

namespace {

GaloisRingPtr gr42() { return GaloisRing::make(2, 2, 2); }
GaloisRingPtr gr43() { return GaloisRing::make(2, 2, 3); }

// All ordered bases of a small ring, by exhausting m-tuples of elements.
std::vector<Basis> all_bases(const GaloisRingPtr& ring) {
    std::vector<Basis> out;
    std::int64_t n = ring->size();
    std::int64_t tuples = 1;
    for (std::int64_t i = 0; i < ring->m(); ++i) tuples *= n;
    for (std::int64_t t = 0; t < tuples; ++t) {
        std::vector<GrElem> elems;
        std::int64_t rem = t;
        for (std::int64_t i = 0; i < ring->m(); ++i) {
            elems.push_back(ring->element_at(rem % n));
            rem /= n;
        }
        try {
            out.push_back(Basis::from_elements(elems));
        } catch (const NotABasis&) {
        }
    }
    return out;
}

}  // namespace

TEST_CASE("GrMatrix basics") {
    auto ring = gr42();
    GrMatrix eye = GrMatrix::identity(ring, 2);
    CHECK(eye.is_identity());
    CHECK(eye.det().is_one());
    CHECK(eye.inverse() == eye);

    GrMatrix a(ring, 2, 2);
    a.set(0, 0, ring->one());
    a.set(0, 1, ring->omega());
    a.set(1, 0, ring->from_scalar(2));
    a.set(1, 1, ring->element({3, 3}));
    CHECK(a.transpose().at(0, 1) == ring->from_scalar(2));
    CHECK((a * eye) == a);
    // det = 1*(3+3w) - 2*w = 3 + w
    CHECK(a.det().literal() == "3,1");
    GrMatrix inv = a.inverse();
    CHECK((a * inv).is_identity());
    CHECK((inv * a).is_identity());

    GrMatrix rect(ring, 2, 3);
    CHECK_THROWS_AS(rect.det(), BadArgument);
    CHECK_THROWS_AS(rect.inverse(), BadArgument);
    CHECK(rect.transpose().rows() == 3);

    GrMatrix singular(ring, 2, 2);
    singular.set(0, 0, ring->one());
    singular.set(1, 0, ring->from_scalar(2));
    CHECK_THROWS_AS(singular.inverse(), Singular);
}

TEST_CASE("adjugate identity over the ring") {
    auto ring = gr43();
    GrMatrix a(ring, 3, 3);
    std::int64_t v = 0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) a.set(i, j, ring->element_at((v = v * 7 + 13) % 64));
    GrMatrix prod = a * a.adjugate();
    GrElem d = a.det();
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            CHECK(prod.at(i, j) == (i == j ? d : ring->zero()));
}

TEST_CASE("basis validation") {
    auto ring = gr42();
    CHECK_THROWS_AS(Basis::from_elements({ring->one()}), BadArgument);  // wrong cardinality
    CHECK_THROWS_AS(Basis::from_elements({ring->one(), ring->omega(), ring->omega()}),
                    BadArgument);
    CHECK_THROWS_AS(Basis::from_elements({ring->one(), ring->omega().scaled(2)}), NotABasis);
    CHECK_THROWS_AS(Basis::from_elements({ring->one(), gr43()->one()}), RingMismatch);
    CHECK_THROWS_AS(Basis::from_elements({}), BadArgument);

    Basis b = Basis::polynomial(ring);
    CHECK(b.size() == 2);
    CHECK(b.element(0).is_one());
    CHECK(b.element(1) == ring->omega());
    CHECK(b.literal() == "1,0;0,1");
    CHECK(b == Basis::from_elements({ring->one(), ring->omega()}));
}

TEST_CASE("coordinates reconstruct the element") {
    auto ring = gr42();
    Basis b = Basis::from_elements({ring->omega(), ring->element({3, 3})});
    for (std::int64_t i = 0; i < ring->size(); ++i) {
        GrElem z = ring->element_at(i);
        auto coords = b.coordinates(z);
        GrElem acc = ring->zero();
        for (int j = 0; j < b.size(); ++j) acc = acc + b.element(j).scaled(coords[std::size_t(j)]);
        CHECK(acc == z);
    }
    auto c1 = b.coordinates(ring->one());
    CHECK(c1[0].value() == 3);
    CHECK(c1[1].value() == 3);

    // Polynomial-basis coordinates are the coefficients themselves.
    Basis poly = Basis::polynomial(gr43());
    for (std::int64_t i = 0; i < 64; ++i) {
        GrElem z = gr43()->element_at(i);
        auto coords = poly.coordinates(z);
        for (int j = 0; j < 3; ++j) CHECK(coords[std::size_t(j)].value() == z.coeffs()[std::size_t(j)]);
    }
}

TEST_CASE("automorphism matrix and Vandermonde matrix") {
    auto ring = gr42();
    Basis b = Basis::polynomial(ring);
    GrMatrix B = automorphism_matrix(b);
    CHECK(B.at(0, 0).is_one());
    CHECK(B.at(0, 1).is_one());
    CHECK(B.at(1, 0) == ring->omega());
    CHECK(B.at(1, 1) == ring->omega().frobenius());
    CHECK(B.det().literal() == "3,2");

    // For the polynomial basis the automorphism matrix is the Vandermonde
    // matrix of the Frobenius orbit of omega; for m = 2, det = w^f - w.
    CHECK(frobenius_vandermonde(ring) == B);
    CHECK(B.det() == ring->omega().frobenius() - ring->omega());

    // m = 3: det Omega = prod_{i<j} (w^{f^j} - w^{f^i}).
    auto r3 = gr43();
    GrElem w0 = r3->omega();
    GrElem w1 = w0.frobenius();
    GrElem w2 = w1.frobenius();
    GrElem expected = (w1 - w0) * (w2 - w0) * (w2 - w1);
    CHECK(frobenius_vandermonde(r3).det() == expected);
}

TEST_CASE("Example: dual of the polynomial basis of GR(4,2)") {
    auto ring = gr42();
    Basis b = Basis::polynomial(ring);
    Basis dual = dual_basis(b);
    CHECK(dual.element(0).literal() == "3,1");
    CHECK(dual.element(1).literal() == "1,2");
    CHECK(is_dual_pair(b, dual));
    CHECK(is_dual_pair(dual, b));
    CHECK(automorphism_det_squared(b).value() == 1);
    CHECK(dual_basis(dual) == b);
}

TEST_CASE("Example: dual of the polynomial basis of GR(4,3)") {
    auto ring = gr43();
    Basis dual = dual_basis(Basis::polynomial(ring));
    CHECK(dual.literal() == "3,2,2;2,2,1;2,1,2");
    GrElem det = automorphism_matrix(Basis::polynomial(ring)).det();
    CHECK(det == ring->from_scalar(3));
}

TEST_CASE("Example: dual of the polynomial basis of GR(8,3)") {
    auto ring = GaloisRing::make(2, 3, 3);
    CHECK(ring->modulus().literal() == "7,5,6,1");
    Basis dual = dual_basis(Basis::polynomial(ring));
    CHECK(dual.literal() == "3,6,6;6,2,5;6,5,2");
}

TEST_CASE("dual pairing in matrix form") {
    // If L is the automorphism matrix of the dual basis, L * B^t = I.
    for (const auto& ring : {gr42(), gr43()}) {
        Basis b = Basis::polynomial(ring);
        Basis dual = dual_basis(b);
        CHECK((automorphism_matrix(dual) * automorphism_matrix(b).transpose()).is_identity());
    }
}

TEST_CASE("Gram matrix of traces is B * B^t") {
    auto ring = gr43();
    Basis b = Basis::from_elements(
        {ring->element({1, 1}), ring->element({1, 0, 1}), ring->element({3, 3, 3})});
    GrMatrix B = automorphism_matrix(b);
    GrMatrix gram = B * B.transpose();
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            CHECK(gram.at(i, j) == ring->from_scalar((b.element(i) * b.element(j)).trace().value()));
}

TEST_CASE("normal and self-dual classification of the worked examples") {
    auto ring = gr42();
    Basis ex4 = Basis::from_elements({ring->omega(), ring->element({3, 3})});
    CHECK(is_normal(ex4));
    CHECK(is_normal_as_set(ex4));
    CHECK(automorphism_matrix(ex4).is_symmetric());
    CHECK(!is_self_dual(ex4));

    auto r3 = gr43();
    Basis ex5 = Basis::from_elements(
        {r3->element({1, 1}), r3->element({1, 0, 1}), r3->element({3, 3, 3})});
    CHECK(is_self_dual(ex5));
    CHECK(is_normal(ex5));
    GrMatrix B = automorphism_matrix(ex5);
    CHECK(B.is_symmetric());
    CHECK((B * B.transpose()).is_identity());
    CHECK(dual_basis(ex5) == ex5);

    // is_normal is order-sensitive; the set-based variant is not.
    Basis swapped = Basis::from_elements(
        {r3->element({1, 1}), r3->element({3, 3, 3}), r3->element({1, 0, 1})});
    CHECK(!is_normal(swapped));
    CHECK(is_normal_as_set(swapped));
    CHECK(!automorphism_matrix(swapped).is_symmetric());

    // The polynomial basis of GR(4,2) is not normal.
    CHECK(!is_normal(Basis::polynomial(ring)));
}

TEST_CASE("normal closure") {
    auto ring = gr42();
    Basis nb = normal_closure(ring->omega());
    CHECK(nb.element(0) == ring->omega());
    CHECK(nb.element(1).literal() == "3,3");
    CHECK(is_normal(nb));
    CHECK_THROWS_AS(normal_closure(ring->one()), NotABasis);
    CHECK_THROWS_AS(normal_closure(ring->zero()), NotABasis);
}

TEST_CASE("normal basis generator search matches brute force") {
    auto ring = gr42();
    std::set<std::string> brute;
    for (std::int64_t i = 0; i < ring->size(); ++i) {
        GrElem alpha = ring->element_at(i);
        try {
            normal_closure(alpha);
            brute.insert(alpha.literal());
        } catch (const NotABasis&) {
        }
    }
    auto found = normal_basis_generators(ring, 0);
    CHECK(found.size() == brute.size());
    for (const auto& g : found) {
        CHECK(brute.count(g.literal()) == 1);
        CHECK(is_normal(normal_closure(g)));
    }
    auto limited = normal_basis_generators(ring, 3);
    CHECK(limited.size() == 3);
    CHECK_THROWS_AS(normal_basis_generators(ring, 0, 5), TooLarge);
}

TEST_CASE("self-dual basis search") {
    // F_4: the unique self-dual basis set is {w, w^2}.
    auto f4 = GaloisRing::make(2, 1, 2);
    auto found = self_dual_bases(f4, 100000);
    REQUIRE(found.size() == 1);
    CHECK(found[0].element(0) == f4->omega());
    CHECK(found[0].element(1) == f4->omega() * f4->omega());
    CHECK(is_self_dual(found[0]));

    // GR(4,2): compare against brute force over all ordered bases, as sets.
    auto ring = gr42();
    std::set<std::set<std::string>> brute;
    for (const Basis& b : all_bases(ring)) {
        if (is_self_dual(b)) brute.insert({b.element(0).literal(), b.element(1).literal()});
    }
    auto search = self_dual_bases(ring, 1000000);
    CHECK(search.size() == brute.size());
    for (const Basis& b : search) {
        CHECK(is_self_dual(b));
        CHECK(brute.count({b.element(0).literal(), b.element(1).literal()}) == 1);
    }

    // GR(4,3): the Example-5 basis appears in the search results.
    auto r3 = gr43();
    auto sd3 = self_dual_bases(r3, 1000000);
    std::set<std::string> ex5{"1,1,0", "1,0,1", "3,3,3"};
    bool found_ex5 = false;
    for (const Basis& b : sd3) {
        std::set<std::string> s{b.element(0).literal(), b.element(1).literal(),
                                b.element(2).literal()};
        if (s == ex5) found_ex5 = true;
        CHECK(is_self_dual(b));
    }
    CHECK(found_ex5);
}

TEST_CASE("(det B)^2 is a scalar unit for every basis of GR(4,2)") {
    auto ring = gr42();
    auto bases = all_bases(ring);
    CHECK(bases.size() == 96);
    for (const Basis& b : bases) {
        ZrElem sq = automorphism_det_squared(b);
        CHECK(sq.is_unit());
        GrElem d = automorphism_matrix(b).det();
        CHECK(d * d == ring->from_scalar(sq.value()));
    }
}

TEST_CASE("dual involution over every basis of GR(4,2)") {
    auto ring = gr42();
    for (const Basis& b : all_bases(ring)) {
        Basis dual = dual_basis(b);
        CHECK(is_dual_pair(b, dual));
        CHECK(dual_basis(dual) == b);
    }
}

TEST_CASE("basis_report") {
    auto ring = gr42();
    BasisReport rep = basis_report({ring->one(), ring->omega()});
    CHECK(rep.is_basis);
    CHECK(rep.det_b->literal() == "3,2");
    CHECK(rep.det_b_squared->value() == 1);
    CHECK_FALSE(*rep.self_dual);
    CHECK_FALSE(*rep.normal);
    CHECK(rep.dual->literal() == "3,1;1,2");

    BasisReport bad = basis_report({ring->one(), ring->from_scalar(2)});
    CHECK(!bad.is_basis);
    CHECK(!bad.det_b.has_value());
    CHECK(!bad.dual.has_value());
}

TEST_CASE("random_basis is valid and seed-deterministic") {
    auto ring = gr43();
    std::mt19937_64 rng1(7), rng2(7);
    Basis a = random_basis(ring, rng1);
    Basis b = random_basis(ring, rng2);
    CHECK(a == b);
    CHECK(is_dual_pair(a, dual_basis(a)));
    std::mt19937_64 rng3(8);
    for (int i = 0; i < 10; ++i) {
        Basis c = random_basis(ring, rng3);
        CHECK(automorphism_det_squared(c).is_unit());
    }
}

#include <doctest.h>

#include <map>
#include <set>

#include "grbasis/galois.hpp"

using namespace grbasis;

namespace {

GaloisRingPtr gr42() { return GaloisRing::make(2, 2, 2); }
GaloisRingPtr gr43() { return GaloisRing::make(2, 2, 3); }
GaloisRingPtr gr82() { return GaloisRing::make(2, 3, 2); }

// Digit-wise Frobenius oracle: decompose, raise each Teichmuller digit to the
// p-th power, recombine with the same p-power weights.
GrElem frobenius_by_digits(const GrElem& z) {
    const auto& ring = z.ring();
    auto digits = z.padic_digits();
    GrElem acc = ring->zero();
    std::int64_t weight = 1;
    for (const auto& d : digits) {
        acc = acc + d.pow(std::uint64_t(ring->p())).scaled(weight);
        weight *= ring->p();
    }
    return acc;
}

}  // namespace

TEST_CASE("construction caps and validation") {
    CHECK_THROWS_AS(GaloisRing::make(2, 2, 25), TooLarge);  // p^m over the residue cap
    CHECK_THROWS_AS(GaloisRing::make(2, 35, 1), TooLarge);  // p^r over the modulus cap
    CHECK_THROWS_AS(GaloisRing::make(2, 2, 0), BadArgument);
    CHECK_THROWS_AS(GaloisRing::make(6, 2, 2), BadArgument);

    // Modulus whose reduction is irreducible but not primitive: rejected.
    ZrModulus m4(2, 2);
    CHECK_THROWS_AS(GaloisRing::make(2, 2, 4, Poly(m4, {1, 1, 1, 1, 1})), BadArgument);
    // Modulus that is primitive mod p but does not divide x^{p^m-1} - 1: rejected.
    CHECK_THROWS_AS(GaloisRing::make(2, 2, 1, Poly(m4, {-3, 1})), BadArgument);
    CHECK_THROWS_AS(GaloisRing::make(2, 2, 2, Poly(m4, {3, 3, 1})), BadArgument);
    // Degree must match m.
    CHECK_THROWS_AS(GaloisRing::make(2, 2, 3, Poly(m4, {1, 1, 1})), BadArgument);
}

TEST_CASE("structure constants") {
    auto ring = gr42();
    CHECK(ring->p() == 2);
    CHECK(ring->r() == 2);
    CHECK(ring->m() == 2);
    CHECK(ring->characteristic() == 4);
    CHECK(ring->size() == 16);
    CHECK(ring->residue_size() == 4);
    CHECK(ring->unit_count() == 12);
    CHECK(ring->ideal_sizes() == std::vector<std::int64_t>{16, 4, 1});
    CHECK(ring->spec_string() == "GR(p=2,r=2,m=2;h=1,1,1)");

    CHECK(gr82()->unit_count() == 48);
    CHECK(gr43()->unit_count() == 56);
    CHECK(GaloisRing::make(3, 2, 2)->unit_count() == 72);
    CHECK(GaloisRing::make(2, 1, 3)->size() == 8);  // the field F_8
}

TEST_CASE("omega has multiplicative order p^m - 1") {
    for (const auto& ring : {gr42(), gr43(), gr82()}) {
        GrElem w = ring->omega();
        std::int64_t n = ring->residue_size() - 1;
        CHECK(w.pow(std::uint64_t(n)).is_one());
        GrElem acc = ring->one();
        for (std::int64_t k = 1; k < n; ++k) {
            acc = acc * w;
            CHECK(!acc.is_one());
        }
    }
}

TEST_CASE("element accessors and arithmetic") {
    auto ring = gr42();
    GrElem z = ring->element({3, 2});
    CHECK(z.literal() == "3,2");
    CHECK(z.str() == "3 + 2*w");
    CHECK(z.coeff(0).value() == 3);
    CHECK(z.coeff(1).value() == 2);
    CHECK(ring->element({7}).literal() == "3,0");  // reduced and padded
    CHECK_THROWS_AS(ring->element({1, 2, 3}), BadArgument);

    CHECK((ring->element({1, 2}) + ring->element({3, 2})).is_zero());
    CHECK((z - z).is_zero());
    CHECK((-z).literal() == "1,2");
    CHECK(z.scaled(3).literal() == "1,2");
    CHECK((ring->omega() * ring->omega()).literal() == "3,3");  // w^2 = 3 + 3w
    CHECK(z.pow(3) == z * z * z);
    CHECK(z.pow(0).is_one());

    auto other = gr43();
    CHECK_THROWS_AS(z + other->one(), RingMismatch);
    CHECK(!same_ring(z, other->one()));
}

TEST_CASE("enumeration order and roundtrip") {
    auto ring = gr43();
    CHECK(ring->element_at(0).is_zero());
    CHECK(ring->element_at(1).is_one());
    CHECK(ring->element_at(4).literal() == "0,1,0");  // digits in base 4, constant first
    std::set<std::string> seen;
    for (std::int64_t i = 0; i < ring->size(); ++i) {
        GrElem z = ring->element_at(i);
        CHECK(ring->index_of(z) == i);
        seen.insert(z.literal());
    }
    CHECK(std::int64_t(seen.size()) == ring->size());
    CHECK_THROWS_AS(ring->element_at(ring->size()), BadArgument);
}

TEST_CASE("units are exactly the elements with nonzero residue") {
    for (const auto& ring : {gr42(), gr82()}) {
        std::int64_t units = 0;
        for (std::int64_t i = 0; i < ring->size(); ++i) {
            GrElem z = ring->element_at(i);
            CHECK(z.is_unit() == (z.residue_index() != 0));
            if (z.is_unit()) {
                ++units;
                CHECK((z * z.inverse()).is_one());
            } else {
                CHECK_THROWS_AS(z.inverse(), NotAUnit);
            }
        }
        CHECK(units == ring->unit_count());
    }
}

TEST_CASE("Teichmuller sets") {
    auto ring = gr42();
    auto teich = ring->teichmuller_set();
    REQUIRE(std::int64_t(teich.size()) == ring->residue_size());
    CHECK(teich[0].is_zero());
    CHECK(teich[1].is_one());
    CHECK(teich[2] == ring->omega());
    CHECK(teich[3].literal() == "3,3");
    std::set<std::string> distinct;
    for (const auto& t : teich) {
        CHECK(t.pow(std::uint64_t(ring->residue_size())) == t);  // t^{p^m} = t
        distinct.insert(t.literal());
    }
    CHECK(distinct.size() == teich.size());

    auto z4 = GaloisRing::make(2, 2, 1);
    auto t4 = z4->teichmuller_set();
    CHECK(t4.size() == 2);
    CHECK(t4[0].is_zero());
    CHECK(t4[1].is_one());

    auto z9 = GaloisRing::make(3, 2, 1);
    auto t9 = z9->teichmuller_set();
    REQUIRE(t9.size() == 3);
    CHECK(t9[2].coeffs()[0] == 8);

    // teichmuller_lift inverts the residue map on representatives.
    for (const auto& t : teich) CHECK(ring->teichmuller_lift(t.residue_index()) == t);
}

TEST_CASE("p-adic digit decomposition") {
    auto ring = gr42();
    GrElem z = ring->element({3, 2});
    auto digits = z.padic_digits();
    REQUIRE(std::int64_t(digits.size()) == ring->r());
    CHECK(digits[0].is_one());
    CHECK(digits[1].literal() == "3,3");  // 3 + 2w = 1 + 2*(3+3w)
    CHECK(ring->from_padic_digits(digits) == z);

    // Exhaustive roundtrip, digits always Teichmuller, unit iff digit 0 nonzero.
    for (const auto& r : {gr42(), gr82(), gr43()}) {
        auto teich = r->teichmuller_set();
        std::set<std::string> tset;
        for (const auto& t : teich) tset.insert(t.literal());
        for (std::int64_t i = 0; i < r->size(); ++i) {
            GrElem x = r->element_at(i);
            auto d = x.padic_digits();
            REQUIRE(std::int64_t(d.size()) == r->r());
            for (const auto& dig : d) CHECK(tset.count(dig.literal()) == 1);
            CHECK(r->from_padic_digits(d) == x);
            CHECK(x.is_unit() == !d[0].is_zero());
        }
    }

    CHECK_THROWS_AS(ring->from_padic_digits({ring->from_scalar(2), ring->zero()}), BadArgument);
    CHECK_THROWS_AS(ring->from_padic_digits({ring->one()}), BadArgument);  // wrong digit count
}

TEST_CASE("Frobenius golden values and matrix/digit agreement") {
    auto ring = gr42();
    CHECK(ring->element({3, 2}).frobenius().literal() == "1,2");
    CHECK(ring->omega().frobenius() == ring->omega() * ring->omega());

    for (const auto& r : {gr42(), gr82()}) {
        for (std::int64_t i = 0; i < r->size(); ++i) {
            GrElem z = r->element_at(i);
            CHECK(z.frobenius() == frobenius_by_digits(z));
        }
    }
}

TEST_CASE("Frobenius is a ring automorphism fixing Z_{p^r}, of order exactly m") {
    for (const auto& ring : {gr42(), gr43()}) {
        std::int64_t m = ring->m();
        std::set<std::string> images;
        for (std::int64_t i = 0; i < ring->size(); ++i) {
            GrElem a = ring->element_at(i);
            images.insert(a.frobenius().literal());
            for (std::int64_t j = 0; j < ring->size(); ++j) {
                GrElem b = ring->element_at(j);
                CHECK((a + b).frobenius() == a.frobenius() + b.frobenius());
                CHECK((a * b).frobenius() == a.frobenius() * b.frobenius());
            }
            CHECK(a.frobenius_iter(m) == a);  // f^m = id
        }
        CHECK(std::int64_t(images.size()) == ring->size());  // bijective
        for (std::int64_t c = 0; c < ring->characteristic(); ++c)
            CHECK(ring->from_scalar(c).frobenius() == ring->from_scalar(c));
        // Order exactly m: f^k moves omega for 0 < k < m.
        for (std::int64_t k = 1; k < m; ++k)
            CHECK(ring->omega().frobenius_iter(k) != ring->omega());
        CHECK(ring->omega().frobenius_iter(0) == ring->omega());
        CHECK(ring->omega().frobenius_iter(2 * m + 1) == ring->omega().frobenius_iter(1));
    }
}

TEST_CASE("trace properties") {
    for (const auto& ring : {gr42(), gr82()}) {
        std::map<std::int64_t, std::int64_t> histogram;
        for (std::int64_t i = 0; i < ring->size(); ++i) {
            GrElem a = ring->element_at(i);
            histogram[a.trace().value()] += 1;
            CHECK(a.frobenius().trace() == a.trace());  // T(a^f) = T(a)
            for (std::int64_t c = 0; c < ring->characteristic(); ++c) {
                // Z_{p^r}-linearity.
                CHECK(a.scaled(c).trace().value() ==
                      (c * a.trace().value()) % ring->characteristic());
            }
        }
        // Surjective, each value attained p^{r(m-1)} times.
        std::int64_t expected = ring->size() / ring->characteristic();
        CHECK(std::int64_t(histogram.size()) == ring->characteristic());
        for (const auto& [value, count] : histogram) CHECK(count == expected);

        for (std::int64_t i = 0; i < ring->size(); ++i)
            for (std::int64_t j = i; j < ring->size(); ++j) {
                GrElem a = ring->element_at(i), b = ring->element_at(j);
                CHECK((a + b).trace() == a.trace() + b.trace());
            }
        // On scalars the trace is multiplication by m.
        for (std::int64_t c = 0; c < ring->characteristic(); ++c)
            CHECK(ring->from_scalar(c).trace().value() ==
                  (ring->m() * c) % ring->characteristic());
    }
    CHECK(gr42()->element({3, 1}).trace().value() == 1);
    CHECK(gr42()->element({3, 2}).trace().value() == 0);
}

TEST_CASE("rings with explicit equal moduli compare equal") {
    auto a = GaloisRing::make(2, 2, 3);
    ZrModulus m4(2, 2);
    auto b = GaloisRing::make(2, 2, 3, Poly(m4, {3, 1, 2, 1}));
    CHECK(*a == *b);
    CHECK(a->spec_string() == b->spec_string());
}

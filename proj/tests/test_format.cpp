#include <doctest.h>

#include "grbasis/format.hpp"

using namespace grbasis;

TEST_CASE("integer parsing") {
    CHECK(parse_i64("12") == 12);
    CHECK(parse_i64(" -3 ") == -3);
    CHECK_THROWS_AS(parse_i64(""), ParseError);
    CHECK_THROWS_AS(parse_i64("x"), ParseError);
    CHECK_THROWS_AS(parse_i64("12x"), ParseError);
    CHECK(parse_int_list("3,1,2,1") == std::vector<std::int64_t>{3, 1, 2, 1});
    CHECK(parse_int_list("5") == std::vector<std::int64_t>{5});
    CHECK_THROWS_AS(parse_int_list("1,,2"), ParseError);
}

TEST_CASE("polynomial literals") {
    ZrModulus m4(2, 2);
    CHECK(parse_poly(m4, "3,1,2,1").literal() == "3,1,2,1");
    CHECK(parse_poly(m4, "7,1").literal() == "3,1");
}

TEST_CASE("ring specs") {
    auto ring = parse_ring_spec("GR(p=2,r=2,m=2)");
    CHECK(ring->spec_string() == "GR(p=2,r=2,m=2;h=1,1,1)");
    auto again = parse_ring_spec(ring->spec_string());
    CHECK(*again == *ring);

    auto with_h = parse_ring_spec("GR(p=2,r=2,m=2;h=1,1,1)");
    CHECK(*with_h == *ring);

    // Key order inside the spec does not matter; whitespace is tolerated.
    CHECK(*parse_ring_spec("GR(m=2, p=2, r=2)") == *ring);

    // A modulus override replaces the h segment.
    auto overridden = parse_ring_spec("GR(p=2,r=2,m=3;h=3,1,2,1)", "3,1,2,1");
    CHECK(overridden->modulus().literal() == "3,1,2,1");

    CHECK_THROWS_AS(parse_ring_spec("GR"), ParseError);
    CHECK_THROWS_AS(parse_ring_spec("GR()"), ParseError);
    CHECK_THROWS_AS(parse_ring_spec("GR(p=2)"), ParseError);
    CHECK_THROWS_AS(parse_ring_spec("GR(p=2,r=2,m=2;x=1)"), ParseError);
    CHECK_THROWS_AS(parse_ring_spec("GR(p=2,r=2,m=2,q=9)"), ParseError);
    CHECK_THROWS_AS(parse_ring_spec("foo(p=2,r=2,m=2)"), ParseError);
    CHECK_THROWS_AS(parse_ring_spec("GR(p=4,r=1,m=2)"), ParseError);  // 4 is not prime
    // An h that is not basic primitive is rejected at construction.
    CHECK_THROWS_AS(parse_ring_spec("GR(p=2,r=2,m=2;h=1,0,1)"), ParseError);
}

TEST_CASE("element and basis literals") {
    auto ring = parse_ring_spec("GR(p=2,r=2,m=2)");
    CHECK(parse_element(ring, "3,2").literal() == "3,2");
    CHECK(parse_element(ring, "3").literal() == "3,0");  // short literals are padded
    CHECK(parse_element(ring, "-1,6").literal() == "3,2");
    CHECK_THROWS_AS(parse_element(ring, "1,2,3"), ParseError);
    CHECK_THROWS_AS(parse_element(ring, "a"), ParseError);

    auto elems = parse_basis_elements(ring, "1,0;0,1");
    REQUIRE(elems.size() == 2);
    CHECK(elems[0].is_one());
    CHECK(elems[1] == ring->omega());
}

TEST_CASE("matrix literals") {
    auto ring = parse_ring_spec("GR(p=2,r=2,m=2)");
    GrMatrix m = parse_gr_matrix(ring, "1,0;0,1|0,1;1,1");
    CHECK(m.rows() == 2);
    CHECK(m.cols() == 2);
    CHECK(m.at(0, 0).is_one());
    CHECK(m.at(1, 0) == ring->omega());
    CHECK(m.at(1, 1).literal() == "1,1");

    GrMatrix row = parse_gr_matrix(ring, "1,0;0,1;2,0");
    CHECK(row.rows() == 1);
    CHECK(row.cols() == 3);

    CHECK_THROWS_AS(parse_gr_matrix(ring, "1,0;0,1|0,1"), ParseError);  // ragged rows
}

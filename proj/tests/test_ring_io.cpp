#include <doctest.h>

#include "bettilab/ring_io.hpp"

using namespace bettilab;

TEST_CASE("parse a simple ring block")
{
    RingSpec R = parse_ring_spec("ring R { prime = 101; vars = x, y; ideal = x^2, y^2; }");
    CHECK(R.name == "R");
    CHECK(R.p == 101);
    CHECK(R.e == 2);
    REQUIRE(R.gens.size() == 2);
    CHECK(R.gens[0].degree() == 2);
    CHECK(R.minimal_presentation());
}

TEST_CASE("non-homogeneous generators are rejected with the offending term")
{
    try {
        parse_ring_spec("ring R { prime = 101; vars = x, y; ideal = x^2 + y^3; }");
        FAIL("expected NonHomogeneous");
    } catch (const NonHomogeneous& e) {
        CHECK(std::string(e.what()).find("y^3") != std::string::npos);
    }
}

TEST_CASE("non-prime moduli are rejected")
{
    CHECK_THROWS_AS(parse_ring_spec("ring R { prime = 91; vars = x; ideal = x^2; }"), NotPrime);
}

TEST_CASE("syntax errors carry line and column")
{
    try {
        parse_ring_spec("ring R {\n prime = 101;\n vars = x y; ideal = x; }");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line == 3);
    }
}

TEST_CASE("duplicate variables are rejected")
{
    CHECK_THROWS_AS(parse_ring_spec("ring R { prime = 101; vars = x, x; ideal = x^2; }"),
                    ParseError);
}

TEST_CASE("zero ideal, negative coefficients, comments, several blocks")
{
    std::vector<RingSpec> all = parse_ring_specs(
        "# a comment line\n"
        "ring B { prime = 32003; vars = u1, u2; ideal = 0; }\n"
        "ring S { prime = 32003; vars = u1, u2; ideal = u1*u2 - u2^2, 3*u1^2; }\n");
    REQUIRE(all.size() == 2);
    CHECK(all[0].gens.empty());
    CHECK(all[1].gens.size() == 2);
    CHECK(all[1].gens[0].terms().size() == 2);
}

TEST_CASE("round trip through to_text")
{
    RingSpec R = parse_ring_spec(
        "ring R { prime = 32003; vars = u1, u2, u3; ideal = u1^2 - u2*u3, u2^3; }");
    RingSpec S = parse_ring_spec(R.to_text());
    CHECK(S.p == R.p);
    CHECK(S.vars == R.vars);
    REQUIRE(S.gens.size() == R.gens.size());
    for (size_t i = 0; i < S.gens.size(); ++i)
        CHECK(S.gens[i] == R.gens[i]);
}

TEST_CASE("parse_poly helper")
{
    RingSpec R = parse_ring_spec("ring R { prime = 101; vars = x, y; ideal = 0; }");
    HomogPoly f = parse_poly("x^2 - 2*x*y", R);
    CHECK(f.degree() == 2);
    CHECK(f.terms().size() == 2);
    CHECK_THROWS_AS(parse_poly("x + z", R), ParseError);
}

#include <catch2/catch_amalgamated.hpp>

#include "hyperjac/curve.hpp"
#include "hyperjac/rng.hpp"

using namespace hyperjac;

namespace {
const FieldModulus F7(7);
const FieldModulus Fp(10007);

CurvePtr fixture_g1() {
    // y^2 = x^3 + 1 over F7
    return make_curve(1, Polynomial::from_coeffs(F7, {1, 0, 0, 1}));
}
}  // namespace

TEST_CASE("curve validation") {
    const CurvePtr c = fixture_g1();
    CHECK(c->genus() == 1);
    CHECK(c->discriminant().value() == 1);  // -27 = 1 (mod 7)

    CHECK_THROWS_AS(make_curve(1, Polynomial::from_coeffs(F7, {0, 0, 0, 1})), SingularCurve);
    CHECK_THROWS_AS(make_curve(1, Polynomial::from_coeffs(F7, {1, 0, 0, 2})), NotMonic);
    CHECK_THROWS_AS(make_curve(1, Polynomial::from_coeffs(F7, {1, 0, 1})), WrongDegree);
    CHECK_THROWS_AS(make_curve(2, Polynomial::from_coeffs(F7, {1, 0, 0, 1})), WrongDegree);
    CHECK_THROWS_AS(make_curve(0, Polynomial::from_coeffs(F7, {1, 1})), WrongDegree);

    // repeated root away from 0: (x-1)^2 (x-2) = x^3 - 4x^2 + 5x - 2
    CHECK_THROWS_AS(make_curve(1, Polynomial::from_coeffs(F7, {5, 5, 3, 1})), SingularCurve);
}

TEST_CASE("involution negates y and fixes branch points") {
    const CurvePtr c = fixture_g1();
    const AffinePoint p{F7(2), F7(3)};
    REQUIRE(on_curve(*c, p));
    CHECK(involution(p) == AffinePoint{F7(2), F7(4)});
    CHECK(involution(involution(p)) == p);

    const AffinePoint branch{F7(6), F7(0)};  // f(6) = 217 = 0 (mod 7)
    REQUIRE(on_curve(*c, branch));
    CHECK(involution(branch) == branch);
}

TEST_CASE("sampled points satisfy the curve equation") {
    const CurvePtr c = fixture_g1();
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const AffinePoint p = sample_point(*c, seed, /*require_nonzero_x=*/true,
                                           /*require_nonzero_y=*/true);
        CHECK(on_curve(*c, p));
        CHECK_FALSE(p.x.is_zero());
        CHECK_FALSE(p.y.is_zero());
        if (p.x.value() == 2) CHECK((p.y.value() == 3 || p.y.value() == 4));  // f(2) = 2 = 3^2
    }
    // determinism: the same seed draws the same point
    CHECK(sample_point(*c, 17) == sample_point(*c, 17));
}

TEST_CASE("involution is an order-2 bijection on samples") {
    SplitMix64 rng(0xC0);
    const CurvePtr c = sample_curve(Fp, 2, rng);
    for (int t = 0; t < 50; ++t) {
        const AffinePoint p = sample_point(*c, rng, false, false);
        CHECK(on_curve(*c, involution(p)));
        CHECK(involution(involution(p)) == p);
        CHECK((involution(p) == p) == p.y.is_zero());
    }
}

TEST_CASE("sampling exhausts on a curve with no admissible points") {
    // Over F3 with both flags set: x = 0 is excluded, f(1) = 0 hits y = 0,
    // and f(2) = 2 is a non-residue. Nothing can be drawn.
    const FieldModulus f3(3);
    const CurvePtr c = make_curve(1, Polynomial::from_coeffs(f3, {1, 1, 0, 1}));
    SplitMix64 rng(1);
    CHECK_THROWS_AS(sample_point(*c, rng, true, true), SamplingExhausted);
}

TEST_CASE("random curves are valid and deterministic") {
    for (int g = 1; g <= 6; ++g) {
        SplitMix64 rng(0xC1 + static_cast<std::uint64_t>(g));
        const CurvePtr c = sample_curve(Fp, g, rng);
        CHECK(c->genus() == g);
        CHECK(c->f().degree() == 2 * g + 1);
        CHECK(c->f().is_monic());
        CHECK_FALSE(c->discriminant().is_zero());

        SplitMix64 rng2(0xC1 + static_cast<std::uint64_t>(g));
        CHECK(*sample_curve(Fp, g, rng2) == *c);
    }
}

TEST_CASE("translation moves points by the shift") {
    SplitMix64 rng(0xC2);
    const CurvePtr c = sample_curve(Fp, 3, rng);
    const FieldElement shift = Fp(123);
    const CurvePtr moved = translate_curve(*c, shift);
    CHECK(moved->genus() == c->genus());
    for (int t = 0; t < 25; ++t) {
        const AffinePoint p = sample_point(*c, rng, false, false);
        CHECK(on_curve(*moved, AffinePoint{p.x - shift, p.y}));
    }
}

TEST_CASE("curve file round-trip and errors") {
    const CurvePtr c = fixture_g1();
    const std::string text = to_text(*c);
    CHECK(*parse_curve_text(text) == *c);

    CHECK(*parse_curve_text("# comment\n\n p = 7 \n g = 1 \n f = [1,0,0,1] \n") == *c);

    CHECK_THROWS_AS(parse_curve_text("p = 7\ng = 1\n"), ParseError);              // missing f
    CHECK_THROWS_AS(parse_curve_text("p = 7\ng = 1\nf [1,0,0,1]\n"), ParseError);  // no '='
    CHECK_THROWS_AS(parse_curve_text("p = 7\ng = 1\nf = [1,0,0,1]\nq = 3\n"), ParseError);
    CHECK_THROWS_AS(parse_curve_text("p = 8\ng = 1\nf = [1,0,0,1]\n"), InvalidModulus);
    CHECK_THROWS_AS(parse_curve_text("p = 7\ng = 1\nf = [1,0,0,2]\n"), NotMonic);
    CHECK_THROWS_AS(parse_curve_text("p = 7\ng = 2\nf = [1,0,0,1]\n"), WrongDegree);
    CHECK_THROWS_AS(read_curve_file("/nonexistent/curve.txt"), ParseError);
}

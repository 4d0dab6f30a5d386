#include <catch2/catch_amalgamated.hpp>

#include "hyperjac/field.hpp"
#include "hyperjac/rng.hpp"

using namespace hyperjac;

namespace {
const FieldModulus F7(7);
const FieldModulus Fp(10007);
// Largest prime below 2^62.
const std::uint64_t kBigPrime = 4611686018427387847ULL;
}  // namespace

TEST_CASE("modulus validation") {
    CHECK_NOTHROW(FieldModulus(3));
    CHECK_NOTHROW(FieldModulus(kBigPrime));
    CHECK_THROWS_AS(FieldModulus(0), InvalidModulus);
    CHECK_THROWS_AS(FieldModulus(1), InvalidModulus);
    CHECK_THROWS_AS(FieldModulus(2), InvalidModulus);
    CHECK_THROWS_AS(FieldModulus(9), InvalidModulus);        // composite
    CHECK_THROWS_AS(FieldModulus(10006), InvalidModulus);    // even
    CHECK_THROWS_AS(FieldModulus((1ULL << 63) + 9), InvalidModulus);  // too large
}

TEST_CASE("canonical residues") {
    CHECK(F7(10).value() == 3);
    CHECK(F7(7).value() == 0);
    CHECK(F7.from_signed(-1).value() == 6);
    CHECK(F7.from_signed(-7).value() == 0);
    CHECK((-F7(0)).value() == 0);
}

TEST_CASE("ring operation examples") {
    CHECK((F7(3) + F7(5)).value() == 1);
    CHECK((F7(3) * F7(5)).value() == 1);
    CHECK((F7(3) - F7(5)).value() == 5);
    CHECK(pow(F7(3), 6).value() == 1);
    CHECK(pow(F7(3), 0).value() == 1);
}

TEST_CASE("modulus mismatch is rejected") {
    CHECK_THROWS_AS(F7(1) + Fp(1), ModulusMismatch);
    CHECK_THROWS_AS(F7(1) * Fp(1), ModulusMismatch);
    CHECK(F7(1) != Fp(1));  // equality across fields is just "not equal"
}

TEST_CASE("inverse examples") {
    CHECK(inv(F7(3)).value() == 5);
    CHECK(inv(F7(1)).value() == 1);
    CHECK_THROWS_AS(inv(F7(0)), ZeroInverse);
}

TEST_CASE("square root examples mod 7") {
    // residues mod 7 are {1, 2, 4}
    REQUIRE(sqrt(F7(2)).has_value());
    CHECK(sqrt(F7(2))->value() == 3);  // 3^2 = 2 and 3 < 4
    CHECK(sqrt(F7(0))->value() == 0);
    CHECK_FALSE(sqrt(F7(3)).has_value());
    CHECK_FALSE(sqrt(F7(5)).has_value());
    CHECK_FALSE(sqrt(F7(6)).has_value());
}

TEST_CASE("inverse and square root properties") {
    const FieldModulus moduli[] = {F7, FieldModulus(13), Fp, FieldModulus(kBigPrime)};
    SplitMix64 rng(0xF1E1D);
    for (const FieldModulus& m : moduli) {
        for (int t = 0; t < 200; ++t) {
            const FieldElement a = m(rng.below(m.value()));
            if (!a.is_zero()) {
                CHECK((a * inv(a)).value() == 1);
                CHECK(inv(inv(a)) == a);
            }
            const auto s = sqrt(a);
            if (s) {
                CHECK((*s) * (*s) == a);
                CHECK(s->value() <= m.value() - s->value());  // smaller representative
            } else {
                // Euler criterion marks exactly the non-residues.
                CHECK(pow(a, (m.value() - 1) / 2).value() == m.value() - 1);
            }
        }
    }
}

TEST_CASE("square root exercises the Tonelli-Shanks branch") {
    // 13 = 1 (mod 4), so the exponent shortcut does not apply.
    const FieldModulus m13(13);
    for (std::uint64_t v = 0; v < 13; ++v) {
        const auto s = sqrt(m13(v));
        if (s) CHECK(((*s) * (*s)).value() == v);
    }
    // squares mod 13: {0, 1, 3, 4, 9, 10, 12}
    CHECK(sqrt(m13(3)).has_value());
    CHECK_FALSE(sqrt(m13(2)).has_value());
}

TEST_CASE("field axioms on random triples") {
    SplitMix64 rng(0xAB1);
    for (const std::uint64_t p : {std::uint64_t(10007), kBigPrime}) {
        const FieldModulus m(p);
        for (int t = 0; t < 200; ++t) {
            const FieldElement a = m(rng.next()), b = m(rng.next()), c = m(rng.next());
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a + b == b + a);
            CHECK(a * b == b * a);
            CHECK(a - a == m(0));
            CHECK(a + (-a) == m(0));
        }
    }
}

#include <doctest.h>

#include <cmath>
#include <random>

#include "acute/error.hpp"
#include "acute/modular.hpp"
#include "acute/s3.hpp"
#include "oracles.hpp"

using namespace acute;
using P = Permutation;

namespace {

const double kH = std::sqrt(3.0) / 2.0;

bool near(Complex a, Complex b, double eps = 1e-12) { return std::abs(a - b) <= eps; }

ErrorCode code_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an acute::Error");
    return ErrorCode::InvalidArgument;
}

// The defining route: relabel (0, 1, z) and normalize again.
Complex by_relabeling(const P& sigma, Complex z) {
    return normalize_labeled(relabel(sigma, {{0, 0}, {1, 0}, z})).point.z();
}

} // namespace

TEST_CASE("permutation basics") {
    CHECK(P::identity().cycle_notation() == "e");
    CHECK(P::swap12().cycle_notation() == "(12)");
    CHECK(P::swap13().cycle_notation() == "(13)");
    CHECK(P::swap23().cycle_notation() == "(23)");
    CHECK(P::cycle123().cycle_notation() == "(123)");
    CHECK(P::cycle132().cycle_notation() == "(132)");
    for (const P& p : all_permutations()) CHECK(P::parse(p.cycle_notation()) == p);
    CHECK(P::parse("(21)") == P::swap12());
    CHECK(P::parse("(231)") == P::cycle123());
    CHECK(code_of([] { P::parse("(14)"); }) == ErrorCode::ParseError);
    CHECK(code_of([] { P({1, 1, 2}); }) == ErrorCode::InvalidArgument);

    int even = 0;
    for (const P& p : all_permutations()) even += p.is_even();
    CHECK(even == 3);
    CHECK(P::cycle123().is_even());
    CHECK_FALSE(P::swap13().is_even());
    CHECK(compose(P::cycle123(), P::cycle123()) == P::cycle132());
    for (const P& p : all_permutations()) CHECK(compose(p, inverse(p)) == P::identity());
}

TEST_CASE("s3_apply examples") {
    const ModuliPoint z({0.3, 0.6});
    CHECK(s3_apply(P::identity(), z).z() == z.z());
    CHECK(near(s3_apply(P::swap12(), z).z(), {0.7, 0.6}));
    CHECK(near(by_relabeling(P::swap12(), z.z()), {0.7, 0.6}));

    const ModuliPoint eq({0.5, 0.8660254});
    for (const P& p : all_permutations()) CHECK(near(s3_apply(p, eq).z(), eq.z(), 1e-7));

    const ModuliPoint w({0.4, 1.2});
    CHECK(near(s3_apply(P::cycle123(), w).z(), {1.0 / 3.0, 2.0 / 3.0}));
    CHECK(near(by_relabeling(P::cycle123(), w.z()), {1.0 / 3.0, 2.0 / 3.0}));
}

TEST_CASE("s3_orbit examples") {
    CHECK(s3_orbit(ModuliPoint({0.5, kH})).size() == 1);
    CHECK(s3_orbit(ModuliPoint({0.5, 0.9})).size() == 3);

    const auto orbit = s3_orbit(ModuliPoint({0.4, 1.2}));
    REQUIRE(orbit.size() == 6);
    const Complex expected[] = {{0.4, 1.2}, {1.0 / 3, 2.0 / 3}, {0.75, 0.75}, {0.6, 1.2}, {0.25, 0.75}, {2.0 / 3, 2.0 / 3}};
    for (std::size_t k = 0; k < 6; ++k) CHECK(near(orbit[k].z(), expected[k]));

    // Size 2 would need a point fixed by the 3-cycles alone, and their only
    // fixed point in H is the equilateral point.
    std::mt19937_64 rng(2);
    std::uniform_real_distribution<double> x(-3, 3), y(0.01, 3);
    for (int k = 0; k < 1000; ++k) {
        const auto n = s3_orbit(ModuliPoint({x(rng), y(rng)})).size();
        CHECK((n == 1 || n == 3 || n == 6));
    }
}

TEST_CASE("stabilizer examples") {
    // The 7-digit literal is 4e-8 below the equilateral point; only (12) fixes
    // it exactly.
    CHECK(stabilizer(ModuliPoint({0.5, 0.8660254})).size() == 2);
    CHECK(stabilizer(ModuliPoint({0.5, 0.8660254}), Tolerances{1e-12, 1e-7}).size() == 6);
    CHECK(stabilizer(ModuliPoint({0.5, kH})).size() == 6);

    const auto iso = stabilizer(ModuliPoint({0.5, 0.9}));
    REQUIRE(iso.size() == 2);
    CHECK(iso[0] == P::identity());
    CHECK(iso[1] == P::swap12());

    const auto generic = stabilizer(ModuliPoint({0.4, 1.2}));
    REQUIRE(generic.size() == 1);
    CHECK(generic[0] == P::identity());
}

TEST_CASE("region_of examples") {
    const RegionId a = region_of(ModuliPoint({0.4, 1.2}));
    CHECK(a.ordering == P({3, 2, 1}));
    CHECK(a.describe() == "|v3-v2| > |v3-v1| > |v2-v1|");
    const RegionId b = region_of(ModuliPoint({0.6, 1.2}));
    CHECK(b.describe() == "|v3-v1| > |v3-v2| > |v2-v1|");
    CHECK(a.color != b.color);

    CHECK(code_of([] { region_of(ModuliPoint({0.5, 0.9})); }) == ErrorCode::OnIsoscelesLocus);
    CHECK(code_of([] { region_of(ModuliPoint({0.6, 0.8})); }) == ErrorCode::OnIsoscelesLocus);
    CHECK(code_of([] { region_of(ModuliPoint({2.0, 1.0})); }) == ErrorCode::OutsideT);
    CHECK(code_of([] { region_of(ModuliPoint({0.5, 0.5})); }) == ErrorCode::OutsideT);

    // The canonical region is the identity ordering.
    CHECK(region_of(ModuliPoint({0.6, 0.7})).ordering == P::identity());
    CHECK(region_of(ModuliPoint({0.6, 0.7})).color == RegionColor::Yellow);
}

TEST_CASE("canonical_acute examples") {
    CHECK(near(canonical_acute(ModuliPoint({0.4, 1.2})).z(), {2.0 / 3, 2.0 / 3}));
    CHECK(near(canonical_acute(ModuliPoint({0.5, kH})).z(), {0.5, kH}));
    CHECK(near(canonical_acute(ModuliPoint({2.0 / 3, 2.0 / 3})).z(), {2.0 / 3, 2.0 / 3}));
    CHECK(code_of([] { canonical_acute(ModuliPoint({2.0, 1.0})); }) == ErrorCode::NotAcuteOrRight);
    // Right triangles have a canonical form too: hypotenuse becomes side 1-2.
    const Complex c = canonical_acute(ModuliPoint({0.0, 2.0})).z();
    CHECK(std::abs(std::abs(c - 0.5) - 0.5) < 1e-12);
    CHECK(c.real() >= 0.5);
}

TEST_CASE("closed form agrees with relabel-then-normalize") {
    std::mt19937_64 rng(41);
    std::uniform_real_distribution<double> x(-3, 4), y(0.01, 4);
    for (int k = 0; k < 10000; ++k) {
        const ModuliPoint z({x(rng), y(rng)});
        for (const P& p : all_permutations()) {
            const Complex a = s3_apply(p, z).z();
            const Complex b = by_relabeling(p, z.z());
            CHECK(std::abs(a - b) <= 1e-9 * std::max(1.0, std::abs(a)));
        }
    }
}

TEST_CASE("action law over all 36 pairs") {
    std::mt19937_64 rng(43);
    std::uniform_real_distribution<double> x(-3, 4), y(0.01, 4);
    for (int k = 0; k < 1000; ++k) {
        const ModuliPoint z({x(rng), y(rng)});
        for (const P& s : all_permutations())
            for (const P& t : all_permutations()) {
                const Complex lhs = s3_apply(compose(s, t), z).z();
                const Complex rhs = s3_apply(s, s3_apply(t, z)).z();
                CHECK(std::abs(lhs - rhs) <= 1e-9 * std::max(1.0, std::abs(lhs)));
            }
    }
}

TEST_CASE("structure of the action on T") {
    std::mt19937_64 rng(47);
    const UnimodularMatrix g123(0, 1, -1, 1), g132(1, -1, 1, 0);
    for (int k = 0; k < 2000; ++k) {
        const ModuliPoint z(oracle::random_in_T(rng));
        // T is invariant.
        for (const P& p : all_permutations()) CHECK(classify_point(s3_apply(p, z)) == TriangleClass::Acute);
        // The 3-cycles are modular transformations.
        CHECK(near(s3_apply(P::cycle123(), z).z(), act(g123, z).z(), 1e-9));
        CHECK(near(s3_apply(P::cycle132(), z).z(), act(g132, z).z(), 1e-9));
        // Orbit-stabilizer.
        CHECK(s3_orbit(z).size() * stabilizer(z).size() == 6);
        // canonical_acute is constant on orbits and idempotent.
        const Complex c = canonical_acute(z).z();
        for (const P& p : all_permutations()) CHECK(near(canonical_acute(s3_apply(p, z)).z(), c, 1e-9));
        CHECK(near(canonical_acute(ModuliPoint(c)).z(), c, 1e-12));
        CHECK(std::abs(c) <= 1 + 1e-9);
        CHECK(std::abs(c - 1.0) <= 1 + 1e-9);
        CHECK(c.real() >= 0.5 - 1e-9);
    }
}

TEST_CASE("parity of regions") {
    std::mt19937_64 rng(53);
    for (int k = 0; k < 1000; ++k) {
        const ModuliPoint z(oracle::random_in_T(rng, 1e-6));
        const RegionId base = region_of(z);
        for (const P& p : all_permutations()) {
            const RegionId moved = region_of(s3_apply(p, z));
            CHECK((moved.color == base.color) == p.is_even());
        }
        const Complex mirror{1.0 - z.re(), z.im()};
        CHECK(near(s3_apply(P::swap12(), z).z(), mirror, 1e-9));
    }
}

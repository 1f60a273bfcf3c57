#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "acute/tolerance.hpp"
#include "acute/triangle.hpp"

namespace acute {

// Bijection of {1, 2, 3} given by its images. Relabeling a triangle by sigma
// makes the old vertex sigma(i) the new i-th vertex.
class Permutation {
public:
    Permutation() = default; // identity
    // Throws InvalidArgument unless the images form a bijection of {1,2,3}.
    explicit Permutation(std::array<int, 3> images);

    int operator()(int i) const { return images_.at(static_cast<std::size_t>(i - 1)); }
    const std::array<int, 3>& images() const noexcept { return images_; }
    bool is_even() const noexcept;

    // Cycle notation: "e", "(12)", "(123)", ...
    std::string cycle_notation() const;
    static Permutation parse(std::string_view cycle_notation);

    static Permutation identity() { return {}; }
    static Permutation swap12() { return Permutation({2, 1, 3}); }
    static Permutation swap13() { return Permutation({3, 2, 1}); }
    static Permutation swap23() { return Permutation({1, 3, 2}); }
    static Permutation cycle123() { return Permutation({2, 3, 1}); }
    static Permutation cycle132() { return Permutation({3, 1, 2}); }

    friend bool operator==(const Permutation&, const Permutation&) = default;

private:
    std::array<int, 3> images_{1, 2, 3};
};

// Product with s3_apply(compose(s, t), z) == s3_apply(s, s3_apply(t, z)).
// Because relabeling is a right action this is i -> t(s(i)).
Permutation compose(const Permutation& s, const Permutation& t);
Permutation inverse(const Permutation& s);

// e, (123), (132), (12), (23), (13)
const std::array<Permutation, 6>& all_permutations();

LabeledTriangle relabel(const Permutation& sigma, const LabeledTriangle& tri);

// Closed-form action: 3-cycles act by integer Moebius maps, transpositions by
// their conjugate-linear counterparts.
ModuliPoint s3_apply(const Permutation& sigma, ModuliPoint z);

// Distinct images in all_permutations() order; size 1, 2, 3 or 6.
std::vector<ModuliPoint> s3_orbit(ModuliPoint z, const Tolerances& tol = default_tolerances);
std::vector<Permutation> stabilizer(ModuliPoint z, const Tolerances& tol = default_tolerances);

enum class RegionColor { Yellow, Purple };
std::string_view to_string(RegionColor c);

// One of the six regions of T cut out by the isosceles loci. The ordering
// lists side indices from longest to shortest, where side 1 = |v2 - v1|,
// side 2 = |v3 - v1|, side 3 = |v3 - v2|. Even orderings are Yellow.
struct RegionId {
    Permutation ordering;
    RegionColor color;

    // e.g. "|v3-v2| > |v3-v1| > |v2-v1|"
    std::string describe() const;
    friend bool operator==(const RegionId&, const RegionId&) = default;
};

// Throws OutsideT or OnIsoscelesLocus.
RegionId region_of(ModuliPoint z, const Tolerances& tol = default_tolerances);

// The orbit element with |z| <= 1, |z - 1| <= 1, re(z) >= 1/2, i.e. side
// ordering |v2-v1| >= |v3-v1| >= |v3-v2|. Throws NotAcuteOrRight.
ModuliPoint canonical_acute(ModuliPoint z, const Tolerances& tol = default_tolerances);

} // namespace acute

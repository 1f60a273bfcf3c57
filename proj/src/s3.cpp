#include "acute/s3.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "acute/error.hpp"
#include "acute/modular.hpp"

namespace acute {

Permutation::Permutation(std::array<int, 3> images) : images_(images) {
    std::array<bool, 3> seen{};
    for (int v : images_) {
        if (v < 1 || v > 3 || seen[static_cast<std::size_t>(v - 1)])
            throw Error(ErrorCode::InvalidArgument, "permutation images must be a bijection of {1,2,3}");
        seen[static_cast<std::size_t>(v - 1)] = true;
    }
}

bool Permutation::is_even() const noexcept {
    int inversions = 0;
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            if (images_[i] > images_[j]) ++inversions;
    return inversions % 2 == 0;
}

std::string Permutation::cycle_notation() const {
    if (*this == identity()) return "e";
    std::string out;
    std::array<bool, 3> done{};
    for (int start = 1; start <= 3; ++start) {
        if (done[start - 1] || (*this)(start) == start) continue;
        out += '(';
        for (int i = start; !done[i - 1]; i = (*this)(i)) {
            done[i - 1] = true;
            out += static_cast<char>('0' + i);
        }
        out += ')';
    }
    return out;
}

Permutation Permutation::parse(std::string_view text) {
    for (const Permutation& p : all_permutations())
        if (p.cycle_notation() == text) return p;
    // Accept the other spellings of the same cycles, e.g. "(21)" or "(231)".
    if (text.size() >= 4 && text.front() == '(' && text.back() == ')') {
        std::string_view body = text.substr(1, text.size() - 2);
        std::array<int, 3> images{1, 2, 3};
        bool ok = body.size() == 2 || body.size() == 3;
        std::array<bool, 3> seen{};
        for (char ch : body) {
            const int v = ch - '0';
            if (v < 1 || v > 3 || seen[v - 1]) { ok = false; break; }
            seen[v - 1] = true;
        }
        if (ok) {
            for (std::size_t k = 0; k < body.size(); ++k)
                images[body[k] - '1'] = body[(k + 1) % body.size()] - '0';
            return Permutation(images);
        }
    }
    throw Error(ErrorCode::ParseError, "malformed permutation '" + std::string(text) + "'");
}

Permutation compose(const Permutation& s, const Permutation& t) {
    return Permutation({t(s(1)), t(s(2)), t(s(3))});
}

Permutation inverse(const Permutation& s) {
    std::array<int, 3> images{};
    for (int i = 1; i <= 3; ++i) images[s(i) - 1] = i;
    return Permutation(images);
}

const std::array<Permutation, 6>& all_permutations() {
    static const std::array<Permutation, 6> perms{
        Permutation::identity(), Permutation::cycle123(), Permutation::cycle132(),
        Permutation::swap12(),   Permutation::swap23(),   Permutation::swap13(),
    };
    return perms;
}

LabeledTriangle relabel(const Permutation& sigma, const LabeledTriangle& tri) {
    const std::array<Complex, 3> v{tri.v1, tri.v2, tri.v3};
    return {v[sigma(1) - 1], v[sigma(2) - 1], v[sigma(3) - 1]};
}

ModuliPoint s3_apply(const Permutation& sigma, ModuliPoint point) {
    const Complex z = point.z();
    const auto& im = sigma.images();
    Complex w;
    if (im == std::array{1, 2, 3}) w = z;
    else if (im == std::array{2, 3, 1}) w = 1.0 / (1.0 - z);
    else if (im == std::array{3, 1, 2}) w = (z - 1.0) / z;
    else if (im == std::array{2, 1, 3}) w = 1.0 - std::conj(z);
    else if (im == std::array{1, 3, 2}) w = std::conj(1.0 / z);
    else w = std::conj(z / (z - 1.0));
    // im(w) = im(z) / (positive) in every branch.
    return ModuliPoint(w);
}

std::vector<ModuliPoint> s3_orbit(ModuliPoint z, const Tolerances& tol) {
    std::vector<ModuliPoint> orbit;
    for (const Permutation& p : all_permutations()) {
        const ModuliPoint w = s3_apply(p, z);
        const bool seen = std::any_of(orbit.begin(), orbit.end(), [&](const ModuliPoint& o) {
            return std::abs(o.z() - w.z()) < tol.boundary;
        });
        if (!seen) orbit.push_back(w);
    }
    return orbit;
}

std::vector<Permutation> stabilizer(ModuliPoint z, const Tolerances& tol) {
    std::vector<Permutation> out;
    for (const Permutation& p : all_permutations())
        if (std::abs(s3_apply(p, z).z() - z.z()) < tol.boundary) out.push_back(p);
    return out;
}

std::string_view to_string(RegionColor c) {
    return c == RegionColor::Yellow ? "Yellow" : "Purple";
}

std::string RegionId::describe() const {
    static const char* names[] = {"|v2-v1|", "|v3-v1|", "|v3-v2|"};
    const auto& order = ordering.images();
    return std::string(names[order[0] - 1]) + " > " + names[order[1] - 1] + " > " + names[order[2] - 1];
}

RegionId region_of(ModuliPoint z, const Tolerances& tol) {
    if (classify_point(z, tol) != TriangleClass::Acute)
        throw Error(ErrorCode::OutsideT, "point " + format_complex(z.z()) + " is not in T");
    const double eps = tol.boundary;
    const std::array<double, 3> sides{1.0, std::abs(z.z()), std::abs(z.z() - 1.0)};
    if (std::abs(z.re() - 0.5) <= eps || std::abs(sides[1] - 1.0) <= eps || std::abs(sides[2] - 1.0) <= eps)
        throw Error(ErrorCode::OnIsoscelesLocus, "point " + format_complex(z.z()) + " lies on an isosceles locus");

    std::array<int, 3> order{1, 2, 3};
    std::sort(order.begin(), order.end(), [&](int i, int j) { return sides[i - 1] > sides[j - 1]; });
    const Permutation ordering(order);
    return {ordering, ordering.is_even() ? RegionColor::Yellow : RegionColor::Purple};
}

ModuliPoint canonical_acute(ModuliPoint z, const Tolerances& tol) {
    if (classify_point(z, tol) == TriangleClass::Obtuse)
        throw Error(ErrorCode::NotAcuteOrRight, "point " + format_complex(z.z()) + " is an obtuse triangle");
    // The canonical region is cut out by three inequalities; take the orbit
    // element that violates them least so that near-ties resolve the same way
    // from every starting point of the orbit.
    const ModuliPoint* best = nullptr;
    double best_violation = std::numeric_limits<double>::infinity();
    const auto orbit = [&] {
        std::vector<ModuliPoint> all;
        for (const Permutation& p : all_permutations()) all.push_back(s3_apply(p, z));
        return all;
    }();
    for (const ModuliPoint& w : orbit) {
        const double violation = std::max({0.0, std::abs(w.z()) - 1.0, std::abs(w.z() - 1.0) - 1.0, 0.5 - w.re()});
        if (violation < best_violation) {
            best_violation = violation;
            best = &w;
        }
    }
    return *best;
}

} // namespace acute

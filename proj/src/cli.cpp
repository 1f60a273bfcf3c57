#include "acute/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <ostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "acute/elliptic.hpp"
#include "acute/error.hpp"
#include "acute/modular.hpp"
#include "acute/s3.hpp"
#include "acute/svg.hpp"
#include "acute/tiling.hpp"
#include "acute/triangle.hpp"

namespace acute::cli {

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Complex complex_arg(const std::string& token) {
    try {
        return parse_complex(token);
    } catch (const Error&) {
        throw UsageError("malformed complex literal '" + token + "'");
    }
}

ModuliPoint point_arg(const std::string& token) {
    const Complex z = complex_arg(token);
    if (!(z.imag() > 0.0)) throw UsageError("point '" + token + "' is not in the upper half-plane");
    return ModuliPoint(z);
}

LabeledTriangle triangle_arg(const std::vector<std::string>& tokens) {
    return {complex_arg(tokens.at(0)), complex_arg(tokens.at(1)), complex_arg(tokens.at(2))};
}

double real_arg(const std::string& token, const char* what) {
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(token, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != token.size() || !std::isfinite(v))
        throw UsageError(std::string("malformed ") + what + " '" + token + "'");
    return v;
}

json points(const std::vector<ModuliPoint>& pts) {
    json arr = json::array();
    for (const ModuliPoint& p : pts) arr.push_back(format_complex(p.z()));
    return arr;
}

Viewport viewport_arg(const std::string& bounds, const std::string& size, int precision) {
    Viewport vp;
    if (!bounds.empty()) {
        std::vector<double> v;
        std::size_t start = 0;
        while (true) {
            const std::size_t comma = bounds.find(',', start);
            v.push_back(real_arg(bounds.substr(start, comma - start), "viewport"));
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
        if (v.size() != 4) throw UsageError("viewport '" + bounds + "' needs xmin,xmax,ymin,ymax");
        vp.x_min = v[0];
        vp.x_max = v[1];
        vp.y_min = v[2];
        vp.y_max = v[3];
    }
    if (!size.empty()) {
        const std::size_t x = size.find('x');
        int w = 0, h = 0;
        std::size_t used_w = 0, used_h = 0;
        try {
            if (x != std::string::npos) {
                w = std::stoi(size.substr(0, x), &used_w);
                h = std::stoi(size.substr(x + 1), &used_h);
            }
        } catch (const std::exception&) {
            used_w = 0;
        }
        if (x == std::string::npos || used_w != x || used_h != size.size() - x - 1 || used_w == 0)
            throw UsageError("size '" + size + "' needs WxH");
        vp.width_px = w;
        vp.height_px = h;
    }
    vp.precision = precision;
    try {
        vp.validate();
    } catch (const Error& e) {
        throw UsageError(e.what());
    }
    return vp;
}

void print_error(std::ostream& err, std::string_view kind, const std::string& message) {
    err << json{{"error", kind}, {"message", message}}.dump() << "\n";
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Moduli of acute triangles, the modular group, and the triangle-to-elliptic-curve map"};
    app.name("acute");
    app.require_subcommand(1);

    std::string tol_text;
    app.add_option("--tol", tol_text, "Boundary/equality tolerance (default 1e-9, or $ACUTE_TOLERANCE)");

    std::vector<std::string> vertices;
    std::string z_text, z2_text, edge_text = "E12", out_path, viewport_text, size_text;
    bool gl = false, force_obtuse = false, overlay = false;
    int depth = 0, precision = 6;

    auto* classify = app.add_subcommand("classify", "Classify a labeled triangle as Acute/Right/Obtuse/Degenerate");
    classify->add_option("vertices", vertices, "v1 v2 v3")->expected(3)->required();
    auto* normalize = app.add_subcommand("normalize", "Moduli point of a labeled triangle");
    normalize->add_option("vertices", vertices, "v1 v2 v3")->expected(3)->required();
    auto* orbit = app.add_subcommand("orbit", "S3 orbit and stabilizer of a moduli point");
    orbit->add_option("z", z_text)->required();
    auto* reduce = app.add_subcommand("reduce", "Reduce to the SL(2,Z) fundamental domain");
    reduce->add_option("z", z_text)->required();
    reduce->add_flag("--gl", gl, "Fold further into a GL(2,Z) fundamental domain");
    auto* equiv = app.add_subcommand("equiv", "Test SL(2,Z) equivalence");
    equiv->add_option("z1", z_text)->required();
    equiv->add_option("z2", z2_text)->required();
    auto* curve = app.add_subcommand("curve", "Elliptic curve of a triangle by parallelogram doubling");
    curve->add_option("vertices", vertices, "v1 v2 v3")->expected(3)->required();
    curve->add_option("--edge", edge_text, "E12, E13 or E23")->check(CLI::IsMember({"E12", "E13", "E23"}));
    curve->add_flag("--force-obtuse", force_obtuse, "Allow obtuse triangles");
    auto* fiber = app.add_subcommand("fiber", "Points of T over the same elliptic curve");
    fiber->add_option("z", z_text)->required();
    auto* section = app.add_subcommand("section", "A triangle in the closure of T over a given curve");
    section->add_option("w", z_text)->required();
    auto* render = app.add_subcommand("render", "Render the half-plane tiling as SVG");
    render->add_option("--depth", depth, "Word length bound")->required()->check(CLI::Range(0, 12));
    render->add_option("--out", out_path, "Output SVG path")->required();
    render->add_flag("--overlay-t", overlay, "Color the six regions of T");
    render->add_option("--viewport", viewport_text, "xmin,xmax,ymin,ymax");
    render->add_option("--size", size_text, "WxH in pixels");
    render->add_option("--precision", precision, "Decimal places for coordinates")->check(CLI::Range(0, 17));

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        print_error(err, "UsageError", e.what());
        return kExitUsageError;
    }

    try {
        Tolerances tol;
        if (tol_text.empty()) {
            if (const char* env = std::getenv(kToleranceEnv); env != nullptr && *env != '\0') tol_text = env;
        }
        if (!tol_text.empty()) {
            tol.boundary = real_arg(tol_text, "tolerance");
            if (!(tol.boundary > 0.0)) throw UsageError("tolerance must be positive");
        }

        json result;
        if (classify->parsed()) {
            const LabeledTriangle tri = triangle_arg(vertices);
            const TriangleClass cls = classify_triangle(tri, tol);
            result["class"] = to_string(cls);
            if (cls != TriangleClass::Degenerate)
                result["moduli"] = format_complex(normalize_labeled(tri, tol).point.z());
        } else if (normalize->parsed()) {
            const Normalized n = normalize_labeled(triangle_arg(vertices), tol);
            result["moduli"] = format_complex(n.point.z());
            result["reflected"] = n.reflected;
        } else if (orbit->parsed()) {
            const ModuliPoint z = point_arg(z_text);
            json stab = json::array();
            for (const Permutation& p : stabilizer(z, tol)) stab.push_back(p.cycle_notation());
            result["orbit"] = points(s3_orbit(z, tol));
            result["stabilizer"] = stab;
            result["class"] = to_string(classify_point(z, tol));
            if (in_closure_of_T(z, tol)) result["canonical"] = format_complex(canonical_acute(z, tol).z());
        } else if (reduce->parsed()) {
            const ModuliPoint z = point_arg(z_text);
            const ReductionResult r = gl ? canonicalize_gl2z(z, tol) : reduce_sl2z(z, tol);
            result["point"] = format_complex(r.point.z());
            result["witness"] = format_matrix(r.witness);
            result["det"] = r.witness.det();
        } else if (equiv->parsed()) {
            result["equivalent"] = equivalent_sl2z(point_arg(z_text), point_arg(z2_text), tol);
        } else if (curve->parsed()) {
            const CurveResult c = curve_details(triangle_arg(vertices), parse_edge(edge_text), force_obtuse, tol);
            json par = json::array();
            for (Complex q : c.doubling.parallelogram.q) par.push_back(format_complex(q));
            result["basis"] = {format_complex(c.doubling.basis.w1()), format_complex(c.doubling.basis.w2())};
            result["edge"] = to_string(c.edge);
            result["modulus"] = format_complex(c.modulus.z());
            result["parallelogram"] = par;
            result["tau"] = format_complex(c.tau.z());
            result["witness"] = format_matrix(c.witness);
        } else if (fiber->parsed()) {
            const auto f = fiber_in_T(point_arg(z_text), tol);
            result["fiber"] = points(f);
            result["size"] = f.size();
        } else if (section->parsed()) {
            const ModuliPoint w = point_arg(z_text);
            result["point"] = format_complex(p_section(w, tol).z());
            result["reduced"] = format_complex(reduce_sl2z(w, tol).point.z());
        } else if (render->parsed()) {
            const Viewport vp = viewport_arg(viewport_text, size_text, precision);
            const auto tiles = enumerate_tiles(depth, vp);
            const std::string svg = render_svg(tiles, vp, overlay);
            std::ofstream file(out_path, std::ios::binary);
            if (!file || !(file << svg) || !file.flush()) {
                print_error(err, "IoError", "cannot write '" + out_path + "'");
                return kExitDomainError;
            }
            result["out"] = out_path;
            result["tiles"] = tiles.size();
        }
        out << result.dump() << "\n";
        return kExitOk;
    } catch (const UsageError& e) {
        print_error(err, "UsageError", e.what());
        return kExitUsageError;
    } catch (const Error& e) {
        if (e.code() == ErrorCode::ParseError) {
            print_error(err, "UsageError", e.what());
            return kExitUsageError;
        }
        print_error(err, to_string(e.code()), e.what());
        return kExitDomainError;
    }
}

} // namespace acute::cli

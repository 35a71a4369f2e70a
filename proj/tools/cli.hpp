#pragma once

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "flagdual/flagdual.hpp"

namespace flagdual::cli
{

enum Exit { kOk = 0, kParse = 1, kDomain = 2, kSolver = 3 };

struct Command {
    std::string verb;
    std::vector<std::string> args;  // input path, or example name and parameter
    std::string output;             // empty: stdout
    Backend backend = Backend::Auto;
    double tolerance = 1e-9;
    bool json = false;
    double perturb = 0.0;
    unsigned long seed = 1;
};

inline const std::vector<std::string>& verbs()
{
    static const std::vector<std::string> v = {"coords", "dualize", "conjugate", "check", "beta",
                                                "volume", "defect",  "solve",     "example"};
    return v;
}

inline std::string fmt(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.15g", v == 0.0 ? 0.0 : v);
    return buf;
}

inline std::string text(const Exact& z) { return z.to_string(); }
inline std::string text(const Float& z)
{
    std::string s = fmt(z.real());
    s += z.imag() < 0 ? "-" : "+";
    return s + fmt(std::abs(z.imag())) + "*i";
}

template <Scalar S>
std::string text(const FormalSum<S>& s)
{
    if (s.empty()) {
        return "0\n";
    }
    std::string out;
    for (const auto& t : s.terms()) {
        out += (t.coeff < 0 ? "-" : "+") + std::to_string(std::labs(t.coeff)) + " [" + text(t.gen) + "]\n";
    }
    return out;
}

inline std::string face_text(int tet, const std::array<int, 3>& f)
{
    return "tet " + std::to_string(tet) + " (" + std::to_string(f[0]) + std::to_string(f[1]) +
           std::to_string(f[2]) + ")";
}

namespace detail
{

inline std::string read_input(const Command& c)
{
    if (c.args.empty()) {
        throw ParseError(c.verb + ": missing input file");
    }
    const std::string& path = c.args.front();
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open " + path);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct Output {
    std::string body;
    int status = kOk;
};

template <Scalar S>
Output check_report(const DecoratedComplex<S>& dc, const Command& c)
{
    const auto fr = check_faces(dc, c.tolerance);
    const auto er = check_edges(dc, c.tolerance);
    const auto classes = dc.triangulation.edge_classes();
    const double worst = std::max(fr.max_residual, er.max_residual);
    const bool ok = fr.ok() && er.ok();
    Output o;
    o.status = ok ? kOk : kDomain;
    if (c.json) {
        io::json faces = io::json::array();
        for (const auto& it : fr.items) {
            faces.push_back({{"pairing", it.pairing + 1},
                             {"product", io::encode(it.product)},
                             {"residual", it.residual},
                             {"ok", it.ok}});
        }
        io::json edges = io::json::array();
        for (const auto& it : er.items) {
            const auto& cl = classes[it.edge_class];
            edges.push_back({{"class", it.edge_class + 1},
                             {"size", cl.forward.size()},
                             {"forward", io::encode(it.forward)},
                             {"backward", io::encode(it.backward)},
                             {"residual", it.residual},
                             {"ok", it.ok}});
        }
        o.body = io::json{{"faces", faces}, {"edges", edges}, {"max_residual", worst}, {"ok", ok}}.dump(2) + "\n";
        return o;
    }
    std::string s;
    const auto& ps = dc.triangulation.pairings();
    for (const auto& it : fr.items) {
        const auto& p = ps[it.pairing];
        s += "face  " + std::to_string(it.pairing + 1) + "  " + face_text(p.tet_a, p.face_a) + " ~ " +
             face_text(p.tet_b, p.face_b) + "  residual " + fmt(it.residual) + (it.ok ? "  ok" : "  FAIL") + "\n";
    }
    for (const auto& it : er.items) {
        const auto& cl = classes[it.edge_class];
        const auto& e = cl.forward.front();
        s += "edge  " + std::to_string(it.edge_class + 1) + "  tet " + std::to_string(e.tet) + " " +
             std::to_string(e.i) + std::to_string(e.j) + ", " + std::to_string(cl.forward.size()) +
             " members  residual " + fmt(it.residual) + (it.ok ? "  ok" : "  FAIL") + "\n";
    }
    s += "max residual " + fmt(worst) + "  " + std::to_string(fr.failures + er.failures) + " failing  " +
         (ok ? "PASS" : "FAIL") + "\n";
    o.body = s;
    return o;
}

template <Scalar S>
Output coords_table(const TetraCoords<S>& c, bool as_json)
{
    if (as_json) {
        return {io::encode(c).dump(2) + "\n"};
    }
    std::string s;
    for (const auto& [i, j] : io::edge_keys()) {
        s += "z" + std::to_string(i) + std::to_string(j) + "   " + text(c.edge(i, j)) + "\n";
    }
    for (int l : io::kFaceOrder) {
        s += "z" + io::face_key(l) + "  " + text(c.face_opposite(l)) + "\n";
    }
    return {s};
}

inline DecoratedComplex<Float> perturbed(const DecoratedComplex<Float>& dc, double eps, unsigned long seed)
{
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    auto kick = [&](Float z) { return z * (1.0 + eps * Float(u(rng), u(rng))); };
    DecoratedComplex<Float> out = dc;
    for (auto& c : out.decoration) {
        const auto m = c.minimal();
        c = complete_from_minimal(MinimalCoords<Float>::make(kick(m.z12), kick(m.z21), kick(m.z34), kick(m.z43)));
    }
    return out;
}

template <Scalar S>
Output run_complex(const DecoratedComplex<S>& dc, const Command& c, std::ostream& err)
{
    const std::string& v = c.verb;
    if (v == "coords") {
        return {io::encode(dc).dump(2) + "\n"};
    }
    if (v == "dualize") {
        return {io::encode(dualize(dc)).dump(2) + "\n"};
    }
    if (v == "conjugate") {
        return {io::encode(conjugate(dc)).dump(2) + "\n"};
    }
    if (v == "check") {
        return check_report(dc, c);
    }
    if (v == "beta") {
        const auto b = beta_complex(dc);
        return {c.json ? io::encode(b).dump(2) + "\n" : text(b)};
    }
    if (v == "volume") {
        const double vol = volume(dc);
        return {c.json ? io::json{{"volume", vol}}.dump(2) + "\n" : "volume " + fmt(vol) + "\n"};
    }
    if (v == "defect") {
        const auto d = canonicalize_six(duality_defect(dc));
        const double dv = eval_D(d);
        if (c.json) {
            return {io::json{{"defect", io::encode(d)}, {"D", dv}}.dump(2) + "\n"};
        }
        return {text(d) + "D(defect) " + fmt(dv) + "\n"};
    }
    if (v == "solve") {
        if constexpr (is_exact_v<S>) {
            if (c.perturb != 0.0) {
                throw Unsupported("solve --perturb needs the float backend");
            }
            const auto r = solve_consistency(dc);
            err << "steps 0  residual 0\n";
            return {io::encode(r.complex).dump(2) + "\n"};
        } else {
            const auto start = c.perturb != 0.0 ? perturbed(dc, c.perturb, c.seed) : dc;
            const auto r = solve_consistency(start);
            err << "steps " << r.steps << "  residual " << fmt(r.residual) << "\n";
            return {io::encode(r.complex).dump(2) + "\n"};
        }
    }
    throw ParseError("unknown verb " + v);
}

/** Hyperbolic tetrahedron on [0:1], [1:0], [1:1], [1:z]. */
inline DecoratedComplex<Exact> hyperbolic_example(const Exact& z)
{
    const FlagTuple<Exact> t = {hyperbolic_flag(ProjPoint1<Exact>{0, 1}), hyperbolic_flag(ProjPoint1<Exact>{1, 0}),
                                hyperbolic_flag(ProjPoint1<Exact>{1, 1}), hyperbolic_flag(ProjPoint1<Exact>{1, z})};
    return DecoratedComplex<Exact>::make(IdealTriangulation::make(1, {}), {edge_coords(t)});
}

/** Spherical CR tetrahedron on four Heisenberg null points with rational coordinates. */
inline DecoratedComplex<Exact> cr_example()
{
    const Exact i = Exact::i();
    const FlagTuple<Exact> t = {
        cr_flag(Point2<Exact>{{0, 0, 1}}),
        cr_flag(heisenberg_point<Exact>(0, 0)),
        cr_flag(heisenberg_point<Exact>(1, 1)),
        cr_flag(heisenberg_point<Exact>(i, Exact(-1) / Exact(2))),
    };
    return DecoratedComplex<Exact>::make(IdealTriangulation::make(1, {}), {edge_coords(t)});
}

inline IdealTriangulation figure8_triangulation()
{
    return io::decode_triangulation(io::parse_text(R"({"tetrahedra": 2, "pairings": [
        {"tetA": 1, "faceA": [2, 4, 3], "tetB": 2, "faceB": [2, 3, 4], "map": [[2, 2], [4, 3], [3, 4]]},
        {"tetA": 1, "faceA": [1, 3, 4], "tetB": 2, "faceB": [2, 4, 1], "map": [[1, 2], [3, 4], [4, 1]]},
        {"tetA": 1, "faceA": [1, 4, 2], "tetB": 2, "faceB": [3, 1, 4], "map": [[1, 3], [4, 1], [2, 4]]},
        {"tetA": 1, "faceA": [1, 2, 3], "tetB": 2, "faceB": [3, 2, 1], "map": [[1, 3], [2, 2], [3, 1]]}]})"));
}

inline IdealTriangulation whitehead_triangulation()
{
    return io::decode_triangulation(io::parse_text(R"({"tetrahedra": 4, "pairings": [
        {"tetA": 1, "faceA": [2, 4, 3], "tetB": 2, "faceB": [2, 3, 4], "map": [[2, 2], [4, 3], [3, 4]]},
        {"tetA": 1, "faceA": [1, 3, 4], "tetB": 3, "faceB": [1, 4, 3], "map": [[1, 1], [3, 4], [4, 3]]},
        {"tetA": 1, "faceA": [1, 4, 2], "tetB": 4, "faceB": [1, 3, 2], "map": [[1, 1], [4, 3], [2, 2]]},
        {"tetA": 1, "faceA": [1, 2, 3], "tetB": 2, "faceB": [4, 3, 1], "map": [[1, 4], [2, 3], [3, 1]]},
        {"tetA": 2, "faceA": [1, 4, 2], "tetB": 4, "faceB": [4, 1, 2], "map": [[1, 4], [4, 1], [2, 2]]},
        {"tetA": 2, "faceA": [1, 2, 3], "tetB": 3, "faceB": [4, 2, 3], "map": [[1, 4], [2, 2], [3, 3]]},
        {"tetA": 3, "faceA": [1, 4, 2], "tetB": 4, "faceB": [1, 4, 3], "map": [[1, 1], [4, 4], [2, 3]]},
        {"tetA": 3, "faceA": [1, 2, 3], "tetB": 4, "faceB": [4, 2, 3], "map": [[1, 4], [2, 2], [3, 3]]}]})"));
}

/** Figure-eight knot complement, both tetrahedra regular ideal (shape e^{i pi/3}). */
inline DecoratedComplex<Float> figure8_example()
{
    const Float z = std::polar(1.0, std::numbers::pi / 3);
    const auto c = complete_from_minimal(MinimalCoords<Float>::make(z, z, z, z));
    return DecoratedComplex<Float>::make(figure8_triangulation(), {c, c});
}

/** Whitehead link complement: shapes 1+i, then (1+i)/2 three times. */
inline DecoratedComplex<Exact> whitehead_example()
{
    const Exact a{1, 1};
    const Exact b = a / Exact(2);
    Decoration<Exact> d;
    for (const Exact& z : {a, b, b, b}) {
        d.push_back(complete_from_minimal(MinimalCoords<Exact>::make(z, z, z, z)));
    }
    return DecoratedComplex<Exact>::make(whitehead_triangulation(), std::move(d));
}

inline Output run_example(const Command& c)
{
    if (c.args.empty()) {
        throw ParseError("example: name one of hyperbolic, cr, figure8, whitehead, single");
    }
    const std::string& name = c.args[0];
    if (name == "hyperbolic") {
        const Exact z = c.args.size() > 1 ? Exact::parse(c.args[1]) : Exact(2);
        return {io::encode(hyperbolic_example(z)).dump(2) + "\n"};
    }
    if (c.args.size() > 1) {
        throw ParseError("example " + name + " takes no parameter");
    }
    if (name == "cr") {
        return {io::encode(cr_example()).dump(2) + "\n"};
    }
    if (name == "figure8") {
        return {io::encode(figure8_example()).dump(2) + "\n"};
    }
    if (name == "whitehead") {
        return {io::encode(whitehead_example()).dump(2) + "\n"};
    }
    if (name == "single") {
        const auto m = MinimalCoords<Exact>::make(2, 3, 5, 7);
        const auto dc = DecoratedComplex<Exact>::make(IdealTriangulation::make(1, {}), {complete_from_minimal(m)});
        return {io::encode(dc).dump(2) + "\n"};
    }
    throw ParseError("unknown example " + name);
}

inline Output dispatch(const Command& c, std::ostream& err)
{
    if (c.verb == "example") {
        return run_example(c);
    }
    const io::json doc = io::parse_text(read_input(c));
    if (c.verb == "coords" && doc.is_object() && doc.contains("flags")) {
        return std::visit([&](const auto& t) { return coords_table(edge_coords(t), c.json); },
                          io::load_flags(doc, c.backend));
    }
    return std::visit([&](const auto& dc) { return run_complex(dc, c, err); },
                      io::load_complex(doc, c.backend));
}

}  // namespace detail

/**
 * @brief Executes one command
 *
 * Exit status: 0 success, 1 unreadable or malformed input, 2 domain
 * error or failed check, 3 solver failure. Messages go to err.
 */
inline int run(const Command& c, std::ostream& out, std::ostream& err)
{
    try {
        const auto o = detail::dispatch(c, err);
        if (c.output.empty()) {
            out << o.body;
        } else {
            std::ofstream f(c.output);
            if (!f) {
                throw ParseError("cannot write " + c.output);
            }
            f << o.body;
        }
        return o.status;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return kParse;
    } catch (const MalformedPairing& e) {
        err << "malformed pairing: " << e.what() << "\n";
        return kParse;
    } catch (const SolverDiverged& e) {
        err << "solver diverged: " << e.what() << " (residual " << fmt(e.residual()) << ")\n";
        return kSolver;
    } catch (const LeftDomain& e) {
        err << "solver left the domain: " << e.what() << "\n";
        return kSolver;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kDomain;
    }
}

}  // namespace flagdual::cli

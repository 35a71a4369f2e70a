#pragma once

#include <cmath>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <json.hpp>

#include "flagdual/complex.hpp"
#include "flagdual/errors.hpp"
#include "flagdual/flags.hpp"
#include "flagdual/formal_sum.hpp"
#include "flagdual/scalar.hpp"
#include "flagdual/tetra.hpp"
#include "flagdual/triangulation.hpp"

namespace flagdual
{

/** Backend requested at load time. Auto picks exact unless floats occur. */
enum class Backend { Auto, Exact, Float };

using AnyComplex = std::variant<DecoratedComplex<Exact>, DecoratedComplex<Float>>;
using AnyFlagTuple = std::variant<FlagTuple<Exact>, FlagTuple<Float>>;

namespace io
{

using json = nlohmann::ordered_json;

/**
 * Exact scalars are strings ("a/b" or "a/b+c/d*i"), floats are [re, im].
 * Integer JSON numbers are read as exact, other numbers as real floats.
 */
inline json encode(const Exact& z) { return z.to_string(); }
inline json encode(const Float& z) { return json::array({z.real(), z.imag()}); }

/** Edge keys in storage order. */
inline const std::vector<std::pair<int, int>>& edge_keys()
{
    static const std::vector<std::pair<int, int>> keys = [] {
        std::vector<std::pair<int, int>> k;
        for (int i = 1; i <= 4; ++i) {
            for (int j = 1; j <= 4; ++j) {
                if (i != j) {
                    k.emplace_back(i, j);
                }
            }
        }
        return k;
    }();
    return keys;
}

inline std::string face_key(int l)
{
    const auto f = oriented_face(l);
    return std::to_string(f[0]) + std::to_string(f[1]) + std::to_string(f[2]);
}

/** Faces in output order 123, 243, 134, 142. */
inline constexpr int kFaceOrder[4] = {4, 1, 2, 3};

template <Scalar S>
json encode(const TetraCoords<S>& c)
{
    json e = json::object();
    for (const auto& [i, j] : edge_keys()) {
        e[std::to_string(i) + std::to_string(j)] = encode(c.edge(i, j));
    }
    json f = json::object();
    for (int l : kFaceOrder) {
        f[face_key(l)] = encode(c.face_opposite(l));
    }
    return json{{"edges", e}, {"faces", f}};
}

template <Scalar S>
json encode(const Flag<S>& f)
{
    json p = json::array();
    json l = json::array();
    for (int n = 0; n < 3; ++n) {
        p.push_back(encode(f.point.v[n]));
        l.push_back(encode(f.line.v[n]));
    }
    return json{{"point", p}, {"line", l}};
}

template <Scalar S>
json encode(const FormalSum<S>& s)
{
    json a = json::array();
    for (const auto& t : s.terms()) {
        a.push_back(json{{"coeff", t.coeff}, {"gen", encode(t.gen)}});
    }
    return a;
}

inline json encode(const FacePairing& p)
{
    json m = json::array();
    for (int v : p.face_a) {
        m.push_back(json::array({v, p.map[v]}));
    }
    return json{{"tetA", p.tet_a}, {"faceA", p.face_a}, {"tetB", p.tet_b}, {"faceB", p.face_b}, {"map", m}};
}

template <Scalar S>
json encode(const DecoratedComplex<S>& dc)
{
    json ps = json::array();
    for (const auto& p : dc.triangulation.pairings()) {
        ps.push_back(encode(p));
    }
    json data = json::array();
    for (const auto& c : dc.decoration) {
        data.push_back(encode(c));
    }
    return json{{"tetrahedra", dc.triangulation.size()},
                {"pairings", ps},
                {"decoration", json{{"mode", "coords"}, {"data", data}}}};
}

/** Raised by the exact decoder on a float literal. */
class FloatLiteral : public ParseError
{
public:
    using ParseError::ParseError;
};

/** @brief Reads scalars for one backend and records which literal kinds occur */
template <Scalar S>
class Decoder
{
public:
    bool saw_exact = false;
    bool saw_float = false;

    S scalar(const json& j, const std::string& where)
    {
        if (j.is_string()) {
            saw_exact = true;
            const Exact z = Exact::parse(j.get<std::string>());
            if constexpr (is_exact_v<S>) {
                return z;
            } else {
                return z.to_complex();
            }
        }
        if (j.is_number_integer() || j.is_number_unsigned()) {
            saw_exact = true;
            return S(j.get<long>());
        }
        if (j.is_number_float() || (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())) {
            saw_float = true;
            if constexpr (is_exact_v<S>) {
                throw FloatLiteral(where + ": float literal in exact input");
            } else {
                const Float z = j.is_array() ? Float(j[0].get<double>(), j[1].get<double>())
                                             : Float(j.get<double>(), 0.0);
                if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
                    throw ParseError(where + ": non-finite scalar");
                }
                return z;
            }
        }
        throw ParseError(where + ": expected a scalar (string or [re, im])");
    }

    Vec3<S> vec3(const json& j, const std::string& where)
    {
        if (!j.is_array() || j.size() != 3) {
            throw ParseError(where + ": expected three scalars");
        }
        return {scalar(j[0], where), scalar(j[1], where), scalar(j[2], where)};
    }

    Flag<S> flag(const json& j, const std::string& where)
    {
        if (!j.is_object() || !j.contains("point") || !j.contains("line")) {
            throw ParseError(where + ": flag needs \"point\" and \"line\"");
        }
        return Flag<S>::make(Point2<S>{vec3(j["point"], where + " point")},
                             Line2<S>{vec3(j["line"], where + " line")});
    }

    FlagTuple<S> flags(const json& j, const std::string& where)
    {
        if (!j.is_array() || j.size() != 4) {
            throw ParseError(where + ": expected four flags");
        }
        FlagTuple<S> t;
        for (std::size_t n = 0; n < 4; ++n) {
            t.push_back(flag(j[n], where + " flag " + std::to_string(n + 1)));
        }
        return t;
    }

    /** {"minimal": [z12, z21, z34, z43]} or {"edges": {...}, "faces": {...}}; faces optional. */
    TetraCoords<S> coords(const json& j, const std::string& where)
    {
        if (!j.is_object()) {
            throw ParseError(where + ": expected an object");
        }
        if (j.contains("minimal")) {
            const json& m = j["minimal"];
            if (!m.is_array() || m.size() != 4) {
                throw ParseError(where + ": \"minimal\" needs four scalars");
            }
            return complete_from_minimal(MinimalCoords<S>::make(scalar(m[0], where), scalar(m[1], where),
                                                                scalar(m[2], where), scalar(m[3], where)));
        }
        if (!j.contains("edges") || !j["edges"].is_object()) {
            throw ParseError(where + ": needs \"edges\" or \"minimal\"");
        }
        typename TetraCoords<S>::EdgeTable e{};
        for (const auto& [i, k] : edge_keys()) {
            const std::string key = std::to_string(i) + std::to_string(k);
            if (!j["edges"].contains(key)) {
                throw ParseError(where + ": missing edge " + key);
            }
            e[i][k] = scalar(j["edges"][key], where + " edge " + key);
        }
        std::array<S, 5> f{};
        for (int l = 1; l <= 4; ++l) {
            const auto v = oriented_face(l);
            const std::string key = face_key(l);
            if (j.contains("faces") && j["faces"].contains(key)) {
                f[l] = scalar(j["faces"][key], where + " face " + key);
            } else {
                f[l] = -(e[v[0]][l] * e[v[1]][l] * e[v[2]][l]);
            }
        }
        return TetraCoords<S>::make(e, f);
    }
};

inline int get_int(const json& j, const char* key, const std::string& where)
{
    if (!j.contains(key) || !j[key].is_number_integer()) {
        throw ParseError(where + ": \"" + key + "\" must be an integer");
    }
    return j[key].get<int>();
}

inline std::array<int, 3> get_triple(const json& j, const char* key, const std::string& where)
{
    if (!j.contains(key) || !j[key].is_array() || j[key].size() != 3) {
        throw ParseError(where + ": \"" + key + "\" must be three vertex labels");
    }
    std::array<int, 3> out{};
    for (std::size_t n = 0; n < 3; ++n) {
        if (!j[key][n].is_number_integer()) {
            throw ParseError(where + ": vertex labels must be integers");
        }
        out[n] = j[key][n].get<int>();
    }
    return out;
}

inline IdealTriangulation decode_triangulation(const json& doc)
{
    if (!doc.is_object()) {
        throw ParseError("top level must be an object");
    }
    const int n = get_int(doc, "tetrahedra", "file");
    std::vector<FacePairing> ps;
    if (doc.contains("pairings")) {
        if (!doc["pairings"].is_array()) {
            throw ParseError("\"pairings\" must be a list");
        }
        for (std::size_t k = 0; k < doc["pairings"].size(); ++k) {
            const json& p = doc["pairings"][k];
            const std::string where = "pairing " + std::to_string(k + 1);
            FacePairing fp;
            fp.tet_a = get_int(p, "tetA", where);
            fp.tet_b = get_int(p, "tetB", where);
            fp.face_a = get_triple(p, "faceA", where);
            fp.face_b = get_triple(p, "faceB", where);
            if (!p.contains("map") || !p["map"].is_array() || p["map"].size() != 3) {
                throw ParseError(where + ": \"map\" must list three [from, to] pairs");
            }
            for (const auto& pr : p["map"]) {
                if (!pr.is_array() || pr.size() != 2 || !pr[0].is_number_integer() ||
                    !pr[1].is_number_integer()) {
                    throw ParseError(where + ": bad map entry");
                }
                const int from = pr[0].get<int>();
                if (from < 1 || from > 4 || fp.map[from] != 0) {
                    throw MalformedPairing(where + ": vertex map is not a function on face A");
                }
                fp.map[from] = pr[1].get<int>();
            }
            ps.push_back(fp);
        }
    }
    return IdealTriangulation::make(n, std::move(ps));
}

template <Scalar S>
DecoratedComplex<S> decode_complex(const json& doc, Decoder<S>& dec)
{
    IdealTriangulation k = decode_triangulation(doc);
    if (!doc.contains("decoration") || !doc["decoration"].is_object()) {
        throw ParseError("missing \"decoration\"");
    }
    const json& d = doc["decoration"];
    const std::string mode = d.value("mode", std::string{"coords"});
    if (mode != "coords" && mode != "flags") {
        throw ParseError("decoration mode must be \"coords\" or \"flags\"");
    }
    if (!d.contains("data") || !d["data"].is_array()) {
        throw ParseError("decoration needs a \"data\" list");
    }
    Decoration<S> out;
    for (std::size_t t = 0; t < d["data"].size(); ++t) {
        const std::string where = "tetrahedron " + std::to_string(t + 1);
        try {
            if (mode == "coords") {
                out.push_back(dec.coords(d["data"][t], where));
            } else {
                out.push_back(edge_coords(dec.flags(d["data"][t], where)));
            }
        } catch (const ParseError&) {
            throw;
        } catch (const Error& e) {
            // re-raise the same category with the location attached
            const std::string msg = where + ": " + e.what();
            if (dynamic_cast<const InconsistentCoords*>(&e)) throw InconsistentCoords(msg);
            if (dynamic_cast<const OutOfDomain*>(&e)) throw OutOfDomain(msg);
            throw DegenerateInput(msg);
        }
    }
    return DecoratedComplex<S>::make(std::move(k), std::move(out));
}

template <class F>
auto load_with_backend(Backend b, F&& decode)
{
    using Out = std::variant<decltype(decode(std::declval<Decoder<Exact>&>())),
                             decltype(decode(std::declval<Decoder<Float>&>()))>;
    if (b != Backend::Float) {
        try {
            Decoder<Exact> d;
            return Out{decode(d)};
        } catch (const FloatLiteral&) {
            if (b == Backend::Exact) {
                throw;
            }
        }
    }
    Decoder<Float> f;
    auto as_float = decode(f);
    if (b == Backend::Auto && f.saw_exact) {
        throw ParseError("input mixes exact and float literals; use --backend float");
    }
    return Out{std::move(as_float)};
}

inline AnyComplex load_complex(const json& doc, Backend b = Backend::Auto)
{
    return load_with_backend(b, [&](auto& dec) { return decode_complex(doc, dec); });
}

/** {"flags": [four flags]}. */
inline AnyFlagTuple load_flags(const json& doc, Backend b = Backend::Auto)
{
    if (!doc.is_object() || !doc.contains("flags")) {
        throw ParseError("expected {\"flags\": [...]}");
    }
    return load_with_backend(b, [&](auto& dec) { return dec.flags(doc["flags"], "flags"); });
}

inline json parse_text(const std::string& text)
{
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
}

}  // namespace io
}  // namespace flagdual

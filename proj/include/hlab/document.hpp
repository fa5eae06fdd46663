#pragma once

// Structured input documents and reports for the command-line frontend.
// Needs nlohmann/json (vendor/json.hpp) on the include path.

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "fixtures.hpp"
#include "genus.hpp"
#include "lefschetz.hpp"
#include "parser.hpp"
#include "rational.hpp"
#include "ring.hpp"

namespace hlab {

using json = nlohmann::ordered_json;

// Polynomial-valued commands refuse rings above this dimension.
inline constexpr int max_polynomial_degree = 12;

struct BoundsParams {
    std::optional<Rational> K;
    std::optional<Rational> C;
    std::optional<Rational> c_n;
    std::optional<int> p;
};

struct InputDocument {
    RingSpecPtr spec;
    std::optional<ManifoldData> manifold;
    std::optional<BundleData> bundle;
    std::optional<GradedElement> line_c1;
    std::optional<CurvatureSpec> curvature;
    BoundsParams bounds;
    std::vector<std::string> warnings;

    [[nodiscard]] int dimension() const
    {
        if (!spec) {
            throw error("input document has no ring");
        }
        return spec->truncation();
    }

    [[nodiscard]] const ManifoldData& require_manifold() const
    {
        if (!manifold) {
            throw error("input document has no manifold section");
        }
        return *manifold;
    }

    // Missing bundle means the trivial line bundle.
    [[nodiscard]] BundleData bundle_or_trivial() const
    {
        return bundle ? *bundle : BundleData::trivial(require_manifold().spec, 1);
    }

    [[nodiscard]] BundleData require_line_bundle() const
    {
        if (!line_c1) {
            throw error("input document has no line_bundle section");
        }
        return BundleData::line(*line_c1);
    }
};

namespace detail {

inline const json* member(const json& obj, const char* key)
{
    const auto it = obj.find(key);
    return it == obj.end() ? nullptr : &*it;
}

inline std::string require_string(const json& v, const std::string& where)
{
    if (!v.is_string()) {
        throw parse_error(where + " must be a string");
    }
    return v.get<std::string>();
}

// Rationals travel as strings; bare integers are accepted too.
inline Rational read_rational(const json& v, const std::string& where)
{
    if (v.is_number_integer()) {
        return Rational(Integer(std::to_string(v.get<long long>())));
    }
    try {
        return parse_rational(require_string(v, where));
    } catch (const parse_error& e) {
        throw parse_error(where + ": " + e.what());
    }
}

inline int read_int(const json& v, const std::string& where)
{
    if (!v.is_number_integer()) {
        throw parse_error(where + " must be an integer");
    }
    return v.get<int>();
}

inline GradedElement read_expression(const json& v, const RingSpecPtr& spec, const std::string& where,
                                     std::vector<std::string>& warnings)
{
    const std::string src = v.is_number_integer() ? std::to_string(v.get<long long>()) : require_string(v, where);
    try {
        auto parsed = parse_expression(src, spec);
        for (auto& w : parsed.warnings) {
            warnings.push_back(where + ": " + w);
        }
        return parsed.value;
    } catch (const parse_error& e) {
        throw parse_error(where + ": " + e.what());
    }
}

// Classes keyed "c1".."cN"; absent keys are zero, unknown keys rejected.
inline std::vector<GradedElement> read_chern_map(const json& v, const RingSpecPtr& spec, int count,
                                                 const std::string& where, std::vector<std::string>& warnings)
{
    if (!v.is_object()) {
        throw parse_error(where + " must be an object of c1..c" + std::to_string(count));
    }
    std::vector<GradedElement> out(static_cast<std::size_t>(count), GradedElement(spec));
    for (const auto& [key, val] : v.items()) {
        int i = 0;
        if (key.size() < 2 || key[0] != 'c' || std::sscanf(key.c_str() + 1, "%d", &i) != 1 ||
            key != "c" + std::to_string(i) || i < 1 || i > count) {
            throw parse_error(where + ": unexpected key '" + key + "' (expected c1..c" + std::to_string(count) + ")");
        }
        out[static_cast<std::size_t>(i - 1)] = read_expression(val, spec, where + "." + key, warnings);
    }
    return out;
}

inline ComplexRational read_complex(const json& v, const std::string& where)
{
    if (v.is_array()) {
        if (v.size() != 2) {
            throw parse_error(where + " must be [real, imag]");
        }
        return {read_rational(v[0], where + "[0]"), read_rational(v[1], where + "[1]")};
    }
    return read_rational(v, where);
}

inline json write_complex(const ComplexRational& c)
{
    if (c.is_real()) {
        return c.real.get_str();
    }
    return json::array({c.real.get_str(), c.imag.get_str()});
}

inline CurvatureSpec read_curvature(const json& v)
{
    if (!v.is_object()) {
        throw parse_error("curvature must be an object");
    }
    if (const json* g = member(v, "gammas")) {
        if (!g->is_array()) {
            throw parse_error("curvature.gammas must be an array");
        }
        std::vector<Rational> gammas;
        for (std::size_t j = 0; j < g->size(); ++j) {
            gammas.push_back(read_rational((*g)[j], "curvature.gammas[" + std::to_string(j) + "]"));
        }
        return CurvatureSpec::diagonal(std::move(gammas));
    }
    if (const json* h = member(v, "hermitian")) {
        if (!h->is_array()) {
            throw parse_error("curvature.hermitian must be an n x n array of r x r matrices");
        }
        std::vector<std::vector<ComplexMatrix>> theta;
        for (std::size_t j = 0; j < h->size(); ++j) {
            const json& row = (*h)[j];
            if (!row.is_array()) {
                throw parse_error("curvature.hermitian rows must be arrays");
            }
            theta.emplace_back();
            for (std::size_t k = 0; k < row.size(); ++k) {
                const json& blk = row[k];
                if (!blk.is_array()) {
                    throw parse_error("curvature.hermitian blocks must be arrays of rows");
                }
                ComplexMatrix m;
                for (std::size_t a = 0; a < blk.size(); ++a) {
                    if (!blk[a].is_array()) {
                        throw parse_error("curvature.hermitian block rows must be arrays");
                    }
                    m.emplace_back();
                    for (std::size_t b = 0; b < blk[a].size(); ++b) {
                        m.back().push_back(read_complex(blk[a][b], "curvature.hermitian[" + std::to_string(j) + "][" +
                                                                       std::to_string(k) + "][" + std::to_string(a) +
                                                                       "][" + std::to_string(b) + "]"));
                    }
                }
                theta.back().push_back(std::move(m));
            }
        }
        return CurvatureSpec::hermitian(std::move(theta));
    }
    throw parse_error("curvature needs either 'gammas' or 'hermitian'");
}

} // namespace detail

inline InputDocument parse_document(const json& doc)
{
    using namespace detail;
    if (!doc.is_object()) {
        throw parse_error("input document must be an object");
    }
    static const std::vector<std::string> known = {"ring",          "manifold",  "bundle", "fundamental_class",
                                                   "line_bundle",   "curvature", "bounds"};
    for (const auto& [key, val] : doc.items()) {
        if (std::find(known.begin(), known.end(), key) == known.end()) {
            throw parse_error("unknown top-level key '" + key + "'");
        }
    }
    InputDocument out;

    if (const json* ring = member(doc, "ring")) {
        const json* gens = member(*ring, "generators");
        const json* dim = member(*ring, "dimension");
        if (gens == nullptr || !gens->is_array() || dim == nullptr) {
            throw parse_error("ring needs 'generators' (array) and 'dimension'");
        }
        std::vector<Generator> g;
        for (std::size_t i = 0; i < gens->size(); ++i) {
            const json& e = (*gens)[i];
            const json* name = member(e, "name");
            const json* weight = member(e, "weight");
            if (name == nullptr || weight == nullptr) {
                throw parse_error("ring.generators[" + std::to_string(i) + "] needs 'name' and 'weight'");
            }
            g.push_back({require_string(*name, "ring.generators.name"), read_int(*weight, "ring.generators.weight")});
        }
        const int n = read_int(*dim, "ring.dimension");
        if (n > max_polynomial_degree) {
            throw error("ring.dimension " + std::to_string(n) + " exceeds the guard of " +
                        std::to_string(max_polynomial_degree));
        }
        out.spec = make_ring(std::move(g), n);
    }

    auto need_ring = [&](const char* section) {
        if (!out.spec) {
            throw parse_error(std::string(section) + " requires a ring section");
        }
    };

    std::optional<FundamentalClass> fclass;
    if (const json* fc = member(doc, "fundamental_class")) {
        need_ring("fundamental_class");
        if (!fc->is_object()) {
            throw parse_error("fundamental_class must be an object");
        }
        FundamentalClass f(out.spec);
        for (const auto& [key, val] : fc->items()) {
            std::vector<std::string> ignored;
            const auto m = read_expression(key, out.spec, "fundamental_class key", ignored);
            f.assign(m, read_rational(val, "fundamental_class." + key));
        }
        fclass = std::move(f);
    }

    if (const json* man = member(doc, "manifold")) {
        need_ring("manifold");
        const json* chern = member(*man, "chern");
        if (chern == nullptr) {
            throw parse_error("manifold needs 'chern'");
        }
        auto c = read_chern_map(*chern, out.spec, out.spec->truncation(), "manifold.chern", out.warnings);
        out.manifold.emplace(out.spec, std::move(c), fclass ? *fclass : FundamentalClass(out.spec));
    }

    if (const json* bun = member(doc, "bundle")) {
        need_ring("bundle");
        const json* rank = member(*bun, "rank");
        if (rank == nullptr) {
            throw parse_error("bundle needs 'rank'");
        }
        const int r = read_int(*rank, "bundle.rank");
        if (r < 1) {
            throw error("bundle.rank must be positive");
        }
        std::vector<GradedElement> c;
        if (const json* chern = member(*bun, "chern")) {
            c = read_chern_map(*chern, out.spec, std::min(r, out.spec->truncation()), "bundle.chern", out.warnings);
        }
        out.bundle.emplace(out.spec, r, std::move(c));
    }

    if (const json* lb = member(doc, "line_bundle")) {
        need_ring("line_bundle");
        const json* c1 = member(*lb, "c1");
        if (c1 == nullptr) {
            throw parse_error("line_bundle needs 'c1'");
        }
        out.line_c1 = read_expression(*c1, out.spec, "line_bundle.c1", out.warnings);
        if (!out.line_c1->is_homogeneous(1)) {
            throw error("line_bundle.c1 is not homogeneous of weight 1");
        }
    }

    if (const json* cv = member(doc, "curvature")) {
        out.curvature = read_curvature(*cv);
    }

    if (const json* b = member(doc, "bounds")) {
        if (!b->is_object()) {
            throw parse_error("bounds must be an object");
        }
        for (const auto& [key, val] : b->items()) {
            if (key == "K") {
                out.bounds.K = read_rational(val, "bounds.K");
            } else if (key == "C") {
                out.bounds.C = read_rational(val, "bounds.C");
            } else if (key == "c_n") {
                out.bounds.c_n = read_rational(val, "bounds.c_n");
            } else if (key == "p") {
                out.bounds.p = read_int(val, "bounds.p");
            } else {
                throw parse_error("unknown bounds key '" + key + "'");
            }
        }
    }
    return out;
}

inline InputDocument parse_document_text(const std::string& text)
{
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw parse_error(std::string("malformed input document: ") + e.what());
    }
    return parse_document(doc);
}

// Canonical emission from the engine objects, so re-parsing reproduces the
// same inputs and the same digest.
inline json to_json(const InputDocument& d)
{
    json out = json::object();
    if (d.spec) {
        json gens = json::array();
        for (const auto& g : d.spec->generators()) {
            gens.push_back({{"name", g.name}, {"weight", g.weight}});
        }
        out["ring"] = {{"generators", gens}, {"dimension", d.spec->truncation()}};
    }
    if (d.manifold) {
        json chern = json::object();
        for (std::size_t i = 0; i < d.manifold->chern.size(); ++i) {
            chern["c" + std::to_string(i + 1)] = d.manifold->chern[i].to_string();
        }
        out["manifold"] = {{"chern", chern}};
        json fc = json::object();
        for (const auto& [m, v] : d.manifold->fclass.values()) {
            fc[monomial_to_string(m, *d.spec)] = v.get_str();
        }
        out["fundamental_class"] = fc;
    }
    if (d.bundle) {
        json chern = json::object();
        for (std::size_t i = 0; i < d.bundle->chern.size(); ++i) {
            if (!d.bundle->chern[i].is_zero()) {
                chern["c" + std::to_string(i + 1)] = d.bundle->chern[i].to_string();
            }
        }
        out["bundle"] = {{"rank", d.bundle->rank}, {"chern", chern}};
    }
    if (d.line_c1) {
        out["line_bundle"] = {{"c1", d.line_c1->to_string()}};
    }
    if (d.curvature) {
        if (d.curvature->is_diagonal()) {
            json g = json::array();
            for (const auto& x : d.curvature->gammas()) {
                g.push_back(x.get_str());
            }
            out["curvature"] = {{"gammas", g}};
        } else {
            json h = json::array();
            for (const auto& row : d.curvature->theta()) {
                json jr = json::array();
                for (const auto& blk : row) {
                    json jb = json::array();
                    for (const auto& line : blk) {
                        json jl = json::array();
                        for (const auto& x : line) {
                            jl.push_back(detail::write_complex(x));
                        }
                        jb.push_back(jl);
                    }
                    jr.push_back(jb);
                }
                h.push_back(jr);
            }
            out["curvature"] = {{"hermitian", h}};
        }
    }
    json b = json::object();
    if (d.bounds.K) {
        b["K"] = d.bounds.K->get_str();
    }
    if (d.bounds.C) {
        b["C"] = d.bounds.C->get_str();
    }
    if (d.bounds.c_n) {
        b["c_n"] = d.bounds.c_n->get_str();
    }
    if (d.bounds.p) {
        b["p"] = *d.bounds.p;
    }
    if (!b.empty()) {
        out["bounds"] = b;
    }
    return out;
}

// 64-bit FNV-1a over the canonical emission.
inline std::string input_digest(const InputDocument& d)
{
    const std::string text = to_json(d).dump();
    std::uint64_t h = 14695981039346656037ULL;
    for (const unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

// Builtin ℂP^n: c(X) = (1+h)^{n+1}, ∫h^n = 1, line bundle c1 = h.
inline InputDocument cp_fixture(int n)
{
    if (n < 1 || n > max_polynomial_degree) {
        throw error("fixture cp needs 1 <= n <= " + std::to_string(max_polynomial_degree));
    }
    InputDocument d;
    d.manifold = projective_space(n);
    d.spec = d.manifold->spec;
    d.line_c1 = GradedElement::generator(d.spec, "h");
    return d;
}

struct Report {
    std::string command;
    std::string digest;
    json results = json::object();
    std::vector<std::string> warnings;
};

// Enclosures are always wrapped so they cannot be mistaken for exact values.
inline json enclosure_json(const RationalInterval& iv)
{
    if (iv.lo == iv.hi) {
        return iv.lo.get_str();
    }
    std::ostringstream approx;
    approx.precision(17);
    approx << iv.midpoint();
    return {{"enclosure", json::array({iv.lo.get_str(), iv.hi.get_str()})}, {"approx", approx.str()}};
}

inline json render_machine(const Report& r)
{
    json out;
    out["command"] = r.command;
    out["inputs_digest"] = r.digest;
    out["results"] = r.results;
    out["warnings"] = r.warnings;
    return out;
}

namespace detail {

inline std::string scalar_text(const json& v)
{
    if (v.is_string()) {
        return v.get<std::string>();
    }
    if (v.is_object() && v.contains("enclosure")) {
        return "[" + v["enclosure"][0].get<std::string>() + ", " + v["enclosure"][1].get<std::string>() +
               "] (enclosure, ~" + v["approx"].get<std::string>() + ")";
    }
    return v.dump();
}

inline bool is_scalar(const json& v) { return !v.is_structured() || (v.is_object() && v.contains("enclosure")); }

inline void render_text_into(std::ostringstream& os, const json& v, int indent)
{
    const std::string pad(static_cast<std::size_t>(indent), ' ');
    for (const auto& [key, val] : v.items()) {
        if (is_scalar(val)) {
            os << pad << key << ": " << scalar_text(val) << '\n';
        } else if (val.is_array() && std::all_of(val.begin(), val.end(), [](const json& x) { return is_scalar(x); })) {
            os << pad << key << ": ";
            for (std::size_t i = 0; i < val.size(); ++i) {
                os << (i ? ", " : "") << scalar_text(val[i]);
            }
            os << '\n';
        } else {
            os << pad << key << ":\n";
            render_text_into(os, val, indent + 2);
        }
    }
}

} // namespace detail

inline std::string render_text(const Report& r)
{
    std::ostringstream os;
    os << "command: " << r.command << '\n';
    os << "inputs digest: " << r.digest << '\n';
    detail::render_text_into(os, r.results, 0);
    for (const auto& w : r.warnings) {
        os << "warning: " << w << '\n';
    }
    return os.str();
}

} // namespace hlab

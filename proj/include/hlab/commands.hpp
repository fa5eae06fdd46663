#pragma once

// One function per CLI subcommand. Each builds a Report in-process so the
// command layer is testable without spawning the binary.

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "bounds.hpp"
#include "document.hpp"
#include "genus.hpp"
#include "lefschetz.hpp"
#include "verify.hpp"

namespace hlab {

namespace detail {

inline Report start_report(const std::string& command, const InputDocument& doc)
{
    Report r;
    r.command = command;
    r.digest = input_digest(doc);
    r.warnings = doc.warnings;
    return r;
}

inline json rational_list(const std::vector<Rational>& v)
{
    json out = json::array();
    for (const auto& x : v) {
        out.push_back(x.get_str());
    }
    return out;
}

inline std::string not_applicable(const std::exception& e) { return std::string("not applicable: ") + e.what(); }

// "1,2,-1/3" -> rationals; whitespace around entries is ignored.
inline std::vector<Rational> parse_rational_list(const std::string& text)
{
    std::vector<Rational> out;
    std::stringstream ss(text);
    std::string item;
    std::size_t offset = 0;
    while (std::getline(ss, item, ',')) {
        const auto b = item.find_first_not_of(" \t");
        const auto e = item.find_last_not_of(" \t");
        if (b == std::string::npos) {
            throw parse_error("empty entry in list '" + text + "'", offset);
        }
        out.push_back(parse_rational(item.substr(b, e - b + 1)));
        offset += item.size() + 1;
    }
    if (out.empty()) {
        throw parse_error("empty list");
    }
    return out;
}

inline json interval_or_exact(const RationalInterval& iv) { return enclosure_json(iv); }

} // namespace detail

inline Report run_genus(const InputDocument& doc)
{
    Report r = detail::start_report("genus", doc);
    const ManifoldData& x = doc.require_manifold();
    const BundleData e = doc.bundle_or_trivial();
    r.results["td"] = todd_class(x).to_string();
    r.results["ch"] = chern_character(e).to_string();
    const auto chi = chi_y(x, e);
    r.results["chi_y"] = chi.to_string();
    json cp = json::object();
    for (int p = 0; p <= x.dimension(); ++p) {
        cp["chi^" + std::to_string(p)] = chi.coeff(p).get_str();
    }
    r.results["chi_p"] = cp;
    return r;
}

inline Report run_kcoeffs(const InputDocument& doc)
{
    Report r = detail::start_report("kcoeffs", doc);
    const ManifoldData& x = doc.require_manifold();
    const BundleData e = doc.bundle_or_trivial();
    const int n = x.dimension();
    const auto k = k_coefficients(chi_y_unchecked(x, e), n);
    json list = json::object();
    for (std::size_t j = 0; j < k.size(); ++j) {
        list["K_" + std::to_string(j)] = k[j].get_str();
    }
    r.results["K"] = list;
    const Rational k0 = Rational(e.rank) * integrate(x.chern.back(), x.fclass);
    r.results["K_0 = rank c_n"] = k[0] == k0 ? "holds" : "FAILS (expected " + k0.get_str() + ")";
    const Rational k1 = k1_closed_form(x, e);
    r.results["K_1 closed form"] = k[1] == k1 ? "holds" : "FAILS (expected " + k1.get_str() + ")";
    if (n == 2) {
        const Rational k2 = k2_surface_closed_form(x, e);
        r.results["K_2 surface formula"] = k[2] == k2 ? "holds" : "FAILS (expected " + k2.get_str() + ")";
    }
    return r;
}

inline Report run_hilbert(const InputDocument& doc, int p)
{
    Report r = detail::start_report("hilbert", doc);
    const auto P = hilbert_polynomial(doc.require_manifold(), doc.require_line_bundle(), p);
    r.results["p"] = p;
    r.results["P"] = P.to_string();
    return r;
}

inline Report run_ineq(const InputDocument& doc, std::optional<int> j)
{
    Report r = detail::start_report("ineq", doc);
    const ManifoldData& x = doc.require_manifold();
    const BundleData e = doc.bundle_or_trivial();
    const int lo = j ? *j : 0;
    const int hi = j ? *j : x.dimension();
    for (int jj = lo; jj <= hi; ++jj) {
        const auto c = chern_inequality_check(x, e, jj);
        r.results["j = " + std::to_string(jj)] = {
            {"lhs (-1)^(n+j) K_j", c.lhs.get_str()}, {"rhs", c.rhs.get_str()}, {"holds", c.holds}};
    }
    return r;
}

// --gammas overrides any curvature section in the document.
inline Report run_commutator(const InputDocument& doc, const std::optional<std::string>& gammas)
{
    InputDocument effective = doc;
    if (gammas) {
        effective.curvature = CurvatureSpec::diagonal(detail::parse_rational_list(*gammas));
    } else if (!doc.curvature) {
        throw error("commutator needs --gammas or a curvature section");
    }
    // The digest covers the curvature actually used.
    Report r = detail::start_report("commutator", effective);
    const std::optional<CurvatureSpec>& spec = effective.curvature;
    require_exterior_dims(spec->n(), spec->r());
    const auto rep = commutator_norm(*spec);
    r.results["C"] = detail::interval_or_exact(rep.C);
    r.results["exact"] = rep.exact;
    json table = json::object();
    for (const auto& [pq, v] : rep.table) {
        table["C_{" + std::to_string(pq.first) + "," + std::to_string(pq.second) + "}"] =
            detail::interval_or_exact(v);
    }
    r.results["table"] = table;
    if (spec->kind() == CurvatureSpec::Kind::Diagonal) {
        r.results["flat"] = flatness_test(*spec);
    }
    if (!rep.exact) {
        r.warnings.push_back("C is an enclosure from Hermitian eigenvalue isolation");
    }
    return r;
}

inline Report run_lefschetz_check(int n, int r)
{
    require_exterior_dims(n, r);
    Report rep;
    rep.command = "lefschetz-check";
    rep.digest = "none";

    const auto L = op_L(n, r);
    const auto Lam = op_Lambda(n, r);
    rep.results["adjoint (Lambda = L*)"] = L.adjoint() == Lam;
    const auto S = op_star(n, r);
    rep.results["star identity (Lambda = star^-1 L star)"] = S.monomial_inverse() * L * S == Lam;

    json sl2 = json::object();
    const auto mult = sl2_multipliers(n, r);
    bool sl2_ok = true;
    for (int k = 0; k <= 2 * n; ++k) {
        const auto& m = mult[static_cast<std::size_t>(k)];
        sl2["k = " + std::to_string(k)] = m ? m->get_str() : "not scalar";
        sl2_ok = sl2_ok && m && *m == n - k;
    }
    rep.results["[Lambda, L] multipliers"] = sl2;
    rep.results["[Lambda, L] = (n-k) id"] = sl2_ok;

    json inj = json::object();
    bool inj_ok = true;
    for (const auto& e : injectivity_scan(n, r)) {
        if (e.p + e.q > n - 1) {
            continue;
        }
        inj["(" + std::to_string(e.p) + "," + std::to_string(e.q) + ")"] =
            std::to_string(e.rank) + "/" + std::to_string(e.source_dimension) + (e.injective ? " injective" : " NOT injective");
        inj_ok = inj_ok && e.injective;
    }
    rep.results["L injective on (p,q), p+q <= n-1"] = inj;
    rep.results["injectivity holds"] = inj_ok;

    json power = json::object();
    bool hl_ok = true;
    for (int k = 0; k <= n; ++k) {
        const auto pw = lefschetz_power(n, r, k);
        power["L^" + std::to_string(n - k) + " on " + std::to_string(k) + "-forms"] = {
            {"rank", std::to_string(pw.rank) + "/" + std::to_string(pw.source_dimension)},
            {"bijective", pw.bijective},
            {"sigma_min", enclosure_json(pw.sigma_min)},
            {"sigma_max", enclosure_json(pw.sigma_max)}};
        hl_ok = hl_ok && pw.bijective;
    }
    rep.results["hard Lefschetz"] = power;
    rep.results["hard Lefschetz holds"] = hl_ok;
    return rep;
}

struct BoundsOptions {
    std::optional<int> p;
};

inline Report run_bounds(const InputDocument& doc, const BoundsOptions& opt = {})
{
    Report r = detail::start_report("bounds", doc);
    const ManifoldData& x = doc.require_manifold();
    const BundleData line = doc.require_line_bundle();
    const int n = x.dimension();
    const int p = opt.p ? *opt.p : doc.bounds.p.value_or(0);
    if (p < 0 || p > n) {
        throw error("bounds: p = " + std::to_string(p) + " out of range [0, n]");
    }
    if (!doc.bounds.K || !doc.bounds.c_n) {
        throw error("bounds needs K and c_n in the bounds section");
    }

    BoundsInput b;
    b.n = n;
    b.K = *doc.bounds.K;
    b.c_n = *doc.bounds.c_n;
    if (doc.bounds.C) {
        b.C = *doc.bounds.C;
    } else if (doc.curvature) {
        const auto rep = commutator_norm(*doc.curvature);
        b.C = rep.C.hi;
        if (!rep.exact) {
            r.warnings.push_back("C taken as the upper endpoint " + b.C.get_str() + " of its enclosure");
        }
    } else {
        throw error("bounds needs C or a curvature section");
    }
    b.a_n = integrate(power(line.chern[0], static_cast<unsigned>(n)), x.fclass);
    b.chi_p = chi_y(x, BundleData::trivial(x.spec, 1)).coefficients();
    b.chi_p.resize(static_cast<std::size_t>(n) + 1);
    b.validate();
    const MPolynomial P = hilbert_polynomial(x, line, p);

    json in = json::object();
    in["n"] = n;
    in["p"] = p;
    in["K"] = b.K.get_str();
    in["C"] = b.C.get_str();
    in["c_n"] = b.c_n.get_str();
    in["a_n"] = b.a_n.get_str();
    in["chi^p"] = b.chi_p[static_cast<std::size_t>(p)].get_str();
    in["P"] = P.to_string();
    r.results["inputs"] = in;

    try {
        r.results["T4"] = bound_T4(b).get_str();
    } catch (const error& e) {
        r.results["T4"] = detail::not_applicable(e);
    }
    if (n == 2) {
        try {
            r.results["T2"] = bound_T2(b, b.a_n).get_str();
        } catch (const error& e) {
            r.results["T2"] = detail::not_applicable(e);
        }
    }

    std::optional<RootReport> roots;
    try {
        roots = root_report(P, b.chi_p[static_cast<std::size_t>(p)]);
        json z = json::array();
        for (const auto& iv : roots->Z_p) {
            z.push_back(iv.exact ? json(iv.lo.get_str()) : enclosure_json(RationalInterval{iv.lo, iv.hi}));
        }
        r.results["roots of P - chi^p"] = {{"Z_p", z},
                                           {"m_p", roots->m_p.get_str()},
                                           {"C+", roots->C_plus.get_str()},
                                           {"C-", roots->C_minus.get_str()}};
    } catch (const error& e) {
        r.results["roots of P - chi^p"] = detail::not_applicable(e);
    }

    auto bound_json = [](const BoundValue& v) {
        return v.degenerate ? json(v.value.get_str() + " (degenerate: a_n = 0)") : json(v.value.get_str());
    };
    if (roots) {
        try {
            r.results["T5"] = bound_json(bound_T5(b, roots->m_p));
        } catch (const error& e) {
            r.results["T5"] = detail::not_applicable(e);
        }
        json c1 = json::object();
        for (const auto& [label, value] : {std::pair{"C+", roots->C_plus}, std::pair{"C-", roots->C_minus}}) {
            try {
                c1[label] = bound_json(bound_C1(b, value));
            } catch (const error& e) {
                c1[label] = detail::not_applicable(e);
            }
        }
        r.results["C1"] = c1;
    }

    try {
        const Rational chi = integrate(x.chern.back(), x.fclass);
        if (!is_integer(chi)) {
            throw error("Euler number " + chi.get_str() + " is not an integer");
        }
        const auto et = e_theta_interval(b, chi.get_num());
        r.results["e_theta"] = {{"lower", enclosure_json(et.lower)},
                                {"upper", enclosure_json(et.upper)},
                                {"consistent", et.consistent}};
        if (!et.consistent) {
            r.warnings.push_back("e_theta lower bound exceeds the upper bound; the curvature data is inconsistent");
        }
    } catch (const error& e) {
        r.results["e_theta"] = detail::not_applicable(e);
    }

    try {
        const auto ch = t4_chain(b, P, p);
        json t = json::object();
        t["N"] = ch.N.get_str();
        t["m_tilde"] = ch.m_tilde.get_str();
        t["P(m_tilde) - chi^p"] = ch.difference.get_str();
        t["bound"] = ch.bound.get_str();
        t["applies to"] = ch.untwisted ? "(-1)^(n-p) chi^p(X)" : "chi^p(X, L^m_tilde)";
        if (ch.degenerate) {
            t["degenerate"] = "N = 0";
        }
        r.results["t4_chain"] = t;
    } catch (const error& e) {
        r.results["t4_chain"] = detail::not_applicable(e);
    }
    return r;
}

// Returns the report plus whether every property held.
inline std::pair<Report, bool> run_verify()
{
    Report r;
    r.command = "verify";
    r.digest = "none";
    bool all = true;
    json suites = json::object();
    for (const auto& res : run_property_suite()) {
        all = all && res.passed;
        if (!suites.contains(res.suite)) {
            suites[res.suite] = json::object();
        }
        suites[res.suite][res.name] = res.passed ? "pass" : "FAIL: " + res.detail;
    }
    r.results["suites"] = suites;
    r.results["all passed"] = all;
    return {r, all};
}

} // namespace hlab

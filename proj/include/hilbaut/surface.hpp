#pragma once

#include <array>
#include <complex>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "cyclotomic.hpp"
#include "trace.hpp"

namespace hilbaut {

// Numerical cohomology of a compact complex surface, plus (optionally) one
// labeled twisted Hodge row (h^{0,0}, h^{1,0}, h^{2,0})(S, L) for a named L.
struct surface_spec {
    std::string name;
    std::array<long, 5> betti{1, 0, 0, 0, 1};
    std::optional<std::pair<std::string, std::array<long, 3>>> hodge_row;
};

using exact_spectrum = graded_eigenvalues<cyclotomic>;
using float_spectrum = graded_eigenvalues<std::complex<double>>;

// Graded spectrum of f* on H^0..H^4 together with the order of f. Exact
// (cyclotomic) eigenvalues for finite order, complex floats otherwise; the
// scalar kind is fixed per spec and mixing kinds is rejected at parse time.
struct automorphism_spec {
    surface_spec surface;
    std::optional<long> order; // nullopt = infinite order
    std::variant<exact_spectrum, float_spectrum> spectrum;
    bool symplectic_hint = false; // presets tagged symplectic get the eps1*eps2 = 1 warning check

    bool exact() const { return std::holds_alternative<exact_spectrum>(spectrum); }
    const exact_spectrum& exact_eigenvalues() const { return std::get<exact_spectrum>(spectrum); }
    const float_spectrum& float_eigenvalues() const { return std::get<float_spectrum>(spectrum); }
};

struct isolated_fixed_point {
    std::string label;
    cyclotomic eps1, eps2; // eigenvalues of df at the point
};

struct periodic_orbit {
    std::string label;
    long period = 2;
    bool isolated = true; // false: the orbit moves in a positive-dimensional family
};

// Fixed/periodic point inventory of f on the surface itself. Positive
// dimensional fixed curves of f are carried as opaque notes only.
struct local_fixed_datum {
    std::vector<isolated_fixed_point> isolated_points;
    std::vector<periodic_orbit> periodic_orbits;
    std::vector<std::string> curve_notes;
};

// One fully described input: automorphism spectrum plus local fixed data,
// with provenance notes surfaced in reports.
struct scenario {
    automorphism_spec spec;
    local_fixed_datum fixed;
    std::string preset_name; // nonempty when built by preset()
    std::vector<std::string> notes;
};

inline std::vector<std::string> preset_names() {
    return {"k3-identity",      "k3-symplectic-3", "k3-symplectic-5",
            "k3-symplectic-7",  "torus-identity",  "torus-involution"};
}

namespace detail {

inline scenario k3_identity_preset() {
    scenario s;
    s.preset_name = "k3-identity";
    s.spec.surface.name = "K3";
    s.spec.surface.betti = {1, 0, 22, 0, 1};
    s.spec.surface.hodge_row = {{"canonical-dual", {1, 0, 1}}};
    s.spec.order = 1;
    exact_spectrum e;
    e.by_degree.resize(5);
    e.by_degree[0].assign(1, cyclotomic(1));
    e.by_degree[2].assign(22, cyclotomic(1));
    e.by_degree[4].assign(1, cyclotomic(1));
    s.spec.spectrum = std::move(e);
    s.fixed.curve_notes = {"identity: the whole surface is fixed (no isolated points)"};
    s.notes = {"hodge_row canonical-dual: the anticanonical twist row; the canonical bundle is "
               "trivial here so it equals the trivial row (1,0,1)"};
    return s;
}

inline scenario torus_identity_preset() {
    scenario s;
    s.preset_name = "torus-identity";
    s.spec.surface.name = "complex torus";
    s.spec.surface.betti = {1, 4, 6, 4, 1};
    s.spec.surface.hodge_row = {{"canonical-dual", {1, 2, 1}}};
    s.spec.order = 1;
    exact_spectrum e;
    e.by_degree.resize(5);
    for (int d = 0; d <= 4; ++d)
        e.by_degree[d].assign(s.spec.surface.betti[d], cyclotomic(1));
    s.spec.spectrum = std::move(e);
    s.fixed.curve_notes = {"identity: the whole surface is fixed (no isolated points)"};
    s.notes = {"hodge_row canonical-dual: the anticanonical twist row; the canonical bundle is "
               "trivial here so it equals the trivial row (1,2,1)"};
    return s;
}

inline scenario torus_involution_preset() {
    scenario s;
    s.preset_name = "torus-involution";
    s.spec.surface.name = "complex torus";
    s.spec.surface.betti = {1, 4, 6, 4, 1};
    s.spec.surface.hodge_row = {{"canonical-dual", {1, 2, 1}}};
    s.spec.order = 2;
    const cyclotomic minus_one(-1), one(1);
    exact_spectrum e;
    e.by_degree.resize(5);
    e.by_degree[0].assign(1, one);
    e.by_degree[1].assign(4, minus_one);
    e.by_degree[2].assign(6, one);
    e.by_degree[3].assign(4, minus_one);
    e.by_degree[4].assign(1, one);
    s.spec.spectrum = std::move(e);
    for (int k = 0; k < 16; ++k)
        s.fixed.isolated_points.push_back(
            {"half-period-" + std::string(1, char('a' + k)), minus_one, minus_one});
    s.fixed.periodic_orbits.push_back(
        {"generic antipodal pair family (closure resolves to the Kummer surface, Euler "
         "characteristic 24)",
         2, false});
    s.notes = {"the 16 isolated fixed points are the half-periods, each with local eigenvalues "
               "(-1, -1)",
               "every non-fixed point lies on a moving 2-periodic orbit; the family marker "
               "stands for that 2-parameter family"};
    return s;
}

inline scenario k3_symplectic_preset(int p) {
    // invariant/moving multiplicities on H^2 and isolated fixed point counts
    // for the three symplectic prime orders
    long a = 0, b = 0, m = 0;
    if (p == 3) {
        a = 10; b = 6; m = 6;
    } else if (p == 5) {
        a = 6; b = 4; m = 4;
    } else if (p == 7) {
        a = 4; b = 3; m = 3;
    }
    scenario s;
    s.preset_name = "k3-symplectic-" + std::to_string(p);
    s.spec.surface.name = "K3";
    s.spec.surface.betti = {1, 0, 22, 0, 1};
    s.spec.surface.hodge_row = {{"canonical-dual", {1, 0, 1}}};
    s.spec.order = p;
    s.spec.symplectic_hint = true;
    exact_spectrum e;
    e.by_degree.resize(5);
    e.by_degree[0].assign(1, cyclotomic(1));
    e.by_degree[2].assign(a, cyclotomic(1));
    for (int k = 1; k < p; ++k)
        for (long j = 0; j < b; ++j)
            e.by_degree[2].push_back(cyclotomic::root_of_unity(p, k));
    e.by_degree[4].assign(1, cyclotomic(1));
    s.spec.spectrum = std::move(e);
    for (long k = 0; k < m; ++k)
        s.fixed.isolated_points.push_back({"fp-" + std::to_string(k + 1),
                                           cyclotomic::root_of_unity(p, 1),
                                           cyclotomic::root_of_unity(p, p - 1)});
    s.notes = {"local pairs are set uniformly to (zeta_p, zeta_p^-1); the published data does "
               "not pin how exponent types distribute over the " +
                   std::to_string(m) + " points, so alternatives can be fed in via fixed_data",
               "no periodic-orbit inventory is published for these automorphisms; orbits are "
               "omitted (they would first matter at n >= " + std::to_string(p) + ")"};
    if (p == 5)
        s.notes.push_back(
            "published reference count for isolated fixed points at n = 3 is 36, with the four "
            "(1,1,1) monomial triples called degenerate; the exact tangent computation here "
            "disagrees, so reports show both figures");
    return s;
}

} // namespace detail

// Shipped example data sets. Unknown names throw std::invalid_argument.
inline scenario preset(std::string_view name) {
    if (name == "k3-identity")
        return detail::k3_identity_preset();
    if (name == "torus-identity")
        return detail::torus_identity_preset();
    if (name == "torus-involution")
        return detail::torus_involution_preset();
    if (name == "k3-symplectic-3")
        return detail::k3_symplectic_preset(3);
    if (name == "k3-symplectic-5")
        return detail::k3_symplectic_preset(5);
    if (name == "k3-symplectic-7")
        return detail::k3_symplectic_preset(7);
    throw std::invalid_argument("unknown preset '" + std::string(name) + "'");
}

// Structural validation. Violations are data, not exceptions; an empty list
// means every invariant holds.
inline std::vector<std::string> validate(const automorphism_spec& spec) {
    std::vector<std::string> out;
    const auto& b = spec.surface.betti;
    for (int i = 0; i <= 4; ++i)
        if (b[i] < 0)
            out.push_back("betti: b" + std::to_string(i) + " is negative");
    if (b[0] != 1 || b[4] != 1)
        out.push_back("betti: b0 and b4 must be 1 for a connected compact surface");
    if (b[1] != b[3])
        out.push_back("betti: b1 != b3 violates Poincare duality");
    if (spec.surface.hodge_row) {
        for (long h : spec.surface.hodge_row->second)
            if (h < 0)
                out.push_back("hodge_row: entries must be non-negative");
    }
    if (spec.order && *spec.order < 1)
        out.push_back("order: must be a positive integer (or absent for infinite)");

    const auto check_sizes = [&](const auto& eig) {
        if (eig.by_degree.size() > 5)
            out.push_back("spectrum: degrees beyond H^4 are not part of a surface");
        for (int d = 0; d <= 4; ++d) {
            const long have = eig.dimension_at(d);
            if (have != b[d])
                out.push_back("spectrum: degree " + std::to_string(d) + " lists " +
                              std::to_string(have) + " eigenvalues but b" + std::to_string(d) +
                              " = " + std::to_string(b[d]));
        }
    };
    if (spec.exact()) {
        const auto& eig = spec.exact_eigenvalues();
        check_sizes(eig);
        for (std::size_t d = 0; d < eig.by_degree.size(); ++d)
            for (const cyclotomic& lam : eig.by_degree[d]) {
                const auto ord = lam.root_order();
                if (!ord) {
                    out.push_back("spectrum: degree " + std::to_string(d) +
                                  " eigenvalue " + lam.str() + " is not a root of unity");
                    continue;
                }
                if (spec.order && *spec.order % *ord != 0)
                    out.push_back("spectrum: degree " + std::to_string(d) + " eigenvalue " +
                                  lam.str() + " has order " + std::to_string(*ord) +
                                  ", which does not divide the automorphism order " +
                                  std::to_string(*spec.order));
            }
        if (eig.dimension_at(0) == 1 && !(eig.by_degree[0][0] == cyclotomic(1)))
            out.push_back("spectrum: H^0 eigenvalue must be 1");
    } else {
        check_sizes(spec.float_eigenvalues());
        if (spec.order)
            out.push_back("spectrum: finite order requires exact (root-of-unity) eigenvalues");
    }
    return out;
}

inline std::vector<std::string> validate(const scenario& sc) {
    std::vector<std::string> out = validate(sc.spec);
    for (const auto& fp : sc.fixed.isolated_points) {
        const auto o1 = fp.eps1.root_order(), o2 = fp.eps2.root_order();
        if (!o1 || !o2) {
            out.push_back("fixed_data: point '" + fp.label +
                          "' has a local eigenvalue that is not a root of unity");
            continue;
        }
        if (sc.spec.order && (*sc.spec.order % *o1 != 0 || *sc.spec.order % *o2 != 0))
            out.push_back("fixed_data: point '" + fp.label +
                          "' local eigenvalue order does not divide the automorphism order");
        if (fp.eps1 == cyclotomic(1) || fp.eps2 == cyclotomic(1))
            out.push_back("fixed_data: point '" + fp.label +
                          "' has local eigenvalue 1, so it is not an isolated fixed point");
    }
    for (const auto& orb : sc.fixed.periodic_orbits) {
        if (orb.period < 2)
            out.push_back("fixed_data: orbit '" + orb.label + "' must have period >= 2");
        else if (sc.spec.order && *sc.spec.order % orb.period != 0)
            out.push_back("fixed_data: orbit '" + orb.label + "' period " +
                          std::to_string(orb.period) + " does not divide the automorphism order");
    }
    return out;
}

// Soft checks: likely data-entry mistakes that do not invalidate a spec.
inline std::vector<std::string> validation_warnings(const scenario& sc) {
    std::vector<std::string> out;
    if (sc.spec.symplectic_hint)
        for (const auto& fp : sc.fixed.isolated_points)
            if (!(fp.eps1 * fp.eps2 == cyclotomic(1)))
                out.push_back("symplectic automorphism expected eps1*eps2 = 1 at point '" +
                              fp.label + "'");
    return out;
}

// Alternating sum of eigenvalues over all degrees (the weight-1 Lefschetz
// number of the induced tower). Exact spectra only.
inline cyclotomic lefschetz_on_surface(const automorphism_spec& spec) {
    if (!spec.exact())
        throw std::invalid_argument("lefschetz_on_surface: needs an exact spectrum");
    cyclotomic acc;
    const auto& eig = spec.exact_eigenvalues();
    for (std::size_t d = 0; d < eig.by_degree.size(); ++d)
        for (const cyclotomic& lam : eig.by_degree[d])
            acc = (d % 2 == 0) ? acc + lam : acc - lam;
    return acc;
}

} // namespace hilbaut

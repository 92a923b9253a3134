#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "errors.hpp"
#include "fock.hpp"
#include "surface.hpp"
#include "tangent.hpp"

namespace hilbaut {

enum class component_kind {
    reduced_assembly,
    monomial_thick,
    curvilinear_family,
    periodic_orbit_family,
    thick_orbit_family,
};

inline const char* component_kind_name(component_kind k) {
    switch (k) {
    case component_kind::reduced_assembly: return "reduced-assembly";
    case component_kind::monomial_thick: return "monomial-thick";
    case component_kind::curvilinear_family: return "curvilinear-family";
    case component_kind::periodic_orbit_family: return "periodic-orbit-family";
    case component_kind::thick_orbit_family: return "thick-orbit-family";
    }
    return "?";
}

// One part of a disjoint-support assembly.
struct assembly_piece {
    enum class type { reduced, monomial, curvilinear, orbit, thick_orbit };
    type t = type::reduced;
    std::string support;        // fixed point / orbit label
    int length = 1;             // contribution to n
    partition parts;            // monomial pieces
    std::string axis;           // curvilinear: "xy", "yx", or "all" (eps1 = eps2)
    std::vector<int> exponents; // curvilinear: admissible jet exponents
    int thick_length = 0;       // thick orbits: punctual length at each orbit point
    int dimension = 0;          // of the family this piece contributes

    std::string describe() const {
        switch (t) {
        case type::reduced:
            return "reduced " + support;
        case type::monomial:
            return "monomial " + partition_str(parts) + " at " + support;
        case type::curvilinear: {
            std::string e;
            for (std::size_t i = 0; i < exponents.size(); ++i)
                e += (i ? "," : "") + std::to_string(exponents[i]);
            return "curvilinear length " + std::to_string(length) + " axis " + axis +
                   " exponents {" + e + "} at " + support;
        }
        case type::orbit:
            return "reduced orbit " + support;
        case type::thick_orbit:
            return "thick orbit (punctual length " + std::to_string(thick_length) + ") " +
                   support;
        }
        return "?";
    }
};

struct fixed_component {
    component_kind kind = component_kind::reduced_assembly;
    std::vector<assembly_piece> pieces;
    int dimension = 0;            // sum over pieces
    bool degenerate = false;      // weight 1 in the union (0-dimensional case)
    long fixed_subspace_dim = 0;  // multiplicity of weight 1
    std::vector<cyclotomic> weights; // union over pieces, when known in full
    bool weights_complete = false;
    std::string description;
};

struct lefschetz_crosscheck {
    long long lefschetz = 0;
    long long isolated_nondegenerate = 0;
    long long remainder = 0; // lefschetz - isolated_nondegenerate
    bool reconciled = false;
    std::vector<std::string> notes;
};

struct fixed_locus_report {
    int n = 0;
    std::vector<fixed_component> components;
    long long isolated_nondegenerate_count = 0;
    lefschetz_crosscheck crosscheck;
    std::vector<std::string> notes;
};

namespace detail {

struct slot_option {
    assembly_piece piece;
    bool used = true; // false marks the skip option
    bool weights_known = false;
    bool piece_degenerate = false;
    long piece_fixed_dim = 0;
    std::vector<cyclotomic> piece_weights;
};

} // namespace detail

// Enumerates the fixed-locus components of the induced map on the length-n
// point scheme: all disjoint-support assemblies of reduced fixed points,
// monomial thick points, fixed curvilinear families, listed periodic orbits,
// and orbits of thick points. For 0-dimensional assemblies the tangent
// weights are the disjoint union over the parts, and nondegeneracy means no
// weight equals 1. The report cross-checks the isolated nondegenerate count
// against the alternating-trace value; positive-dimensional components
// contribute their (uncomputed) Euler characteristics to the remainder.
inline fixed_locus_report enumerate_fixed_components(const local_fixed_datum& datum, int n,
                                                     const automorphism_spec& spec,
                                                     int bound = 6) {
    if (n < 1)
        throw std::invalid_argument("enumerate_fixed_components: n must be >= 1");
    if (n > bound)
        throw bound_error("enumerate_fixed_components: n = " + std::to_string(n) +
                          " exceeds the assembly bound " + std::to_string(bound) +
                          " (raise it explicitly to proceed)");
    if (!spec.order)
        throw validation_error("enumerate_fixed_components: automorphism must have finite order");
    {
        scenario sc;
        sc.spec = spec;
        sc.fixed = datum;
        const auto violations = validate(sc);
        if (!violations.empty()) {
            std::string msg = "enumerate_fixed_components: invalid input:";
            for (const auto& v : violations)
                msg += "\n  - " + v;
            throw validation_error(msg);
        }
    }

    fixed_locus_report rep;
    rep.n = n;

    // tangent weights per (partition, local pair), shared across points
    std::map<std::tuple<partition, cyclotomic, cyclotomic>, tangent_weight_report> cache;
    const auto weights_of = [&](const partition& p, const cyclotomic& e1,
                                const cyclotomic& e2) -> const tangent_weight_report& {
        const auto key = std::make_tuple(p, e1, e2);
        auto it = cache.find(key);
        if (it == cache.end())
            it = cache.emplace(key, monomial_tangent_weights(p, e1, e2)).first;
        return it->second;
    };

    // per-slot option lists (slot = one fixed point or one listed orbit)
    std::vector<std::vector<detail::slot_option>> slots;
    bool merged_axes_note = false, suppressed_thick_orbit_note = false;

    for (const auto& fp : datum.isolated_points) {
        std::vector<detail::slot_option> opts;
        opts.push_back({{}, false, false, false, 0, {}});
        {
            detail::slot_option red;
            red.piece = {assembly_piece::type::reduced, fp.label, 1, {}, "", {}, 0, 0};
            red.weights_known = true;
            red.piece_weights = {fp.eps1, fp.eps2};
            for (const auto& w : red.piece_weights)
                if (w == cyclotomic(1)) {
                    red.piece_degenerate = true;
                    ++red.piece_fixed_dim;
                }
            opts.push_back(std::move(red));
        }
        for (int len = 2; len <= n; ++len) {
            for (const partition& p : partitions_of(len)) {
                detail::slot_option mono;
                mono.piece = {assembly_piece::type::monomial, fp.label, len, p, "", {}, 0, 0};
                const auto& tw = weights_of(p, fp.eps1, fp.eps2);
                mono.weights_known = true;
                mono.piece_weights = tw.weights;
                mono.piece_degenerate = tw.degenerate;
                mono.piece_fixed_dim = tw.fixed_subspace_dim;
                opts.push_back(std::move(mono));
            }
            std::vector<int> allowed_x, allowed_y;
            for (const auto& hit : curvilinear_fixed_directions(len, fp.eps1, fp.eps2))
                (hit.axis == curvilinear_axis::xy ? allowed_x : allowed_y)
                    .push_back(hit.exponent);
            if (fp.eps1 == fp.eps2) {
                // the two axis families share their generic members (invert the
                // leading jet coefficient), so they form a single family
                if (!allowed_x.empty()) {
                    detail::slot_option fam;
                    fam.piece = {assembly_piece::type::curvilinear, fp.label, len, {},
                                 "all",  allowed_x, 0, static_cast<int>(allowed_x.size())};
                    opts.push_back(std::move(fam));
                    merged_axes_note = true;
                }
            } else {
                if (!allowed_x.empty()) {
                    detail::slot_option fam;
                    fam.piece = {assembly_piece::type::curvilinear, fp.label, len, {},
                                 "xy",   allowed_x, 0, static_cast<int>(allowed_x.size())};
                    opts.push_back(std::move(fam));
                }
                if (!allowed_y.empty()) {
                    detail::slot_option fam;
                    fam.piece = {assembly_piece::type::curvilinear, fp.label, len, {},
                                 "yx",   allowed_y, 0, static_cast<int>(allowed_y.size())};
                    opts.push_back(std::move(fam));
                }
            }
        }
        slots.push_back(std::move(opts));
    }

    for (const auto& orb : datum.periodic_orbits) {
        std::vector<detail::slot_option> opts;
        opts.push_back({{}, false, false, false, 0, {}});
        const int period = static_cast<int>(orb.period);
        if (period <= n) {
            detail::slot_option red;
            red.piece = {assembly_piece::type::orbit, orb.label, period, {}, "", {}, 0,
                         orb.isolated ? 0 : 2};
            // the union of a reduced periodic orbit has dim ker(T - id) = 2
            red.piece_degenerate = true;
            red.piece_fixed_dim = 2;
            opts.push_back(std::move(red));
        }
        if (spec.order && period == *spec.order) {
            // f^period = id fixes every punctual ideal at the orbit points, so
            // orbits of thick points of length l form families of dimension
            // l - 1 (the punctual Hilbert scheme), plus 2 if the orbit moves
            for (int l = 2; l * period <= n; ++l) {
                detail::slot_option th;
                th.piece = {assembly_piece::type::thick_orbit, orb.label, l * period, {}, "",
                            {},   l,
                            (l - 1) + (orb.isolated ? 0 : 2)};
                th.piece_degenerate = true; // contains the reduced-orbit degeneracy
                opts.push_back(std::move(th));
            }
        } else if (2 * period <= n) {
            suppressed_thick_orbit_note = true;
        }
        slots.push_back(std::move(opts));
    }

    // depth-first walk over slot assignments with total length n
    std::vector<const detail::slot_option*> chosen;
    const auto emit = [&]() {
        fixed_component comp;
        bool any_thick_orbit = false, any_orbit = false, any_curv = false, any_mono = false;
        bool all_weights = true;
        for (const detail::slot_option* o : chosen) {
            comp.pieces.push_back(o->piece);
            comp.dimension += o->piece.dimension;
            comp.fixed_subspace_dim += o->piece_fixed_dim;
            if (o->piece_degenerate)
                comp.degenerate = true;
            if (o->weights_known)
                comp.weights.insert(comp.weights.end(), o->piece_weights.begin(),
                                    o->piece_weights.end());
            else
                all_weights = false;
            switch (o->piece.t) {
            case assembly_piece::type::thick_orbit: any_thick_orbit = true; break;
            case assembly_piece::type::orbit: any_orbit = true; break;
            case assembly_piece::type::curvilinear: any_curv = true; break;
            case assembly_piece::type::monomial: any_mono = true; break;
            case assembly_piece::type::reduced: break;
            }
        }
        comp.weights_complete = all_weights;
        if (!all_weights)
            comp.weights.clear();
        comp.kind = any_thick_orbit ? component_kind::thick_orbit_family
                    : any_orbit     ? component_kind::periodic_orbit_family
                    : any_curv      ? component_kind::curvilinear_family
                    : any_mono      ? component_kind::monomial_thick
                                    : component_kind::reduced_assembly;
        std::sort(comp.weights.begin(), comp.weights.end());
        for (std::size_t i = 0; i < comp.pieces.size(); ++i)
            comp.description += (i ? " + " : "") + comp.pieces[i].describe();
        if (comp.dimension == 0 && !comp.degenerate)
            ++rep.isolated_nondegenerate_count;
        rep.components.push_back(std::move(comp));
    };
    const auto dfs = [&](auto&& self, std::size_t slot, int remaining) -> void {
        if (slot == slots.size()) {
            if (remaining == 0 && !chosen.empty())
                emit();
            return;
        }
        for (const detail::slot_option& o : slots[slot]) {
            if (!o.used) {
                self(self, slot + 1, remaining);
                continue;
            }
            if (o.piece.length > remaining)
                continue;
            chosen.push_back(&o);
            self(self, slot + 1, remaining - o.piece.length);
            chosen.pop_back();
        }
    };
    dfs(dfs, 0, n);

    std::sort(rep.components.begin(), rep.components.end(),
              [](const fixed_component& a, const fixed_component& b) {
                  return a.description < b.description;
              });

    rep.crosscheck.lefschetz = lefschetz_number(spec, n);
    rep.crosscheck.isolated_nondegenerate = rep.isolated_nondegenerate_count;
    rep.crosscheck.remainder = rep.crosscheck.lefschetz - rep.isolated_nondegenerate_count;
    rep.crosscheck.reconciled = rep.crosscheck.remainder == 0;
    bool any_positive = false, any_degenerate = false;
    for (const auto& c : rep.components) {
        any_positive = any_positive || c.dimension > 0;
        any_degenerate = any_degenerate || (c.dimension == 0 && c.degenerate);
    }
    if (!rep.crosscheck.reconciled) {
        if (any_positive)
            rep.crosscheck.notes.push_back(
                "positive-dimensional components contribute their Euler characteristics to the "
                "alternating-trace value; those are not computed here, so the remainder is "
                "expected to be absorbed by them");
        else
            rep.crosscheck.notes.push_back(
                "no positive-dimensional components were found, so a nonzero remainder signals "
                "missing or inconsistent local fixed data");
    }
    if (any_degenerate)
        rep.notes.push_back("degenerate 0-dimensional entries (tangent weight 1 present) are "
                            "excluded from the isolated count; whether they lie on "
                            "positive-dimensional components is not decided here");
    if (merged_axes_note)
        rep.notes.push_back("eps1 = eps2 at some point: the xy and yx jet families coincide up "
                            "to inverting the leading coefficient and are reported once with "
                            "axis 'all'");
    if (suppressed_thick_orbit_note)
        rep.notes.push_back("orbits of thick points are enumerated only for orbits whose period "
                            "equals the automorphism order (otherwise invariance of the local "
                            "ideal depends on eigenvalue data at orbit points, which the input "
                            "does not carry)");
    return rep;
}

} // namespace hilbaut

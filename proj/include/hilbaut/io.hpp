#pragma once

#include <complex>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "errors.hpp"
#include "fixed_locus.hpp"
#include "fock.hpp"
#include "surface.hpp"

namespace hilbaut {

using json = nlohmann::ordered_json;

namespace detail {

inline cyclotomic parse_root_pair(const json& j, const std::string& field) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer())
        throw parse_error(field + ": expected a root-of-unity pair [k, m]");
    const long k = j[0].get<long>(), m = j[1].get<long>();
    if (m < 1)
        throw parse_error(field + ": root-of-unity order m must be >= 1");
    return cyclotomic::root_of_unity(m, k);
}

inline std::complex<double> parse_float_pair(const json& j, const std::string& field) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw parse_error(field + ": expected a complex pair [re, im]");
    return {j[0].get<double>(), j[1].get<double>()};
}

inline int parse_degree_key(const std::string& key) {
    if (key.size() == 1 && key[0] >= '0' && key[0] <= '4')
        return key[0] - '0';
    throw parse_error("automorphism.spectrum: degree key '" + key + "' must be one of 0..4");
}

} // namespace detail

// Builds a scenario from an explicit input document (surface / automorphism /
// fixed_data sections). Presets are not resolved here; see parse_scenario.
inline scenario parse_explicit_scenario(const json& j) {
    scenario sc;
    for (const auto& [key, _] : j.items())
        if (key != "surface" && key != "automorphism" && key != "fixed_data" && key != "notes")
            throw parse_error("unknown top-level field '" + key + "'");

    if (!j.contains("surface") || !j["surface"].is_object())
        throw parse_error("input needs a 'surface' object (or a 'preset' name)");
    const json& s = j["surface"];
    for (const auto& [key, _] : s.items())
        if (key != "betti" && key != "hodge_row" && key != "name")
            throw parse_error("surface: unknown field '" + key + "'");
    if (s.contains("name"))
        sc.spec.surface.name = s["name"].get<std::string>();
    if (!s.contains("betti") || !s["betti"].is_array() || s["betti"].size() != 5)
        throw parse_error("surface.betti: expected an array of 5 integers");
    for (int i = 0; i < 5; ++i) {
        if (!s["betti"][i].is_number_integer())
            throw parse_error("surface.betti: entries must be integers");
        sc.spec.surface.betti[i] = s["betti"][i].get<long>();
    }
    if (s.contains("hodge_row")) {
        if (!s["hodge_row"].is_object() || s["hodge_row"].size() != 1)
            throw parse_error("surface.hodge_row: expected exactly one {label: [h00,h10,h20]}");
        for (const auto& [label, triple] : s["hodge_row"].items()) {
            if (!triple.is_array() || triple.size() != 3)
                throw parse_error("surface.hodge_row." + label + ": expected [h00, h10, h20]");
            std::array<long, 3> row{};
            for (int i = 0; i < 3; ++i) {
                if (!triple[i].is_number_integer())
                    throw parse_error("surface.hodge_row." + label + ": entries must be integers");
                row[i] = triple[i].get<long>();
            }
            sc.spec.surface.hodge_row = {{label, row}};
        }
    }

    if (!j.contains("automorphism") || !j["automorphism"].is_object())
        throw parse_error("input needs an 'automorphism' object");
    const json& a = j["automorphism"];
    for (const auto& [key, _] : a.items())
        if (key != "order" && key != "spectrum" && key != "symplectic")
            throw parse_error("automorphism: unknown field '" + key + "'");
    bool finite = false;
    if (a.contains("order") && !a["order"].is_null()) {
        if (!a["order"].is_number_integer())
            throw parse_error("automorphism.order: expected an integer (0 or null = infinite)");
        const long ord = a["order"].get<long>();
        if (ord < 0)
            throw parse_error("automorphism.order: must be >= 0");
        if (ord > 0) {
            sc.spec.order = ord;
            finite = true;
        }
    }
    if (a.contains("symplectic")) {
        if (!a["symplectic"].is_boolean())
            throw parse_error("automorphism.symplectic: expected a boolean");
        sc.spec.symplectic_hint = a["symplectic"].get<bool>();
    }
    if (!a.contains("spectrum") || !a["spectrum"].is_object())
        throw parse_error("automorphism.spectrum: expected {degree: [eigenvalues]}");
    if (finite) {
        exact_spectrum e;
        e.by_degree.resize(5);
        for (const auto& [key, list] : a["spectrum"].items()) {
            const int d = detail::parse_degree_key(key);
            if (!list.is_array())
                throw parse_error("automorphism.spectrum." + key + ": expected an array");
            for (const auto& item : list)
                e.by_degree[d].push_back(
                    detail::parse_root_pair(item, "automorphism.spectrum." + key));
        }
        sc.spec.spectrum = std::move(e);
    } else {
        float_spectrum e;
        e.by_degree.resize(5);
        for (const auto& [key, list] : a["spectrum"].items()) {
            const int d = detail::parse_degree_key(key);
            if (!list.is_array())
                throw parse_error("automorphism.spectrum." + key + ": expected an array");
            for (const auto& item : list)
                e.by_degree[d].push_back(
                    detail::parse_float_pair(item, "automorphism.spectrum." + key));
        }
        sc.spec.spectrum = std::move(e);
    }

    if (j.contains("fixed_data")) {
        const json& f = j["fixed_data"];
        if (!f.is_object())
            throw parse_error("fixed_data: expected an object");
        for (const auto& [key, _] : f.items())
            if (key != "isolated" && key != "orbits" && key != "curves")
                throw parse_error("fixed_data: unknown field '" + key + "'");
        if (f.contains("isolated")) {
            if (!f["isolated"].is_array())
                throw parse_error("fixed_data.isolated: expected an array");
            long auto_label = 0;
            for (const auto& item : f["isolated"]) {
                if (!item.is_object() || !item.contains("eps1") || !item.contains("eps2"))
                    throw parse_error("fixed_data.isolated: entries need eps1 and eps2");
                for (const auto& [key, _] : item.items())
                    if (key != "eps1" && key != "eps2" && key != "label")
                        throw parse_error("fixed_data.isolated: unknown field '" + key + "'");
                isolated_fixed_point fp;
                fp.label = item.contains("label") ? item["label"].get<std::string>()
                                                  : "p" + std::to_string(++auto_label);
                fp.eps1 = detail::parse_root_pair(item["eps1"], "fixed_data.isolated.eps1");
                fp.eps2 = detail::parse_root_pair(item["eps2"], "fixed_data.isolated.eps2");
                sc.fixed.isolated_points.push_back(std::move(fp));
            }
        }
        if (f.contains("orbits")) {
            if (!f["orbits"].is_array())
                throw parse_error("fixed_data.orbits: expected an array");
            long auto_label = 0;
            for (const auto& item : f["orbits"]) {
                if (!item.is_object() || !item.contains("period"))
                    throw parse_error("fixed_data.orbits: entries need a period");
                for (const auto& [key, _] : item.items())
                    if (key != "period" && key != "isolated" && key != "label")
                        throw parse_error("fixed_data.orbits: unknown field '" + key + "'");
                periodic_orbit orb;
                orb.label = item.contains("label") ? item["label"].get<std::string>()
                                                   : "orbit" + std::to_string(++auto_label);
                if (!item["period"].is_number_integer())
                    throw parse_error("fixed_data.orbits.period: expected an integer");
                orb.period = item["period"].get<long>();
                if (item.contains("isolated")) {
                    if (!item["isolated"].is_boolean())
                        throw parse_error("fixed_data.orbits.isolated: expected a boolean");
                    orb.isolated = item["isolated"].get<bool>();
                }
                sc.fixed.periodic_orbits.push_back(std::move(orb));
            }
        }
        if (f.contains("curves")) {
            if (!f["curves"].is_array())
                throw parse_error("fixed_data.curves: expected an array of strings");
            for (const auto& item : f["curves"])
                sc.fixed.curve_notes.push_back(item.get<std::string>());
        }
    }
    if (j.contains("notes")) {
        if (!j["notes"].is_array())
            throw parse_error("notes: expected an array of strings");
        for (const auto& item : j["notes"])
            sc.notes.push_back(item.get<std::string>());
    }
    return sc;
}

// Accepts either {"preset": name} or an explicit document.
inline scenario parse_scenario(const json& j) {
    if (!j.is_object())
        throw parse_error("input document must be a JSON object");
    if (j.contains("preset")) {
        if (j.size() != 1)
            throw parse_error("'preset' must be the only field when present");
        if (!j["preset"].is_string())
            throw parse_error("preset: expected a string");
        try {
            return preset(j["preset"].get<std::string>());
        } catch (const std::invalid_argument& e) {
            throw parse_error(e.what());
        }
    }
    return parse_explicit_scenario(j);
}

inline scenario parse_scenario_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("input is not valid JSON: ") + e.what());
    }
    return parse_scenario(j);
}

inline scenario load_scenario_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw parse_error("cannot open input file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_scenario_text(buf.str());
}

// Renders a cyclotomic value with every representation a consumer may want:
// exact power-basis string, float approximation, and (when applicable) the
// root-of-unity pair. Integers additionally carry an "integer" field.
inline json cyc_to_json(const cyclotomic& c) {
    json out;
    out["exact"] = c.str();
    const auto z = c.approx();
    out["approx"] = json::array({z.real(), z.imag()});
    if (const auto root = c.as_root_of_unity())
        out["root"] = json::array({root->first, root->second});
    if (const auto iv = cyc_as_integer(c))
        out["integer"] = *iv;
    return out;
}

inline json root_pair_json(const cyclotomic& c, const std::string& what) {
    const auto root = c.as_root_of_unity();
    if (!root)
        throw validation_error(what + ": value " + c.str() +
                               " is not a root of unity and cannot be serialized as [k, m]");
    return json::array({root->first, root->second});
}

// Serializes a scenario back into the input document format (fully expanded,
// so re-parsing it reproduces the same computation without preset lookup).
inline json scenario_to_json(const scenario& sc) {
    json j;
    json s;
    if (!sc.spec.surface.name.empty())
        s["name"] = sc.spec.surface.name;
    s["betti"] = sc.spec.surface.betti;
    if (sc.spec.surface.hodge_row) {
        json row;
        row[sc.spec.surface.hodge_row->first] = sc.spec.surface.hodge_row->second;
        s["hodge_row"] = std::move(row);
    }
    j["surface"] = std::move(s);

    json a;
    a["order"] = sc.spec.order ? json(*sc.spec.order) : json(nullptr);
    if (sc.spec.symplectic_hint)
        a["symplectic"] = true;
    json spectrum = json::object();
    if (sc.spec.exact()) {
        const auto& e = sc.spec.exact_eigenvalues();
        for (std::size_t d = 0; d < e.by_degree.size(); ++d) {
            if (e.by_degree[d].empty())
                continue;
            json list = json::array();
            for (const cyclotomic& lam : e.by_degree[d])
                list.push_back(root_pair_json(lam, "spectrum"));
            spectrum[std::to_string(d)] = std::move(list);
        }
    } else {
        const auto& e = sc.spec.float_eigenvalues();
        for (std::size_t d = 0; d < e.by_degree.size(); ++d) {
            if (e.by_degree[d].empty())
                continue;
            json list = json::array();
            for (const std::complex<double>& lam : e.by_degree[d])
                list.push_back(json::array({lam.real(), lam.imag()}));
            spectrum[std::to_string(d)] = std::move(list);
        }
    }
    a["spectrum"] = std::move(spectrum);
    j["automorphism"] = std::move(a);

    if (!sc.fixed.isolated_points.empty() || !sc.fixed.periodic_orbits.empty() ||
        !sc.fixed.curve_notes.empty()) {
        json f;
        if (!sc.fixed.isolated_points.empty()) {
            json list = json::array();
            for (const auto& fp : sc.fixed.isolated_points) {
                json item;
                item["label"] = fp.label;
                item["eps1"] = root_pair_json(fp.eps1, "fixed_data.isolated.eps1");
                item["eps2"] = root_pair_json(fp.eps2, "fixed_data.isolated.eps2");
                list.push_back(std::move(item));
            }
            f["isolated"] = std::move(list);
        }
        if (!sc.fixed.periodic_orbits.empty()) {
            json list = json::array();
            for (const auto& orb : sc.fixed.periodic_orbits) {
                json item;
                item["label"] = orb.label;
                item["period"] = orb.period;
                item["isolated"] = orb.isolated;
                list.push_back(std::move(item));
            }
            f["orbits"] = std::move(list);
        }
        if (!sc.fixed.curve_notes.empty())
            f["curves"] = sc.fixed.curve_notes;
        j["fixed_data"] = std::move(f);
    }
    if (!sc.notes.empty())
        j["notes"] = sc.notes;
    return j;
}

// The common output envelope: {request, results, provenance, warnings}.
inline json make_output_document(const std::string& subcommand, json input, json parameters,
                                 json results, std::vector<std::string> provenance_notes,
                                 std::vector<std::string> warnings) {
    json doc;
    doc["request"]["subcommand"] = subcommand;
    doc["request"]["input"] = std::move(input);
    doc["request"]["parameters"] = std::move(parameters);
    doc["results"] = std::move(results);
    doc["provenance"]["notes"] = provenance_notes;
    doc["warnings"] = warnings;
    return doc;
}

inline json fixed_component_to_json(const fixed_component& c) {
    json out;
    out["kind"] = component_kind_name(c.kind);
    out["description"] = c.description;
    out["dimension"] = c.dimension;
    out["degenerate"] = c.degenerate;
    out["fixed_subspace_dim"] = c.fixed_subspace_dim;
    json pieces = json::array();
    for (const auto& p : c.pieces) {
        json pj;
        pj["support"] = p.support;
        pj["length"] = p.length;
        switch (p.t) {
        case assembly_piece::type::reduced: pj["type"] = "reduced"; break;
        case assembly_piece::type::monomial:
            pj["type"] = "monomial";
            pj["partition"] = p.parts;
            break;
        case assembly_piece::type::curvilinear:
            pj["type"] = "curvilinear";
            pj["axis"] = p.axis;
            pj["exponents"] = p.exponents;
            break;
        case assembly_piece::type::orbit: pj["type"] = "orbit"; break;
        case assembly_piece::type::thick_orbit:
            pj["type"] = "thick-orbit";
            pj["punctual_length"] = p.thick_length;
            break;
        }
        pj["dimension"] = p.dimension;
        pieces.push_back(std::move(pj));
    }
    out["pieces"] = std::move(pieces);
    out["weights_complete"] = c.weights_complete;
    if (c.weights_complete) {
        json ws = json::array();
        for (const auto& w : c.weights)
            ws.push_back(cyc_to_json(w));
        out["weights"] = std::move(ws);
    }
    return out;
}

// Shared by the CLI and the acceptance suite so both present identical
// reports; scenario notes (preset assumptions, literature quotes) surface in
// the crosscheck block alongside the computed numbers.
inline json fixed_report_to_json(const fixed_locus_report& rep, const scenario& sc) {
    json out;
    out["n"] = rep.n;
    out["isolated_nondegenerate_count"] = rep.isolated_nondegenerate_count;
    json cc;
    cc["lefschetz"] = rep.crosscheck.lefschetz;
    cc["isolated_nondegenerate"] = rep.crosscheck.isolated_nondegenerate;
    cc["remainder"] = rep.crosscheck.remainder;
    cc["reconciled"] = rep.crosscheck.reconciled;
    std::vector<std::string> notes = rep.crosscheck.notes;
    for (const auto& note : sc.notes)
        notes.push_back(note);
    cc["notes"] = notes;
    out["crosscheck"] = std::move(cc);
    out["notes"] = rep.notes;
    json comps = json::array();
    for (const auto& c : rep.components)
        comps.push_back(fixed_component_to_json(c));
    out["components"] = std::move(comps);
    return out;
}

} // namespace hilbaut

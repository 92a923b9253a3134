#include <cmath>
#include <cstdio>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <hilbaut/fixed_locus.hpp>
#include <hilbaut/fock.hpp>
#include <hilbaut/hodge.hpp>
#include <hilbaut/io.hpp>
#include <hilbaut/surface.hpp>

using namespace hilbaut;

namespace {

std::string fmt_double(double x) {
    if (x == 0.0)
        x = 0.0; // normalize -0
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

struct io_opts {
    std::string preset_name;
    std::string input_path;
    std::string format = "text";
};

void add_io(CLI::App* cmd, io_opts& o) {
    auto* p = cmd->add_option("--preset", o.preset_name,
                              "built-in surface/automorphism pair (see list-presets)");
    cmd->add_option("--input", o.input_path, "path to a JSON input document")->excludes(p);
    cmd->add_option("--format", o.format, "output format")
        ->check(CLI::IsMember({"text", "json", "csv"}));
}

scenario load_scenario(const io_opts& o) {
    if (!o.preset_name.empty()) {
        try {
            return preset(o.preset_name);
        } catch (const std::invalid_argument& e) {
            throw parse_error(e.what());
        }
    }
    if (!o.input_path.empty())
        return load_scenario_file(o.input_path);
    throw parse_error("one of --preset or --input is required");
}

void require_valid(const scenario& sc) {
    const auto violations = validate(sc);
    if (violations.empty())
        return;
    std::string msg = "invalid input";
    for (const auto& v : violations)
        msg += "; " + v;
    throw validation_error(msg);
}

void emit_warnings_text(const std::vector<std::string>& ws) {
    for (const auto& w : ws)
        std::cerr << "warning: " << w << "\n";
}

void print_json(const json& doc) { std::cout << doc.dump(2) << "\n"; }

json scenario_parameters(const io_opts& o) {
    json p;
    p["format"] = o.format;
    return p;
}

long long integer_coefficient(const truncated_series<rational>& s, const exponents& e) {
    const rational c = s.coefficient(e);
    const auto iv = c.as_integer();
    if (!iv)
        throw std::logic_error("expected an integer coefficient, got " + c.str());
    return *iv;
}

hodge_row parse_row_option(const std::string& text) {
    std::array<long, 3> vals{};
    std::size_t pos = 0;
    for (int i = 0; i < 3; ++i) {
        std::size_t next = text.find(',', pos);
        if ((i < 2) == (next == std::string::npos))
            throw parse_error("--row expects three comma-separated integers h00,h10,h20");
        try {
            vals[i] = std::stol(text.substr(pos, next - pos));
        } catch (const std::exception&) {
            throw parse_error("--row expects three comma-separated integers h00,h10,h20");
        }
        pos = next + 1;
    }
    if (vals[0] < 0 || vals[1] < 0 || vals[2] < 0)
        throw validation_error("--row entries must be non-negative");
    return hodge_row{vals[0], vals[1], vals[2]};
}

hodge_table parse_table_option(const std::string& text) {
    std::array<long, 9> vals{};
    std::size_t pos = 0;
    for (int i = 0; i < 9; ++i) {
        std::size_t next = text.find(',', pos);
        if ((i < 8) == (next == std::string::npos))
            throw parse_error("--table expects nine comma-separated integers h00,h01,...,h22");
        try {
            vals[i] = std::stol(text.substr(pos, next - pos));
        } catch (const std::exception&) {
            throw parse_error("--table expects nine comma-separated integers h00,h01,...,h22");
        }
        pos = next + 1;
    }
    hodge_table t;
    for (int p = 0; p < 3; ++p)
        for (int q = 0; q < 3; ++q) {
            if (vals[3 * p + q] < 0)
                throw validation_error("--table entries must be non-negative");
            t.h[p][q] = vals[3 * p + q];
        }
    return t;
}

hodge_row row_from_scenario(const scenario& sc) {
    if (!sc.spec.surface.hodge_row)
        throw validation_error("surface: no hodge_row given; pass --row h00,h10,h20 instead");
    const auto& r = sc.spec.surface.hodge_row->second;
    return hodge_row{r[0], r[1], r[2]};
}

json row_json(const hodge_row& r) {
    return json{{"h00", r.h00}, {"h10", r.h10}, {"h20", r.h20}};
}

json table_json(const hodge_table& t) {
    json rows = json::array();
    for (int p = 0; p < 3; ++p)
        rows.push_back(t.h[p]);
    return rows;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"trace series, twisted Hodge numbers, and fixed loci for induced "
                 "automorphisms of configuration schemes of points on surfaces"};
    app.require_subcommand(1);

    // ---- lefschetz ----------------------------------------------------
    io_opts lf_io;
    int lf_n = 1;
    auto* lf = app.add_subcommand("lefschetz", "Lefschetz number of the induced map");
    add_io(lf, lf_io);
    lf->add_option("--n", lf_n, "number of points")->check(CLI::NonNegativeNumber);
    lf->callback([&] {
        scenario sc = load_scenario(lf_io);
        require_valid(sc);
        const auto warnings = validation_warnings(sc);
        const long long value = lefschetz_number(sc.spec, lf_n);
        if (lf_io.format == "json") {
            json params = scenario_parameters(lf_io);
            params["n"] = lf_n;
            json results{{"n", lf_n}, {"lefschetz", value}};
            std::vector<std::string> notes = sc.notes;
            notes.push_back("alternating trace sum evaluated through the weight "
                            "factorization at t = -1");
            print_json(make_output_document("lefschetz", scenario_to_json(sc), params, results,
                                            notes, warnings));
        } else if (lf_io.format == "csv") {
            std::cout << "n,lefschetz\n" << lf_n << "," << value << "\n";
        } else {
            emit_warnings_text(warnings);
            std::cout << value << "\n";
        }
    });

    // ---- trace-series --------------------------------------------------
    io_opts tr_io;
    int tr_n = 4, tr_tmax = -1;
    std::string tr_mode = "shifted", tr_teval;
    auto* tr = app.add_subcommand("trace-series", "graded trace series of the induced action");
    add_io(tr, tr_io);
    tr->add_option("--n", tr_n, "maximum number of points")->check(CLI::NonNegativeNumber);
    tr->add_option("--mode", tr_mode, "degree bookkeeping: shifted or literal")
        ->check(CLI::IsMember({"shifted", "literal"}));
    tr->add_option("--t-eval", tr_teval, "evaluate the degree variable at a rational");
    tr->add_option("--tmax", tr_tmax, "truncation for the degree variable");
    tr->callback([&] {
        scenario sc = load_scenario(tr_io);
        require_valid(sc);
        const auto warnings = validation_warnings(sc);
        fock_trace_options opt;
        opt.max_weight = tr_n;
        opt.mode = degree_mode_from_name(tr_mode);
        if (tr_tmax >= 0)
            opt.t_truncation = tr_tmax;
        if (!tr_teval.empty()) {
            try {
                opt.evaluate_t = rational(tr_teval);
            } catch (const std::exception&) {
                throw parse_error("--t-eval expects a rational number such as -1 or 3/4");
            }
        }
        json params = scenario_parameters(tr_io);
        params["n"] = tr_n;
        params["mode"] = tr_mode;
        if (opt.evaluate_t)
            params["t_eval"] = opt.evaluate_t->str();
        if (tr_tmax >= 0)
            params["tmax"] = tr_tmax;
        std::vector<std::string> notes = sc.notes;
        notes.push_back(std::string("degree mode '") + tr_mode +
                        "': shifted places a weight-m generator of cohomological degree i at "
                        "t^(2(m-1)+i), literal keeps t^i");

        if (sc.spec.exact()) {
            auto s = fock_trace_series(sc.spec, opt);
            if (tr_io.format == "json") {
                json terms = json::array();
                for (const auto& [e, c] : s.terms()) {
                    json term;
                    term["q"] = e[0];
                    if (!opt.evaluate_t)
                        term["t"] = e[1];
                    term["value"] = cyc_to_json(c);
                    terms.push_back(std::move(term));
                }
                json results{{"terms", std::move(terms)}};
                print_json(make_output_document("trace-series", scenario_to_json(sc), params,
                                                results, notes, warnings));
            } else if (tr_io.format == "csv") {
                std::cout << "q,t,exact,re,im\n";
                for (const auto& [e, c] : s.terms()) {
                    const auto z = c.approx();
                    std::cout << e[0] << "," << e[1] << ",\"" << c.str() << "\","
                              << fmt_double(z.real()) << "," << fmt_double(z.imag()) << "\n";
                }
            } else {
                emit_warnings_text(warnings);
                for (int k = 0; k <= tr_n; ++k) {
                    std::cout << "q^" << k << ":";
                    bool any = false;
                    for (const auto& [e, c] : s.terms()) {
                        if (e[0] != k)
                            continue;
                        std::cout << (any ? " + " : " ") << "(" << c.str() << ")";
                        if (e[1] > 0)
                            std::cout << " t^" << e[1];
                        any = true;
                    }
                    if (!any)
                        std::cout << " 0";
                    std::cout << "\n";
                }
            }
        } else {
            auto s = fock_trace_series_approx(sc.spec, opt);
            if (tr_io.format == "json") {
                json terms = json::array();
                for (const auto& [e, c] : s.terms()) {
                    json term;
                    term["q"] = e[0];
                    if (!opt.evaluate_t)
                        term["t"] = e[1];
                    term["value"] = json::array({c.real(), c.imag()});
                    terms.push_back(std::move(term));
                }
                json results{{"terms", std::move(terms)}};
                print_json(make_output_document("trace-series", scenario_to_json(sc), params,
                                                results, notes, warnings));
            } else if (tr_io.format == "csv") {
                std::cout << "q,t,re,im\n";
                for (const auto& [e, c] : s.terms())
                    std::cout << e[0] << "," << e[1] << "," << fmt_double(c.real()) << ","
                              << fmt_double(c.imag()) << "\n";
            } else {
                emit_warnings_text(warnings);
                for (const auto& [e, c] : s.terms()) {
                    std::cout << "q^" << e[0];
                    if (e[1] > 0)
                        std::cout << " t^" << e[1];
                    std::cout << ": " << fmt_double(c.real());
                    if (c.imag() != 0.0)
                        std::cout << " + " << fmt_double(c.imag()) << "i";
                    std::cout << "\n";
                }
            }
        }
    });

    // ---- poincare -------------------------------------------------------
    io_opts po_io;
    int po_n = 3;
    auto* po = app.add_subcommand("poincare", "Betti numbers of the configuration schemes");
    add_io(po, po_io);
    po->add_option("--n", po_n, "maximum number of points")->check(CLI::NonNegativeNumber);
    po->callback([&] {
        scenario sc = load_scenario(po_io);
        require_valid(sc);
        auto s = poincare_series(sc.spec.surface, po_n);
        json rows = json::array();
        for (int k = 0; k <= po_n; ++k) {
            json betti = json::array();
            for (int d = 0; d <= 4 * k; ++d)
                betti.push_back(integer_coefficient(s, exp_of(var::q, k, var::t, d)));
            rows.push_back(json{{"n", k}, {"betti", std::move(betti)}});
        }
        if (po_io.format == "json") {
            json params = scenario_parameters(po_io);
            params["n"] = po_n;
            std::vector<std::string> notes = sc.notes;
            notes.push_back("generating product over creation weights with untwisted "
                            "degree shifts");
            print_json(make_output_document("poincare", scenario_to_json(sc), params,
                                            json{{"series", rows}}, notes, {}));
        } else if (po_io.format == "csv") {
            std::cout << "n,degree,betti\n";
            for (const auto& row : rows)
                for (std::size_t d = 0; d < row["betti"].size(); ++d)
                    std::cout << row["n"] << "," << d << "," << row["betti"][d] << "\n";
        } else {
            for (const auto& row : rows) {
                std::cout << "n=" << row["n"] << ":";
                for (const auto& b : row["betti"])
                    std::cout << " " << b;
                std::cout << "\n";
            }
        }
    });

    // ---- hodge ----------------------------------------------------------
    io_opts ho_io;
    int ho_n = 3, ho_xmax = -1;
    std::string ho_row_text;
    auto* ho = app.add_subcommand("hodge", "twisted Hodge numbers h^{p,0} of the "
                                           "configuration schemes");
    add_io(ho, ho_io);
    ho->add_option("--n", ho_n, "maximum number of points")->check(CLI::NonNegativeNumber);
    ho->add_option("--xmax", ho_xmax, "truncation for the twisting exponent (default 2n)");
    ho->add_option("--row", ho_row_text, "h00,h10,h20 of the twisted row on the surface");
    ho->callback([&] {
        hodge_row row{};
        json input;
        if (!ho_row_text.empty()) {
            row = parse_row_option(ho_row_text);
            input = json{{"row", row_json(row)}};
        } else {
            scenario sc = load_scenario(ho_io);
            require_valid(sc);
            row = row_from_scenario(sc);
            input = scenario_to_json(sc);
        }
        const int xmax = ho_xmax >= 0 ? ho_xmax : 2 * ho_n;
        auto s = hodge_p0_series(row, ho_n, xmax);
        json rows = json::array();
        for (int k = 0; k <= ho_n; ++k) {
            json coeffs = json::array();
            for (int p = 0; p <= xmax; ++p)
                coeffs.push_back(integer_coefficient(s, {0, k, p, 0}));
            rows.push_back(json{{"n", k}, {"coefficients", std::move(coeffs)}});
        }
        json next_to_top = json::array();
        for (int k = 1; k <= ho_n; ++k)
            next_to_top.push_back(json{{"n", k}, {"value", h_top_minus_one(row, k)}});
        if (ho_io.format == "json") {
            json params = scenario_parameters(ho_io);
            params["n"] = ho_n;
            params["xmax"] = xmax;
            json results{{"row", row_json(row)},
                         {"series", rows},
                         {"next_to_top", next_to_top}};
            print_json(make_output_document("hodge", std::move(input), params, results,
                                            {"twisted row generating product; next_to_top "
                                             "cross-checked against the binomial closed form"},
                                            {}));
        } else if (ho_io.format == "csv") {
            std::cout << "n,p,coefficient\n";
            for (const auto& r : rows)
                for (std::size_t p = 0; p < r["coefficients"].size(); ++p)
                    std::cout << r["n"] << "," << p << "," << r["coefficients"][p] << "\n";
        } else {
            for (const auto& r : rows) {
                std::cout << "n=" << r["n"] << ":";
                for (const auto& c : r["coefficients"])
                    std::cout << " " << c;
                std::cout << "\n";
            }
            for (const auto& v : next_to_top)
                std::cout << "next-to-top n=" << v["n"] << ": " << v["value"] << "\n";
        }
    });

    // ---- aut-dim ---------------------------------------------------------
    io_opts ad_io;
    int ad_n = 2;
    std::string ad_row_text;
    auto* ad = app.add_subcommand("aut-dim", "dimension of the automorphism group of the "
                                             "configuration scheme");
    add_io(ad, ad_io);
    ad->add_option("--n", ad_n, "number of points")->check(CLI::PositiveNumber);
    ad->add_option("--row", ad_row_text, "h00,h10,h20 of the canonical-dual twisted row");
    ad->callback([&] {
        hodge_row row{};
        json input;
        std::vector<std::string> notes;
        if (!ad_row_text.empty()) {
            row = parse_row_option(ad_row_text);
            input = json{{"row", row_json(row)}};
        } else {
            scenario sc = load_scenario(ad_io);
            require_valid(sc);
            row = row_from_scenario(sc);
            input = scenario_to_json(sc);
            notes = sc.notes;
            if (sc.spec.surface.hodge_row)
                notes.push_back("twisted row label: " + sc.spec.surface.hodge_row->first);
        }
        auto result = aut_dimension(row, ad_n);
        notes.push_back("tangent space of the automorphism group identified with the "
                        "next-to-top twisted Hodge number, constant in n");
        if (ad_io.format == "json") {
            json params = scenario_parameters(ad_io);
            params["n"] = ad_n;
            json results{{"n", ad_n}, {"dimension", result.value}};
            print_json(make_output_document("aut-dim", std::move(input), params, results, notes,
                                            result.warnings));
        } else if (ad_io.format == "csv") {
            std::cout << "n,dimension\n" << ad_n << "," << result.value << "\n";
        } else {
            emit_warnings_text(result.warnings);
            std::cout << result.value << "\n";
        }
    });

    // ---- conjecture --------------------------------------------------------
    io_opts cj_io;
    int cj_n = 2, cj_xmax = 4, cj_ymax = 4;
    std::string cj_table_text;
    auto* cj = app.add_subcommand("conjecture", "product-formula prediction for the full "
                                                "twisted Hodge table");
    add_io(cj, cj_io);
    cj->add_option("--n", cj_n, "maximum number of points")->check(CLI::NonNegativeNumber);
    cj->add_option("--xmax", cj_xmax, "truncation for the first Hodge exponent");
    cj->add_option("--ymax", cj_ymax, "truncation for the second Hodge exponent");
    cj->add_option("--table", cj_table_text, "nine integers h00,h01,...,h22");
    cj->callback([&] {
        hodge_table table;
        json input;
        std::vector<std::string> notes;
        if (!cj_table_text.empty()) {
            table = parse_table_option(cj_table_text);
            input = json{{"table", table_json(table)}};
        } else {
            scenario sc = load_scenario(cj_io);
            require_valid(sc);
            notes = sc.notes;
            const std::string& name = sc.spec.surface.name;
            if (name.find("k3") != std::string::npos)
                table = k3_trivial_hodge_table();
            else if (name.find("torus") != std::string::npos)
                table = torus_trivial_hodge_table();
            else
                throw validation_error("no built-in Hodge table for surface '" + name +
                                       "'; pass --table h00,...,h22");
            input = scenario_to_json(sc);
        }
        auto s = conjectural_hodge_series(table, cj_n, cj_xmax, cj_ymax);
        notes.push_back("conjectural product formula; factors with creation weight above the "
                        "truncation are omitted");
        json terms = json::array();
        for (int k = 0; k <= cj_n; ++k)
            for (int p = 0; p <= cj_xmax; ++p)
                for (int q = 0; q <= cj_ymax; ++q) {
                    const long long v = integer_coefficient(s, {0, k, p, q});
                    if (v != 0)
                        terms.push_back(json{{"t", k}, {"x", p}, {"y", q}, {"value", v}});
                }
        if (cj_io.format == "json") {
            json params = scenario_parameters(cj_io);
            params["n"] = cj_n;
            params["xmax"] = cj_xmax;
            params["ymax"] = cj_ymax;
            json results{{"table", table_json(table)}, {"terms", terms}};
            print_json(make_output_document("conjecture", std::move(input), params, results,
                                            notes, {}));
        } else if (cj_io.format == "csv") {
            std::cout << "t,x,y,value\n";
            for (const auto& term : terms)
                std::cout << term["t"] << "," << term["x"] << "," << term["y"] << ","
                          << term["value"] << "\n";
        } else {
            for (const auto& term : terms)
                std::cout << "t^" << term["t"] << " x^" << term["x"] << " y^" << term["y"]
                          << ": " << term["value"] << "\n";
        }
    });

    // ---- fixed-points --------------------------------------------------------
    io_opts fp_io;
    int fp_n = 2, fp_bound = 6;
    auto* fp = app.add_subcommand("fixed-points", "fixed locus of the induced map, assembled "
                                                  "from local data");
    add_io(fp, fp_io);
    fp->add_option("--n", fp_n, "number of points")->check(CLI::PositiveNumber);
    fp->add_option("--bound", fp_bound, "refuse n beyond this bound")->check(CLI::PositiveNumber);
    fp->callback([&] {
        scenario sc = load_scenario(fp_io);
        require_valid(sc);
        const auto warnings = validation_warnings(sc);
        auto rep = enumerate_fixed_components(sc.fixed, fp_n, sc.spec, fp_bound);
        json results = fixed_report_to_json(rep, sc);
        if (fp_io.format == "json") {
            json params = scenario_parameters(fp_io);
            params["n"] = fp_n;
            params["bound"] = fp_bound;
            print_json(make_output_document(
                "fixed-points", scenario_to_json(sc), params, results,
                {"components assembled from the declared isolated points and orbits; weights "
                 "from the equivariant tangent computation at monomial ideals"},
                warnings));
        } else if (fp_io.format == "csv") {
            std::cout << "index,kind,dimension,degenerate,fixed_subspace_dim,description\n";
            int index = 0;
            for (const auto& c : rep.components)
                std::cout << index++ << "," << component_kind_name(c.kind) << "," << c.dimension
                          << "," << (c.degenerate ? 1 : 0) << "," << c.fixed_subspace_dim
                          << ",\"" << c.description << "\"\n";
        } else {
            emit_warnings_text(warnings);
            std::cout << "components: " << rep.components.size() << "\n";
            std::cout << "isolated nondegenerate: " << rep.isolated_nondegenerate_count << "\n";
            std::cout << "lefschetz: " << rep.crosscheck.lefschetz << "\n";
            std::cout << "remainder: " << rep.crosscheck.remainder << "\n";
            std::cout << "reconciled: " << (rep.crosscheck.reconciled ? "yes" : "no") << "\n";
            std::map<std::string, int> by_kind;
            for (const auto& c : rep.components)
                ++by_kind[component_kind_name(c.kind)];
            for (const auto& [kind, count] : by_kind)
                std::cout << "kind " << kind << ": " << count << "\n";
            for (const auto& note : rep.crosscheck.notes)
                std::cout << "note: " << note << "\n";
            for (const auto& note : sc.notes)
                std::cout << "note: " << note << "\n";
            for (const auto& note : rep.notes)
                std::cout << "note: " << note << "\n";
            for (const auto& c : rep.components)
                std::cout << "dim " << c.dimension << (c.degenerate ? " degenerate " : " ")
                          << c.description << "\n";
        }
    });

    // ---- spectrum ---------------------------------------------------------
    io_opts sp_io;
    int sp_n = 1;
    long long sp_bound = 10000000;
    auto* sp = app.add_subcommand("spectrum", "eigenvalues of the induced action, by degree");
    add_io(sp, sp_io);
    sp->add_option("--n", sp_n, "number of points")->check(CLI::NonNegativeNumber);
    sp->add_option("--bound", sp_bound, "refuse dimensions beyond this bound");
    sp->callback([&] {
        scenario sc = load_scenario(sp_io);
        require_valid(sc);
        const auto warnings = validation_warnings(sc);
        auto vectors = enumerate_basis(sc.spec, sp_n, sp_bound);
        std::map<std::pair<int, cyclotomic>, long long> mult;
        for (const auto& v : vectors)
            ++mult[{v.degree, v.eigenvalue}];
        if (sp_io.format == "json") {
            json params = scenario_parameters(sp_io);
            params["n"] = sp_n;
            params["bound"] = sp_bound;
            json list = json::array();
            for (const auto& [key, count] : mult)
                list.push_back(json{{"degree", key.first},
                                    {"multiplicity", count},
                                    {"value", cyc_to_json(key.second)}});
            json results{{"n", sp_n},
                         {"dimension", static_cast<long long>(vectors.size())},
                         {"eigenvalues", std::move(list)}};
            print_json(make_output_document(
                "spectrum", scenario_to_json(sc), params, results,
                {"diagonal basis indexed by creation-weight multisets; degrees use the "
                 "shifted convention"},
                warnings));
        } else if (sp_io.format == "csv") {
            std::cout << "degree,multiplicity,exact,re,im\n";
            for (const auto& [key, count] : mult) {
                const auto z = key.second.approx();
                std::cout << key.first << "," << count << ",\"" << key.second.str() << "\","
                          << fmt_double(z.real()) << "," << fmt_double(z.imag()) << "\n";
            }
        } else {
            emit_warnings_text(warnings);
            std::cout << "dimension: " << vectors.size() << "\n";
            for (const auto& [key, count] : mult)
                std::cout << "t^" << key.first << ": (" << key.second.str() << ") x " << count
                          << "\n";
        }
    });

    // ---- entropy -----------------------------------------------------------
    io_opts en_io;
    int en_n = 1;
    auto* en = app.add_subcommand("entropy", "spectral radius and entropy of the induced map");
    add_io(en, en_io);
    en->add_option("--n", en_n, "number of points")->check(CLI::NonNegativeNumber);
    en->callback([&] {
        scenario sc = load_scenario(en_io);
        require_valid(sc);
        const auto warnings = validation_warnings(sc);
        const double radius = induced_spectral_radius(sc.spec, en_n);
        const double surface_radius = induced_spectral_radius(sc.spec, 1);
        const double entropy = radius > 0.0 ? std::log(radius) : 0.0;
        if (en_io.format == "json") {
            json params = scenario_parameters(en_io);
            params["n"] = en_n;
            json results{{"n", en_n},
                         {"spectral_radius", radius},
                         {"entropy", entropy},
                         {"surface_radius", surface_radius}};
            print_json(make_output_document(
                "entropy", scenario_to_json(sc), params, results,
                {"radius maximized over creation-weight multisets; for surface data the "
                 "induced radius at n points is the n-th power of the surface radius"},
                warnings));
        } else if (en_io.format == "csv") {
            std::cout << "n,spectral_radius,entropy\n"
                      << en_n << "," << fmt_double(radius) << "," << fmt_double(entropy) << "\n";
        } else {
            emit_warnings_text(warnings);
            std::cout << "spectral radius: " << fmt_double(radius) << "\n";
            std::cout << "entropy: " << fmt_double(entropy) << "\n";
        }
    });

    // ---- list-presets --------------------------------------------------------
    auto* lp = app.add_subcommand("list-presets", "names of the built-in input documents");
    lp->callback([&] {
        for (const auto& name : preset_names())
            std::cout << name << "\n";
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const validation_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const bound_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

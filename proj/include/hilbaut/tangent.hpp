#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cyclotomic.hpp"
#include "errors.hpp"
#include "partition.hpp"

namespace hilbaut {

namespace detail {

inline std::size_t matrix_rank(std::vector<std::vector<rational>> rows) {
    std::size_t rank = 0;
    const std::size_t nrows = rows.size();
    const std::size_t ncols = nrows == 0 ? 0 : rows[0].size();
    for (std::size_t c = 0; c < ncols && rank < nrows; ++c) {
        std::size_t p = rank;
        while (p < nrows && rows[p][c].is_zero())
            ++p;
        if (p == nrows)
            continue;
        std::swap(rows[p], rows[rank]);
        const rational inv = rows[rank][c].inverse();
        for (std::size_t r = rank + 1; r < nrows; ++r) {
            if (rows[r][c].is_zero())
                continue;
            const rational f = rows[r][c] * inv;
            for (std::size_t cc = c; cc < ncols; ++cc)
                rows[r][cc] -= f * rows[rank][cc];
        }
        ++rank;
    }
    return rank;
}

} // namespace detail

// Tangent space of the point scheme at a monomial thick point, as seen by the
// diagonal action with local eigenvalues (eps1, eps2).
struct tangent_weight_report {
    partition parts;
    cyclotomic eps1, eps2;
    std::vector<cyclotomic> weights;                 // exactly 2n entries
    std::vector<std::pair<int, int>> weight_classes; // exponent class (a,b) per weight
    bool degenerate = false;                         // weight 1 occurs
    long fixed_subspace_dim = 0;                     // multiplicity of weight 1
};

// Exact tangent weights at the monomial ideal of λ under the local action
// diag(eps1, eps2). The tangent space is Hom(I, A/I); an element assigns to
// each minimal generator x^{i_k} y^{j_k} a class in A/I, subject to one
// syzygy per adjacent generator pair:
//   y^(j_{k+1}-j_k) φ(g_k) - x^(i_k-i_{k+1}) φ(g_{k+1}) ≡ 0  (mod I).
// A coefficient α sending x^i y^j to x^u y^v scales by eps1^(i-u) eps2^(j-v),
// and the constraints preserve that class, so the computation splits into one
// small exact rank problem per exponent class (a, b) = (i-u, j-v).
inline tangent_weight_report monomial_tangent_weights(const partition& parts,
                                                      const cyclotomic& eps1,
                                                      const cyclotomic& eps2) {
    if (!eps1.root_order() || !eps2.root_order())
        throw validation_error("monomial_tangent_weights: local eigenvalues must be roots of "
                               "unity");
    const partition_diagram d = diagram(parts);
    const int n = partition_sum(parts);
    const auto& cells = d.cells;
    const auto& gens = d.generators; // i strictly decreasing, j strictly increasing

    // cell membership lookup
    std::map<std::pair<int, int>, std::size_t> cell_index;
    for (std::size_t c = 0; c < cells.size(); ++c)
        cell_index.emplace(cells[c], c);

    struct class_block {
        std::vector<std::size_t> vars;                 // global variable ids
        std::map<std::size_t, std::size_t> var_column; // id -> local column
        std::vector<std::vector<rational>> rows;       // constraint rows
    };
    std::map<std::pair<int, int>, class_block> blocks;

    // variables: one per (generator k, cell (u,v)); id = k * |D| + cell index
    const auto var_id = [&](std::size_t k, std::size_t c) { return k * cells.size() + c; };
    for (std::size_t k = 0; k < gens.size(); ++k)
        for (std::size_t c = 0; c < cells.size(); ++c) {
            const std::pair<int, int> cls{gens[k].first - cells[c].first,
                                          gens[k].second - cells[c].second};
            auto& blk = blocks[cls];
            blk.var_column.emplace(var_id(k, c), blk.vars.size());
            blk.vars.push_back(var_id(k, c));
        }

    // one constraint row per (adjacent generator pair, surviving monomial)
    for (std::size_t k = 0; k + 1 < gens.size(); ++k) {
        const int dj = gens[k + 1].second - gens[k].second;
        const int di = gens[k].first - gens[k + 1].first;
        // rows indexed by the monomial (s, t) the products land on
        std::map<std::pair<int, int>, std::map<std::size_t, rational>> sparse_rows;
        for (std::size_t c = 0; c < cells.size(); ++c) {
            const auto [u, v] = cells[c];
            if (cell_index.count({u, v + dj}))
                sparse_rows[{u, v + dj}][var_id(k, c)] += rational(1);
            if (cell_index.count({u + di, v}))
                sparse_rows[{u + di, v}][var_id(k + 1, c)] -= rational(1);
        }
        for (auto& [mono, entries] : sparse_rows) {
            // the class of every variable in this row (weight homogeneity)
            const std::pair<int, int> cls{gens[k].first - mono.first,
                                          gens[k + 1].second - mono.second};
            auto& blk = blocks.at(cls);
            std::vector<rational> row(blk.vars.size(), rational(0));
            for (const auto& [id, coeff] : entries)
                row[blk.var_column.at(id)] = coeff;
            blk.rows.push_back(std::move(row));
        }
    }

    tangent_weight_report rep;
    rep.parts = parts;
    rep.eps1 = eps1;
    rep.eps2 = eps2;
    long total = 0;
    const cyclotomic one(1);
    for (const auto& [cls, blk] : blocks) {
        const std::size_t dim = blk.vars.size() - detail::matrix_rank(blk.rows);
        if (dim == 0)
            continue;
        total += static_cast<long>(dim);
        const cyclotomic w = eps1.pow(cls.first) * eps2.pow(cls.second);
        for (std::size_t i = 0; i < dim; ++i) {
            rep.weights.push_back(w);
            rep.weight_classes.push_back(cls);
            if (w == one) {
                rep.degenerate = true;
                ++rep.fixed_subspace_dim;
            }
        }
    }
    if (total != 2 * n)
        throw std::logic_error("monomial_tangent_weights: got " + std::to_string(total) +
                               " weights for a length-" + std::to_string(n) +
                               " ideal, expected " + std::to_string(2 * n));
    return rep;
}

// Every monomial thick point of length n (one per partition) is fixed by any
// diagonal finite-order action.
inline std::vector<partition_diagram> monomial_fixed_points(int n) {
    if (n < 1)
        throw std::invalid_argument("monomial_fixed_points: n must be >= 1");
    std::vector<partition_diagram> out;
    for (const partition& p : partitions_of(n))
        out.push_back(diagram(p));
    return out;
}

// Jets along the x axis (ideals <y + sum_i a_i x^i, x^n>) versus the y axis
// (coordinates exchanged).
enum class curvilinear_axis { xy, yx };

inline const char* curvilinear_axis_name(curvilinear_axis a) {
    return a == curvilinear_axis::xy ? "xy" : "yx";
}

struct curvilinear_direction {
    curvilinear_axis axis;
    int exponent; // the coefficient a_exponent may be nonzero in a fixed jet
};

// A curvilinear ideal <y + a_1 x + ... + a_{n-1} x^{n-1}, x^n> is fixed
// exactly when a_i = 0 unless eps2 = eps1^i; each admissible exponent i is a
// free coordinate of a fixed family of curvilinear subschemes. The yx axis is
// the coordinate-swapped statement.
inline std::vector<curvilinear_direction> curvilinear_fixed_directions(int n,
                                                                       const cyclotomic& eps1,
                                                                       const cyclotomic& eps2) {
    if (n < 2)
        throw std::invalid_argument("curvilinear_fixed_directions: n must be >= 2");
    std::vector<curvilinear_direction> out;
    for (int i = 1; i < n; ++i)
        if (eps2 == eps1.pow(i))
            out.push_back({curvilinear_axis::xy, i});
    for (int i = 1; i < n; ++i)
        if (eps1 == eps2.pow(i))
            out.push_back({curvilinear_axis::yx, i});
    return out;
}

} // namespace hilbaut

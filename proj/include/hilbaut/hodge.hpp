#pragma once

#include <array>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "series.hpp"

namespace hilbaut {

// h^{p,0}(S, L) for p = 0, 1, 2 — the input data of the twisted Hodge-number
// generating function.
struct hodge_row {
    long h00 = 1;
    long h10 = 0;
    long h20 = 0;
};

// Full 3x3 grid h[p][q] = h^{p,q}(S, L).
struct hodge_table {
    std::array<std::array<long, 3>, 3> h{};
};

inline hodge_table k3_trivial_hodge_table() {
    hodge_table t;
    t.h = {{{1, 0, 1}, {0, 20, 0}, {1, 0, 1}}};
    return t;
}

inline hodge_table torus_trivial_hodge_table() {
    hodge_table t;
    t.h = {{{1, 2, 1}, {2, 4, 2}, {1, 2, 1}}};
    return t;
}

namespace detail {

inline mpz_class binomial(long a, long b) {
    if (b < 0 || a < b)
        return 0;
    if (b == 0)
        return 1;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
    return r;
}

inline void check_row(const hodge_row& row) {
    if (row.h00 < 0 || row.h10 < 0 || row.h20 < 0)
        throw std::invalid_argument("hodge row entries must be non-negative");
}

} // namespace detail

// Generating function of the holomorphic rows of the point schemes:
//   sum_{n,p} h^{p,0}(S^[n], L_n) x^p t^n
//     = (1 + x t)^h10 / ((1 - t)^h00 (1 - x^2 t)^h20).
inline truncated_series<rational> hodge_p0_series(const hodge_row& row, int nmax, int pmax) {
    detail::check_row(row);
    if (nmax < 0 || pmax < 0)
        throw std::invalid_argument("hodge_p0_series: truncations must be >= 0");
    const truncation tr{{var::x, pmax}, {var::t, nmax}};
    using S = truncated_series<rational>;
    auto acc = S::one(tr);
    if (row.h10 > 0) {
        auto base = S::one(tr);
        base.add_term(exp_of(var::x, 1, var::t, 1), rational(1));
        acc *= base.pow(row.h10);
    }
    if (row.h00 > 0)
        acc *= S::geometric(tr, exp_of(var::t, 1), rational(1)).pow(row.h00);
    if (row.h20 > 0)
        acc *= S::geometric(tr, exp_of(var::x, 2, var::t, 1), rational(1)).pow(row.h20);
    return acc;
}

// Top-minus-one holomorphic Hodge number h^{2n-1,0}(S^[n], L_n) in closed
// form, self-checked against the series expansion. The closed form comes from
// expanding the generating function directly: the only split producing x^{2n-1}
// takes one factor of (1+xt), n-1 factors from the x^2 t geometric part, and
// none from the x-free part, giving h10 * C(h20 + n - 2, n - 1).
inline long long h_top_minus_one(const hodge_row& row, int n) {
    detail::check_row(row);
    if (n < 1)
        throw std::invalid_argument("h_top_minus_one: n must be >= 1");
    const mpz_class closed = row.h10 * detail::binomial(row.h20 + n - 2, n - 1);
    const rational from_series =
        hodge_p0_series(row, n, 2 * n).coefficient(exp_of(var::x, 2 * n - 1, var::t, n));
    if (!(rational(closed) == from_series))
        throw std::logic_error("h_top_minus_one: closed form " + closed.get_str() +
                               " disagrees with the series coefficient " + from_series.str());
    if (!closed.fits_slong_p())
        throw std::domain_error("h_top_minus_one: value exceeds the machine integer range");
    return closed.get_si();
}

struct aut_dimension_result {
    long long value = 0;
    std::vector<std::string> warnings;
};

// dim Aut(S^[n]) = h^0(S^[n], T) = h^{2n-1,0}(S^[n], (omega_S^)-dual twist),
// computed from the canonical-dual Hodge row of S. With h20 = 1 the binomial
// collapses to 1 and the answer is h10 = h^0(S, T_S) for every n.
inline aut_dimension_result aut_dimension(const hodge_row& canonical_dual_row, int n) {
    aut_dimension_result r;
    if (canonical_dual_row.h20 != 1)
        r.warnings.push_back(
            "canonical-dual row should have h20 = 1 (it equals h^{2,2}(S) = 1 for a compact "
            "surface); got " +
            std::to_string(canonical_dual_row.h20) + ", computing anyway");
    r.value = h_top_minus_one(canonical_dual_row, n);
    return r;
}

// Conjectural three-variable refinement:
//   sum_{n,p,q} h^{p,q}(S^[n], L_n) x^p y^q t^n
//     = prod_{k>=1} prod_{p,q=0..2}
//         (1 - (-1)^(p+q) x^(p+k-1) y^(q+k-1) t^k)^(-(-1)^(p+q) h^{p,q}).
// Factors with k > nmax are identically 1 under the truncation and omitted.
inline truncated_series<rational> conjectural_hodge_series(const hodge_table& table, int nmax,
                                                           int pmax, int qmax) {
    if (nmax < 0 || pmax < 0 || qmax < 0)
        throw std::invalid_argument("conjectural_hodge_series: truncations must be >= 0");
    for (const auto& rowv : table.h)
        for (long v : rowv)
            if (v < 0)
                throw std::invalid_argument("conjectural_hodge_series: table entries must be "
                                            "non-negative");
    const truncation tr{{var::x, pmax}, {var::y, qmax}, {var::t, nmax}};
    using S = truncated_series<rational>;
    auto acc = S::one(tr);
    for (int k = 1; k <= nmax; ++k)
        for (int p = 0; p <= 2; ++p)
            for (int q = 0; q <= 2; ++q) {
                const long h = table.h[p][q];
                if (h == 0)
                    continue;
                exponents step{0, 0, 0, 0};
                step[static_cast<int>(var::t)] = k;
                step[static_cast<int>(var::x)] = p + k - 1;
                step[static_cast<int>(var::y)] = q + k - 1;
                if ((p + q) % 2 == 0) {
                    acc *= S::geometric(tr, step, rational(1)).pow(h);
                } else {
                    auto base = S::one(tr);
                    base.add_term(step, rational(1));
                    acc *= base.pow(h);
                }
            }
    return acc;
}

} // namespace hilbaut

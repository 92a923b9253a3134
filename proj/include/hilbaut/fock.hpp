#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "errors.hpp"
#include "surface.hpp"

namespace hilbaut {

// How creation operators of weight m acting on a degree-i class are graded in
// the t variable:
//   literal: t^i                 (the grading carried by the class itself)
//   shifted: t^(2(m-1)+i)        (the geometric grading on the point schemes;
//                                 reproduces the classical Poincare series)
// Both agree after t = -1, so alternating-sum invariants are mode independent.
enum class degree_mode { shifted, literal };

inline const char* degree_mode_name(degree_mode m) {
    return m == degree_mode::shifted ? "shifted" : "literal";
}

inline degree_mode degree_mode_from_name(const std::string& s) {
    if (s == "shifted")
        return degree_mode::shifted;
    if (s == "literal")
        return degree_mode::literal;
    throw parse_error("degree mode must be 'shifted' or 'literal', got '" + s + "'");
}

struct fock_trace_options {
    int max_weight = 8;                 // truncation in q
    degree_mode mode = degree_mode::shifted;
    std::optional<rational> evaluate_t; // specialize t before returning
    int t_truncation = -1;              // -1: automatic (4 * max_weight covers everything)
};

namespace detail {

// The infinite product over creation weights m and generator degrees i:
//   even i: (1 - lambda * t^e(m,i) * q^m)^(-1)
//   odd  i: (1 + lambda * t^e(m,i) * q^m)
// with e(m,i) = i or 2(m-1)+i per the mode. Factors with m beyond the q bound
// are identically 1 under truncation and are skipped.
template <class T>
truncated_series<T> fock_factor_product(const graded_eigenvalues<T>& e, int max_weight,
                                        degree_mode mode, int tmax) {
    if (max_weight < 0)
        throw std::invalid_argument("fock trace: max_weight must be >= 0");
    if (tmax < 0)
        tmax = 4 * max_weight;
    const truncation tr{{var::q, max_weight}, {var::t, tmax}};
    auto acc = truncated_series<T>::one(tr);
    for (int m = 1; m <= max_weight; ++m)
        for (std::size_t i = 0; i < e.by_degree.size(); ++i) {
            if (e.by_degree[i].empty())
                continue;
            const int texp =
                mode == degree_mode::shifted ? 2 * (m - 1) + static_cast<int>(i) : static_cast<int>(i);
            const exponents step = exp_of(var::q, m, var::t, texp);
            for (const T& lam : e.by_degree[i]) {
                if (i % 2 == 1) {
                    auto factor = truncated_series<T>::one(tr);
                    factor.add_term(step, lam);
                    acc *= factor;
                } else {
                    acc *= truncated_series<T>::geometric(tr, step, lam);
                }
            }
        }
    return acc;
}

} // namespace detail

// Exact graded trace series of the induced tower in Z = sum_n trace(f^[n], t) q^n.
// Requires an exact (cyclotomic) spectrum.
inline truncated_series<cyclotomic> fock_trace_series(const automorphism_spec& spec,
                                                      const fock_trace_options& opt = {}) {
    if (!spec.exact())
        throw std::invalid_argument(
            "fock_trace_series: needs an exact spectrum (use the approx variant for floats)");
    auto z = detail::fock_factor_product(spec.exact_eigenvalues(), opt.max_weight, opt.mode,
                                         opt.t_truncation);
    if (opt.evaluate_t)
        return z.substitute(var::t, cyclotomic(*opt.evaluate_t));
    return z;
}

// Floating-point variant; accepts either scalar kind.
inline truncated_series<std::complex<double>>
fock_trace_series_approx(const automorphism_spec& spec, const fock_trace_options& opt = {}) {
    graded_eigenvalues<std::complex<double>> e;
    if (spec.exact()) {
        const auto& src = spec.exact_eigenvalues();
        e.by_degree.resize(src.by_degree.size());
        for (std::size_t i = 0; i < src.by_degree.size(); ++i)
            for (const cyclotomic& lam : src.by_degree[i])
                e.by_degree[i].push_back(lam.approx());
    } else {
        e = spec.float_eigenvalues();
    }
    auto z = detail::fock_factor_product(e, opt.max_weight, opt.mode, opt.t_truncation);
    if (opt.evaluate_t)
        return z.substitute(var::t, std::complex<double>(opt.evaluate_t->approx(), 0.0));
    return z;
}

// Generating series of alternating-sum fixed point counts: the t = -1
// specialization collapses to a product in q alone, so it is computed
// directly there (mode independent).
inline truncated_series<cyclotomic> lefschetz_series(const automorphism_spec& spec, int nmax) {
    if (!spec.exact())
        throw std::invalid_argument("lefschetz_series: needs an exact spectrum");
    if (nmax < 0)
        throw std::invalid_argument("lefschetz_series: nmax must be >= 0");
    const truncation tr{{var::q, nmax}};
    auto acc = truncated_series<cyclotomic>::one(tr);
    const auto& e = spec.exact_eigenvalues();
    for (int m = 1; m <= nmax; ++m)
        for (std::size_t i = 0; i < e.by_degree.size(); ++i)
            for (const cyclotomic& lam : e.by_degree[i]) {
                // t = -1 turns the degree twist into the sign (-1)^i
                if (i % 2 == 1) {
                    auto factor = truncated_series<cyclotomic>::one(tr);
                    factor.add_term(exp_of(var::q, m), -lam);
                    acc *= factor;
                } else {
                    acc *= truncated_series<cyclotomic>::geometric(tr, exp_of(var::q, m), lam);
                }
            }
    return acc;
}

// The alternating trace of the induced map on the weight-n piece, certified
// to be a rational integer.
inline long long lefschetz_number(const automorphism_spec& spec, int n) {
    if (n < 0)
        throw std::invalid_argument("lefschetz_number: n must be >= 0");
    const cyclotomic value = lefschetz_series(spec, n).coefficient(exp_of(var::q, n));
    const auto certified = cyc_as_integer(value);
    if (!certified)
        throw std::domain_error("lefschetz_number: value " + value.str() +
                                " is not a rational integer (inconsistent spectrum?)");
    return *certified;
}

// Poincare series of the point schemes of a surface with the given Betti
// numbers: the identity trace in shifted grading.
inline truncated_series<rational> poincare_series(const surface_spec& s, int nmax) {
    graded_eigenvalues<rational> e;
    e.by_degree.resize(5);
    for (int d = 0; d <= 4; ++d) {
        if (s.betti[d] < 0)
            throw std::invalid_argument("poincare_series: negative Betti number");
        e.by_degree[d].assign(s.betti[d], rational(1));
    }
    return detail::fock_factor_product(e, nmax, degree_mode::shifted, -1);
}

// One creation-operator factor in a basis vector: weight m applied to the
// index-th eigenvector in cohomological degree i of the surface.
struct nakajima_part {
    int weight = 1;
    int degree = 0;
    long index = 0;

    friend bool operator==(const nakajima_part& a, const nakajima_part& b) {
        return a.weight == b.weight && a.degree == b.degree && a.index == b.index;
    }
    friend bool operator<(const nakajima_part& a, const nakajima_part& b) {
        if (a.weight != b.weight)
            return a.weight < b.weight;
        if (a.degree != b.degree)
            return a.degree < b.degree;
        return a.index < b.index;
    }
};

struct nakajima_basis_vector {
    std::vector<nakajima_part> parts; // nondecreasing in (weight, degree, index)
    cyclotomic eigenvalue;            // product of the constituent eigenvalues
    long degree = 0;                  // cohomological degree: sum of 2(weight-1)+degree
};

// Number of weight-n basis vectors, computed exactly (no enumeration).
inline mpz_class count_basis_vectors(const surface_spec& s, int n) {
    if (n < 0)
        throw std::invalid_argument("count_basis_vectors: n must be >= 0");
    for (long b : s.betti)
        if (b < 0)
            throw std::invalid_argument("count_basis_vectors: negative Betti number");
    const long even = s.betti[0] + s.betti[2] + s.betti[4];
    const long odd = s.betti[1] + s.betti[3];
    // per creation weight m: multisets from the even generators, subsets from
    // the odd ones; convolve the per-weight polynomials in q up to q^n
    std::vector<mpz_class> acc(n + 1, 0), factor, next;
    acc[0] = 1;
    for (int m = 1; m <= n; ++m) {
        factor.assign(n / m + 1, 0);
        for (int send = 0; send * m <= n; ++send)
            for (int r = 0; r <= send && r <= odd; ++r) {
                const int ssym = send - r;
                mpz_class ways, choose;
                mpz_bin_uiui(ways.get_mpz_t(), static_cast<unsigned long>(even + ssym - 1),
                             static_cast<unsigned long>(ssym));
                if (ssym > 0 && even == 0)
                    ways = 0;
                if (ssym == 0)
                    ways = 1;
                mpz_bin_uiui(choose.get_mpz_t(), static_cast<unsigned long>(odd),
                             static_cast<unsigned long>(r));
                factor[send] += ways * choose;
            }
        next.assign(n + 1, 0);
        for (int w = 0; w <= n; ++w) {
            if (acc[w] == 0)
                continue;
            for (int send = 0; w + send * m <= n; ++send)
                if (factor[send] != 0)
                    next[w + send * m] += acc[w] * factor[send];
        }
        acc.swap(next);
    }
    return acc[n];
}

// All weight-n basis vectors with their induced eigenvalues, in a canonical
// deterministic order. Throws bound_error when the count exceeds the bound.
inline std::vector<nakajima_basis_vector>
enumerate_basis(const automorphism_spec& spec, int n, long long bound = 10000000) {
    if (!spec.exact())
        throw std::invalid_argument("enumerate_basis: needs an exact spectrum");
    if (n < 0)
        throw std::invalid_argument("enumerate_basis: n must be >= 0");
    const mpz_class total = count_basis_vectors(spec.surface, n);
    if (total > static_cast<long>(bound))
        throw bound_error("enumerate_basis: weight " + std::to_string(n) + " has " +
                          total.get_str() + " basis vectors, over the bound " +
                          std::to_string(bound));

    struct generator {
        int degree;
        long index;
        cyclotomic eigenvalue;
        bool odd;
    };
    std::vector<generator> gens;
    const auto& e = spec.exact_eigenvalues();
    for (std::size_t i = 0; i < e.by_degree.size(); ++i)
        for (std::size_t j = 0; j < e.by_degree[i].size(); ++j)
            gens.push_back({static_cast<int>(i), static_cast<long>(j), e.by_degree[i][j],
                            i % 2 == 1});

    std::vector<nakajima_basis_vector> out;
    out.reserve(total.fits_slong_p() ? total.get_si() : 0);
    std::vector<nakajima_part> stack;

    // parts chosen nondecreasing in (weight, generator); an odd generator may
    // not repeat at the same weight (those vectors vanish identically)
    const auto dfs = [&](auto&& self, int remaining, int min_weight, std::size_t min_gen,
                         const cyclotomic& eig, long degree) -> void {
        if (remaining == 0) {
            out.push_back({stack, eig, degree});
            return;
        }
        for (int m = min_weight; m <= remaining; ++m) {
            const std::size_t start = (m == min_weight) ? min_gen : 0;
            for (std::size_t g = start; g < gens.size(); ++g) {
                const bool repeats = !stack.empty() && stack.back().weight == m &&
                                     stack.back().degree == gens[g].degree &&
                                     stack.back().index == gens[g].index;
                if (repeats && gens[g].odd)
                    continue;
                stack.push_back({m, gens[g].degree, gens[g].index});
                self(self, remaining - m, m, g, eig * gens[g].eigenvalue,
                     degree + 2 * (m - 1) + gens[g].degree);
                stack.pop_back();
            }
        }
    };
    dfs(dfs, n, 1, 0, cyclotomic(1), 0);
    return out;
}

// Largest modulus among the induced eigenvalues on the weight-n piece.
// Computed by an exact optimization over pick multisets, so no enumeration
// bound applies. Works for both scalar kinds.
inline double induced_spectral_radius(const automorphism_spec& spec, int n) {
    if (n < 0)
        throw std::invalid_argument("induced_spectral_radius: n must be >= 0");
    if (n == 0)
        return 1.0;
    std::vector<double> even_mods, odd_mods;
    const auto take = [&](std::size_t degree, std::complex<double> lam) {
        (degree % 2 == 1 ? odd_mods : even_mods).push_back(std::abs(lam));
    };
    if (spec.exact()) {
        const auto& e = spec.exact_eigenvalues();
        for (std::size_t i = 0; i < e.by_degree.size(); ++i)
            for (const cyclotomic& lam : e.by_degree[i])
                take(i, lam.approx());
    } else {
        const auto& e = spec.float_eigenvalues();
        for (std::size_t i = 0; i < e.by_degree.size(); ++i)
            for (const std::complex<double>& lam : e.by_degree[i])
                take(i, lam);
    }
    if (even_mods.empty() && odd_mods.empty())
        throw std::invalid_argument("induced_spectral_radius: empty spectrum");
    std::sort(odd_mods.rbegin(), odd_mods.rend());
    const double best_even = even_mods.empty()
                                 ? 0.0
                                 : *std::max_element(even_mods.begin(), even_mods.end());

    // best product of s picks at a single creation weight: r odd generators
    // (distinct, so the top r moduli) padded with copies of the best even one
    std::vector<double> best_for_picks(n + 1, 0.0);
    best_for_picks[0] = 1.0;
    for (int s = 1; s <= n; ++s) {
        double best = 0.0;
        double odd_prod = 1.0;
        for (int r = 0; r <= s && r <= static_cast<int>(odd_mods.size()); ++r) {
            if (r > 0)
                odd_prod *= odd_mods[r - 1];
            if (r < s && even_mods.empty())
                continue;
            double cand = odd_prod;
            for (int k = r; k < s; ++k)
                cand *= best_even;
            best = std::max(best, cand);
        }
        best_for_picks[s] = best;
    }

    // knapsack over creation weights m = 1..n; each weight is its own slot so
    // the per-slot optimum above composes freely
    std::vector<double> dp(n + 1, -1.0);
    dp[0] = 1.0;
    for (int m = 1; m <= n; ++m) {
        std::vector<double> next = dp;
        for (int w = 0; w <= n; ++w) {
            if (dp[w] < 0.0)
                continue;
            for (int s = 1; w + s * m <= n; ++s)
                if (best_for_picks[s] > 0.0)
                    next[w + s * m] = std::max(next[w + s * m], dp[w] * best_for_picks[s]);
        }
        dp = std::move(next);
    }
    if (dp[n] < 0.0)
        throw std::invalid_argument("induced_spectral_radius: no weight-" + std::to_string(n) +
                                    " vectors exist for this spectrum");
    return dp[n];
}

} // namespace hilbaut

#pragma once

#include <stdexcept>
#include <vector>

#include "series.hpp"

namespace hilbaut {

// Eigenvalue multisets of a diagonalizable graded endomorphism, one list per
// degree. Degree parity (even/odd) is read off the index.
template <class T>
struct graded_eigenvalues {
    std::vector<std::vector<T>> by_degree;

    int max_degree() const { return static_cast<int>(by_degree.size()) - 1; }

    long dimension() const {
        long n = 0;
        for (const auto& lst : by_degree)
            n += static_cast<long>(lst.size());
        return n;
    }

    long dimension_at(int degree) const {
        if (degree < 0 || degree >= static_cast<int>(by_degree.size()))
            return 0;
        return static_cast<long>(by_degree[degree].size());
    }
};

namespace detail {

template <class T>
truncation trace_truncation(const graded_eigenvalues<T>& e, int nmax) {
    if (nmax < 0)
        throw std::invalid_argument("trace series: nmax must be >= 0");
    const int tmax = e.max_degree() < 0 ? 0 : e.max_degree() * nmax;
    return truncation{{var::q, nmax}, {var::t, tmax}};
}

} // namespace detail

// The degree-twisted trace of f itself: sum_{i,j} lambda_{i,j} t^i, a
// polynomial in t (placed in the given truncation's variable set).
template <class T>
truncated_series<T> graded_trace(const graded_eigenvalues<T>& e, const truncation& tr) {
    truncated_series<T> s(tr);
    for (std::size_t i = 0; i < e.by_degree.size(); ++i)
        for (const T& lam : e.by_degree[i])
            s.add_term(exp_of(var::t, static_cast<int>(i)), lam);
    return s;
}

// Graded trace series on the tensor algebra: 1 / (1 - trace(f) q).
template <class T>
truncated_series<T> tensor_trace_series(const graded_eigenvalues<T>& e, int nmax) {
    const truncation tr = detail::trace_truncation(e, nmax);
    auto one = truncated_series<T>::one(tr);
    return (one - graded_trace(e, tr) * truncated_series<T>::monomial(tr, exp_of(var::q, 1), T(1)))
        .inverse();
}

// Graded trace series on the symmetric algebra: prod_{i,j} (1 - lambda t^i q)^{-1}.
template <class T>
truncated_series<T> sym_trace_series(const graded_eigenvalues<T>& e, int nmax) {
    const truncation tr = detail::trace_truncation(e, nmax);
    auto acc = truncated_series<T>::one(tr);
    for (std::size_t i = 0; i < e.by_degree.size(); ++i)
        for (const T& lam : e.by_degree[i])
            acc *= truncated_series<T>::geometric(tr, exp_of(var::q, 1, var::t, static_cast<int>(i)),
                                                  lam);
    return acc;
}

// Graded trace series on the exterior algebra: prod_{i,j} (1 + lambda t^i q),
// a q-polynomial of degree dim E.
template <class T>
truncated_series<T> ext_trace_series(const graded_eigenvalues<T>& e, int nmax) {
    const truncation tr = detail::trace_truncation(e, nmax);
    auto acc = truncated_series<T>::one(tr);
    for (std::size_t i = 0; i < e.by_degree.size(); ++i)
        for (const T& lam : e.by_degree[i]) {
            auto factor = truncated_series<T>::one(tr);
            factor.add_term(exp_of(var::q, 1, var::t, static_cast<int>(i)), lam);
            acc *= factor;
        }
    return acc;
}

} // namespace hilbaut

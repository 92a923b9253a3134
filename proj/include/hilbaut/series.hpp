#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "rational.hpp"

namespace hilbaut {

// The four formal variables the toolkit ever needs. Series declare which
// subset they use; the canonical ordering q < t < x < y fixes term order.
enum class var : int { q = 0, t = 1, x = 2, y = 3 };

inline constexpr std::size_t max_vars = 4;
using exponents = std::array<int, max_vars>;

inline const char* var_name(var v) {
    static const char* names[max_vars] = {"q", "t", "x", "y"};
    return names[static_cast<int>(v)];
}

// Per-variable truncation bounds; -1 marks a variable the series does not use.
class truncation {
public:
    truncation() { b_.fill(-1); }
    truncation(std::initializer_list<std::pair<var, int>> bounds) {
        b_.fill(-1);
        for (auto [v, b] : bounds)
            set(v, b);
    }

    truncation& set(var v, int bound) {
        if (bound < 0)
            throw std::invalid_argument("truncation: bound must be non-negative");
        b_[static_cast<int>(v)] = bound;
        return *this;
    }

    int bound(var v) const { return b_[static_cast<int>(v)]; }
    bool uses(var v) const { return b_[static_cast<int>(v)] >= 0; }

    // Shared variables must agree exactly; a variable used by only one side is
    // fine (the other side is constant in it).
    bool compatible(const truncation& o) const {
        for (std::size_t i = 0; i < max_vars; ++i)
            if (b_[i] >= 0 && o.b_[i] >= 0 && b_[i] != o.b_[i])
                return false;
        return true;
    }

    truncation merged(const truncation& o) const {
        if (!compatible(o))
            throw std::invalid_argument("truncation: incompatible bounds");
        truncation r = *this;
        for (std::size_t i = 0; i < max_vars; ++i)
            if (o.b_[i] >= 0)
                r.b_[i] = o.b_[i];
        return r;
    }

    truncation without(var v) const {
        truncation r = *this;
        r.b_[static_cast<int>(v)] = -1;
        return r;
    }

    bool in_bounds(const exponents& e) const {
        for (std::size_t i = 0; i < max_vars; ++i) {
            if (e[i] == 0)
                continue;
            if (e[i] < 0 || b_[i] < 0 || e[i] > b_[i])
                return false;
        }
        return true;
    }

    // True when the exponent is valid but merely exceeds a bound (so the term
    // is silently dropped rather than rejected).
    bool droppable(const exponents& e) const {
        for (std::size_t i = 0; i < max_vars; ++i) {
            if (e[i] < 0)
                return false;
            if (e[i] > 0 && b_[i] < 0)
                return false;
        }
        return true;
    }

    friend bool operator==(const truncation& a, const truncation& b) { return a.b_ == b.b_; }
    friend bool operator!=(const truncation& a, const truncation& b) { return !(a == b); }

    // Desk-scale defaults that cover every shipped computation with room.
    static truncation defaults() {
        return truncation{{var::q, 8}, {var::t, 40}, {var::x, 16}, {var::y, 16}};
    }

private:
    std::array<int, max_vars> b_;
};

inline bool is_zero(const std::complex<double>& z) { return z.real() == 0.0 && z.imag() == 0.0; }
inline std::complex<double> inverse_of(const std::complex<double>& z) {
    if (is_zero(z))
        throw std::domain_error("complex scalar: inverse of zero");
    return 1.0 / z;
}

// Formal power series in a subset of {q, t, x, y}, truncated per variable.
// Arithmetic is exact below the bounds; terms past a bound are discarded.
// Coefficients are any of the toolkit scalars (rational, cyclotomic, complex),
// one kind per series. Terms live in an ordered map keyed by exponent tuple,
// giving every series a canonical, deterministic term order.
template <class T>
class truncated_series {
public:
    using term_map = std::map<exponents, T>;

    truncated_series() = default;
    explicit truncated_series(truncation tr) : tr_(tr) {}

    static truncated_series zero(const truncation& tr) { return truncated_series(tr); }

    static truncated_series constant(const truncation& tr, T c) {
        truncated_series s(tr);
        s.add_term(exponents{0, 0, 0, 0}, std::move(c));
        return s;
    }

    static truncated_series one(const truncation& tr) { return constant(tr, T(1)); }

    static truncated_series monomial(const truncation& tr, const exponents& e, T c) {
        truncated_series s(tr);
        s.add_term(e, std::move(c));
        return s;
    }

    // Geometric series 1/(1 - c * X^e), expanded within bounds.
    static truncated_series geometric(const truncation& tr, const exponents& e, const T& c) {
        bool progress = false;
        for (std::size_t i = 0; i < max_vars; ++i) {
            if (e[i] < 0 || (e[i] > 0 && !tr.uses(static_cast<var>(i))))
                throw std::invalid_argument("truncated_series: geometric step outside the variable set");
            if (e[i] > 0)
                progress = true;
        }
        if (!progress)
            throw std::invalid_argument("truncated_series: geometric needs a nonconstant monomial");
        truncated_series s(tr);
        exponents cur{0, 0, 0, 0};
        T coeff(1);
        while (tr.in_bounds(cur)) {
            if (!hilbaut::is_zero(coeff))
                s.terms_[cur] = coeff;
            for (std::size_t i = 0; i < max_vars; ++i)
                cur[i] += e[i];
            coeff = coeff * c;
        }
        return s;
    }

    const truncation& bounds() const { return tr_; }
    const term_map& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const exponents& e, T c) {
        if (tr_.in_bounds(e)) {
            auto it = terms_.find(e);
            if (it == terms_.end()) {
                if (!hilbaut::is_zero(c))
                    terms_.emplace(e, std::move(c));
            } else {
                it->second += c;
                if (hilbaut::is_zero(it->second))
                    terms_.erase(it);
            }
            return;
        }
        if (!tr_.droppable(e))
            throw std::invalid_argument(
                "truncated_series: negative exponent or variable outside the declared set");
    }

    T coefficient(const exponents& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? T(0) : it->second;
    }

    // The coefficient of v^k, as a series in the remaining variables.
    truncated_series coefficient_of(var v, int k) const {
        const int vi = static_cast<int>(v);
        truncated_series out(tr_.without(v));
        for (const auto& [e, c] : terms_) {
            if (e[vi] != k)
                continue;
            exponents r = e;
            r[vi] = 0;
            out.terms_[r] = c;
        }
        return out;
    }

    truncated_series substitute(var v, const T& value) const {
        const int vi = static_cast<int>(v);
        truncated_series out(tr_.without(v));
        for (const auto& [e, c] : terms_) {
            exponents r = e;
            r[vi] = 0;
            T scaled = c;
            for (int k = 0; k < e[vi]; ++k)
                scaled = scaled * value;
            out.add_term(r, std::move(scaled));
        }
        return out;
    }

    truncated_series operator-() const {
        truncated_series out(tr_);
        for (const auto& [e, c] : terms_)
            out.terms_[e] = T(0) - c;
        return out;
    }

    friend truncated_series operator+(const truncated_series& a, const truncated_series& b) {
        truncated_series out(a.tr_.merged(b.tr_));
        out.terms_ = a.terms_;
        for (const auto& [e, c] : b.terms_) {
            auto it = out.terms_.find(e);
            if (it == out.terms_.end())
                out.terms_.emplace(e, c);
            else {
                it->second += c;
                if (hilbaut::is_zero(it->second))
                    out.terms_.erase(it);
            }
        }
        return out;
    }

    friend truncated_series operator-(const truncated_series& a, const truncated_series& b) {
        return a + (-b);
    }

    friend truncated_series operator*(const truncated_series& a, const truncated_series& b) {
        truncated_series out(a.tr_.merged(b.tr_));
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                exponents e;
                bool keep = true;
                for (std::size_t i = 0; i < max_vars; ++i) {
                    e[i] = ea[i] + eb[i];
                    if (e[i] != 0 && (!out.tr_.uses(static_cast<var>(i)) ||
                                      e[i] > out.tr_.bound(static_cast<var>(i))))
                        keep = false;
                }
                if (!keep)
                    continue;
                T prod = ca * cb;
                auto it = out.terms_.find(e);
                if (it == out.terms_.end()) {
                    if (!hilbaut::is_zero(prod))
                        out.terms_.emplace(e, std::move(prod));
                } else {
                    it->second += prod;
                    if (hilbaut::is_zero(it->second))
                        out.terms_.erase(it);
                }
            }
        return out;
    }

    truncated_series& operator+=(const truncated_series& o) { return *this = *this + o; }
    truncated_series& operator-=(const truncated_series& o) { return *this = *this - o; }
    truncated_series& operator*=(const truncated_series& o) { return *this = *this * o; }

    truncated_series scaled(const T& c) const {
        truncated_series out(tr_);
        for (const auto& [e, v] : terms_) {
            T prod = v * c;
            if (!hilbaut::is_zero(prod))
                out.terms_[e] = std::move(prod);
        }
        return out;
    }

    truncated_series pow(long e) const {
        if (e < 0)
            return inverse().pow(-e);
        truncated_series acc = one(tr_), base = *this;
        while (e > 0) {
            if (e & 1)
                acc *= base;
            base *= base;
            e >>= 1;
        }
        return acc;
    }

    // Multiplicative inverse of a series with invertible constant term:
    // write this = c0 (1 - y), then 1/this = (1/c0) sum y^k. The sum stops
    // once y^k falls entirely past the truncation bounds.
    truncated_series inverse() const {
        const T c0 = coefficient(exponents{0, 0, 0, 0});
        if (hilbaut::is_zero(c0))
            throw std::domain_error("truncated_series: inverse needs a unit constant term");
        const T c0_inv = inverse_of(c0);
        truncated_series y = one(tr_) - scaled(c0_inv);
        truncated_series acc = one(tr_), pw = one(tr_);
        long guard = 1;
        for (std::size_t i = 0; i < max_vars; ++i)
            if (tr_.bound(static_cast<var>(i)) > 0)
                guard += tr_.bound(static_cast<var>(i));
        for (long k = 0; k < guard; ++k) {
            pw *= y;
            if (pw.is_zero())
                break;
            acc += pw;
        }
        return acc.scaled(c0_inv);
    }

    friend bool operator==(const truncated_series& a, const truncated_series& b) {
        return a.tr_ == b.tr_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const truncated_series& a, const truncated_series& b) {
        return !(a == b);
    }

    std::string str() const {
        if (terms_.empty())
            return "0";
        std::string out;
        for (const auto& [e, c] : terms_) {
            if (!out.empty())
                out += " + ";
            std::string mono;
            for (std::size_t i = 0; i < max_vars; ++i) {
                if (e[i] == 0)
                    continue;
                if (!mono.empty())
                    mono += "*";
                mono += var_name(static_cast<var>(i));
                if (e[i] > 1)
                    mono += "^" + std::to_string(e[i]);
            }
            std::string coeff;
            using hilbaut::to_string;
            coeff = to_string(c);
            if (mono.empty())
                out += coeff;
            else if (coeff == "1")
                out += mono;
            else if (coeff == "-1")
                out += "-" + mono;
            else if (coeff.find_first_of("+- ") != std::string::npos && coeff[0] != '-')
                out += "(" + coeff + ")*" + mono;
            else if (coeff.find_first_of("+ ") != std::string::npos)
                out += "(" + coeff + ")*" + mono;
            else
                out += coeff + "*" + mono;
        }
        return out;
    }

private:
    truncation tr_;
    term_map terms_;
};

inline std::string to_string(const std::complex<double>& z) {
    return "(" + std::to_string(z.real()) + "," + std::to_string(z.imag()) + ")";
}

// Product of a factor list (the callers guarantee factors beyond the q-bound
// are absent, i.e. contribute the constant 1).
template <class T>
truncated_series<T> series_product(const std::vector<truncated_series<T>>& factors) {
    if (factors.empty())
        throw std::invalid_argument("series_product: empty factor list");
    truncated_series<T> acc = factors.front();
    for (std::size_t i = 1; i < factors.size(); ++i)
        acc *= factors[i];
    return acc;
}

inline exponents exp_of(var v, int k) {
    exponents e{0, 0, 0, 0};
    e[static_cast<int>(v)] = k;
    return e;
}

inline exponents exp_of(var v1, int k1, var v2, int k2) {
    exponents e{0, 0, 0, 0};
    e[static_cast<int>(v1)] = k1;
    e[static_cast<int>(v2)] = k2;
    return e;
}

} // namespace hilbaut

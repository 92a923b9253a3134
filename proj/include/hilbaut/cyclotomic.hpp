#pragma once

#include <algorithm>
#include <complex>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace hilbaut {

namespace detail {

// Dense univariate polynomials over the rationals, coefficient i belongs to
// x^i, trailing zeros trimmed. Only what cyclotomic arithmetic needs.
using polyq = std::vector<rational>;

inline void poly_trim(polyq& p) {
    while (!p.empty() && p.back().is_zero())
        p.pop_back();
}

inline polyq poly_mul(const polyq& a, const polyq& b) {
    if (a.empty() || b.empty())
        return {};
    polyq r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero())
            continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] += a[i] * b[j];
    }
    poly_trim(r);
    return r;
}

// Remainder of a modulo a monic divisor.
inline polyq poly_rem(polyq a, const polyq& monic) {
    poly_trim(a);
    const std::size_t d = monic.size() - 1;
    while (a.size() > d) {
        const rational lead = a.back();
        const std::size_t shift = a.size() - 1 - d;
        if (!lead.is_zero())
            for (std::size_t i = 0; i < d; ++i)
                a[shift + i] -= lead * monic[i];
        a.pop_back();
        poly_trim(a);
    }
    return a;
}

// Exact quotient a / b when the division is known to be exact (used for the
// recursive cyclotomic-polynomial construction, where it always is).
inline polyq poly_exact_div(polyq a, const polyq& b) {
    poly_trim(a);
    if (a.empty())
        return {};
    polyq q(a.size() - b.size() + 1);
    const rational lead_inv = b.back().inverse();
    for (std::size_t k = q.size(); k-- > 0;) {
        rational c = (a.size() > k + b.size() - 1) ? a[k + b.size() - 1] : rational(0);
        q[k] = c * lead_inv;
        if (!q[k].is_zero())
            for (std::size_t i = 0; i < b.size(); ++i)
                a[k + i] -= q[k] * b[i];
    }
    poly_trim(a);
    if (!a.empty())
        throw std::logic_error("poly_exact_div: division was not exact");
    poly_trim(q);
    return q;
}

inline std::vector<long> divisors_of(long m) {
    std::vector<long> d;
    for (long k = 1; k * k <= m; ++k)
        if (m % k == 0) {
            d.push_back(k);
            if (k != m / k)
                d.push_back(m / k);
        }
    std::sort(d.begin(), d.end());
    return d;
}

inline long totient(long m) {
    long r = m;
    for (long p = 2; p * p <= m; ++p)
        if (m % p == 0) {
            r -= r / p;
            while (m % p == 0)
                m /= p;
        }
    if (m > 1)
        r -= r / m;
    return r;
}

// Phi_m via x^m - 1 = prod_{d | m} Phi_d. Cached; conductors stay small in
// practice so the recursion is shallow.
inline const polyq& cyclotomic_polynomial(long m) {
    static std::map<long, polyq> cache;
    static std::mutex mx;
    std::lock_guard<std::mutex> lock(mx);
    auto it = cache.find(m);
    if (it != cache.end())
        return it->second;

    // iterate over divisors in increasing order so dependencies exist first
    for (long d : divisors_of(m)) {
        if (cache.count(d))
            continue;
        polyq num(d + 1);
        num[0] = rational(-1);
        num[d] = rational(1);
        for (long e : divisors_of(d))
            if (e < d)
                num = poly_exact_div(std::move(num), cache.at(e));
        cache.emplace(d, std::move(num));
    }
    return cache.at(m);
}

// Solve M y = rhs exactly; M given column-major. Returns one solution (free
// variables set to zero) or nullopt when the system is inconsistent.
inline std::optional<std::vector<rational>>
solve_exact(std::vector<std::vector<rational>> cols, std::vector<rational> rhs) {
    const std::size_t ncols = cols.size();
    const std::size_t nrows = rhs.size();
    std::vector<std::size_t> pivot_col_of_row;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < ncols && rank < nrows; ++c) {
        std::size_t prow = rank;
        while (prow < nrows && cols[c][prow].is_zero())
            ++prow;
        if (prow == nrows)
            continue;
        if (prow != rank) {
            for (std::size_t cc = 0; cc < ncols; ++cc)
                std::swap(cols[cc][prow], cols[cc][rank]);
            std::swap(rhs[prow], rhs[rank]);
        }
        const rational inv = cols[c][rank].inverse();
        for (std::size_t r = 0; r < nrows; ++r) {
            if (r == rank || cols[c][r].is_zero())
                continue;
            const rational f = cols[c][r] * inv;
            for (std::size_t cc = c; cc < ncols; ++cc)
                if (!cols[cc][rank].is_zero())
                    cols[cc][r] -= f * cols[cc][rank];
            rhs[r] -= f * rhs[rank];
        }
        pivot_col_of_row.push_back(c);
        ++rank;
    }
    // every unpivoted row is all-zero on the left, so rhs must vanish there
    for (std::size_t r = rank; r < nrows; ++r)
        if (!rhs[r].is_zero())
            return std::nullopt;
    std::vector<rational> y(ncols, rational(0));
    for (std::size_t r = 0; r < rank; ++r) {
        const std::size_t c = pivot_col_of_row[r];
        y[c] = rhs[r] / cols[c][r];
    }
    return y;
}

} // namespace detail

// Exact element of the cyclotomic field Q(zeta_m), stored as a residue modulo
// the m-th cyclotomic polynomial in the power basis {1, z, ..., z^(phi(m)-1)},
// z = exp(2*pi*i/m). Values are normalized to their minimal conductor after
// every operation, so equality is plain field/coefficient comparison and
// rationals always carry conductor 1.
class cyclotomic {
public:
    cyclotomic() : m_(1), c_{rational(0)} {}
    cyclotomic(int n) : m_(1), c_{rational(n)} {}
    cyclotomic(long n) : m_(1), c_{rational(n)} {}
    cyclotomic(const rational& r) : m_(1), c_{r} {}

    // Value of a raw polynomial sum_k coeffs[k] * zeta_m^k (any length).
    static cyclotomic from_polynomial(long m, const std::vector<rational>& coeffs) {
        if (m < 1)
            throw std::invalid_argument("cyclotomic: conductor must be >= 1");
        detail::polyq p(coeffs);
        detail::poly_trim(p);
        cyclotomic out;
        out.m_ = m;
        out.c_ = detail::poly_rem(std::move(p), detail::cyclotomic_polynomial(m));
        out.c_.resize(detail::totient(m), rational(0));
        out.normalize();
        return out;
    }

    // zeta_m^k
    static cyclotomic root_of_unity(long m, long k) {
        if (m < 1)
            throw std::invalid_argument("cyclotomic: conductor must be >= 1");
        k %= m;
        if (k < 0)
            k += m;
        std::vector<rational> p(k + 1);
        p[k] = rational(1);
        return from_polynomial(m, p);
    }

    long conductor() const { return m_; }
    const std::vector<rational>& coefficients() const { return c_; }

    bool is_zero() const { return m_ == 1 && c_[0].is_zero(); }
    bool is_rational() const { return m_ == 1; }

    std::optional<rational> as_rational() const {
        if (m_ != 1)
            return std::nullopt;
        return c_[0];
    }

    cyclotomic operator-() const {
        cyclotomic out = *this;
        for (auto& c : out.c_)
            c = -c;
        return out;
    }

    friend cyclotomic operator+(const cyclotomic& a, const cyclotomic& b) {
        return combine(a, b, false);
    }
    friend cyclotomic operator-(const cyclotomic& a, const cyclotomic& b) {
        return combine(a, b, true);
    }

    friend cyclotomic operator*(const cyclotomic& a, const cyclotomic& b) {
        if (a.is_zero() || b.is_zero())
            return cyclotomic();
        const long l = std::lcm(a.m_, b.m_);
        check_conductor(l);
        detail::polyq pa = a.lifted_poly(l), pb = b.lifted_poly(l);
        cyclotomic out;
        out.m_ = l;
        out.c_ = detail::poly_rem(detail::poly_mul(pa, pb), detail::cyclotomic_polynomial(l));
        out.c_.resize(detail::totient(l), rational(0));
        out.normalize();
        return out;
    }

    cyclotomic& operator+=(const cyclotomic& o) { return *this = *this + o; }
    cyclotomic& operator-=(const cyclotomic& o) { return *this = *this - o; }
    cyclotomic& operator*=(const cyclotomic& o) { return *this = *this * o; }

    cyclotomic inverse() const {
        if (is_zero())
            throw std::domain_error("cyclotomic: inverse of zero");
        if (m_ == 1)
            return cyclotomic(c_[0].inverse());
        // extended Euclid against Phi_m; Phi_m is irreducible so the gcd is a
        // nonzero rational and u * this = gcd (mod Phi_m)
        detail::polyq r0 = detail::cyclotomic_polynomial(m_), r1 = c_;
        detail::poly_trim(r1);
        detail::polyq u0 = {}, u1 = {rational(1)};
        while (r1.size() > 1) {
            // divide r0 by r1
            detail::polyq q;
            detail::polyq rem = r0;
            const rational lead_inv = r1.back().inverse();
            while (rem.size() >= r1.size()) {
                const std::size_t shift = rem.size() - r1.size();
                const rational f = rem.back() * lead_inv;
                if (q.size() < shift + 1)
                    q.resize(shift + 1);
                q[shift] += f;
                for (std::size_t i = 0; i < r1.size(); ++i)
                    rem[shift + i] -= f * r1[i];
                detail::poly_trim(rem);
                if (rem.empty())
                    break;
            }
            detail::polyq u2_sub = detail::poly_mul(q, u1);
            detail::polyq u2 = u0;
            if (u2.size() < u2_sub.size())
                u2.resize(u2_sub.size());
            for (std::size_t i = 0; i < u2_sub.size(); ++i)
                u2[i] -= u2_sub[i];
            detail::poly_trim(u2);
            r0 = std::move(r1);
            r1 = std::move(rem);
            u0 = std::move(u1);
            u1 = std::move(u2);
        }
        if (r1.empty())
            throw std::logic_error("cyclotomic: gcd with an irreducible polynomial vanished");
        const rational g_inv = r1[0].inverse();
        for (auto& c : u1)
            c *= g_inv;
        return from_polynomial(m_, u1);
    }

    cyclotomic pow(long e) const {
        if (e < 0)
            return inverse().pow(-e);
        cyclotomic acc(1), base = *this;
        while (e > 0) {
            if (e & 1)
                acc *= base;
            base *= base;
            e >>= 1;
        }
        return acc;
    }

    friend bool operator==(const cyclotomic& a, const cyclotomic& b) {
        return a.m_ == b.m_ && a.c_ == b.c_;
    }
    friend bool operator!=(const cyclotomic& a, const cyclotomic& b) { return !(a == b); }

    // total order for use as a map key (conductor, then coefficients)
    friend bool operator<(const cyclotomic& a, const cyclotomic& b) {
        if (a.m_ != b.m_)
            return a.m_ < b.m_;
        return std::lexicographical_compare(a.c_.begin(), a.c_.end(), b.c_.begin(), b.c_.end());
    }

    std::complex<double> approx() const {
        const double two_pi = 6.283185307179586476925286766559;
        const std::complex<double> z = std::polar(1.0, two_pi / static_cast<double>(m_));
        std::complex<double> acc(0.0, 0.0);
        for (std::size_t i = c_.size(); i-- > 0;)
            acc = acc * z + std::complex<double>(c_[i].approx(), 0.0);
        return acc;
    }

    // If the value is exactly a root of unity e^(2*pi*i*k/m), returns the
    // reduced pair (k, m); otherwise nullopt. Roots of unity inside Q(zeta_m)
    // are exactly +-zeta_m^j, so the search space is tiny.
    std::optional<std::pair<long, long>> as_root_of_unity() const {
        if (is_zero())
            return std::nullopt;
        const long big = std::lcm(2L, m_);
        for (long j = 0; j < m_; ++j) {
            const cyclotomic r = root_of_unity(m_, j);
            if (*this == r)
                return reduce_root(j * (big / m_), big);
            if (*this == -r)
                return reduce_root(j * (big / m_) + big / 2, big);
        }
        return std::nullopt;
    }

    // Multiplicative order when the value is a root of unity.
    std::optional<long> root_order() const {
        auto r = as_root_of_unity();
        if (!r)
            return std::nullopt;
        return r->second; // (k, m) reduced means the order is m
    }

    std::string str() const {
        if (m_ == 1)
            return c_[0].str();
        std::string out;
        for (std::size_t i = c_.size(); i-- > 0;) {
            if (c_[i].is_zero())
                continue;
            const bool neg = c_[i].sign() < 0;
            const rational mag = neg ? -c_[i] : c_[i];
            if (out.empty())
                out += neg ? "-" : "";
            else
                out += neg ? " - " : " + ";
            std::string coeff = mag.str();
            if (i == 0) {
                out += coeff;
                continue;
            }
            if (coeff != "1")
                out += coeff + "*";
            out += "z" + std::to_string(m_);
            if (i > 1)
                out += "^" + std::to_string(i);
        }
        return out.empty() ? "0" : out;
    }

private:
    long m_;
    std::vector<rational> c_; // length phi(m_)

    static void check_conductor(long l) {
        if (l > 1000000)
            throw std::domain_error("cyclotomic: conductor grew past 10^6");
    }

    static std::pair<long, long> reduce_root(long k, long m) {
        k %= m;
        if (k < 0)
            k += m;
        const long g = std::gcd(k, m);
        return g == 0 ? std::pair<long, long>(0, 1) : std::pair<long, long>(k / g, m / g);
    }

    detail::polyq lifted_poly(long big) const {
        const long f = big / m_;
        detail::polyq p;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i].is_zero())
                continue;
            const std::size_t e = i * static_cast<std::size_t>(f);
            if (p.size() < e + 1)
                p.resize(e + 1);
            p[e] = c_[i];
        }
        return detail::poly_rem(std::move(p), detail::cyclotomic_polynomial(big));
    }

    static cyclotomic combine(const cyclotomic& a, const cyclotomic& b, bool subtract) {
        const long l = std::lcm(a.m_, b.m_);
        check_conductor(l);
        detail::polyq pa = a.lifted_poly(l), pb = b.lifted_poly(l);
        if (pa.size() < pb.size())
            pa.resize(pb.size());
        for (std::size_t i = 0; i < pb.size(); ++i) {
            if (subtract)
                pa[i] -= pb[i];
            else
                pa[i] += pb[i];
        }
        cyclotomic out;
        out.m_ = l;
        detail::poly_trim(pa);
        out.c_ = std::move(pa);
        out.c_.resize(detail::totient(l), rational(0));
        out.normalize();
        return out;
    }

    // Rewrite over the smallest cyclotomic subfield containing the value.
    // Candidate conductors are the divisors of the current one; the set of
    // valid divisors is upward closed, so the first (smallest) hit is minimal.
    void normalize() {
        detail::polyq self(c_);
        detail::poly_trim(self);
        if (self.empty()) {
            m_ = 1;
            c_ = {rational(0)};
            return;
        }
        if (m_ == 1)
            return;
        if (self.size() == 1) { // rational already
            m_ = 1;
            c_ = {self[0]};
            return;
        }
        for (long d : detail::divisors_of(m_)) {
            if (d == m_)
                break;
            const long phi_d = detail::totient(d);
            // columns: zeta_d^j lifted into the Q(zeta_m) power basis
            std::vector<std::vector<rational>> cols;
            cols.reserve(phi_d);
            const long f = m_ / d;
            for (long j = 0; j < phi_d; ++j) {
                detail::polyq p(static_cast<std::size_t>(j) * f + 1);
                p.back() = rational(1);
                p = detail::poly_rem(std::move(p), detail::cyclotomic_polynomial(m_));
                p.resize(c_.size(), rational(0));
                cols.push_back(std::move(p));
            }
            auto sol = detail::solve_exact(std::move(cols), c_);
            if (sol) {
                m_ = d;
                c_ = std::move(*sol);
                c_.resize(phi_d, rational(0));
                if (d == 1 && c_.empty())
                    c_ = {rational(0)};
                return; // already the minimal conductor; coefficients are the
                        // reduced basis representation by construction
            }
        }
    }
};

inline bool is_zero(const cyclotomic& c) { return c.is_zero(); }
inline cyclotomic inverse_of(const cyclotomic& c) { return c.inverse(); }
inline std::string to_string(const cyclotomic& c) { return c.str(); }

// Canonical residue of a raw polynomial in zeta_m (spec-level entry point).
inline cyclotomic cyc_normalize(long m, const std::vector<rational>& coeffs) {
    return cyclotomic::from_polynomial(m, coeffs);
}

// Certifies that a value is a rational integer and extracts it.
inline std::optional<long long> cyc_as_integer(const cyclotomic& c) {
    auto r = c.as_rational();
    if (!r)
        return std::nullopt;
    return r->as_integer();
}

} // namespace hilbaut

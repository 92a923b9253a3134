#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include <gmpxx.h>

namespace hilbaut {

// Exact rational scalar backed by GMP. Kept canonical at all times (lowest
// terms, positive denominator), so equality is plain value equality.
class rational {
public:
    rational() : v_(0) {}
    rational(int n) : v_(n) {}
    rational(long n) : v_(n) {}
    rational(long long n) : v_(static_cast<long>(n)) {
        static_assert(sizeof(long) == sizeof(long long), "needs 64-bit long");
    }
    rational(long num, long den) {
        if (den == 0)
            throw std::domain_error("rational: zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }
    explicit rational(mpz_class n) : v_(std::move(n)) {}
    explicit rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

    // Accepts "n" or "n/d" in base 10.
    explicit rational(const std::string& text) {
        try {
            v_ = mpq_class(text);
        } catch (const std::invalid_argument&) {
            throw std::invalid_argument("rational: cannot parse '" + text + "'");
        }
        if (v_.get_den() == 0)
            throw std::domain_error("rational: zero denominator in '" + text + "'");
        v_.canonicalize();
    }

    const mpz_class& num() const { return v_.get_num(); }
    const mpz_class& den() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    std::optional<long long> as_integer() const {
        if (!is_integer() || !v_.get_num().fits_slong_p())
            return std::nullopt;
        return v_.get_num().get_si();
    }

    double approx() const { return v_.get_d(); }

    rational operator-() const { return rational(mpq_class(-v_)); }
    rational& operator+=(const rational& o) { v_ += o.v_; return *this; }
    rational& operator-=(const rational& o) { v_ -= o.v_; return *this; }
    rational& operator*=(const rational& o) { v_ *= o.v_; return *this; }
    rational& operator/=(const rational& o) {
        if (o.is_zero())
            throw std::domain_error("rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend rational operator+(rational a, const rational& b) { return a += b; }
    friend rational operator-(rational a, const rational& b) { return a -= b; }
    friend rational operator*(rational a, const rational& b) { return a *= b; }
    friend rational operator/(rational a, const rational& b) { return a /= b; }

    friend bool operator==(const rational& a, const rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const rational& a, const rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const rational& a, const rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const rational& a, const rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const rational& a, const rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const rational& a, const rational& b) { return a.v_ >= b.v_; }

    rational pow(long e) const {
        if (e < 0)
            return inverse().pow(-e);
        rational acc(1), base = *this;
        while (e > 0) {
            if (e & 1)
                acc *= base;
            base *= base;
            e >>= 1;
        }
        return acc;
    }

    rational inverse() const {
        if (is_zero())
            throw std::domain_error("rational: inverse of zero");
        return rational(mpq_class(1) / v_);
    }

    std::string str() const { return v_.get_str(); }

private:
    mpq_class v_;
};

inline bool is_zero(const rational& r) { return r.is_zero(); }
inline rational inverse_of(const rational& r) { return r.inverse(); }
inline std::string to_string(const rational& r) { return r.str(); }

} // namespace hilbaut

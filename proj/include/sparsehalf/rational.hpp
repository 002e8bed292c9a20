#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <utility>

namespace sparsehalf {

// Exact rational number backed by arbitrary-precision integers.
// Always canonical: positive denominator, gcd(|num|, den) == 1.
// Every operation is exact; nothing ever rounds.
class Rational {
public:
    Rational() : q_(0) {}
    Rational(int num) : q_(num) {}                 // NOLINT: implicit for literals
    Rational(long num) : q_(num) {}                // NOLINT
    Rational(long long num) : q_(static_cast<long>(num)) {}  // NOLINT
    Rational(long long num, long long den)
        : Rational(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den))) {}

    Rational(mpz_class num, mpz_class den) {
        if (den == 0) throw std::domain_error("Rational: zero denominator");
        q_ = mpq_class(std::move(num), std::move(den));
        q_.canonicalize();
    }

    explicit Rational(mpq_class q) : q_(std::move(q)) {
        if (q_.get_den() == 0) throw std::domain_error("Rational: zero denominator");
        q_.canonicalize();
    }

    // Accepts "p/q" or a bare integer "p".
    static Rational parse(const std::string& text) {
        auto slash = text.find('/');
        try {
            if (slash == std::string::npos) return Rational(mpz_class(text), mpz_class(1));
            return Rational(mpz_class(text.substr(0, slash)), mpz_class(text.substr(slash + 1)));
        } catch (const std::invalid_argument&) {
            throw std::invalid_argument("Rational: cannot parse '" + text + "'");
        }
    }

    const mpz_class& num() const { return q_.get_num(); }
    const mpz_class& den() const { return q_.get_den(); }

    bool is_zero() const { return q_ == 0; }
    bool is_integer() const { return q_.get_den() == 1; }

    // Largest integer <= *this.
    mpz_class floor() const {
        mpz_class r;
        mpz_fdiv_q(r.get_mpz_t(), q_.get_num().get_mpz_t(), q_.get_den().get_mpz_t());
        return r;
    }

    // *this - floor(*this), always in [0, 1).
    Rational fractional() const { return *this - Rational(floor(), mpz_class(1)); }

    Rational operator-() const { return Rational(mpq_class(-q_)); }
    Rational operator+(const Rational& o) const { return Rational(mpq_class(q_ + o.q_)); }
    Rational operator-(const Rational& o) const { return Rational(mpq_class(q_ - o.q_)); }
    Rational operator*(const Rational& o) const { return Rational(mpq_class(q_ * o.q_)); }
    Rational operator/(const Rational& o) const {
        if (o.q_ == 0) throw std::domain_error("Rational: division by zero");
        return Rational(mpq_class(q_ / o.q_));
    }
    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) == 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    // Canonical "num/den" form, e.g. "-1/3", "0/1".
    std::string str() const {
        return q_.get_num().get_str() + "/" + q_.get_den().get_str();
    }

private:
    mpq_class q_;
};

inline const Rational& min(const Rational& a, const Rational& b) { return b < a ? b : a; }
inline const Rational& max(const Rational& a, const Rational& b) { return a < b ? b : a; }

}  // namespace sparsehalf

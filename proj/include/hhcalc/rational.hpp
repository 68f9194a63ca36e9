#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hhcalc {

/// Exact rational number backed by GMP. Always stored in lowest terms with a
/// positive denominator (mpq_class canonicalizes after every operation).
class Rational {
public:
    Rational() = default;
    Rational(long value) : v_(value) {}
    Rational(long num, long den) {
        if (den == 0) throw std::domain_error("rational: zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }
    explicit Rational(mpq_class value) : v_(std::move(value)) { v_.canonicalize(); }

    static Rational from_strings(const std::string& num, const std::string& den) {
        mpz_class n(num), d(den);
        if (d == 0) throw std::domain_error("rational: zero denominator");
        mpq_class q(n, d);
        q.canonicalize();
        return Rational(std::move(q));
    }

    [[nodiscard]] bool is_zero() const { return sgn(v_) == 0; }
    [[nodiscard]] bool is_one() const { return v_ == 1; }

    [[nodiscard]] Rational inv() const {
        if (is_zero()) throw std::domain_error("rational: inverse of zero");
        return Rational(mpq_class(1) / v_);
    }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    Rational operator-() const { return Rational(mpq_class(-v_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }

    [[nodiscard]] const mpq_class& value() const { return v_; }

    /// `a/b`, or `a` when the denominator is 1.
    [[nodiscard]] std::string to_string() const {
        if (v_.get_den() == 1) return v_.get_num().get_str();
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }

private:
    mpq_class v_{0};
};

}  // namespace hhcalc

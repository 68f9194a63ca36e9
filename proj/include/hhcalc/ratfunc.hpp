#pragma once

#include <string>

#include "hhcalc/polynomial.hpp"

namespace hhcalc {

/// Element of F_p(t): a reduced fraction num/den with den monic and
/// gcd(num, den) = 1. Zero is 0/1.
///
/// A default-constructed value is a zero not yet tied to any characteristic;
/// it adopts the characteristic of whatever it is combined with. Every other
/// value carries its p, and combining two different p is an error.
class RationalFunction {
public:
    RationalFunction() = default;
    RationalFunction(PolyFp num, PolyFp den) : num_(std::move(num)), den_(std::move(den)) {
        if (num_.modulus() != den_.modulus()) throw std::invalid_argument("rational function: mixed characteristics");
        if (den_.is_zero()) throw std::domain_error("rational function: zero denominator");
        normalize();
    }

    static RationalFunction constant(std::uint32_t p, long value) {
        return RationalFunction(PolyFp::constant(p, value), PolyFp::constant(p, 1));
    }
    /// The indeterminate t.
    static RationalFunction indeterminate(std::uint32_t p) {
        return RationalFunction(PolyFp::monomial(p, 1), PolyFp::constant(p, 1));
    }

    /// 0 only for an unbound default-constructed zero.
    [[nodiscard]] std::uint32_t characteristic() const { return num_.modulus(); }
    [[nodiscard]] bool is_zero() const { return num_.is_zero(); }
    [[nodiscard]] bool is_one() const { return num_.is_one() && den_.is_one(); }
    [[nodiscard]] bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    [[nodiscard]] const PolyFp& numerator() const { return num_; }
    [[nodiscard]] const PolyFp& denominator() const { return den_; }

    [[nodiscard]] RationalFunction inv() const {
        if (is_zero()) throw std::domain_error("rational function: inverse of zero");
        return RationalFunction(den_, num_);
    }

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
        check_compatible(a, b);
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        if (a.den_ == b.den_) return RationalFunction(a.num_ + b.num_, a.den_);
        return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    RationalFunction operator-() const {
        RationalFunction r = *this;
        r.num_ = -r.num_;
        return r;
    }
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
        check_compatible(a, b);
        if (a.is_zero()) return a.characteristic() ? a : zero_like(b);
        if (b.is_zero()) return b.characteristic() ? b : zero_like(a);
        // Cross-cancel first to keep intermediate degrees small.
        const PolyFp g1 = gcd(a.num_, b.den_);
        const PolyFp g2 = gcd(b.num_, a.den_);
        const PolyFp n = a.num_.divmod(g1).first * b.num_.divmod(g2).first;
        const PolyFp d = a.den_.divmod(g2).first * b.den_.divmod(g1).first;
        return RationalFunction(n, d);
    }
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
        if (b.is_zero()) throw std::domain_error("rational function: division by zero");
        return a * b.inv();
    }
    RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
    RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
    RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
    RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }

    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
        return a.characteristic() == b.characteristic() && a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RationalFunction& a, const RationalFunction& b) { return !(a == b); }

    /// `num(t)/den(t)`, parenthesizing compound parts; `/1` is omitted.
    [[nodiscard]] std::string to_string() const {
        auto wrap = [](const PolyFp& f) {
            const bool compound = f.term_count() > 1 || (f.degree() > 0 && f.lead() != 1);
            return compound ? "(" + f.to_string() + ")" : f.to_string();
        };
        if (is_zero()) return "0";
        if (den_.is_one()) return num_.to_string();
        return wrap(num_) + "/" + wrap(den_);
    }

private:
    static void check_compatible(const RationalFunction& a, const RationalFunction& b) {
        if (a.characteristic() && b.characteristic() && a.characteristic() != b.characteristic())
            throw std::invalid_argument("rational function: mixed characteristics");
    }
    static RationalFunction zero_like(const RationalFunction& x) {
        if (x.characteristic() == 0) return {};
        return constant(x.characteristic(), 0);
    }

    void normalize() {
        if (num_.is_zero()) {
            den_ = PolyFp::constant(num_.modulus(), 1);
            return;
        }
        const PolyFp g = gcd(num_, den_);
        if (!g.is_one()) {
            num_ = num_.divmod(g).first;
            den_ = den_.divmod(g).first;
        }
        const std::uint32_t lead = den_.lead();
        if (lead != 1) {
            const auto s = static_cast<std::uint32_t>(PolyFp::inverse_mod(lead, den_.modulus()));
            num_ = num_.scaled(s);
            den_ = den_.scaled(s);
        }
    }

    PolyFp num_;
    PolyFp den_;
};

}  // namespace hhcalc

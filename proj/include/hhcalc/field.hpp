#pragma once

#include <array>
#include <concepts>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include "hhcalc/ratfunc.hpp"
#include "hhcalc/rational.hpp"

namespace hhcalc {

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

/// The rationals, characteristic 0.
struct RationalField {
    using value_type = Rational;

    [[nodiscard]] static constexpr std::string_view name() { return "rational"; }
    [[nodiscard]] std::uint32_t characteristic() const { return 0; }
    [[nodiscard]] value_type zero() const { return Rational(0); }
    [[nodiscard]] value_type one() const { return Rational(1); }
    [[nodiscard]] value_type from_int(long v) const { return Rational(v); }
    [[nodiscard]] value_type from_decimal(const std::string& digits) const { return Rational::from_strings(digits, "1"); }
    [[nodiscard]] bool has_indeterminate() const { return false; }
    [[nodiscard]] value_type indeterminate() const {
        throw std::invalid_argument("the rational backend has no indeterminate");
    }
    /// Only +1 and -1 are roots of unity in Q.
    [[nodiscard]] bool is_root_of_unity(const value_type& s) const {
        if (s.is_zero()) throw std::domain_error("is_root_of_unity: zero is not a unit");
        return s == Rational(1) || s == Rational(-1);
    }
    friend bool operator==(const RationalField&, const RationalField&) = default;
};

/// F_p(t) for a prime p.
struct RatFuncField {
    using value_type = RationalFunction;

    explicit RatFuncField(std::uint32_t prime) : p(prime) {
        if (!is_prime(p)) throw std::invalid_argument("p must be prime, got " + std::to_string(p));
    }

    std::uint32_t p;

    [[nodiscard]] static constexpr std::string_view name() { return "ratfunc"; }
    [[nodiscard]] std::uint32_t characteristic() const { return p; }
    [[nodiscard]] value_type zero() const { return RationalFunction::constant(p, 0); }
    [[nodiscard]] value_type one() const { return RationalFunction::constant(p, 1); }
    [[nodiscard]] value_type from_int(long v) const { return RationalFunction::constant(p, v); }
    [[nodiscard]] value_type from_decimal(const std::string& digits) const {
        std::uint64_t r = 0;
        for (char c : digits) r = (r * 10 + static_cast<std::uint64_t>(c - '0')) % p;
        return RationalFunction::constant(p, static_cast<long>(r));
    }
    [[nodiscard]] bool has_indeterminate() const { return true; }
    [[nodiscard]] value_type indeterminate() const { return RationalFunction::indeterminate(p); }
    /// Nonzero constants lie in F_p^x and are torsion; non-constant elements
    /// have infinite multiplicative order.
    [[nodiscard]] bool is_root_of_unity(const value_type& s) const {
        if (s.is_zero()) throw std::domain_error("is_root_of_unity: zero is not a unit");
        return s.is_constant();
    }
    friend bool operator==(const RatFuncField&, const RatFuncField&) = default;
};

template <class K>
concept ExactField = requires(const K& k, const typename K::value_type& a, const std::string& s, long n) {
    typename K::value_type;
    { K::name() } -> std::convertible_to<std::string_view>;
    { k.characteristic() } -> std::convertible_to<std::uint32_t>;
    { k.zero() } -> std::same_as<typename K::value_type>;
    { k.one() } -> std::same_as<typename K::value_type>;
    { k.from_int(n) } -> std::same_as<typename K::value_type>;
    { k.from_decimal(s) } -> std::same_as<typename K::value_type>;
    { k.indeterminate() } -> std::same_as<typename K::value_type>;
    { k.is_root_of_unity(a) } -> std::same_as<bool>;
    { a + a } -> std::same_as<typename K::value_type>;
    { a - a } -> std::same_as<typename K::value_type>;
    { a * a } -> std::same_as<typename K::value_type>;
    { a / a } -> std::same_as<typename K::value_type>;
    { -a } -> std::same_as<typename K::value_type>;
    { a.inv() } -> std::same_as<typename K::value_type>;
    { a.is_zero() } -> std::same_as<bool>;
    { a.to_string() } -> std::same_as<std::string>;
    { a == a } -> std::convertible_to<bool>;
};

template <ExactField K>
using Scalar = typename K::value_type;

/// Canonical residue of n modulo m (m > 0).
constexpr int mod(long n, int m) {
    const long r = n % m;
    return static_cast<int>(r < 0 ? r + m : r);
}

/// The coefficient field together with the parameters q0..q3.
template <ExactField K>
struct FieldSpec {
    K field;
    std::array<Scalar<K>, 4> q;

    FieldSpec(K f, std::array<Scalar<K>, 4> params) : field(std::move(f)), q(std::move(params)) {}

    /// q_i with i read modulo 4.
    [[nodiscard]] const Scalar<K>& q_at(long i) const { return q[static_cast<std::size_t>(mod(i, 4))]; }

    [[nodiscard]] Scalar<K> q_product() const { return q[0] * q[1] * q[2] * q[3]; }

    /// Throws std::invalid_argument naming the violated constraint.
    void validate() const {
        for (std::size_t i = 0; i < 4; ++i)
            if (q[i].is_zero()) throw std::invalid_argument("q" + std::to_string(i) + " must be nonzero");
        const Scalar<K> prod = q_product();
        if (field.is_root_of_unity(prod))
            throw std::invalid_argument("q0*q1*q2*q3 = " + prod.to_string() + " is a root of unity");
    }
};

template <ExactField K>
bool is_root_of_unity(const FieldSpec<K>& spec, const Scalar<K>& s) {
    return spec.field.is_root_of_unity(s);
}

/// S_{u,v} = q_v q_{v+1} ... q_{v+u-1}, indices mod 4; S_{0,v} = 1.
template <ExactField K>
Scalar<K> s_product(int u, long v, const FieldSpec<K>& spec) {
    if (u < 0) throw std::invalid_argument("s_product: length must be nonnegative");
    Scalar<K> r = spec.field.one();
    for (int t = 0; t < u; ++t) r *= spec.q_at(v + t);
    return r;
}

/// Whether char K divides n (never, in characteristic 0).
template <ExactField K>
bool char_divides(const FieldSpec<K>& spec, long n) {
    if (n < 1) throw std::invalid_argument("char_divides: n must be positive");
    const std::uint32_t p = spec.field.characteristic();
    return p != 0 && n % p == 0;
}

}  // namespace hhcalc

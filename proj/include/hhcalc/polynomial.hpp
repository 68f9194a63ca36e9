#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hhcalc {

/// Dense univariate polynomial in `t` over the prime field F_p.
/// Coefficients are stored lowest degree first; the zero polynomial has no
/// coefficients, and the leading stored coefficient is always nonzero.
class PolyFp {
public:
    PolyFp() = default;
    PolyFp(std::uint32_t p, std::vector<std::uint32_t> coeffs) : p_(p), c_(std::move(coeffs)) {
        if (p_ == 0) {
            trim();
            if (!c_.empty()) throw std::invalid_argument("polynomial: characteristic not set");
            return;
        }
        for (auto& x : c_) x %= p_;
        trim();
    }

    static PolyFp constant(std::uint32_t p, long value) {
        long r = value % static_cast<long>(p);
        if (r < 0) r += p;
        return PolyFp(p, {static_cast<std::uint32_t>(r)});
    }
    static PolyFp monomial(std::uint32_t p, std::size_t degree, std::uint32_t coeff = 1) {
        std::vector<std::uint32_t> c(degree + 1, 0);
        c[degree] = coeff % p;
        return PolyFp(p, std::move(c));
    }

    [[nodiscard]] std::uint32_t modulus() const { return p_; }
    [[nodiscard]] bool is_zero() const { return c_.empty(); }
    [[nodiscard]] bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
    [[nodiscard]] bool is_constant() const { return c_.size() <= 1; }
    /// Degree, with -1 for the zero polynomial.
    [[nodiscard]] long degree() const { return static_cast<long>(c_.size()) - 1; }
    [[nodiscard]] std::uint32_t lead() const { return c_.empty() ? 0 : c_.back(); }
    [[nodiscard]] std::uint32_t coeff(std::size_t k) const { return k < c_.size() ? c_[k] : 0; }
    [[nodiscard]] const std::vector<std::uint32_t>& coeffs() const { return c_; }

    friend bool operator==(const PolyFp& a, const PolyFp& b) { return a.c_ == b.c_; }

    friend PolyFp operator+(const PolyFp& a, const PolyFp& b) {
        const std::uint32_t p = a.common_modulus(b);
        std::vector<std::uint32_t> r(std::max(a.c_.size(), b.c_.size()), 0);
        for (std::size_t k = 0; k < r.size(); ++k) r[k] = static_cast<std::uint32_t>((std::uint64_t{a.coeff(k)} + b.coeff(k)) % p);
        return PolyFp(p, std::move(r));
    }
    PolyFp operator-() const {
        std::vector<std::uint32_t> r(c_.size());
        for (std::size_t k = 0; k < c_.size(); ++k) r[k] = c_[k] == 0 ? 0 : p_ - c_[k];
        return PolyFp(p_, std::move(r));
    }
    friend PolyFp operator-(const PolyFp& a, const PolyFp& b) { return a + (-b); }
    friend PolyFp operator*(const PolyFp& a, const PolyFp& b) {
        const std::uint32_t p = a.common_modulus(b);
        if (a.is_zero() || b.is_zero()) return PolyFp(p, {});
        std::vector<std::uint64_t> acc(a.c_.size() + b.c_.size() - 1, 0);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                acc[i + j] = (acc[i + j] + std::uint64_t{a.c_[i]} * b.c_[j]) % p;
        }
        return PolyFp(p, std::vector<std::uint32_t>(acc.begin(), acc.end()));
    }

    PolyFp scaled(std::uint32_t s) const {
        std::vector<std::uint32_t> r(c_.size());
        for (std::size_t k = 0; k < c_.size(); ++k) r[k] = static_cast<std::uint32_t>(std::uint64_t{c_[k]} * s % p_);
        return PolyFp(p_, std::move(r));
    }

    /// Euclidean division; returns (quotient, remainder).
    [[nodiscard]] std::pair<PolyFp, PolyFp> divmod(const PolyFp& d) const {
        const std::uint32_t p = common_modulus(d);
        if (d.is_zero()) throw std::domain_error("polynomial: division by zero");
        std::vector<std::uint64_t> rem(c_.begin(), c_.end());
        if (rem.size() < d.c_.size()) return {PolyFp(p, {}), *this};
        std::vector<std::uint32_t> quo(rem.size() - d.c_.size() + 1, 0);
        const std::uint64_t inv_lead = inverse_mod(d.lead(), p);
        for (std::size_t k = quo.size(); k-- > 0;) {
            const std::uint64_t top = rem[k + d.c_.size() - 1] % p;
            if (top == 0) continue;
            const std::uint64_t f = top * inv_lead % p;
            quo[k] = static_cast<std::uint32_t>(f);
            for (std::size_t s = 0; s < d.c_.size(); ++s)
                rem[k + s] = (rem[k + s] + (p - f) * d.c_[s]) % p;
        }
        rem.resize(d.c_.size() - 1);
        return {PolyFp(p, std::move(quo)), PolyFp(p, std::vector<std::uint32_t>(rem.begin(), rem.end()))};
    }

    [[nodiscard]] PolyFp monic() const {
        if (is_zero()) return *this;
        return scaled(static_cast<std::uint32_t>(inverse_mod(lead(), p_)));
    }

    /// Monic gcd (zero only when both inputs are zero).
    friend PolyFp gcd(PolyFp a, PolyFp b) {
        while (!b.is_zero()) {
            auto r = a.divmod(b).second;
            a = std::move(b);
            b = std::move(r);
        }
        return a.monic();
    }

    /// `t^2+2*t+1`; `0` for the zero polynomial.
    [[nodiscard]] std::string to_string() const {
        if (is_zero()) return "0";
        std::string out;
        for (std::size_t k = c_.size(); k-- > 0;) {
            if (c_[k] == 0) continue;
            if (!out.empty()) out += "+";
            if (k == 0) {
                out += std::to_string(c_[k]);
                continue;
            }
            if (c_[k] != 1) out += std::to_string(c_[k]) + "*";
            out += "t";
            if (k > 1) out += "^" + std::to_string(k);
        }
        return out;
    }
    [[nodiscard]] std::size_t term_count() const {
        std::size_t n = 0;
        for (auto x : c_) n += x != 0;
        return n;
    }

    static std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t p) {
        // Fermat; p is prime.
        std::uint64_t result = 1, base = a % p, e = p - 2;
        if (base == 0) throw std::domain_error("polynomial: inverse of zero coefficient");
        while (e) {
            if (e & 1) result = result * base % p;
            base = base * base % p;
            e >>= 1;
        }
        return result;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::uint32_t common_modulus(const PolyFp& o) const {
        if (p_ == 0 || o.p_ == 0) return p_ == 0 ? o.p_ : p_;
        if (p_ != o.p_) throw std::invalid_argument("polynomial: mixed characteristics");
        return p_;
    }

    // 0 marks a default-constructed zero not yet bound to a characteristic.
    std::uint32_t p_ = 0;
    std::vector<std::uint32_t> c_;
};

}  // namespace hhcalc

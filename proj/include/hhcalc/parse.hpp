#pragma once

#include <array>
#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hhcalc/field.hpp"

namespace hhcalc {

/// Parses a scalar written as an integer, a fraction, or (for F_p(t)) a
/// rational expression in `t`:
///
///   expr   := term (('+' | '-') term)*
///   term   := factor (('*' | '/') factor)*
///   factor := '-' factor | atom ('^' digits)?
///   atom   := digits | 't' | '(' expr ')'
///
/// Whitespace is ignored. Throws std::invalid_argument on malformed input
/// and std::domain_error on division by zero.
template <ExactField K>
class ScalarParser {
public:
    ScalarParser(const K& field, std::string_view text) : field_(field), s_(text) {}

    Scalar<K> parse() {
        skip();
        if (pos_ == s_.size()) fail("empty expression");
        Scalar<K> v = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return v;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("cannot parse scalar '" + std::string(s_) + "': " + what);
    }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    std::string digits() {
        skip();
        const std::size_t b = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (b == pos_) fail("expected a number");
        return std::string(s_.substr(b, pos_ - b));
    }

    Scalar<K> expr() {
        Scalar<K> v = term();
        for (;;) {
            if (eat('+')) v = v + term();
            else if (eat('-')) v = v - term();
            else return v;
        }
    }
    Scalar<K> term() {
        Scalar<K> v = factor();
        for (;;) {
            if (eat('*')) v = v * factor();
            else if (eat('/')) {
                Scalar<K> d = factor();
                if (d.is_zero()) throw std::domain_error("division by zero in '" + std::string(s_) + "'");
                v = v / d;
            } else return v;
        }
    }
    Scalar<K> factor() {
        if (eat('-')) return -factor();
        Scalar<K> base = atom();
        if (eat('^')) {
            const std::string e = digits();
            if (e.size() > 4) fail("exponent too large");
            Scalar<K> r = field_.one();
            for (int k = std::stoi(e); k > 0; --k) r = r * base;
            return r;
        }
        return base;
    }
    Scalar<K> atom() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        const char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            Scalar<K> v = expr();
            if (!eat(')')) fail("missing ')'");
            return v;
        }
        if (c == 't') {
            if (!field_.has_indeterminate()) fail("'t' is only allowed with the ratfunc field");
            ++pos_;
            return field_.indeterminate();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return field_.from_decimal(digits());
        fail("unexpected '" + std::string(1, c) + "'");
    }

    const K& field_;
    std::string_view s_;
    std::size_t pos_ = 0;
};

template <ExactField K>
Scalar<K> parse_scalar(const K& field, std::string_view text) {
    return ScalarParser<K>(field, text).parse();
}

/// Parses `q0,q1,q2,q3`.
template <ExactField K>
std::array<Scalar<K>, 4> parse_q(const K& field, std::string_view text) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    int depth = 0;
    for (std::size_t k = 0; k <= text.size(); ++k) {
        if (k < text.size() && text[k] == '(') ++depth;
        if (k < text.size() && text[k] == ')') --depth;
        if (k == text.size() || (text[k] == ',' && depth == 0)) {
            parts.push_back(text.substr(start, k - start));
            start = k + 1;
        }
    }
    if (parts.size() != 4)
        throw std::invalid_argument("q must have exactly 4 comma-separated entries, got " + std::to_string(parts.size()));
    return {parse_scalar(field, parts[0]), parse_scalar(field, parts[1]), parse_scalar(field, parts[2]),
            parse_scalar(field, parts[3])};
}

}  // namespace hhcalc

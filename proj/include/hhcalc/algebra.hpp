#pragma once

#include <compare>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hhcalc/field.hpp"
#include "hhcalc/linalg.hpp"

namespace hhcalc {

/// A vertex of the cyclic quiver with four vertices; always reduced mod 4.
class VertexId {
public:
    constexpr VertexId() = default;
    constexpr VertexId(long v) : v_(mod(v, 4)) {}
    [[nodiscard]] constexpr int value() const { return v_; }
    constexpr operator int() const { return v_; }
    friend constexpr auto operator<=>(VertexId, VertexId) = default;

private:
    int v_ = 0;
};

/// Arrow letter l of x_l, reduced mod 2.
constexpr int letter(long l) { return mod(l, 2); }

/// A path of A's canonical basis: e_start x_letter^power.
///
/// power = 0 is the idempotent e_start and is stored with letter 0. The socle
/// at each vertex is represented by letter 0 at power 4T+2.
struct BasisPath {
    VertexId start;
    int letter = 0;
    int power = 0;

    [[nodiscard]] VertexId end() const { return VertexId(start + power); }
    [[nodiscard]] bool is_trivial() const { return power == 0; }

    /// Ordered by start, then length, then letter.
    friend auto operator<=>(const BasisPath& a, const BasisPath& b) {
        if (auto c = a.start <=> b.start; c != 0) return c;
        if (auto c = a.power <=> b.power; c != 0) return c;
        return a.letter <=> b.letter;
    }
    friend bool operator==(const BasisPath&, const BasisPath&) = default;

    [[nodiscard]] std::string to_string() const {
        std::string s = "e" + std::to_string(start.value());
        if (power > 0) s += "*x" + std::to_string(letter) + "^" + std::to_string(power);
        return s;
    }
};

inline BasisPath idempotent_path(VertexId v) { return BasisPath{v, 0, 0}; }

/// A path in the path algebra, stored as maximal runs of one letter.
struct Word {
    struct Run {
        int letter;
        int length;
        friend auto operator<=>(const Run&, const Run&) = default;
    };

    VertexId start;
    std::vector<Run> runs;

    static Word trivial(VertexId v) { return Word{v, {}}; }
    static Word power(VertexId v, long l, int k) {
        Word w{v, {}};
        w.append(l, k);
        return w;
    }
    /// The arrow a_{l,m}.
    static Word arrow(long l, VertexId m) { return power(m, l, 1); }

    [[nodiscard]] int length() const {
        int n = 0;
        for (const auto& r : runs) n += r.length;
        return n;
    }
    [[nodiscard]] VertexId end() const { return VertexId(start + length()); }

    Word& append(long l, int k) {
        if (k < 0) throw std::invalid_argument("word: negative run length");
        if (k == 0) return *this;
        const int lt = letter(l);
        if (!runs.empty() && runs.back().letter == lt) runs.back().length += k;
        else runs.push_back({lt, k});
        return *this;
    }
    /// Concatenation; the endpoints must match.
    [[nodiscard]] Word then(const Word& o) const {
        if (end() != o.start) throw std::invalid_argument("word: concatenation of non-composable paths");
        Word w = *this;
        for (const auto& r : o.runs) w.append(r.letter, r.length);
        return w;
    }

    friend auto operator<=>(const Word&, const Word&) = default;
    friend bool operator==(const Word&, const Word&) = default;

    [[nodiscard]] std::string to_string() const {
        std::string s = "e" + std::to_string(start.value());
        for (const auto& r : runs) s += "*x" + std::to_string(r.letter) + "^" + std::to_string(r.length);
        return s;
    }
};

/// A K-linear combination of basis paths with no stored zero coefficients.
template <ExactField K>
class AlgebraElement {
public:
    using Terms = std::map<BasisPath, Scalar<K>>;

    AlgebraElement() = default;

    void add(const BasisPath& b, const Scalar<K>& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(b);
        if (it == terms_.end()) {
            terms_.emplace(b, c);
            return;
        }
        it->second = it->second + c;
        if (it->second.is_zero()) terms_.erase(it);
    }
    AlgebraElement& operator+=(const AlgebraElement& o) {
        for (const auto& [b, c] : o.terms_) add(b, c);
        return *this;
    }
    AlgebraElement& operator-=(const AlgebraElement& o) {
        for (const auto& [b, c] : o.terms_) add(b, -c);
        return *this;
    }
    friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
    friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
    [[nodiscard]] AlgebraElement scaled(const Scalar<K>& s) const {
        AlgebraElement r;
        for (const auto& [b, c] : terms_) r.add(b, c * s);
        return r;
    }

    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    [[nodiscard]] const Terms& terms() const { return terms_; }
    [[nodiscard]] std::size_t size() const { return terms_.size(); }
    /// Coefficient of b (zero when absent); `zero` supplies the field's zero.
    [[nodiscard]] Scalar<K> coeff(const BasisPath& b, const Scalar<K>& zero) const {
        auto it = terms_.find(b);
        return it == terms_.end() ? zero : it->second;
    }

    friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
        if (a.terms_.size() != b.terms_.size()) return false;
        auto ia = a.terms_.begin();
        for (auto ib = b.terms_.begin(); ib != b.terms_.end(); ++ia, ++ib)
            if (!(ia->first == ib->first) || !(ia->second == ib->second)) return false;
        return true;
    }

    /// `c1*term1 + c2*term2 + ...`, or `0`.
    [[nodiscard]] std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string s;
        for (const auto& [b, c] : terms_) {
            if (!s.empty()) s += " + ";
            s += c.to_string() + "*" + b.to_string();
        }
        return s;
    }

private:
    Terms terms_;
};

/// A scalar multiple of a single basis path.
template <ExactField K>
struct PathTerm {
    Scalar<K> coeff;
    BasisPath path;
};

/// The algebra A_T(q0,q1,q2,q3) = KΓ / I_T.
///
/// Normal form: a path with both letters is zero (x_l x_{l+1} in I); a pure
/// power x_l^k is a basis element for k <= 4T+1; at k = 4T+2 the letter-1
/// socle is rewritten to the letter-0 socle; anything longer is zero.
template <ExactField K>
class Algebra {
public:
    using Element = AlgebraElement<K>;
    using Term = PathTerm<K>;

    Algebra(int T, FieldSpec<K> spec) : T_(T), spec_(std::move(spec)) {
        if (T_ < 0) throw std::invalid_argument("T must be nonnegative");
    }

    [[nodiscard]] int T() const { return T_; }
    [[nodiscard]] const FieldSpec<K>& spec() const { return spec_; }
    [[nodiscard]] const K& field() const { return spec_.field; }
    [[nodiscard]] int socle_length() const { return 4 * T_ + 2; }

    /// Image of e_start x_l^k in A as a single term, or nullopt when zero.
    [[nodiscard]] std::optional<Term> power(VertexId start, long l, int k) const {
        const int s = socle_length();
        if (k < 0) throw std::invalid_argument("power: negative exponent");
        if (k == 0) return Term{field().one(), idempotent_path(start)};
        if (k < s) return Term{field().one(), BasisPath{start, letter(l), k}};
        if (k > s) return std::nullopt;
        if (letter(l) == 0) return Term{field().one(), BasisPath{start, 0, s}};
        // e_i (q_i x_0^s + x_1^s) = 0 at even i, e_i (q_i x_1^s + x_0^s) = 0 at odd i.
        const Scalar<K>& qi = spec_.q_at(start);
        Scalar<K> c = start % 2 == 0 ? -qi : -qi.inv();
        return Term{std::move(c), BasisPath{start, 0, s}};
    }

    [[nodiscard]] Element element(const std::optional<Term>& t) const {
        Element e;
        if (t) e.add(t->path, t->coeff);
        return e;
    }
    [[nodiscard]] Element idempotent(VertexId v) const { return element(power(v, 0, 0)); }
    [[nodiscard]] Element x_power(VertexId v, long l, int k) const { return element(power(v, l, k)); }
    /// Σ_i e_i, the identity of A.
    [[nodiscard]] Element unit() const {
        Element e;
        for (int v = 0; v < 4; ++v) e += idempotent(v);
        return e;
    }

    [[nodiscard]] Element normalize(const Word& w) const {
        if (w.runs.size() >= 2) return Element{};
        if (w.runs.empty()) return idempotent(w.start);
        return x_power(w.start, w.runs.front().letter, w.runs.front().length);
    }

    /// Product of two basis paths, or nullopt when it vanishes.
    [[nodiscard]] std::optional<Term> multiply(const BasisPath& a, const BasisPath& b) const {
        if (a.end() != b.start) return std::nullopt;
        if (a.is_trivial()) return Term{field().one(), b};
        if (b.is_trivial()) return Term{field().one(), a};
        // The letter-0 socle is nonzero but any extension of it is too long.
        if (a.letter != b.letter) return std::nullopt;
        return power(a.start, a.letter, a.power + b.power);
    }

    [[nodiscard]] Element multiply(const Element& a, const Element& b) const {
        Element out;
        for (const auto& [pa, ca] : a.terms())
            for (const auto& [pb, cb] : b.terms())
                if (auto t = multiply(pa, pb)) out.add(t->path, ca * cb * t->coeff);
        return out;
    }

    /// Ordered basis of e_i A e_j: ascending length, letter 0 before 1, with
    /// the socle last when j - i ≡ 2.
    [[nodiscard]] std::vector<BasisPath> hom_space_basis(VertexId i, VertexId j) const {
        const int n = mod(j.value() - i.value(), 4);
        std::vector<BasisPath> out;
        for (int len = n; len < socle_length(); len += 4) {
            if (len == 0) {
                out.push_back(idempotent_path(i));
                continue;
            }
            out.push_back(BasisPath{i, 0, len});
            out.push_back(BasisPath{i, 1, len});
        }
        if (n == 2) out.push_back(BasisPath{i, 0, socle_length()});
        return out;
    }

    /// All basis paths, grouped by start vertex then end vertex.
    [[nodiscard]] std::vector<BasisPath> basis() const {
        std::vector<BasisPath> out;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) {
                auto part = hom_space_basis(i, i + j);
                out.insert(out.end(), part.begin(), part.end());
            }
        return out;
    }

    [[nodiscard]] std::size_t dim() const { return basis().size(); }

    /// dim Z(A): the solution space of z*g - g*z = 0 over all basis elements g.
    [[nodiscard]] std::size_t center_dimension() const {
        const auto b = basis();
        std::map<BasisPath, std::size_t> index;
        for (std::size_t k = 0; k < b.size(); ++k) index.emplace(b[k], k);
        // Rows: one equation per (g, output coordinate); columns: coordinates of z.
        SparseEchelon<K> ech(field());
        for (const auto& g : b) {
            std::vector<std::map<std::size_t, Scalar<K>>> eqs(b.size());
            for (std::size_t z = 0; z < b.size(); ++z) {
                if (auto t = multiply(b[z], g)) {
                    auto& cell = eqs[index.at(t->path)];
                    auto [it, fresh] = cell.try_emplace(z, t->coeff);
                    if (!fresh) it->second = it->second + t->coeff;
                }
                if (auto t = multiply(g, b[z])) {
                    auto& cell = eqs[index.at(t->path)];
                    auto [it, fresh] = cell.try_emplace(z, -t->coeff);
                    if (!fresh) it->second = it->second - t->coeff;
                }
            }
            for (auto& eq : eqs) {
                SparseVector<K> row;
                for (auto& [z, c] : eq)
                    if (!c.is_zero()) row.emplace_back(z, c);
                if (!row.empty()) ech.insert(std::move(row));
            }
        }
        return b.size() - ech.rank();
    }

private:
    int T_;
    FieldSpec<K> spec_;
};

}  // namespace hhcalc

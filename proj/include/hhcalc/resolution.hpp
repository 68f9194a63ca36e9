#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "hhcalc/algebra.hpp"

namespace hhcalc {

/// Generator p^n_{i,j} of R^n, equivalently g^n_{i,j} in 𝒢^n.
/// Its origin vertex is i and its terminus is i + n.
struct GenIndex {
    int n = 0;
    VertexId i;
    int j = 0;

    [[nodiscard]] VertexId origin() const { return i; }
    [[nodiscard]] VertexId terminus() const { return VertexId(i + n); }

    friend auto operator<=>(const GenIndex&, const GenIndex&) = default;
    friend bool operator==(const GenIndex&, const GenIndex&) = default;
};

/// The 4(n+1) generators of degree n, ordered by i then j.
inline std::vector<GenIndex> gens(int n) {
    if (n < 0) throw std::invalid_argument("gens: negative degree");
    std::vector<GenIndex> out;
    out.reserve(4 * static_cast<std::size_t>(n + 1));
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j <= n; ++j) out.push_back(GenIndex{n, i, j});
    return out;
}

/// Position of g within gens(g.n).
inline std::size_t gen_position(const GenIndex& g) {
    return static_cast<std::size_t>(g.i.value()) * static_cast<std::size_t>(g.n + 1) + static_cast<std::size_t>(g.j);
}

/// Element of the path algebra KΓ (no relations applied).
template <ExactField K>
class KGammaElement {
public:
    void add(const Word& w, const Scalar<K>& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(w);
        if (it == terms_.end()) {
            terms_.emplace(w, c);
            return;
        }
        it->second = it->second + c;
        if (it->second.is_zero()) terms_.erase(it);
    }
    KGammaElement& operator+=(const KGammaElement& o) {
        for (const auto& [w, c] : o.terms_) add(w, c);
        return *this;
    }
    /// this * s * x_l^k, appended on the right of every word.
    [[nodiscard]] KGammaElement times_power(const Scalar<K>& s, long l, int k) const {
        KGammaElement r;
        for (const auto& [w, c] : terms_) {
            Word v = w;
            v.append(l, k);
            r.add(v, c * s);
        }
        return r;
    }

    [[nodiscard]] const std::map<Word, Scalar<K>>& terms() const { return terms_; }
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }

    friend bool operator==(const KGammaElement& a, const KGammaElement& b) {
        if (a.terms_.size() != b.terms_.size()) return false;
        auto ia = a.terms_.begin();
        for (auto ib = b.terms_.begin(); ib != b.terms_.end(); ++ia, ++ib)
            if (!(ia->first == ib->first) || !(ia->second == ib->second)) return false;
        return true;
    }

    [[nodiscard]] std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string s;
        for (const auto& [w, c] : terms_) {
            if (!s.empty()) s += " + ";
            s += c.to_string() + "*" + w.to_string();
        }
        return s;
    }

private:
    std::map<Word, Scalar<K>> terms_;
};

/// One summand coeff * left ⊗ p_target ⊗ right of a differential row.
template <ExactField K>
struct BimoduleTerm {
    Scalar<K> coeff;
    BasisPath left;
    GenIndex target;
    BasisPath right;
};

/// ∂^n as a list of rows, one per generator of R^n in gens(n) order.
/// For n = 0 the table is empty and `multiplication_map` is set: ∂^0 is the
/// multiplication R^0 -> A.
template <ExactField K>
struct DifferentialTable {
    struct Row {
        GenIndex source;
        std::vector<BimoduleTerm<K>> terms;
    };

    int n = 0;
    bool multiplication_map = false;
    std::vector<Row> rows;

    [[nodiscard]] const Row& row(const GenIndex& g) const { return rows.at(gen_position(g)); }
};

/// Basis element u ⊗ p ⊗ v of the free bimodule ⊕ A p A.
struct TensorKey {
    BasisPath left;
    GenIndex target;
    BasisPath right;

    friend auto operator<=>(const TensorKey& a, const TensorKey& b) {
        if (auto c = a.target <=> b.target; c != 0) return c;
        if (auto c = a.left <=> b.left; c != 0) return c;
        return a.right <=> b.right;
    }
    friend bool operator==(const TensorKey&, const TensorKey&) = default;

    [[nodiscard]] std::string to_string() const {
        return left.to_string() + " (x) p^" + std::to_string(target.n) + "_{" + std::to_string(target.i.value()) + "," +
               std::to_string(target.j) + "} (x) " + right.to_string();
    }
};

template <ExactField K>
using BimoduleElement = std::map<TensorKey, Scalar<K>>;

/// A degree-(n+1) generator whose image under ∂^n ∂^{n+1} is not zero.
struct ComplexFailure {
    int n = 0;  // the composite checked is ∂^n ∂^{n+1}
    GenIndex source;
    std::vector<std::string> residual;
};

struct ComplexReport {
    int nmax = 0;
    std::size_t rows_checked = 0;
    std::vector<ComplexFailure> failures;
    [[nodiscard]] bool ok() const { return failures.empty(); }
};

/// True iff no term has both path factors trivial.
template <ExactField K>
bool is_minimal(const DifferentialTable<K>& d) {
    for (const auto& row : d.rows)
        for (const auto& t : row.terms)
            if (t.left.is_trivial() && t.right.is_trivial()) return false;
    return true;
}

/// The minimal projective bimodule resolution (R•, ∂) of A.
template <ExactField K>
class Resolution {
public:
    explicit Resolution(Algebra<K> algebra) : alg_(std::move(algebra)) {}

    [[nodiscard]] const Algebra<K>& algebra() const { return alg_; }

    /// g^n_{i,j} for all degrees 0..nmax: result[n][gen_position].
    [[nodiscard]] std::vector<std::vector<KGammaElement<K>>> expand_all(int nmax) const {
        const int P = 4 * alg_.T() + 1;
        std::vector<std::vector<KGammaElement<K>>> g(static_cast<std::size_t>(nmax) + 1);
        for (int n = 0; n <= nmax; ++n) {
            auto& cur = g[static_cast<std::size_t>(n)];
            cur.resize(4 * static_cast<std::size_t>(n + 1));
            for (int i = 0; i < 4; ++i) {
                if (n == 0) {
                    cur[gen_position({0, i, 0})].add(Word::trivial(i), one());
                    continue;
                }
                const auto& prev = g[static_cast<std::size_t>(n - 1)];
                auto pg = [&](int j) -> const KGammaElement<K>& { return prev[gen_position({n - 1, i, j})]; };
                for (int j = 0; j <= n; ++j) {
                    KGammaElement<K> e;
                    if (n % 2 == 1) {
                        const int m = (n - 1) / 2;
                        if (j == 0) {
                            e = pg(0).times_power(one(), i, 1);
                        } else if (j <= m) {
                            e = pg(j - 1).times_power(S(2 * m - j + 1, i + j - 1), i + 1, P);
                            e += pg(j).times_power(one(), i, 1);
                        } else if (j <= 2 * m) {
                            e = pg(j - 1).times_power(S(2 * m - j + 1, i + j - 1), i + 1, 1);
                            e += pg(j).times_power(one(), i, P);
                        } else {
                            e = pg(2 * m).times_power(one(), i + 1, 1);
                        }
                    } else {
                        const int m = n / 2;
                        if (j == 0) {
                            e = pg(0).times_power(one(), i + 1, 1);
                        } else if (j <= m - 1) {
                            e = pg(j - 1).times_power(S(2 * m - j, i + j - 1), i, P);
                            e += pg(j).times_power(one(), i + 1, 1);
                        } else if (j == m) {
                            e = pg(m - 1).times_power(S(m, i + m - 1), i, P);
                            e += pg(m).times_power(one(), i + 1, P);
                        } else if (j <= 2 * m - 1) {
                            e = pg(j - 1).times_power(S(2 * m - j, i + j - 1), i, 1);
                            e += pg(j).times_power(one(), i + 1, P);
                        } else {
                            e = pg(2 * m - 1).times_power(one(), i, 1);
                        }
                    }
                    cur[gen_position({n, i, j})] = std::move(e);
                }
            }
        }
        return g;
    }

    [[nodiscard]] KGammaElement<K> expand_g(int n, VertexId i, int j) const {
        if (n < 0 || j < 0 || j > n) throw std::invalid_argument("expand_g: need 0 <= j <= n");
        return expand_all(n)[static_cast<std::size_t>(n)][gen_position({n, i, j})];
    }

    /// Image of a KΓ element in A.
    [[nodiscard]] AlgebraElement<K> reduce(const KGammaElement<K>& x) const {
        AlgebraElement<K> out;
        for (const auto& [w, c] : x.terms()) out += alg_.normalize(w).scaled(c);
        return out;
    }

    /// ∂^n, transcribed row by row.
    [[nodiscard]] DifferentialTable<K> differential(int n) const {
        if (n < 0) throw std::invalid_argument("differential: negative degree");
        DifferentialTable<K> d;
        d.n = n;
        if (n == 0) {
            d.multiplication_map = true;
            return d;
        }
        const int T = alg_.T();
        const int P = 4 * T + 1;
        for (const GenIndex& src : gens(n)) {
            const long i = src.i;
            const int j = src.j;
            std::vector<BimoduleTerm<K>> terms;
            // coeff * x_{ll}^{lp} p^{n-1}_{ti,tj} x_{rl}^{rp}
            auto add = [&](const Scalar<K>& c, long ll, int lp, long ti, int tj, long rl, int rp) {
                const GenIndex target{n - 1, ti, tj};
                terms.push_back(BimoduleTerm<K>{c, path(i, ll, lp), target, path(target.terminus(), rl, rp)});
            };
            const Scalar<K> one = alg_.field().one();
            const Scalar<K> neg = -one;
            if (n % 2 == 1) {
                const int m = (n - 1) / 2;
                if (j == 0) {
                    add(one, 0, 0, i, 0, i, 1);
                    add(neg, i, 1, i + 1, 0, 0, 0);
                } else if (j <= m) {
                    add(S(2 * m - j + 1, i + j - 1), 0, 0, i, j - 1, i + 1, P);
                    add(one, 0, 0, i, j, i, 1);
                    add(-S(j, i), i, 1, i + 1, j, 0, 0);
                    add(neg, i + 1, P, i + 1, j - 1, 0, 0);
                } else if (j <= 2 * m) {
                    add(S(2 * m - j + 1, i + j - 1), 0, 0, i, j - 1, i + 1, 1);
                    add(one, 0, 0, i, j, i, P);
                    add(-S(j, i), i, P, i + 1, j, 0, 0);
                    add(neg, i + 1, 1, i + 1, j - 1, 0, 0);
                } else {
                    add(one, 0, 0, i, 2 * m, i + 1, 1);
                    add(neg, i + 1, 1, i + 1, 2 * m, 0, 0);
                }
            } else {
                const int m = n / 2;
                if (j == 0) {
                    add(one, 0, 0, i, 0, i + 1, 1);
                    add(one, i, 1, i + 1, 0, 0, 0);
                } else if (j <= m - 1) {
                    add(S(2 * m - j, i + j - 1), 0, 0, i, j - 1, i, P);
                    add(one, 0, 0, i, j, i + 1, 1);
                    add(S(j, i), i, 1, i + 1, j, 0, 0);
                    add(one, i + 1, P, i + 1, j - 1, 0, 0);
                } else if (j == m) {
                    for (int k = 0; k <= T; ++k) {
                        const int a = 4 * k, b = 4 * T - 4 * k;
                        add(S(m, i + m - 1), i, a, i, m - 1, i, b + 1);
                        add(S(m, i), i, a + 1, i + 1, m, i, b);
                        add(one, i + 1, a, i, m, i + 1, b + 1);
                        add(one, i + 1, a + 1, i + 1, m - 1, i + 1, b);
                    }
                    const Scalar<K> twist = S(m, i + 3).inv() * S(m, i + m + 2);
                    for (int k = 0; k <= T - 1; ++k) {
                        const int a = 4 * k + 2, b = 4 * T - 4 * k - 2;
                        add(S(m, i), i, a, i + 2, m - 1, i, b + 1);
                        add(S(m, i + m - 1), i, a + 1, i + 3, m, i, b);
                        add(twist, i + 1, a, i + 2, m, i + 1, b + 1);
                        add(twist, i + 1, a + 1, i + 3, m - 1, i + 1, b);
                    }
                } else if (j <= 2 * m - 1) {
                    add(S(2 * m - j, i + j - 1), 0, 0, i, j - 1, i, 1);
                    add(one, 0, 0, i, j, i + 1, P);
                    add(S(j, i), i, P, i + 1, j, 0, 0);
                    add(one, i + 1, 1, i + 1, j - 1, 0, 0);
                } else {
                    add(one, 0, 0, i, 2 * m - 1, i, 1);
                    add(one, i + 1, 1, i + 1, 2 * m - 1, 0, 0);
                }
            }
            d.rows.push_back({src, canonicalize(std::move(terms))});
        }
        return d;
    }

    /// Applies ∂^d.n (d.n >= 1) to an element of R^{d.n}.
    [[nodiscard]] BimoduleElement<K> apply(const DifferentialTable<K>& d, const BimoduleElement<K>& x) const {
        if (d.multiplication_map) throw std::invalid_argument("apply: use apply_multiplication for degree 0");
        BimoduleElement<K> out;
        for (const auto& [key, c] : x) {
            if (key.target.n != d.n) throw std::invalid_argument("apply: degree mismatch");
            for (const auto& t : d.row(key.target).terms) {
                auto l = alg_.multiply(key.left, t.left);
                if (!l) continue;
                auto r = alg_.multiply(t.right, key.right);
                if (!r) continue;
                accumulate(out, TensorKey{l->path, t.target, r->path}, c * t.coeff * l->coeff * r->coeff);
            }
        }
        return out;
    }

    /// ∂^0: u ⊗ p^0_k ⊗ v ↦ u v.
    [[nodiscard]] AlgebraElement<K> apply_multiplication(const BimoduleElement<K>& x) const {
        AlgebraElement<K> out;
        for (const auto& [key, c] : x) {
            if (key.target.n != 0) throw std::invalid_argument("apply_multiplication: degree mismatch");
            if (auto t = alg_.multiply(key.left, key.right)) out.add(t->path, c * t->coeff);
        }
        return out;
    }

    [[nodiscard]] static BimoduleElement<K> row_element(const typename DifferentialTable<K>::Row& row) {
        BimoduleElement<K> x;
        for (const auto& t : row.terms) accumulate(x, TensorKey{t.left, t.target, t.right}, t.coeff);
        return x;
    }

    /// Checks ∂^n ∂^{n+1} = 0 for 0 <= n <= nmax - 1 on every generator.
    [[nodiscard]] ComplexReport verify_complex(int nmax) const {
        if (nmax < 1) throw std::invalid_argument("verify_complex: nmax must be >= 1");
        ComplexReport rep;
        rep.nmax = nmax;
        std::vector<DifferentialTable<K>> ds;
        for (int n = 0; n <= nmax; ++n) ds.push_back(differential(n));
        for (int n = 0; n < nmax; ++n) {
            for (const auto& row : ds[static_cast<std::size_t>(n + 1)].rows) {
                ++rep.rows_checked;
                const BimoduleElement<K> x = row_element(row);
                std::vector<std::string> residual;
                if (n == 0) {
                    const AlgebraElement<K> y = apply_multiplication(x);
                    if (!y.is_zero()) residual.push_back(y.to_string());
                } else {
                    for (const auto& [key, c] : apply(ds[static_cast<std::size_t>(n)], x))
                        residual.push_back(c.to_string() + " * " + key.to_string());
                }
                if (!residual.empty()) rep.failures.push_back({n, row.source, std::move(residual)});
            }
        }
        return rep;
    }

    /// Every term of ∂^1..∂^nmax carries a radical factor on some side.
    [[nodiscard]] bool minimality_check(int nmax) const {
        for (int n = 1; n <= nmax; ++n)
            if (!is_minimal(differential(n))) return false;
        return true;
    }

    /// At T = 0: every term of ∂^1..∂^nmax has total path length exactly 1.
    [[nodiscard]] bool linearity_check(int nmax) const {
        if (alg_.T() != 0) throw std::invalid_argument("linearity_check: only defined for T = 0");
        for (int n = 1; n <= nmax; ++n)
            for (const auto& row : differential(n).rows)
                for (const auto& t : row.terms)
                    if (t.left.power + t.right.power != 1) return false;
        return true;
    }

    /// Each g^n_{i,j} (n >= 2) vanishes in A.
    [[nodiscard]] bool g_in_ideal_check(int n) const {
        if (n < 2) throw std::invalid_argument("g_in_ideal_check: n must be >= 2");
        const auto all = expand_all(n);
        for (const auto& g : all[static_cast<std::size_t>(n)])
            if (!reduce(g).is_zero()) return false;
        return true;
    }

    /// g^n = Σ_y g^{n-1}_y r_y, where r_y collects the terms of ∂^n(p^n) with
    /// trivial left factor. Compared as elements of KΓ.
    [[nodiscard]] bool right_factor_check(int n) const {
        if (n < 1) throw std::invalid_argument("right_factor_check: n must be >= 1");
        const auto all = expand_all(n);
        const auto d = differential(n);
        for (const auto& row : d.rows) {
            KGammaElement<K> sum;
            for (const auto& t : row.terms) {
                if (!t.left.is_trivial()) continue;
                sum += all[static_cast<std::size_t>(n - 1)][gen_position(t.target)].times_power(t.coeff, t.right.letter,
                                                                                                 t.right.power);
            }
            if (!(sum == all[static_cast<std::size_t>(n)][gen_position(row.source)])) return false;
        }
        return true;
    }

private:
    [[nodiscard]] Scalar<K> one() const { return alg_.field().one(); }
    [[nodiscard]] Scalar<K> S(int u, long v) const { return s_product(u, v, alg_.spec()); }

    [[nodiscard]] BasisPath path(VertexId start, long l, int k) const {
        auto t = alg_.power(start, l, k);
        if (!t || !t->coeff.is_one()) throw std::logic_error("differential: path factor is not a basis path");
        return t->path;
    }

    static void accumulate(BimoduleElement<K>& x, const TensorKey& key, const Scalar<K>& c) {
        if (c.is_zero()) return;
        auto it = x.find(key);
        if (it == x.end()) {
            x.emplace(key, c);
            return;
        }
        it->second = it->second + c;
        if (it->second.is_zero()) x.erase(it);
    }

    /// Merges repeated (left, target, right) summands and sorts by TensorKey.
    static std::vector<BimoduleTerm<K>> canonicalize(std::vector<BimoduleTerm<K>> terms) {
        BimoduleElement<K> merged;
        for (const auto& t : terms) accumulate(merged, TensorKey{t.left, t.target, t.right}, t.coeff);
        std::vector<BimoduleTerm<K>> out;
        out.reserve(merged.size());
        for (auto& [key, c] : merged) out.push_back(BimoduleTerm<K>{c, key.left, key.target, key.right});
        return out;
    }

    Algebra<K> alg_;
};

}  // namespace hhcalc

#pragma once

#include <algorithm>
#include <atomic>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

#include "hhcalc/formulas.hpp"
#include "hhcalc/linalg.hpp"
#include "hhcalc/resolution.hpp"

namespace hhcalc {

/// The homomorphism β^{n,k}_{l,i,j}: R^n -> A sending p^n_{i,j} to
/// e_i x_l^{4k+t} (t = n mod 4) and every other generator to 0.
///
/// Only canonical indices appear in a hom basis: at n ≡ 0 the k = 0 element
/// has l = 0 (β_0 and β_1 coincide there), and at n ≡ 2 the k = T element has
/// l = 0 (the letter-0 socle).
struct HomBasisIndex {
    int n = 0;
    int l = 0;
    VertexId i;
    int j = 0;
    int k = 0;

    [[nodiscard]] int power() const { return 4 * k + mod(n, 4); }
    [[nodiscard]] BasisPath path() const { return power() == 0 ? idempotent_path(i) : BasisPath{i, l, power()}; }

    /// Same order as hom_basis: by i, j, then path length, then letter.
    friend auto operator<=>(const HomBasisIndex& a, const HomBasisIndex& b) {
        return std::tie(a.n, a.i, a.j, a.k, a.l) <=> std::tie(b.n, b.i, b.j, b.k, b.l);
    }
    friend bool operator==(const HomBasisIndex&, const HomBasisIndex&) = default;

    [[nodiscard]] std::string to_string() const {
        return "beta^{" + std::to_string(n) + "," + std::to_string(k) + "}_{" + std::to_string(l) + "," +
               std::to_string(i.value()) + "," + std::to_string(j) + "}";
    }
};

/// An element of Hom_{A^e}(R^n, A) in β-coordinates.
template <ExactField K>
struct HomVector {
    int n = 0;
    std::map<HomBasisIndex, Scalar<K>> coeffs;

    void add(const HomBasisIndex& b, const Scalar<K>& c) {
        if (b.n != n) throw std::invalid_argument("hom vector: degree mismatch");
        if (c.is_zero()) return;
        auto it = coeffs.find(b);
        if (it == coeffs.end()) {
            coeffs.emplace(b, c);
            return;
        }
        it->second = it->second + c;
        if (it->second.is_zero()) coeffs.erase(it);
    }

    [[nodiscard]] std::string to_string() const {
        if (coeffs.empty()) return "0";
        std::string s;
        for (const auto& [b, c] : coeffs) {
            if (!s.empty()) s += " + ";
            s += c.to_string() + "*" + b.to_string();
        }
        return s;
    }
};

/// Matrix of δ^n: φ ↦ φ ∘ ∂^{n+1}, rows in the degree-(n+1) hom basis,
/// columns in the degree-n hom basis.
template <ExactField K>
struct HomMatrix {
    int n;
    std::vector<HomBasisIndex> row_basis;
    std::vector<HomBasisIndex> col_basis;
    Matrix<K> matrix;
};

template <ExactField K>
std::size_t rank(const HomMatrix<K>& m) {
    return rank(m.matrix);
}

struct DegreeRecord {
    int n = 0;
    long hom_dim = 0;
    long ker_dim = 0;
    long rank = 0;
    long hh = 0;
    long hh_oracle = 0;
    long ker_oracle = 0;
    long hom_oracle = 0;
    bool match = false;
};

struct ParamsEcho {
    int T = 0;
    std::string field;
    std::optional<std::uint32_t> p;
    std::vector<std::string> q;
    bool char_divides = false;
};

struct CohomologyReport {
    ParamsEcho params;
    std::vector<DegreeRecord> degrees;
    bool all_match = true;
};

/// Outcome of checking the closed-form kernel basis in one degree.
struct KernelBasisCheck {
    int n = 0;
    std::size_t count = 0;
    std::size_t kernel_dim = 0;
    std::size_t span_rank = 0;
    bool in_kernel = true;
    bool independent = true;
    bool complete = true;
    std::vector<std::string> offending;  // vectors with nonzero image under δ^n
    [[nodiscard]] bool ok() const { return in_kernel && independent && complete; }
};

template <ExactField K>
ParamsEcho echo_params(const Algebra<K>& alg) {
    ParamsEcho e;
    e.T = alg.T();
    e.field = std::string(K::name());
    if (alg.field().characteristic() != 0) e.p = alg.field().characteristic();
    for (const auto& q : alg.spec().q) e.q.push_back(q.to_string());
    e.char_divides = char_divides(alg.spec(), 2L * alg.T() + 1);
    return e;
}

/// Hochschild cohomology of A through the cochain complex Hom_{A^e}(R•, A).
template <ExactField K>
class Cohomology {
public:
    explicit Cohomology(Algebra<K> algebra) : res_(std::move(algebra)) {}

    [[nodiscard]] const Algebra<K>& algebra() const { return res_.algebra(); }
    [[nodiscard]] const Resolution<K>& resolution() const { return res_; }
    [[nodiscard]] const K& field() const { return algebra().field(); }

    /// Canonical β-basis of degree n; empty when n ≡ 3 (mod 4) and T = 0.
    [[nodiscard]] std::vector<HomBasisIndex> hom_basis(int n) const {
        if (n < 0) throw std::invalid_argument("hom_basis: negative degree");
        std::vector<HomBasisIndex> out;
        for (const GenIndex& g : gens(n))
            for (const BasisPath& b : algebra().hom_space_basis(g.i, g.terminus()))
                out.push_back(index_of(n, g.i, g.j, b));
        return out;
    }

    /// Position of β(n, i, j, b) within hom_basis(n).
    [[nodiscard]] std::size_t position(int n, VertexId i, int j, const BasisPath& b) const {
        const auto local = algebra().hom_space_basis(i, VertexId(i + n));
        auto it = std::find(local.begin(), local.end(), b);
        if (it == local.end()) throw std::invalid_argument("position: path not in e_i A e_{i+n}");
        return gen_position({n, i, j}) * local.size() + static_cast<std::size_t>(it - local.begin());
    }
    [[nodiscard]] std::size_t position(const HomBasisIndex& b) const { return position(b.n, b.i, b.j, b.path()); }

    /// β^{n,k}_{l,i,j} in canonical coordinates. Non-canonical labels are
    /// rewritten through A's normal form (the two β identifications).
    [[nodiscard]] HomVector<K> beta(int n, int k, long l, VertexId i, int j) const {
        if (j < 0 || j > n) throw std::invalid_argument("beta: need 0 <= j <= n");
        HomVector<K> v{n, {}};
        auto t = algebra().power(i, l, 4 * k + mod(n, 4));
        if (!t || t->path.end() != VertexId(i + n)) throw std::invalid_argument("beta: no such basis map");
        v.add(index_of(n, i, j, t->path), t->coeff);
        return v;
    }

    /// φ(p^n_{g.i,g.j}).
    [[nodiscard]] AlgebraElement<K> evaluate_hom(const HomVector<K>& v, const GenIndex& g) const {
        if (v.n != g.n) throw std::invalid_argument("evaluate_hom: degree mismatch");
        AlgebraElement<K> out;
        for (const auto& [b, c] : v.coeffs)
            if (b.i == g.i && b.j == g.j) out.add(b.path(), c);
        return out;
    }

    [[nodiscard]] std::vector<Scalar<K>> dense(const HomVector<K>& v) const {
        std::vector<Scalar<K>> out(hom_basis(v.n).size(), field().zero());
        for (const auto& [b, c] : v.coeffs) out[position(b)] = c;
        return out;
    }

    [[nodiscard]] HomMatrix<K> delta_matrix(int n) const {
        return delta_matrix(n, res_.differential(n + 1));
    }

    /// δ^n given ∂^{n+1}.
    [[nodiscard]] HomMatrix<K> delta_matrix(int n, const DifferentialTable<K>& d) const {
        if (d.n != n + 1) throw std::invalid_argument("delta_matrix: differential of wrong degree");
        HomMatrix<K> hm{n, hom_basis(n + 1), hom_basis(n), Matrix<K>(field(), 0, 0)};
        hm.matrix = Matrix<K>(field(), hm.row_basis.size(), hm.col_basis.size());
        if (hm.row_basis.empty() || hm.col_basis.empty()) return hm;
        const Algebra<K>& alg = algebra();
        for (const auto& row : d.rows) {
            for (const auto& t : row.terms) {
                const auto local = alg.hom_space_basis(t.target.i, t.target.terminus());
                for (std::size_t s = 0; s < local.size(); ++s) {
                    auto lb = alg.multiply(t.left, local[s]);
                    if (!lb) continue;
                    auto lbr = alg.multiply(lb->path, t.right);
                    if (!lbr) continue;
                    const std::size_t r = position(n + 1, row.source.i, row.source.j, lbr->path);
                    const std::size_t c = gen_position(t.target) * local.size() + s;
                    hm.matrix.at(r, c) += t.coeff * lb->coeff * lbr->coeff;
                }
            }
        }
        return hm;
    }

    /// Ranks of δ^0..δ^nmax. Degrees are independent and run on `jobs` threads.
    [[nodiscard]] std::vector<std::size_t> delta_ranks(int nmax, unsigned jobs = 1) const {
        std::vector<std::size_t> ranks(static_cast<std::size_t>(nmax) + 1, 0);
        std::atomic<int> next{0};
        auto worker = [&] {
            for (int n = next++; n <= nmax; n = next++) ranks[static_cast<std::size_t>(n)] = rank(delta_matrix(n));
        };
        jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(nmax + 1)));
        std::vector<std::thread> pool;
        for (unsigned w = 1; w < jobs; ++w) pool.emplace_back(worker);
        worker();
        for (auto& t : pool) t.join();
        return ranks;
    }

    /// dim HH^n = dim Ker δ^n - rank δ^{n-1} for 0 <= n <= nmax, with the
    /// closed-form values alongside. Throws before computing anything when the
    /// parameters violate the root-of-unity hypothesis.
    [[nodiscard]] CohomologyReport hh_dimensions(int nmax, unsigned jobs = 1) const {
        if (nmax < 0) throw std::invalid_argument("hh_dimensions: nmax must be >= 0");
        algebra().spec().validate();
        CohomologyReport rep;
        rep.params = echo_params(algebra());
        const bool cd = rep.params.char_divides;
        const long T = algebra().T();
        const auto ranks = delta_ranks(nmax, jobs);
        for (int n = 0; n <= nmax; ++n) {
            DegreeRecord d;
            d.n = n;
            d.hom_dim = static_cast<long>(hom_basis(n).size());
            d.rank = static_cast<long>(ranks[static_cast<std::size_t>(n)]);
            d.ker_dim = d.hom_dim - d.rank;
            d.hh = d.ker_dim - (n == 0 ? 0 : static_cast<long>(ranks[static_cast<std::size_t>(n - 1)]));
            d.hh_oracle = hh_formula(n, T, cd);
            d.ker_oracle = ker_dim_formula(n - 1, T, cd);
            d.hom_oracle = hom_dim_formula(n, T);
            d.match = d.hh == d.hh_oracle && d.ker_dim == d.ker_oracle && d.hom_dim == d.hom_oracle;
            rep.all_match = rep.all_match && d.match;
            rep.degrees.push_back(d);
        }
        return rep;
    }

    /// The explicit kernel basis of δ^n from the closed-form description,
    /// branching on whether char K divides 2T+1.
    [[nodiscard]] std::vector<HomVector<K>> closed_form_kernel_basis(int n) const;

    /// Checks the closed-form vectors lie in Ker δ^n, are independent, and
    /// span it.
    [[nodiscard]] KernelBasisCheck kernel_basis_check(int n) const {
        KernelBasisCheck out;
        out.n = n;
        const auto vecs = closed_form_kernel_basis(n);
        const HomMatrix<K> hm = delta_matrix(n);
        out.count = vecs.size();
        out.kernel_dim = hm.col_basis.size() - rank(hm);
        std::vector<SparseVector<K>> rows;
        for (const auto& v : vecs) {
            const auto x = dense(v);
            const auto img = hm.matrix.apply(x);
            if (std::any_of(img.begin(), img.end(), [](const Scalar<K>& s) { return !s.is_zero(); })) {
                out.in_kernel = false;
                out.offending.push_back(v.to_string());
            }
            SparseVector<K> sv;
            for (std::size_t c = 0; c < x.size(); ++c)
                if (!x[c].is_zero()) sv.emplace_back(c, x[c]);
            rows.push_back(std::move(sv));
        }
        out.span_rank = rank_of(field(), rows);
        out.independent = out.span_rank == out.count;
        out.complete = out.count == out.kernel_dim;
        return out;
    }

private:
    [[nodiscard]] HomBasisIndex index_of(int n, VertexId i, int j, const BasisPath& b) const {
        const int t = mod(n, 4);
        return HomBasisIndex{n, b.letter, i, j, (b.power - t) / 4};
    }

    [[nodiscard]] Scalar<K> S(int u, long v) const { return s_product(u, v, algebra().spec()); }

    Resolution<K> res_;
};

template <ExactField K>
std::vector<HomVector<K>> Cohomology<K>::closed_form_kernel_basis(int n) const {
    if (n < 0) throw std::invalid_argument("closed_form_kernel_basis: negative degree");
    algebra().spec().validate();
    const int T = algebra().T();
    const int m = n / 4;
    const int r = n % 4;
    const bool cd = char_divides(algebra().spec(), 2L * T + 1);
    const Scalar<K> one = field().one();

    std::vector<HomVector<K>> out;
    // A vector being assembled: sum of c * β^{n,k}_{l,i,j}.
    struct Builder {
        const Cohomology* self;
        int n;
        HomVector<K> v;
        Builder& operator()(const Scalar<K>& c, int k, long l, long i, int j) {
            for (const auto& [b, x] : self->beta(n, k, l, i, j).coeffs) v.add(b, c * x);
            return *this;
        }
    };
    auto vec = [&] { return Builder{this, n, HomVector<K>{n, {}}}; };
    auto push = [&](Builder& b) { out.push_back(std::move(b.v)); };
    auto single = [&](int k, long l, long i, int j) {
        auto b = vec();
        b(one, k, l, i, j);
        push(b);
    };
    // S_{u,r} β_{r,r,u}^{k1} + β_{r+1,r,u+1}^{k2} - S_{4m'-u,u+r+1} β_{r,r+1,u+1}^{k2} - β_{r+1,r+1,u}^{k1},
    // where 4m' = n - 1.
    auto square_with = [&](long rr, int u, int k1, int k2, const Scalar<K>& s3) {
        auto b = vec();
        b(S(u, rr), k1, rr, rr, u)(one, k2, rr + 1, rr, u + 1)(-s3, k2, rr, rr + 1, u + 1)(-one, k1, rr + 1, rr + 1, u);
        push(b);
    };
    auto square = [&](long rr, int u, int k1, int k2) { square_with(rr, u, k1, k2, S(n - 1 - u, u + rr + 1)); };
    // Middle member u = 2m at n = 4m+1, written with S_{2m,r+3}.
    auto middle_square = [&](long rr) { square_with(rr, 2 * m, 0, 0, S(2 * m, rr + 3)); };

    if (T == 0) {
        switch (r) {
            case 0:
                if (m == 0) {
                    auto b = vec();
                    for (int v = 0; v < 4; ++v) b(one, 0, 0, v, 0);
                    push(b);
                }
                break;
            case 1:
                if (m == 0) {
                    for (int rr = 0; rr <= 2; ++rr) square(rr, 0, 0, 0);
                    auto b1 = vec();
                    b1(one, 0, 0, 0, 0)(one, 0, 1, 0, 1);
                    push(b1);
                    auto b2 = vec();
                    b2(one, 0, 1, 0, 1)(one, 0, 0, 1, 1)(one, 0, 1, 2, 1)(one, 0, 0, 3, 1);
                    push(b2);
                } else {
                    for (int rr = 0; rr < 4; ++rr)
                        for (int u = 0; u <= 4 * m; ++u) square(rr, u, 0, 0);
                }
                break;
            case 2:
                for (int rr = 0; rr < 4; ++rr)
                    for (int u = 0; u <= 4 * m + 2; ++u) single(0, 0, rr, u);
                break;
            default:
                break;
        }
        return out;
    }

    switch (r) {
        case 0:
            if (m == 0) {
                auto b = vec();
                for (int v = 0; v < 4; ++v) b(one, 0, 0, v, 0);
                push(b);
                for (int l = 0; l <= 1; ++l)
                    for (int k = 1; k <= T; ++k) {
                        auto c = vec();
                        for (int v = 0; v < 4; ++v) c(one, k, l, v, 0);
                        push(c);
                    }
            } else {
                for (int rr = 0; rr < 4; ++rr)
                    for (int u = 0; u <= 2 * m - 1; ++u)
                        for (int k = 1; k <= T; ++k) {
                            auto b = vec();
                            b(S(u, rr), k, rr, rr, u)(one, k, rr, rr + 1, u);
                            push(b);
                        }
                for (int rr = 0; rr < 4; ++rr)
                    for (int u = 2 * m + 1; u <= 4 * m; ++u)
                        for (int k = 1; k <= T; ++k) {
                            auto b = vec();
                            b(one, k, rr, rr + 1, u)(S(4 * m - u, rr + u + 1), k, rr, rr + 2, u);
                            push(b);
                        }
                for (int l = 0; l <= 1; ++l)
                    for (int k = 1; k <= T; ++k) {
                        auto b = vec();
                        b(S(4 * m, 0), k, l, l, 2 * m)(S(2 * m, l + 2), k, l, l + 1, 2 * m)(
                            S(2 * m, l + 2) * S(2 * m, l + 3), k, l, l + 2, 2 * m)(S(2 * m, l + 3), k, l, l + 3, 2 * m);
                        push(b);
                    }
            }
            break;
        case 1:
            if (m == 0) {
                for (int rr = 0; rr < 4; ++rr)
                    for (int k = 1; k <= T; ++k) {
                        single(k, rr, rr, 0);
                        single(k, rr, rr + 1, 1);
                    }
                auto b = vec();
                b(one, 0, 0, 0, 0)(one, 0, 1, 0, 1);
                push(b);
                for (int rr = 0; rr <= 2; ++rr) square(rr, 0, 0, 0);
                if (cd) {
                    auto c1 = vec();
                    c1(one, 0, 0, 1, 1)(one, 0, 0, 3, 1);
                    push(c1);
                    auto c2 = vec();
                    c2(one, 0, 1, 0, 1)(one, 0, 1, 2, 1);
                    push(c2);
                } else {
                    auto c = vec();
                    c(one, 0, 0, 1, 1)(one, 0, 0, 3, 1)(one, 0, 1, 0, 1)(one, 0, 1, 2, 1);
                    push(c);
                }
            } else {
                for (int rr = 0; rr < 4; ++rr)
                    for (int u = 0; u <= 2 * m - 1; ++u) square(rr, u, 0, T);
                for (int rr = 0; rr < 4; ++rr)
                    for (int u = 2 * m + 1; u <= 4 * m; ++u) square(rr, u, T, 0);
                for (int rr = 0; rr < 4; ++rr)
                    for (int u = 0; u <= 2 * m; ++u)
                        for (int k = 1; k <= T; ++k) single(k, rr, rr, u);
                for (int rr = 0; rr < 4; ++rr)
                    for (int u = 2 * m + 1; u <= 4 * m + 1; ++u)
                        for (int k = 1; k <= T; ++k) single(k, rr + 1, rr, u);
                for (int rr = 0; rr <= 1; ++rr) middle_square(rr);
                if (cd) {
                    for (int rr = 0; rr <= 1; ++rr)
                        for (int l = 0; l <= 1; ++l) {
                            auto b = vec();
                            b(S(2 * m, rr + l), 0, rr + l, rr, 2 * m + l)(S(2 * m, rr + l + 3), 0, rr + l, rr + 2,
                                                                         2 * m + l);
                            push(b);
                        }
                } else {
                    for (int rr = 2; rr <= 3; ++rr) middle_square(rr);
                }
            }
            break;
        case 2:
            for (int rr = 0; rr < 4; ++rr)
                for (int u = 0; u <= 2 * m; ++u)
                    for (int k = 0; k <= T - 1; ++k) {
                        auto b = vec();
                        b(S(u, rr), k, rr, rr, u)(one, k, rr, rr + 1, u);
                        push(b);
                    }
            for (int rr = 0; rr < 4; ++rr)
                for (int u = 2 * m + 2; u <= 4 * m + 2; ++u)
                    for (int k = 0; k <= T - 1; ++k) {
                        auto b = vec();
                        b(one, k, rr, rr + 1, u)(S(4 * m - u + 2, u + rr + 1), k, rr, rr + 2, u);
                        push(b);
                    }
            for (int l = 0; l <= 1; ++l)
                for (int k = 0; k <= T - 1; ++k) {
                    auto b = vec();
                    b(S(2 * m, l), k, l, l + 3, 2 * m + 1)(S(2 * m, l) * S(2 * m + 1, l + 2), k, l, l + 2, 2 * m + 1)(
                        S(2 * m, l + 3), k, l, l + 1, 2 * m + 1)(S(4 * m + 1, l), k, l, l, 2 * m + 1);
                    push(b);
                }
            for (int rr = 0; rr < 4; ++rr)
                for (int u = 0; u <= 4 * m + 2; ++u) single(T, 0, rr, u);
            break;
        default:
            for (int rr = 0; rr < 4; ++rr)
                for (int u = 0; u <= 2 * m + 1; ++u)
                    for (int k = 0; k <= T - 1; ++k) single(k, rr, rr, u);
            for (int rr = 0; rr < 4; ++rr)
                for (int u = 2 * m + 2; u <= 4 * m + 3; ++u)
                    for (int k = 0; k <= T - 1; ++k) single(k, rr, rr + 1, u);
            break;
    }
    return out;
}

}  // namespace hhcalc

#include <gtest/gtest.h>

#include "hhcalc/cohomology.hpp"
#include "hhcalc/parse.hpp"

using namespace hhcalc;

namespace {

Cohomology<RationalField> co(int T, const char* q = "2,1,1,1") {
    const RationalField f;
    return Cohomology<RationalField>(Algebra<RationalField>(T, FieldSpec<RationalField>(f, parse_q(f, q))));
}

Cohomology<RatFuncField> co_f(int T, std::uint32_t p, const char* q) {
    const RatFuncField f(p);
    return Cohomology<RatFuncField>(Algebra<RatFuncField>(T, FieldSpec<RatFuncField>(f, parse_q(f, q))));
}

std::vector<long> hh_column(const CohomologyReport& rep) {
    std::vector<long> out;
    for (const auto& d : rep.degrees) out.push_back(d.hh);
    return out;
}

}  // namespace

TEST(Formulas, HomDimensionExamples) {
    EXPECT_EQ(hom_dim_formula(0, 0), 4);
    EXPECT_EQ(hom_dim_formula(1, 0), 16);
    EXPECT_EQ(hom_dim_formula(3, 0), 0);
    EXPECT_EQ(hom_dim_formula(5, 1), 96);
    EXPECT_EQ(hom_dim_formula(7, 2), 128);
    EXPECT_THROW(hom_dim_formula(-1, 0), std::invalid_argument);
}

TEST(Formulas, KernelDimensionExamples) {
    EXPECT_EQ(ker_dim_formula(-1, 1, false), 3);
    EXPECT_EQ(ker_dim_formula(0, 0, false), 5);
    EXPECT_EQ(ker_dim_formula(0, 1, true), 14);
    EXPECT_EQ(ker_dim_formula(2, 1, false), 16);
    EXPECT_EQ(ker_dim_formula(4, 1, true), 2 * 11 + 24);
    EXPECT_THROW(ker_dim_formula(-2, 0, false), std::invalid_argument);
}

TEST(Formulas, HochschildExamples) {
    EXPECT_EQ(hh_formula(0, 2, false), 5);
    EXPECT_EQ(hh_formula(1, 1, true), 5);
    EXPECT_EQ(hh_formula(1, 1, false), 4);
    for (long T = 0; T <= 3; ++T) {
        EXPECT_EQ(hh_formula(3, T, false), 2 * T);
        EXPECT_EQ(hh_formula(11, T, true), 2 * T);
        EXPECT_EQ(hh_formula(8, T, true), 2 * T);
    }
    EXPECT_EQ(hh_formula(6, 1, true), 4);
    EXPECT_EQ(hh_formula(6, 1, false), 2);
}

TEST(HomBasis, DegreeZeroAtTZero) {
    const auto b = co(0).hom_basis(0);
    ASSERT_EQ(b.size(), 4u);
    for (int i = 0; i < 4; ++i) {
        EXPECT_EQ(b[i].i, VertexId(i));
        EXPECT_EQ(b[i].path(), idempotent_path(i));
        EXPECT_EQ(b[i].to_string(), "beta^{0,0}_{0," + std::to_string(i) + ",0}");
    }
    EXPECT_TRUE(co(0).hom_basis(3).empty());
}

TEST(HomBasis, SizeMatchesClosedForm) {
    for (int T = 0; T <= 2; ++T) {
        const auto C = co(T);
        for (int n = 0; n <= 12; ++n) EXPECT_EQ(static_cast<long>(C.hom_basis(n).size()), hom_dim_formula(n, T));
    }
}

TEST(HomBasis, PositionsAreConsistent) {
    const auto C = co(1);
    for (int n = 0; n <= 6; ++n) {
        const auto b = C.hom_basis(n);
        for (std::size_t k = 0; k < b.size(); ++k) EXPECT_EQ(C.position(b[k]), k);
    }
}

TEST(Beta, Identifications) {
    const auto C = co(1, "2,3,5,7");
    // at k = 0, n ≡ 0 both letters give the idempotent
    EXPECT_EQ(C.beta(4, 0, 1, 2, 3).coeffs, C.beta(4, 0, 0, 2, 3).coeffs);
    // the letter-1 socle is -q_i (even i) times the letter-0 socle
    const auto s1 = C.beta(2, 1, 1, 0, 1);
    ASSERT_EQ(s1.coeffs.size(), 1u);
    EXPECT_EQ(s1.coeffs.begin()->first, (HomBasisIndex{2, 0, 0, 1, 1}));
    EXPECT_EQ(s1.coeffs.begin()->second, Rational(-2));
    EXPECT_EQ(C.beta(2, 1, 1, 1, 0).coeffs.begin()->second, Rational(-1, 3));
    EXPECT_THROW(C.beta(3, 0, 0, 0, 4), std::invalid_argument);
    EXPECT_THROW(C.beta(3, 1, 0, 0, 0), std::invalid_argument);  // x^7 is zero at T = 1
}

TEST(Evaluate, PicksTheMatchingGenerator) {
    const auto C = co(1);
    HomVector<RationalField> v{1, {}};
    v.add(HomBasisIndex{1, 0, 0, 0, 0}, Rational(3));
    v.add(HomBasisIndex{1, 1, 1, 1, 1}, Rational(-1));
    AlgebraElement<RationalField> want0;
    want0.add(BasisPath{0, 0, 1}, Rational(3));
    EXPECT_EQ(C.evaluate_hom(v, GenIndex{1, 0, 0}), want0);
    AlgebraElement<RationalField> want1;
    want1.add(BasisPath{1, 1, 5}, Rational(-1));
    EXPECT_EQ(C.evaluate_hom(v, GenIndex{1, 1, 1}), want1);
    EXPECT_TRUE(C.evaluate_hom(v, GenIndex{1, 2, 0}).is_zero());
    EXPECT_THROW(C.evaluate_hom(v, GenIndex{2, 0, 0}), std::invalid_argument);
}

TEST(Delta, ShapesAndRanksAtTZero) {
    const auto C = co(0);
    const auto d0 = C.delta_matrix(0);
    EXPECT_EQ(d0.matrix.rows(), 16u);
    EXPECT_EQ(d0.matrix.cols(), 4u);
    EXPECT_EQ(rank(d0), 3u);
    const auto d2 = C.delta_matrix(2);
    EXPECT_EQ(d2.matrix.rows(), 0u);
    EXPECT_EQ(d2.matrix.cols(), 12u);
    EXPECT_EQ(rank(d2), 0u);
    EXPECT_THROW(C.delta_matrix(1, C.resolution().differential(1)), std::invalid_argument);
}

TEST(Delta, UnitCochainIsACocycle) {
    // φ = Σ_i β^{0,0}_{0,i,0} is the identity-valued map, so δ^0 φ = 0.
    for (int T = 0; T <= 2; ++T) {
        const auto C = co(T);
        HomVector<RationalField> v{0, {}};
        for (int i = 0; i < 4; ++i) v.add(HomBasisIndex{0, 0, i, 0, 0}, Rational(1));
        for (const auto& x : C.delta_matrix(0).matrix.apply(C.dense(v))) EXPECT_TRUE(x.is_zero());
    }
}

TEST(Rank, SmallMatrices) {
    Matrix<RationalField> z(RationalField{}, 3, 4);
    EXPECT_EQ(rank(z), 0u);
    Matrix<RationalField> id(RationalField{}, 3, 3);
    for (int k = 0; k < 3; ++k) id.at(k, k) = Rational(1);
    EXPECT_EQ(rank(id), 3u);
    Matrix<RationalField> m(RationalField{}, 3, 2);
    m.at(0, 0) = Rational(1);
    m.at(0, 1) = Rational(2);
    m.at(1, 0) = Rational(2);
    m.at(1, 1) = Rational(4);
    m.at(2, 0) = Rational(1, 2);
    m.at(2, 1) = Rational(1);
    EXPECT_EQ(rank(m), 1u);
    m.at(2, 1) = Rational(3);
    EXPECT_EQ(rank(m), 2u);
}

TEST(Hochschild, RationalTZero) {
    const auto rep = co(0).hh_dimensions(12);
    EXPECT_TRUE(rep.all_match);
    EXPECT_EQ(hh_column(rep), (std::vector<long>{1, 2, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}));
}

TEST(Hochschild, RationalTOne) {
    const auto rep = co(1).hh_dimensions(9);
    EXPECT_TRUE(rep.all_match);
    EXPECT_EQ(hh_column(rep), (std::vector<long>{3, 4, 3, 2, 2, 2, 2, 2, 2, 2}));
    EXPECT_FALSE(rep.params.char_divides);
}

TEST(Hochschild, CharacteristicThreeTOne) {
    const auto rep = co_f(1, 3, "t,1,1,1").hh_dimensions(9);
    EXPECT_TRUE(rep.params.char_divides);
    EXPECT_TRUE(rep.all_match);
    EXPECT_EQ(hh_column(rep), (std::vector<long>{3, 5, 4, 2, 2, 4, 4, 2, 2, 4}));
}

TEST(Hochschild, CharacteristicFiveTTwoBothBranches) {
    EXPECT_TRUE(co_f(2, 5, "t,1,1,1").hh_dimensions(8).all_match);           // 5 | 5
    EXPECT_TRUE(co_f(2, 3, "t,(t+1)/t,2,1").hh_dimensions(8).all_match);     // 3 does not divide 5
    EXPECT_TRUE(co(2, "1/2,-3,5,7").hh_dimensions(8).all_match);
}

TEST(Hochschild, RankNullity) {
    const auto rep = co(1, "2,3,5,7").hh_dimensions(8);
    for (const auto& d : rep.degrees) {
        EXPECT_EQ(d.ker_dim + d.rank, d.hom_dim);
        EXPECT_GE(d.hh, 0);
    }
}

TEST(Hochschild, ThreadedMatchesSerial) {
    const auto C = co_f(1, 3, "t,1,1,1");
    EXPECT_EQ(C.delta_ranks(9, 1), C.delta_ranks(9, 4));
}

TEST(Hochschild, RootOfUnityRejected) {
    EXPECT_THROW(co(0, "1,1,1,1").hh_dimensions(3), std::invalid_argument);
    EXPECT_THROW(co(1, "-1,1,1,1").hh_dimensions(3), std::invalid_argument);
    EXPECT_THROW(co_f(0, 3, "t,1/t,2,1").hh_dimensions(3), std::invalid_argument);
    EXPECT_THROW(co(0, "1,1,1,1").closed_form_kernel_basis(0), std::invalid_argument);
}

TEST(KernelBasis, SmallDegreesAtTZero) {
    const auto C = co(0);
    const auto k0 = C.closed_form_kernel_basis(0);
    ASSERT_EQ(k0.size(), 1u);
    EXPECT_EQ(k0[0].coeffs.size(), 4u);
    EXPECT_EQ(C.closed_form_kernel_basis(2).size(), 12u);
    EXPECT_TRUE(C.closed_form_kernel_basis(3).empty());
    EXPECT_EQ(C.closed_form_kernel_basis(1).size(), 5u);
}

template <class K>
void expect_kernel_bases(const Cohomology<K>& C, int nmax, const char* label) {
    for (int n = 0; n <= nmax; ++n) {
        const auto c = C.kernel_basis_check(n);
        EXPECT_TRUE(c.in_kernel) << label << " n=" << n << " " << (c.offending.empty() ? "" : c.offending.front());
        EXPECT_TRUE(c.independent) << label << " n=" << n;
        EXPECT_TRUE(c.complete) << label << " n=" << n << " count " << c.count << " vs kernel " << c.kernel_dim;
    }
}

TEST(KernelBasis, ClosedFormMatchesComputedKernel) {
    expect_kernel_bases(co(0), 8, "Q T=0");
    expect_kernel_bases(co(1, "2,3,5,7"), 8, "Q T=1");
    expect_kernel_bases(co_f(0, 3, "t,1,1,1"), 8, "F3 T=0");
    expect_kernel_bases(co_f(1, 3, "t,1,1,1"), 8, "F3 T=1");
    expect_kernel_bases(co_f(1, 5, "t,t+1,2,(t+2)/t"), 8, "F5 T=1");
    expect_kernel_bases(co(2, "1/2,-3,5,7"), 6, "Q T=2");
}

TEST(Render, HomVector) {
    HomVector<RationalField> v{2, {}};
    v.add(HomBasisIndex{2, 1, 3, 2, 0}, Rational(1, 2));
    EXPECT_EQ(v.to_string(), "1/2*beta^{2,0}_{1,3,2}");
    EXPECT_THROW(v.add(HomBasisIndex{3, 0, 0, 0, 0}, Rational(1)), std::invalid_argument);
}

#include <gtest/gtest.h>

#include <algorithm>
#include <memory>
#include <numeric>

#include "ncfrob/finalg.hpp"

using namespace ncfrob;

namespace {

// 2x2 matrix units, E_ij at index 2i + j.
AlgebraPtr matrix_units() {
    const std::size_t d = 4;
    std::vector<Vector> products(d * d, Vector(d));
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            for (std::size_t k = 0; k < 2; ++k) products[(2 * i + j) * d + (2 * j + k)].set(2 * i + k, 1);
    Vector unit(d);
    unit.set(0, 1);
    unit.set(3, 1);
    return std::make_shared<AlgebraData>(std::vector<std::string>{"E00", "E01", "E10", "E11"}, products, unit);
}

// Delta(E_ij) = sum_k E_ik (x) E_kj, eps = trace.
ComultData matrix_comult(const AlgebraPtr& a) {
    Matrix delta(16, 4);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            for (std::size_t k = 0; k < 2; ++k) delta.set((2 * i + k) * 4 + (2 * k + j), 2 * i + j, 1);
    Vector trace(4);
    trace.set(0, 1);
    trace.set(3, 1);
    return ComultData(a, delta, trace);
}

// k[x]/(x^2) with basis 1, x.
AlgebraPtr dual_numbers() {
    std::vector<Vector> products(4, Vector(2));
    products[0].set(0, 1);
    products[1].set(1, 1);
    products[2].set(1, 1);
    return std::make_shared<AlgebraData>(std::vector<std::string>{"1", "x"}, products, Vector::unit_vector(2, 0));
}

}  // namespace

TEST(Algebra, ShapeValidation) {
    EXPECT_THROW(AlgebraData({}, {}, Vector(0)), InputError);
    EXPECT_THROW(AlgebraData({"a"}, {Vector(1), Vector(1)}, Vector(1)), InputError);
    EXPECT_THROW(AlgebraData({"a"}, {Vector(2)}, Vector(1)), InputError);
}

TEST(Algebra, MatrixUnitsAreAssociativeAndUnital) {
    const auto a = matrix_units();
    EXPECT_TRUE(check_algebra(*a).passed());
}

TEST(Algebra, BrokenAssociativityHasWitness) {
    const auto a = matrix_units();
    const AlgebraData broken = a->with_product(0, 1, Vector(4));
    const auto report = check_algebra(broken);
    EXPECT_FALSE(report.passed());
    const auto* f = report.first_failure();
    ASSERT_NE(f, nullptr);
    ASSERT_TRUE(f->witness.has_value());
    EXPECT_NE(f->witness->lhs, f->witness->rhs);
}

TEST(Comult, MatrixAlgebraIsFrobenius) {
    const auto a = matrix_units();
    const ComultData c = matrix_comult(a);
    EXPECT_TRUE(check_coassoc(c).passed());
    EXPECT_TRUE(check_bimodule(c).passed());
    EXPECT_TRUE(check_counit(c, *c.counit).passed());
    const auto result = analyze(c);
    EXPECT_EQ(result.kind, FrobeniusClass::Frobenius);
    ASSERT_TRUE(result.counit.counit.has_value());
    EXPECT_TRUE(result.counit.unique);
    EXPECT_EQ(*result.counit.counit, *c.counit);
}

TEST(Comult, CasimirReproducesDelta) {
    const auto a = matrix_units();
    const ComultData c = matrix_comult(a);
    const CasimirElement cas{a, c.apply(a->unit())};
    EXPECT_TRUE(check_casimir(cas).passed());
    EXPECT_EQ(casimir_comult(cas).delta, c.delta);
}

TEST(Comult, NonCasimirRejected) {
    const auto a = matrix_units();
    const CasimirElement cas{a, tensor(a->basis(0), a->basis(0))};
    EXPECT_FALSE(check_casimir(cas).passed());
    EXPECT_THROW(casimir_comult(cas), PreconditionError);
}

TEST(Comult, NonCoassociativeGivesWitness) {
    const auto a = dual_numbers();
    // Delta(1) = 1 (x) 1, Delta(x) = 1 (x) 1 + x (x) x.
    Matrix delta(4, 2);
    delta.set(0, 0, 1);
    delta.set(0, 1, 1);
    delta.set(3, 1, 1);
    const ComultData c(a, delta);
    const auto coassoc = check_coassoc(c);
    EXPECT_FALSE(coassoc.passed());
    const auto* f = coassoc.find("coassociativity");
    ASSERT_NE(f, nullptr);
    ASSERT_TRUE(f->witness.has_value());
    EXPECT_EQ(f->witness->indices, std::vector<std::size_t>{1});
    EXPECT_EQ(classify(c), FrobeniusClass::NotFrobeniusStructure);
}

TEST(Comult, DualNumbersFrobenius) {
    // Delta(1) = 1 (x) x + x (x) 1, Delta(x) = x (x) x, eps(x) = 1.
    const auto a = dual_numbers();
    Matrix delta(4, 2);
    delta.set(1, 0, 1);
    delta.set(2, 0, 1);
    delta.set(3, 1, 1);
    const ComultData c(a, delta);
    const auto result = analyze(c);
    EXPECT_EQ(result.kind, FrobeniusClass::Frobenius);
    ASSERT_TRUE(result.counit.counit.has_value());
    EXPECT_EQ((*result.counit.counit)[0], 0);
    EXPECT_EQ((*result.counit.counit)[1], 1);
}

TEST(Comult, ZeroIsNonCounitalOnly) {
    const auto a = matrix_units();
    const ComultData c(a, Matrix(16, 4));
    EXPECT_EQ(classify(c), FrobeniusClass::NonCounitalOnly);
}

TEST(Comult, WrongProvidedCounitIsReported) {
    const auto a = matrix_units();
    ComultData c = matrix_comult(a);
    c.counit = Vector::unit_vector(4, 0);
    const auto result = analyze(c);
    EXPECT_FALSE(result.report.passed());
    EXPECT_NE(result.report.find("provided_counit_left"), nullptr);
    EXPECT_FALSE(result.report.find("provided_counit_left")->passed);
}

TEST(Comult, ShapeValidation) {
    const auto a = matrix_units();
    EXPECT_THROW(ComultData(a, Matrix(4, 4)), InputError);
    EXPECT_THROW(ComultData(a, Matrix(16, 4), Vector(3)), InputError);
}

TEST(Permutation, ClassificationIsInvariant) {
    const auto a = matrix_units();
    const ComultData c = matrix_comult(a);
    std::vector<std::size_t> perm(4);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        const auto pa = std::make_shared<AlgebraData>(permute_basis(*a, perm));
        EXPECT_TRUE(check_algebra(*pa).passed());
        const ComultData pc = permute_basis(c, pa, perm);
        const auto result = analyze(pc);
        EXPECT_EQ(result.kind, FrobeniusClass::Frobenius);
        ASSERT_TRUE(result.counit.counit.has_value());
        EXPECT_EQ(*result.counit.counit, permute_vector(*c.counit, 4, 1, perm));
    } while (std::next_permutation(perm.begin(), perm.end()));
}

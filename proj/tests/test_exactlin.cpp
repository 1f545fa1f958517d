#include <gtest/gtest.h>

#include <random>

#include "ncfrob/exactlin.hpp"
#include "support.hpp"

using namespace ncfrob;

namespace {

Matrix dense(std::size_t rows, std::size_t cols, const std::vector<long>& values) {
    Matrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) m.set(r, c, Scalar(values[r * cols + c]));
    }
    return m;
}

Matrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, int spread) {
    Matrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
            const long v = static_cast<long>(rng() % (2 * spread + 1)) - spread;
            if (v != 0) m.set(r, c, Scalar(v));
        }
    }
    return m;
}

}  // namespace

TEST(Scalar, ParseAndPrint) {
    EXPECT_EQ(to_string(parse_scalar("6/4")), "3/2");
    EXPECT_EQ(to_string(parse_scalar("-2/4")), "-1/2");
    EXPECT_EQ(to_string(parse_scalar("10/5")), "2");
    EXPECT_EQ(to_string(parse_scalar("0")), "0");
    EXPECT_THROW(parse_scalar("1/0"), InputError);
    EXPECT_THROW(parse_scalar("abc"), InputError);
    EXPECT_THROW(parse_scalar(""), InputError);
}

TEST(Vector, NeverStoresZeros) {
    Vector v(3);
    v.set(1, 5);
    v.add(1, -5);
    EXPECT_TRUE(v.is_zero());
    EXPECT_EQ(v.nnz(), 0u);
    v.add(2, Scalar(1, 3));
    EXPECT_EQ(v[2], Scalar(1, 3));
    EXPECT_EQ(v[0], 0);
    v.set(0, Scalar(2, 4));
    EXPECT_EQ(to_string(v[0]), "1/2");
    EXPECT_EQ(v[0], Scalar(1, 2));
}

TEST(Vector, IndexOutOfRangeThrows) {
    Vector v(2);
    EXPECT_THROW(v.set(2, 1), InputError);
}

TEST(Vector, Arithmetic) {
    const std::vector<Scalar> a{1, 2, 0};
    const std::vector<Scalar> b{0, -2, 3};
    const Vector x = Vector::from_dense(a);
    const Vector y = Vector::from_dense(b);
    const std::vector<Scalar> sum{1, 0, 3};
    EXPECT_EQ(x + y, Vector::from_dense(sum));
    EXPECT_EQ(dot(x, y), -4);
    EXPECT_EQ((x * Scalar(0)).nnz(), 0u);
}

TEST(Matrix, ProductHandComputed) {
    const Matrix a = dense(2, 3, {1, 2, 3, 4, 5, 6});
    const Matrix b = dense(3, 2, {7, 8, 9, 10, 11, 12});
    EXPECT_EQ(a * b, dense(2, 2, {58, 64, 139, 154}));
    EXPECT_EQ(a.transpose().transpose(), a);
    EXPECT_EQ(a.transpose()(2, 1), 6);
}

TEST(Matrix, SolveHandComputed) {
    const Matrix a = dense(2, 2, {2, 1, 1, 3});
    const std::vector<Scalar> rhs{3, 5};
    const auto x = solve_linear(a, Vector::from_dense(rhs));
    ASSERT_TRUE(x.has_value());
    EXPECT_EQ((*x)[0], Scalar(4, 5));
    EXPECT_EQ((*x)[1], Scalar(7, 5));
}

TEST(Matrix, InconsistentSystem) {
    const Matrix a = dense(2, 2, {1, 1, 2, 2});
    const std::vector<Scalar> rhs{1, 3};
    EXPECT_FALSE(solve_linear(a, Vector::from_dense(rhs)).has_value());
}

TEST(Matrix, KernelHandComputed) {
    const Matrix a = dense(2, 3, {1, 2, 3, 2, 4, 6});
    const auto k = kernel_basis(a);
    ASSERT_EQ(k.size(), 2u);
    const std::vector<Scalar> k0{-2, 1, 0};
    const std::vector<Scalar> k1{-3, 0, 1};
    EXPECT_EQ(k[0], Vector::from_dense(k0));
    EXPECT_EQ(k[1], Vector::from_dense(k1));
    EXPECT_EQ(rank(a), 1u);
}

TEST(Matrix, InverseHandComputed) {
    const Matrix a = dense(2, 2, {1, 2, 3, 4});
    const auto inv = inverse(a);
    ASSERT_TRUE(inv.has_value());
    EXPECT_EQ((*inv)(0, 0), -2);
    EXPECT_EQ((*inv)(0, 1), 1);
    EXPECT_EQ((*inv)(1, 0), Scalar(3, 2));
    EXPECT_EQ((*inv)(1, 1), Scalar(-1, 2));
    EXPECT_FALSE(inverse(dense(2, 2, {1, 2, 2, 4})).has_value());
}

TEST(Matrix, RandomPropertiesAgainstCofactorDeterminant) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 1 + rng() % 5;
        const Matrix a = random_matrix(rng, n, n, 2);
        const Scalar det = testsupport::determinant(a);
        EXPECT_EQ(is_invertible(a), det != 0);
        const auto inv = inverse(a);
        EXPECT_EQ(inv.has_value(), det != 0);
        if (inv) {
            EXPECT_EQ(a * *inv, Matrix::identity(n));
            EXPECT_EQ(*inv * a, Matrix::identity(n));
        }
    }
}

TEST(Matrix, RandomRankNullity) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t rows = 1 + rng() % 5;
        const std::size_t cols = 1 + rng() % 6;
        const Matrix a = random_matrix(rng, rows, cols, 1);
        const auto k = kernel_basis(a);
        EXPECT_EQ(rank(a) + k.size(), cols);
        EXPECT_EQ(rank(std::span<const Vector>(k)), k.size());
        for (const auto& v : k) EXPECT_TRUE((a * v).is_zero());
        EXPECT_EQ(rank(a), rank(a.transpose()));
    }
}

TEST(Matrix, RandomSolveConsistentSystems) {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t rows = 1 + rng() % 5;
        const std::size_t cols = 1 + rng() % 5;
        const Matrix a = random_matrix(rng, rows, cols, 3);
        Vector x0(cols);
        for (std::size_t c = 0; c < cols; ++c) x0.set(c, Scalar(static_cast<long>(rng() % 7) - 3) / Scalar(1 + static_cast<long>(rng() % 3)));
        const Vector b = a * x0;
        const auto x = solve_linear(a, b);
        ASSERT_TRUE(x.has_value());
        EXPECT_EQ(a * *x, b);
    }
}

TEST(Tensor, FlattenRoundTrip) {
    const TensorIndex idx({2, 3, 4});
    EXPECT_EQ(idx.size(), 24u);
    const std::vector<std::size_t> multi{1, 2, 3};
    EXPECT_EQ(idx.flatten(multi), 23u);
    for (std::size_t f = 0; f < idx.size(); ++f) EXPECT_EQ(idx.flatten(idx.unflatten(f)), f);
}

TEST(Tensor, ApplyToFactor) {
    // Swap map on the middle factor of C^2 (x) C^2 (x) C^2.
    const Matrix swap = dense(2, 2, {0, 1, 1, 0});
    const std::vector<std::size_t> dims{2, 2, 2};
    const TensorIndex idx(dims);
    for (std::size_t f = 0; f < 8; ++f) {
        auto multi = idx.unflatten(f);
        const Vector out = apply_to_factor(Vector::unit_vector(8, f), dims, 1, swap);
        multi[1] = 1 - multi[1];
        EXPECT_EQ(out, Vector::unit_vector(8, idx.flatten(multi)));
    }
    const Matrix widen = dense(3, 2, {1, 0, 0, 1, 1, 1});
    const Vector out = apply_to_factor(Vector::unit_vector(8, 1), dims, 2, widen);
    EXPECT_EQ(out.dim(), 12u);
    EXPECT_EQ(out[1], 1);
    EXPECT_EQ(out[2], 1);
    EXPECT_EQ(out.nnz(), 2u);
}

#include "mackeylab/qlinalg.hpp"

#include <catch_amalgamated.hpp>

#include <random>

using namespace mackeylab;

namespace {

Matrix random_matrix(std::mt19937& rng, int rows, int cols) {
    std::uniform_int_distribution<int> num(-5, 5);
    std::uniform_int_distribution<int> den(1, 4);
    Matrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m.at(i, j) = Rational(num(rng), den(rng));
    return m;
}

}  // namespace

TEST_CASE("rref examples") {
    auto [r1, p1] = rref(Matrix::from_rows({{1, 2}, {2, 4}}));
    CHECK(r1 == Matrix::from_rows({{1, 2}, {0, 0}}));
    CHECK(p1 == std::vector<int>{0});

    auto [r2, p2] = rref(Matrix::identity(3));
    CHECK(r2 == Matrix::identity(3));
    CHECK(p2 == std::vector<int>{0, 1, 2});

    // Hand row-reduction: swap the rows.
    auto [r3, p3] = rref(Matrix::from_rows({{0, 1}, {1, 0}}));
    CHECK(r3 == Matrix::identity(2));
    CHECK(p3 == std::vector<int>{0, 1});
}

TEST_CASE("re-reducing a reduced matrix is the identity") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        Matrix m = random_matrix(rng, 3, 4);
        Matrix r = rref(m).reduced;
        CHECK(rref(r).reduced == r);
    }
}

TEST_CASE("kernel_basis examples") {
    Matrix k1 = kernel_basis(Matrix::from_rows({{1, 1}}));
    REQUIRE(k1.cols() == 1);
    CHECK(k1.at(0, 0) == -k1.at(1, 0));
    CHECK(k1.at(1, 0) != 0);

    CHECK(kernel_basis(Matrix::identity(2)).cols() == 0);

    // 2x = y by hand: kernel of [[2,-1],[-4,2]] is spanned by (1,2).
    Matrix k2 = kernel_basis(Matrix::from_rows({{2, -1}, {-4, 2}}));
    REQUIRE(k2.cols() == 1);
    CHECK(k2.at(1, 0) == 2 * k2.at(0, 0));
}

TEST_CASE("image_basis examples") {
    CHECK(image_basis(Matrix::zero(2, 2)).cols() == 0);

    Matrix b1 = image_basis(Matrix::from_rows({{1, 2}, {2, 4}}));
    REQUIRE(b1.cols() == 1);
    CHECK(b1.at(1, 0) == 2 * b1.at(0, 0));

    // Determinant 1, so both columns are independent.
    CHECK(image_basis(Matrix::from_rows({{1, 0}, {1, 1}})).cols() == 2);
}

TEST_CASE("solve examples") {
    Matrix b = Matrix::from_rows({{3}, {5}});
    auto x1 = solve(Matrix::identity(2), b);
    REQUIRE(x1.has_value());
    CHECK(*x1 == b);

    Matrix m2 = Matrix::from_rows({{1, 1}});
    auto x2 = solve(m2, Matrix::from_rows({{2}}));
    REQUIRE(x2.has_value());
    CHECK(x2->at(0, 0) + x2->at(1, 0) == 2);

    auto x3 = solve(Matrix::from_rows({{2}}), Matrix::from_rows({{1}}));
    REQUIRE(x3.has_value());
    CHECK(x3->at(0, 0) == Rational(1, 2));

    CHECK_FALSE(solve(Matrix::from_rows({{1, 2}, {2, 4}}), Matrix::from_rows({{1}, {0}})).has_value());
}

TEST_CASE("rank equals rank of transpose, rank-nullity, solve round trip") {
    std::mt19937 rng(42);
    for (int trial = 0; trial < 100; ++trial) {
        int rows = 1 + static_cast<int>(rng() % 5);
        int cols = 1 + static_cast<int>(rng() % 5);
        Matrix m = random_matrix(rng, rows, cols);
        int r = rank(m);
        CHECK(r == rank(m.transpose()));
        CHECK(cols == r + kernel_basis(m).cols());

        Matrix x = random_matrix(rng, cols, 1);
        Matrix b = m * x;
        auto sol = solve(m, b);
        REQUIRE(sol.has_value());
        CHECK(m * *sol == b);
    }
}

TEST_CASE("subquotient: quotient of Q^3 by a plane") {
    Matrix plane = Matrix::from_columns({{1, 0, 0}, {0, 1, 1}});
    Subquotient q = Subquotient::quotient(3, plane);
    REQUIRE(q.dim() == 1);
    // Both plane vectors map to zero, a transversal vector does not.
    CHECK(q.coords(plane.column(0)).is_zero());
    CHECK(q.coords(plane.column(1)).is_zero());
    CHECK_FALSE(q.coords(Matrix::from_rows({{0}, {0}, {1}})).is_zero());
}

TEST_CASE("subquotient: kernel mod image in the middle of an exact sequence") {
    // Q --(1,1)--> Q^2 --(1,-1)--> Q is exact in the middle.
    Matrix d_in = Matrix::from_rows({{1}, {1}});
    Matrix d_out = Matrix::from_rows({{1, -1}});
    Subquotient h(2, kernel_basis(d_out), image_basis(d_in));
    CHECK(h.dim() == 0);
}

TEST_CASE("subquotient: induced map") {
    // Ambient swap on Q^2 descends to -1 on ker(sum)/0.
    Subquotient k = Subquotient::subspace(kernel_basis(Matrix::from_rows({{1, 1}})));
    REQUIRE(k.dim() == 1);
    Matrix swap = Matrix::from_rows({{0, 1}, {1, 0}});
    CHECK(k.induced(swap, k) == Matrix::from_rows({{-1}}));
}

#include <catch2/catch_amalgamated.hpp>

#include "splitkit/hypersimplex.hpp"
#include "splitkit/linalg.hpp"
#include "test_helpers.hpp"

using namespace splitkit;
using sk_test::mat;
using sk_test::vec;

TEST_CASE("rank of simple matrices")
{
    CHECK(rank(mat({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})) == 3);
    CHECK(rank(MatrixXq::Zero(2, 5)) == 0);
}

TEST_CASE("rank of the octahedron vertex matrix is 4")
{
    // rows of Delta(2,4): six 0/1 vectors with two ones
    CHECK(rank(hypersimplex(2, 4).vertex_matrix()) == 4);
}

TEST_CASE("rank equals rank of the transpose on random matrices")
{
    sk_test::Rng rng(7);
    for (int trial = 0; trial < 25; ++trial) {
        MatrixXq m(2 + rng.below(4), 2 + rng.below(4));
        for (Eigen::Index i = 0; i < m.rows(); ++i)
            for (Eigen::Index j = 0; j < m.cols(); ++j)
                m(i, j) = rng.rat(3, 3);
        CHECK(rank(m) == rank(MatrixXq(m.transpose())));
    }
}

TEST_CASE("solve_affine identity")
{
    auto sol = solve_affine(mat({{1, 0}, {0, 1}}), vec({1, 2}));
    REQUIRE(sol.has_value());
    CHECK(sol->particular == vec({1, 2}));
    CHECK(sol->nullspace.cols() == 0);
}

TEST_CASE("solve_affine underdetermined: x + y = 0")
{
    auto sol = solve_affine(mat({{1, 1}}), vec({0}));
    REQUIRE(sol.has_value());
    CHECK(sol->particular == vec({0, 0}));
    REQUIRE(sol->nullspace.cols() == 1);
    // basis vector is a multiple of (1, -1)
    CHECK(sol->nullspace(0, 0) == -sol->nullspace(1, 0));
    CHECK(sol->nullspace(0, 0) != 0);
}

TEST_CASE("solve_affine detects inconsistency")
{
    CHECK(!solve_affine(mat({{1, 0}, {1, 0}}), vec({1, 2})).has_value());
}

TEST_CASE("solve_affine on the hexagon cell of w1")
{
    // vertices v1, v2, v5, v6 all have weight 0 under w1, so the dual
    // vertex solves V x = 0 on those rows; the rows have rank 3
    auto hex = sk_test::hexagon();
    MatrixXq rows(4, 3);
    int cell[4] = {0, 1, 4, 5};
    for (int i = 0; i < 4; ++i)
        rows.row(i) = hex.vertex_matrix().row(cell[i]);
    auto sol = solve_affine(rows, VectorXq::Zero(4));
    REQUIRE(sol.has_value());
    CHECK(sol->particular == VectorXq::Zero(3));
    CHECK(sol->nullspace.cols() == 0);
}

TEST_CASE("solution plus nullspace combinations still solve the system")
{
    sk_test::Rng rng(99);
    for (int trial = 0; trial < 20; ++trial) {
        MatrixXq m(2 + rng.below(3), 2 + rng.below(4));
        for (Eigen::Index i = 0; i < m.rows(); ++i)
            for (Eigen::Index j = 0; j < m.cols(); ++j)
                m(i, j) = rng.rat(2, 2);
        VectorXq x(m.cols());
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            x(j) = rng.rat(2, 2);
        VectorXq b = m * x;  // guaranteed consistent
        auto sol = solve_affine(m, b);
        REQUIRE(sol.has_value());
        CHECK(m * sol->particular == b);
        for (Eigen::Index c = 0; c < sol->nullspace.cols(); ++c) {
            VectorXq shifted = sol->particular + rng.rat(3, 2) * sol->nullspace.col(c);
            CHECK(m * shifted == b);
        }
    }
}

TEST_CASE("smith normal form of diag(2,3)")
{
    MatrixXz m = MatrixXz::Zero(2, 2);
    m(0, 0) = 2;
    m(1, 1) = 3;
    auto f = smith_normal_form(m);
    REQUIRE(f.size() == 2);
    CHECK(f[0] == 1);
    CHECK(f[1] == 6);
}

TEST_CASE("smith normal form of the zero matrix is empty")
{
    CHECK(smith_normal_form(MatrixXz::Zero(3, 4)).empty());
}

TEST_CASE("smith normal form of the 3-cycle boundary")
{
    // edges 01, 02, 12 over vertices 0,1,2
    MatrixXz d1 = MatrixXz::Zero(3, 3);
    d1(0, 0) = -1; d1(1, 0) = 1;
    d1(0, 1) = -1; d1(2, 1) = 1;
    d1(1, 2) = -1; d1(2, 2) = 1;
    auto f = smith_normal_form(d1);
    REQUIRE(f.size() == 2);
    CHECK(f[0] == 1);
    CHECK(f[1] == 1);
}

TEST_CASE("smith normal form factors divide in sequence")
{
    sk_test::Rng rng(1234);
    for (int trial = 0; trial < 20; ++trial) {
        MatrixXz m(2 + rng.below(3), 2 + rng.below(3));
        for (Eigen::Index i = 0; i < m.rows(); ++i)
            for (Eigen::Index j = 0; j < m.cols(); ++j)
                m(i, j) = rng.below(13) - 6;
        auto f = smith_normal_form(m);
        for (std::size_t i = 0; i + 1 < f.size(); ++i) {
            CHECK(f[i] > 0);
            CHECK(f[i + 1] % f[i] == 0);
        }
    }
}

TEST_CASE("primitive_vector scales to coprime integers")
{
    VectorXq v(3);
    v << Rat(1, 2), Rat(-2, 3), Rat(0);
    VectorXq p = primitive_vector(v);
    CHECK(p(0) == 3);
    CHECK(p(1) == -4);
    CHECK(p(2) == 0);
}

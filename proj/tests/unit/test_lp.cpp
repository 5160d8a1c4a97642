#include <catch2/catch_amalgamated.hpp>

#include "splitkit/lp.hpp"
#include "test_helpers.hpp"

using namespace splitkit;
using sk_test::vec;

TEST_CASE("max x over the unit interval")
{
    std::vector<LinConstraint> cs = {
        make_constraint(vec({1}), Rel::Ge, 0),
        make_constraint(vec({-1}), Rel::Ge, -1),
    };
    auto res = lp_optimize(cs, vec({1}), LpSense::Max);
    REQUIRE(res.optimal());
    CHECK(res.value == 1);
    CHECK(res.witness(0) == 1);
}

TEST_CASE("unbounded above")
{
    std::vector<LinConstraint> cs = {make_constraint(vec({1}), Rel::Ge, 0)};
    auto res = lp_optimize(cs, vec({1}), LpSense::Max);
    CHECK(res.status == LpResult::Status::Unbounded);
}

TEST_CASE("infeasible system")
{
    std::vector<LinConstraint> cs = {
        make_constraint(vec({1}), Rel::Ge, 1),
        make_constraint(vec({-1}), Rel::Ge, 0),
    };
    auto res = lp_optimize(cs, vec({1}), LpSense::Max);
    CHECK(res.status == LpResult::Status::Infeasible);
}

TEST_CASE("strict system 0 < x < 1/3 has an interior witness")
{
    std::vector<LinConstraint> cs = {
        make_constraint(vec({1}), Rel::Gt, 0),
        make_constraint(vec({-1}), Rel::Gt, Rat(-1) / 3),
    };
    auto pt = strict_feasible_point(cs, 1);
    REQUIRE(pt.has_value());
    CHECK((*pt)(0) > 0);
    CHECK((*pt)(0) < Rat(1) / 3);
}

TEST_CASE("strict infeasibility: x > 0 and x < 0")
{
    std::vector<LinConstraint> cs = {
        make_constraint(vec({1}), Rel::Gt, 0),
        make_constraint(vec({-1}), Rel::Gt, 0),
    };
    CHECK(!strict_feasible_point(cs, 1).has_value());
}

TEST_CASE("witnesses satisfy every constraint exactly")
{
    sk_test::Rng rng(42);
    for (int trial = 0; trial < 40; ++trial) {
        const Eigen::Index w = 2 + rng.below(3);
        std::vector<LinConstraint> cs;
        // random box so the problem stays bounded and feasible
        for (Eigen::Index j = 0; j < w; ++j) {
            VectorXq e = VectorXq::Zero(w);
            e(j) = 1;
            Rat lo = rng.rat(4, 2);
            Rat hi = lo + 1 + rng.below(4);
            cs.push_back(make_constraint(e, Rel::Ge, lo));
            cs.push_back(make_constraint((-e).eval(), Rel::Ge, -hi));
        }
        VectorXq obj(w);
        for (Eigen::Index j = 0; j < w; ++j)
            obj(j) = rng.rat(3, 2);
        auto res = lp_optimize(cs, obj, trial % 2 ? LpSense::Max : LpSense::Min);
        REQUIRE(res.optimal());
        for (const auto& c : cs) {
            Rat lhs = c.coeffs.dot(res.witness);
            if (c.rel == Rel::Eq)
                CHECK(lhs == c.rhs);
            else
                CHECK(lhs >= c.rhs);
        }
        CHECK(obj.dot(res.witness) == res.value);
    }
}

TEST_CASE("equalities are honored")
{
    std::vector<LinConstraint> cs = {
        make_constraint(vec({1, 1}), Rel::Eq, 2),
        make_constraint(vec({1, 0}), Rel::Ge, 0),
        make_constraint(vec({0, 1}), Rel::Ge, 0),
    };
    auto res = lp_optimize(cs, vec({1, 0}), LpSense::Max);
    REQUIRE(res.optimal());
    CHECK(res.value == 2);
    CHECK(res.witness(0) + res.witness(1) == 2);
}

TEST_CASE("degenerate problems terminate (Bland)")
{
    // classic degeneracy: many constraints active at the optimum
    std::vector<LinConstraint> cs = {
        make_constraint(vec({1, 0}), Rel::Ge, 0),
        make_constraint(vec({0, 1}), Rel::Ge, 0),
        make_constraint(vec({-1, -1}), Rel::Ge, -1),
        make_constraint(vec({-1, -2}), Rel::Ge, -1),
        make_constraint(vec({-2, -1}), Rel::Ge, -1),
    };
    auto res = lp_optimize(cs, vec({1, 1}), LpSense::Max);
    REQUIRE(res.optimal());
    CHECK(res.value == Rat(2) / 3);
}

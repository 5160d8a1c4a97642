/**
 * Exact linear programming over the rationals.
 *
 * A two-phase tableau simplex with Bland's rule; every pivot is exact, so
 * the solver terminates and the witness satisfies each constraint with no
 * tolerance.  Strict inequalities are reduced to the auxiliary problem
 * "maximize t subject to lhs >= rhs + t on the strict rows and t <= 1":
 * the system is strictly feasible iff the auxiliary optimum is positive.
 */

#ifndef SPLITKIT_LP_HPP
#define SPLITKIT_LP_HPP

#include <optional>
#include <vector>

#include "splitkit/linalg.hpp"

namespace splitkit {

enum class Rel { Eq, Ge, Gt };

struct LinConstraint {
    VectorXq coeffs;
    Rel rel = Rel::Ge;
    Rat rhs = 0;
};

inline LinConstraint make_constraint(VectorXq c, Rel r, Rat b)
{
    return LinConstraint{std::move(c), r, std::move(b)};
}

enum class LpSense { Max, Min };

struct LpResult {
    enum class Status { Optimal, Infeasible, Unbounded };
    Status status = Status::Infeasible;
    Rat value = 0;
    VectorXq witness;  // only meaningful when status == Optimal

    bool optimal() const { return status == Status::Optimal; }
};

/**
 * Optimize objective . x subject to the constraints.  All constraint widths
 * must match the objective width.  If strict rows are present the problem
 * solved is the auxiliary one described above (its value is the slack t and
 * the witness is an interior point); strict systems are feasibility queries.
 */
LpResult lp_optimize(const std::vector<LinConstraint>& constraints,
                     const VectorXq& objective, LpSense sense);

/**
 * Witness of the open system (strict rows honored strictly), or nothing.
 */
std::optional<VectorXq> strict_feasible_point(const std::vector<LinConstraint>& constraints,
                                              Eigen::Index width);

}  // namespace splitkit

#endif

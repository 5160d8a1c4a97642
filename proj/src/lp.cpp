#include "splitkit/lp.hpp"

#include <stdexcept>

namespace splitkit {

namespace {

/**
 * Dense simplex tableau for min c.y s.t. A y = b, y >= 0, b >= 0.
 * Column layout: structural variables, then one artificial per row.
 * Bland's rule on both the entering and the leaving choice.
 */
class Simplex {
  public:
    Simplex(MatrixXq a, VectorXq b) : a_(std::move(a)), b_(std::move(b))
    {
        rows_ = a_.rows();
        cols_ = a_.cols();
        basis_.resize(rows_);
    }

    // Phase 1: returns false when the system is infeasible.
    bool find_feasible()
    {
        const Eigen::Index n = cols_;
        MatrixXq t(rows_, n + rows_);
        t.leftCols(n) = a_;
        t.rightCols(rows_) = MatrixXq::Identity(rows_, rows_);
        tab_ = std::move(t);
        for (Eigen::Index i = 0; i < rows_; ++i)
            basis_[i] = n + i;

        VectorXq cost = VectorXq::Zero(n + rows_);
        for (Eigen::Index j = n; j < n + rows_; ++j)
            cost(j) = 1;
        Rat opt = run(cost);
        if (opt != 0)
            return false;

        // pivot leftover artificials out of the basis, dropping redundant rows
        for (Eigen::Index i = 0; i < rows_;) {
            if (basis_[i] < n) {
                ++i;
                continue;
            }
            Eigen::Index enter = -1;
            for (Eigen::Index j = 0; j < n; ++j)
                if (tab_(i, j) != 0) {
                    enter = j;
                    break;
                }
            if (enter < 0) {
                drop_row(i);
                continue;
            }
            pivot(i, enter);
            ++i;
        }
        tab_.conservativeResize(rows_, n);
        cols_ = n;
        return true;
    }

    // Phase 2: optimize; returns false on unboundedness.
    bool minimize(const VectorXq& cost)
    {
        value_ = run(cost, &unbounded_);
        return !unbounded_;
    }

    Rat objective_value() const { return value_; }

    VectorXq solution() const
    {
        VectorXq y = VectorXq::Zero(cols_);
        for (Eigen::Index i = 0; i < rows_; ++i)
            if (basis_[i] < cols_)
                y(basis_[i]) = b_(i);
        return y;
    }

  private:
    void drop_row(Eigen::Index r)
    {
        const Eigen::Index last = rows_ - 1;
        if (r != last) {
            tab_.row(r).swap(tab_.row(last));
            std::swap(b_(r), b_(last));
            std::swap(basis_[r], basis_[last]);
        }
        tab_.conservativeResize(last, Eigen::NoChange);
        b_.conservativeResize(last);
        basis_.resize(last);
        rows_ = last;
    }

    void pivot(Eigen::Index r, Eigen::Index c)
    {
        const Rat p = tab_(r, c);
        tab_.row(r) /= p;
        b_(r) /= p;
        for (Eigen::Index i = 0; i < rows_; ++i) {
            if (i == r || tab_(i, c) == 0)
                continue;
            const Rat f = tab_(i, c);
            tab_.row(i) -= f * tab_.row(r);
            b_(i) -= f * b_(r);
        }
        basis_[r] = c;
    }

    Rat run(const VectorXq& cost, bool* unbounded = nullptr)
    {
        if (unbounded)
            *unbounded = false;
        const Eigen::Index w = tab_.cols();
        // reduced costs maintained explicitly: z = cost - sum over basis rows
        RowVectorXq red = cost.transpose();
        Rat value = 0;
        for (Eigen::Index i = 0; i < rows_; ++i) {
            if (cost(basis_[i]) != 0) {
                red -= cost(basis_[i]) * tab_.row(i);
                value += cost(basis_[i]) * b_(i);
            }
        }
        for (;;) {
            Eigen::Index enter = -1;
            for (Eigen::Index j = 0; j < w; ++j)
                if (red(j) < 0) {
                    enter = j;
                    break;
                }
            if (enter < 0)
                return value;

            Eigen::Index leave = -1;
            Rat best;
            for (Eigen::Index i = 0; i < rows_; ++i) {
                if (tab_(i, enter) <= 0)
                    continue;
                Rat ratio = b_(i) / tab_(i, enter);
                if (leave < 0 || ratio < best ||
                    (ratio == best && basis_[i] < basis_[leave])) {
                    leave = i;
                    best = ratio;
                }
            }
            if (leave < 0) {
                if (unbounded)
                    *unbounded = true;
                return value;
            }
            pivot(leave, enter);
            value = 0;
            red = cost.transpose();
            for (Eigen::Index i = 0; i < rows_; ++i) {
                if (cost(basis_[i]) != 0) {
                    red -= cost(basis_[i]) * tab_.row(i);
                    value += cost(basis_[i]) * b_(i);
                }
            }
        }
    }

    MatrixXq a_, tab_;
    VectorXq b_;
    std::vector<Eigen::Index> basis_;
    Eigen::Index rows_, cols_;
    Rat value_ = 0;
    bool unbounded_ = false;
};

struct StandardForm {
    MatrixXq a;
    VectorXq b;
    Eigen::Index width;  // original variable count (possibly + aux t)
    bool has_t = false;
};

// Free variables are split as x = x+ - x-; Ge rows get a surplus variable.
StandardForm to_standard(const std::vector<LinConstraint>& constraints,
                         Eigen::Index width, bool add_t)
{
    Eigen::Index m = static_cast<Eigen::Index>(constraints.size()) + (add_t ? 1 : 0);
    Eigen::Index nfree = width + (add_t ? 1 : 0);
    Eigen::Index nge = 0;
    for (const auto& c : constraints)
        if (c.rel != Rel::Eq)
            ++nge;
    if (add_t)
        ++nge;  // the t <= 1 row

    StandardForm sf;
    sf.width = nfree;
    sf.has_t = add_t;
    sf.a = MatrixXq::Zero(m, 2 * nfree + nge);
    sf.b = VectorXq::Zero(m);

    Eigen::Index slack = 2 * nfree;
    for (Eigen::Index i = 0; i < static_cast<Eigen::Index>(constraints.size()); ++i) {
        const auto& c = constraints[i];
        if (c.coeffs.size() != width)
            throw std::invalid_argument("lp: constraint width mismatch");
        for (Eigen::Index j = 0; j < width; ++j) {
            sf.a(i, 2 * j) = c.coeffs(j);
            sf.a(i, 2 * j + 1) = -c.coeffs(j);
        }
        sf.b(i) = c.rhs;
        if (add_t && c.rel == Rel::Gt) {
            sf.a(i, 2 * width) = -1;  // lhs - t >= rhs
            sf.a(i, 2 * width + 1) = 1;
        }
        if (c.rel != Rel::Eq)
            sf.a(i, slack++) = -1;  // surplus: lhs - s = rhs
    }
    if (add_t) {
        Eigen::Index r = m - 1;  // t + s = 1
        sf.a(r, 2 * width) = 1;
        sf.a(r, 2 * width + 1) = -1;
        sf.a(r, slack++) = 1;
        sf.b(r) = 1;
    }
    for (Eigen::Index i = 0; i < m; ++i) {
        if (sf.b(i) < 0) {
            sf.a.row(i) = -sf.a.row(i);
            sf.b(i) = -sf.b(i);
        }
    }
    return sf;
}

LpResult solve_standard(const StandardForm& sf, const VectorXq& objective, LpSense sense)
{
    // objective is over the free variables (width of sf)
    VectorXq cost = VectorXq::Zero(sf.a.cols());
    for (Eigen::Index j = 0; j < sf.width; ++j) {
        Rat c = objective(j);
        if (sense == LpSense::Max)
            c = -c;
        cost(2 * j) = c;
        cost(2 * j + 1) = -c;
    }

    LpResult res;
    Simplex sx(sf.a, sf.b);
    if (!sx.find_feasible()) {
        res.status = LpResult::Status::Infeasible;
        return res;
    }
    if (!sx.minimize(cost)) {
        res.status = LpResult::Status::Unbounded;
        return res;
    }
    res.status = LpResult::Status::Optimal;
    res.value = sense == LpSense::Max ? Rat(-sx.objective_value()) : sx.objective_value();
    VectorXq y = sx.solution();
    res.witness = VectorXq::Zero(sf.width);
    for (Eigen::Index j = 0; j < sf.width; ++j)
        res.witness(j) = y(2 * j) - y(2 * j + 1);
    return res;
}

}  // namespace

LpResult lp_optimize(const std::vector<LinConstraint>& constraints,
                     const VectorXq& objective, LpSense sense)
{
    bool strict = false;
    for (const auto& c : constraints)
        if (c.rel == Rel::Gt)
            strict = true;

    if (!strict) {
        StandardForm sf = to_standard(constraints, objective.size(), false);
        return solve_standard(sf, objective, sense);
    }

    // auxiliary problem: maximize the uniform strict slack t
    StandardForm sf = to_standard(constraints, objective.size(), true);
    VectorXq obj = VectorXq::Zero(sf.width);
    obj(sf.width - 1) = 1;
    LpResult res = solve_standard(sf, obj, LpSense::Max);
    if (res.optimal()) {
        if (res.value <= 0) {
            res = LpResult{};
            res.status = LpResult::Status::Infeasible;
            return res;
        }
        res.witness.conservativeResize(objective.size());
    }
    return res;
}

std::optional<VectorXq> strict_feasible_point(const std::vector<LinConstraint>& constraints,
                                              Eigen::Index width)
{
    VectorXq zero = VectorXq::Zero(width);
    LpResult res = lp_optimize(constraints, zero, LpSense::Max);
    bool strict = false;
    for (const auto& c : constraints)
        if (c.rel == Rel::Gt)
            strict = true;
    if (!strict) {
        if (!res.optimal())
            return std::nullopt;
        return res.witness;
    }
    if (!res.optimal())
        return std::nullopt;
    return res.witness;
}

}  // namespace splitkit

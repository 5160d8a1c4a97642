#include "splitkit/linalg.hpp"

#include <algorithm>

namespace splitkit {

namespace {

// In-place reduced row echelon form; returns the pivot columns.
std::vector<Eigen::Index> rref(MatrixXq& a)
{
    const Eigen::Index rows = a.rows(), cols = a.cols();
    std::vector<Eigen::Index> pivots;
    Eigen::Index r = 0;
    for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
        Eigen::Index p = -1;
        for (Eigen::Index i = r; i < rows; ++i) {
            if (a(i, c) != 0) {
                p = i;
                break;
            }
        }
        if (p < 0)
            continue;
        if (p != r)
            a.row(p).swap(a.row(r));
        a.row(r) /= a(r, c);
        for (Eigen::Index i = 0; i < rows; ++i) {
            if (i != r && a(i, c) != 0)
                a.row(i) -= a(i, c) * a.row(r);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

Eigen::Index rank(const MatrixXq& m)
{
    MatrixXq a = m;
    return static_cast<Eigen::Index>(rref(a).size());
}

MatrixXq kernel(const MatrixXq& m)
{
    MatrixXq a = m;
    const auto pivots = rref(a);
    const Eigen::Index cols = m.cols();
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivots)
        is_pivot[c] = true;

    MatrixXq basis(cols, cols - static_cast<Eigen::Index>(pivots.size()));
    Eigen::Index k = 0;
    for (Eigen::Index free = 0; free < cols; ++free) {
        if (is_pivot[free])
            continue;
        VectorXq v = VectorXq::Zero(cols);
        v(free) = 1;
        for (Eigen::Index i = 0; i < static_cast<Eigen::Index>(pivots.size()); ++i)
            v(pivots[i]) = -a(i, free);
        basis.col(k++) = v;
    }
    return basis;
}

std::optional<AffineSolution> solve_affine(const MatrixXq& m, const VectorXq& b)
{
    if (b.size() != m.rows())
        throw std::invalid_argument("solve_affine: size mismatch");
    MatrixXq aug(m.rows(), m.cols() + 1);
    aug.leftCols(m.cols()) = m;
    aug.col(m.cols()) = b;
    const auto pivots = rref(aug);
    if (!pivots.empty() && pivots.back() == m.cols())
        return std::nullopt;  // pivot in the rhs column: inconsistent

    AffineSolution sol;
    sol.particular = VectorXq::Zero(m.cols());
    for (Eigen::Index i = 0; i < static_cast<Eigen::Index>(pivots.size()); ++i)
        sol.particular(pivots[i]) = aug(i, m.cols());
    sol.nullspace = kernel(m);
    return sol;
}

std::vector<Int> smith_normal_form(MatrixXz m)
{
    const Eigen::Index rows = m.rows(), cols = m.cols();
    std::vector<Int> factors;
    Eigen::Index t = 0;

    auto abs_lt = [](const Int& x, const Int& y) { return abs(x) < abs(y); };

    while (t < rows && t < cols) {
        // locate the entry of smallest absolute value in the working block
        Eigen::Index pi = -1, pj = -1;
        for (Eigen::Index i = t; i < rows; ++i)
            for (Eigen::Index j = t; j < cols; ++j)
                if (m(i, j) != 0 && (pi < 0 || abs_lt(m(i, j), m(pi, pj)))) {
                    pi = i;
                    pj = j;
                }
        if (pi < 0)
            break;  // block is zero
        m.row(pi).swap(m.row(t));
        m.col(pj).swap(m.col(t));

        bool clean = false;
        while (!clean) {
            clean = true;
            for (Eigen::Index i = t + 1; i < rows; ++i) {
                if (m(i, t) == 0)
                    continue;
                Int q = m(i, t) / m(t, t);
                m.row(i) -= q * m.row(t);
                if (m(i, t) != 0) {  // remainder becomes the smaller pivot
                    m.row(i).swap(m.row(t));
                    clean = false;
                }
            }
            for (Eigen::Index j = t + 1; j < cols; ++j) {
                if (m(t, j) == 0)
                    continue;
                Int q = m(t, j) / m(t, t);
                m.col(j) -= q * m.col(t);
                if (m(t, j) != 0) {
                    m.col(j).swap(m.col(t));
                    clean = false;
                }
            }
        }
        ++t;
    }

    for (Eigen::Index i = 0; i < t; ++i)
        factors.push_back(abs(m(i, i)));

    // enforce the divisibility chain d_i | d_{i+1}
    for (std::size_t i = 0; i + 1 < factors.size(); ++i) {
        for (std::size_t j = i + 1; j < factors.size(); ++j) {
            if (factors[j] % factors[i] != 0) {
                Int g = gcd(factors[i], factors[j]);
                factors[j] = factors[i] / g * factors[j];
                factors[i] = g;
            }
        }
    }
    std::sort(factors.begin(), factors.end());
    return factors;
}

VectorXq primitive_vector(const VectorXq& v)
{
    Int lcm_den = 1, gcd_num = 0;
    for (Eigen::Index i = 0; i < v.size(); ++i)
        lcm_den = lcm(lcm_den, Int(denominator(v(i))));
    VectorXq w = v * Rat(lcm_den);
    for (Eigen::Index i = 0; i < w.size(); ++i)
        gcd_num = gcd(gcd_num, Int(numerator(w(i))));
    if (gcd_num != 0)
        w /= Rat(gcd_num);
    return w;
}

VectorXq lex_positive(const VectorXq& v)
{
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        if (v(i) != 0)
            return v(i) > 0 ? v : VectorXq(-v);
    }
    return v;
}

}  // namespace splitkit

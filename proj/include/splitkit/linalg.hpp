/**
 * Exact linear algebra over the rationals: reduced row echelon form, rank,
 * affine solves with nullspace bases, and the Smith normal form of integer
 * matrices.  Everything is dense; the matrices in this library are tiny.
 */

#ifndef SPLITKIT_LINALG_HPP
#define SPLITKIT_LINALG_HPP

#include <optional>
#include <vector>

#include <Eigen/Dense>
#include <boost/multiprecision/eigen.hpp>

#include "splitkit/rational.hpp"

namespace splitkit {

using MatrixXq = Eigen::Matrix<Rat, Eigen::Dynamic, Eigen::Dynamic>;
using VectorXq = Eigen::Matrix<Rat, Eigen::Dynamic, 1>;
using RowVectorXq = Eigen::Matrix<Rat, 1, Eigen::Dynamic>;
using MatrixXz = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;

/** Row rank over the rationals via fraction-free-ish Gaussian elimination. */
Eigen::Index rank(const MatrixXq& m);

/** Basis of the right kernel of m, one vector per column. */
MatrixXq kernel(const MatrixXq& m);

struct AffineSolution {
    VectorXq particular;
    MatrixXq nullspace;  // columns form a basis of ker(m)
};

/**
 * Solve m x = b exactly.  Returns one particular solution together with a
 * nullspace basis, or nothing when the system is inconsistent.
 */
std::optional<AffineSolution> solve_affine(const MatrixXq& m, const VectorXq& b);

/**
 * Invariant factors d1 | d2 | ... of an integer matrix (nonzero ones only,
 * all positive).  The zero matrix yields an empty list.
 */
std::vector<Int> smith_normal_form(MatrixXz m);

/** Scale a rational vector to a primitive integer vector (gcd 1), keeping direction. */
VectorXq primitive_vector(const VectorXq& v);

/** Flip the sign so the first nonzero entry is positive; zero stays zero. */
VectorXq lex_positive(const VectorXq& v);

}  // namespace splitkit

#endif

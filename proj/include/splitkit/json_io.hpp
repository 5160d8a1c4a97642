/**
 * JSON serialization of the library types.  Rationals travel as strings
 * "p/q" (or "p"), matrices as row-major arrays of such strings; key order
 * is alphabetical, so identical inputs always print identically.
 */

#ifndef SPLITKIT_JSON_IO_HPP
#define SPLITKIT_JSON_IO_HPP

#include <json.hpp>

#include "splitkit/complex.hpp"
#include "splitkit/hypersimplex.hpp"
#include "splitkit/matroid.hpp"
#include "splitkit/splits.hpp"

namespace splitkit {

using nlohmann::json;

json rat_to_json(const Rat& r);
Rat rat_from_json(const json& j);

json vector_to_json(const VectorXq& v);
VectorXq vector_from_json(const json& j);

json matrix_to_json(const MatrixXq& m);
MatrixXq matrix_from_json(const json& j);

json polytope_to_json(const VPolytope& p);
VPolytope polytope_from_json(const json& j);  // auto-embeds raw input

json constraint_to_json(const LinConstraint& c);
LinConstraint constraint_from_json(const json& j);

json hpolyhedron_to_json(const HPolyhedron& h);
HPolyhedron hpolyhedron_from_json(const json& j);

json subdivision_to_json(const RegularSubdivision& s);
json tight_span_to_json(const TightSpan& t);

json split_to_json(const Split& s);
Split split_from_json(const json& j);

json decomposition_to_json(const SplitDecomposition& d);

json ab_split_to_json(const ABSplit& s);
ABSplit ab_split_from_json(const json& j, int default_k = 0, int default_n = 0);

json metric_to_json(const FiniteMetric& m);
FiniteMetric metric_from_json(const json& j);

json matroid_to_json(const Matroid& m);
Matroid matroid_from_json(const json& j);

json complex_to_json(const SimplicialComplex& c);
SimplicialComplex complex_from_json(const json& j);

json homology_to_json(const HomologyResult& h);

/** Accepts {"values": [...]} or a bare array; checks the length when expected >= 0. */
Weight weight_from_json(const json& j, Eigen::Index expected);

json tree_to_json(const LabeledTree& t);

}  // namespace splitkit

#endif

/**
 * Vertex-described polytopes under the embedding convention used everywhere
 * in this library: a d-polytope lives in R^(d+1), its affine hull misses the
 * origin, and the all-ones vector lies in the column span of the vertex
 * matrix.  Split hyperplanes are then linear, and affine functions on the
 * polytope are restrictions of linear functionals.
 *
 * The double description method provides facet enumeration, H-to-V
 * conversion and, through the lifted cone, regular subdivisions.
 */

#ifndef SPLITKIT_POLYTOPE_HPP
#define SPLITKIT_POLYTOPE_HPP

#include <utility>
#include <vector>

#include "splitkit/lp.hpp"

namespace splitkit {

/** The linear hyperplane normal . x = 0. */
struct Hyperplane {
    VectorXq normal;
};

/** Equations (=) and inequalities (>=) over a common ambient space. */
struct HPolyhedron {
    Eigen::Index width = 0;
    std::vector<LinConstraint> equations;
    std::vector<LinConstraint> inequalities;
};

class VPolytope {
  public:
    /**
     * Build a polytope from arbitrary points: prepends a coordinate 1 to
     * every point unless the convention already holds, removes duplicate
     * points and non-vertices.  Throws on empty input.
     */
    static VPolytope embed(const MatrixXq& points);

    /** Rows must satisfy the convention and each must be a vertex (checked). */
    static VPolytope from_vertices(const MatrixXq& verts);

    /** No validation; rows must already be the vertex set of their hull. */
    static VPolytope from_vertices_unchecked(MatrixXq verts);

    const MatrixXq& vertex_matrix() const { return verts_; }
    VectorXq vertex(Eigen::Index i) const { return verts_.row(i).transpose(); }
    Eigen::Index n_vertices() const { return verts_.rows(); }
    Eigen::Index ambient_dim() const { return verts_.cols(); }
    int dim() const { return dim_; }
    bool was_embedded() const { return embedded_; }

    /**
     * The d coordinate columns (first lexicographic choice) that parametrize
     * the affine hull; volumes are Lebesgue volumes in this chart.
     */
    const std::vector<int>& chart() const { return chart_; }

  private:
    VPolytope() = default;
    void finish();  // derive dim and chart

    MatrixXq verts_;
    int dim_ = 0;
    bool embedded_ = false;
    std::vector<int> chart_;
};

/** Exactly the 1-faces, via the strict separation LP per vertex pair. */
std::vector<std::pair<int, int>> edges(const VPolytope& p);

struct DualDescription {
    bool feasible = false;
    MatrixXq vertices;   // one row per vertex
    MatrixXq rays;       // one row per extreme ray (primitive)
    MatrixXq lineality;  // basis of the lineality space, if any
};

/** Minimal V-description of an H-polyhedron by the double description method. */
DualDescription dual_description(const HPolyhedron& h);

/** Facets of the polytope as vertex-index sets (via the polar cone). */
std::vector<std::vector<int>> facet_incidences(const VPolytope& p);

struct FaceLattice {
    int dim = 0;
    std::vector<std::vector<std::vector<int>>> faces_by_dim;  // proper faces
    std::vector<long> f_vector;
};

/**
 * All faces from the closure of facet incidences under intersection;
 * the f-vector counts proper nonempty faces by dimension.
 */
FaceLattice face_lattice(const MatrixXq& verts,
                         const std::vector<std::vector<int>>& facets);

/** d-volume in the chart of p (dim-0 polytopes count as volume 1). */
Rat volume(const VPolytope& p);

/** Ambient-coordinate centroid, weighted by chart volume. */
VectorXq centroid(const VPolytope& p);

/** Chart volume of the subpolytope spanned by the given vertices of p. */
Rat volume_of_subpolytope(const VPolytope& p, const std::vector<int>& vertex_set);
VectorXq centroid_of_subpolytope(const VPolytope& p, const std::vector<int>& vertex_set);

/** True iff all the hyperplanes meet in a common relative interior point of p. */
bool relint_meets(const VPolytope& p, const std::vector<Hyperplane>& planes);

/**
 * Pulling triangulation (always pulls the smallest vertex index); cells are
 * returned as (dim+1)-element vertex-index sets.
 */
std::vector<std::vector<int>> pulling_triangulation(const VPolytope& p);

/** Chart volume of a full-dimensional simplex given by vertex indices of p. */
Rat simplex_chart_volume(const VPolytope& p, const std::vector<int>& simplex);

/**
 * Extreme rays and lineality of the cone {y : ineqs . y >= 0, eqs . y = 0},
 * with per-ray tight sets relative to the inequality rows.  This is the
 * engine behind dual_description, facet enumeration and lower hulls.
 */
struct ConeDescription {
    MatrixXq rays;
    MatrixXq lineality;
    std::vector<std::vector<int>> tight;  // inequality rows tight at each ray
};
ConeDescription cone_dual(const MatrixXq& ineqs, const MatrixXq& eqs);

}  // namespace splitkit

#endif

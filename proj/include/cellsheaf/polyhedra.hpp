#pragma once

#include <vector>

#include "cellsheaf/exactlin.hpp"

namespace cellsheaf {

/// Inequalities a.x >= b and equations e.x = c, one per row.
struct HRep {
  Index dim = 0;
  RatMatrix ineq_lhs;
  RatVector ineq_rhs;
  RatMatrix eq_lhs;
  RatVector eq_rhs;
};

/// Generators, one per row. Rays are primitive integer vectors, vertices are
/// exact rational points. An empty polyhedron is the VRep with no generators.
struct VRep {
  Index dim = 0;
  RatMatrix vertices;
  RatMatrix rays;
  RatMatrix lineality;
  bool empty() const {
    return vertices.rows() == 0 && rays.rows() == 0 && lineality.rows() == 0;
  }
};

/// Minimal generator pair of the cone {x : eq.x = 0, ineq.x >= 0}:
/// extreme rays modulo the lineality space, both as rows.
struct ConeDD {
  RatMatrix rays;
  RatMatrix lineality;
};

/// Incremental double description, one constraint at a time, with the exact
/// rank-based adjacency test on the tight constraint sets.
ConeDD cone_dual_description(const RatMatrix& eq, const RatMatrix& ineq, Index dim);

VRep dual_description(const HRep& h);
HRep dual_description(const VRep& v);

/// Facet normals (rows n with n.x >= 0 tight exactly on facets) and span
/// equations of cone(generators) + span(lineality), via the polar cone.
struct ConeHRep {
  RatMatrix facet_normals;
  RatMatrix equations;
};
ConeHRep cone_facets(const RatMatrix& generators, const RatMatrix& lineality);

/// Every face of cone(generators) + span(lineality) as the sorted subset of
/// generator indices lying on it. Includes the cone itself and the minimal
/// face (the empty subset). Non-extreme generators are kept in the incidence.
std::vector<std::vector<int>> cone_faces(const RatMatrix& generators,
                                         const RatMatrix& lineality);

/// Scales to an integer vector with content one; direction is preserved.
RatVector primitive(const RatVector& v);

}  // namespace cellsheaf

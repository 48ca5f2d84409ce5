#pragma once

#include <iosfwd>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "orient/errors.hpp"

namespace orient::skel {

// A face is a sorted tuple of vertex indices.
using Face = std::vector<int>;

// Finite abstract simplicial complex with labelled vertices. Faces are
// derived on demand from the maximal simplices, which are kept pairwise
// non-contained and lexicographically sorted. Vertex indices follow the
// lexicographic order of the labels.
class SimplicialComplex {
public:
    SimplicialComplex() = default;
    // Maximal simplices as label tuples; containment-redundant entries are
    // dropped.
    static SimplicialComplex from_labels(const std::vector<std::vector<std::string>>& simplices);

    const std::vector<std::string>& vertex_labels() const { return labels_; }
    const std::vector<Face>& maximal_simplices() const { return maximal_; }
    int dimension() const { return dimension_; }
    bool pure() const { return pure_; }

    // All nonempty faces, sorted by (dimension, lexicographic order).
    std::vector<Face> all_faces() const;
    std::vector<Face> faces_of_dimension(int d) const;
    long face_count(int d) const;
    mpz_class euler_characteristic() const; // alternating face count

    const std::string& label(int vertex) const { return labels_[std::size_t(vertex)]; }
    std::string face_label(const Face& f, const std::string& sep = "|") const;

    bool operator==(const SimplicialComplex& other) const = default;

private:
    std::vector<std::string> labels_;
    std::vector<Face> maximal_;
    int dimension_ = -1;
    bool pure_ = true;
};

// Line-oriented text format: one maximal simplex per line as space-separated
// vertex labels; '#' starts a comment. Export is deterministic and sorted.
SimplicialComplex read_complex(std::istream& in);
SimplicialComplex parse_complex(const std::string& text);
std::string write_complex(const SimplicialComplex& k);

// Selection of faces inside an owning complex.
struct SubcomplexSelection {
    std::vector<Face> faces; // sorted tuples, sorted list

    bool contains(const Face& f) const;
    long count_of_dimension(int d) const;
    std::set<int> vertex_set() const;
};

// Barycentric subdivision: one vertex per nonempty face, one top cell per
// maximal flag of nested faces; each k-simplex contributes (k+1)! cells.
struct BarycentricSubdivision {
    SimplicialComplex complex;
    // subdivision vertex index -> the original face it is the barycentre of
    std::vector<Face> barycentre_of;

    int face_dimension(int vertex) const {
        return int(barycentre_of[std::size_t(vertex)].size()) - 1;
    }
};

BarycentricSubdivision barycentric_subdivision(const SimplicialComplex& k);

// Faces of dimension <= d. With a boundary selection, the dimension-d faces
// lying wholly inside the boundary are excluded (the relative skeleton).
SubcomplexSelection relative_skeleton(const SimplicialComplex& k, int d,
                                      const std::optional<SubcomplexSelection>& boundary = {});

// The (d-1)-skeleton of the dual complex, realized inside the barycentric
// subdivision: all subdivision simplices whose vertices are barycentres of
// faces of dimension >= n-d+1. Requires a pure complex and 1 <= d <= n.
SubcomplexSelection dual_skeleton(const BarycentricSubdivision& subdivision, int d);

// Embeds a selection of original faces into the subdivision: all subdivision
// simplices whose flags stay inside the selected faces.
SubcomplexSelection embed_in_subdivision(const BarycentricSubdivision& subdivision,
                                         const SubcomplexSelection& selection);

// Number of dual cells of the given dual dimension: one per original face of
// dimension n - dual_dim.
long dual_cell_count(const SimplicialComplex& k, int dual_dim);

// Staircase triangulation of k x [0,1]: each n-simplex yields n+1 top cells;
// shared prism walls match because all diagonals follow the global vertex
// order. Vertex labels gain _0 / _1 suffixes.
SimplicialComplex prism_triangulation(const SimplicialComplex& k);

// The subcomplex of a prism lying in one end, relabelled back to the base
// labels (drops the end suffix).
SimplicialComplex prism_end(const SimplicialComplex& prism, int end);

} // namespace orient::skel

namespace orient::skel::library {

SimplicialComplex triangle();            // one 2-simplex
SimplicialComplex octahedron();          // boundary, 8 triangles
SimplicialComplex icosahedron();         // boundary, 20 triangles
SimplicialComplex boundary_4_simplex();  // S^3 model, 5 tetrahedra
SimplicialComplex torus_18();            // 9-vertex, 18-triangle torus

// name -> complex; throws UnsupportedModelError for unknown names
SimplicialComplex by_name(const std::string& name);
const std::vector<std::string>& names();

} // namespace orient::skel::library

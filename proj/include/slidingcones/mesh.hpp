#pragma once

#include "slidingcones/geom.hpp"

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

namespace slidingcones {

enum class VertexTag : char { Free = 'F', OnGamma = 'G', Pinned = 'P' };

// Triangle mesh in the closed upper half-space. OnGamma vertices sit exactly
// on {z = 0} and may only slide inside that plane; Pinned vertices never move.
struct TaggedMesh {
    std::vector<Vec3> vertices;
    std::vector<VertexTag> tags;
    std::vector<std::array<int, 3>> triangles;

    int vertex_count() const { return static_cast<int>(vertices.size()); }
    int triangle_count() const { return static_cast<int>(triangles.size()); }

    double triangle_area(int t) const;
    Vec3 triangle_normal(int t) const;

    // Gamma weighting rule: every vertex is OnGamma, or Pinned at z = 0, and
    // the triangle is coplanar with {z = 0} within 1e-9.
    bool triangle_on_gamma(int t) const;

    // Throws std::invalid_argument describing the first violated invariant.
    void validate(double min_area = 1e-14) const;
};

// Text format "TMESH nv nt", nv lines "v x y z tag", nt lines "t i j k".
void write_tmesh(std::ostream& os, const TaggedMesh& mesh);
void write_tmesh_file(const std::string& path, const TaggedMesh& mesh);
TaggedMesh read_tmesh(std::istream& is);
TaggedMesh read_tmesh_file(const std::string& path);

// Drops unreferenced vertices and degenerate or duplicate triangles.
TaggedMesh compacted(const TaggedMesh& mesh, double min_area = 1e-14);

} // namespace slidingcones

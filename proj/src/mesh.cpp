#include "slidingcones/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace slidingcones {

double TaggedMesh::triangle_area(int t) const {
    const auto& tri = triangles[static_cast<std::size_t>(t)];
    const Vec3& a = vertices[static_cast<std::size_t>(tri[0])];
    const Vec3& b = vertices[static_cast<std::size_t>(tri[1])];
    const Vec3& c = vertices[static_cast<std::size_t>(tri[2])];
    return 0.5 * norm(cross(b - a, c - a));
}

Vec3 TaggedMesh::triangle_normal(int t) const {
    const auto& tri = triangles[static_cast<std::size_t>(t)];
    const Vec3& a = vertices[static_cast<std::size_t>(tri[0])];
    const Vec3& b = vertices[static_cast<std::size_t>(tri[1])];
    const Vec3& c = vertices[static_cast<std::size_t>(tri[2])];
    return normalized(cross(b - a, c - a));
}

bool TaggedMesh::triangle_on_gamma(int t) const {
    const auto& tri = triangles[static_cast<std::size_t>(t)];
    for (int k = 0; k < 3; ++k) {
        VertexTag tag = tags[static_cast<std::size_t>(tri[k])];
        double z = vertices[static_cast<std::size_t>(tri[k])].z;
        bool eligible = tag == VertexTag::OnGamma ||
                        (tag == VertexTag::Pinned && std::abs(z) <= 1e-9);
        if (!eligible || std::abs(z) > 1e-9) return false;
    }
    return true;
}

void TaggedMesh::validate(double min_area) const {
    if (tags.size() != vertices.size())
        throw std::invalid_argument("mesh: tag count differs from vertex count");
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        const Vec3& v = vertices[i];
        if (!std::isfinite(v.x) || !std::isfinite(v.y) || !std::isfinite(v.z))
            throw std::invalid_argument("mesh: non-finite vertex " + std::to_string(i));
        if (v.z < -1e-12)
            throw std::invalid_argument("mesh: vertex " + std::to_string(i) + " below the half-space");
        if (tags[i] == VertexTag::OnGamma && v.z != 0.0)
            throw std::invalid_argument("mesh: OnGamma vertex " + std::to_string(i) + " off the boundary plane");
    }
    std::set<std::array<int, 3>> seen;
    for (std::size_t t = 0; t < triangles.size(); ++t) {
        auto tri = triangles[t];
        for (int k = 0; k < 3; ++k)
            if (tri[static_cast<std::size_t>(k)] < 0 || tri[static_cast<std::size_t>(k)] >= vertex_count())
                throw std::invalid_argument("mesh: triangle " + std::to_string(t) + " has an invalid index");
        if (tri[0] == tri[1] || tri[1] == tri[2] || tri[0] == tri[2])
            throw std::invalid_argument("mesh: triangle " + std::to_string(t) + " repeats a vertex");
        if (triangle_area(static_cast<int>(t)) <= min_area)
            throw std::invalid_argument("mesh: triangle " + std::to_string(t) + " is degenerate");
        std::sort(tri.begin(), tri.end());
        if (!seen.insert(tri).second)
            throw std::invalid_argument("mesh: duplicate triangle " + std::to_string(t));
    }
}

void write_tmesh(std::ostream& os, const TaggedMesh& mesh) {
    os << "TMESH " << mesh.vertex_count() << ' ' << mesh.triangle_count() << '\n';
    char buf[128];
    for (int i = 0; i < mesh.vertex_count(); ++i) {
        const Vec3& v = mesh.vertices[static_cast<std::size_t>(i)];
        std::snprintf(buf, sizeof(buf), "v %.17g %.17g %.17g %c\n", v.x, v.y, v.z,
                      static_cast<char>(mesh.tags[static_cast<std::size_t>(i)]));
        os << buf;
    }
    for (const auto& t : mesh.triangles) os << "t " << t[0] << ' ' << t[1] << ' ' << t[2] << '\n';
}

void write_tmesh_file(const std::string& path, const TaggedMesh& mesh) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot open for writing: " + path);
    write_tmesh(os, mesh);
    if (!os) throw std::runtime_error("write failed: " + path);
}

TaggedMesh read_tmesh(std::istream& is) {
    std::string magic;
    int nv = 0, nt = 0;
    if (!(is >> magic >> nv >> nt) || magic != "TMESH")
        throw std::runtime_error("tmesh: missing TMESH header");
    if (nv < 0 || nt < 0) throw std::runtime_error("tmesh: negative counts");
    TaggedMesh mesh;
    mesh.vertices.reserve(static_cast<std::size_t>(nv));
    mesh.tags.reserve(static_cast<std::size_t>(nv));
    for (int i = 0; i < nv; ++i) {
        std::string kind;
        Vec3 v;
        char tag;
        if (!(is >> kind >> v.x >> v.y >> v.z >> tag) || kind != "v")
            throw std::runtime_error("tmesh: bad vertex line " + std::to_string(i));
        if (tag != 'F' && tag != 'G' && tag != 'P')
            throw std::runtime_error("tmesh: unknown tag on vertex " + std::to_string(i));
        mesh.vertices.push_back(v);
        mesh.tags.push_back(static_cast<VertexTag>(tag));
    }
    for (int i = 0; i < nt; ++i) {
        std::string kind;
        std::array<int, 3> t{};
        if (!(is >> kind >> t[0] >> t[1] >> t[2]) || kind != "t")
            throw std::runtime_error("tmesh: bad triangle line " + std::to_string(i));
        mesh.triangles.push_back(t);
    }
    return mesh;
}

TaggedMesh read_tmesh_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("cannot open: " + path);
    return read_tmesh(is);
}

TaggedMesh compacted(const TaggedMesh& mesh, double min_area) {
    TaggedMesh out;
    std::vector<int> remap(mesh.vertices.size(), -1);
    std::set<std::array<int, 3>> seen;
    for (std::size_t t = 0; t < mesh.triangles.size(); ++t) {
        auto tri = mesh.triangles[t];
        if (tri[0] == tri[1] || tri[1] == tri[2] || tri[0] == tri[2]) continue;
        if (mesh.triangle_area(static_cast<int>(t)) <= min_area) continue;
        auto key = tri;
        std::sort(key.begin(), key.end());
        if (!seen.insert(key).second) continue;
        std::array<int, 3> mapped{};
        for (int k = 0; k < 3; ++k) {
            int v = tri[static_cast<std::size_t>(k)];
            if (remap[static_cast<std::size_t>(v)] < 0) {
                remap[static_cast<std::size_t>(v)] = out.vertex_count();
                out.vertices.push_back(mesh.vertices[static_cast<std::size_t>(v)]);
                out.tags.push_back(mesh.tags[static_cast<std::size_t>(v)]);
            }
            mapped[static_cast<std::size_t>(k)] = remap[static_cast<std::size_t>(v)];
        }
        out.triangles.push_back(mapped);
    }
    return out;
}

} // namespace slidingcones

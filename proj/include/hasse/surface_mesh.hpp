#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "hasse/complex.hpp"
#include "hasse/meta.hpp"
#include "hasse/simplex_set.hpp"
#include "hasse/types.hpp"

namespace hasse {

struct Vec3 {
    double x = 0, y = 0, z = 0;

    double operator[](std::size_t i) const { return i == 0 ? x : i == 1 ? y : z; }

    Vec3& operator+=(const Vec3& o) {
        x += o.x;
        y += o.y;
        z += o.z;
        return *this;
    }
    friend Vec3 operator+(Vec3 a, const Vec3& b) { return a += b; }
    friend Vec3 operator-(const Vec3& a, const Vec3& b) {
        return {a.x - b.x, a.y - b.y, a.z - b.z};
    }
    friend Vec3 operator*(double s, const Vec3& v) { return {s * v.x, s * v.y, s * v.z}; }
    friend Vec3 operator*(const Vec3& v, double s) { return s * v; }
    friend Vec3 operator/(const Vec3& v, double s) { return {v.x / s, v.y / s, v.z / s}; }
    friend bool operator==(const Vec3&, const Vec3&) = default;
};

/// 3x3 tensor; vertex tangents come out as antisymmetric 2-forms.
struct Mat3 {
    std::array<std::array<double, 3>, 3> m{};

    double& operator()(std::size_t i, std::size_t j) { return m[i][j]; }
    double operator()(std::size_t i, std::size_t j) const { return m[i][j]; }

    Mat3& operator+=(const Mat3& o) {
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) m[i][j] += o.m[i][j];
        return *this;
    }
    friend Mat3 operator+(Mat3 a, const Mat3& b) { return a += b; }
    friend Mat3 operator*(double s, const Mat3& a) {
        Mat3 r;
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) r.m[i][j] = s * a.m[i][j];
        return r;
    }
    friend Mat3 operator/(const Mat3& a, double s) { return (1.0 / s) * a; }

    Mat3 transposed() const {
        Mat3 r;
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) r.m[i][j] = m[j][i];
        return r;
    }

    double max_abs() const {
        double v = 0;
        for (const auto& row : m)
            for (double e : row) v = std::max(v, std::abs(e));
        return v;
    }
};

/// a (x) b, the outer product.
inline Mat3 outer(const Vec3& a, const Vec3& b) {
    Mat3 r;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) r.m[i][j] = a[i] * b[j];
    return r;
}

struct Vertex {
    Vec3 position;
};

/// +1 or -1 once oriented; 0 means unset.
struct Orientable {
    int orientation = 0;
};

/// Schema of an oriented triangle mesh in R^3: positions on vertices,
/// orientation signs on faces and on every boundary relation.
struct SurfaceMeshTraits {
    static constexpr int dimension = 2;
    using NodeTypes = meta::TypeList<void, Vertex, void, Orientable>;
    using RelationTypes = meta::TypeList<Orientable, Orientable, Orientable>;
};

using SurfaceMesh = Complex<SurfaceMeshTraits>;
using MeshVertexHandle = SurfaceMesh::Handle<0>;
using MeshEdgeHandle = SurfaceMesh::Handle<1>;
using MeshFaceHandle = SurfaceMesh::Handle<2>;
using MeshSimplexSet = SimplexSet<SurfaceMeshTraits>;

class NonManifoldError : public std::runtime_error {
public:
    explicit NonManifoldError(SimplexName edge)
        : std::runtime_error("edge " + edge.to_string() + " has more than two face cofaces"),
          edge_(std::move(edge)) {}
    const SimplexName& edge() const { return edge_; }

private:
    SimplexName edge_;
};

class LinkConditionError : public std::runtime_error {
public:
    explicit LinkConditionError(SimplexName edge)
        : std::runtime_error("collapsing edge " + edge.to_string() +
                             " would change the topological type"),
          edge_(std::move(edge)) {}
    const SimplexName& edge() const { return edge_; }

private:
    SimplexName edge_;
};

class NoIncidentFaceError : public std::runtime_error {
public:
    explicit NoIncidentFaceError(SimplexName vertex)
        : std::runtime_error("vertex " + vertex.to_string() + " has no incident face") {}
};

class OffParseError : public std::runtime_error {
public:
    OffParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// Sign of the boundary relation a -> a+{v}: (-1)^i where i is the sorted
/// position v would take within a+{v}. Requires v not in a.
int relation_sign(const SimplexName& a, VertexKey v);

/// Stamps every boundary relation of the mesh with its sign. Depends only
/// on names, so the result is independent of insertion history and the
/// pass is idempotent.
void assign_relation_orientations(SurfaceMesh& mesh);

struct OrientationReport {
    bool orientable = true;
    std::size_t components = 0;
    std::size_t conflicts = 0;
};

/// Spreads face orientations across the face-adjacency graph so that the
/// two cofaces of every interior edge cancel through it. The
/// lexicographically smallest face of each connected component seeds at
/// +1. Conflicting components are reported non-orientable and left as
/// propagation found them. Throws NonManifoldError if any edge has more
/// than two face cofaces. Requires assign_relation_orientations first.
OrientationReport propagate_face_orientations(SurfaceMesh& mesh);

/// Averaged tangent 2-form at a vertex, accumulated over incident faces
/// through the oriented relation signs. Requires orientations assigned and
/// at least one incident face.
Mat3 vertex_tangent(const SurfaceMesh& mesh, MeshVertexHandle v);

/// True when Link(a) ∩ Link(b) equals Link(ab): collapsing the edge then
/// preserves the topological type of a 2-manifold.
bool check_link_condition(const SurfaceMesh& mesh, MeshEdgeHandle edge);

enum class CollapsePolicy { Midpoint, EndpointA, EndpointB };

/// Collapses the edge onto a fresh vertex placed by the policy (endpoint
/// A/B = the smaller/larger key). With the guard on, a failed link
/// condition throws LinkConditionError and leaves the mesh untouched.
/// Orientations are re-derived afterwards.
MeshVertexHandle collapse_edge(SurfaceMesh& mesh, MeshEdgeHandle edge,
                               CollapsePolicy policy = CollapsePolicy::Midpoint,
                               bool guard = true);

/// Reads an ASCII OFF file: vertices become 0-simplices keyed by file
/// index, each triangular face a 3-key simplex. Per-vertex trailing fields
/// and the edge-count field are ignored. Throws OffParseError (with line
/// number) on malformed input, non-triangle faces, or bad indices.
SurfaceMesh load_off(std::istream& in);
SurfaceMesh load_off(const std::string& path);

/// Writes ASCII OFF: vertices in ascending key order (re-indexed 0..V-1),
/// faces in ascending lexicographic name order, coordinates in shortest
/// round-trip form. Output is byte-deterministic for equal meshes.
void write_off(const SurfaceMesh& mesh, std::ostream& out);
void write_off(const SurfaceMesh& mesh, const std::string& path);

} // namespace hasse

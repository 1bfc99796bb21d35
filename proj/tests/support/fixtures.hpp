#pragma once

// Shared fixtures: the small complexes exercised throughout the suite, a
// full-scan structural validator, and random-complex generators paired
// with the naive oracle.

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "hasse/complex.hpp"
#include "hasse/decimate.hpp"
#include "hasse/oracle.hpp"
#include "hasse/simplex_set.hpp"
#include "hasse/surface_mesh.hpp"
#include "hasse/traversal.hpp"

namespace fixtures {

using hasse::Complex;
using hasse::NaiveComplex;
using hasse::SimplexName;
using hasse::SimplexSet;
using hasse::VertexKey;

/// Pure-topology complex for combinatorial tests.
struct VoidTraits3 {
    static constexpr int dimension = 3;
    using NodeTypes = hasse::meta::TypeList<void, void, void, void, void>;
    using RelationTypes = hasse::meta::TypeList<void, void, void, void>;
};
using Complex3 = Complex<VoidTraits3>;

/// int payloads on every level (root included) and every relation.
struct DataTraits2 {
    static constexpr int dimension = 2;
    using NodeTypes = hasse::meta::TypeList<int, int, int, int>;
    using RelationTypes = hasse::meta::TypeList<int, int, int>;
};
using DataComplex = Complex<DataTraits2>;

// Triangle {1,2,3}.
template <class C = Complex3>
C make_tri() {
    C c;
    c.insert_any({1, 2, 3});
    return c;
}

// Solid tetrahedron {1,2,3,4}.
template <class C = Complex3>
C make_tet() {
    C c;
    c.insert_any({1, 2, 3, 4});
    return c;
}

// Tetrahedron boundary: the four triangles of {1,2,3,4}.
template <class C = Complex3>
C make_tetb() {
    C c;
    for (SimplexName f : {SimplexName{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}})
        c.insert_any(f);
    return c;
}

inline const std::vector<SimplexName>& hex_facets() {
    static const std::vector<SimplexName> faces = {
        {0, 1, 3}, {0, 3, 5}, {1, 3, 4}, {3, 4, 5}, {1, 2, 4}, {2, 4, 5}};
    return faces;
}

// Six triangles around the interior edge {3,4}, keys 0..5.
template <class C = Complex3>
C make_hex() {
    C c;
    for (const auto& f : hex_facets()) c.insert_any(f);
    return c;
}

using hasse::MeshEdgeHandle;
using hasse::MeshFaceHandle;
using hasse::MeshVertexHandle;
using hasse::SurfaceMesh;
using hasse::Vec3;
using hasse::Vertex;

inline SurfaceMesh make_tetb_mesh() {
    SurfaceMesh m;
    m.insert<0>(SimplexName{1}, Vertex{{0, 0, 0}});
    m.insert<0>(SimplexName{2}, Vertex{{1, 0, 0}});
    m.insert<0>(SimplexName{3}, Vertex{{0, 1, 0}});
    m.insert<0>(SimplexName{4}, Vertex{{0, 0, 1}});
    for (SimplexName f : {SimplexName{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}})
        m.insert<2>(f);
    return m;
}

inline SurfaceMesh make_hex_mesh() {
    SurfaceMesh m;
    m.insert<0>(SimplexName{0}, Vertex{{-1, 1, 0}});
    m.insert<0>(SimplexName{1}, Vertex{{1, 1, 0}});
    m.insert<0>(SimplexName{2}, Vertex{{2, -1, 0}});
    m.insert<0>(SimplexName{3}, Vertex{{-0.5, 0, 0}});
    m.insert<0>(SimplexName{4}, Vertex{{0.5, 0, 0}});
    m.insert<0>(SimplexName{5}, Vertex{{-2, -1, 0}});
    for (const auto& f : hex_facets()) m.insert<2>(f);
    return m;
}

// Unit right triangle {0,1,2} in the xy-plane.
inline SurfaceMesh make_triangle_mesh() {
    SurfaceMesh m;
    m.insert<0>(SimplexName{0}, Vertex{{0, 0, 0}});
    m.insert<0>(SimplexName{1}, Vertex{{1, 0, 0}});
    m.insert<0>(SimplexName{2}, Vertex{{0, 1, 0}});
    m.insert<2>(SimplexName{0, 1, 2});
    return m;
}

inline const std::vector<SimplexName>& mobius_facets() {
    // Five triangles {i, i+1, i+2} mod 5: a Moebius band (every pair of
    // vertices is an edge; the five {i, i+2} edges form the boundary).
    static const std::vector<SimplexName> faces = {
        {0, 1, 2}, {1, 2, 3}, {2, 3, 4}, {0, 3, 4}, {0, 1, 4}};
    return faces;
}

inline SurfaceMesh make_mobius_mesh() {
    SurfaceMesh m;
    for (VertexKey v = 0; v < 5; ++v)
        m.insert<0>(SimplexName{v}, Vertex{{double(v), double(v % 2), 0}});
    for (const auto& f : mobius_facets()) m.insert<2>(f);
    return m;
}

template <class Traits>
std::set<SimplexName> name_set(const SimplexSet<Traits>& s) {
    std::set<SimplexName> out;
    s.for_each([&](auto h) { out.insert(h.name()); });
    return out;
}

template <class Traits>
std::set<SimplexName> all_names(const Complex<Traits>& c) {
    std::set<SimplexName> out;
    hasse::meta::static_for<0, Traits::dimension>([&](auto lc) {
        for (auto h : c.template level<lc()>()) out.insert(h.name());
    });
    return out;
}

/// Full-scan structural check: closure property, mutual up/down relations,
/// name consistency, relation-count bookkeeping, reachability from the
/// root. Returns an empty string when everything holds.
template <class Traits>
std::string validate(const Complex<Traits>& c) {
    using hasse::meta::static_for;
    constexpr int N = Traits::dimension;
    std::string err;
    auto fail = [&](const std::string& m) {
        if (err.empty()) err = m;
    };

    std::size_t relations = 0;
    static_for<0, N>([&](auto lc) {
        constexpr int L = lc();
        for (auto h : c.template level<L>()) {
            const SimplexName nm = h.name();
            if (nm.dimension() != L) fail("level mismatch at " + nm.to_string());
            relations += nm.size();
            for (VertexKey v : nm) {
                auto face = h.down(v);
                if (!face) {
                    fail("missing boundary relation at " + nm.to_string());
                    continue;
                }
                if (face->name() != nm.without(v))
                    fail("boundary name mismatch at " + nm.to_string());
                auto back = face->up(v);
                if (!back || !(*back == h))
                    fail("up/down asymmetry at " + nm.to_string());
                if (!c.contains(nm.without(v)))
                    fail("closure violated below " + nm.to_string());
            }
            if constexpr (L < N) {
                for (VertexKey v : h.cover()) {
                    auto coface = h.up(v);
                    if (!coface || coface->name() != nm.with(v))
                        fail("cover name mismatch at " + nm.to_string());
                }
            }
        }
    });

    if (relations != c.relation_count()) fail("relation counter drifted");
    if (c.root().cover().size() != c.level_count(0))
        fail("root does not cover every vertex");

    // Everything must be reachable from the root through coboundary maps;
    // the vertex layer is the first hop.
    SimplexSet<Traits> vertices;
    for (auto v : c.template level<0>()) vertices.insert(v);
    if (star(c, vertices).size() != c.simplex_count())
        fail("unreachable simplices exist");

    return err;
}

/// Uniformly random facet list over at most max_vertices keys.
template <class Rng>
std::vector<SimplexName> random_facets(Rng& rng, int max_vertices = 8, int max_dim = 3,
                                       int max_facets = 10) {
    std::uniform_int_distribution<int> nv_dist(1, max_vertices);
    const int nv = nv_dist(rng);
    std::uniform_int_distribution<int> nf_dist(1, max_facets);
    const int nf = nf_dist(rng);
    std::vector<SimplexName> facets;
    for (int i = 0; i < nf; ++i) {
        std::uniform_int_distribution<int> size_dist(1, std::min(max_dim + 1, nv));
        const int size = size_dist(rng);
        std::vector<VertexKey> pool;
        pool.resize(std::size_t(nv));
        std::iota(pool.begin(), pool.end(), VertexKey{0});
        std::shuffle(pool.begin(), pool.end(), rng);
        pool.resize(std::size_t(size));
        facets.emplace_back(std::move(pool));
    }
    return facets;
}

inline Complex3 build_complex(const std::vector<SimplexName>& facets) {
    Complex3 c;
    for (const auto& f : facets) c.insert_any(f);
    return c;
}

inline NaiveComplex build_oracle(const std::vector<SimplexName>& facets) {
    return NaiveComplex(facets);
}

/// Refines an orientable closed mesh in place: picks a random face and
/// splits it into three at its centroid. Preserves closedness and
/// orientability.
template <class Rng>
void random_refine(SurfaceMesh& mesh, Rng& rng, int splits) {
    for (int i = 0; i < splits; ++i) {
        std::vector<MeshFaceHandle> faces;
        for (auto f : mesh.level<2>()) faces.push_back(f);
        std::uniform_int_distribution<std::size_t> pick(0, faces.size() - 1);
        MeshFaceHandle face = faces[pick(rng)];
        const SimplexName nm = face.name();
        Vec3 centroid{};
        for (VertexKey v : nm)
            centroid += mesh.get_simplex<0>(SimplexName{v})->data().position;
        centroid = centroid / 3.0;
        const VertexKey p = mesh.fresh_vertex_key();
        mesh.remove(face);
        mesh.insert<0>(SimplexName{p}, Vertex{centroid});
        mesh.insert<2>(SimplexName{nm[0], nm[1], p});
        mesh.insert<2>(SimplexName{nm[0], nm[2], p});
        mesh.insert<2>(SimplexName{nm[1], nm[2], p});
    }
}

} // namespace fixtures

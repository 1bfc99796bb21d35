#include "hasse/surface_mesh.hpp"

#include <algorithm>
#include <cassert>
#include <charconv>
#include <deque>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <vector>

#include "hasse/decimate.hpp"
#include "hasse/traversal.hpp"

namespace hasse {

int relation_sign(const SimplexName& a, VertexKey v) {
    assert(!a.contains(v));
    auto below = std::lower_bound(a.begin(), a.end(), v) - a.begin();
    return (below % 2 == 0) ? +1 : -1;
}

void assign_relation_orientations(SurfaceMesh& mesh) {
    meta::static_for<0, 2>([&](auto lc) {
        for (auto h : mesh.level<lc()>()) {
            const SimplexName name = h.name();
            for (VertexKey u : name)
                h.relation_down(u).orientation = relation_sign(name.without(u), u);
        }
    });
}

OrientationReport propagate_face_orientations(SurfaceMesh& mesh) {
    for (auto e : mesh.level<1>())
        if (e.cover().size() > 2) throw NonManifoldError(e.name());

    std::map<SimplexName, MeshFaceHandle> faces;
    for (auto f : mesh.level<2>()) {
        f.data().orientation = 0;
        faces.emplace(f.name(), f);
    }

    auto rel_sign = [](int s) {
        if (s == 0) throw std::logic_error("relation orientations unset; assign first");
        return s;
    };

    OrientationReport report;
    for (auto& [seed_name, seed] : faces) {
        if (seed.data().orientation != 0) continue;
        ++report.components;
        seed.data().orientation = +1;
        std::deque<MeshFaceHandle> queue{seed};
        while (!queue.empty()) {
            MeshFaceHandle f = queue.front();
            queue.pop_front();
            const int fo = f.data().orientation;
            for (VertexKey u : f.name()) {
                MeshEdgeHandle e = *f.down(u);
                const int ef = rel_sign(f.relation_down(u).orientation);
                for (VertexKey w : e.cover()) {
                    MeshFaceHandle g = *e.up(w);
                    if (g == f) continue;
                    const int eg = rel_sign(e.relation_up(w).orientation);
                    // ef*fo + eg*go = 0 across the shared edge
                    const int forced = -ef * fo * eg;
                    int& go = g.data().orientation;
                    if (go == 0) {
                        go = forced;
                        queue.push_back(g);
                    } else if (go != forced) {
                        report.orientable = false;
                        ++report.conflicts;
                    }
                }
            }
        }
    }
    return report;
}

namespace {

Vec3 vertex_position(const SurfaceMesh& mesh, VertexKey v) {
    return mesh.get_simplex<0>(SimplexName{v})->data().position;
}

// Recursive accumulation: at each level, sum the oriented edge vectors
// tensored with the contribution of the coface, then average over the
// cover. A face contributes its orientation sign.
Vec3 tangent_at(const SurfaceMesh& mesh, const Vec3& origin, MeshEdgeHandle e) {
    Vec3 acc{};
    const auto cov = e.cover();
    for (VertexKey u : cov) {
        const double rel = e.relation_up(u).orientation;
        const double top = e.up(u)->data().orientation;
        acc += rel * (vertex_position(mesh, u) - origin) * top;
    }
    if (!cov.empty()) acc = acc / double(cov.size());
    return acc;
}

Mat3 tangent_at(const SurfaceMesh& mesh, const Vec3& origin, MeshVertexHandle v) {
    Mat3 acc{};
    const auto cov = v.cover();
    for (VertexKey u : cov) {
        const double rel = v.relation_up(u).orientation;
        acc += rel * outer(vertex_position(mesh, u) - origin, tangent_at(mesh, origin, *v.up(u)));
    }
    if (!cov.empty()) acc = acc / double(cov.size());
    return acc;
}

} // namespace

Mat3 vertex_tangent(const SurfaceMesh& mesh, MeshVertexHandle v) {
    bool has_face = false;
    for (VertexKey u : v.cover())
        if (!v.up(u)->cover().empty()) has_face = true;
    if (!has_face) throw NoIncidentFaceError(v.name());
    return tangent_at(mesh, v.data().position, v);
}

bool check_link_condition(const SurfaceMesh& mesh, MeshEdgeHandle edge) {
    const SimplexName name = edge.name();
    MeshVertexHandle a = *edge.down(name[1]);
    MeshVertexHandle b = *edge.down(name[0]);
    MeshSimplexSet link_a = link(mesh, a);
    MeshSimplexSet link_b = link(mesh, b);
    MeshSimplexSet link_ab = link(mesh, edge);
    return set_equals(set_intersection(link_a, link_b), link_ab);
}

MeshVertexHandle collapse_edge(SurfaceMesh& mesh, MeshEdgeHandle edge, CollapsePolicy policy,
                               bool guard) {
    if (!mesh.is_live(edge)) throw NotFoundError("edge is not live");
    if (guard && !check_link_condition(mesh, edge)) throw LinkConditionError(edge.name());

    const SimplexName name = edge.name();
    const Vec3 pa = edge.down(name[1])->data().position;
    const Vec3 pb = edge.down(name[0])->data().position;
    const Vec3 pos = policy == CollapsePolicy::Midpoint    ? (pa + pb) * 0.5
                     : policy == CollapsePolicy::EndpointA ? pa
                                                           : pb;

    auto remap = [&](const SurfaceMesh&, const SimplexName&, const auto&, auto lc) {
        constexpr int K = decltype(lc)::value;
        if constexpr (K == 0) return Vertex{pos};
        if constexpr (K == 2) return Orientable{}; // re-derived below
    };
    MeshVertexHandle p = decimate(mesh, edge, remap);

    assign_relation_orientations(mesh);
    try {
        propagate_face_orientations(mesh);
    } catch (const NonManifoldError&) {
        // An unguarded collapse can fold more than two faces onto one
        // edge; face orientations then stay unset.
    }
    return p;
}

namespace {

[[noreturn]] void fail(std::size_t line, const std::string& what) {
    throw OffParseError(line, what);
}

// Reads the next content line, skipping blanks and '#' comments.
bool next_line(std::istream& in, std::string& out, std::size_t& line) {
    while (std::getline(in, out)) {
        ++line;
        const auto pos = out.find_first_not_of(" \t\r");
        if (pos == std::string::npos || out[pos] == '#') continue;
        if (auto cr = out.find('\r'); cr != std::string::npos) out.erase(cr);
        return true;
    }
    return false;
}

std::string format_double(double x) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), x);
    assert(ec == std::errc());
    return std::string(buf, end);
}

} // namespace

SurfaceMesh load_off(std::istream& in) {
    std::size_t line = 0;
    std::string text;

    if (!next_line(in, text, line)) fail(line + 1, "missing OFF header");
    {
        std::istringstream hs(text);
        std::string tag, extra;
        if (!(hs >> tag) || tag != "OFF" || (hs >> extra))
            fail(line, "expected OFF header");
    }

    std::size_t n_vertices = 0, n_faces = 0, n_edges = 0;
    if (!next_line(in, text, line)) fail(line + 1, "missing counts line");
    {
        std::istringstream cs(text);
        if (!(cs >> n_vertices >> n_faces >> n_edges))
            fail(line, "counts line must be three integers");
    }

    SurfaceMesh mesh;
    for (std::size_t i = 0; i < n_vertices; ++i) {
        if (!next_line(in, text, line)) fail(line + 1, "unexpected end of file in vertices");
        std::istringstream vs(text);
        double x, y, z;
        if (!(vs >> x >> y >> z)) fail(line, "vertex line must start with three coordinates");
        mesh.insert<0>(SimplexName{VertexKey(i)}, Vertex{{x, y, z}});
    }

    for (std::size_t i = 0; i < n_faces; ++i) {
        if (!next_line(in, text, line)) fail(line + 1, "unexpected end of file in faces");
        std::istringstream fs(text);
        std::size_t arity = 0;
        if (!(fs >> arity)) fail(line, "face line must start with a vertex count");
        if (arity != 3) fail(line, "unsupported face arity " + std::to_string(arity));
        std::vector<VertexKey> keys;
        for (std::size_t k = 0; k < 3; ++k) {
            long long idx = -1;
            if (!(fs >> idx)) fail(line, "face line needs three vertex indices");
            if (idx < 0 || std::size_t(idx) >= n_vertices)
                fail(line, "vertex index " + std::to_string(idx) + " out of range");
            keys.push_back(VertexKey(idx));
        }
        SimplexName face{std::move(keys)};
        if (face.size() != 3) fail(line, "degenerate face with repeated vertices");
        mesh.insert<2>(face);
    }
    return mesh;
}

SurfaceMesh load_off(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return load_off(in);
}

void write_off(const SurfaceMesh& mesh, std::ostream& out) {
    std::vector<std::pair<VertexKey, MeshVertexHandle>> vertices;
    for (auto v : mesh.level<0>()) vertices.emplace_back(v.name()[0], v);
    std::sort(vertices.begin(), vertices.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });

    std::map<VertexKey, std::size_t> index;
    for (std::size_t i = 0; i < vertices.size(); ++i) index[vertices[i].first] = i;

    std::vector<SimplexName> faces;
    for (auto f : mesh.level<2>()) faces.push_back(f.name());
    std::sort(faces.begin(), faces.end());

    out << "OFF\n" << vertices.size() << ' ' << faces.size() << " 0\n";
    for (const auto& [key, v] : vertices) {
        const Vec3& p = v.data().position;
        out << format_double(p.x) << ' ' << format_double(p.y) << ' ' << format_double(p.z)
            << '\n';
    }
    for (const auto& f : faces)
        out << "3 " << index.at(f[0]) << ' ' << index.at(f[1]) << ' ' << index.at(f[2]) << '\n';
}

void write_off(const SurfaceMesh& mesh, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    write_off(mesh, out);
    if (!out) throw std::runtime_error("failed writing " + path);
}

} // namespace hasse

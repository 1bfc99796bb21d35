// Batch command-line tool over the surface-mesh layer: inspect OFF files,
// check link conditions, collapse edges, print vertex tangents.
//
// Exit codes: 0 success/PASS, 1 domain failure (FAIL verdict,
// non-orientable mesh, rejected collapse), 2 usage or parse error.

#include <charconv>
#include <cstdint>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hasse/surface_mesh.hpp"
#include "hasse/traversal.hpp"

namespace {

using namespace hasse;

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;

std::string format_double(double x) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, end);
}

// Members level by level, name-sorted within a level.
std::string format_set(const MeshSimplexSet& set) {
    std::string out;
    meta::static_for<0, 2>([&](auto lc) {
        std::vector<SimplexName> names;
        for (auto h : set.level<lc()>()) names.push_back(h.name());
        std::sort(names.begin(), names.end());
        for (const auto& n : names) {
            if (!out.empty()) out += ' ';
            out += n.to_string();
        }
    });
    return out.empty() ? "(empty)" : out;
}

struct MeshCountLine {
    std::size_t v = 0, e = 0, f = 0;
    long long chi() const { return (long long)v - (long long)e + (long long)f; }
};

MeshCountLine count_mesh(const SurfaceMesh& mesh) {
    auto c = mesh.counts();
    return {c.levels[0], c.levels[1], c.levels[2]};
}

int cmd_info(const std::string& input) {
    SurfaceMesh mesh = load_off(input);
    const auto c = count_mesh(mesh);

    std::vector<SimplexName> bad_edges;
    std::map<std::size_t, std::size_t> histogram;
    for (auto e : mesh.level<1>()) {
        const std::size_t cofaces = e.cover().size();
        ++histogram[cofaces];
        if (cofaces > 2) bad_edges.push_back(e.name());
    }
    std::sort(bad_edges.begin(), bad_edges.end());

    std::string verdict;
    if (!bad_edges.empty()) {
        verdict = "non-manifold";
    } else {
        assign_relation_orientations(mesh);
        verdict = propagate_face_orientations(mesh).orientable ? "yes" : "no";
    }

    std::cout << "V=" << c.v << " E=" << c.e << " F=" << c.f << " χ=" << c.chi()
              << " orientable=" << verdict << '\n';
    std::cout << "edge cofaces:";
    for (const auto& [k, n] : histogram) std::cout << ' ' << k << ':' << n;
    if (histogram.empty()) std::cout << " none";
    std::cout << '\n';
    std::cout << "non-manifold edges:";
    if (bad_edges.empty()) std::cout << " none";
    for (const auto& n : bad_edges) std::cout << ' ' << n.to_string();
    std::cout << '\n';
    return kExitOk;
}

MeshEdgeHandle find_edge(const SurfaceMesh& mesh, VertexKey a, VertexKey b) {
    if (a == b) throw std::invalid_argument("edge endpoints must differ");
    auto h = mesh.get_simplex<1>(SimplexName{a, b});
    if (!h)
        throw NotFoundError("no edge " + SimplexName{a, b}.to_string() + " in the mesh");
    return *h;
}

int cmd_check_link(const std::string& input, VertexKey a, VertexKey b) {
    SurfaceMesh mesh = load_off(input);
    MeshEdgeHandle edge = find_edge(mesh, a, b);
    MeshVertexHandle va = *mesh.get_simplex<0>(SimplexName{a});
    MeshVertexHandle vb = *mesh.get_simplex<0>(SimplexName{b});

    MeshSimplexSet link_a = link(mesh, va);
    MeshSimplexSet link_b = link(mesh, vb);
    MeshSimplexSet link_ab = link(mesh, edge);
    const bool pass = set_equals(set_intersection(link_a, link_b), link_ab);

    std::cout << "link(" << SimplexName{a} << ") = " << format_set(link_a) << '\n';
    std::cout << "link(" << SimplexName{b} << ") = " << format_set(link_b) << '\n';
    std::cout << "link(" << SimplexName{a, b} << ") = " << format_set(link_ab) << '\n';
    std::cout << "link condition: " << (pass ? "PASS" : "FAIL") << '\n';
    return pass ? kExitOk : kExitDomain;
}

int cmd_decimate(const std::string& input, VertexKey a, VertexKey b,
                 const std::string& policy_name, bool guard, const std::string& output) {
    SurfaceMesh mesh = load_off(input);
    MeshEdgeHandle edge = find_edge(mesh, a, b);

    CollapsePolicy policy = CollapsePolicy::Midpoint;
    if (policy_name == "a") policy = CollapsePolicy::EndpointA;
    else if (policy_name == "b") policy = CollapsePolicy::EndpointB;
    else if (policy_name != "midpoint")
        throw std::invalid_argument("unknown policy " + policy_name);

    const auto before = count_mesh(mesh);
    try {
        collapse_edge(mesh, edge, policy, guard);
    } catch (const LinkConditionError& err) {
        std::cerr << "decimate: " << err.what() << '\n';
        return kExitDomain;
    }
    const auto after = count_mesh(mesh);

    write_off(mesh, output);
    std::cout << "before: V=" << before.v << " E=" << before.e << " F=" << before.f << '\n';
    std::cout << "after: V=" << after.v << " E=" << after.e << " F=" << after.f << '\n';
    return kExitOk;
}

int cmd_tangents(const std::string& input) {
    SurfaceMesh mesh = load_off(input);
    assign_relation_orientations(mesh);
    OrientationReport report = propagate_face_orientations(mesh);
    if (!report.orientable) {
        std::cerr << "tangents: mesh is not orientable\n";
        return kExitDomain;
    }

    std::vector<std::pair<VertexKey, MeshVertexHandle>> vertices;
    for (auto v : mesh.level<0>()) vertices.emplace_back(v.name()[0], v);
    std::sort(vertices.begin(), vertices.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });

    for (const auto& [key, v] : vertices) {
        std::cout << key << ' ';
        try {
            const Mat3 t = vertex_tangent(mesh, v);
            std::cout << format_double(t(0, 1)) << ' ' << format_double(t(0, 2)) << ' '
                      << format_double(t(1, 2)) << '\n';
        } catch (const NoIncidentFaceError&) {
            std::cout << "isolated\n";
        }
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"surface mesh inspection and decimation over ASCII OFF files"};
    app.require_subcommand(1);

    std::string input, output;
    std::vector<std::uint64_t> edge;
    std::string policy = "midpoint";
    bool no_guard = false;

    auto* info = app.add_subcommand("info", "counts, Euler characteristic, orientability");
    info->add_option("input", input, "OFF file")->required();

    auto* check = app.add_subcommand("check-link", "link condition for one edge");
    check->add_option("input", input, "OFF file")->required();
    check->add_option("--edge", edge, "edge endpoints (two vertex indices)")
        ->expected(2)
        ->required();

    auto* dec = app.add_subcommand("decimate", "collapse one edge and write the result");
    dec->add_option("input", input, "OFF file")->required();
    dec->add_option("--edge", edge, "edge endpoints (two vertex indices)")
        ->expected(2)
        ->required();
    dec->add_option("--policy", policy, "new vertex placement: midpoint|a|b")
        ->check(CLI::IsMember({"midpoint", "a", "b"}));
    dec->add_flag("--no-guard", no_guard, "skip the link-condition guard");
    dec->add_option("-o,--output", output, "output OFF file")->required();

    auto* tan = app.add_subcommand("tangents", "vertex tangent 2-form components");
    tan->add_option("input", input, "OFF file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e); // prints the message/help
        return e.get_exit_code() == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (app.got_subcommand(info)) return cmd_info(input);
        if (app.got_subcommand(check)) return cmd_check_link(input, edge[0], edge[1]);
        if (app.got_subcommand(dec))
            return cmd_decimate(input, edge[0], edge[1], policy, !no_guard, output);
        if (app.got_subcommand(tan)) return cmd_tangents(input);
    } catch (const OffParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const NotFoundError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const NonManifoldError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitDomain;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

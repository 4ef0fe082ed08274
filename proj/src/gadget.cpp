#include "xfc/gadget.hpp"

#include <algorithm>
#include <set>

#include <json.hpp>

#include "xfc/errors.hpp"

namespace xfc {

GadgetGraph GadgetGraph::build(const Graph& tmpl, int ell) {
    if (ell < 0 || ell % 2 != 0)
        throw Error("gadget parameter l must be an even integer >= 0, got " +
                    std::to_string(ell));
    GadgetGraph gg;
    gg.template_ = tmpl;
    gg.ell_ = ell;

    std::vector<int> vertices = tmpl.vertices();
    std::vector<std::pair<int, int>> edges;
    for (int v : tmpl.vertices()) {
        GadgetRole r;
        r.kind = GadgetRole::Branch;
        r.t_vertex = v;
        gg.roles_[v] = r;
    }

    int next = tmpl.max_label() + 1;
    int per_path = 2 * ell + 2;
    for (auto e : tmpl.edges()) {
        auto [i, j] = e;
        std::vector<int> path(per_path);
        for (int k = 0; k < per_path; ++k) path[k] = next++;
        // chain i - q_1 - ... - q_{2l+2} - j: 2l+3 edges
        int prev = i;
        for (int q : path) {
            edges.emplace_back(prev, q);
            prev = q;
        }
        edges.emplace_back(prev, j);
        for (int k = 1; k <= per_path; ++k) {
            GadgetRole r;
            r.edge = e;
            r.position = k;
            if (k == ell + 1)
                r.kind = GadgetRole::MiddleU;
            else if (k == ell + 2)
                r.kind = GadgetRole::MiddleV;
            else
                r.kind = GadgetRole::Internal;
            gg.roles_[path[k - 1]] = r;
        }
        vertices.insert(vertices.end(), path.begin(), path.end());
        gg.paths_[e] = std::move(path);
    }
    gg.graph_ = Graph::from_edges(std::move(vertices), edges);

    int vt = tmpl.vertex_count(), et = tmpl.edge_count();
    if (gg.graph_.vertex_count() != vt + (2 * ell + 2) * et ||
        gg.graph_.edge_count() != (2 * ell + 3) * et)
        throw IdentityViolation("gadget vertex/edge count mismatch");
    return gg;
}

const std::vector<int>& GadgetGraph::path_vertices(int i, int j) const {
    auto it = paths_.find({std::min(i, j), std::max(i, j)});
    if (it == paths_.end())
        throw Error("no template edge (" + std::to_string(i) + "," + std::to_string(j) + ")");
    return it->second;
}

int GadgetGraph::u_vertex(int i, int j) const { return path_vertices(i, j)[ell_]; }
int GadgetGraph::v_vertex(int i, int j) const { return path_vertices(i, j)[ell_ + 1]; }

void GadgetGraph::check_template_subset(const std::vector<int>& a) const {
    for (int v : a)
        if (!template_.has_vertex(v))
            throw Error("vertex " + std::to_string(v) + " not in the template");
}

Graph GadgetGraph::sub(const std::vector<int>& a) const {
    check_template_subset(a);
    std::set<int> keep(a.begin(), a.end());
    std::vector<int> verts(keep.begin(), keep.end());
    for (auto& [e, path] : paths_)
        if (keep.count(e.first) && keep.count(e.second))
            verts.insert(verts.end(), path.begin(), path.end());
    return graph_.induced(verts);
}

Graph GadgetGraph::small(const std::vector<int>& a) const {
    check_template_subset(a);
    std::set<int> keep(a.begin(), a.end());
    std::vector<int> verts;
    for (auto& [e, path] : paths_)
        if (keep.count(e.first) && keep.count(e.second)) {
            verts.push_back(path[ell_]);      // u_ij
            verts.push_back(path[ell_ + 1]);  // v_ij
        }
    return graph_.induced(verts);
}

std::vector<int> GadgetGraph::extend_stable_set(const std::vector<int>& b) const {
    check_template_subset(b);
    std::set<int> in_b(b.begin(), b.end());
    std::set<int> chosen(in_b.begin(), in_b.end());
    int l = ell_;
    for (auto& [e, path] : paths_) {
        bool i_in = in_b.count(e.first) > 0;
        bool j_in = in_b.count(e.second) > 0;
        // i side: positions 1..l+1; parity fixed by whether i is occupied.
        for (int k = i_in ? 2 : 1; k <= l + 1; k += 2) chosen.insert(path[k - 1]);
        // j side: positions l+2..2l+2, walked by distance from j.
        for (int d = j_in ? 2 : 1; d <= l + 1; d += 2) chosen.insert(path[2 * l + 2 - d]);
        if (!i_in && !j_in) chosen.erase(path[l + 1]);  // both middles picked: drop v
    }
    return std::vector<int>(chosen.begin(), chosen.end());
}

std::string GadgetGraph::to_json() const {
    nlohmann::ordered_json j;
    j["ell"] = ell_;
    j["template"] = nlohmann::json::parse(graph_to_json(template_));
    j["graph"] = nlohmann::json::parse(graph_to_json(graph_));
    auto& roles = j["roles"] = nlohmann::json::array();
    for (auto& [v, r] : roles_) {
        nlohmann::ordered_json o;
        o["vertex"] = v;
        switch (r.kind) {
            case GadgetRole::Branch:
                o["role"] = "branch";
                o["t_vertex"] = r.t_vertex;
                break;
            case GadgetRole::MiddleU:
                o["role"] = "u";
                o["edge"] = {r.edge.first, r.edge.second};
                break;
            case GadgetRole::MiddleV:
                o["role"] = "v";
                o["edge"] = {r.edge.first, r.edge.second};
                break;
            case GadgetRole::Internal:
                o["role"] = "internal";
                o["edge"] = {r.edge.first, r.edge.second};
                o["position"] = r.position;
                break;
        }
        roles.push_back(o);
    }
    return j.dump();
}

}  // namespace xfc

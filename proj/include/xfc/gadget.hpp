#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "xfc/graph.hpp"

namespace xfc {

/// Role of a vertex inside a gadget graph.
struct GadgetRole {
    enum Kind { Branch, MiddleU, MiddleV, Internal };
    Kind kind = Branch;
    int t_vertex = -1;                 // Branch: the template vertex
    std::pair<int, int> edge{-1, -1};  // path vertices: template edge (i < j)
    int position = -1;                 // 1..2l+2 along the path from the i side
};

/// Subdivision gadget: every template edge ij becomes a path with 2l+3
/// edges whose two middle vertices are u_ij and v_ij. l must be even.
/// Template labels are preserved; path vertices get fresh labels starting
/// at max template label + 1, assigned per edge in sorted edge order.
class GadgetGraph {
public:
    static GadgetGraph build(const Graph& tmpl, int ell);

    const Graph& graph() const { return graph_; }
    const Graph& tmpl() const { return template_; }
    int ell() const { return ell_; }

    const std::map<int, GadgetRole>& roles() const { return roles_; }

    int u_vertex(int i, int j) const;
    int v_vertex(int i, int j) const;
    /// Path vertices q_1..q_{2l+2} between i and j, ordered from the i side
    /// (u at position l+1, v at position l+2).
    const std::vector<int>& path_vertices(int i, int j) const;

    /// Induced subgraph on V(T[a]) plus the paths of edges inside a;
    /// equals the gadget of T[a]. a must be a subset of V(T).
    Graph sub(const std::vector<int>& a) const;

    /// Induced subgraph on all u_ij, v_ij with ij an edge of T[a];
    /// a perfect matching with stability number |E(T[a])|.
    Graph small(const std::vector<int>& a) const;

    /// Canonical stable-set extension S(b) of b ⊆ V(T):
    /// S(b) ∩ V(T) = b and |S(b)| = |b| + (l+1)|E(T)| − |E(T[b])|.
    /// Half-paths alternate by parity from the branch vertices; when the
    /// alternation selects both middle vertices, u is kept and v dropped.
    std::vector<int> extend_stable_set(const std::vector<int>& b) const;

    std::string to_json() const;

private:
    void check_template_subset(const std::vector<int>& a) const;

    Graph template_;
    Graph graph_;
    int ell_ = 0;
    std::map<int, GadgetRole> roles_;
    std::map<std::pair<int, int>, std::vector<int>> paths_;
};

}  // namespace xfc

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace xfc {

/// Labeled simple graph. Vertex labels are arbitrary nonnegative integers,
/// not necessarily contiguous, so V(G) ⊆ [n] families are representable.
/// Immutable after construction; all queries are const.
class Graph {
public:
    Graph() = default;

    /// Validates: labels nonnegative and distinct, no self-loops, both edge
    /// endpoints present. Duplicate edges are collapsed.
    static Graph from_edges(std::vector<int> vertices,
                            const std::vector<std::pair<int, int>>& edges);

    static Graph complete(int t);  // K_t on {1..t}
    static Graph cycle(int t);     // C_t on {1..t}
    static Graph path(int t);      // P_t on {1..t}, t vertices
    static Graph edgeless(std::vector<int> vertices);

    int vertex_count() const { return static_cast<int>(labels_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    /// Sorted ascending.
    const std::vector<int>& vertices() const { return labels_; }
    /// Pairs (i, j) with i < j, lexicographically sorted.
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    bool has_vertex(int label) const;
    bool has_edge(int a, int b) const;
    int degree_by_index(int idx) const;

    /// Position of a label in the sorted vertex order; throws if absent.
    int index_of(int label) const;
    int label_of(int idx) const { return labels_[idx]; }

    bool adjacent_by_index(int i, int j) const;
    /// Adjacency row of vertex at position idx, as 64-bit blocks.
    const std::uint64_t* adjacency_row(int idx) const;
    int words_per_row() const { return words_; }

    /// Induced subgraph on the given labels (labels kept; absent ones ignored).
    Graph induced(const std::vector<int>& subset) const;

    int max_label() const;

    bool operator==(const Graph& other) const {
        return labels_ == other.labels_ && edges_ == other.edges_;
    }

private:
    void rebuild_adjacency();

    std::vector<int> labels_;                       // sorted
    std::vector<std::pair<int, int>> edges_;        // normalized, sorted
    std::vector<std::uint64_t> adj_;                // vertex_count x words_ blocks
    int words_ = 0;
};

// --- serialization -------------------------------------------------------

/// JSON object {"n": universe, "vertices": [...], "edges": [[i,j]...]}.
/// When universe is not given, max label is used.
std::string graph_to_json(const Graph& g, std::optional<int> universe = std::nullopt);
Graph graph_from_json(const std::string& text);

/// Plain-text edge list: "# vertices: ..." header then one "i j" per line.
std::string graph_to_edge_list(const Graph& g);
Graph graph_from_edge_list(const std::string& text);

}  // namespace xfc

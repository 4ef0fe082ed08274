#include "xfc/graph.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "xfc/errors.hpp"

namespace xfc {

Graph Graph::from_edges(std::vector<int> vertices,
                        const std::vector<std::pair<int, int>>& edges) {
    Graph g;
    std::sort(vertices.begin(), vertices.end());
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        if (vertices[i] < 0) throw Error("negative vertex label");
        if (i > 0 && vertices[i] == vertices[i - 1])
            throw Error("duplicate vertex label " + std::to_string(vertices[i]));
    }
    g.labels_ = std::move(vertices);
    std::vector<std::pair<int, int>> norm;
    norm.reserve(edges.size());
    for (auto [a, b] : edges) {
        if (a == b) throw Error("self-loop at vertex " + std::to_string(a));
        if (!std::binary_search(g.labels_.begin(), g.labels_.end(), a) ||
            !std::binary_search(g.labels_.begin(), g.labels_.end(), b))
            throw Error("edge endpoint not in vertex set: (" + std::to_string(a) +
                        ", " + std::to_string(b) + ")");
        norm.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(norm.begin(), norm.end());
    norm.erase(std::unique(norm.begin(), norm.end()), norm.end());
    g.edges_ = std::move(norm);
    g.rebuild_adjacency();
    return g;
}

Graph Graph::complete(int t) {
    std::vector<int> v(t);
    for (int i = 0; i < t; ++i) v[i] = i + 1;
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i <= t; ++i)
        for (int j = i + 1; j <= t; ++j) e.emplace_back(i, j);
    return from_edges(std::move(v), e);
}

Graph Graph::cycle(int t) {
    if (t < 3) throw Error("cycle needs at least 3 vertices");
    std::vector<int> v(t);
    for (int i = 0; i < t; ++i) v[i] = i + 1;
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i < t; ++i) e.emplace_back(i, i + 1);
    e.emplace_back(1, t);
    return from_edges(std::move(v), e);
}

Graph Graph::path(int t) {
    if (t < 1) throw Error("path needs at least 1 vertex");
    std::vector<int> v(t);
    for (int i = 0; i < t; ++i) v[i] = i + 1;
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i < t; ++i) e.emplace_back(i, i + 1);
    return from_edges(std::move(v), e);
}

Graph Graph::edgeless(std::vector<int> vertices) {
    return from_edges(std::move(vertices), {});
}

void Graph::rebuild_adjacency() {
    int n = vertex_count();
    words_ = (n + 63) / 64;
    adj_.assign(static_cast<std::size_t>(n) * words_, 0);
    for (auto [a, b] : edges_) {
        int i = index_of(a), j = index_of(b);
        adj_[static_cast<std::size_t>(i) * words_ + j / 64] |= 1ull << (j % 64);
        adj_[static_cast<std::size_t>(j) * words_ + i / 64] |= 1ull << (i % 64);
    }
}

bool Graph::has_vertex(int label) const {
    return std::binary_search(labels_.begin(), labels_.end(), label);
}

bool Graph::has_edge(int a, int b) const {
    if (!has_vertex(a) || !has_vertex(b) || a == b) return false;
    return adjacent_by_index(index_of(a), index_of(b));
}

int Graph::index_of(int label) const {
    auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
    if (it == labels_.end() || *it != label)
        throw Error("vertex " + std::to_string(label) + " not in graph");
    return static_cast<int>(it - labels_.begin());
}

bool Graph::adjacent_by_index(int i, int j) const {
    return (adj_[static_cast<std::size_t>(i) * words_ + j / 64] >> (j % 64)) & 1;
}

const std::uint64_t* Graph::adjacency_row(int idx) const {
    return adj_.data() + static_cast<std::size_t>(idx) * words_;
}

int Graph::degree_by_index(int idx) const {
    int d = 0;
    const std::uint64_t* row = adjacency_row(idx);
    for (int w = 0; w < words_; ++w) d += std::popcount(row[w]);
    return d;
}

Graph Graph::induced(const std::vector<int>& subset) const {
    std::vector<int> keep;
    for (int v : subset)
        if (has_vertex(v)) keep.push_back(v);
    std::sort(keep.begin(), keep.end());
    keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
    std::vector<std::pair<int, int>> e;
    for (std::size_t i = 0; i < keep.size(); ++i)
        for (std::size_t j = i + 1; j < keep.size(); ++j)
            if (has_edge(keep[i], keep[j])) e.emplace_back(keep[i], keep[j]);
    return from_edges(std::move(keep), e);
}

int Graph::max_label() const {
    return labels_.empty() ? 0 : labels_.back();
}

std::string graph_to_json(const Graph& g, std::optional<int> universe) {
    nlohmann::ordered_json j;
    j["n"] = universe.value_or(g.max_label());
    j["vertices"] = g.vertices();
    auto& edges = j["edges"] = nlohmann::json::array();
    for (auto [a, b] : g.edges()) edges.push_back({a, b});
    return j.dump();
}

Graph graph_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const std::exception& e) {
        throw ParseError(std::string("bad graph JSON: ") + e.what());
    }
    if (!j.contains("vertices") || !j.contains("edges"))
        throw ParseError("graph JSON needs 'vertices' and 'edges'");
    std::vector<int> vertices = j["vertices"].get<std::vector<int>>();
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2) throw ParseError("edge must be a pair");
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return Graph::from_edges(std::move(vertices), edges);
}

std::string graph_to_edge_list(const Graph& g) {
    std::ostringstream out;
    out << "# vertices:";
    for (int v : g.vertices()) out << ' ' << v;
    out << '\n';
    for (auto [a, b] : g.edges()) out << a << ' ' << b << '\n';
    return out.str();
}

Graph graph_from_edge_list(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::vector<int> vertices;
    std::vector<std::pair<int, int>> edges;
    bool saw_header = false;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (line[0] == '#') {
            auto colon = line.find(':');
            if (line.find("vertices") != std::string::npos && colon != std::string::npos) {
                std::istringstream vs(line.substr(colon + 1));
                int v;
                while (vs >> v) vertices.push_back(v);
                saw_header = true;
            }
            continue;
        }
        std::istringstream es(line);
        int a, b;
        if (!(es >> a >> b)) throw ParseError("bad edge line: '" + line + "'");
        edges.emplace_back(a, b);
    }
    if (!saw_header) {
        for (auto [a, b] : edges) {
            vertices.push_back(a);
            vertices.push_back(b);
        }
        std::sort(vertices.begin(), vertices.end());
        vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    }
    return Graph::from_edges(std::move(vertices), edges);
}

}  // namespace xfc

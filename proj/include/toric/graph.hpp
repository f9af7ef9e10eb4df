#ifndef TORIC_GRAPH_HPP
#define TORIC_GRAPH_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace toric {

using Vertex = int;
using EdgeId = int;

struct GraphError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct BoundExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Edge {
    Vertex u, v;
    Vertex other(Vertex w) const { return w == u ? v : u; }
    bool touches(Vertex w) const { return w == u || w == v; }
};

/// Finite simple undirected graph. Vertices are 0-based internally and
/// 1-based in all I/O. Edge indices are dense and stable; edge names
/// default to "e1".."em".
class Graph {
public:
    Graph() = default;

    static Graph from_edges(int vertex_count, std::vector<std::pair<Vertex, Vertex>> pairs,
                            std::vector<std::string> names = {}) {
        Graph g;
        g.n_ = vertex_count;
        std::set<std::pair<Vertex, Vertex>> seen;
        for (auto [u, v] : pairs) {
            if (u < 0 || v < 0 || u >= vertex_count || v >= vertex_count)
                throw GraphError("edge endpoint out of range");
            if (u == v)
                throw GraphError("loop rejected: graph must be simple");
            auto key = std::minmax(u, v);
            if (!seen.insert(key).second)
                throw GraphError("duplicate edge rejected: graph must be simple");
            g.edges_.push_back({u, v});
        }
        if (names.empty()) {
            for (std::size_t i = 0; i < g.edges_.size(); ++i)
                names.push_back("e" + std::to_string(i + 1));
        } else if (names.size() != g.edges_.size()) {
            throw GraphError("edge name count does not match edge count");
        }
        g.names_ = std::move(names);
        g.build_adjacency();
        return g;
    }

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const Edge& edge(EdgeId e) const { return edges_.at(e); }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::string& edge_name(EdgeId e) const { return names_.at(e); }
    const std::vector<std::string>& edge_names() const { return names_; }

    /// Incident (neighbor, edge id) pairs of v.
    const std::vector<std::pair<Vertex, EdgeId>>& adjacency(Vertex v) const { return adj_.at(v); }

    int degree(Vertex v) const { return static_cast<int>(adj_.at(v).size()); }

    std::optional<EdgeId> find_edge(Vertex u, Vertex v) const {
        for (auto [w, e] : adj_.at(u))
            if (w == v) return e;
        return std::nullopt;
    }

    bool adjacent(Vertex u, Vertex v) const { return find_edge(u, v).has_value(); }

private:
    void build_adjacency() {
        adj_.assign(n_, {});
        for (EdgeId e = 0; e < edge_count(); ++e) {
            adj_[edges_[e].u].push_back({edges_[e].v, e});
            adj_[edges_[e].v].push_back({edges_[e].u, e});
        }
    }

    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::string> names_;
    std::vector<std::vector<std::pair<Vertex, EdgeId>>> adj_;
};

// ---------------------------------------------------------------------------
// Parsing and serialization

enum class GraphFormat { EdgeList, Dot, Json };

namespace detail {

inline Graph parse_edge_list(const std::string& text) {
    std::vector<std::pair<Vertex, Vertex>> pairs;
    std::vector<std::string> names;
    bool any_name = false;
    int max_v = 0;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string name;
        auto hash = line.find('#');
        if (hash != std::string::npos) {
            name = line.substr(hash + 1);
            // trim
            name.erase(0, name.find_first_not_of(" \t"));
            name.erase(name.find_last_not_of(" \t\r") + 1);
            line = line.substr(0, hash);
        }
        std::istringstream ls(line);
        long u, v;
        if (!(ls >> u)) continue;  // blank line
        if (!(ls >> v))
            throw ParseError("edge-list line " + std::to_string(lineno) + ": expected two vertex ids");
        std::string extra;
        if (ls >> extra)
            throw ParseError("edge-list line " + std::to_string(lineno) + ": trailing token '" + extra + "'");
        if (u < 1 || v < 1)
            throw ParseError("edge-list line " + std::to_string(lineno) + ": vertex ids are 1-based");
        pairs.push_back({static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1)});
        max_v = std::max({max_v, static_cast<int>(u), static_cast<int>(v)});
        names.push_back(name);
        if (!name.empty()) any_name = true;
    }
    if (any_name) {
        for (std::size_t i = 0; i < names.size(); ++i)
            if (names[i].empty()) names[i] = "e" + std::to_string(i + 1);
    } else {
        names.clear();
    }
    try {
        return Graph::from_edges(max_v, std::move(pairs), std::move(names));
    } catch (const GraphError& err) {
        throw ParseError(std::string("edge-list: ") + err.what());
    }
}

inline Graph parse_json_graph(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& err) {
        throw ParseError(std::string("json: ") + err.what());
    }
    if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
        throw ParseError("json: expected object with 'vertices' and 'edges'");
    int n = j.at("vertices").get<int>();
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2)
            throw ParseError("json: each edge must be a [u,v] pair");
        int u = e[0].get<int>(), v = e[1].get<int>();
        if (u < 1 || v < 1 || u > n || v > n)
            throw ParseError("json: vertex ids are 1-based and must be <= vertices");
        pairs.push_back({u - 1, v - 1});
    }
    std::vector<std::string> names;
    if (j.contains("names")) names = j.at("names").get<std::vector<std::string>>();
    try {
        return Graph::from_edges(n, std::move(pairs), std::move(names));
    } catch (const GraphError& err) {
        throw ParseError(std::string("json: ") + err.what());
    }
}

// Minimal undirected DOT reader: numeric node ids, `a -- b;` statements.
inline Graph parse_dot(const std::string& text) {
    auto open = text.find('{');
    auto close = text.rfind('}');
    if (text.find("graph") == std::string::npos || open == std::string::npos || close == std::string::npos)
        throw ParseError("dot: expected 'graph { ... }'");
    std::string body = text.substr(open + 1, close - open - 1);
    for (auto& c : body)
        if (c == ';' || c == '\n') c = ' ';
    std::istringstream in(body);
    std::vector<std::pair<Vertex, Vertex>> pairs;
    int max_v = 0;
    long u;
    while (in >> u) {
        std::string dashes;
        long v;
        if (!(in >> dashes) || dashes != "--" || !(in >> v))
            throw ParseError("dot: expected '<u> -- <v>' statements with numeric ids");
        if (u < 1 || v < 1) throw ParseError("dot: vertex ids are 1-based");
        pairs.push_back({static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1)});
        max_v = std::max({max_v, static_cast<int>(u), static_cast<int>(v)});
    }
    try {
        return Graph::from_edges(max_v, std::move(pairs));
    } catch (const GraphError& err) {
        throw ParseError(std::string("dot: ") + err.what());
    }
}

}  // namespace detail

inline Graph parse_graph(const std::string& text, GraphFormat format) {
    switch (format) {
        case GraphFormat::EdgeList: return detail::parse_edge_list(text);
        case GraphFormat::Json: return detail::parse_json_graph(text);
        case GraphFormat::Dot: return detail::parse_dot(text);
    }
    throw ParseError("unknown graph format");
}

inline nlohmann::json graph_to_json(const Graph& g) {
    nlohmann::json j;
    j["vertices"] = g.vertex_count();
    auto edges = nlohmann::json::array();
    for (const auto& e : g.edges()) edges.push_back({e.u + 1, e.v + 1});
    j["edges"] = edges;
    j["names"] = g.edge_names();
    return j;
}

inline std::string graph_to_edge_list(const Graph& g) {
    std::ostringstream out;
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        out << g.edge(e).u + 1 << ' ' << g.edge(e).v + 1 << "  # " << g.edge_name(e) << '\n';
    return out.str();
}

inline std::string graph_to_dot(const Graph& g) {
    std::ostringstream out;
    out << "graph G {\n";
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        out << "  " << g.edge(e).u + 1 << " -- " << g.edge(e).v + 1
            << " [label=\"" << g.edge_name(e) << "\"];\n";
    out << "}\n";
    return out.str();
}

// ---------------------------------------------------------------------------
// Connectivity

inline std::vector<int> connected_components(const Graph& g) {
    std::vector<int> comp(g.vertex_count(), -1);
    int k = 0;
    for (Vertex s = 0; s < g.vertex_count(); ++s) {
        if (comp[s] != -1) continue;
        std::vector<Vertex> stack{s};
        comp[s] = k;
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            for (auto [w, e] : g.adjacency(v)) {
                (void)e;
                if (comp[w] == -1) {
                    comp[w] = k;
                    stack.push_back(w);
                }
            }
        }
        ++k;
    }
    return comp;
}

inline bool is_connected(const Graph& g) {
    if (g.vertex_count() == 0) return true;
    auto comp = connected_components(g);
    return *std::max_element(comp.begin(), comp.end()) == 0;
}

// ---------------------------------------------------------------------------
// Block / cut vertex decomposition (Hopcroft-Tarjan)

struct BlockDecomposition {
    std::vector<std::vector<EdgeId>> blocks;
    std::vector<Vertex> cut_vertices;
    std::vector<int> block_of_edge;             // edge id -> block index
    std::vector<std::vector<int>> blocks_of_vertex;  // vertex -> block indices

    bool is_cut_vertex(Vertex v) const {
        return std::find(cut_vertices.begin(), cut_vertices.end(), v) != cut_vertices.end();
    }
    bool same_block(Vertex u, Vertex v) const {
        for (int b : blocks_of_vertex[u])
            for (int b2 : blocks_of_vertex[v])
                if (b == b2) return true;
        return false;
    }
};

inline BlockDecomposition blocks_and_cut_vertices(const Graph& g) {
    int n = g.vertex_count(), m = g.edge_count();
    BlockDecomposition out;
    out.block_of_edge.assign(m, -1);
    std::vector<int> disc(n, -1), low(n, 0);
    std::vector<EdgeId> edge_stack;
    int timer = 0;

    // iterative DFS; frame = (vertex, parent edge, next adjacency index)
    struct Frame {
        Vertex v;
        EdgeId parent_edge;
        std::size_t next = 0;
        int children = 0;
    };
    for (Vertex root = 0; root < n; ++root) {
        if (disc[root] != -1) continue;
        std::vector<Frame> stack;
        stack.push_back({root, -1});
        disc[root] = low[root] = timer++;
        while (!stack.empty()) {
            Frame& f = stack.back();
            const auto& adj = g.adjacency(f.v);
            if (f.next < adj.size()) {
                auto [w, e] = adj[f.next++];
                if (e == f.parent_edge) continue;
                if (disc[w] == -1) {
                    edge_stack.push_back(e);
                    disc[w] = low[w] = timer++;
                    stack.push_back({w, e});
                } else if (disc[w] < disc[f.v]) {
                    edge_stack.push_back(e);
                    low[f.v] = std::min(low[f.v], disc[w]);
                }
            } else {
                Frame done = f;
                stack.pop_back();
                if (stack.empty()) continue;
                Frame& parent = stack.back();
                ++parent.children;
                low[parent.v] = std::min(low[parent.v], low[done.v]);
                if (low[done.v] >= disc[parent.v]) {
                    // parent closes a block
                    std::vector<EdgeId> block;
                    while (true) {
                        EdgeId e = edge_stack.back();
                        edge_stack.pop_back();
                        block.push_back(e);
                        if (e == done.parent_edge) break;
                    }
                    for (EdgeId e : block) out.block_of_edge[e] = static_cast<int>(out.blocks.size());
                    out.blocks.push_back(std::move(block));
                }
            }
        }
        // root is a cut vertex iff it has >= 2 DFS children that each closed a block;
        // equivalently it ends up in >= 2 blocks (checked below).
    }
    out.blocks_of_vertex.assign(n, {});
    {
        std::vector<std::set<int>> bs(n);
        for (int b = 0; b < static_cast<int>(out.blocks.size()); ++b)
            for (EdgeId e : out.blocks[b]) {
                bs[g.edge(e).u].insert(b);
                bs[g.edge(e).v].insert(b);
            }
        for (Vertex v = 0; v < n; ++v) {
            out.blocks_of_vertex[v].assign(bs[v].begin(), bs[v].end());
            if (out.blocks_of_vertex[v].size() >= 2) out.cut_vertices.push_back(v);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Simple cycle enumeration

struct Cycle {
    std::vector<Vertex> vertices;  // v0, v1, ..., v_{k-1}; closing edge v_{k-1}v0
    std::vector<EdgeId> edges;     // edges[i] = {vertices[i], vertices[i+1 mod k]}
    int length() const { return static_cast<int>(edges.size()); }
    bool even() const { return length() % 2 == 0; }
};

enum class CycleParity { Even, Odd, Any };

/// Every simple cycle exactly once, up to rotation and reflection. Canonical
/// form: starts at its minimum vertex, second vertex smaller than last.
inline std::vector<Cycle> enumerate_simple_cycles(const Graph& g, CycleParity parity = CycleParity::Any) {
    std::vector<Cycle> out;
    int n = g.vertex_count();
    std::vector<bool> on_path(n, false);
    std::vector<Vertex> path;

    auto emit = [&](EdgeId closing) {
        Cycle c;
        c.vertices = path;
        for (std::size_t i = 0; i + 1 < path.size(); ++i)
            c.edges.push_back(*g.find_edge(path[i], path[i + 1]));
        c.edges.push_back(closing);
        bool ok = (parity == CycleParity::Any) ||
                  (parity == CycleParity::Even && c.even()) ||
                  (parity == CycleParity::Odd && !c.even());
        if (ok) out.push_back(std::move(c));
    };

    // cycles whose minimum vertex is s; reflection killed by path[1] < path.back()
    std::function<void(Vertex, Vertex)> dfs = [&](Vertex s, Vertex v) {
        for (auto [w, e] : g.adjacency(v)) {
            if (w == s && path.size() >= 3 && path[1] < path.back()) {
                emit(e);
            } else if (w > s && !on_path[w]) {
                on_path[w] = true;
                path.push_back(w);
                dfs(s, w);
                path.pop_back();
                on_path[w] = false;
            }
        }
    };
    for (Vertex s = 0; s < n; ++s) {
        path = {s};
        on_path[s] = true;
        dfs(s, s);
        on_path[s] = false;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Canonical labeling

/// Byte string identifying the isomorphism class; equal iff isomorphic.
/// Color refinement seeded by degree, then brute force within color classes.
inline std::string canonical_label(const Graph& g, int max_vertices = 10) {
    int n = g.vertex_count();
    if (n > max_vertices)
        throw BoundExceeded("canonical_label: vertex count " + std::to_string(n) +
                            " exceeds bound " + std::to_string(max_vertices));
    std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
    for (const auto& e : g.edges()) adj[e.u][e.v] = adj[e.v][e.u] = true;

    // refine colors until stable
    std::vector<int> color(n);
    for (Vertex v = 0; v < n; ++v) color[v] = g.degree(v);
    for (int round = 0; round < n; ++round) {
        std::vector<std::pair<int, std::vector<int>>> sig(n);
        for (Vertex v = 0; v < n; ++v) {
            std::vector<int> nb;
            for (Vertex w = 0; w < n; ++w)
                if (adj[v][w]) nb.push_back(color[w]);
            std::sort(nb.begin(), nb.end());
            sig[v] = {color[v], std::move(nb)};
        }
        std::vector<std::pair<int, std::vector<int>>> uniq(sig.begin(), sig.end());
        std::sort(uniq.begin(), uniq.end());
        uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
        std::vector<int> next(n);
        for (Vertex v = 0; v < n; ++v)
            next[v] = static_cast<int>(std::lower_bound(uniq.begin(), uniq.end(), sig[v]) - uniq.begin());
        if (next == color) break;
        color = next;
    }

    // vertices grouped by color; permute within classes, minimize the
    // upper-triangle adjacency bitstring
    std::vector<Vertex> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
        return std::pair(color[a], a) < std::pair(color[b], b);
    });
    std::uint64_t best = ~0ULL;
    auto evaluate = [&](const std::vector<Vertex>& perm) {
        std::uint64_t bits = 0;
        int pos = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j, ++pos)
                if (adj[perm[i]][perm[j]]) bits |= (1ULL << pos);
        best = std::min(best, bits);
    };
    // iterate permutations of `order` that keep color classes contiguous
    std::function<void(int)> go = [&](int i) {
        if (i == n) {
            evaluate(order);
            return;
        }
        int j_end = i;
        while (j_end < n && color[order[j_end]] == color[order[i]]) ++j_end;
        std::vector<Vertex> cls(order.begin() + i, order.begin() + j_end);
        std::sort(cls.begin(), cls.end());
        do {
            std::copy(cls.begin(), cls.end(), order.begin() + i);
            go(j_end);
        } while (std::next_permutation(cls.begin(), cls.end()));
    };
    go(0);

    std::string code;
    code.push_back(static_cast<char>(n));
    for (int i = 0; i < 8; ++i) code.push_back(static_cast<char>((best >> (8 * i)) & 0xff));
    return code;
}

// ---------------------------------------------------------------------------
// Graph surgery

inline Graph permute(const Graph& g, const std::vector<Vertex>& perm) {
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (const auto& e : g.edges()) pairs.push_back({perm[e.u], perm[e.v]});
    return Graph::from_edges(g.vertex_count(), std::move(pairs), g.edge_names());
}

/// Replace edge b = {u,v} with a three-edge path u - x - y - v through two
/// new vertices. The other edges keep their order and names.
inline Graph subdivide_edge(const Graph& g, EdgeId b) {
    if (b < 0 || b >= g.edge_count()) throw GraphError("subdivide_edge: invalid edge index");
    Vertex x = g.vertex_count(), y = g.vertex_count() + 1;
    std::vector<std::pair<Vertex, Vertex>> pairs;
    std::vector<std::string> names;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (e == b) continue;
        pairs.push_back({g.edge(e).u, g.edge(e).v});
        names.push_back(g.edge_name(e));
    }
    const std::string& bn = g.edge_name(b);
    pairs.push_back({g.edge(b).u, x});
    names.push_back(bn + ".a");
    pairs.push_back({x, y});
    names.push_back(bn + ".b");
    pairs.push_back({y, g.edge(b).v});
    names.push_back(bn + ".c");
    return Graph::from_edges(g.vertex_count() + 2, std::move(pairs), std::move(names));
}

/// Subgraph on the given edges; vertex ids and count preserved.
/// Returns the subgraph and the original edge id of each new edge index.
inline std::pair<Graph, std::vector<EdgeId>> edge_subgraph(const Graph& g, const std::vector<EdgeId>& keep) {
    std::vector<std::pair<Vertex, Vertex>> pairs;
    std::vector<std::string> names;
    for (EdgeId e : keep) {
        pairs.push_back({g.edge(e).u, g.edge(e).v});
        names.push_back(g.edge_name(e));
    }
    return {Graph::from_edges(g.vertex_count(), std::move(pairs), std::move(names)), keep};
}

}  // namespace toric

#endif  // TORIC_GRAPH_HPP

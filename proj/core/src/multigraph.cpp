#include "tutte/multigraph.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace tutte {

namespace {

// Union-find over vertex indices, used for component counts.
class Dsu {
  public:
    explicit Dsu(std::size_t n) : parent_(n), size_(n, 1) {
        for (std::size_t i = 0; i < n; ++i) parent_[i] = static_cast<VertexId>(i);
    }

    VertexId find(VertexId x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    bool unite(VertexId a, VertexId b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (size_[a] < size_[b]) std::swap(a, b);
        parent_[b] = a;
        size_[a] += size_[b];
        return true;
    }

  private:
    std::vector<VertexId> parent_;
    std::vector<std::size_t> size_;
};

}  // namespace

EdgeId MultiGraph::add_edge(VertexId u, VertexId v, std::string label) {
    if (u >= n_ || v >= n_) {
        throw Error("add_edge: endpoint out of range (vertex count " + std::to_string(n_) + ")");
    }
    Edge e;
    e.id = next_id_++;
    e.u = u;
    e.v = v;
    e.label = std::move(label);
    edges_.push_back(std::move(e));
    return edges_.back().id;
}

bool MultiGraph::has_edge(EdgeId id) const {
    auto it = std::lower_bound(edges_.begin(), edges_.end(), id,
                               [](const Edge& e, EdgeId key) { return e.id < key; });
    return it != edges_.end() && it->id == id;
}

const Edge& MultiGraph::edge(EdgeId id) const {
    auto it = std::lower_bound(edges_.begin(), edges_.end(), id,
                               [](const Edge& e, EdgeId key) { return e.id < key; });
    if (it == edges_.end() || it->id != id) {
        throw Error("unknown edge id " + std::to_string(id));
    }
    return *it;
}

MultiGraph MultiGraph::delete_edge(EdgeId id) const {
    const Edge& e = edge(id);  // validates
    (void)e;
    MultiGraph g = *this;
    auto it = std::lower_bound(g.edges_.begin(), g.edges_.end(), id,
                               [](const Edge& ed, EdgeId key) { return ed.id < key; });
    g.edges_.erase(it);
    return g;
}

MultiGraph MultiGraph::contract_edge(EdgeId id) const {
    const Edge& e = edge(id);
    if (e.is_loop()) {
        throw Error("contract_edge: edge " + std::to_string(id) + " is a loop");
    }
    const VertexId keep = std::min(e.u, e.v);
    const VertexId drop = std::max(e.u, e.v);

    MultiGraph g(n_ - 1);
    g.next_id_ = next_id_;
    g.edges_.reserve(edges_.size() - 1);
    auto remap = [&](VertexId w) -> VertexId {
        if (w == drop) return keep;
        return w > drop ? w - 1 : w;
    };
    for (const Edge& ed : edges_) {
        if (ed.id == id) continue;
        Edge ne = ed;
        ne.u = remap(ed.u);
        ne.v = remap(ed.v);
        g.edges_.push_back(std::move(ne));
    }
    return g;
}

MultiGraph MultiGraph::strip_loops() const {
    MultiGraph g(n_);
    g.next_id_ = next_id_;
    g.vertex_labels_ = vertex_labels_;
    g.edges_.reserve(edges_.size());
    for (const Edge& ed : edges_) {
        if (!ed.is_loop()) g.edges_.push_back(ed);
    }
    return g;
}

MultiGraph MultiGraph::edge_subgraph(const std::vector<EdgeId>& ids) const {
    std::vector<VertexId> verts;
    verts.reserve(ids.size() * 2);
    for (EdgeId id : ids) {
        const Edge& e = edge(id);
        verts.push_back(e.u);
        verts.push_back(e.v);
    }
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());

    MultiGraph g(verts.size());
    g.next_id_ = next_id_;
    auto remap = [&](VertexId w) -> VertexId {
        return static_cast<VertexId>(
            std::lower_bound(verts.begin(), verts.end(), w) - verts.begin());
    };
    std::vector<EdgeId> sorted_ids = ids;
    std::sort(sorted_ids.begin(), sorted_ids.end());
    for (EdgeId id : sorted_ids) {
        const Edge& e = edge(id);
        Edge ne;
        ne.id = e.id;
        ne.u = remap(e.u);
        ne.v = remap(e.v);
        g.edges_.push_back(std::move(ne));
    }
    return g;
}

std::size_t MultiGraph::components() const {
    Dsu dsu(n_);
    std::size_t merges = 0;
    for (const Edge& e : edges_) {
        if (!e.is_loop() && dsu.unite(e.u, e.v)) ++merges;
    }
    return n_ - merges;
}

bool MultiGraph::connected() const { return components() <= 1; }

GraphStats MultiGraph::stats() const {
    GraphStats s;
    s.vertices = n_;
    s.edges = edges_.size();
    for (const Edge& e : edges_) {
        if (e.is_loop()) ++s.loops;
    }
    s.components = components();
    s.rank = n_ - s.components;
    s.nullity = s.edges - s.rank;

    std::vector<std::uint64_t> pairs;
    pairs.reserve(edges_.size());
    for (const Edge& e : edges_) {
        const std::uint64_t a = std::min(e.u, e.v);
        const std::uint64_t b = std::max(e.u, e.v);
        pairs.push_back((a << 32) | b);
    }
    std::sort(pairs.begin(), pairs.end());
    std::size_t run = 0;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        run = (i > 0 && pairs[i] == pairs[i - 1]) ? run + 1 : 1;
        s.max_multiplicity = std::max(s.max_multiplicity, run);
    }
    return s;
}

void MultiGraph::set_vertex_labels(std::vector<std::string> labels) {
    if (!labels.empty() && labels.size() != n_) {
        throw Error("set_vertex_labels: expected " + std::to_string(n_) + " labels");
    }
    vertex_labels_ = std::move(labels);
}

namespace {

// Frame of the iterative biconnectivity DFS.
struct DfsFrame {
    VertexId vertex;
    EdgeId parent_edge;  // id of the tree edge into `vertex`; sentinel for roots
    std::size_t next_adj; // cursor into the adjacency list
};

constexpr EdgeId kNoParent = static_cast<EdgeId>(-1);

}  // namespace

BlockDecomposition MultiGraph::block_decompose() const {
    BlockDecomposition out;

    // Loops are their own blocks and stay out of the DFS.
    struct AdjEntry {
        VertexId to;
        EdgeId id;
    };
    std::vector<std::vector<AdjEntry>> adj(n_);
    for (const Edge& e : edges_) {
        if (e.is_loop()) {
            Block b;
            b.kind = BlockKind::Loop;
            b.edge_ids = {e.id};
            b.vertices = {e.u};
            out.blocks.push_back(std::move(b));
            ++out.loop_count;
        } else {
            adj[e.u].push_back({e.v, e.id});
            adj[e.v].push_back({e.u, e.id});
        }
    }

    constexpr std::uint32_t kUnvisited = static_cast<std::uint32_t>(-1);
    std::vector<std::uint32_t> disc(n_, kUnvisited);
    std::vector<std::uint32_t> low(n_, 0);
    std::uint32_t timer = 0;

    std::vector<EdgeId> edge_stack;
    std::vector<DfsFrame> frames;

    auto emit_block = [&](EdgeId boundary) {
        Block b;
        while (true) {
            assert(!edge_stack.empty());
            EdgeId eid = edge_stack.back();
            edge_stack.pop_back();
            b.edge_ids.push_back(eid);
            if (eid == boundary) break;
        }
        std::sort(b.edge_ids.begin(), b.edge_ids.end());
        for (EdgeId eid : b.edge_ids) {
            const Edge& e = edge(eid);
            b.vertices.push_back(e.u);
            b.vertices.push_back(e.v);
        }
        std::sort(b.vertices.begin(), b.vertices.end());
        b.vertices.erase(std::unique(b.vertices.begin(), b.vertices.end()), b.vertices.end());

        if (b.edge_ids.size() == 1) {
            b.kind = BlockKind::Bridge;
            ++out.bridge_count;
        } else if (b.edge_ids.size() == b.vertices.size()) {
            // A 2-connected block with |E| == |V| is a single cycle
            // (nullity 1); this covers parallel pairs as 2-cycles.
            b.kind = BlockKind::Cycle;
            ++out.cycle_length_counts[b.edge_ids.size()];
        } else {
            b.kind = BlockKind::Core;
            out.has_core = true;
        }
        out.blocks.push_back(std::move(b));
    };

    for (VertexId root = 0; root < n_; ++root) {
        if (disc[root] != kUnvisited) continue;
        disc[root] = low[root] = timer++;
        frames.push_back({root, kNoParent, 0});

        while (!frames.empty()) {
            DfsFrame& f = frames.back();
            const VertexId u = f.vertex;
            if (f.next_adj < adj[u].size()) {
                const AdjEntry a = adj[u][f.next_adj++];
                if (a.id == f.parent_edge) continue;  // skip only the tree edge itself
                if (disc[a.to] == kUnvisited) {
                    edge_stack.push_back(a.id);
                    disc[a.to] = low[a.to] = timer++;
                    frames.push_back({a.to, a.id, 0});
                } else if (disc[a.to] < disc[u]) {
                    // Back edge to an ancestor (parallel edges included).
                    edge_stack.push_back(a.id);
                    low[u] = std::min(low[u], disc[a.to]);
                }
                // disc[a.to] > disc[u]: already handled from the other side.
            } else {
                // u is done; fold into the parent frame.
                const DfsFrame finished = f;
                frames.pop_back();
                if (!frames.empty()) {
                    DfsFrame& p = frames.back();
                    low[p.vertex] = std::min(low[p.vertex], low[u]);
                    if (low[u] >= disc[p.vertex]) {
                        emit_block(finished.parent_edge);
                    }
                }
            }
        }
        assert(edge_stack.empty());
    }

    std::sort(out.blocks.begin(), out.blocks.end(), [](const Block& a, const Block& b) {
        return a.edge_ids.front() < b.edge_ids.front();
    });
    return out;
}

std::string MultiGraph::canonical_text() const {
    std::vector<std::pair<VertexId, VertexId>> pairs;
    pairs.reserve(edges_.size());
    for (const Edge& e : edges_) {
        pairs.emplace_back(std::min(e.u, e.v), std::max(e.u, e.v));
    }
    std::sort(pairs.begin(), pairs.end());
    std::ostringstream os;
    os << n_ << '\n';
    for (const auto& [a, b] : pairs) os << a << ' ' << b << '\n';
    return os.str();
}

}  // namespace tutte

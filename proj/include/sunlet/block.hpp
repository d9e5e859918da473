#pragma once

#include <array>
#include <optional>
#include <span>
#include <unordered_map>
#include <unordered_set>
#include <variant>
#include <vector>

#include "sunlet/graph_spec.hpp"

namespace sunlet {

// One L8 copy: an ordered 4-cycle plus the pendant attached to each cycle
// position. Edge set: cycle[i]-cycle[i+1 mod 4] and cycle[i]-pendants[i].
struct SunletBlock {
    std::array<Vertex, 4> cycle;
    std::array<Vertex, 4> pendants;

    friend auto operator<=>(const SunletBlock&, const SunletBlock&) = default;
};

inline std::array<Edge, 8> block_edges(const SunletBlock& b) {
    std::array<Vertex, 8> vs;
    for (int i = 0; i < 4; ++i) vs[i] = b.cycle[i];
    for (int i = 0; i < 4; ++i) vs[4 + i] = b.pendants[i];
    for (int i = 0; i < 8; ++i)
        for (int j = i + 1; j < 8; ++j)
            if (vs[i] == vs[j]) throw invalid_block_error("block vertices must be distinct");
    std::array<Edge, 8> out;
    for (int i = 0; i < 4; ++i) out[i] = Edge(b.cycle[i], b.cycle[(i + 1) % 4]);
    for (int i = 0; i < 4; ++i) out[4 + i] = Edge(b.cycle[i], b.pendants[i]);
    return out;
}

enum class BlockViolation { duplicate_vertex, out_of_range_vertex, non_host_edge };

inline const char* to_string(BlockViolation v) {
    switch (v) {
        case BlockViolation::duplicate_vertex: return "duplicate-vertex";
        case BlockViolation::out_of_range_vertex: return "out-of-range-vertex";
        case BlockViolation::non_host_edge: return "non-host-edge";
    }
    return "?";
}

// ok (nullopt) iff the block is a well-formed L8 whose 8 edges all belong to
// the host. Reports the first violation kind found.
inline std::optional<BlockViolation> validate_block(const SunletBlock& b, const GraphSpec& host) {
    std::array<Vertex, 8> vs;
    for (int i = 0; i < 4; ++i) vs[i] = b.cycle[i];
    for (int i = 0; i < 4; ++i) vs[4 + i] = b.pendants[i];
    for (int i = 0; i < 8; ++i)
        for (int j = i + 1; j < 8; ++j)
            if (vs[i] == vs[j]) return BlockViolation::duplicate_vertex;
    for (const Vertex& v : vs)
        if (!host.has_vertex(v)) return BlockViolation::out_of_range_vertex;
    for (const Edge& e : block_edges(b))
        if (!host.has_edge(e)) return BlockViolation::non_host_edge;
    return std::nullopt;
}

enum class NotASunlet { wrong_edge_count, wrong_degree_sequence, cycle_not_c4, pendant_collision };

inline const char* to_string(NotASunlet r) {
    switch (r) {
        case NotASunlet::wrong_edge_count: return "wrong-edge-count";
        case NotASunlet::wrong_degree_sequence: return "wrong-degree-sequence";
        case NotASunlet::cycle_not_c4: return "cycle-not-c4";
        case NotASunlet::pendant_collision: return "pendant-collision";
    }
    return "?";
}

// Puts an L8 block into the canonical labelling used for equality and
// storage: cycle starts at the smallest degree-3 vertex, oriented toward its
// smaller cycle-neighbour; pendants follow their cycle positions.
inline SunletBlock canonical_block(const SunletBlock& b) {
    int start = 0;
    for (int i = 1; i < 4; ++i)
        if (b.cycle[i] < b.cycle[start]) start = i;
    int prev = (start + 3) % 4, next = (start + 1) % 4;
    int step = (b.cycle[next] < b.cycle[prev]) ? 1 : 3;
    SunletBlock out;
    for (int k = 0; k < 4; ++k) {
        int i = (start + step * k) % 4;
        out.cycle[k] = b.cycle[i];
        out.pendants[k] = b.pendants[i];
    }
    return out;
}

// Decides whether 8 edges form a sunlet graph of order eight and recovers the
// canonical block if so. Degree sequence 3,3,3,3,1,1,1,1; the degree-3
// vertices induce a 4-cycle; each degree-1 vertex hangs off its own cycle
// vertex.
inline std::variant<SunletBlock, NotASunlet> recognize_sunlet(std::span<const Edge> edges) {
    if (edges.size() != 8) return NotASunlet::wrong_edge_count;
    std::unordered_set<Edge> eset(edges.begin(), edges.end());
    if (eset.size() != 8) return NotASunlet::wrong_edge_count;

    std::unordered_map<Vertex, std::vector<Vertex>> adj;
    for (const Edge& e : edges) {
        adj[e.a].push_back(e.b);
        adj[e.b].push_back(e.a);
    }
    if (adj.size() != 8) return NotASunlet::wrong_degree_sequence;
    std::vector<Vertex> deg3, deg1;
    for (auto& [v, nbrs] : adj) {
        if (nbrs.size() == 3) deg3.push_back(v);
        else if (nbrs.size() == 1) deg1.push_back(v);
        else return NotASunlet::wrong_degree_sequence;
    }
    if (deg3.size() != 4 || deg1.size() != 4) return NotASunlet::wrong_degree_sequence;

    auto is_deg3 = [&](Vertex v) { return adj[v].size() == 3; };

    // Walk the 4-cycle induced by the degree-3 vertices.
    SunletBlock blk;
    Vertex c0 = *std::min_element(deg3.begin(), deg3.end());
    std::vector<Vertex> cnbrs;
    for (Vertex w : adj[c0])
        if (is_deg3(w)) cnbrs.push_back(w);
    if (cnbrs.size() != 2) return NotASunlet::cycle_not_c4;
    Vertex c1 = std::min(cnbrs[0], cnbrs[1]);
    Vertex c3 = std::max(cnbrs[0], cnbrs[1]);
    Vertex c2{};
    bool found_c2 = false;
    for (Vertex w : adj[c1]) {
        if (w == c0 || !is_deg3(w)) continue;
        if (found_c2) return NotASunlet::cycle_not_c4;
        c2 = w;
        found_c2 = true;
    }
    if (!found_c2 || c2 == c3) return NotASunlet::cycle_not_c4;
    if (!eset.count(Edge(c2, c3))) return NotASunlet::cycle_not_c4;
    blk.cycle = {c0, c1, c2, c3};

    // Each cycle vertex keeps exactly one degree-1 neighbour.
    for (int i = 0; i < 4; ++i) {
        Vertex leaf{};
        int leaves = 0;
        for (Vertex w : adj[blk.cycle[i]])
            if (!is_deg3(w)) {
                leaf = w;
                ++leaves;
            }
        if (leaves != 1) return NotASunlet::pendant_collision;
        blk.pendants[i] = leaf;
    }

    // All 8 input edges must be accounted for.
    try {
        for (const Edge& e : block_edges(blk))
            if (!eset.count(e)) return NotASunlet::cycle_not_c4;
    } catch (const invalid_block_error&) {
        return NotASunlet::pendant_collision;
    }
    return canonical_block(blk);
}

}  // namespace sunlet

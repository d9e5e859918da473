#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>

namespace sunlet {

// Thrown when a host description or an embedding is malformed.
struct spec_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Thrown when a block violates the sunlet invariants (repeated vertex).
struct invalid_block_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A point of the m x n product grid. Plain complete / bipartite hosts use
// col = 0 and let row carry the single index.
struct Vertex {
    std::int32_t row = 0;
    std::int32_t col = 0;

    friend auto operator<=>(const Vertex&, const Vertex&) = default;
};

// Undirected simple edge, stored with a < b in (row, col) order.
struct Edge {
    Vertex a;
    Vertex b;

    Edge() = default;
    Edge(Vertex u, Vertex v) {
        if (u == v) throw spec_error("edge endpoints must differ");
        if (v < u) std::swap(u, v);
        a = u;
        b = v;
    }

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

inline std::string to_string(Vertex v) {
    return std::to_string(v.row) + "," + std::to_string(v.col);
}

inline std::string to_string(const Edge& e) {
    return "(" + to_string(e.a) + ")-(" + to_string(e.b) + ")";
}

}  // namespace sunlet

template <>
struct std::hash<sunlet::Vertex> {
    std::size_t operator()(const sunlet::Vertex& v) const noexcept {
        return (static_cast<std::size_t>(static_cast<std::uint32_t>(v.row)) << 32) ^
               static_cast<std::uint32_t>(v.col);
    }
};

template <>
struct std::hash<sunlet::Edge> {
    std::size_t operator()(const sunlet::Edge& e) const noexcept {
        std::size_t ha = std::hash<sunlet::Vertex>{}(e.a);
        std::size_t hb = std::hash<sunlet::Vertex>{}(e.b);
        return ha * 0x9e3779b97f4a7c15ULL + hb;
    }
};

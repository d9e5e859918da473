#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <set>
#include <sstream>
#include <unordered_map>
#include <variant>
#include <vector>

#include "sunlet/core.hpp"

namespace sunlet {

class GraphSpec;

namespace detail {

struct Complete {
    int order;
};

struct CompleteBipartite {
    int left;
    int right;
};

struct CartesianComplete {
    int rows;
    int cols;
};

struct CompleteMinusClique {
    int order;
    std::vector<int> clique;  // sorted row indices
};

struct Region {
    std::shared_ptr<const GraphSpec> local;
    std::vector<Vertex> map;  // local flat index -> host vertex
    std::unordered_map<Vertex, std::int64_t> inverse;
};

}  // namespace detail

// Symbolic description of a host edge set. All values are immutable after
// construction and cheap to copy (Region shares its local spec).
class GraphSpec {
public:
    static GraphSpec complete(int order) {
        require(order >= 1, "complete order must be >= 1");
        return GraphSpec(detail::Complete{order});
    }

    static GraphSpec bipartite(int left, int right) {
        require(left >= 1 && right >= 1, "bipartite part sizes must be >= 1");
        return GraphSpec(detail::CompleteBipartite{left, right});
    }

    static GraphSpec cartesian(int rows, int cols) {
        require(rows >= 1 && cols >= 1, "cartesian orders must be >= 1");
        return GraphSpec(detail::CartesianComplete{rows, cols});
    }

    static GraphSpec complete_minus_clique(int order, std::vector<int> clique) {
        require(order >= 1, "order must be >= 1");
        std::sort(clique.begin(), clique.end());
        require(std::adjacent_find(clique.begin(), clique.end()) == clique.end(),
                "clique vertices must be distinct");
        require(clique.size() >= 2, "clique must have at least 2 vertices");
        for (int v : clique) require(v >= 0 && v < order, "clique vertex out of range");
        return GraphSpec(detail::CompleteMinusClique{order, std::move(clique)});
    }

    // A sub-region of some host graph: `local` describes the piece in its own
    // coordinates, `map` sends each local vertex to a host vertex.
    static GraphSpec region(GraphSpec local, std::vector<Vertex> map) {
        detail::Region r;
        r.local = std::make_shared<const GraphSpec>(std::move(local));
        require(map.size() == static_cast<std::size_t>(r.local->row_count()) *
                                  static_cast<std::size_t>(r.local->col_count()),
                "region map must cover the local vertex grid");
        r.inverse.reserve(map.size());
        std::int64_t idx = 0;
        for (const Vertex& v : map) {
            if (!r.inverse.emplace(v, idx).second)
                throw spec_error("region embedding must be injective");
            ++idx;
        }
        r.map = std::move(map);
        return GraphSpec(std::move(r));
    }

    bool is_region() const { return std::holds_alternative<detail::Region>(v_); }

    // Bounding grid of the vertex coordinates (1 column for plain graphs).
    int row_count() const {
        return std::visit(
            [](const auto& s) -> int {
                using T = std::decay_t<decltype(s)>;
                if constexpr (std::is_same_v<T, detail::Complete>) return s.order;
                else if constexpr (std::is_same_v<T, detail::CompleteBipartite>)
                    return s.left + s.right;
                else if constexpr (std::is_same_v<T, detail::CartesianComplete>) return s.rows;
                else if constexpr (std::is_same_v<T, detail::CompleteMinusClique>) return s.order;
                else {
                    int r = 0;
                    for (const Vertex& v : s.map) r = std::max(r, v.row + 1);
                    return r;
                }
            },
            v_);
    }

    int col_count() const {
        return std::visit(
            [](const auto& s) -> int {
                using T = std::decay_t<decltype(s)>;
                if constexpr (std::is_same_v<T, detail::CartesianComplete>) return s.cols;
                else if constexpr (std::is_same_v<T, detail::Region>) {
                    int c = 0;
                    for (const Vertex& v : s.map) c = std::max(c, v.col + 1);
                    return c;
                } else
                    return 1;
            },
            v_);
    }

    std::int64_t vertex_count() const {
        return std::visit(
            [](const auto& s) -> std::int64_t {
                using T = std::decay_t<decltype(s)>;
                if constexpr (std::is_same_v<T, detail::Complete>) return s.order;
                else if constexpr (std::is_same_v<T, detail::CompleteBipartite>)
                    return s.left + s.right;
                else if constexpr (std::is_same_v<T, detail::CartesianComplete>)
                    return static_cast<std::int64_t>(s.rows) * s.cols;
                else if constexpr (std::is_same_v<T, detail::CompleteMinusClique>) return s.order;
                else return static_cast<std::int64_t>(s.map.size());
            },
            v_);
    }

    bool has_vertex(Vertex v) const {
        return std::visit(
            [v](const auto& s) -> bool {
                using T = std::decay_t<decltype(s)>;
                if constexpr (std::is_same_v<T, detail::Complete>)
                    return v.col == 0 && v.row >= 0 && v.row < s.order;
                else if constexpr (std::is_same_v<T, detail::CompleteBipartite>)
                    return v.col == 0 && v.row >= 0 && v.row < s.left + s.right;
                else if constexpr (std::is_same_v<T, detail::CartesianComplete>)
                    return v.row >= 0 && v.row < s.rows && v.col >= 0 && v.col < s.cols;
                else if constexpr (std::is_same_v<T, detail::CompleteMinusClique>)
                    return v.col == 0 && v.row >= 0 && v.row < s.order;
                else return s.inverse.count(v) > 0;
            },
            v_);
    }

    bool has_edge(const Edge& e) const {
        return std::visit(
            [&](const auto& s) -> bool {
                using T = std::decay_t<decltype(s)>;
                if constexpr (std::is_same_v<T, detail::Complete>) {
                    return has_vertex(e.a) && has_vertex(e.b);
                } else if constexpr (std::is_same_v<T, detail::CompleteBipartite>) {
                    if (!has_vertex(e.a) || !has_vertex(e.b)) return false;
                    return (e.a.row < s.left) != (e.b.row < s.left);
                } else if constexpr (std::is_same_v<T, detail::CartesianComplete>) {
                    if (!has_vertex(e.a) || !has_vertex(e.b)) return false;
                    return e.a.row == e.b.row || e.a.col == e.b.col;
                } else if constexpr (std::is_same_v<T, detail::CompleteMinusClique>) {
                    if (!has_vertex(e.a) || !has_vertex(e.b)) return false;
                    bool in_a = std::binary_search(s.clique.begin(), s.clique.end(), e.a.row);
                    bool in_b = std::binary_search(s.clique.begin(), s.clique.end(), e.b.row);
                    return !(in_a && in_b);
                } else {
                    auto ia = s.inverse.find(e.a);
                    auto ib = s.inverse.find(e.b);
                    if (ia == s.inverse.end() || ib == s.inverse.end()) return false;
                    return s.local->has_edge(
                        Edge(s.local->vertex_at(ia->second), s.local->vertex_at(ib->second)));
                }
            },
            v_);
    }

    std::int64_t edge_count() const {
        return std::visit(
            [](const auto& s) -> std::int64_t {
                using T = std::decay_t<decltype(s)>;
                if constexpr (std::is_same_v<T, detail::Complete>)
                    return static_cast<std::int64_t>(s.order) * (s.order - 1) / 2;
                else if constexpr (std::is_same_v<T, detail::CompleteBipartite>)
                    return static_cast<std::int64_t>(s.left) * s.right;
                else if constexpr (std::is_same_v<T, detail::CartesianComplete>)
                    return static_cast<std::int64_t>(s.rows) * s.cols * (s.rows + s.cols - 2) / 2;
                else if constexpr (std::is_same_v<T, detail::CompleteMinusClique>) {
                    std::int64_t k = static_cast<std::int64_t>(s.clique.size());
                    return static_cast<std::int64_t>(s.order) * (s.order - 1) / 2 -
                           k * (k - 1) / 2;
                } else
                    return s.local->edge_count();
            },
            v_);
    }

    // The exact edge list, ascending in the canonical (row, col) edge order.
    std::vector<Edge> edge_set() const {
        std::vector<Edge> out;
        out.reserve(static_cast<std::size_t>(edge_count()));
        std::visit(
            [&](const auto& s) {
                using T = std::decay_t<decltype(s)>;
                if constexpr (std::is_same_v<T, detail::Complete>) {
                    for (int i = 0; i < s.order; ++i)
                        for (int j = i + 1; j < s.order; ++j)
                            out.push_back(Edge({i, 0}, {j, 0}));
                } else if constexpr (std::is_same_v<T, detail::CompleteBipartite>) {
                    for (int i = 0; i < s.left; ++i)
                        for (int j = 0; j < s.right; ++j)
                            out.push_back(Edge({i, 0}, {s.left + j, 0}));
                } else if constexpr (std::is_same_v<T, detail::CartesianComplete>) {
                    for (int i = 0; i < s.rows; ++i)
                        for (int j = 0; j < s.cols; ++j) {
                            for (int i2 = i + 1; i2 < s.rows; ++i2)
                                out.push_back(Edge({i, j}, {i2, j}));
                            for (int j2 = j + 1; j2 < s.cols; ++j2)
                                out.push_back(Edge({i, j}, {i, j2}));
                        }
                } else if constexpr (std::is_same_v<T, detail::CompleteMinusClique>) {
                    for (int i = 0; i < s.order; ++i)
                        for (int j = i + 1; j < s.order; ++j) {
                            bool in_i = std::binary_search(s.clique.begin(), s.clique.end(), i);
                            bool in_j = std::binary_search(s.clique.begin(), s.clique.end(), j);
                            if (in_i && in_j) continue;
                            out.push_back(Edge({i, 0}, {j, 0}));
                        }
                } else {
                    for (const Edge& e : s.local->edge_set()) out.push_back(embed_edge(e));
                }
            },
            v_);
        std::sort(out.begin(), out.end());
        return out;
    }

    // Region accessors.
    const GraphSpec& local() const { return *as_region().local; }

    Vertex embed_vertex(Vertex local_v) const {
        const auto& r = as_region();
        if (!r.local->has_vertex(local_v))
            throw spec_error("embed: local vertex outside the region's domain");
        return r.map[static_cast<std::size_t>(local_v.row) * r.local->col_count() + local_v.col];
    }

    Edge embed_edge(const Edge& local_e) const {
        return Edge(embed_vertex(local_e.a), embed_vertex(local_e.b));
    }

    // Flat indexing of the bounding grid; used by Region maps.
    Vertex vertex_at(std::int64_t flat) const {
        int c = col_count();
        return Vertex{static_cast<std::int32_t>(flat / c), static_cast<std::int32_t>(flat % c)};
    }

    template <class T>
    const T* get_if() const {
        return std::get_if<T>(&v_);
    }

    friend bool operator==(const GraphSpec& x, const GraphSpec& y) {
        return to_host_string(x) == to_host_string(y) && x.same_region_shape(y);
    }

    // Host grammar shared by the CLI and the corpus file format.
    // Regions have no serial form; they exist only inside plan trees.
    static std::string to_host_string(const GraphSpec& g) {
        std::ostringstream os;
        std::visit(
            [&](const auto& s) {
                using T = std::decay_t<decltype(s)>;
                if constexpr (std::is_same_v<T, detail::Complete>)
                    os << "complete " << s.order;
                else if constexpr (std::is_same_v<T, detail::CompleteBipartite>)
                    os << "bipartite " << s.left << ' ' << s.right;
                else if constexpr (std::is_same_v<T, detail::CartesianComplete>)
                    os << "cartesian " << s.rows << ' ' << s.cols;
                else if constexpr (std::is_same_v<T, detail::CompleteMinusClique>) {
                    os << "complete-minus-clique " << s.order;
                    for (int v : s.clique) os << ' ' << v;
                } else
                    os << "region";
            },
            g.v_);
        return os.str();
    }

    static GraphSpec parse_host(const std::vector<std::string>& tokens) {
        auto to_int = [](const std::string& t) {
            std::size_t pos = 0;
            int v;
            try {
                v = std::stoi(t, &pos);
            } catch (const std::exception&) {
                throw spec_error("host spec: expected integer, got '" + t + "'");
            }
            if (pos != t.size()) throw spec_error("host spec: expected integer, got '" + t + "'");
            return v;
        };
        if (tokens.empty()) throw spec_error("host spec: empty");
        const std::string& kind = tokens[0];
        if (kind == "complete" && tokens.size() == 2) return complete(to_int(tokens[1]));
        if (kind == "bipartite" && tokens.size() == 3)
            return bipartite(to_int(tokens[1]), to_int(tokens[2]));
        if (kind == "cartesian" && tokens.size() == 3)
            return cartesian(to_int(tokens[1]), to_int(tokens[2]));
        if (kind == "complete-minus-clique" && tokens.size() >= 4) {
            std::vector<int> clique;
            for (std::size_t i = 2; i < tokens.size(); ++i) clique.push_back(to_int(tokens[i]));
            return complete_minus_clique(to_int(tokens[1]), std::move(clique));
        }
        throw spec_error("unrecognized host spec '" + kind + "'");
    }

private:
    using Variant = std::variant<detail::Complete, detail::CompleteBipartite,
                                 detail::CartesianComplete, detail::CompleteMinusClique,
                                 detail::Region>;

    explicit GraphSpec(Variant v) : v_(std::move(v)) {}

    static void require(bool ok, const char* msg) {
        if (!ok) throw spec_error(msg);
    }

    const detail::Region& as_region() const {
        const auto* r = std::get_if<detail::Region>(&v_);
        if (!r) throw spec_error("not a region spec");
        return *r;
    }

    bool same_region_shape(const GraphSpec& other) const {
        const auto* a = std::get_if<detail::Region>(&v_);
        const auto* b = std::get_if<detail::Region>(&other.v_);
        if (!a && !b) return true;
        if (!a || !b) return false;
        return a->map == b->map && *a->local == *b->local;
    }

    Variant v_;
};

}  // namespace sunlet

#pragma once

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <vector>

#include "sunlet/verify.hpp"

namespace sunlet {

struct SearchConfig {
    double time_budget = 60.0;  // seconds, > 0
    std::uint64_t seed = 0;
    enum class Restart { none, luby } restart_policy = Restart::none;
    bool symmetry_breaking = true;
    enum class Mode { find_one, prove_exhaustive } mode = Mode::find_one;
    std::int64_t max_edges = 2000;      // documented ceiling for GraphSpec hosts
    std::uint64_t base_budget = 60000;  // block trials for the first luby attempt
};

struct SearchStats {
    std::uint64_t nodes = 0;
    std::uint64_t blocks_tried = 0;
    std::uint64_t restarts = 0;
    double seconds = 0.0;
};

struct SearchOutcome {
    enum class Kind { found, infeasible_proven, timeout } kind = Kind::timeout;
    std::optional<Decomposition> decomposition;
    SearchStats stats;
};

namespace detail {

// Fixed-capacity vertex bitset; searched hosts stay well under 512 vertices.
struct VertexBits {
    static constexpr int kWords = 8;
    std::array<std::uint64_t, kWords> w{};

    void set(int i) { w[i >> 6] |= 1ULL << (i & 63); }
    void clear(int i) { w[i >> 6] &= ~(1ULL << (i & 63)); }
    bool test(int i) const { return (w[i >> 6] >> (i & 63)) & 1; }

    template <class Fn>  // Fn(int vertex) -> bool keep_going
    bool for_each(Fn&& fn) const {
        for (int wi = 0; wi < kWords; ++wi) {
            std::uint64_t x = w[wi];
            while (x) {
                int b = std::countr_zero(x);
                x &= x - 1;
                if (!fn(wi * 64 + b)) return false;
            }
        }
        return true;
    }

    template <class Fn>
    bool for_each_and(const VertexBits& other, Fn&& fn) const {
        for (int wi = 0; wi < kWords; ++wi) {
            std::uint64_t x = w[wi] & other.w[wi];
            while (x) {
                int b = std::countr_zero(x);
                x &= x - 1;
                if (!fn(wi * 64 + b)) return false;
            }
        }
        return true;
    }
};

inline std::uint64_t luby(std::uint64_t i) {
    // 1 1 2 1 1 2 4 1 1 2 1 1 2 4 8 ...
    for (std::uint64_t k = 1;; ++k) {
        if (i == (1ULL << k) - 1) return 1ULL << (k - 1);
        if (i < (1ULL << k) - 1) return luby(i - (1ULL << (k - 1)) + 1);
    }
}

// Exact-cover engine over an explicit edge list. Branches on the lowest
// uncovered edge and lazily enumerates every L8 block that covers it inside
// the still-uncovered edge set.
class CoverSearch {
public:
    struct RawBlock {
        std::array<int, 4> cyc;
        std::array<int, 4> pen;
    };

    CoverSearch(const std::vector<Edge>& edges, const std::vector<int>& perm_seed_order)
        : host_edges_(edges) {
        // Compact vertex ids in the (possibly permuted) search order.
        std::vector<Vertex> verts;
        verts.reserve(edges.size() * 2);
        for (const Edge& e : edges) {
            verts.push_back(e.a);
            verts.push_back(e.b);
        }
        std::sort(verts.begin(), verts.end());
        verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
        if (verts.size() > 512) throw spec_error("search host exceeds 512 vertices");
        nv_ = static_cast<int>(verts.size());
        vertex_of_.resize(nv_);
        if (!perm_seed_order.empty()) {
            for (int i = 0; i < nv_; ++i) vertex_of_[i] = verts[perm_seed_order[i]];
        } else {
            vertex_of_ = verts;
        }

        std::vector<std::pair<int, int>> idx_edges;
        idx_edges.reserve(edges.size());
        // Map host vertices to compact ids.
        std::vector<std::pair<Vertex, int>> lut;
        lut.reserve(nv_);
        for (int i = 0; i < nv_; ++i) lut.emplace_back(vertex_of_[i], i);
        std::sort(lut.begin(), lut.end());
        auto lookup = [&](const Vertex& v) {
            auto it = std::lower_bound(lut.begin(), lut.end(), std::make_pair(v, -1));
            return it->second;
        };
        for (const Edge& e : edges) {
            int u = lookup(e.a), v = lookup(e.b);
            if (u > v) std::swap(u, v);
            idx_edges.emplace_back(u, v);
        }
        std::sort(idx_edges.begin(), idx_edges.end());
        if (std::adjacent_find(idx_edges.begin(), idx_edges.end()) != idx_edges.end())
            throw spec_error("search edge list contains duplicates");
        ne_ = static_cast<int>(idx_edges.size());
        ends_ = std::move(idx_edges);

        eid_.assign(static_cast<std::size_t>(nv_) * nv_, -1);
        adj_.assign(nv_, VertexBits{});
        for (int id = 0; id < ne_; ++id) {
            auto [u, v] = ends_[id];
            eid_[static_cast<std::size_t>(u) * nv_ + v] = id;
            eid_[static_cast<std::size_t>(v) * nv_ + u] = id;
            adj_[u].set(v);
            adj_[v].set(u);
        }
        avail_.assign((ne_ + 63) / 64, ~0ULL);
        if (ne_ % 64) avail_.back() = (1ULL << (ne_ % 64)) - 1;
    }

    int edge_count() const { return ne_; }

    // Runs one complete DFS attempt. Returns +1 found, 0 exhausted (UNSAT),
    // -1 budget/time abort.
    int run(std::uint64_t block_budget, std::chrono::steady_clock::time_point deadline,
            bool dedup_automorphisms, SearchStats& stats, std::vector<RawBlock>& solution) {
        budget_ = block_budget;
        deadline_ = deadline;
        dedup_ = dedup_automorphisms;
        aborted_ = false;
        chosen_.clear();
        int r = dfs(stats);
        if (r == 1) solution = chosen_;
        return r;
    }

    // Enumerates blocks through `eidx` within the current available set.
    // Fn(const RawBlock&) -> bool keep_going; returns false if stopped early.
    template <class Fn>
    bool blocks_through(int eidx, bool dedup, Fn&& fn) {
        auto [u, v] = ends_[eidx];
        // Role 1: the edge lies on the cycle.
        if (!cycle_role(u, v, fn)) return false;
        if (!dedup && !cycle_role(v, u, fn)) return false;
        // Role 2: the edge is a spoke; either endpoint may be the cycle end.
        if (!spoke_role(u, v, dedup, fn)) return false;
        if (!spoke_role(v, u, dedup, fn)) return false;
        return true;
    }

    Vertex host_vertex(int i) const { return vertex_of_[i]; }

    SunletBlock to_host_block(const RawBlock& rb) const {
        SunletBlock b;
        for (int i = 0; i < 4; ++i) {
            b.cycle[i] = vertex_of_[rb.cyc[i]];
            b.pendants[i] = vertex_of_[rb.pen[i]];
        }
        return canonical_block(b);
    }

    int lowest_available_edge() const {
        for (std::size_t wi = 0; wi < avail_.size(); ++wi)
            if (avail_[wi]) return static_cast<int>(wi * 64 + std::countr_zero(avail_[wi]));
        return -1;
    }

    void cover(const RawBlock& b) { toggle<false>(b); }
    void uncover(const RawBlock& b) { toggle<true>(b); }

private:
    template <class Fn>
    bool cycle_role(int c0, int c1, Fn&& fn) {
        bool keep = adj_[c1].for_each([&](int c2) {
            if (c2 == c0) return true;
            return adj_[c2].for_each_and(adj_[c0], [&](int c3) {
                if (c3 == c1 || c3 == c2) return true;
                return pendants_for({c0, c1, c2, c3}, -1, fn);
            });
        });
        return keep;
    }

    template <class Fn>
    bool spoke_role(int c0, int p0, bool dedup, Fn&& fn) {
        return adj_[c0].for_each([&](int a) {
            if (a == p0) return true;
            return adj_[a].for_each([&](int b) {
                if (b == c0 || b == p0) return true;
                return adj_[b].for_each_and(adj_[c0], [&](int c) {
                    if (c == a || c == p0) return true;
                    if (dedup && a > c) return true;
                    return pendants_for({c0, a, b, c}, p0, fn);
                });
            });
        });
    }

    // Chooses pendants for the fixed cycle; pendant 0 may be pinned (spoke
    // role). Emits via fn; false return aborts the whole enumeration.
    template <class Fn>
    bool pendants_for(std::array<int, 4> cyc, int pinned_p0, Fn&& fn) {
        auto in_cycle = [&](int x) {
            return x == cyc[0] || x == cyc[1] || x == cyc[2] || x == cyc[3];
        };
        // Local state: fn may recurse back into the enumerator.
        std::array<int, 4> pend{};
        RawBlock blk;
        blk.cyc = cyc;
        auto try_p = [&](int pos, auto&& self) -> bool {
            if (pos == 4) {
                blk.pen = pend;
                return fn(static_cast<const RawBlock&>(blk));
            }
            if (pos == 0 && pinned_p0 >= 0) {
                pend[0] = pinned_p0;
                return self(1, self);
            }
            return adj_[cyc[pos]].for_each([&](int p) {
                if (in_cycle(p)) return true;
                for (int q = 0; q < pos; ++q)
                    if (pend[q] == p) return true;
                pend[pos] = p;
                return self(pos + 1, self);
            });
        };
        return try_p(0, try_p);
    }

    template <bool Set>
    void toggle(const RawBlock& b) {
        auto edge_bit = [&](int u, int v) {
            int id = eid_[static_cast<std::size_t>(u) * nv_ + v];
            if constexpr (Set) {
                avail_[id >> 6] |= 1ULL << (id & 63);
                adj_[u].set(v);
                adj_[v].set(u);
            } else {
                avail_[id >> 6] &= ~(1ULL << (id & 63));
                adj_[u].clear(v);
                adj_[v].clear(u);
            }
        };
        for (int i = 0; i < 4; ++i) edge_bit(b.cyc[i], b.cyc[(i + 1) % 4]);
        for (int i = 0; i < 4; ++i) edge_bit(b.cyc[i], b.pen[i]);
    }

    int dfs(SearchStats& stats) {
        ++stats.nodes;
        if ((stats.nodes & 4095) == 0 && std::chrono::steady_clock::now() >= deadline_) {
            timed_out_ = true;
            aborted_ = true;
            return -1;
        }
        int e = lowest_available_edge();
        if (e < 0) return 1;
        bool exhausted = true;
        bool found = false;
        blocks_through(e, dedup_, [&](const RawBlock& b) {
            ++stats.blocks_tried;
            if ((stats.blocks_tried & 1023) == 0 &&
                std::chrono::steady_clock::now() >= deadline_) {
                timed_out_ = true;
                aborted_ = true;
                exhausted = false;
                return false;
            }
            if (stats.blocks_tried >= budget_) {
                aborted_ = true;
                exhausted = false;
                return false;
            }
            cover(b);
            chosen_.push_back(b);
            int r = dfs(stats);
            if (r == 1) {
                found = true;
                return false;
            }
            chosen_.pop_back();
            uncover(b);
            if (r == -1) {
                exhausted = false;
                return false;
            }
            return true;
        });
        if (found) return 1;
        if (aborted_ || !exhausted) return -1;
        return 0;
    }

public:
    bool timed_out() const { return timed_out_; }

private:
    std::vector<Edge> host_edges_;
    int nv_ = 0;
    int ne_ = 0;
    std::vector<Vertex> vertex_of_;
    std::vector<std::pair<int, int>> ends_;
    std::vector<int> eid_;
    std::vector<VertexBits> adj_;
    std::vector<std::uint64_t> avail_;

    std::vector<RawBlock> chosen_;
    std::uint64_t budget_ = 0;
    std::chrono::steady_clock::time_point deadline_;
    bool dedup_ = true;
    bool aborted_ = false;
    bool timed_out_ = false;
};

}  // namespace detail

// Finds an L8-decomposition of the given edge set or proves none exists.
// Blocks returned in host coordinates. The edge list need not come from a
// GraphSpec; repair and corpus assembly search residual edge sets directly.
inline SearchOutcome search_edge_list(const std::vector<Edge>& edges, const SearchConfig& cfg) {
    if (cfg.time_budget <= 0) throw spec_error("search: time budget must be positive");
    SearchOutcome out;
    auto t0 = std::chrono::steady_clock::now();
    auto deadline = t0 + std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                             std::chrono::duration<double>(cfg.time_budget));
    auto finish = [&](SearchOutcome::Kind kind) {
        out.kind = kind;
        out.stats.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        return out;
    };

    if (edges.size() % 8 != 0) return finish(SearchOutcome::Kind::infeasible_proven);
    if (edges.empty()) {
        out.decomposition = Decomposition{GraphSpec::complete(1), {}};
        return finish(SearchOutcome::Kind::found);
    }

    bool prove = cfg.mode == SearchConfig::Mode::prove_exhaustive;
    bool restarts = !prove && cfg.restart_policy == SearchConfig::Restart::luby;
    std::uint64_t attempt = 0;
    while (true) {
        std::vector<int> order;  // empty = natural vertex order
        if (restarts && attempt > 0) {
            std::mt19937_64 rng(cfg.seed * 0x9e3779b97f4a7c15ULL + attempt);
            std::vector<Vertex> verts;
            for (const Edge& e : edges) {
                verts.push_back(e.a);
                verts.push_back(e.b);
            }
            std::sort(verts.begin(), verts.end());
            verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
            order.resize(verts.size());
            std::iota(order.begin(), order.end(), 0);
            std::shuffle(order.begin(), order.end(), rng);
        }
        detail::CoverSearch cs(edges, order);
        std::uint64_t budget =
            restarts ? cfg.base_budget * detail::luby(attempt + 1) : ~0ULL;
        std::vector<detail::CoverSearch::RawBlock> raw;
        int r = cs.run(budget, deadline, cfg.symmetry_breaking, out.stats, raw);
        if (r == 1) {
            Decomposition d{GraphSpec::complete(1), {}};
            d.blocks.reserve(raw.size());
            for (const auto& rb : raw) d.blocks.push_back(cs.to_host_block(rb));
            out.decomposition = std::move(d);
            return finish(SearchOutcome::Kind::found);
        }
        if (r == 0) return finish(SearchOutcome::Kind::infeasible_proven);
        if (cs.timed_out() || !restarts ||
            std::chrono::steady_clock::now() >= deadline)
            return finish(SearchOutcome::Kind::timeout);
        ++attempt;
        ++out.stats.restarts;
    }
}

inline SearchOutcome search(const GraphSpec& host, const SearchConfig& cfg) {
    if (host.edge_count() > cfg.max_edges)
        throw spec_error("search host exceeds the edge ceiling; use the composer");
    SearchOutcome out = search_edge_list(host.edge_set(), cfg);
    if (out.decomposition) out.decomposition->host = host;
    return out;
}

// Every L8 block whose 8 edges lie in `available` and include `edge`, each
// block emitted once (up to the automorphisms of L8), in deterministic order.
inline std::vector<SunletBlock> enumerate_blocks_through(const Edge& edge,
                                                         const std::vector<Edge>& available) {
    detail::CoverSearch cs(available, {});
    std::vector<Edge> sorted = available;
    std::sort(sorted.begin(), sorted.end());
    auto it = std::lower_bound(sorted.begin(), sorted.end(), edge);
    if (it == sorted.end() || *it != edge) throw spec_error("edge not in available set");
    int eidx = static_cast<int>(it - sorted.begin());
    std::vector<SunletBlock> out;
    cs.blocks_through(eidx, true, [&](const detail::CoverSearch::RawBlock& rb) {
        out.push_back(cs.to_host_block(rb));
        return true;
    });
    return out;
}

}  // namespace sunlet

#pragma once

#include <cstddef>
#include <sstream>
#include <unordered_map>

#include "sunlet/block.hpp"

namespace sunlet {

struct Decomposition {
    GraphSpec host;
    std::vector<SunletBlock> blocks;
};

// Exhaustive defect report: every duplicate, missing and foreign edge and
// every malformed block, not just the first.
struct VerificationReport {
    bool valid = false;
    std::vector<std::pair<Edge, std::vector<std::size_t>>> duplicated;  // edge -> block indices
    std::vector<Edge> missing;                                          // host edges never covered
    std::vector<std::pair<Edge, std::size_t>> foreign;                  // non-host edge, block index
    std::vector<std::pair<std::size_t, BlockViolation>> bad_blocks;

    std::string summary() const {
        if (valid) return "valid";
        std::ostringstream os;
        os << "invalid:";
        if (!bad_blocks.empty()) os << " bad-blocks=" << bad_blocks.size();
        if (!duplicated.empty()) os << " duplicated=" << duplicated.size();
        if (!missing.empty()) os << " missing=" << missing.size();
        if (!foreign.empty()) os << " foreign=" << foreign.size();
        return os.str();
    }
};

// Ground-truth oracle: valid iff every block is a well-formed L8 inside the
// host and the blocks' edges partition the host edge set exactly.
inline VerificationReport verify(const Decomposition& d) {
    VerificationReport rep;

    std::unordered_map<Edge, std::vector<std::size_t>> cover;
    cover.reserve(static_cast<std::size_t>(d.host.edge_count()) * 2);
    for (std::size_t bi = 0; bi < d.blocks.size(); ++bi) {
        const SunletBlock& b = d.blocks[bi];
        auto violation = validate_block(b, d.host);
        if (violation && *violation == BlockViolation::duplicate_vertex) {
            rep.bad_blocks.emplace_back(bi, *violation);
            continue;  // edge set is not well defined for this block
        }
        if (violation) rep.bad_blocks.emplace_back(bi, *violation);
        for (const Edge& e : block_edges(b)) {
            if (!d.host.has_edge(e)) {
                rep.foreign.emplace_back(e, bi);
                continue;
            }
            cover[e].push_back(bi);
        }
    }

    for (const Edge& e : d.host.edge_set()) {
        auto it = cover.find(e);
        if (it == cover.end()) rep.missing.push_back(e);
        else if (it->second.size() > 1) rep.duplicated.emplace_back(e, it->second);
    }

    rep.valid = rep.duplicated.empty() && rep.missing.empty() && rep.foreign.empty() &&
                rep.bad_blocks.empty();
    return rep;
}

}  // namespace sunlet

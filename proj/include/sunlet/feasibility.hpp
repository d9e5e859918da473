#pragma once

#include <cstdint>
#include <set>

#include "sunlet/core.hpp"

namespace sunlet {

// Construction route selected by the classifier. `swapped` means the case's
// first residue condition binds n rather than m, so the composer should plan
// the transposed pair.
struct Route {
    int case_id = 0;
    bool swapped = false;
};

struct DivisibilityWitness {
    std::int64_t product = 0;  // mn(m+n-2)
    int residue = 0;           // product mod 16
};

struct FeasibilityVerdict {
    bool feasible = false;
    std::set<int> satisfied_cases;  // after symmetry closure over swapping m,n
    Route chosen_route;
    DivisibilityWitness witness;
};

namespace detail {

// Residue cases of the feasibility characterization evaluated on the ordered
// pair (a, b). Cases 1..8 are the classical list; case 9 is the extra family
// a == 4 (mod 8), b == 2 (mod 4), whose edge count is always divisible by 8
// but which the eight-case list does not reach.
inline bool case_holds(int c, std::int64_t a, std::int64_t b) {
    switch (c) {
        case 1: return a % 4 == 0 && b % 4 == 0;
        case 2: return a % 8 == 0 && b % 2 == 0;
        case 3: return a % 16 == 0;
        case 4: return a % 16 == 1 && b % 16 == 1;
        case 5: return a % 16 == 15 && b % 16 == 3;
        case 6: return a % 16 == 13 && b % 16 == 5;
        case 7: return a % 16 == 11 && b % 16 == 7;
        case 8: return a % 16 == 9 && b % 16 == 9;
        case 9: return a % 8 == 4 && b % 4 == 2;
        default: return false;
    }
}

}  // namespace detail

// Classifies (m, n): feasibility is the divisibility condition
// 16 | mn(m+n-2); the satisfied cases list every residue case matched by
// (m, n) or (n, m). chosen_route is the lowest satisfied case, oriented so
// that the case's first condition binds m.
inline FeasibilityVerdict classify(std::int64_t m, std::int64_t n) {
    if (m < 1 || n < 1) throw spec_error("classify: m, n must be >= 1");
    FeasibilityVerdict v;
    v.witness.product = m * n * (m + n - 2);
    v.witness.residue = static_cast<int>(v.witness.product % 16);
    v.feasible = v.witness.residue == 0;

    for (int c = 1; c <= 9; ++c) {
        bool direct = detail::case_holds(c, m, n);
        bool swapped = detail::case_holds(c, n, m);
        if (direct || swapped) v.satisfied_cases.insert(c);
        if ((direct || swapped) && v.chosen_route.case_id == 0)
            v.chosen_route = Route{c, !direct};
    }
    return v;
}

}  // namespace sunlet

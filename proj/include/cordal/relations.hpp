// The four families of defining relations of the framed invariant and
// their windowed enumeration (parallel, with a serial reference path).
#pragma once

#include <cordal/action.hpp>
#include <cordal/braid.hpp>
#include <cordal/poly.hpp>

#include <vector>

namespace cordal {

// family 1: a_{ij}^{x+y} - c_i   Phi-(a_{i,n+1}^x) * a_{n+1,j}^y
// family 2: a_{ij}^{x+y} - c_j^- a_{i,n+1}^x * Phi-(a_{n+1,j}^y)
// family 3: a_{ij}^{x+y} - c_i   Phi+(a_{i,0}^x)   * a_{0,j}^y
// family 4: a_{ij}^{x+y} - c_j^- a_{i,0}^x * Phi+(a_{0,j}^y)
// with c_i = lambda^{delta_{i,p}} mu^{-f delta_{i,q}} at the marked
// indices (p = q = 1 throughout the CLI).
struct RelationKey {
    int family = 1;  // 1..4
    int i = 1, j = 1;
    int x = 0, y = 0;
    auto operator<=>(const RelationKey&) const = default;
};

Poly relation(SentinelAction& minus_act, SentinelAction& plus_act, int f,
              const RelationKey& key, int marked_p = 1, int marked_q = 1);

struct RelationSet {
    Braid braid;
    int framing = 0;
    int window = 3;
    // deterministic order: (family, i, j, x, y) ascending; zero
    // polynomials are kept so the window coverage is explicit
    std::vector<std::pair<RelationKey, Poly>> items;
};

// All relations with i,j in [1,n]^2 and |x|,|y| <= window. jobs <= 0
// means the OpenMP default; the output order never depends on jobs.
RelationSet windowed_relations(const Braid& b, int framing, int window,
                               int jobs = 0);
// single-threaded reference path, compared against the kernel in tests
RelationSet windowed_relations_serial(const Braid& b, int framing, int window);

}  // namespace cordal

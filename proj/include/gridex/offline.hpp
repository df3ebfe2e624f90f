#pragma once

#include <optional>
#include <vector>

#include "gridex/engine.hpp"
#include "gridex/grid.hpp"

namespace gridex {

struct OptResult {
    Weight cost = 0;
    std::vector<Vertex> witness;  // covering walk, starts at the instance start
};

struct OracleOptions {
    // When set, the covering walk must end at this vertex (Theorem-2 style
    // "ends in (1,n)" analyses). Default: open walk, endpoint free.
    std::optional<Vertex> required_end;
};

// Exact offline optimum: cheapest walk from the start visiting every vertex,
// by uniform-cost search over (visited set, position) layers. Witness is the
// lexicographically smallest optimal walk under the Down,Right,Up,Left order.
// Throws TooLarge (m*n > 24 or state budget exceeded) and Infeasible.
OptResult optimal_cost(const Instance& inst, const OracleOptions& options = {});

// Scalable exact optimum for undirected 2xN ladders via a column-profile
// dynamic program over edge multiplicities (Euler characterization: the
// traversed multiset spans, is connected, and has 0 or 2 odd degrees with the
// start odd in the open case). Throws NotALadder.
Weight ladder_profile_opt(const Instance& inst, const OracleOptions& options = {});

// ladder_profile_opt restricted to weight-1 edges; nullopt when no covering
// walk avoids the k-edges. Used to decide "the optimum uses no k-edge".
std::optional<Weight> ladder_profile_opt_weight1(const Instance& inst);

// Exact optimum for directed 2xN ladders (any n): profile DP over arc
// multiplicities with flow balance. Multiplicity cap certified slack on every
// call (recomputed at cap+1). Throws NotALadder, Infeasible.
Weight directed_ladder_opt(const Instance& inst);

// True if some minimum-cost covering walk uses no k-edge (undirected ladder).
bool optimum_avoids_k(const Instance& inst);

}  // namespace gridex

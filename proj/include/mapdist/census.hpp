#pragma once

#include <map>

#include "mapdist/blossom.hpp"

namespace mapdist {

/// Distance histogram over all N-vertex two-leg trees of a family; distance
/// is the contour-walk maximum.  workers > 1 shards the enumeration.
std::map<int, long long> census(OracleFamily family, int p, int N, int workers = 1);

struct DistanceIdentityReport {
    long long trees = 0;
    long long mismatches = 0;       // contour vs dual-BFS distance
    long long euler_failures = 0;   // V - E + F != 2 after closure
};

/// Closes every tree and compares the contour distance with the dual-graph
/// BFS distance (directed crossings for the bipartite family).
DistanceIdentityReport check_distance_identity(OracleFamily family, int p, int N);

/// The same check over charge-0 one-leg trivalent trees.
DistanceIdentityReport check_distance_identity_one_leg(int N);

/// Number of trees that fail the close -> cut round trip.
long long count_roundtrip_failures(OracleFamily family, int p, int N);

}  // namespace mapdist

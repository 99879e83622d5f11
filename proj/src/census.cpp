#include "mapdist/census.hpp"

#include <future>

#include "mapdist/errors.hpp"
#include "mapdist/halfedge.hpp"

namespace mapdist {

std::map<int, long long> census(OracleFamily family, int p, int N, int workers) {
    if (workers <= 1) {
        std::map<int, long long> hist;
        for_each_tree(family, p, N,
                      [&](const BlossomTree& t) { ++hist[contour_distance(t)]; });
        return hist;
    }
    std::vector<std::future<std::map<int, long long>>> futs;
    futs.reserve(workers);
    for (int w = 0; w < workers; ++w)
        futs.push_back(std::async(std::launch::async, [=] {
            std::map<int, long long> hist;
            long long idx = 0;
            for_each_tree(family, p, N, [&](const BlossomTree& t) {
                if (idx++ % workers == w) ++hist[contour_distance(t)];
            });
            return hist;
        }));
    std::map<int, long long> hist;
    for (auto& f : futs)
        for (const auto& [d, c] : f.get()) hist[d] += c;
    return hist;
}

DistanceIdentityReport check_distance_identity(OracleFamily family, int p, int N) {
    DistanceIdentityReport rep;
    bool directed = family == OracleFamily::BipartiteP;
    for_each_tree(family, p, N, [&](const BlossomTree& t) {
        ++rep.trees;
        HalfEdgeMap m = close_tree(t);
        if (!euler_ok(m)) ++rep.euler_failures;
        if (dual_distance(m, directed) != contour_distance(t)) ++rep.mismatches;
    });
    return rep;
}

DistanceIdentityReport check_distance_identity_one_leg(int N) {
    DistanceIdentityReport rep;
    for_each_s_tree(N, [&](const BlossomTree& t) {
        ++rep.trees;
        HalfEdgeMap m = close_tree(t);
        if (!euler_ok(m)) ++rep.euler_failures;
        if (dual_distance(m, false) != contour_distance(t)) ++rep.mismatches;
    });
    return rep;
}

long long count_roundtrip_failures(OracleFamily family, int p, int N) {
    long long bad = 0;
    for_each_tree(family, p, N, [&](const BlossomTree& t) {
        if (!(cut_map(close_tree(t), family, p) == t)) ++bad;
    });
    return bad;
}

}  // namespace mapdist

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "mapdist/blossom.hpp"
#include "mapdist/census.hpp"
#include "mapdist/errors.hpp"
#include "mapdist/halfedge.hpp"
#include "mapdist/model.hpp"
#include "mapdist/sequence_solver.hpp"

using namespace mapdist;

namespace {

long long icount(OracleFamily f, int p, int N) {
    long long c = 0;
    for_each_tree(f, p, N, [&](const BlossomTree&) { ++c; });
    return c;
}

long long partial_sum(const std::map<int, long long>& hist, int n) {
    long long sum = 0;
    for (const auto& [d, c] : hist)
        if (d <= n) sum += c;
    return sum;
}

}  // namespace

TEST_CASE("tree counts match the closed formulas") {
    long long tetra[] = {1, 3, 18, 135, 1134, 10206};
    for (int N = 0; N <= 5; ++N) {
        CHECK(tree_count(OracleFamily::Tetravalent, 0, N) == Rational(tetra[N]));
        CHECK(icount(OracleFamily::Tetravalent, 0, N) == tetra[N]);
    }
    long long bip3[] = {1, 2, 8, 40, 224};
    for (int N = 0; N <= 4; ++N) {
        CHECK(tree_count(OracleFamily::BipartiteP, 3, N) == Rational(bip3[N]));
        CHECK(icount(OracleFamily::BipartiteP, 3, N) == bip3[N]);
    }
    long long bip4[] = {1, 3, 27, 324};
    for (int N = 0; N <= 3; ++N) {
        CHECK(tree_count(OracleFamily::BipartiteP, 4, N) == Rational(bip4[N]));
        CHECK(icount(OracleFamily::BipartiteP, 4, N) == bip4[N]);
    }
}

TEST_CASE("trivalent enumeration agrees with the series solver") {
    auto model = ModelSpec::trivalent();
    auto binding = CouplingBinding::formal(model.coupling_names());
    auto limit = distance_free_solution(model, 5, binding);
    for (int N = 0; N <= 5; ++N)
        CHECK(Rational(icount(OracleFamily::Trivalent, 0, N)) == limit.at("R").coeff({N}));
    long long s_trees[] = {0, 2, 0, 12, 0};
    for (int N = 1; N <= 4; ++N) {
        long long c = 0;
        for_each_s_tree(N, [&](const BlossomTree&) { ++c; });
        CHECK(c == s_trees[N]);
        CHECK(Rational(c) == limit.at("S").coeff({N}));
    }
}

TEST_CASE("single-vertex contour distances") {
    auto trees = enumerate_trees(OracleFamily::Tetravalent, 0, 1);
    REQUIRE(trees.size() == 3);
    std::map<int, int> hist;
    for (const auto& t : trees) ++hist[contour_distance(t)];
    CHECK(hist[0] == 2);
    CHECK(hist[1] == 1);
    for (const auto& t : trees) {
        int pos = 0;
        for (int s : contour_steps(t)) pos += s;
        CHECK(pos == -tree_charge(t.top));
    }
}

TEST_CASE("hand-built nested tree has distance two") {
    using N = BlossomNode;
    BlossomTree t;
    t.family = OracleFamily::Tetravalent;
    t.top = N::vertex({N::black(), N::vertex({N::black(), N::white(), N::white()}), N::white()});
    CHECK(contour_distance(t) == 2);
    auto m = close_tree(t);
    CHECK(euler_ok(m));
    CHECK(dual_distance(m) == 2);
}

TEST_CASE("trivial tree closes to the leg-to-leg map") {
    BlossomTree t;
    t.family = OracleFamily::Tetravalent;
    t.top = BlossomNode::white();
    auto m = close_tree(t);
    CHECK(m.n_vertices == 2);
    CHECK(m.n_edges() == 1);
    auto fs = faces(m);
    CHECK(fs.n_faces == 1);
    CHECK(fs.f0 == fs.f1);
    CHECK(dual_distance(m) == 0);
}

TEST_CASE("closures satisfy the Euler relation") {
    for (int N = 0; N <= 4; ++N)
        for_each_tree(OracleFamily::Tetravalent, 0, N,
                      [&](const BlossomTree& t) { CHECK(euler_ok(close_tree(t))); });
}

TEST_CASE("contour distance equals dual BFS distance (two-leg families)") {
    for (int N = 0; N <= 5; ++N) {
        auto rep = check_distance_identity(OracleFamily::Tetravalent, 0, N);
        CHECK(rep.mismatches == 0);
        CHECK(rep.euler_failures == 0);
    }
    for (int N = 0; N <= 5; ++N) {
        auto rep = check_distance_identity(OracleFamily::Trivalent, 0, N);
        CHECK(rep.mismatches == 0);
        CHECK(rep.euler_failures == 0);
    }
    for (int N = 0; N <= 3; ++N) {
        auto rep = check_distance_identity(OracleFamily::BipartiteP, 3, N);
        CHECK(rep.mismatches == 0);
        CHECK(rep.euler_failures == 0);
    }
    for (int N = 0; N <= 2; ++N) {
        auto rep = check_distance_identity(OracleFamily::BipartiteP, 4, N);
        CHECK(rep.mismatches == 0);
        CHECK(rep.euler_failures == 0);
    }
}

TEST_CASE("contour distance equals dual BFS distance (one-leg trees)") {
    for (int N = 1; N <= 4; ++N) {
        auto rep = check_distance_identity_one_leg(N);
        CHECK(rep.mismatches == 0);
        CHECK(rep.euler_failures == 0);
    }
}

TEST_CASE("census partial sums match the recursion coefficients") {
    {
        auto fam = solve_sequences(ModelSpec::tetravalent(), 5, 10);
        for (int N = 1; N <= 5; ++N) {
            auto hist = census(OracleFamily::Tetravalent, 0, N);
            long long total = 0;
            for (const auto& [d, c] : hist) total += c;
            CHECK(Rational(total) == tree_count(OracleFamily::Tetravalent, 0, N));
            for (int n = 0; n <= 10; ++n)
                CHECK(Rational(partial_sum(hist, n)) == fam.at("R", n).coeff({N}));
        }
    }
    {
        auto fam = solve_sequences(ModelSpec::trivalent(), 4, 8);
        for (int N = 1; N <= 4; ++N) {
            auto hist = census(OracleFamily::Trivalent, 0, N);
            for (int n = 0; n <= 8; ++n)
                CHECK(Rational(partial_sum(hist, n)) == fam.at("R", n).coeff({N}));
        }
    }
    {
        auto fam = solve_sequences(ModelSpec::bipartite_p_valent(3), 8);
        for (int N = 1; N <= 4; ++N) {
            auto hist = census(OracleFamily::BipartiteP, 3, N);
            for (int n = 0; n <= 8; ++n)
                CHECK(Rational(partial_sum(hist, n)) == fam.at("R", n).coeff({N, N}));
        }
    }
    {
        auto fam = solve_sequences(ModelSpec::bipartite_p_valent(4), 6);
        for (int N = 1; N <= 3; ++N) {
            auto hist = census(OracleFamily::BipartiteP, 4, N);
            for (int n = 0; n <= 8; ++n)
                CHECK(Rational(partial_sum(hist, n)) == fam.at("R", n).coeff({N, N}));
        }
    }
}

TEST_CASE("sharded census equals the serial one") {
    auto serial = census(OracleFamily::Tetravalent, 0, 4, 1);
    auto sharded = census(OracleFamily::Tetravalent, 0, 4, 3);
    CHECK(serial == sharded);
}

TEST_CASE("cut inverts close on small trees") {
    for (int N = 0; N <= 4; ++N)
        CHECK(count_roundtrip_failures(OracleFamily::Tetravalent, 0, N) == 0);
    for (int N = 0; N <= 3; ++N)
        CHECK(count_roundtrip_failures(OracleFamily::Trivalent, 0, N) == 0);
    for (int N = 0; N <= 2; ++N)
        CHECK(count_roundtrip_failures(OracleFamily::BipartiteP, 3, N) == 0);
}

TEST_CASE("enumeration budget is enforced") {
    CHECK_THROWS_AS(icount(OracleFamily::Tetravalent, 0, 8), usage_error);
    CHECK_THROWS_AS(icount(OracleFamily::BipartiteP, 4, 6), usage_error);
}

TEST_CASE("bipartite crossing rule biases the distance") {
    // the undirected distance can only be smaller; on some trees it is
    long long strict = 0, total = 0;
    for (int N = 1; N <= 3; ++N)
        for_each_tree(OracleFamily::BipartiteP, 3, N, [&](const BlossomTree& t) {
            auto m = close_tree(t);
            int directed = dual_distance(m, true);
            int undirected = dual_distance(m, false);
            CHECK(undirected <= directed);
            if (undirected < directed) ++strict;
            ++total;
        });
    CHECK(total > 0);
    CHECK(strict > 0);
}

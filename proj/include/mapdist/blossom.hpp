#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "mapdist/rational.hpp"

namespace mapdist {

/// Tree families the brute-force oracle can enumerate exhaustively.
enum class OracleFamily {
    Tetravalent,  // ternary trees, one black leaf per vertex
    Trivalent,    // binary trees, charge-0/1 subtree structure
    BipartiteP,   // bicolored p-valent trees
};

struct BlossomNode {
    enum class Kind : unsigned char { Vertex, WhiteLeaf, BlackLeaf };
    Kind kind = Kind::WhiteLeaf;
    signed char color = -1;  // bipartite vertices: 0 black, 1 white
    std::vector<BlossomNode> children;  // clockwise contour order

    static BlossomNode white() { return {}; }
    static BlossomNode black() {
        BlossomNode n;
        n.kind = Kind::BlackLeaf;
        return n;
    }
    static BlossomNode vertex(std::vector<BlossomNode> ch, int color = -1) {
        BlossomNode n;
        n.kind = Kind::Vertex;
        n.color = static_cast<signed char>(color);
        n.children = std::move(ch);
        return n;
    }
    friend bool operator==(const BlossomNode& a, const BlossomNode& b) {
        return a.kind == b.kind && a.color == b.color && a.children == b.children;
    }
};

/// A rooted blossom tree: the root is a dangling stub attached to `top`.
struct BlossomTree {
    OracleFamily family = OracleFamily::Tetravalent;
    int p = 0;  // BipartiteP only
    BlossomNode top;
    friend bool operator==(const BlossomTree& a, const BlossomTree& b) {
        return a.family == b.family && a.p == b.p && a.top == b.top;
    }
};

/// #white leaves - #black leaves.
int tree_charge(const BlossomNode& n);

/// Leaf visits in clockwise contour order from the root: +1 black, -1 white.
std::vector<int> contour_steps(const BlossomTree& t);

/// Maximum coordinate reached by the contour walk (the walk starts at 0).
int contour_distance(const BlossomTree& t);

/// Closed-form tree count for the family: 3^N c_N, or (p-1)^N C_N^(p) with
/// C_N^(p) = binom((p-1)N, N) / ((p-2)N + 1).
Rational tree_count(OracleFamily family, int p, int N);

/// Streams every tree with N vertices (N black vertices for BipartiteP)
/// without materializing the full list.  Throws usage_error beyond the
/// enumeration budget (tetravalent N <= 7 and comparable sizes elsewhere).
void for_each_tree(OracleFamily family, int p, int N,
                   const std::function<void(const BlossomTree&)>& fn);

std::vector<BlossomTree> enumerate_trees(OracleFamily family, int p, int N);

/// Charge-0 one-leg trees of the trivalent family.
void for_each_s_tree(int N, const std::function<void(const BlossomTree&)>& fn);

}  // namespace mapdist

#pragma once

#include <string>
#include <vector>

#include "mapdist/rational.hpp"
#include "mapdist/shift_operator.hpp"

namespace mapdist {

/// Catalog of graph-ensemble families whose distance-indexed systems we can
/// derive and solve.
enum class Family {
    EvenValence,      // vertices of even valences 4..2(m+1), weights g_{2k}
    ArbitraryValence, // valences >= 3, weights g_k
    BipartitePValent, // bicolored, all vertices p-valent, weights g / gt1
    Constellation,    // white p-valent (weight g), black pk-valent (gt_k)
    BipartiteEven,    // bicolored even valences, weights g_{2i} / gt_{2i}
    IsingSymmetric,   // bipartite-even with g2=gt2=c, g4=gt4=g
};

struct ModelSpec {
    Family family;
    int p = 0;  // bipartite/constellation black-vertex valence parameter

    // (valence, coupling name) lists; meaning depends on the family.
    std::vector<std::pair<int, std::string>> weights;        // primary side
    std::vector<std::pair<int, std::string>> white_weights;  // bipartite-even second color
    std::string g_name;                                      // constellation p-valent weight

    std::vector<std::string> coupling_names() const;

    static ModelSpec tetravalent();                       // g4 = "g"
    static ModelSpec even_valence(std::vector<std::pair<int, std::string>> w);
    static ModelSpec trivalent();                         // g3 = "g"
    static ModelSpec arbitrary_valence(std::vector<std::pair<int, std::string>> w);
    static ModelSpec bipartite_p_valent(int p);           // "g", "gt1"
    static ModelSpec constellation(int p, std::vector<std::pair<int, std::string>> tilde);
    static ModelSpec bipartite_even(std::vector<std::pair<int, std::string>> black,
                                    std::vector<std::pair<int, std::string>> white);
    static ModelSpec ising_symmetric();                   // couplings "c", "g"
};

/// The coupled distance-indexed system for a model: one equation per
/// (operator expression, row offset) with the head entry it determines.
std::vector<SequenceEquation> build_recursion_system(const ModelSpec& model);

/// The two-sequence reduction of the symmetric-Ising system (V and R only),
/// used as a built-in cross-check of the five-sequence derivation.
std::vector<SequenceEquation> ising_reduced_system();

/// Names of the sequence families the system determines, in head order.
std::vector<std::string> sequence_names(const ModelSpec& model);

}  // namespace mapdist

#pragma once

#include <string>
#include <vector>

#include "mapdist/series.hpp"

namespace mapdist {

struct IdentityReport {
    std::string name;
    int order = 0;
    bool exact_zero = false;
    Rational max_abs;  // largest coefficient of the difference series
};

/// The closed forms of the distance-0 generating functions, each checked as
/// an exact series identity against the recursion solver (division-free,
/// cross-multiplied).
std::vector<IdentityReport> special_value_identities(int quad_order = 16,
                                                     int quadhexa_order = 10,
                                                     int trivalent_order = 12,
                                                     int bip3_order = 12, int bip4_order = 10,
                                                     int cons3_order = 8);

/// The quartic functional identity behind the one-root solution of the
/// quadrivalent recursion, verified by exact bivariate polynomial expansion.
bool one_root_quartic_identity_holds();

}  // namespace mapdist

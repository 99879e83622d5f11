#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mapdist::acceptance {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

/// Runs every acceptance criterion at its pinned tolerance, streaming one
/// PASS/FAIL line per criterion to `live` (if given).
std::vector<CriterionResult> run_all(std::ostream* live = nullptr);

}  // namespace mapdist::acceptance

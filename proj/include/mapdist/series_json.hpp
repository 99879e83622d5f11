#pragma once

#include <string>

#include "mapdist/sequence_solver.hpp"
#include "mapdist/series.hpp"

namespace mapdist {

/// {"variables": [...], "cutoff": n, "terms": [{"exp": [...], "num": "...",
/// "den": "..."}]} with integers as decimal strings; term order follows the
/// exponent ordering, so equal series serialize byte-identically.
std::string series_to_json(const TruncatedSeries& s);
TruncatedSeries series_from_json(const std::string& text);

/// Family export keyed "name[n]".
std::string family_to_json(const SequenceFamily& fam);

}  // namespace mapdist

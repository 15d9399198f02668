#pragma once

#include <json.hpp>
#include <string>

#include "minperiod/blowup.hpp"
#include "minperiod/bounds.hpp"
#include "minperiod/search.hpp"
#include "minperiod/svp.hpp"

namespace minperiod {

using json = nlohmann::json;

// Period-matrix JSON: {"g": int, "re": [[..]], "im": [[..]]}. Entries are
// numbers, or strings "p/q" for the exact-rational variant. When every
// entry is an integer or a rational string the exact path is kept.
PeriodMatrix parse_period_matrix(const json& j);
PeriodMatrix load_period_matrix(const std::string& path);

json to_json(const PeriodMatrix& tau);
json to_json(const ShortestResult& r);
json to_json(const BoundsReport& r);
json to_json(const RegionReport& r);
json to_json(const SearchResult& r);

} // namespace minperiod

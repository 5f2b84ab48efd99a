#pragma once

#include <string>

#include "json.hpp"

#include "gz/coordinates.hpp"
#include "gz/flows.hpp"
#include "gz/linalg.hpp"
#include "gz/orthopoly.hpp"
#include "gz/types.hpp"

namespace gz {

using Json = nlohmann::json;

// Complex scalars serialize as [re, im]; matrices as {"n", "entries"} with
// row-major entries. Parsers throw std::invalid_argument on malformed data.

Json to_json(Complex z);
Json to_json(const CMatrix& x);
Json to_json(const MonicPoly& p);
Json to_json(const GZCoord& c);
Json to_json(const SpectrumTower& t);
Json to_json(const GroupWord& w);
Json to_json(const DiscreteMeasure& mu);

Complex complex_from_json(const Json& j);
CMatrix matrix_from_json(const Json& j);
MonicPoly poly_from_json(const Json& j);
GZCoord coord_from_json(const Json& j);
SpectrumTower tower_from_json(const Json& j);
GroupWord word_from_json(const Json& j);
DiscreteMeasure measure_from_json(const Json& j);

Json load_json_file(const std::string& path);

// "re,im" or a single real; used for command line scalars.
Complex parse_complex(const std::string& s);

}  // namespace gz

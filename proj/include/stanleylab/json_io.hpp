#pragma once

// JSON encodings of objects, statistic records and series.

#include <json.hpp>

#include <memory>
#include <string>
#include <string_view>

#include "stanleylab/objects.hpp"
#include "stanleylab/series.hpp"

namespace stanleylab {

using Json = nlohmann::json;

std::string family_name(Family f);
/// Accepts the CLI spellings (stanley, dyck, peaklessMotzkin, fountain,
/// parallelogram). Throws ParseError.
Family parse_family(std::string_view name);

Json to_json(const Object& obj);
/// Decodes and validates; malformed JSON shapes throw ParseError, invalid
/// objects throw the constructor's error.
Object object_from_json(Family family, const Json& j);

Json to_json(const StatRecord& stats);

/// {"vars","grade","order","terms":[{"e","c"}]}, terms sorted by exponent
/// vector; "laurent" and "caps" are added when nonempty.
Json to_json(const Series& s);
Series series_from_json(const Json& j);

}  // namespace stanleylab

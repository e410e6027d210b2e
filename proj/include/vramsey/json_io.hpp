#pragma once

#include <string>

#include <json.hpp>

#include "vramsey/checker.hpp"
#include "vramsey/search.hpp"

namespace vramsey {

// Malformed or out-of-range JSON payloads.
struct json_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using json = nlohmann::json;

// Domain: { "n": 4, "removed": ["{1,2}", "{1,2,3,4}"] }
json to_json(const domain& d);
domain domain_from_json(const json& j);

// Coloring: { "n": 3, "colors": {"{}": 2, "{1}": 1, ...}, "k": 2 },
// removed elements omitted from the map.
json to_json(const coloring& c);
coloring coloring_from_json(const json& j);

// Witness: { "kind": "mono", "color": 2, "images": ["{}","{1}","{2}"] }
json to_json(const witness& w);

// Cube embedding: image of every source mask, plus the avoided family when
// the caller supplies one.
json to_json(const cube_embedding& e);
cube_embedding cube_embedding_from_json(const json& j);

json to_json(const search_config& cfg);
search_config search_config_from_json(const json& j);

// Certificate: outcome, witness coloring if any, reductions, stats block
// (nodes), meta block (elapsed, excluded from byte-identical claims), config
// echo.
json to_json(const search_certificate& cert);

// Parse text; wraps parse failures in json_error.
json parse_json_text(const std::string& text);
json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const json& j);

}  // namespace vramsey

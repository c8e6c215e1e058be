#pragma once

#include <string>

#include "json.hpp"
#include "pseudoarc/bm.hpp"
#include "pseudoarc/circle.hpp"
#include "pseudoarc/crooked.hpp"
#include "pseudoarc/plmap.hpp"
#include "pseudoarc/simplicial.hpp"
#include "pseudoarc/types.hpp"

// JSON forms shared by the CLI and the Python module. Rationals are "num/den" strings.
namespace pseudoarc::io {

using json = nlohmann::json;

json to_json(const Q& q);
Q q_from_json(const json& j);

// {"codomain": n, "values": [...]}; a bare array reads with codomain = max value
json to_json(const SimplicialMap& s);
SimplicialMap simplicial_from_json(const json& j);

// {"points": [["x","y"], ...]}
json to_json(const PLMap& f);
PLMap pl_from_json(const json& j);
// JSON as above, or "x,y" lines
PLMap pl_from_text(const std::string& text);

json to_json(const CircleMap& c);
CircleMap circle_from_json(const json& j);
json to_json(const CircularSimplicialMap& s);
CircularSimplicialMap circular_from_json(const json& j);

// {"zero":true} or {"default":"0|k|inf","exceptions":{"2":"inf","3":"1"}}
json to_json(const Supernatural& s);
Supernatural supernatural_from_json(const json& j);

json to_json(const Certificate& c);
CertPtr certificate_from_json(const json& j);

json to_json(const MapRef& m);
MapRef mapref_from_json(const json& j);
json to_json(const Transcript& t);
Transcript transcript_from_json(const json& j);
json to_json(const VerifyReport& r);

json to_json(const RogersReport& r);

std::string read_file(const std::string& path);

}  // namespace pseudoarc::io

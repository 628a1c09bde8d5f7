// JSON schema for group specifications and results. One document shape
// serves both input and output:
//
//   {"rank": int, "gamma": [[int]], "coroots": [[int]], "roots": [[int]],
//    "simple_indices": [int], "name": string?}
//
// Matrices are row-lists; coroots/roots list one vector per entry;
// simple_indices are 0-based positions into those lists; gamma is optional
// in datum-only contexts.

#pragma once

#include <optional>
#include <string>
#include <utility>

#include <json.hpp>

#include "rcg/pi0_engine.hpp"

namespace rcg {

nlohmann::json to_json(const FiniteAbelianGroup& g);
nlohmann::json to_json(const IntMatrix& m);      // row-lists
nlohmann::json columns_to_json(const IntMatrix& m);  // list of column vectors

nlohmann::json document_to_json(const RootDatum& d, const RealFormSpec* f);

// Parses and validates; the form is absent when "gamma" is missing.
std::pair<RootDatum, std::optional<RealFormSpec>> document_from_json(
    const nlohmann::json& j);

nlohmann::json pi0_to_json(const RootDatum& d, const RealFormSpec& f,
                           const Pi0Result& r);

}  // namespace rcg

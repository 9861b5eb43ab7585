#pragma once

#include <string>

#include <json.hpp>

#include "lemma1.hpp"
#include "mls.hpp"
#include "transversal.hpp"

namespace mlt {

// The instance format ("mls-v1") is UTF-8 JSON holding only integers:
//
//   {
//     "format": "mls-v1",
//     "n": 3,
//     "matroid": {"kind": "linear", "p": 5, "dim": 3, "elements": [[...]]},
//     "grid": [[...], ...]
//   }
//
// or "kind": "partition" with a "classes" array indexed by element id.
// instance_text() is canonical: parsing and re-writing a produced file
// reproduces it byte for byte.

nlohmann::ordered_json mls_to_json(const Mls& a);
Mls mls_from_json(const nlohmann::json& j);

std::string instance_text(const Mls& a);
Mls parse_instance_text(const std::string& text);

Mls read_instance_file(const std::string& path);
void write_instance_file(const Mls& a, const std::string& path);

nlohmann::ordered_json violations_to_json(const Mls& a,
                                          const std::vector<Violation>& v);
nlohmann::ordered_json report_to_json(const Mls& a, const SolveReport& r);

nlohmann::ordered_json decomposition_to_json(const Decomposition& d);
SetFamily family_from_json(const nlohmann::json& j);

}  // namespace mlt

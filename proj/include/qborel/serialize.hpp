#pragma once

// JSON and TSV renderings. Words and root positions are 1-based in every
// external format.

#include "qborel/hopf.hpp"
#include "qborel/strata.hpp"

#include <json.hpp>

#include <string>

namespace qborel {

using json = nlohmann::ordered_json;

json to_json(const QVec& v);
json word_to_json(const Word& w);
std::string word_to_string(const Word& w); // "1,2,1"; "e" for the empty word
/// Parses "1,2,1" (1-based) or "" / "e" for the identity; throws ParseError.
Word parse_word(const std::string& text);

json root_system_to_json(const RootSystem& rs);
json report_to_json(const ClassificationReport& r);
std::string report_to_tsv(const ClassificationReport& r);

json pbw_to_json(const PBWVec& v);
std::string pbw_to_string(const PBWVec& v); // "0" or "c * E[a1,...]" terms

json free_to_json(const FreeElt& x);
json uelt_to_json(const UElt& x);

/// Explicit Cartan matrix from a JSON integer array; throws ParseError.
IntMatrix parse_cartan_json(const std::string& text);

} // namespace qborel

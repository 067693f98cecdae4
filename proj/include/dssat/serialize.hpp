#pragma once

// JSON encoding of every report type. Decoding is the exact inverse.

#include <json.hpp>

#include "dssat/bounds.hpp"
#include "dssat/constructions.hpp"
#include "dssat/predicates.hpp"
#include "dssat/search.hpp"

namespace dssat {

using Json = nlohmann::ordered_json;

void to_json(Json& j, const Sequence& s);
void from_json(const Json& j, Sequence& s);
void to_json(Json& j, const Embedding& e);
void from_json(const Json& j, Embedding& e);
void to_json(Json& j, const Insertion& i);
void from_json(const Json& j, Insertion& i);
void to_json(Json& j, const Verdict& v);
void from_json(const Json& j, Verdict& v);
void to_json(Json& j, const LemmaCheck& c);
void from_json(const Json& j, LemmaCheck& c);
void to_json(Json& j, const StructuralReport& r);
void from_json(const Json& j, StructuralReport& r);
void to_json(Json& j, const ConstructionOutput& c);
void from_json(const Json& j, ConstructionOutput& c);
void to_json(Json& j, const Clause& c);
void from_json(const Json& j, Clause& c);
void to_json(Json& j, const BoundReport& r);
void from_json(const Json& j, BoundReport& r);
void to_json(Json& j, const SearchStats& s);
void from_json(const Json& j, SearchStats& s);
void to_json(Json& j, const SearchResult& r);
void from_json(const Json& j, SearchResult& r);
void to_json(Json& j, const ConjecturePoint& p);
void from_json(const Json& j, ConjecturePoint& p);
void to_json(Json& j, const ConjectureReport& r);
void from_json(const Json& j, ConjectureReport& r);

}  // namespace dssat

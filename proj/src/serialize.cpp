#include "dssat/serialize.hpp"

namespace dssat {

namespace {

template <class T>
void put(Json& j, const char* key, const std::optional<T>& v) {
  if (v) j[key] = *v;
  else j[key] = nullptr;
}

template <class T>
void get(const Json& j, const char* key, std::optional<T>& v) {
  auto it = j.find(key);
  if (it == j.end() || it->is_null()) v.reset();
  else v = it->template get<T>();
}

}  // namespace

void to_json(Json& j, const Sequence& s) {
  j = Json{{"letters", s.vec()}, {"n", s.alphabet_size()}};
}

void from_json(const Json& j, Sequence& s) {
  s = Sequence(j.at("letters").get<std::vector<Letter>>(), j.at("n").get<std::size_t>());
}

void to_json(Json& j, const Embedding& e) {
  j = Json{{"positions", e.positions}, {"letter_map", e.letter_map}};
}

void from_json(const Json& j, Embedding& e) {
  j.at("positions").get_to(e.positions);
  j.at("letter_map").get_to(e.letter_map);
}

void to_json(Json& j, const Insertion& i) {
  j = Json{{"letter", i.letter}, {"position", i.position}};
}

void from_json(const Json& j, Insertion& i) {
  j.at("letter").get_to(i.letter);
  j.at("position").get_to(i.position);
}

void to_json(Json& j, const Verdict& v) {
  j = Json{{"status", to_string(v.status)}};
  put(j, "embedding", v.embedding);
  put(j, "insertion", v.insertion);
  put(j, "window", v.window);
}

void from_json(const Json& j, Verdict& v) {
  v.status = verdict_status_from_string(j.at("status").get<std::string>());
  get(j, "embedding", v.embedding);
  get(j, "insertion", v.insertion);
  get(j, "window", v.window);
}

void to_json(Json& j, const LemmaCheck& c) {
  j = Json{{"passed", c.passed}, {"counterexample", c.counterexample}, {"detail", c.detail}};
}

void from_json(const Json& j, LemmaCheck& c) {
  j.at("passed").get_to(c.passed);
  j.at("counterexample").get_to(c.counterexample);
  j.at("detail").get_to(c.detail);
}

void to_json(Json& j, const StructuralReport& r) {
  j = Json{{"valid", r.valid}, {"verdict", r.verdict}, {"lemmas", Json::object()}};
  for (const auto& [name, check] : r.lemmas) j["lemmas"][name] = check;
}

void from_json(const Json& j, StructuralReport& r) {
  j.at("valid").get_to(r.valid);
  j.at("verdict").get_to(r.verdict);
  r.lemmas.clear();
  for (const auto& [name, check] : j.at("lemmas").items()) r.lemmas[name] = check.get<LemmaCheck>();
}

void to_json(Json& j, const ConstructionOutput& c) {
  j = Json{{"construction", c.construction_id},
           {"pattern", c.pattern},
           {"parameters", Json::object()},
           {"claimed_length", c.claimed_length},
           {"length", c.sequence.size()},
           {"sequence", c.sequence}};
  for (const auto& [name, value] : c.parameters) j["parameters"][name] = value;
}

void from_json(const Json& j, ConstructionOutput& c) {
  j.at("construction").get_to(c.construction_id);
  j.at("pattern").get_to(c.pattern);
  c.parameters.clear();
  for (const auto& [name, value] : j.at("parameters").items())
    c.parameters[name] = value.get<std::int64_t>();
  j.at("claimed_length").get_to(c.claimed_length);
  j.at("sequence").get_to(c.sequence);
}

void to_json(Json& j, const Clause& c) {
  j = Json{{"id", c.id}, {"citation", c.citation}, {"applicable", c.applicable}};
  put(j, "lower", c.lower);
  put(j, "upper", c.upper);
  j["external"] = c.external;
}

void from_json(const Json& j, Clause& c) {
  j.at("id").get_to(c.id);
  j.at("citation").get_to(c.citation);
  j.at("applicable").get_to(c.applicable);
  get(j, "lower", c.lower);
  get(j, "upper", c.upper);
  j.at("external").get_to(c.external);
}

void to_json(Json& j, const BoundReport& r) {
  j = Json{{"target", to_string(r.target)}, {"pattern", r.pattern}, {"n", r.n}};
  put(j, "lower", r.lower);
  put(j, "upper", r.upper);
  j["classification"] = to_string(r.classification);
  j["clauses"] = r.clauses;
}

void from_json(const Json& j, BoundReport& r) {
  r.target = bound_target_from_string(j.at("target").get<std::string>());
  j.at("pattern").get_to(r.pattern);
  j.at("n").get_to(r.n);
  get(j, "lower", r.lower);
  get(j, "upper", r.upper);
  r.classification = growth_from_string(j.at("classification").get<std::string>());
  j.at("clauses").get_to(r.clauses);
}

void to_json(Json& j, const SearchStats& s) {
  j = Json{{"nodes", s.nodes},
           {"seconds", s.seconds},
           {"first_level", s.first_level},
           {"last_level", s.last_level}};
}

void from_json(const Json& j, SearchStats& s) {
  j.at("nodes").get_to(s.nodes);
  j.at("seconds").get_to(s.seconds);
  j.at("first_level").get_to(s.first_level);
  j.at("last_level").get_to(s.last_level);
}

void to_json(Json& j, const SearchResult& r) {
  j = Json{{"kind", to_string(r.kind)},
           {"pattern", r.pattern},
           {"n", r.n},
           {"status", to_string(r.status)}};
  put(j, "value", r.value);
  j["lo"] = r.lo;
  put(j, "hi", r.hi);
  j["witness_count"] = r.witness_count;
  j["witnesses"] = Json::array();
  for (const Sequence& w : r.witnesses) j["witnesses"].push_back(w.vec());
  j["stats"] = r.stats;
}

void from_json(const Json& j, SearchResult& r) {
  r.kind = search_kind_from_string(j.at("kind").get<std::string>());
  j.at("pattern").get_to(r.pattern);
  j.at("n").get_to(r.n);
  r.status = search_status_from_string(j.at("status").get<std::string>());
  get(j, "value", r.value);
  j.at("lo").get_to(r.lo);
  get(j, "hi", r.hi);
  j.at("witness_count").get_to(r.witness_count);
  r.witnesses.clear();
  for (const auto& w : j.at("witnesses")) r.witnesses.emplace_back(w.get<std::vector<Letter>>(), r.n);
  j.at("stats").get_to(r.stats);
}

void to_json(Json& j, const ConjecturePoint& p) {
  j = Json{{"s", p.s}, {"n", p.n}, {"status", to_string(p.status)}};
  put(j, "value", p.value);
  put(j, "predicted", p.predicted);
  j["items"] = Json::object();
  for (const auto& [name, ok] : p.items) j["items"][name] = ok;
  put(j, "counterexample", p.counterexample);
  j["witnesses_checked"] = p.witnesses_checked;
  j["note"] = p.note;
}

void from_json(const Json& j, ConjecturePoint& p) {
  j.at("s").get_to(p.s);
  j.at("n").get_to(p.n);
  p.status = point_status_from_string(j.at("status").get<std::string>());
  get(j, "value", p.value);
  get(j, "predicted", p.predicted);
  p.items.clear();
  for (const auto& [name, ok] : j.at("items").items()) p.items[name] = ok.get<bool>();
  get(j, "counterexample", p.counterexample);
  j.at("witnesses_checked").get_to(p.witnesses_checked);
  j.at("note").get_to(p.note);
}

void to_json(Json& j, const ConjectureReport& r) {
  j = Json{{"id", r.id}, {"points", r.points}};
}

void from_json(const Json& j, ConjectureReport& r) {
  j.at("id").get_to(r.id);
  j.at("points").get_to(r.points);
}

}  // namespace dssat

#include "dssat/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iomanip>
#include <memory>
#include <ostream>
#include <sstream>

#include "dssat/serialize.hpp"
#include "dssat/text.hpp"

namespace dssat {

namespace {

enum class Format { Json, Text, Csv };

struct Options {
  Format format = Format::Json;
  std::string cache;

  // shared inputs
  std::string pattern;
  std::size_t n = 0;
  std::size_t s = 0;
  std::string sequence;

  std::string check_kind = "sat";
  std::string which;
  std::size_t k = 0;
  std::size_t repeats = 0;
  bool verify = false;
  std::string target = "sat";
  std::string search_kind = "sat";
  std::uint64_t budget = 0;
  unsigned jobs = 1;
  bool enumerate = false;
  std::size_t max_witnesses = 1000;
  std::size_t max_length = 0;
  bool no_seed = false;
  std::size_t n_min = 2;
  std::size_t n_max = 0;
  std::string table = "both";
  bool exact = false;
};

std::string optional_text(const std::optional<std::int64_t>& v) {
  return v ? std::to_string(*v) : "-";
}

std::string letters_text(const Sequence& s) { return format_letters(s.letters(), ", "); }

std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

template <class T>
void emit_json(std::ostream& out, const T& value) {
  out << Json(value).dump(2) << '\n';
}

void require_n(const Options& o) {
  if (o.n == 0) throw std::invalid_argument("--n must be at least 1");
}

// ---------------------------------------------------------------------------

int cmd_check(const Options& o, std::ostream& out) {
  require_n(o);
  const Sequence x = parse_sequence(o.sequence, o.n);
  if (o.check_kind == "structure") {
    if (o.s == 0) throw std::invalid_argument("--s is required for structure checks");
    const StructuralReport report = check_structure_alt(x, static_cast<int>(o.s), o.n);
    if (o.format == Format::Json) {
      emit_json(out, report);
    } else if (o.format == Format::Csv) {
      out << "lemma,passed,counterexample,detail\n";
      for (const auto& [name, c] : report.lemmas)
        out << name << ',' << (c.passed ? "true" : "false") << ','
            << csv_field(format_letters(std::vector<Letter>(c.counterexample.begin(),
                                                            c.counterexample.end())))
            << ',' << csv_field(c.detail) << '\n';
    } else {
      out << "verdict: " << to_string(report.verdict.status) << '\n';
      for (const auto& [name, c] : report.lemmas) {
        out << "  " << std::left << std::setw(26) << name << (c.passed ? "ok" : "FAILED");
        if (!c.passed) out << "  " << c.detail;
        out << '\n';
      }
    }
    return report.all_passed() ? kExitOk : kExitFailed;
  }

  const Pattern u = parse_pattern(o.pattern);
  Verdict v;
  if (o.check_kind == "sat") v = check_saturated(x, u, o.n);
  else if (o.check_kind == "ssat") v = check_semisaturated(x, u, o.n);
  else throw std::invalid_argument("--kind must be sat, ssat or structure");

  if (o.format == Format::Json) {
    emit_json(out, v);
  } else {
    std::string detail;
    if (v.embedding)
      detail = "copy at positions " +
               format_letters(std::vector<Letter>(v.embedding->positions.begin(),
                                                  v.embedding->positions.end()));
    if (v.insertion)
      detail = "letter " + std::to_string(v.insertion->letter) + " fits at gap " +
               std::to_string(v.insertion->position);
    if (v.window) detail = "repeated letter in window starting at " + std::to_string(*v.window);
    if (o.format == Format::Csv)
      out << "status,detail\n" << to_string(v.status) << ',' << csv_field(detail) << '\n';
    else
      out << to_string(v.status) << (detail.empty() ? "" : ": " + detail) << '\n';
  }
  return v.passed() ? kExitOk : kExitFailed;
}

ConstructionOutput build(const Options& o) {
  const std::string& w = o.which;
  if (w == "alt-sat") return alt_saturated(o.n, o.s);
  if (w == "power-block") return power_block_saturated(o.k, o.repeats, o.n);
  if (w == "two-letter") return two_letter_saturated(parse_pattern(o.pattern), o.n);
  if (w == "double-last")
    return double_last_extend(parse_pattern(o.pattern), parse_sequence(o.sequence, o.n), o.n);
  if (w == "ssat-general") return ssat_general(parse_pattern(o.pattern), o.n);
  if (w == "ssat-const") return ssat_constant(parse_pattern(o.pattern));
  if (w == "ssat-alt") return ssat_alt(o.n, o.s);
  throw std::invalid_argument("unknown construction: " + w);
}

int cmd_construct(const Options& o, std::ostream& out, std::ostream& err) {
  const ConstructionOutput c = build(o);
  if (o.format == Format::Json) {
    emit_json(out, c);
  } else if (o.format == Format::Csv) {
    out << "construction,pattern,length,claimed_length,sequence\n"
        << c.construction_id << ',' << c.pattern << ',' << c.sequence.size() << ','
        << c.claimed_length << ',' << csv_field(format_letters(c.sequence.letters())) << '\n';
  } else {
    out << c.construction_id << " for " << c.pattern << ": length " << c.sequence.size()
        << " (claimed " << c.claimed_length << ")\n";
    for (const auto& [name, value] : c.parameters) out << "  " << name << " = " << value << '\n';
    out << "  " << letters_text(c.sequence) << '\n';
  }
  if (!o.verify) return kExitOk;
  const Pattern u = parse_pattern(c.pattern);
  const bool semi = c.construction_id.rfind("ssat", 0) == 0;
  const std::size_t n = c.sequence.alphabet_size();
  const Verdict v = semi ? check_semisaturated(c.sequence, u, n) : check_saturated(c.sequence, u, n);
  const bool ok = v.passed() && static_cast<std::int64_t>(c.sequence.size()) <= c.claimed_length;
  err << "verify: " << to_string(v.status) << (ok ? "" : " (check failed)") << '\n';
  return ok ? kExitOk : kExitFailed;
}

int cmd_bounds(const Options& o, std::ostream& out) {
  require_n(o);
  BoundReport r;
  if (o.target == "xi") {
    if (o.s == 0) throw std::invalid_argument("--s is required for target xi");
    r = xi_bounds(o.n, o.s);
  } else if (o.target == "sat") {
    r = sat_bounds(parse_pattern(o.pattern), o.n);
  } else if (o.target == "ssat") {
    r = ssat_bounds(parse_pattern(o.pattern), o.n);
  } else {
    throw std::invalid_argument("--target must be sat, ssat or xi");
  }
  if (o.format == Format::Json) {
    emit_json(out, r);
  } else if (o.format == Format::Csv) {
    out << "clause,applicable,lower,upper,external,citation\n";
    for (const Clause& c : r.clauses)
      out << c.id << ',' << (c.applicable ? "true" : "false") << ',' << optional_text(c.lower)
          << ',' << optional_text(c.upper) << ',' << (c.external ? "true" : "false") << ','
          << csv_field(c.citation) << '\n';
  } else {
    out << to_string(r.target) << "(" << r.pattern << ", " << r.n << "): lower "
        << optional_text(r.lower) << ", upper " << optional_text(r.upper) << ", "
        << to_string(r.classification) << '\n';
    for (const Clause& c : r.clauses) {
      if (!c.applicable) continue;
      out << "  " << std::left << std::setw(24) << c.id << " lower " << std::setw(6)
          << optional_text(c.lower) << " upper " << std::setw(6) << optional_text(c.upper)
          << (c.external ? " external" : "") << '\n';
    }
  }
  return kExitOk;
}

SearchOptions search_options(const Options& o) {
  SearchOptions opts;
  opts.budget = o.budget;
  opts.jobs = std::max(1u, o.jobs);
  opts.enumerate = o.enumerate;
  opts.max_witnesses = o.max_witnesses;
  opts.seed_from_bounds = !o.no_seed;
  if (o.max_length) opts.max_length = o.max_length;
  return opts;
}

std::unique_ptr<SearchCache> open_cache(const Options& o) {
  std::string path = o.cache;
  if (path.empty())
    if (const char* env = std::getenv("DSSAT_CACHE")) path = env;
  if (path.empty()) return nullptr;
  return std::make_unique<SearchCache>(path);
}

int cmd_search(const Options& o, std::ostream& out) {
  require_n(o);
  SearchKind kind;
  if (o.search_kind == "sat") kind = SearchKind::MinSat;
  else if (o.search_kind == "ssat") kind = SearchKind::MinSsat;
  else if (o.search_kind == "ex") kind = SearchKind::MaxFree;
  else throw std::invalid_argument("--kind must be sat, ssat or ex");
  const Pattern u = parse_pattern(o.pattern);
  auto cache = open_cache(o);
  const SearchResult r = cached_search(cache.get(), kind, u, o.n, search_options(o));

  if (o.format == Format::Json) {
    emit_json(out, r);
  } else if (o.format == Format::Csv) {
    out << "kind,pattern,n,status,value,lo,hi,witness\n";
    auto row = [&](const std::string& w) {
      out << to_string(r.kind) << ',' << r.pattern << ',' << r.n << ',' << to_string(r.status)
          << ',' << optional_text(r.value) << ',' << r.lo << ',' << optional_text(r.hi) << ','
          << csv_field(w) << '\n';
    };
    if (r.witnesses.empty()) row("");
    for (const Sequence& w : r.witnesses) row(format_letters(w.letters()));
  } else {
    out << to_string(r.kind) << "(" << r.pattern << ", " << r.n << ") = ";
    if (r.value) out << *r.value;
    else out << "[" << r.lo << ", " << optional_text(r.hi) << "]";
    out << "  " << to_string(r.status) << ", " << r.stats.nodes << " nodes, " << std::fixed
        << std::setprecision(3) << r.stats.seconds << " s\n";
    out << "witnesses: " << r.witness_count;
    if (r.witnesses.size() < r.witness_count) out << " (" << r.witnesses.size() << " shown)";
    out << '\n';
    for (const Sequence& w : r.witnesses) out << "  " << letters_text(w) << '\n';
  }
  return r.exact() ? kExitOk : kExitIncomplete;
}

int conjecture_exit(const ConjectureReport& r) {
  if (r.count(PointStatus::Refuted)) return kExitFailed;
  if (r.count(PointStatus::Skipped)) return kExitIncomplete;
  return kExitOk;
}

void emit_conjecture(const ConjectureReport& r, Format format, std::ostream& out) {
  if (format == Format::Json) {
    emit_json(out, r);
    return;
  }
  if (format == Format::Csv) {
    out << "id,s,n,status,value,predicted,items,witnesses_checked,counterexample,note\n";
    for (const ConjecturePoint& p : r.points) {
      std::string items;
      for (const auto& [name, ok] : p.items)
        items += (items.empty() ? "" : ";") + name + "=" + (ok ? "1" : "0");
      out << r.id << ',' << p.s << ',' << p.n << ',' << to_string(p.status) << ','
          << optional_text(p.value) << ',' << optional_text(p.predicted) << ','
          << csv_field(items) << ',' << p.witnesses_checked << ','
          << csv_field(p.counterexample ? format_letters(p.counterexample->letters()) : "") << ','
          << csv_field(p.note) << '\n';
    }
    return;
  }
  out << r.id << ": " << r.count(PointStatus::Confirmed) << " confirmed, "
      << r.count(PointStatus::Refuted) << " refuted, " << r.count(PointStatus::Skipped)
      << " skipped\n";
  for (const ConjecturePoint& p : r.points) {
    out << "  s=" << p.s << " n=" << p.n << "  " << std::left << std::setw(10)
        << to_string(p.status) << " value " << optional_text(p.value) << ", predicted "
        << optional_text(p.predicted);
    for (const auto& [name, ok] : p.items)
      if (!ok) out << ", " << name << " fails";
    if (p.counterexample) out << "\n      counterexample: " << letters_text(*p.counterexample);
    if (!p.note.empty()) out << "\n      " << p.note;
    out << '\n';
  }
}

int cmd_conjectures(const Options& o, std::ostream& out) {
  ConjectureReport r;
  if (o.which == "tables") {
    r = verify_tables();
  } else {
    if (o.s == 0) throw std::invalid_argument("--s is required");
    if (o.n_max < o.n_min) throw std::invalid_argument("--n-max must be at least --n-min");
    std::vector<std::size_t> ns;
    for (std::size_t n = std::max<std::size_t>(1, o.n_min); n <= o.n_max; ++n) ns.push_back(n);
    Options local = o;
    local.enumerate = true;
    const SearchOptions opts = search_options(local);
    if (o.which == "sat-alt") r = verify_conjecture_sat_alt(o.s, ns, opts);
    else if (o.which == "ssat-alt") r = verify_conjecture_ssat_alt(o.s, ns, opts);
    else throw std::invalid_argument("--which must be sat-alt, ssat-alt or tables");
  }
  emit_conjecture(r, o.format, out);
  return conjecture_exit(r);
}

int cmd_tables(const Options& o, std::ostream& out) {
  std::vector<TableRow> rows;
  if (o.table != "ssat")
    rows.insert(rows.end(), saturation_table().begin(), saturation_table().end());
  if (o.table != "sat")
    rows.insert(rows.end(), semisaturation_table().begin(), semisaturation_table().end());
  if (o.table != "sat" && o.table != "ssat" && o.table != "both")
    throw std::invalid_argument("--which must be sat, ssat or both");

  auto cache = open_cache(o);
  std::map<std::tuple<bool, std::size_t, std::size_t>, SearchResult> exact;
  if (o.exact) {
    SearchOptions opts = search_options(o);
    if (!opts.budget) opts.budget = 2'000'000;
    for (const TableRow& row : rows) {
      auto key = std::make_tuple(row.saturation, row.s, row.n);
      if (exact.count(key)) continue;
      exact[key] = cached_search(cache.get(), row.saturation ? SearchKind::MinSat : SearchKind::MinSsat,
                                 Pattern::alternation(static_cast<int>(row.s)), row.n, opts);
    }
  }

  struct Line {
    std::string table;
    TableRow row;
    std::string verdict;
    std::int64_t predicted;
    std::string exact;
  };
  std::vector<Line> lines;
  bool all_ok = true;
  for (const TableRow& row : rows) {
    const Sequence x(row.letters, row.n);
    const Pattern u = Pattern::alternation(static_cast<int>(row.s));
    const Verdict v = row.saturation ? check_saturated(x, u, row.n) : check_semisaturated(x, u, row.n);
    const std::int64_t predicted = row.saturation ? predicted_sat_alt_length(row.n, row.s)
                                                  : predicted_ssat_alt_length(row.n, row.s);
    all_ok = all_ok && v.passed() && predicted == static_cast<std::int64_t>(x.size());
    std::string ex;
    if (auto it = exact.find(std::make_tuple(row.saturation, row.s, row.n)); it != exact.end()) {
      const SearchResult& r = it->second;
      ex = r.value ? std::to_string(*r.value) : ">=" + std::to_string(r.lo);
    }
    lines.push_back({row.saturation ? "sat" : "ssat", row, to_string(v.status), predicted, ex});
  }

  if (o.format == Format::Json) {
    Json j = Json::array();
    for (const Line& l : lines) {
      Json e{{"table", l.table}, {"s", l.row.s}, {"n", l.row.n}, {"length", l.row.letters.size()},
             {"predicted", l.predicted}, {"verdict", l.verdict}, {"sequence", l.row.letters}};
      if (!l.exact.empty()) e["exact"] = l.exact;
      j.push_back(e);
    }
    out << j.dump(2) << '\n';
  } else if (o.format == Format::Csv) {
    out << "table,s,n,length,predicted,verdict,exact,sequence\n";
    for (const Line& l : lines)
      out << l.table << ',' << l.row.s << ',' << l.row.n << ',' << l.row.letters.size() << ','
          << l.predicted << ',' << l.verdict << ',' << l.exact << ','
          << csv_field(format_letters(l.row.letters)) << '\n';
  } else {
    for (const Line& l : lines) {
      out << std::left << std::setw(5) << l.table << " s=" << l.row.s << " n=" << l.row.n
          << "  len " << std::setw(3) << l.row.letters.size() << " predicted " << std::setw(3)
          << l.predicted << ' ' << std::setw(14) << l.verdict;
      if (!l.exact.empty()) out << " exact " << std::setw(4) << l.exact;
      out << "  " << format_letters(l.row.letters, " ") << '\n';
    }
  }
  return all_ok ? kExitOk : kExitFailed;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Saturation and semisaturation of generalized Davenport-Schinzel sequences",
               "dssat"};
  app.require_subcommand(1);
  Options o;
  const std::map<std::string, Format> formats{
      {"json", Format::Json}, {"text", Format::Text}, {"csv", Format::Csv}};
  app.add_option("--format", o.format, "Output format")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case))
      ->default_str("json");
  app.add_option("--cache", o.cache, "Search cache file (JSON lines); default $DSSAT_CACHE");

  auto* check = app.add_subcommand("check", "Check a sequence for saturation or semisaturation");
  check->add_option("--kind", o.check_kind, "sat, ssat or structure")
      ->check(CLI::IsMember({"sat", "ssat", "structure"}));
  check->add_option("--pattern", o.pattern, "Forbidden pattern (abab or 0,1,0,1)");
  check->add_option("--s", o.s, "Alternation order for structure checks");
  check->add_option("--n", o.n, "Alphabet size")->required();
  check->add_option("--sequence", o.sequence, "Sequence, e.g. \"0,1,0\"")->required();

  auto* construct = app.add_subcommand("construct", "Emit an explicit construction");
  construct
      ->add_option("--which", o.which,
                   "alt-sat, power-block, two-letter, double-last, ssat-general, ssat-const, "
                   "ssat-alt")
      ->required();
  construct->add_option("--n", o.n, "Alphabet size");
  construct->add_option("--s", o.s, "Alternation order");
  construct->add_option("--k", o.k, "Block width for power-block");
  construct->add_option("--repeats", o.repeats, "Block repetitions for power-block");
  construct->add_option("--pattern", o.pattern, "Pattern for pattern-based constructions");
  construct->add_option("--sequence", o.sequence, "Saturated input for double-last");
  construct->add_flag("--verify", o.verify, "Check the output against its predicate");

  auto* bounds = app.add_subcommand("bounds", "Closed-form bounds");
  bounds->add_option("--target", o.target, "sat, ssat or xi")
      ->check(CLI::IsMember({"sat", "ssat", "xi"}));
  bounds->add_option("--pattern", o.pattern, "Pattern (sat, ssat)");
  bounds->add_option("--s", o.s, "Alternation order (xi)");
  bounds->add_option("--n", o.n, "Alphabet size")->required();

  auto add_search_flags = [&](CLI::App* cmd) {
    cmd->add_option("--budget", o.budget, "Node cap, 0 for none");
    cmd->add_option("--jobs", o.jobs, "Worker threads");
    cmd->add_option("--max-witnesses", o.max_witnesses, "Witnesses kept when enumerating");
  };
  auto* search = app.add_subcommand("search", "Exact Sat, Ssat or Ex by exhaustive search");
  search->add_option("--pattern", o.pattern, "Pattern")->required();
  search->add_option("--n", o.n, "Alphabet size")->required();
  search->add_option("--kind", o.search_kind, "sat, ssat or ex")
      ->check(CLI::IsMember({"sat", "ssat", "ex"}));
  search->add_flag("--enumerate", o.enumerate, "Collect every witness of optimal length");
  search->add_option("--max-length", o.max_length, "Longest length explored");
  search->add_flag("--no-seed", o.no_seed, "Start levels at 0 instead of the lower bound");
  add_search_flags(search);

  auto* conj = app.add_subcommand("conjectures", "Check the alternation conjectures or tables");
  conj->add_option("--which", o.which, "sat-alt, ssat-alt or tables")
      ->required()
      ->check(CLI::IsMember({"sat-alt", "ssat-alt", "tables"}));
  conj->add_option("--s", o.s, "Alternation order");
  conj->add_option("--n-min", o.n_min, "Smallest n");
  conj->add_option("--n-max", o.n_max, "Largest n");
  add_search_flags(conj);

  auto* tables = app.add_subcommand("tables", "Regenerate the sequence tables");
  tables->add_option("--which", o.table, "sat, ssat or both");
  tables->add_flag("--exact", o.exact, "Add exact minimum lengths by search");
  add_search_flags(tables);

  std::vector<const char*> argv{"dssat"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*check) return cmd_check(o, out);
    if (*construct) return cmd_construct(o, out, err);
    if (*bounds) return cmd_bounds(o, out);
    if (*search) return cmd_search(o, out);
    if (*conj) return cmd_conjectures(o, out);
    if (*tables) return cmd_tables(o, out);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailed;
  }
  return kExitUsage;
}

}  // namespace dssat

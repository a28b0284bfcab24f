#include "ecgraph/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include "ecgraph/factor.hpp"
#include "ecgraph/oracle.hpp"
#include "ecgraph/reductions.hpp"
#include "ecgraph/structure.hpp"
#include "ecgraph/supereuler.hpp"

namespace ecg {

namespace {

Json names_of(const Graph& g, const std::vector<int>& vs) {
  Json a = Json::array();
  for (int v : vs) a.push_back(g.name(v));
  return a;
}

Json pair_json(const Graph& g, const char* kind, const PairQuery& q) {
  Json j;
  j["kind"] = kind;
  j["u"] = g.name(q.u);
  j["v"] = g.name(q.v);
  j["start"] = std::string(colour_name(q.start));
  return j;
}

Json kind_only(const char* kind) {
  Json j;
  j["kind"] = kind;
  return j;
}

Json entry(const std::string& q, Json answer, const char* method) {
  Json j;
  j["question"] = q;
  j["answer"] = std::move(answer);
  j["method"] = method;
  return j;
}

void check(const Verdict& v, const char* what) {
  if (!v) throw InternalError(std::string(what) + " failed verification: " + v.violation);
}

class Analyzer {
 public:
  Analyzer(const Graph& g, const AnalyzeOptions& opt) : g_(g), opt_(opt) {
    budget_ = OracleBudget::from_env();
    budget_.max_vertices = opt.max_n;
    budget_.max_edges = opt.max_m;
  }

  Json ask(const std::string& q) {
    if (q == "m_closed") return m_closed();
    if (q == "extension_of_m_closed") return extension();
    if (q == "colour_connected") return connectivity(q, cc(), "not_colour_connected");
    if (q == "trail_colour_connected") return connectivity(q, tcc(), "not_trail_colour_connected");
    if (q == "eulerian_factor") return eulerian();
    if (q == "cycle_factor") return cycles();
    if (q == "complete_bipartite") return bipartite_entry();
    if (q == "complete_multipartite") return multipartite();
    if (q == "supereulerian") return supereulerian_entry();
    if (q == "hamiltonian") return hamiltonian_entry();
    throw std::invalid_argument("unknown question: " + q);
  }

 private:
  const std::optional<Extension>& ext() {
    if (!ext_) ext_ = is_extension_of_m_closed(g_);
    return *ext_;
  }
  const ConnectivityReport& cc() {
    // Fewer than two vertices: no pairs to connect.
    if (!cc_) cc_ = g_.n() < 2 ? ConnectivityReport{} : is_colour_connected(g_, opt_.exec);
    return *cc_;
  }
  const ConnectivityReport& tcc() {
    if (!tcc_) tcc_ = g_.n() < 2 ? ConnectivityReport{} : is_trail_colour_connected(g_, opt_.exec);
    return *tcc_;
  }
  const std::optional<EulerianFactor>& ef() {
    if (!ef_) ef_ = eulerian_factor(g_);
    return *ef_;
  }
  const std::optional<CycleFactor>& cf() {
    if (!cf_) cf_ = alternating_cycle_factor(g_);
    return *cf_;
  }
  bool bipartite() {
    if (!bip_) {
      side_.clear();
      bip_ = is_complete_bipartite(g_, &side_);
    }
    return *bip_;
  }

  Json m_closed() {
    MClosedCheck r = is_m_closed(g_);
    Json e = entry("m_closed", r.closed, "fast");
    if (r.violation) {
      auto [x, y, z] = *r.violation;
      Json c = kind_only("m_closed_violation");
      c["path"] = names_of(g_, {x, y, z});
      e["counterexample"] = std::move(c);
    }
    return e;
  }

  Json extension() {
    Json e = entry("extension_of_m_closed", ext().has_value(), "fast");
    if (ext()) {
      Json w = kind_only("extension");
      w["blocks"] = Json::array();
      for (const auto& b : ext()->blocks) w["blocks"].push_back(names_of(g_, b));
      e["witness"] = std::move(w);
    }
    return e;
  }

  Json connectivity(const std::string& q, const ConnectivityReport& r, const char* kind) {
    Json e = entry(q, r.connected, "fast");
    if (r.counterexample) e["counterexample"] = pair_json(g_, kind, *r.counterexample);
    return e;
  }

  Json eulerian() {
    Json e = entry("eulerian_factor", ef().has_value(), "fast");
    if (ef()) {
      check(verify_factor(g_, *ef()), "eulerian factor");
      e["witness"] = factor_to_json(g_, *ef());
    } else {
      e["counterexample"] = kind_only("no_eulerian_factor");
    }
    return e;
  }

  Json cycles() {
    Json e = entry("cycle_factor", cf().has_value(), "fast");
    if (cf()) {
      check(verify_factor(g_, *cf()), "cycle factor");
      e["witness"] = factor_to_json(g_, *cf());
    } else {
      e["counterexample"] = kind_only("no_cycle_factor");
    }
    return e;
  }

  Json bipartite_entry() {
    Json e = entry("complete_bipartite", bipartite(), "fast");
    if (bipartite()) {
      std::vector<int> xs, ys;
      for (int v = 0; v < g_.n(); ++v) (side_[v] == 0 ? xs : ys).push_back(v);
      Json w = kind_only("bipartition");
      w["x"] = names_of(g_, xs);
      w["y"] = names_of(g_, ys);
      e["witness"] = std::move(w);
    }
    return e;
  }

  Json multipartite() {
    auto classes = multipartite_classes(g_);
    Json e = entry("complete_multipartite", classes.has_value(), "fast");
    if (classes) {
      Json w = kind_only("classes");
      w["classes"] = Json::array();
      for (const auto& c : *classes) w["classes"].push_back(names_of(g_, c));
      e["witness"] = std::move(w);
    }
    return e;
  }

  // Decides by exhaustive search, or leaves the answer unknown.
  Json by_oracle(const std::string& q, const std::function<std::optional<Trail>(const OracleBudget&)>& search,
                 bool as_cycle) {
    if (g_.n() > budget_.max_vertices || g_.m() > budget_.max_edges) {
      Json e = entry(q, "unknown", "none");
      e["reason"] = "outside the supported class and above the oracle size limit";
      return e;
    }
    try {
      std::optional<Trail> t = search(budget_);
      Json e = entry(q, t.has_value(), "oracle");
      if (t) e["witness"] = verified(*t, as_cycle);
      return e;
    } catch (const BudgetExceeded& ex) {
      Json e = entry(q, "unknown", "oracle");
      e["reason"] = std::string("oracle budget exceeded: ") + ex.what();
      return e;
    }
  }

  Json verified(const Trail& t, bool as_cycle) {
    if (as_cycle)
      check(verify_hamiltonian_cycle(g_, t), "hamiltonian cycle");
    else
      check(verify_spanning_closed_trail(g_, t), "spanning trail");
    return trail_to_json(g_, t, as_cycle);
  }

  void oracle_witness(Json& e, bool as_cycle) {
    try {
      OracleBudget b = budget_;
      std::optional<Trail> t = as_cycle ? oracle_ham_alternating(g_, b) : oracle_supereulerian(g_, b);
      if (!t) throw InternalError("oracle found no witness for a positive decision");
      e["witness"] = verified(*t, as_cycle);
    } catch (const BudgetExceeded& ex) {
      e["witness_error"] = std::string("oracle budget exceeded: ") + ex.what();
    }
  }

  Json supereulerian_entry() {
    const std::string q = "supereulerian";
    if (g_.n() < 2) {
      Json e = entry(q, false, "fast");
      e["counterexample"] = kind_only("too_few_vertices");
      return e;
    }
    if (ext()) {
      SupereulerResult r = supereulerian(g_, opt_.exec);
      Json e = entry(q, r.kind == SupereulerResult::Kind::SpanningTrail, "fast");
      if (r.trail)
        e["witness"] = verified(*r.trail, false);
      else if (r.counterexample)
        e["counterexample"] = pair_json(g_, "not_trail_colour_connected", *r.counterexample);
      else
        e["counterexample"] = kind_only("no_eulerian_factor");
      return e;
    }
    // Both conditions are necessary for every graph.
    if (!ef()) {
      Json e = entry(q, false, "fast");
      e["counterexample"] = kind_only("no_eulerian_factor");
      return e;
    }
    if (!tcc().connected) {
      Json e = entry(q, false, "fast");
      e["counterexample"] = pair_json(g_, "not_trail_colour_connected", *tcc().counterexample);
      return e;
    }
    if (bipartite()) return bipartite_decision(q, false);
    return by_oracle(q, [&](const OracleBudget& b) { return oracle_supereulerian(g_, b); }, false);
  }

  Json hamiltonian_entry() {
    const std::string q = "hamiltonian";
    if (g_.n() < 2) {
      Json e = entry(q, false, "fast");
      e["counterexample"] = kind_only("too_few_vertices");
      return e;
    }
    if (ext()) {
      HamResult r = alternating_hamiltonian_cycle(g_, opt_.exec);
      Json e = entry(q, r.kind == HamResult::Kind::Cycle, "fast");
      if (r.cycle)
        e["witness"] = verified(*r.cycle, true);
      else if (r.counterexample)
        e["counterexample"] = pair_json(g_, "not_colour_connected", *r.counterexample);
      else
        e["counterexample"] = kind_only("no_cycle_factor");
      return e;
    }
    if (!cf()) {
      Json e = entry(q, false, "fast");
      e["counterexample"] = kind_only("no_cycle_factor");
      return e;
    }
    if (!cc().connected) {
      Json e = entry(q, false, "fast");
      e["counterexample"] = pair_json(g_, "not_colour_connected", *cc().counterexample);
      return e;
    }
    if (bipartite()) return bipartite_decision(q, true);
    return by_oracle(q, [&](const OracleBudget& b) { return oracle_ham_alternating(g_, b); }, true);
  }

  Json bipartite_decision(const std::string& q, bool ham) {
    BipartiteVerdict v = decide_complete_bipartite(g_, opt_.exec);
    bool yes = ham ? v.hamiltonian : v.supereulerian;
    Json e = entry(q, yes, "fast");
    e["reasons"] = v.reasons;
    if (yes && opt_.witness_oracle) oracle_witness(e, ham);
    return e;
  }

  const Graph& g_;
  const AnalyzeOptions& opt_;
  OracleBudget budget_;
  std::optional<std::optional<Extension>> ext_;
  std::optional<ConnectivityReport> cc_, tcc_;
  std::optional<std::optional<EulerianFactor>> ef_;
  std::optional<std::optional<CycleFactor>> cf_;
  std::optional<bool> bip_;
  std::vector<int> side_;
};

Json timed(Analyzer& a, const std::string& q, bool timing) {
  auto t0 = std::chrono::steady_clock::now();
  Json e = a.ask(q);
  if (timing)
    e["elapsed_ms"] = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return e;
}

// ---- subcommand plumbing ----

std::string read_input(const std::string& path, std::istream& in) {
  std::ostringstream ss;
  if (path == "-") {
    ss << in.rdbuf();
  } else {
    std::ifstream f(path);
    if (!f) throw ParseError("cannot open " + path);
    ss << f.rdbuf();
  }
  return ss.str();
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

void emit_graph(std::ostream& out, const Graph& g, const std::string& format, Json extra = Json::object()) {
  if (format == "dot") {
    out << serialize_graph(g, Format::Dot);
    return;
  }
  Json j = graph_to_json(g);
  for (auto& [k, v] : extra.items()) j[k] = v;
  emit(out, j);
}

int exit_for(const Json& e) {
  const Json& a = e["answer"];
  if (a.is_boolean()) return a.get<bool>() ? kExitOk : kExitNegative;
  return e["method"] == "oracle" ? kExitBudget : kExitUnsupported;
}

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      size_t used = 0;
      out.push_back(std::stoi(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw std::invalid_argument("not an integer list: " + s);
    }
  }
  return out;
}

Json digraph_to_json(const BipartiteDigraph& d) {
  Json j;
  j["kind"] = "bipartite_digraph";
  j["vertices"] = Json::array();
  for (size_t v = 0; v < d.names.size(); ++v) {
    Json x;
    x["id"] = d.names[v];
    x["side"] = d.in_x[v] ? "X" : "Y";
    j["vertices"].push_back(std::move(x));
  }
  j["arcs"] = Json::array();
  for (size_t a = 0; a < d.arcs.size(); ++a) {
    Json x;
    x["id"] = d.arc_ids[a];
    x["from"] = d.names[d.arcs[a].first];
    x["to"] = d.names[d.arcs[a].second];
    j["arcs"].push_back(std::move(x));
  }
  return j;
}

BipartiteDigraph digraph_from_json(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  BipartiteDigraph d;
  std::map<std::string, int> index;
  try {
    for (const Json& v : j.at("vertices")) {
      std::string id = v.at("id").get<std::string>();
      std::string side = v.at("side").get<std::string>();
      if (side != "X" && side != "Y") throw ParseError("side of " + id + " must be X or Y");
      if (!index.emplace(id, static_cast<int>(d.names.size())).second) throw ParseError("duplicate vertex " + id);
      d.names.push_back(id);
      d.in_x.push_back(side == "X");
    }
    for (const Json& a : j.at("arcs")) {
      auto end = [&](const char* key) {
        std::string id = a.at(key).get<std::string>();
        auto it = index.find(id);
        if (it == index.end()) throw ParseError("arc names unknown vertex " + id);
        return it->second;
      };
      int from = end("from"), to = end("to");
      if (d.in_x[from] == d.in_x[to]) throw ParseError("arc inside one side");
      d.arcs.emplace_back(from, to);
      d.arc_ids.push_back(a.at("id").get<std::string>());
    }
  } catch (const Json::exception& e) {
    throw ParseError(std::string("malformed digraph: ") + e.what());
  }
  return d;
}

ClosurePolicy policy_from(const std::string& s) {
  if (s == "red") return ClosurePolicy::AlwaysRed;
  if (s == "blue") return ClosurePolicy::AlwaysBlue;
  return ClosurePolicy::SeededRandom;
}

}  // namespace

const std::vector<std::string>& analysis_questions() {
  static const std::vector<std::string> qs = {
      "m_closed",      "extension_of_m_closed", "colour_connected",      "trail_colour_connected",
      "eulerian_factor", "cycle_factor",        "complete_bipartite",    "complete_multipartite",
      "supereulerian", "hamiltonian"};
  return qs;
}

Json analyze(const Graph& g, const AnalyzeOptions& opt) {
  Analyzer a(g, opt);
  Json report;
  report["vertices"] = g.n();
  report["edges"] = g.m();
  report["questions"] = Json::array();
  for (const auto& q : analysis_questions()) report["questions"].push_back(timed(a, q, opt.timing));
  return report;
}

Json analyze_question(const Graph& g, const std::string& question, const AnalyzeOptions& opt) {
  Analyzer a(g, opt);
  return timed(a, question, opt.timing);
}

std::string analysis_table(const Json& report) {
  std::ostringstream os;
  os << std::left << std::setw(24) << "question" << std::setw(9) << "answer" << std::setw(8) << "method"
     << "detail\n";
  for (const Json& e : report.at("questions")) {
    const Json& a = e.at("answer");
    std::string answer = a.is_boolean() ? (a.get<bool>() ? "yes" : "no") : a.get<std::string>();
    std::string detail;
    if (e.contains("counterexample")) {
      const Json& c = e["counterexample"];
      detail = c.at("kind").get<std::string>();
      if (c.contains("u"))
        detail += " (" + c["u"].get<std::string>() + ", " + c["v"].get<std::string>() + ", " +
                  c["start"].get<std::string>() + ")";
    } else if (e.contains("witness")) {
      const Json& w = e["witness"];
      detail = w.at("kind").get<std::string>();
      if (w.contains("edges")) detail += " of length " + std::to_string(w["edges"].size());
    } else if (e.contains("reason")) {
      detail = e["reason"].get<std::string>();
    }
    os << std::setw(24) << e.at("question").get<std::string>() << std::setw(9) << answer << std::setw(8)
       << e.at("method").get<std::string>() << detail << "\n";
  }
  return os.str();
}

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Supereulerian and alternating hamiltonian analysis of 2-edge-coloured multigraphs", "ecgraph"};
  app.require_subcommand(1);

  std::string file = "-";
  bool json = false;
  AnalyzeOptions opt;
  std::string witness;
  auto common = [&](CLI::App* sub, bool with_oracle) {
    sub->add_option("file", file, "graph JSON, - for stdin");
    if (with_oracle) {
      sub->add_option("--max-n", opt.max_n, "vertex limit of the oracle fallback");
      sub->add_option("--max-m", opt.max_m, "edge limit of the oracle fallback");
    }
  };

  auto* analyze_cmd = app.add_subcommand("analyze", "report every decision question");
  common(analyze_cmd, true);
  analyze_cmd->add_flag("--json", json, "JSON instead of a table");
  analyze_cmd->add_flag("--timing", opt.timing, "per-question elapsed time");
  analyze_cmd->add_option("--witness", witness, "oracle: exhaustive witness where none is constructed")
      ->check(CLI::IsMember({"oracle"}));

  auto* se_cmd = app.add_subcommand("supereulerian", "spanning closed alternating trail");
  auto* ham_cmd = app.add_subcommand("hamiltonian", "alternating hamiltonian cycle");
  for (auto* s : {se_cmd, ham_cmd}) {
    common(s, true);
    s->add_flag("--json", json, "accepted for uniformity; output is always JSON");
    s->add_option("--witness", witness, "oracle: exhaustive witness where none is constructed")
        ->check(CLI::IsMember({"oracle"}));
  }

  std::string from, to, start = "red";
  bool trails = false;
  auto* conn_cmd = app.add_subcommand("connectivity", "(trail-)colour-connectivity");
  common(conn_cmd, false);
  conn_cmd->add_flag("--json", json, "accepted for uniformity");
  conn_cmd->add_flag("--trail", trails, "trails instead of paths for --from/--to");
  conn_cmd->add_option("--from", from, "single query source");
  conn_cmd->add_option("--to", to, "single query target");
  conn_cmd->add_option("--start", start, "first colour")->check(CLI::IsMember({"red", "blue"}));

  bool cycle = false, forbid_digons = false;
  auto* factor_cmd = app.add_subcommand("factor", "eulerian factor or alternating cycle factor");
  common(factor_cmd, false);
  factor_cmd->add_flag("--json", json, "accepted for uniformity");
  factor_cmd->add_flag("--cycle", cycle, "alternating cycle factor");
  factor_cmd->add_flag("--forbid-digons", forbid_digons, "cycle factor without 2-cycles");
  factor_cmd->add_option("--max-n", opt.max_n, "vertex limit of the digon-free search");

  std::string kind, mult = "2", policy = "random", format = "json";
  std::uint64_t seed = 0;
  auto* tr_cmd = app.add_subcommand("transform", "graph transforms");
  tr_cmd->add_option("kind", kind)
      ->required()
      ->check(CLI::IsMember(
          {"np-reduce", "np-reduce-gadget", "bb-to-digraph", "bb-from-digraph", "blowup", "quotient", "mclosure"}));
  tr_cmd->add_option("file", file, "input, - for stdin");
  tr_cmd->add_option("--mult", mult, "blowup multiplicity, one value or one per vertex (comma separated)");
  tr_cmd->add_option("--policy", policy, "mclosure colour choice")->check(CLI::IsMember({"red", "blue", "random"}));
  tr_cmd->add_option("--seed", seed);
  tr_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "dot"}));

  std::string fixture_name;
  bool list = false;
  auto* fx_cmd = app.add_subcommand("fixture", "built-in example graphs");
  fx_cmd->add_option("name", fixture_name);
  fx_cmd->add_flag("--list", list);
  fx_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "dot"}));

  std::string model = "mclosed_blowup";
  GenParams gp;
  bool simple = false;
  auto* rnd_cmd = app.add_subcommand("random", "seeded random graphs");
  rnd_cmd->add_option("--model", model)
      ->check(CLI::IsMember(
          {"random_2ec", "mclosed_blowup", "complete_bipartite", "complete_multipartite", "cmg_family"}));
  rnd_cmd->add_option("--seed", seed);
  rnd_cmd->add_option("--n", gp.n);
  rnd_cmd->add_option("--m", gp.m);
  rnd_cmd->add_flag("--simple", simple, "no parallel edges (random_2ec)");
  rnd_cmd->add_option("--parts", gp.parts, "class sizes")->delimiter(',');
  rnd_cmd->add_option("--r", gp.r);
  rnd_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "dot"}));

  std::string question;
  auto* or_cmd = app.add_subcommand("oracle", "exhaustive reference answers");
  or_cmd->add_option("question", question)
      ->required()
      ->check(CLI::IsMember({"supereulerian", "ham", "hamiltonian", "eulerian-factor", "cycle-factor",
                             "colour-connected", "trail-colour-connected"}));
  common(or_cmd, true);

  std::vector<std::string> argv_store{"ecgraph"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }
  opt.witness_oracle = witness == "oracle";

  try {
    auto load = [&] { return parse_graph(read_input(file, in)); };

    if (*analyze_cmd) {
      Json report = analyze(load(), opt);
      if (json)
        emit(out, report);
      else
        out << analysis_table(report);
      return kExitOk;
    }
    if (*se_cmd || *ham_cmd) {
      Json e = analyze_question(load(), *se_cmd ? "supereulerian" : "hamiltonian", opt);
      emit(out, e);
      return exit_for(e);
    }
    if (*conn_cmd) {
      Graph g = load();
      if (from.empty() != to.empty()) throw std::invalid_argument("--from and --to go together");
      if (!from.empty()) {
        int x = g.vertex(from), y = g.vertex(to);
        Colour c = *colour_from_name(start);
        std::optional<Trail> t = trails ? alternating_trail(g, x, y, c) : alternating_path(g, x, y, c);
        Json j;
        j["query"] = trails ? "trail" : "path";
        j["from"] = from;
        j["to"] = to;
        j["start"] = start;
        j["answer"] = t.has_value();
        if (t) j["witness"] = trail_to_json(g, *t);
        emit(out, j);
        return t ? kExitOk : kExitNegative;
      }
      Json j;
      j["questions"] = Json::array();
      bool ok = true;
      for (const char* q : {"colour_connected", "trail_colour_connected"}) {
        Json e = analyze_question(g, q, opt);
        ok = ok && e["answer"].get<bool>();
        j["questions"].push_back(std::move(e));
      }
      emit(out, j);
      return ok ? kExitOk : kExitNegative;
    }
    if (*factor_cmd) {
      Graph g = load();
      Json e;
      if (cycle) {
        std::optional<CycleFactor> f = alternating_cycle_factor(g, forbid_digons, opt.max_n);
        e = entry(forbid_digons ? "digon_free_cycle_factor" : "cycle_factor", f.has_value(), "fast");
        if (f) {
          check(verify_factor(g, *f), "cycle factor");
          e["witness"] = factor_to_json(g, *f);
        } else {
          e["counterexample"] = kind_only("no_cycle_factor");
        }
      } else {
        e = analyze_question(g, "eulerian_factor", opt);
      }
      emit(out, e);
      return exit_for(e);
    }
    if (*tr_cmd) {
      std::string text = read_input(file, in);
      if (kind == "bb-from-digraph") {
        emit_graph(out, bb_from_digraph(digraph_from_json(text)), format);
        return kExitOk;
      }
      Graph g = parse_graph(text);
      if (kind == "np-reduce" || kind == "np-reduce-gadget") {
        ReductionMap r =
            reduce_ham_to_supereulerian(g, kind == "np-reduce" ? ReductionVariant::Basic : ReductionVariant::Gadget);
        Json prov = Json::array();
        for (int v = 0; v < r.graph.n(); ++v) {
          Json p;
          p["vertex"] = r.graph.name(v);
          p["source"] = g.name(r.provenance[v].source);
          p["role"] = r.provenance[v].role;
          prov.push_back(std::move(p));
        }
        Json extra;
        extra["provenance"] = std::move(prov);
        emit_graph(out, r.graph, format, extra);
      } else if (kind == "bb-to-digraph") {
        emit(out, digraph_to_json(bb_to_digraph(g)));
      } else if (kind == "blowup") {
        std::vector<int> m = parse_int_list(mult);
        if (m.size() == 1) m.assign(g.n(), m[0]);
        if (static_cast<int>(m.size()) != g.n()) throw std::invalid_argument("--mult needs one value or one per vertex");
        BlowUp b = blow_up(g, m);
        Json prov = Json::array();
        for (int v = 0; v < b.graph.n(); ++v) {
          Json p;
          p["vertex"] = b.graph.name(v);
          p["source"] = g.name(b.origin[v].first);
          p["copy"] = b.origin[v].second;
          prov.push_back(std::move(p));
        }
        Json extra;
        extra["provenance"] = std::move(prov);
        emit_graph(out, b.graph, format, extra);
      } else if (kind == "quotient") {
        SimilarityPartition p = similarity_partition(g);
        Json extra;
        extra["multiplicity"] = p.multiplicity;
        extra["blocks"] = Json::array();
        for (const auto& b : p.blocks) extra["blocks"].push_back(names_of(g, b));
        emit_graph(out, p.quotient, format, extra);
      } else {
        emit_graph(out, m_closure(g, policy_from(policy), seed), format);
      }
      return kExitOk;
    }
    if (*fx_cmd) {
      if (list) {
        for (const auto& n : fixture_names()) out << n << "\n";
        return kExitOk;
      }
      if (fixture_name.empty()) throw std::invalid_argument("fixture needs a name (see --list)");
      emit_graph(out, fixture(fixture_name), format);
      return kExitOk;
    }
    if (*rnd_cmd) {
      gp.parallel = !simple;
      emit_graph(out, generate(model, seed, gp), format);
      return kExitOk;
    }
    if (*or_cmd) {
      Graph g = load();
      OracleBudget b = OracleBudget::from_env();
      b.max_vertices = opt.max_n;
      b.max_edges = opt.max_m;
      Json j;
      j["question"] = question;
      if (question == "supereulerian" || question == "ham" || question == "hamiltonian") {
        bool ham = question != "supereulerian";
        std::optional<Trail> t = ham ? oracle_ham_alternating(g, b) : oracle_supereulerian(g, b);
        j["answer"] = t.has_value();
        if (t) j["witness"] = trail_to_json(g, *t, ham);
      } else if (question == "eulerian-factor") {
        auto f = oracle_eulerian_factor(g, b);
        j["answer"] = f.has_value();
        if (f) j["witness"] = factor_to_json(g, *f);
      } else if (question == "cycle-factor") {
        auto f = oracle_cycle_factor(g, b);
        j["answer"] = f.has_value();
        if (f) j["witness"] = factor_to_json(g, *f);
      } else if (question == "colour-connected") {
        j["answer"] = oracle_colour_connected(g, b);
      } else {
        j["answer"] = oracle_trail_colour_connected(g, b);
      }
      emit(out, j);
      return kExitOk;
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UnsupportedClass& e) {
    err << "unsupported: " << e.what() << "\n";
    return kExitUnsupported;
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return kExitBudget;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitUsage;
}

}  // namespace ecg

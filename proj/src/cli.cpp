#include "ocreason/cli.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "ocreason/assumptions.hpp"
#include "ocreason/bcs.hpp"
#include "ocreason/closedness.hpp"
#include "ocreason/errors.hpp"
#include "ocreason/fixtures.hpp"
#include "ocreason/io.hpp"
#include "ocreason/random_instances.hpp"
#include "ocreason/reductions.hpp"
#include "ocreason/si.hpp"

namespace ocreason {

namespace {

namespace fs = std::filesystem;
using io::Json;

constexpr int kOk = 0;
constexpr int kError = 1;
constexpr int kEmpty = 2;
constexpr int kNo = 3;

// Everything printed in text mode is also kept in `lines`, so the JSON report
// never has less than the terminal.
class Report {
 public:
  Report(std::ostream& out, std::ostream& err) : out_(&out), err_(err) {}

  // Keeps stdout clean when a document is written there.
  void text_to_stderr() { out_ = &err_; }

  void say(const std::string& line) {
    *out_ << line << '\n';
    lines_.push_back(line);
  }
  void warn(const std::string& message) {
    err_ << "warning: " << message << '\n';
    warnings_.push_back(message);
  }
  Json& data() { return data_; }

  Json finish(const std::vector<std::string>& args, int exit_code, double seconds) const {
    Json j = data_;
    j["command"] = args;
    j["exit_code"] = exit_code;
    j["text"] = lines_;
    j["warnings"] = warnings_;
    j["timing"] = {{"seconds", seconds}};
    return j;
  }

 private:
  std::ostream* out_;
  std::ostream& err_;
  Json data_ = Json::object();
  Json lines_ = Json::array();
  Json warnings_ = Json::array();
};

std::string join(const std::vector<std::string>& items, const std::string& sep) {
  std::string s;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) s += sep;
    s += items[i];
  }
  return s;
}

std::string assignment_text(const Assignment& a, const Bcs& bcs) {
  std::vector<std::string> parts;
  for (std::size_t i = 0; i < a.size(); ++i) {
    parts.push_back(bcs.variable(i).id + "=" + bcs.variable(i).domain.at(a[i]));
  }
  return join(parts, " ");
}

std::string relation_text(const Correspondence& c, const std::vector<Variable>& vars,
                          std::size_t i, std::size_t j) {
  std::vector<std::string> pairs;
  for (auto [x, y] : c.pairs()) {
    pairs.push_back("(" + vars[i].domain[x] + " | " + vars[j].domain[y] + ")");
  }
  return "{" + join(pairs, ", ") + "}";
}

Preference preference_for(const std::string& spec, const io::Instance& inst) {
  if (spec == "pareto") {
    if (inst.games.empty()) throw InputError("--pref pareto needs a game-backed instance");
    return pareto_preference(inst.games);
  }
  if (spec.rfind("player:", 0) == 0) {
    if (inst.games.empty()) throw InputError("--pref player:N needs a game-backed instance");
    std::size_t player = 0;
    try {
      player = std::stoul(spec.substr(7));
    } catch (const std::exception&) {
      throw InputError("bad player in --pref '" + spec + "'");
    }
    if (player == 0) throw InputError("players are numbered from 1");
    return player_preference(inst.games, player - 1);
  }
  return io::preference_from_json(io::read_json(spec), inst);
}

struct SiFlags {
  std::string pref = "pareto";
  bool strict = false;
  std::string mode = "exact";
  std::string orders;
  std::string joins;
};

void add_si_flags(CLI::App* cmd, SiFlags& f) {
  cmd->add_option("--pref", f.pref, "pareto | player:N | preference file")->capture_default_str();
  cmd->add_flag("--strict", f.strict, "require strict improvement");
  cmd->add_option("--mode", f.mode, "exact | propagation | refutation")->capture_default_str();
  cmd->add_option("--orders", f.orders, "max-closedness certificate (orders file)");
  cmd->add_option("--joins", f.joins, "join-closedness certificate (semilattice file)");
}

SiCertificate certificate_for(const SiFlags& f, const Bcs& bcs) {
  SiCertificate cert;
  if (!f.orders.empty()) cert.orders = io::orders_from_json(io::read_json(f.orders), bcs);
  if (!f.joins.empty()) cert.joins = io::joins_from_json(io::read_json(f.joins), bcs);
  return cert;
}

void warn_uncertified(Report& r, SiMode mode, bool certified) {
  if (mode != SiMode::exact && !certified) {
    r.warn(std::string("completeness not certified: a 'no' from ") + to_string(mode) +
           " mode may be wrong; supply " +
           (mode == SiMode::propagation ? "--orders" : "--joins or --orders") + " to certify");
  }
}

int cmd_propagate(Report& r, const std::string& input, const std::string& dump_path) {
  auto inst = io::load_instance(input);
  const auto& bcs = inst.bcs;
  auto start = initial_relations(bcs);
  auto fixed = path_consistency(bcs);
  const auto& vars = fixed.variables;

  r.say("variables: " + std::to_string(bcs.size()) +
        ", constraints: " + std::to_string(bcs.constraints().size()));
  r.say("passes: " + std::to_string(fixed.passes));
  r.data()["passes"] = fixed.passes;

  Json narrowed = Json::array();
  for (std::size_t i = 0; i < vars.size(); ++i) {
    for (std::size_t j = i; j < vars.size(); ++j) {
      const auto& before = start.relations[i][j];
      const auto& after = fixed.relations[i][j];
      if (before == after) continue;
      r.say("narrowed " + vars[i].id + " -> " + vars[j].id + ": " +
            std::to_string(before.count()) + " -> " + std::to_string(after.count()) +
            " pairs " + relation_text(after, vars, i, j));
      narrowed.push_back({{"x", vars[i].id},
                          {"y", vars[j].id},
                          {"before", before.count()},
                          {"after", after.count()}});
    }
  }
  if (narrowed.empty()) r.say("no narrowing");
  r.data()["narrowed"] = narrowed;

  Json excluded = Json::object();
  auto ex = fixed.excluded_values();
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (ex[i].empty()) continue;
    std::vector<std::string> labels;
    for (auto v : ex[i]) labels.push_back(vars[i].domain[v]);
    r.say("excluded values of " + vars[i].id + ": " + join(labels, " "));
    excluded[vars[i].id] = labels;
  }
  r.data()["excluded"] = excluded;
  r.data()["empty"] = fixed.has_empty;

  if (!dump_path.empty()) {
    io::write_json(dump_path, io::bcs_to_json(fixed.to_bcs()));
    r.say("propagated structure written to " + dump_path);
    r.data()["dump"] = dump_path;
  }
  if (fixed.has_empty) {
    r.say("empty correspondence derived: the structure is unsatisfiable");
    return kEmpty;
  }
  return kOk;
}

int cmd_solve(Report& r, const std::string& input, std::optional<std::size_t> limit) {
  auto inst = io::load_instance(input);
  auto sols = enumerate_satisfying(inst.bcs, limit);
  Json list = Json::array();
  for (const auto& a : sols) {
    r.say(assignment_text(a, inst.bcs));
    list.push_back(io::assignment_to_json(a, inst.bcs));
  }
  r.data()["assignments"] = list;
  r.data()["count"] = sols.size();
  r.data()["satisfiable"] = !sols.empty();
  bool truncated = limit && sols.size() == *limit;
  r.data()["truncated"] = truncated;
  r.say("satisfying assignments: " + std::to_string(sols.size()) +
        (truncated ? " (limit reached)" : ""));
  if (sols.empty()) r.say("unsatisfiable");
  return sols.empty() ? kNo : kOk;
}

int cmd_check_si(Report& r, const std::string& input, std::vector<std::string> pair,
                 const SiFlags& f) {
  auto inst = io::load_instance(input);
  if (pair.empty()) {
    if (!inst.pair) throw InputError("no pair given and the instance designates none");
    pair = {inst.pair->first, inst.pair->second};
  }
  if (pair.size() != 2) throw InputError("check-si takes exactly two variable ids");
  const auto& x = pair[0];
  const auto& y = pair[1];
  inst.bcs.require(x);
  inst.bcs.require(y);
  auto pref = preference_for(f.pref, inst);
  auto mode = parse_si_mode(f.mode);
  auto verdict = decide_si(inst.bcs, x, y, pref, f.strict, mode, certificate_for(f, inst.bcs));

  std::string kind = f.strict ? "strict safe improvement" : "safe improvement";
  r.say(y + (verdict.yes ? " is a " : " is not shown to be a ") + kind + " on " + x + " (mode " +
        to_string(mode) + ")");
  r.data()["x"] = x;
  r.data()["y"] = y;
  r.data()["strict"] = f.strict;
  r.data()["mode"] = to_string(mode);
  r.data()["verdict"] = verdict.yes ? "yes" : "no";
  r.data()["certified"] = verdict.certified;
  if (verdict.counterexample) {
    r.say("counterexample: " + assignment_text(*verdict.counterexample, inst.bcs));
    r.data()["counterexample"] = io::assignment_to_json(*verdict.counterexample, inst.bcs);
  }
  warn_uncertified(r, mode, verdict.certified);
  return verdict.yes ? kOk : kNo;
}

int cmd_find_si(Report& r, const std::string& input, const std::string& on, const SiFlags& f) {
  auto inst = io::load_instance(input);
  auto pref = preference_for(f.pref, inst);
  auto mode = parse_si_mode(f.mode);
  auto cert = certificate_for(f, inst.bcs);
  std::vector<std::pair<std::string, std::string>> found;
  if (!on.empty()) {
    inst.bcs.require(on);
    for (auto& y : find_si_on(inst.bcs, on, pref, f.strict, mode, cert)) found.emplace_back(on, y);
  } else {
    found = find_any_si(inst.bcs, pref, f.strict, mode, cert);
  }
  Json list = Json::array();
  for (const auto& [x, y] : found) {
    r.say(y + " improves on " + x);
    list.push_back({{"x", x}, {"y", y}});
  }
  r.data()["improvements"] = list;
  r.data()["mode"] = to_string(mode);
  r.data()["strict"] = f.strict;
  r.say("improvements found: " + std::to_string(found.size()));
  bool certified = mode == SiMode::exact || (mode == SiMode::propagation && cert.orders) ||
                   (mode == SiMode::refutation && (cert.joins || cert.orders));
  warn_uncertified(r, mode, certified);
  return found.empty() ? kNo : kOk;
}

void report_witness(Report& r, const Bcs& bcs, const ClosednessReport& rep) {
  r.data()["closed"] = rep.closed;
  if (rep.closed) {
    r.say("closed");
    return;
  }
  const auto& w = *rep.witness;
  const auto& c = bcs.constraints().at(w.constraint);
  const auto& dx = bcs.variable(bcs.require(c.source())).domain;
  const auto& dy = bcs.variable(bcs.require(c.target())).domain;
  auto p = [&](Correspondence::Pair q) { return "(" + dx[q.first] + " | " + dy[q.second] + ")"; };
  r.say("violated: constraint " + std::to_string(w.constraint) + " " + c.source() + " -> " +
        c.target() + " has " + p(w.first) + " and " + p(w.second) + " but not " + p(w.missing));
  r.data()["witness"] = {{"constraint", w.constraint},
                         {"source", c.source()},
                         {"target", c.target()},
                         {"first", {dx[w.first.first], dy[w.first.second]}},
                         {"second", {dx[w.second.first], dy[w.second.second]}},
                         {"missing", {dx[w.missing.first], dy[w.missing.second]}}};
}

void say_orders(Report& r, const VariableOrder& orders, const Bcs& bcs) {
  for (const auto& [id, asc] : orders.ascending) {
    const auto& dom = bcs.variable(bcs.require(id)).domain;
    std::vector<std::string> labels;
    for (auto v : asc) labels.push_back(dom[v]);
    r.say(id + ": " + join(labels, " < "));
  }
  r.data()["orders"] = io::orders_to_json(orders, bcs)["orders"];
}

int cmd_closedness(Report& r, const std::string& input, const std::string& orders_path,
                   bool search, const std::string& joins_path, bool from_assumptions,
                   const std::string& orders_out) {
  auto inst = io::load_instance(input);
  const auto& bcs = inst.bcs;
  int chosen = !orders_path.empty() + search + !joins_path.empty() + from_assumptions;
  if (chosen != 1) {
    throw InputError("closedness needs exactly one of --orders, --search, --joins, --from-assumptions");
  }
  if (!joins_path.empty()) {
    auto joins = io::joins_from_json(io::read_json(joins_path), bcs);
    validate_joins(bcs, joins);
    r.data()["kind"] = "join";
    auto rep = is_join_closed(bcs, joins);
    report_witness(r, bcs, rep);
    return rep.closed ? kOk : kNo;
  }
  std::optional<VariableOrder> orders;
  if (!orders_path.empty()) {
    orders = io::orders_from_json(io::read_json(orders_path), bcs);
  } else if (from_assumptions) {
    orders = orders_for_assumptions(inst.games, bcs);
  } else {
    for (const auto& v : bcs.variables()) {
      if (v.domain.size() > 6) {
        r.warn("order search over domain of size " + std::to_string(v.domain.size()) + " (" +
               v.id + ") may take long");
        break;
      }
    }
    orders = search_max_orders(bcs);
    if (!orders) {
      r.data()["kind"] = "max";
      r.data()["closed"] = false;
      r.say("no certifying orders exist");
      return kNo;
    }
    r.say("certifying orders found");
  }
  r.data()["kind"] = "max";
  auto rep = is_max_closed(bcs, *orders);
  if (rep.closed) {
    say_orders(r, *orders, bcs);
    if (!orders_out.empty()) {
      io::write_json(orders_out, io::orders_to_json(*orders, bcs));
      r.say("orders written to " + orders_out);
    }
  }
  report_witness(r, bcs, rep);
  return rep.closed ? kOk : kNo;
}

std::string labeling_text(const RiskLabeling& l) {
  return "high (" + join(l.high, ",") + ") low (" + join(l.low, ",") + ")";
}

int cmd_assume(Report& r, const std::vector<std::string>& files, const std::string& selection_path,
               bool dominance, bool isomorphism, bool nash, bool labelings,
               const std::string& out_path, std::ostream& out) {
  std::vector<NormalFormGame> games;
  for (const auto& f : files) {
    games.push_back(io::game_from_json(io::read_json(f), fs::path(f).stem().string()));
  }
  if (labelings) {
    Json list = Json::object();
    for (const auto& g : games) {
      Json entries = Json::array();
      for (const auto& l : candidate_risk_labelings(g)) {
        r.say(g.id() + ": " + labeling_text(l));
        entries.push_back({{"high", l.high}, {"low", l.low}});
      }
      if (entries.empty()) r.say(g.id() + ": no labeling");
      list[g.id()] = entries;
    }
    r.data()["labelings"] = list;
    return kOk;
  }
  AssumptionSelection sel;
  if (!selection_path.empty()) {
    if (dominance || isomorphism || nash) {
      throw InputError("--selection cannot be combined with --dominance/--isomorphism/--nash");
    }
    sel = io::selection_from_json(io::read_json(selection_path));
  } else {
    sel.dominance = dominance;
    sel.isomorphism = isomorphism;
    sel.nash = nash;
  }
  if (out_path.empty()) r.text_to_stderr();
  io::Instance inst;
  inst.games = games;
  inst.bcs = build_assumption_bcs(games, sel);
  auto doc = io::instance_to_json(inst);
  r.say("games: " + std::to_string(games.size()) +
        ", constraints: " + std::to_string(inst.bcs.constraints().size()));
  Json cs = Json::array();
  for (const auto& c : inst.bcs.constraints()) {
    r.say("constraint " + c.source() + " -> " + c.target() + " with " +
          std::to_string(c.count()) + " pairs");
    cs.push_back({{"source", c.source()}, {"target", c.target()}, {"pairs", c.count()}});
  }
  r.data()["constraints"] = cs;
  if (out_path.empty()) {
    out << io::dump(doc);
  } else {
    io::write_json(out_path, doc);
    r.say("written to " + out_path);
    r.data()["output"] = out_path;
  }
  return kOk;
}

struct GenFlags {
  std::string name;
  std::string out;
  std::string source;
  bool epsilon = false;
  std::string variable;
  std::string value;
  std::string switch_id = "X0";
  std::string joins_out;
  std::string orders_out;
  std::size_t variables = 4;
  std::size_t domain = 3;
};

Json game_instance_json(const std::vector<NormalFormGame>& games, const AssumptionSelection& sel,
                        const std::string& x, const std::string& y) {
  Json list = Json::array();
  for (const auto& g : games) list.push_back(io::game_to_json(g));
  return Json{{"games", std::move(list)},
              {"assumptions", io::selection_to_json(sel)},
              {"pair", {{"x", x}, {"y", y}}}};
}

int cmd_gen(Report& r, const GenFlags& f, std::uint64_t seed, std::ostream& out) {
  Json doc;
  std::optional<Bcs> bcs;  // for --orders-out
  std::optional<Json> semilattices;
  std::optional<VariableOrder> orders;
  auto need_source = [&]() {
    if (f.source.empty()) throw InputError("gen " + f.name + " needs --source");
    return io::load_instance(f.source).bcs;
  };
  RandomBcsOptions ropts;
  ropts.min_variables = ropts.max_variables = f.variables;
  ropts.max_domain = f.domain;
  if (f.out.empty()) r.text_to_stderr();

  if (f.name == "montanari") {
    doc = io::bcs_to_json(montanari_instance());
  } else if (f.name == "join-incompleteness") {
    auto ji = join_incompleteness_instance();
    doc = io::bcs_to_json(ji.bcs);
    semilattices = io::semilattices_to_json(ji.edges);
  } else if (f.name == "trio") {
    AssumptionSelection sel;
    sel.dominance = true;
    sel.isomorphism = true;
    doc = game_instance_json({fixtures::chicken_with_dominated_row(), fixtures::chicken(),
                              fixtures::chicken_scaled()},
                             sel, "Gamma_a", "Gamma_c");
  } else if (f.name == "decreasing-risk") {
    auto g1 = fixtures::risky_coordination();
    auto g2 = fixtures::safer_coordination();
    AssumptionSelection sel;
    sel.nash = true;
    RiskLabeling l{{"aH", "aH"}, {"aL", "aL"}};
    sel.decreasing_risk.push_back({g1.id(), g2.id(), l, l});
    doc = game_instance_json({g1, g2}, sel, g1.id(), g2.id());
  } else if (f.name == "csp-to-si") {
    auto inst = csp_to_si_games(need_source(), f.epsilon);
    Json games = Json::array();
    for (const auto& g : inst.games) games.push_back(io::game_to_json(g));
    auto b = inst.bcs();
    Json cs = Json::array();
    for (const auto& c : b.constraints()) cs.push_back(io::correspondence_to_json(c, b));
    doc = Json{{"games", games},
               {"constraints", cs},
               {"pair", {{"x", inst.gamma}, {"y", inst.gamma_prime}}}};
    r.say("games: " + std::to_string(inst.games.size()) +
          ", assumptions: " + std::to_string(inst.assumptions.size()));
    r.say("query: is " + inst.gamma_prime + " a safe Pareto improvement on " + inst.gamma +
          " (yes iff the source is unsatisfiable)");
  } else if (f.name == "augment") {
    auto aug = augment_always_satisfiable(need_source(), f.switch_id);
    doc = io::bcs_to_json(aug.bcs);
    r.say("anchor: " + aug.anchor_variable + "=" + aug.anchor_value);
    r.data()["anchor"] = {aug.anchor_variable, aug.anchor_value};
    r.data()["off_values"] = aug.off_values;
  } else if (f.name == "implication") {
    if (f.variable.empty() || f.value.empty()) {
      throw InputError("gen implication needs --variable and --value");
    }
    auto imp = implication_instance(need_source(), f.variable, f.value);
    doc = io::bcs_to_json(imp.bcs);
    bool holds = implies(imp.bcs, imp.claim());
    r.say("query: " + imp.x0 + "=0 forces " + imp.indicator + "=0");
    r.say(std::string("query holds: ") + (holds ? "yes" : "no"));
    r.data()["query"] = {{"x", imp.x0}, {"y", imp.indicator}, {"pairs", {{"0", "0"}}}};
    r.data()["query_holds"] = holds;
  } else if (f.name == "random") {
    Rng rng(seed);
    doc = io::bcs_to_json(random_bcs(rng, ropts));
  } else if (f.name == "random-max-closed") {
    Rng rng(seed);
    auto inst = random_max_closed_bcs(rng, ropts);
    doc = io::bcs_to_json(inst.bcs);
    bcs = inst.bcs;
    orders = inst.orders;
  } else if (f.name == "random-join-closed") {
    Rng rng(seed);
    ropts.max_domain = std::min<std::size_t>(f.domain, 5);
    auto inst = random_join_closed_bcs(rng, ropts);
    doc = io::bcs_to_json(inst.bcs);
    std::map<std::string, std::vector<std::pair<std::string, std::string>>> edges;
    for (const auto& [id, table] : inst.joins.tables) {
      edges[id] = hasse_edges(inst.bcs.variable(inst.bcs.require(id)).domain, table);
    }
    semilattices = io::semilattices_to_json(edges);
  } else {
    throw InputError("unknown generator '" + f.name + "'");
  }
  r.data()["generator"] = f.name;

  if (!f.joins_out.empty()) {
    if (!semilattices) throw InputError("generator '" + f.name + "' has no semilattices");
    io::write_json(f.joins_out, *semilattices);
    r.say("semilattices written to " + f.joins_out);
  }
  if (!f.orders_out.empty()) {
    if (!orders) throw InputError("generator '" + f.name + "' has no orders");
    io::write_json(f.orders_out, io::orders_to_json(*orders, *bcs));
    r.say("orders written to " + f.orders_out);
  }
  if (f.out.empty()) {
    out << io::dump(doc);
  } else {
    io::write_json(f.out, doc);
    r.say("written to " + f.out);
    r.data()["output"] = f.out;
  }
  return kOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Outcome-correspondence reasoning about safe improvements between games",
               "oc-reason"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string json_path;
  std::uint64_t seed = 0;
  app.add_option("--json", json_path, "also write the report as JSON");
  app.add_option("--seed", seed, "seed for random generators")->capture_default_str();

  std::string input;
  std::string dump_path;
  auto* propagate = app.add_subcommand("propagate", "path-consistency fixed point");
  propagate->add_option("input", input, "structure file")->required();
  propagate->add_option("--dump", dump_path, "write the propagated structure");

  std::size_t limit = 0;
  auto* solve = app.add_subcommand("solve", "enumerate satisfying assignments");
  solve->add_option("input", input, "structure file")->required();
  auto* limit_opt = solve->add_option("--limit", limit, "stop after this many");

  SiFlags si;
  std::vector<std::string> pair;
  auto* check = app.add_subcommand("check-si", "is Y a safe improvement on X");
  check->add_option("input", input, "structure file")->required();
  check->add_option("pair", pair, "X Y (default: the instance's pair)")->expected(0, 2);
  add_si_flags(check, si);

  std::string on;
  auto* find = app.add_subcommand("find-si", "list safe improvements");
  find->add_option("input", input, "structure file")->required();
  find->add_option("--on", on, "only improvements on this variable");
  add_si_flags(find, si);

  std::string orders_path, joins_path, orders_out;
  bool search = false, from_assumptions = false;
  auto* closed = app.add_subcommand("closedness", "check max- or join-closedness");
  closed->add_option("input", input, "structure file")->required();
  closed->add_option("--orders", orders_path, "orders file");
  closed->add_flag("--search", search, "search for certifying orders");
  closed->add_option("--joins", joins_path, "semilattice file");
  closed->add_flag("--from-assumptions", from_assumptions,
                   "orders built from the games of a game-backed instance");
  closed->add_option("--orders-out", orders_out, "write the certifying orders");

  std::vector<std::string> game_files;
  std::string selection_path, assume_out;
  bool dominance = false, isomorphism = false, nash = false, labelings = false;
  auto* assume = app.add_subcommand("assume", "build the structure generated by assumptions");
  assume->add_option("games", game_files, "game files")->required();
  assume->add_option("--selection", selection_path, "selection file");
  assume->add_flag("--dominance", dominance);
  assume->add_flag("--isomorphism", isomorphism);
  assume->add_flag("--nash", nash);
  assume->add_flag("--labelings", labelings, "list the decreasing-risk labelings of each game");
  assume->add_option("-o,--out", assume_out, "output file (default: stdout)");

  GenFlags gen;
  auto* gen_cmd = app.add_subcommand("gen", "emit a generated instance");
  gen_cmd
      ->add_option("name", gen.name,
                   "montanari | join-incompleteness | trio | decreasing-risk | csp-to-si | "
                   "augment | implication | random | random-max-closed | random-join-closed")
      ->required();
  gen_cmd->add_option("-o,--out", gen.out, "output file (default: stdout)");
  gen_cmd->add_option("--source", gen.source, "source structure");
  gen_cmd->add_flag("--epsilon", gen.epsilon, "perturb the top outcomes (csp-to-si)");
  gen_cmd->add_option("--variable", gen.variable, "watched variable (implication)");
  gen_cmd->add_option("--value", gen.value, "watched value (implication)");
  gen_cmd->add_option("--switch-id", gen.switch_id, "switch variable id (augment)")
      ->capture_default_str();
  gen_cmd->add_option("--joins-out", gen.joins_out, "write semilattices");
  gen_cmd->add_option("--orders-out", gen.orders_out, "write orders");
  gen_cmd->add_option("--variables", gen.variables, "variables (random)")->capture_default_str();
  gen_cmd->add_option("--domain", gen.domain, "largest domain (random)")->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    // A subcommand's --help is reported through the subcommand.
    if (e.get_exit_code() == 0) {
      for (auto* sub : app.get_subcommands()) out << sub->help();
      return kOk;
    }
    err << "error: " << e.what() << '\n';
    return kError;
  }

  Report report(out, err);
  auto t0 = std::chrono::steady_clock::now();
  int code = kError;
  try {
    if (propagate->parsed()) {
      code = cmd_propagate(report, input, dump_path);
    } else if (solve->parsed()) {
      std::optional<std::size_t> lim;
      if (limit_opt->count()) lim = limit;
      code = cmd_solve(report, input, lim);
    } else if (check->parsed()) {
      code = cmd_check_si(report, input, pair, si);
    } else if (find->parsed()) {
      code = cmd_find_si(report, input, on, si);
    } else if (closed->parsed()) {
      code = cmd_closedness(report, input, orders_path, search, joins_path, from_assumptions,
                            orders_out);
    } else if (assume->parsed()) {
      code = cmd_assume(report, game_files, selection_path, dominance, isomorphism, nash,
                        labelings, assume_out, out);
    } else if (gen_cmd->parsed()) {
      code = cmd_gen(report, gen, seed, out);
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    report.data()["error"] = e.what();
    code = kError;
  }
  if (!json_path.empty()) {
    double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    try {
      io::write_json(json_path, report.finish(args, code, seconds));
    } catch (const std::exception& e) {
      err << "error: " << e.what() << '\n';
      return kError;
    }
  }
  return code;
}

}  // namespace ocreason

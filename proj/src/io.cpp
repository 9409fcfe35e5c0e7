#include "ocreason/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "ocreason/errors.hpp"

namespace ocreason::io {

namespace fs = std::filesystem;

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("JSON syntax error: ") + e.what());
  }
}

Json read_json(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path.string() + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return Json::parse(buffer.str());
  } catch (const Json::parse_error& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

std::string dump(const Json& value) { return value.dump(2) + "\n"; }

void write_json(const fs::path& path, const Json& value) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write '" + path.string() + "'");
  out << dump(value);
}

namespace {

const Json& field(const Json& obj, const char* name, const std::string& where) {
  if (!obj.is_object()) throw InputError(where + ": expected an object");
  auto it = obj.find(name);
  if (it == obj.end()) throw InputError(where + ": missing \"" + name + "\"");
  return *it;
}

std::string string_of(const Json& value, const std::string& where) {
  if (!value.is_string()) throw InputError(where + ": expected a string");
  return value.get<std::string>();
}

std::vector<std::string> strings_of(const Json& value, const std::string& where) {
  if (!value.is_array()) throw InputError(where + ": expected an array of strings");
  std::vector<std::string> out;
  for (const auto& v : value) out.push_back(string_of(v, where));
  return out;
}

}  // namespace

Json rational_to_json(const Rational& r) {
  if (r.denominator() == 1) return r.numerator();
  return to_string(r);
}

Rational rational_from_json(const Json& value) {
  if (value.is_number_integer()) return Rational(value.get<std::int64_t>());
  if (value.is_string()) return parse_rational(value.get<std::string>());
  throw InputError("payoff " + value.dump() +
                   " is not exact; use an integer or a \"p/q\" string");
}

NormalFormGame game_from_json(const Json& value, const std::string& fallback_id) {
  std::string id = fallback_id;
  if (value.is_object() && value.contains("id")) id = string_of(value["id"], "game id");
  const std::string where = "game '" + id + "'";
  const auto& acts_json = field(value, "actions", where);
  if (!acts_json.is_array()) throw InputError(where + ": \"actions\" must be an array");
  std::vector<std::vector<std::string>> actions;
  for (const auto& a : acts_json) actions.push_back(strings_of(a, where + " actions"));
  if (value.contains("players")) {
    const auto& p = value["players"];
    if (!p.is_number_integer() || p.get<std::int64_t>() != static_cast<std::int64_t>(actions.size())) {
      throw InputError(where + ": \"players\" does not match the action lists");
    }
  }
  std::size_t count = 1;
  for (const auto& a : actions) count *= a.size();
  NormalFormGame shape(id, actions, std::vector<PayoffVector>(count, PayoffVector(actions.size())));
  const auto& utils = field(value, "utilities", where);
  if (!utils.is_object()) throw InputError(where + ": \"utilities\" must be an object");
  std::vector<PayoffVector> utilities(shape.outcome_count());
  std::vector<bool> seen(shape.outcome_count(), false);
  for (const auto& [key, payoff] : utils.items()) {
    auto o = shape.outcome_from_label(key);
    if (!o) throw InputError(where + ": unknown outcome \"" + key + "\"");
    if (!payoff.is_array() || payoff.size() != actions.size()) {
      throw InputError(where + ": outcome \"" + key + "\" needs one payoff per player");
    }
    for (const auto& u : payoff) utilities[*o].push_back(rational_from_json(u));
    seen[*o] = true;
  }
  for (std::size_t o = 0; o < seen.size(); ++o) {
    if (!seen[o]) throw InputError(where + ": no payoff for outcome \"" + shape.outcome_label(o) + "\"");
  }
  return NormalFormGame(id, std::move(actions), std::move(utilities));
}

Json game_to_json(const NormalFormGame& game) {
  Json utils = Json::object();
  for (std::size_t o = 0; o < game.outcome_count(); ++o) {
    Json payoff = Json::array();
    for (const auto& u : game.payoff(o)) payoff.push_back(rational_to_json(u));
    utils[game.outcome_label(o)] = std::move(payoff);
  }
  return Json{{"id", game.id()},
              {"players", game.players()},
              {"actions", game.all_actions()},
              {"utilities", std::move(utils)}};
}

Json correspondence_to_json(const Correspondence& c, const Bcs& bcs) {
  const auto& dx = bcs.variable(bcs.require(c.source())).domain;
  const auto& dy = bcs.variable(bcs.require(c.target())).domain;
  Json pairs = Json::array();
  for (auto [x, y] : c.pairs()) pairs.push_back({dx[x], dy[y]});
  return Json{{"x", c.source()}, {"y", c.target()}, {"pairs", std::move(pairs)}};
}

Correspondence correspondence_from_json(const Json& value, const Bcs& bcs) {
  auto x = bcs.require(string_of(field(value, "x", "constraint"), "constraint x"));
  auto y = bcs.require(string_of(field(value, "y", "constraint"), "constraint y"));
  const auto& vx = bcs.variable(x);
  const auto& vy = bcs.variable(y);
  const std::string where = "constraint " + vx.id + "->" + vy.id;
  Correspondence c(vx.id, vy.id, vx.domain.size(), vy.domain.size());
  const auto& pairs = field(value, "pairs", where);
  if (!pairs.is_array()) throw InputError(where + ": \"pairs\" must be an array");
  for (const auto& p : pairs) {
    if (!p.is_array() || p.size() != 2) throw InputError(where + ": each pair needs two values");
    c.set(bcs.value_index(x, string_of(p[0], where)), bcs.value_index(y, string_of(p[1], where)));
  }
  return c;
}

namespace {

std::vector<Correspondence> constraints_from_json(const Json& value, const Bcs& bcs) {
  std::vector<Correspondence> out;
  if (!value.contains("constraints")) return out;
  const auto& list = value["constraints"];
  if (!list.is_array()) throw InputError("\"constraints\" must be an array");
  for (const auto& c : list) out.push_back(correspondence_from_json(c, bcs));
  return out;
}

}  // namespace

Instance instance_from_json(const Json& value, const fs::path& base_dir) {
  if (!value.is_object()) throw InputError("instance file must hold a JSON object");
  Instance inst;
  if (value.contains("games")) {
    const auto& list = value["games"];
    if (!list.is_array()) throw InputError("\"games\" must be an array");
    for (std::size_t i = 0; i < list.size(); ++i) {
      const auto& entry = list[i];
      if (entry.is_string()) {
        auto path = base_dir / entry.get<std::string>();
        inst.games.push_back(game_from_json(read_json(path), path.stem().string()));
      } else {
        inst.games.push_back(game_from_json(entry, "G" + std::to_string(i + 1)));
      }
    }
    std::vector<Correspondence> constraints;
    if (value.contains("assumptions")) {
      inst.selection = selection_from_json(value["assumptions"]);
      constraints = build_assumption_bcs(inst.games, *inst.selection).constraints();
    }
    std::vector<Variable> vars;
    for (const auto& g : inst.games) vars.push_back({g.id(), g.outcome_labels()});
    Bcs shape(vars, {});
    for (auto& c : constraints_from_json(value, shape)) constraints.push_back(std::move(c));
    inst.bcs = Bcs(std::move(vars), std::move(constraints));
  } else {
    const auto& list = field(value, "variables", "instance");
    if (!list.is_array()) throw InputError("\"variables\" must be an array");
    std::vector<Variable> vars;
    for (const auto& v : list) {
      vars.push_back({string_of(field(v, "id", "variable"), "variable id"),
                      strings_of(field(v, "domain", "variable"), "variable domain")});
    }
    Bcs shape(vars, {});
    inst.bcs = Bcs(std::move(vars), constraints_from_json(value, shape));
  }
  if (value.contains("pair")) {
    const auto& p = value["pair"];
    auto x = string_of(field(p, "x", "pair"), "pair x");
    auto y = string_of(field(p, "y", "pair"), "pair y");
    inst.bcs.require(x);
    inst.bcs.require(y);
    inst.pair = std::make_pair(x, y);
  }
  return inst;
}

Instance load_instance(const fs::path& path) {
  return instance_from_json(read_json(path), path.parent_path());
}

Json bcs_to_json(const Bcs& bcs) {
  Json vars = Json::array();
  for (const auto& v : bcs.variables()) vars.push_back({{"id", v.id}, {"domain", v.domain}});
  Json constraints = Json::array();
  for (const auto& c : bcs.constraints()) constraints.push_back(correspondence_to_json(c, bcs));
  return Json{{"variables", std::move(vars)}, {"constraints", std::move(constraints)}};
}

Json instance_to_json(const Instance& instance) {
  Json out;
  if (instance.games.empty()) {
    out = bcs_to_json(instance.bcs);
  } else {
    Json games = Json::array();
    for (const auto& g : instance.games) games.push_back(game_to_json(g));
    Json constraints = Json::array();
    for (const auto& c : instance.bcs.constraints()) {
      constraints.push_back(correspondence_to_json(c, instance.bcs));
    }
    out = Json{{"games", std::move(games)}, {"constraints", std::move(constraints)}};
  }
  if (instance.pair) out["pair"] = {{"x", instance.pair->first}, {"y", instance.pair->second}};
  return out;
}

Json orders_to_json(const VariableOrder& orders, const Bcs& bcs) {
  Json out = Json::object();
  for (const auto& [id, asc] : orders.ascending) {
    const auto& dom = bcs.variable(bcs.require(id)).domain;
    Json labels = Json::array();
    for (auto v : asc) labels.push_back(dom.at(v));
    out[id] = std::move(labels);
  }
  return Json{{"orders", std::move(out)}};
}

VariableOrder orders_from_json(const Json& value, const Bcs& bcs) {
  const auto& map = field(value, "orders", "orders file");
  if (!map.is_object()) throw InputError("\"orders\" must be an object");
  VariableOrder out;
  for (const auto& [id, labels] : map.items()) {
    auto i = bcs.require(id);
    std::vector<std::size_t> asc;
    for (const auto& label : strings_of(labels, "order for '" + id + "'")) {
      asc.push_back(bcs.value_index(i, label));
    }
    out.ascending[id] = std::move(asc);
  }
  return out;
}

JoinFamily joins_from_json(const Json& value, const Bcs& bcs) {
  const auto& map = field(value, "semilattices", "semilattice file");
  if (!map.is_object()) throw InputError("\"semilattices\" must be an object");
  JoinFamily out;
  for (const auto& [id, spec] : map.items()) {
    auto i = bcs.require(id);
    std::vector<std::pair<std::string, std::string>> edges;
    const auto& list = field(spec, "edges", "semilattice '" + id + "'");
    if (!list.is_array()) throw InputError("semilattice '" + id + "': \"edges\" must be an array");
    for (const auto& e : list) {
      auto pair = strings_of(e, "semilattice '" + id + "' edge");
      if (pair.size() != 2) throw InputError("semilattice '" + id + "': edges are [child, parent]");
      edges.emplace_back(pair[0], pair[1]);
    }
    out.tables[id] = compile_semilattice(bcs.variable(i).domain, edges);
  }
  return out;
}

Json semilattices_to_json(
    const std::map<std::string, std::vector<std::pair<std::string, std::string>>>& edges) {
  Json out = Json::object();
  for (const auto& [id, list] : edges) {
    Json e = Json::array();
    for (const auto& [child, parent] : list) e.push_back({child, parent});
    out[id] = Json{{"edges", std::move(e)}};
  }
  return Json{{"semilattices", std::move(out)}};
}

namespace {

RiskLabeling labeling_from(const Json& value, const char* high, const char* low,
                           const std::string& where) {
  return {strings_of(field(value, high, where), where), strings_of(field(value, low, where), where)};
}

bool flag(const Json& value, const char* name) {
  if (!value.contains(name)) return false;
  if (!value[name].is_boolean()) throw InputError(std::string("\"") + name + "\" must be true or false");
  return value[name].get<bool>();
}

}  // namespace

AssumptionSelection selection_from_json(const Json& value) {
  if (!value.is_object()) throw InputError("assumption selection must be an object");
  static const std::set<std::string> known{"dominance", "isomorphism", "nash", "decreasing_risk",
                                           "isomorphism_pairs"};
  for (const auto& [key, _] : value.items()) {
    if (!known.count(key)) throw InputError("unknown assumption \"" + key + "\"");
  }
  AssumptionSelection s;
  s.dominance = flag(value, "dominance");
  s.isomorphism = flag(value, "isomorphism");
  s.nash = flag(value, "nash");
  if (value.contains("decreasing_risk")) {
    const auto& list = value["decreasing_risk"];
    if (!list.is_array()) throw InputError("\"decreasing_risk\" must be an array");
    for (const auto& entry : list) {
      DecreasingRiskPair p;
      p.g1 = string_of(field(entry, "g1", "decreasing_risk entry"), "g1");
      p.g2 = string_of(field(entry, "g2", "decreasing_risk entry"), "g2");
      p.l1 = labeling_from(entry, "a1", "a2", "decreasing_risk entry");
      p.l2 = entry.contains("b1") ? labeling_from(entry, "b1", "b2", "decreasing_risk entry") : p.l1;
      s.decreasing_risk.push_back(std::move(p));
    }
  }
  if (value.contains("isomorphism_pairs")) {
    for (const auto& p : value["isomorphism_pairs"]) {
      auto ids = strings_of(p, "isomorphism_pairs entry");
      if (ids.size() != 2) throw InputError("isomorphism_pairs entries name two games");
      s.isomorphism_pairs.emplace_back(ids[0], ids[1]);
    }
  }
  return s;
}

Json selection_to_json(const AssumptionSelection& s) {
  Json out{{"dominance", s.dominance}, {"isomorphism", s.isomorphism}, {"nash", s.nash}};
  if (!s.decreasing_risk.empty()) {
    Json list = Json::array();
    for (const auto& p : s.decreasing_risk) {
      Json entry{{"g1", p.g1}, {"g2", p.g2}, {"a1", p.l1.high}, {"a2", p.l1.low}};
      if (!(p.l2 == p.l1)) {
        entry["b1"] = p.l2.high;
        entry["b2"] = p.l2.low;
      }
      list.push_back(std::move(entry));
    }
    out["decreasing_risk"] = std::move(list);
  }
  if (!s.isomorphism_pairs.empty()) {
    Json list = Json::array();
    for (const auto& [a, b] : s.isomorphism_pairs) list.push_back({a, b});
    out["isomorphism_pairs"] = std::move(list);
  }
  return out;
}

Preference preference_from_json(const Json& value, const Instance& instance) {
  auto kind = string_of(field(value, "kind", "preference"), "preference kind");
  if (kind == "pareto" || kind == "player") {
    if (instance.games.empty()) {
      throw InputError("a " + kind + " preference needs a game-backed instance");
    }
    if (kind == "pareto") return pareto_preference(instance.games);
    const auto& p = field(value, "player", "preference");
    if (!p.is_number_integer() || p.get<std::int64_t>() < 1) {
      throw InputError("\"player\" must be a positive integer (players count from 1)");
    }
    return player_preference(instance.games, p.get<std::size_t>() - 1);
  }
  if (kind == "explicit") {
    std::vector<std::pair<Preference::Key, Preference::Key>> pairs;
    const auto& list = field(value, "geq", "preference");
    if (!list.is_array()) throw InputError("\"geq\" must be an array");
    for (const auto& entry : list) {
      if (!entry.is_array() || entry.size() != 2) {
        throw InputError("each \"geq\" entry is [[variable, value], [variable, value]]");
      }
      auto a = strings_of(entry[0], "geq entry");
      auto b = strings_of(entry[1], "geq entry");
      if (a.size() != 2 || b.size() != 2) {
        throw InputError("each \"geq\" entry is [[variable, value], [variable, value]]");
      }
      pairs.push_back({{a[0], a[1]}, {b[0], b[1]}});
    }
    return explicit_preference(instance.bcs.variables(), pairs);
  }
  throw InputError("unknown preference kind \"" + kind + "\" (pareto, player, explicit)");
}

Json assignment_to_json(const Assignment& assignment, const Bcs& bcs) {
  Json out = Json::object();
  for (std::size_t i = 0; i < assignment.size(); ++i) {
    out[bcs.variable(i).id] = bcs.variable(i).domain.at(assignment[i]);
  }
  return out;
}

}  // namespace ocreason::io

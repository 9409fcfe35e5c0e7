#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "ocreason/errors.hpp"
#include "ocreason/fixtures.hpp"
#include "ocreason/io.hpp"
#include "ocreason/random_instances.hpp"
#include "ocreason/reductions.hpp"
#include "support/generators.hpp"

using namespace ocreason;
using io::Json;

namespace fs = std::filesystem;

namespace {

bool throws_input(const std::function<void()>& f, const std::string& needle = "") {
  try {
    f();
  } catch (const InputError& e) {
    return needle.empty() || std::string(e.what()).find(needle) != std::string::npos;
  }
  return false;
}

}  // namespace

TEST_CASE("rationals") {
  CHECK(io::rational_from_json(Json(3)) == Rational(3));
  CHECK(io::rational_from_json(Json("5/2")) == Rational(5, 2));
  CHECK(io::rational_to_json(Rational(5, 2)) == Json("5/2"));
  CHECK(io::rational_to_json(Rational(-4)) == Json(-4));
  CHECK(throws_input([] { io::rational_from_json(Json(0.5)); }, "not exact"));
  CHECK(throws_input([] { io::rational_from_json(Json("1/0")); }));
  CHECK(throws_input([] { io::rational_from_json(Json("abc")); }));
}

TEST_CASE("games round-trip") {
  for (const auto& g : {fixtures::chicken(), fixtures::chicken_with_dominated_row(),
                        fixtures::risky_coordination(), fixtures::matching_pennies()}) {
    auto j = io::game_to_json(g);
    auto back = io::game_from_json(j);
    CHECK(io::game_to_json(back) == j);
    CHECK(back.id() == g.id());
    CHECK(back.outcome_labels() == g.outcome_labels());
  }
  gen::Rng rng(4);
  for (int t = 0; t < 50; ++t) {
    auto g = gen::game(rng, "G", gen::uniform(rng, 1, 3), gen::uniform(rng, 1, 3), 9);
    auto j = io::game_to_json(g);
    CHECK(io::game_to_json(io::game_from_json(io::parse_json(io::dump(j)))) == j);
  }
}

TEST_CASE("game rejections") {
  Json good = io::game_to_json(fixtures::chicken());
  auto with = [&](auto edit) {
    Json j = good;
    edit(j);
    return [j] { io::game_from_json(j); };
  };
  CHECK(throws_input(with([](Json& j) { j["utilities"]["C,C"][0] = 1.5; }), "not exact"));
  CHECK(throws_input(with([](Json& j) { j["utilities"].erase("C,C"); }), "no payoff"));
  CHECK(throws_input(with([](Json& j) { j["utilities"]["Z,Z"] = {1, 1}; }), "unknown outcome"));
  CHECK(throws_input(with([](Json& j) { j["utilities"]["C,C"] = {1}; }), "one payoff per player"));
  CHECK(throws_input(with([](Json& j) { j.erase("actions"); }), "missing"));
  CHECK(throws_input(with([](Json& j) { j["players"] = 3; })));
}

TEST_CASE("syntax errors carry a position") {
  CHECK(throws_input([] { io::parse_json("{\"variables\": [}"); }, "column"));
  auto path = fs::temp_directory_path() / "ocreason_bad.json";
  {
    std::ofstream out(path);
    out << "{\n  \"variables\": [,]\n}\n";
  }
  CHECK(throws_input([&] { io::read_json(path); }, "line 2"));
  fs::remove(path);
  CHECK(throws_input([] { io::read_json("/nonexistent/file.json"); }, "cannot open"));
}

TEST_CASE("structures round-trip") {
  SUBCASE("plain") {
    gen::Rng rng(8);
    for (int t = 0; t < 100; ++t) {
      auto b = gen::bcs(rng, 4, 4);
      auto j = io::bcs_to_json(b);
      auto inst = io::instance_from_json(io::parse_json(io::dump(j)));
      CHECK(inst.bcs == b);
      CHECK(inst.games.empty());
      CHECK(io::bcs_to_json(inst.bcs) == j);
    }
  }
  SUBCASE("game-backed with assumptions and a pair") {
    Json j{{"games",
            {io::game_to_json(fixtures::chicken_with_dominated_row()),
             io::game_to_json(fixtures::chicken()), io::game_to_json(fixtures::chicken_scaled())}},
           {"assumptions", {{"dominance", true}, {"isomorphism", true}}},
           {"pair", {{"x", "Gamma_a"}, {"y", "Gamma_c"}}}};
    auto inst = io::instance_from_json(j);
    REQUIRE(inst.selection);
    CHECK(inst.bcs == build_assumption_bcs(inst.games, *inst.selection));
    auto again = io::instance_from_json(io::instance_to_json(inst));
    CHECK(again.bcs == inst.bcs);
    CHECK(again.pair == inst.pair);
    CHECK(again.games.size() == 3);
  }
  SUBCASE("reduction outputs") {
    auto inst = csp_to_si_games(montanari_instance());
    io::Instance wrapped{inst.bcs(), inst.games, std::nullopt,
                         std::make_pair(inst.gamma, inst.gamma_prime)};
    auto back = io::instance_from_json(io::instance_to_json(wrapped));
    CHECK(back.bcs == wrapped.bcs);
  }
}

TEST_CASE("structure rejections") {
  auto k4 = io::bcs_to_json(montanari_instance());
  CHECK(throws_input([] { io::instance_from_json(Json::array()); }, "object"));
  CHECK(throws_input([] { io::instance_from_json(Json::object()); }, "variables"));
  {
    Json j = k4;
    j["constraints"][0]["pairs"].push_back({"9", "1"});
    CHECK(throws_input([&] { io::instance_from_json(j); }));
  }
  {
    Json j = k4;
    j["constraints"][0]["x"] = "Nope";
    CHECK(throws_input([&] { io::instance_from_json(j); }));
  }
  {
    Json j = k4;
    j["pair"] = {{"x", "X1"}, {"y", "Nope"}};
    CHECK(throws_input([&] { io::instance_from_json(j); }));
  }
  {
    Json j = k4;
    j["variables"].push_back(j["variables"][0]);
    CHECK(throws_input([&] { io::instance_from_json(j); }));
  }
}

TEST_CASE("orders and semilattices") {
  Rng rng(5);
  for (int t = 0; t < 30; ++t) {
    auto mc = random_max_closed_bcs(rng);
    auto j = io::orders_to_json(mc.orders, mc.bcs);
    CHECK(io::orders_from_json(j, mc.bcs) == mc.orders);

    auto jc = random_join_closed_bcs(rng);
    std::map<std::string, std::vector<std::pair<std::string, std::string>>> edges;
    for (const auto& v : jc.bcs.variables()) {
      edges[v.id] = hasse_edges(v.domain, jc.joins.tables.at(v.id));
    }
    CHECK(io::joins_from_json(io::semilattices_to_json(edges), jc.bcs) == jc.joins);
  }
  auto k4 = montanari_instance();
  CHECK(throws_input([&] { io::orders_from_json(Json{{"orders", {{"X1", {"9"}}}}}, k4); }));
  CHECK(throws_input([&] { io::orders_from_json(Json::object(), k4); }, "missing"));
  CHECK(throws_input(
      [&] {
        io::joins_from_json(Json{{"semilattices", {{"X1", {{"edges", {{"1"}}}}}}}}, k4);
      },
      "[child, parent]"));
}

TEST_CASE("assumption selections") {
  AssumptionSelection s;
  s.dominance = true;
  s.nash = true;
  s.decreasing_risk.push_back({"Risky", "Safer", {{"aH", "aH"}, {"aL", "aL"}},
                               {{"aH", "aH"}, {"aL", "aL"}}});
  s.isomorphism_pairs.emplace_back("A", "B");
  auto back = io::selection_from_json(io::selection_to_json(s));
  CHECK(back.dominance);
  CHECK_FALSE(back.isomorphism);
  CHECK(back.nash);
  CHECK(back.decreasing_risk == s.decreasing_risk);
  CHECK(back.isomorphism_pairs == s.isomorphism_pairs);

  CHECK(throws_input([] { io::selection_from_json(Json{{"dominanse", true}}); }, "unknown"));
  CHECK(throws_input([] { io::selection_from_json(Json{{"nash", 1}}); }, "true or false"));
}

TEST_CASE("preferences") {
  io::Instance games{Bcs(), {fixtures::prisoners_dilemma()}, std::nullopt, std::nullopt};
  games.bcs = Bcs({{games.games[0].id(), games.games[0].outcome_labels()}}, {});
  CHECK(io::preference_from_json(Json{{"kind", "pareto"}}, games) ==
        pareto_preference(games.games));
  CHECK(io::preference_from_json(Json{{"kind", "player"}, {"player", 2}}, games) ==
        player_preference(games.games, 1));
  CHECK(throws_input([&] { io::preference_from_json(Json{{"kind", "player"}, {"player", 0}}, games); },
                     "count from 1"));
  CHECK(throws_input([&] { io::preference_from_json(Json{{"kind", "best"}}, games); }, "unknown"));

  io::Instance plain{Bcs({{"X", {"a", "b"}}, {"Y", {"c"}}}, {}), {}, std::nullopt, std::nullopt};
  CHECK(throws_input([&] { io::preference_from_json(Json{{"kind", "pareto"}}, plain); },
                     "game-backed"));
  auto key = [](const char* v, const char* x) { return Json::array({v, x}); };
  auto entry = [](Json a, Json b) { return Json::array({std::move(a), std::move(b)}); };
  Json geq{{"kind", "explicit"},
           {"geq", Json::array({entry(key("X", "a"), key("Y", "c")),
                                entry(key("Y", "c"), key("X", "b"))})}};
  auto p = io::preference_from_json(geq, plain);
  CHECK(p.strictly(p.index({"X", "a"}), p.index({"X", "b"})));
  Json cyc{{"kind", "explicit"},
           {"geq", Json::array({entry(key("X", "a"), key("X", "b")),
                                entry(key("X", "b"), key("X", "a"))})}};
  CHECK(throws_input([&] { io::preference_from_json(cyc, plain); }));
}

TEST_CASE("dump is stable") {
  Json j{{"b", 1}, {"a", {{"d", 2}, {"c", 3}}}};
  CHECK(io::dump(j) == "{\n  \"a\": {\n    \"c\": 3,\n    \"d\": 2\n  },\n  \"b\": 1\n}\n");
  auto inst = io::bcs_to_json(join_incompleteness_instance().bcs);
  CHECK(io::dump(io::parse_json(io::dump(inst))) == io::dump(inst));
}

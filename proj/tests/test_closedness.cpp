#include <doctest.h>

#include <set>

#include "ocreason/assumptions.hpp"
#include "ocreason/closedness.hpp"
#include "ocreason/errors.hpp"
#include "ocreason/fixtures.hpp"
#include "ocreason/random_instances.hpp"
#include "ocreason/reductions.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace ocreason;

namespace {

Bcs crossing() {
  return Bcs({{"X", {"x1", "x2"}}, {"Y", {"y1", "y2"}}},
             {Correspondence::from_pairs("X", "Y", 2, 2, {{0, 1}, {1, 0}})});
}

VariableOrder identity_orders(const Bcs& bcs) {
  VariableOrder o;
  for (const auto& v : bcs.variables()) {
    std::vector<std::size_t> asc(v.domain.size());
    for (std::size_t i = 0; i < asc.size(); ++i) asc[i] = i;
    o.ascending[v.id] = asc;
  }
  return o;
}

JoinFamily random_joins(gen::Rng& rng, const Bcs& bcs) {
  JoinFamily j;
  for (const auto& v : bcs.variables()) {
    auto p = gen::permutation(rng, v.domain.size());
    VariableOrder single;
    single.ascending[v.id] = p;
    Bcs one({v}, {});
    j.tables[v.id] = joins_from_orders(one, single).tables.at(v.id);
  }
  return j;
}

}  // namespace

TEST_CASE("is_max_closed") {
  SUBCASE("the crossing pattern under the natural reading is a violation") {
    auto b = crossing();
    VariableOrder o;
    o.ascending["X"] = {1, 0};  // x1 > x2
    o.ascending["Y"] = {1, 0};  // y1 > y2
    auto rep = is_max_closed(b, o);
    CHECK_FALSE(rep.closed);
    REQUIRE(rep.witness);
    std::set<Correspondence::Pair> seen{rep.witness->first, rep.witness->second};
    CHECK(seen == std::set<Correspondence::Pair>{{0, 1}, {1, 0}});
    CHECK(rep.witness->missing == Correspondence::Pair{0, 0});
    CHECK(rep.witness->constraint == 0);
  }
  SUBCASE("full relations are closed under any orders") {
    Bcs b({{"X", {"a", "b", "c"}}, {"Y", {"d", "e"}}}, {Correspondence::full("X", "Y", 3, 2)});
    gen::Rng rng(2);
    for (int t = 0; t < 10; ++t) {
      VariableOrder o;
      o.ascending["X"] = gen::permutation(rng, 3);
      o.ascending["Y"] = gen::permutation(rng, 2);
      CHECK(is_max_closed(b, o).closed);
    }
  }
  SUBCASE("missing order is an input error") {
    VariableOrder o;
    o.ascending["X"] = {0, 1};
    CHECK_THROWS_AS(is_max_closed(crossing(), o), InputError);
  }
  SUBCASE("agrees with the brute-force check") {
    gen::Rng rng(12);
    for (int t = 0; t < 400; ++t) {
      auto b = gen::bcs(rng, 4, 4);
      VariableOrder o;
      for (const auto& v : b.variables()) o.ascending[v.id] = gen::permutation(rng, v.domain.size());
      auto rep = is_max_closed(b, o);
      CHECK(rep.closed == oracle::max_closed(b, o));
      CHECK(rep.closed == is_join_closed(b, joins_from_orders(b, o)).closed);
      if (!rep.closed) {
        const auto& w = *rep.witness;
        const auto& c = b.constraints()[w.constraint];
        CHECK(c.contains(w.first.first, w.first.second));
        CHECK(c.contains(w.second.first, w.second.second));
        CHECK_FALSE(c.contains(w.missing.first, w.missing.second));
      }
    }
  }
}

TEST_CASE("search_max_orders") {
  SUBCASE("crossing relation has certifying orders") {
    auto o = search_max_orders(crossing());
    REQUIRE(o);
    CHECK(is_max_closed(crossing(), *o).closed);
  }
  SUBCASE("Montanari instance has none") {
    auto k4 = montanari_instance();
    CHECK_FALSE(search_max_orders(k4));
    CHECK_FALSE(oracle::any_max_orders(k4));
  }
  SUBCASE("no constraints returns the listed orders") {
    Bcs b({{"X", {"a", "b", "c"}}, {"Y", {"d", "e"}}}, {});
    auto o = search_max_orders(b);
    REQUIRE(o);
    CHECK(*o == identity_orders(b));
  }
  SUBCASE("domain cap") {
    std::vector<std::string> big;
    for (int i = 0; i < 9; ++i) big.push_back("v" + std::to_string(i));
    Bcs b({{"X", big}}, {});
    CHECK_THROWS_AS(search_max_orders(b), PreconditionError);
  }
  SUBCASE("finds orders exactly when some exist") {
    gen::Rng rng(19);
    for (int t = 0; t < 200; ++t) {
      auto b = gen::bcs(rng, 3, 3);
      auto o = search_max_orders(b);
      CHECK(o.has_value() == oracle::any_max_orders(b));
      if (o) CHECK(oracle::max_closed(b, *o));
    }
  }
}

TEST_CASE("semilattices") {
  SUBCASE("compile and recover Hasse edges") {
    std::vector<std::string> dom{"top", "l", "r", "bot"};
    auto table = compile_semilattice(dom, {{"bot", "l"}, {"bot", "r"}, {"l", "top"}, {"r", "top"}});
    CHECK(table[1][2] == 0);
    CHECK(table[3][1] == 1);
    CHECK(table[3][3] == 3);
    auto edges = hasse_edges(dom, table);
    CHECK(compile_semilattice(dom, edges) == table);
    CHECK(edges.size() == 4);
  }
  SUBCASE("malformed inputs") {
    std::vector<std::string> dom{"a", "b", "c"};
    CHECK_THROWS_AS(compile_semilattice(dom, {{"a", "b"}, {"b", "a"}}), InputError);
    CHECK_THROWS_AS(compile_semilattice(dom, {{"a", "z"}}), InputError);
    // a and b have no upper bound at all.
    CHECK_THROWS_AS(compile_semilattice({"a", "b"}, {}), InputError);
    // a, b below both c and d: no least upper bound.
    CHECK_THROWS_AS(compile_semilattice({"a", "b", "c", "d"},
                                        {{"a", "c"}, {"a", "d"}, {"b", "c"}, {"b", "d"}}),
                    InputError);
  }
  SUBCASE("table validation") {
    Bcs b({{"X", {"a", "b"}}}, {});
    JoinFamily ok;
    ok.tables["X"] = {{0, 1}, {1, 1}};
    CHECK_NOTHROW(validate_joins(b, ok));
    JoinFamily noncomm;
    noncomm.tables["X"] = {{0, 1}, {0, 1}};
    CHECK_THROWS_AS(validate_joins(b, noncomm), InputError);
    JoinFamily nonidem;
    nonidem.tables["X"] = {{1, 1}, {1, 1}};
    CHECK_THROWS_AS(validate_joins(b, nonidem), InputError);
    CHECK_THROWS_AS(validate_joins(b, JoinFamily{}), InputError);
    JoinFamily range;
    range.tables["X"] = {{0, 5}, {5, 1}};
    CHECK_THROWS_AS(validate_joins(b, range), InputError);
    CHECK_THROWS_AS(is_join_closed(b, noncomm), InputError);

    Bcs three({{"X", {"a", "b", "c"}}}, {});
    JoinFamily nonassoc;
    // Commutative and idempotent but (a v b) v c != a v (b v c).
    nonassoc.tables["X"] = {{0, 2, 0}, {2, 1, 1}, {0, 1, 2}};
    CHECK_THROWS_AS(validate_joins(three, nonassoc), InputError);
  }
}

TEST_CASE("is_join_closed") {
  auto ji = join_incompleteness_instance();
  CHECK(is_join_closed(ji.bcs, ji.joins).closed);

  gen::Rng rng(6);
  for (int t = 0; t < 300; ++t) {
    auto b = gen::bcs(rng, 4, 4);
    auto j = random_joins(rng, b);
    auto rep = is_join_closed(b, j);
    bool expected = true;
    for (const auto& c : b.constraints()) {
      expected = expected && oracle::relation_join_closed(c, j.tables.at(c.source()),
                                                          j.tables.at(c.target()));
    }
    CHECK(rep.closed == expected);
  }
}

TEST_CASE("closedness survives propagation") {
  Rng rng(99);
  for (int t = 0; t < 200; ++t) {
    auto mc = random_max_closed_bcs(rng);
    REQUIRE(oracle::max_closed(mc.bcs, mc.orders));
    auto p = path_consistency(mc.bcs).to_bcs();
    CHECK(is_max_closed(p, mc.orders).closed);

    auto jc = random_join_closed_bcs(rng);
    REQUIRE(is_join_closed(jc.bcs, jc.joins).closed);
    CHECK(is_join_closed(path_consistency(jc.bcs).to_bcs(), jc.joins).closed);
  }
}

TEST_CASE("orders_for_assumptions") {
  SUBCASE("trio") {
    AssumptionSelection sel;
    sel.dominance = true;
    sel.isomorphism = true;
    std::vector<NormalFormGame> games{fixtures::chicken_with_dominated_row(), fixtures::chicken(),
                                      fixtures::chicken_scaled()};
    auto bcs = build_assumption_bcs(games, sel);
    auto o = orders_for_assumptions(games, bcs);
    CHECK(is_max_closed(bcs, o).closed);
    // The dominated outcomes sit at the bottom of Gamma_a.
    const auto& asc = o.ascending.at("Gamma_a");
    CHECK(games[0].outcome_label(asc[0]) == "C',C");
    CHECK(games[0].outcome_label(asc[1]) == "C',D");
  }
  SUBCASE("decreasing-risk pair gets the quoted order") {
    auto left = fixtures::risky_coordination();
    auto right = fixtures::safer_coordination();
    AssumptionSelection sel;
    sel.decreasing_risk.push_back({left.id(), right.id(), {{"aH", "aH"}, {"aL", "aL"}},
                                   {{"aH", "aH"}, {"aL", "aL"}}});
    auto bcs = build_assumption_bcs({left, right}, sel);
    auto o = orders_for_assumptions({left, right}, bcs);
    auto names = [&](const NormalFormGame& g) {
      std::vector<std::string> out;
      for (auto v : o.ascending.at(g.id())) out.push_back(g.outcome_label(v));
      return out;
    };
    std::vector<std::string> quoted{"aH,aL", "aL,aH", "aL,aL", "aH,aH"};
    CHECK(names(left) == quoted);
    CHECK(names(right) == quoted);
    CHECK(is_max_closed(bcs, o).closed);
  }
  SUBCASE("Nash self-loops are closed under any order") {
    auto g = fixtures::risky_coordination();
    AssumptionSelection sel;
    sel.nash = true;
    auto bcs = build_assumption_bcs({g}, sel);
    CHECK(is_max_closed(bcs, orders_for_assumptions({g}, bcs)).closed);
    gen::Rng rng(1);
    for (int t = 0; t < 10; ++t) {
      VariableOrder o;
      o.ascending[g.id()] = gen::permutation(rng, 4);
      CHECK(is_max_closed(bcs, o).closed);
    }
  }
  SUBCASE("foreign constraints are rejected") {
    auto g = fixtures::chicken();
    Bcs b({{g.id(), g.outcome_labels()}},
          {Correspondence::from_pairs(g.id(), g.id(), 4, 4, {{0, 1}, {1, 0}})});
    CHECK_THROWS_AS(orders_for_assumptions({g}, b), InputError);
  }
}

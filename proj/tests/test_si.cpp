#include <doctest.h>

#include <set>

#include "ocreason/assumptions.hpp"
#include "ocreason/closedness.hpp"
#include "ocreason/errors.hpp"
#include "ocreason/fixtures.hpp"
#include "ocreason/random_instances.hpp"
#include "ocreason/reductions.hpp"
#include "ocreason/si.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace ocreason;

namespace {

struct Trio {
  std::vector<NormalFormGame> games{fixtures::chicken_with_dominated_row(), fixtures::chicken(),
                                    fixtures::chicken_scaled()};
  Bcs bcs;
  Trio() {
    AssumptionSelection sel;
    sel.dominance = true;
    sel.isomorphism = true;
    bcs = build_assumption_bcs(games, sel);
  }
};


}  // namespace

TEST_CASE("pareto_preference") {
  Trio t;
  auto pref = pareto_preference(t.games);
  auto cc_a = pref.index(Preference::Key{"Gamma_a", "C,C"});
  auto ee_c = pref.index(Preference::Key{"Gamma_c", "E,E"});
  CHECK(pref.strictly(ee_c, cc_a));
  CHECK_FALSE(pref.geq(cc_a, ee_c));
  CHECK(pref.geq(cc_a, cc_a));
  CHECK_FALSE(pref.strictly(cc_a, cc_a));
  // Same payoffs in different games: mutual, never strict.
  auto cc_b = pref.index(Preference::Key{"Gamma_b", "C,C"});
  CHECK(pref.geq(cc_a, cc_b));
  CHECK(pref.geq(cc_b, cc_a));
  CHECK_FALSE(pref.strictly(cc_b, cc_a));

  auto inst = csp_to_si_games(Bcs({{"V", {"v"}}}, {}));
  auto p2 = pareto_preference(inst.games);
  auto top = p2.index(Preference::Key{"Gamma", "a1,a1"});
  auto low = p2.index(Preference::Key{"Gamma", "a2,a2"});
  CHECK_FALSE(p2.geq(top, low));
  CHECK_FALSE(p2.geq(low, top));

  NormalFormGame three("T", {{"a"}, {"b"}, {"c"}},
                       {{Rational(1), Rational(1), Rational(1)}});
  CHECK_THROWS_AS(pareto_preference({fixtures::chicken(), three}), InputError);
}

TEST_CASE("player_preference") {
  auto inst = csp_to_si_games(Bcs({{"V", {"v"}}}, {}));
  auto p1 = player_preference(inst.games, 0);
  auto top = p1.index(Preference::Key{"Gamma", "a1,a1"});
  auto low = p1.index(Preference::Key{"Gamma", "a2,a2"});
  CHECK(p1.strictly(top, low));

  auto b = fixtures::chicken();
  auto p = player_preference({b}, 1);
  auto cd = p.index(Preference::Key{"Gamma_b", "C,D"});
  auto dd = p.index(Preference::Key{"Gamma_b", "D,D"});
  CHECK(p.strictly(cd, dd));

  NormalFormGame flat("F", {{"a", "b"}}, {{Rational(2)}, {Rational(2)}});
  auto pf = player_preference({flat}, 0);
  CHECK(pf.geq(0, 1));
  CHECK(pf.geq(1, 0));
  CHECK_FALSE(pf.strictly(0, 1));
  CHECK_THROWS_AS(player_preference({b}, 2), InputError);
}

TEST_CASE("explicit preferences are closed and reject cycles") {
  std::vector<Variable> blocks{{"X", {"a", "b", "c"}}};
  auto p = explicit_preference(blocks, {{{"X", "a"}, {"X", "b"}}, {{"X", "b"}, {"X", "c"}}});
  CHECK(p.geq(0, 2));
  CHECK(p.strictly(0, 2));
  CHECK(p.geq(1, 1));
  CHECK_THROWS_AS(explicit_preference(blocks, {{{"X", "a"}, {"X", "b"}}, {{"X", "b"}, {"X", "a"}}}),
                  InputError);
  CHECK_THROWS_AS(explicit_preference(blocks, {{{"X", "q"}, {"X", "b"}}}), InputError);
}

TEST_CASE("improvement_oc") {
  Trio t;
  auto pref = pareto_preference(t.games);
  auto phi = improvement_oc("Gamma_a", "Gamma_c", pref, true);
  CHECK(phi.contains(*t.games[0].outcome_from_label("D,D"), *t.games[2].outcome_from_label("F,F")));
  auto self = improvement_oc("Gamma_b", "Gamma_b", pref, false);
  for (std::size_t o = 0; o < 4; ++o) CHECK(self.contains(o, o));
  CHECK_FALSE(improvement_oc("Gamma_b", "Gamma_b", pref, true).contains(0, 0));

  auto inst = csp_to_si_games(Bcs({{"V", {"v"}}}, {}));
  auto p2 = pareto_preference(inst.games);
  auto g2 = improvement_oc("Gamma", "Gamma'", p2, false);
  const auto& gamma = inst.games[0];
  CHECK(g2.contains(*gamma.outcome_from_label("a2,a2"), 0));
  CHECK_FALSE(g2.contains(*gamma.outcome_from_label("a1,a1"), 0));
  CHECK_THROWS_AS(improvement_oc("Gamma", "Nope", p2, false), InputError);
}

TEST_CASE("decide_si on the trio") {
  Trio t;
  auto pref = pareto_preference(t.games);
  for (auto mode : {SiMode::exact, SiMode::propagation, SiMode::refutation}) {
    auto v = decide_si(t.bcs, "Gamma_a", "Gamma_c", pref, true, mode);
    CHECK(v.yes);
    CHECK(v.mode == mode);
    CHECK(v.certified == (mode == SiMode::exact));
  }
  auto orders = orders_for_assumptions(t.games, t.bcs);
  SiCertificate cert;
  cert.orders = orders;
  auto v = decide_si(t.bcs, "Gamma_a", "Gamma_c", pref, true, SiMode::propagation, cert);
  CHECK(v.yes);
  CHECK(v.certified);

  auto back = decide_si(t.bcs, "Gamma_c", "Gamma_a", pref, true, SiMode::exact);
  CHECK_FALSE(back.yes);
  REQUIRE(back.counterexample);
  CHECK(satisfies(t.bcs, *back.counterexample));

  CHECK(decide_si(t.bcs, "Gamma_b", "Gamma_b", pref, false, SiMode::exact).yes);
  CHECK_THROWS_AS(decide_si(t.bcs, "Gamma_a", "Nope", pref, true, SiMode::exact), InputError);

  Bcs cross({{"X", {"x1", "x2"}}, {"Y", {"y1", "y2"}}},
            {Correspondence::from_pairs("X", "Y", 2, 2, {{0, 1}, {1, 0}})});
  SiCertificate bad;
  bad.orders = VariableOrder{};
  bad.orders->ascending["X"] = {1, 0};
  bad.orders->ascending["Y"] = {1, 0};
  Preference flat(cross.variables());
  CHECK_THROWS_AS(decide_si(cross, "X", "Y", flat, false, SiMode::propagation, bad),
                  PreconditionError);
  SiCertificate bad_joins;
  bad_joins.joins = joins_from_orders(cross, *bad.orders);
  CHECK_THROWS_AS(decide_si(cross, "X", "Y", flat, false, SiMode::refutation, bad_joins),
                  PreconditionError);
  CHECK(std::string(to_string(SiMode::refutation)) == "refutation");
  CHECK(parse_si_mode("propagation") == SiMode::propagation);
  CHECK_THROWS_AS(parse_si_mode("fast"), InputError);
}

TEST_CASE("find_si_on and find_any_si") {
  Trio t;
  auto pref = pareto_preference(t.games);
  CHECK(find_si_on(t.bcs, "Gamma_a", pref, true, SiMode::exact) ==
        std::vector<std::string>{"Gamma_c"});
  CHECK(find_si_on(t.bcs, "Gamma_a", pref, false, SiMode::exact) ==
        std::vector<std::string>{"Gamma_b", "Gamma_c"});
  auto any = find_any_si(t.bcs, pref, true, SiMode::exact);
  CHECK(std::find(any.begin(), any.end(), std::make_pair(std::string("Gamma_a"),
                                                         std::string("Gamma_c"))) != any.end());

  Bcs single({{"X", {"x"}}}, {});
  Preference ps(single.variables());
  CHECK(find_si_on(single, "X", ps, false, SiMode::exact).empty());

  Bcs loose({{"X", {"x1", "x2"}}, {"Y", {"y1"}}}, {});
  CHECK(find_any_si(loose, Preference(loose.variables()), false, SiMode::exact).empty());
}

TEST_CASE("deciders against the brute-force oracle on random structures") {
  gen::Rng rng(2024);
  for (int t = 0; t < 300; ++t) {
    auto b = gen::bcs(rng, 4, 3);
    gen::RandomPref rp(rng, b);
    auto geq = [&](std::size_t i, std::size_t a, std::size_t j, std::size_t c) {
      return rp.geq(i, a, j, c);
    };
    for (std::size_t x = 0; x < b.size(); ++x)
      for (std::size_t y = 0; y < b.size(); ++y)
        for (bool strict : {false, true}) {
          const auto& xid = b.variable(x).id;
          const auto& yid = b.variable(y).id;
          auto exact = decide_si(b, xid, yid, rp.pref, strict, SiMode::exact);
          CHECK(exact.yes == oracle::si_by(b, x, y, strict, geq));
          CHECK(exact.yes == implies(b, improvement_oc(xid, yid, rp.pref, strict)));
          if (exact.counterexample) {
            const auto& a = *exact.counterexample;
            CHECK(oracle::assignment_ok(b, a));
            bool fwd = geq(y, a[y], x, a[x]), bwd = geq(x, a[x], y, a[y]);
            CHECK((strict ? !(fwd && !bwd) : !fwd));
          }
          auto prop = decide_si(b, xid, yid, rp.pref, strict, SiMode::propagation);
          if (prop.yes) CHECK(exact.yes);
          auto refu = decide_si(b, xid, yid, rp.pref, strict, SiMode::refutation);
          if (refu.yes) CHECK(exact.yes);
          if (strict && exact.yes) {
            CHECK(decide_si(b, xid, yid, rp.pref, false, SiMode::exact).yes);
          }
        }
  }
}

TEST_CASE("completeness on closed structures") {
  Rng rng(7);
  gen::Rng grng(7);
  for (int t = 0; t < 150; ++t) {
    auto mc = random_max_closed_bcs(rng);
    gen::RandomPref rp(grng, mc.bcs);
    SiCertificate cert;
    cert.orders = mc.orders;
    for (const auto& vx : mc.bcs.variables())
      for (const auto& vy : mc.bcs.variables()) {
        auto exact = decide_si(mc.bcs, vx.id, vy.id, rp.pref, false, SiMode::exact);
        auto prop = decide_si(mc.bcs, vx.id, vy.id, rp.pref, false, SiMode::propagation, cert);
        CHECK(prop.certified);
        CHECK(prop.yes == exact.yes);
      }

    auto jc = random_join_closed_bcs(rng);
    gen::RandomPref rj(grng, jc.bcs);
    SiCertificate jcert;
    jcert.joins = jc.joins;
    for (const auto& vx : jc.bcs.variables())
      for (const auto& vy : jc.bcs.variables())
        for (bool strict : {false, true}) {
          auto exact = decide_si(jc.bcs, vx.id, vy.id, rj.pref, strict, SiMode::exact);
          auto refu = decide_si(jc.bcs, vx.id, vy.id, rj.pref, strict, SiMode::refutation, jcert);
          CHECK(refu.certified);
          CHECK(refu.yes == exact.yes);
        }
  }
}

TEST_CASE("verdicts are monotone in the preference") {
  gen::Rng rng(55);
  for (int t = 0; t < 150; ++t) {
    auto b = gen::bcs(rng, 3, 3);
    gen::RandomPref small(rng, b);
    // Extend the preference with everything the full order implies plus more.
    std::vector<std::pair<Preference::Key, Preference::Key>> geq;
    for (std::size_t i = 0; i < b.size(); ++i)
      for (std::size_t a = 0; a < b.variable(i).domain.size(); ++a)
        for (std::size_t j = 0; j < b.size(); ++j)
          for (std::size_t c = 0; c < b.variable(j).domain.size(); ++c) {
            // A total order by the sum of scores, ties broken by position,
            // contains the strict Pareto order.
            auto key = [&](std::size_t v, std::size_t x) {
              return std::make_tuple(small.score[v][x][0] + small.score[v][x][1], v, x);
            };
            if (key(i, a) > key(j, c)) {
              geq.push_back({{b.variable(i).id, b.variable(i).domain[a]},
                             {b.variable(j).id, b.variable(j).domain[c]}});
            }
          }
    auto big = explicit_preference(b.variables(), geq);
    for (const auto& vx : b.variables())
      for (const auto& vy : b.variables()) {
        if (decide_si(b, vx.id, vy.id, small.pref, false, SiMode::exact).yes) {
          CHECK(decide_si(b, vx.id, vy.id, big, false, SiMode::exact).yes);
        }
      }
  }
}

#include "ocreason/assumptions.hpp"

#include <algorithm>
#include <set>

#include "ocreason/errors.hpp"

namespace ocreason {

DominanceStep oc_dominance(const NormalFormGame& game) {
  auto sub = eliminate_dominated_once(game);
  if (sub.id() == game.id()) {
    return {game, Correspondence::identity(game.id(), game.outcome_count())};
  }
  Correspondence oc(game.id(), sub.id(), game.outcome_count(), sub.outcome_count());
  for (std::size_t o = 0; o < game.outcome_count(); ++o) {
    if (auto image = sub.outcome_from_label(game.outcome_label(o))) oc.set(o, *image);
  }
  return {std::move(sub), std::move(oc)};
}

std::optional<Correspondence> oc_isomorphism(const NormalFormGame& g1, const NormalFormGame& g2) {
  for (const auto* g : {&g1, &g2}) {
    if (has_dominated_action(*g)) {
      throw PreconditionError("isomorphism assumption needs games without strictly dominated "
                              "actions; '" + g->id() + "' has one");
    }
  }
  auto isos = find_isomorphisms(g1, g2);
  if (isos.empty()) return std::nullopt;

  std::vector<std::vector<std::set<std::size_t>>> images(g1.players());
  for (std::size_t i = 0; i < g1.players(); ++i) {
    images[i].resize(g1.action_count(i));
    for (const auto& iso : isos) {
      for (std::size_t a = 0; a < g1.action_count(i); ++a) images[i][a].insert(iso.maps[i][a]);
    }
  }

  Correspondence oc(g1.id(), g2.id(), g1.outcome_count(), g2.outcome_count());
  for (std::size_t o = 0; o < g1.outcome_count(); ++o) {
    auto p = g1.profile(o);
    for (std::size_t t = 0; t < g2.outcome_count(); ++t) {
      auto q = g2.profile(t);
      bool inside = true;
      for (std::size_t i = 0; i < p.size() && inside; ++i) inside = images[i][p[i]].count(q[i]);
      if (inside) oc.set(o, t);
    }
  }
  return oc;
}

Correspondence oc_nash(const NormalFormGame& game) {
  auto equilibria = pure_nash_equilibria(game, false);
  if (equilibria.empty()) {
    throw PreconditionError("Nash assumption needs a pure equilibrium; '" + game.id() +
                            "' has none");
  }
  Correspondence oc(game.id(), game.id(), game.outcome_count(), game.outcome_count());
  for (auto o : equilibria) oc.set(o, o);
  return oc;
}

namespace {

struct ResolvedLabeling {
  std::size_t high[2];
  std::size_t low[2];
};

ResolvedLabeling resolve(const NormalFormGame& g, const RiskLabeling& l) {
  if (g.players() != 2 || g.action_count(0) != 2 || g.action_count(1) != 2) {
    throw PreconditionError("decreasing-risk assumption needs 2x2 games; '" + g.id() +
                            "' is not");
  }
  if (l.high.size() != 2 || l.low.size() != 2) {
    throw InputError("labeling for '" + g.id() + "' needs one high and one low action per player");
  }
  ResolvedLabeling r{};
  for (std::size_t i = 0; i < 2; ++i) {
    auto h = g.action_index(i, l.high[i]);
    auto lo = g.action_index(i, l.low[i]);
    if (!h || !lo) {
      throw InputError("labeling for '" + g.id() + "' names an unknown action of player " +
                       std::to_string(i + 1));
    }
    if (*h == *lo) {
      throw InputError("labeling for '" + g.id() + "' uses the same action twice for player " +
                       std::to_string(i + 1));
    }
    r.high[i] = *h;
    r.low[i] = *lo;
  }
  return r;
}

std::size_t outcome_of(const NormalFormGame& g, std::size_t a0, std::size_t a1) {
  std::size_t p[2] = {a0, a1};
  return g.outcome_index(p);
}

// Outcome in which player i plays `own` and the opponent plays `other`.
std::size_t seen_by(const NormalFormGame& g, std::size_t i, std::size_t own, std::size_t other) {
  return i == 0 ? outcome_of(g, own, other) : outcome_of(g, other, own);
}

void check_equilibria(const NormalFormGame& g, const RiskLabeling& l, const ResolvedLabeling& r) {
  auto strict = pure_nash_equilibria(g, true);
  auto hh = outcome_of(g, r.high[0], r.high[1]);
  auto ll = outcome_of(g, r.low[0], r.low[1]);
  for (auto o : {hh, ll}) {
    if (std::find(strict.begin(), strict.end(), o) == strict.end()) {
      throw PreconditionError("(" + g.outcome_label(o) + ") is not a strict Nash equilibrium of '" +
                              g.id() + "'");
    }
  }
  if (pareto_compare(g.payoff(hh), g.payoff(ll)) != ParetoOrder::better) {
    throw PreconditionError("(" + l.high[0] + "," + l.high[1] +
                            ") does not strictly Pareto-dominate (" + l.low[0] + "," + l.low[1] +
                            ") in '" + g.id() + "'");
  }
}

}  // namespace

Correspondence oc_decreasing_risk(const NormalFormGame& g1, const NormalFormGame& g2,
                                  const RiskLabeling& l1, const RiskLabeling& l2) {
  auto r1 = resolve(g1, l1);
  auto r2 = resolve(g2, l2);
  check_equilibria(g1, l1, r1);
  check_equilibria(g2, l2, r2);

  const std::size_t* acts1[2] = {r1.high, r1.low};
  const std::size_t* acts2[2] = {r2.high, r2.low};
  const RiskLabeling* labels1 = &l1;
  for (std::size_t i = 0; i < 2; ++i) {
    const std::size_t other = 1 - i;
    for (std::size_t k = 0; k < 2; ++k) {
      for (std::size_t level = 0; level < 2; ++level) {
        const auto& hat = g2.utility(seen_by(g2, i, acts2[level][i], acts2[k][other]), i);
        const auto& base = g1.utility(seen_by(g1, i, acts1[level][i], acts1[k][other]), i);
        bool ok = level == 0 ? hat >= base : hat <= base;
        if (ok) continue;
        const auto& own = level == 0 ? labels1->high[i] : labels1->low[i];
        const auto& opp = k == 0 ? labels1->high[other] : labels1->low[other];
        throw PreconditionError(
            "decreasing-risk inequality fails for player " + std::to_string(i + 1) + ": payoff " +
            to_string(hat) + " in '" + g2.id() + "' must be " + (level == 0 ? ">=" : "<=") +
            " payoff " + to_string(base) + " in '" + g1.id() + "' (own action " + own +
            ", opponent action " + opp + " in '" + g1.id() + "')");
      }
    }
  }

  // Per player: image[i][a] is the set of g2 actions a maps to.
  std::vector<std::vector<std::vector<std::size_t>>> image(2, std::vector<std::vector<std::size_t>>(2));
  for (std::size_t i = 0; i < 2; ++i) {
    image[i][r1.high[i]] = {r2.high[i]};
    image[i][r1.low[i]] = {r2.high[i], r2.low[i]};
  }
  Correspondence oc(g1.id(), g2.id(), 4, 4);
  for (std::size_t a = 0; a < 2; ++a) {
    for (std::size_t b = 0; b < 2; ++b) {
      for (auto x : image[0][a]) {
        for (auto y : image[1][b]) oc.set(outcome_of(g1, a, b), outcome_of(g2, x, y));
      }
    }
  }
  return oc;
}

std::vector<RiskLabeling> candidate_risk_labelings(const NormalFormGame& game) {
  std::vector<RiskLabeling> out;
  if (game.players() != 2 || game.action_count(0) != 2 || game.action_count(1) != 2) return out;
  auto strict = pure_nash_equilibria(game, true);
  for (auto hi : strict) {
    for (auto lo : strict) {
      auto ph = game.profile(hi);
      auto pl = game.profile(lo);
      if (ph[0] == pl[0] || ph[1] == pl[1]) continue;
      if (pareto_compare(game.payoff(hi), game.payoff(lo)) != ParetoOrder::better) continue;
      out.push_back({{game.actions(0)[ph[0]], game.actions(1)[ph[1]]},
                     {game.actions(0)[pl[0]], game.actions(1)[pl[1]]}});
    }
  }
  return out;
}

namespace {

const NormalFormGame& find_game(const std::vector<NormalFormGame>& games, const std::string& id) {
  for (const auto& g : games) {
    if (g.id() == id) return g;
  }
  throw InputError("unknown game '" + id + "'");
}

bool pair_selected(const AssumptionSelection& s, const std::string& a, const std::string& b) {
  if (s.isomorphism_pairs.empty()) return true;
  return std::any_of(s.isomorphism_pairs.begin(), s.isomorphism_pairs.end(), [&](const auto& p) {
    return (p.first == a && p.second == b) || (p.first == b && p.second == a);
  });
}

}  // namespace

Bcs build_assumption_bcs(const std::vector<NormalFormGame>& games,
                         const AssumptionSelection& selection) {
  if (games.empty()) throw InputError("no games given");
  if (!selection.any()) throw InputError("no assumption selected");

  std::vector<Variable> variables;
  for (const auto& g : games) variables.push_back({g.id(), g.outcome_labels()});
  std::vector<Correspondence> constraints;

  std::vector<bool> reduced;
  for (const auto& g : games) reduced.push_back(!has_dominated_action(g));

  if (selection.dominance) {
    for (std::size_t i = 0; i < games.size(); ++i) {
      if (reduced[i]) continue;
      auto step = oc_dominance(games[i]);
      for (const auto& h : games) {
        if (&h == &games[i] || !h.same_structure(step.subgame)) continue;
        Correspondence oc(games[i].id(), h.id(), step.oc.rows(), step.oc.cols());
        for (auto [x, y] : step.oc.pairs()) oc.set(x, y);
        constraints.push_back(std::move(oc));
        break;
      }
    }
  }

  if (selection.isomorphism) {
    for (std::size_t i = 0; i < games.size(); ++i) {
      for (std::size_t j = i + 1; j < games.size(); ++j) {
        if (!reduced[i] || !reduced[j]) continue;
        if (!pair_selected(selection, games[i].id(), games[j].id())) continue;
        if (auto oc = oc_isomorphism(games[i], games[j])) constraints.push_back(std::move(*oc));
      }
    }
  }

  if (selection.nash) {
    for (const auto& g : games) {
      if (!pure_nash_equilibria(g, false).empty()) constraints.push_back(oc_nash(g));
    }
  }

  for (const auto& pair : selection.decreasing_risk) {
    constraints.push_back(oc_decreasing_risk(find_game(games, pair.g1), find_game(games, pair.g2),
                                             pair.l1, pair.l2));
  }

  return Bcs(std::move(variables), std::move(constraints));
}

}  // namespace ocreason

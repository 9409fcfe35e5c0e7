#include "ocreason/closedness.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "ocreason/assumptions.hpp"
#include "ocreason/errors.hpp"

namespace ocreason {

namespace {

using JoinFn = std::function<std::size_t(std::size_t variable, std::size_t a, std::size_t b)>;

std::optional<ClosednessWitness> check_constraint(const Bcs& bcs, std::size_t index,
                                                  const JoinFn& join) {
  const auto& c = bcs.constraints()[index];
  const auto x = bcs.require(c.source());
  const auto y = bcs.require(c.target());
  const auto pairs = c.pairs();
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    for (std::size_t q = p + 1; q < pairs.size(); ++q) {
      Correspondence::Pair top{join(x, pairs[p].first, pairs[q].first),
                               join(y, pairs[p].second, pairs[q].second)};
      if (!c.contains(top.first, top.second)) return ClosednessWitness{index, pairs[p], pairs[q], top};
    }
  }
  return std::nullopt;
}

ClosednessReport check_all(const Bcs& bcs, const JoinFn& join) {
  for (std::size_t i = 0; i < bcs.constraints().size(); ++i) {
    if (auto w = check_constraint(bcs, i, join)) return {false, w};
  }
  return {};
}

// ranks[v][value] = position of value in the ascending order of variable v.
std::vector<std::vector<std::size_t>> ranks_of(const Bcs& bcs, const VariableOrder& orders) {
  std::vector<std::vector<std::size_t>> ranks;
  for (const auto& var : bcs.variables()) {
    auto it = orders.ascending.find(var.id);
    if (it == orders.ascending.end()) throw InputError("no order given for variable '" + var.id + "'");
    const auto& asc = it->second;
    std::vector<std::size_t> rank(var.domain.size(), var.domain.size());
    if (asc.size() != var.domain.size()) {
      throw InputError("order for '" + var.id + "' does not list every value exactly once");
    }
    for (std::size_t pos = 0; pos < asc.size(); ++pos) {
      if (asc[pos] >= rank.size() || rank[asc[pos]] != rank.size()) {
        throw InputError("order for '" + var.id + "' does not list every value exactly once");
      }
      rank[asc[pos]] = pos;
    }
    ranks.push_back(std::move(rank));
  }
  return ranks;
}

}  // namespace

ClosednessReport is_max_closed(const Bcs& bcs, const VariableOrder& orders) {
  auto ranks = ranks_of(bcs, orders);
  return check_all(bcs, [&](std::size_t v, std::size_t a, std::size_t b) {
    return ranks[v][a] >= ranks[v][b] ? a : b;
  });
}

void validate_joins(const Bcs& bcs, const JoinFamily& joins) {
  for (const auto& var : bcs.variables()) {
    auto it = joins.tables.find(var.id);
    if (it == joins.tables.end()) throw InputError("no join table for variable '" + var.id + "'");
    const auto& t = it->second;
    const auto n = var.domain.size();
    auto fail = [&](const std::string& axiom) {
      throw InputError("join table for '" + var.id + "' violates " + axiom);
    };
    if (t.size() != n) fail("shape (one row per value)");
    for (const auto& row : t) {
      if (row.size() != n) fail("shape (one column per value)");
      for (auto v : row) {
        if (v >= n) fail("range (entries must be values of the domain)");
      }
    }
    for (std::size_t a = 0; a < n; ++a) {
      if (t[a][a] != a) fail("idempotency");
    }
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        if (t[a][b] != t[b][a]) fail("commutativity");
      }
    }
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        for (std::size_t c = 0; c < n; ++c) {
          if (t[t[a][b]][c] != t[a][t[b][c]]) fail("associativity");
        }
      }
    }
  }
}

ClosednessReport is_join_closed(const Bcs& bcs, const JoinFamily& joins) {
  validate_joins(bcs, joins);
  std::vector<const std::vector<std::vector<std::size_t>>*> tables;
  for (const auto& var : bcs.variables()) tables.push_back(&joins.tables.at(var.id));
  return check_all(bcs, [&](std::size_t v, std::size_t a, std::size_t b) {
    return (*tables[v])[a][b];
  });
}

JoinFamily joins_from_orders(const Bcs& bcs, const VariableOrder& orders) {
  auto ranks = ranks_of(bcs, orders);
  JoinFamily out;
  for (std::size_t v = 0; v < bcs.size(); ++v) {
    const auto n = ranks[v].size();
    std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) t[a][b] = ranks[v][a] >= ranks[v][b] ? a : b;
    }
    out.tables[bcs.variable(v).id] = std::move(t);
  }
  return out;
}

std::vector<std::vector<std::size_t>> compile_semilattice(
    const std::vector<std::string>& domain,
    const std::vector<std::pair<std::string, std::string>>& edges) {
  const auto n = domain.size();
  auto index = [&](const std::string& label) {
    auto it = std::find(domain.begin(), domain.end(), label);
    if (it == domain.end()) throw InputError("semilattice edge names unknown value '" + label + "'");
    return static_cast<std::size_t>(it - domain.begin());
  };
  // leq[a][b]: a is below or equal to b.
  std::vector<std::vector<char>> leq(n, std::vector<char>(n, 0));
  for (std::size_t a = 0; a < n; ++a) leq[a][a] = 1;
  for (const auto& [child, parent] : edges) leq[index(child)][index(parent)] = 1;
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        if (leq[a][k] && leq[k][b]) leq[a][b] = 1;
      }
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (leq[a][b] && leq[b][a]) {
        throw InputError("semilattice edges form a cycle through '" + domain[a] + "' and '" +
                         domain[b] + "'");
      }
    }
  }
  std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      std::vector<std::size_t> upper;
      for (std::size_t c = 0; c < n; ++c) {
        if (leq[a][c] && leq[b][c]) upper.push_back(c);
      }
      auto least = std::find_if(upper.begin(), upper.end(), [&](std::size_t c) {
        return std::all_of(upper.begin(), upper.end(), [&](std::size_t d) { return leq[c][d]; });
      });
      if (least == upper.end()) {
        throw InputError("'" + domain[a] + "' and '" + domain[b] +
                         "' have no unique least upper bound");
      }
      table[a][b] = *least;
    }
  }
  return table;
}

std::vector<std::pair<std::string, std::string>> hasse_edges(
    const std::vector<std::string>& domain, const std::vector<std::vector<std::size_t>>& table) {
  const auto n = domain.size();
  auto below = [&](std::size_t a, std::size_t b) { return a != b && table[a][b] == b; };
  std::vector<std::pair<std::string, std::string>> edges;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (!below(a, b)) continue;
      bool covered = true;
      for (std::size_t c = 0; c < n && covered; ++c) covered = !(below(a, c) && below(c, b));
      if (covered) edges.emplace_back(domain[a], domain[b]);
    }
  }
  return edges;
}

std::optional<VariableOrder> search_max_orders(const Bcs& bcs, OrderSearchOptions options) {
  const auto n = bcs.size();
  for (const auto& var : bcs.variables()) {
    if (var.domain.size() > options.max_domain) {
      throw PreconditionError("order search is limited to domains of at most " +
                              std::to_string(options.max_domain) + " values; '" + var.id +
                              "' has " + std::to_string(var.domain.size()));
    }
  }
  // Constraints become checkable once their later variable is ordered.
  std::vector<std::vector<std::size_t>> ready(n);
  for (std::size_t c = 0; c < bcs.constraints().size(); ++c) {
    const auto& con = bcs.constraints()[c];
    ready[std::max(bcs.require(con.source()), bcs.require(con.target()))].push_back(c);
  }

  std::vector<std::vector<std::size_t>> ranks(n);
  std::vector<std::vector<std::size_t>> ascending(n);
  JoinFn join = [&](std::size_t v, std::size_t a, std::size_t b) {
    return ranks[v][a] >= ranks[v][b] ? a : b;
  };
  std::function<bool(std::size_t)> descend = [&](std::size_t i) {
    if (i == n) return true;
    auto& asc = ascending[i];
    asc.resize(bcs.variable(i).domain.size());
    std::iota(asc.begin(), asc.end(), std::size_t{0});
    ranks[i].assign(asc.size(), 0);
    do {
      for (std::size_t pos = 0; pos < asc.size(); ++pos) ranks[i][asc[pos]] = pos;
      bool ok = std::none_of(ready[i].begin(), ready[i].end(),
                             [&](std::size_t c) { return check_constraint(bcs, c, join).has_value(); });
      if (ok && descend(i + 1)) return true;
    } while (std::next_permutation(asc.begin(), asc.end()));
    return false;
  };
  if (!descend(0)) return std::nullopt;
  VariableOrder out;
  for (std::size_t i = 0; i < n; ++i) out.ascending[bcs.variable(i).id] = ascending[i];
  return out;
}

namespace {

std::vector<std::string> label_tuple(const NormalFormGame& g, std::size_t outcome) {
  auto p = g.profile(outcome);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < p.size(); ++i) labels.push_back(g.actions(i)[p[i]]);
  return labels;
}

// Outcomes sorted ascending by their label tuples.
std::vector<std::size_t> by_labels(const NormalFormGame& g, std::vector<std::size_t> outcomes) {
  std::stable_sort(outcomes.begin(), outcomes.end(), [&](std::size_t a, std::size_t b) {
    return label_tuple(g, a) < label_tuple(g, b);
  });
  return outcomes;
}

// Outcomes grouped into products of per-player automorphism orbits; groups
// ascend by their smallest member, members ascend by label.
std::vector<std::size_t> orbit_order(const NormalFormGame& g) {
  auto autos = find_isomorphisms(g, g);
  std::vector<std::vector<std::size_t>> orbit(g.players());
  for (std::size_t i = 0; i < g.players(); ++i) {
    orbit[i].resize(g.action_count(i));
    for (std::size_t a = 0; a < g.action_count(i); ++a) {
      std::size_t least = a;
      for (const auto& iso : autos) least = std::min(least, iso.maps[i][a]);
      orbit[i][a] = least;
    }
  }
  auto key = [&](std::size_t o) {
    auto p = g.profile(o);
    for (std::size_t i = 0; i < p.size(); ++i) p[i] = orbit[i][p[i]];
    return p;
  };
  std::vector<std::size_t> all(g.outcome_count());
  std::iota(all.begin(), all.end(), std::size_t{0});
  all = by_labels(g, std::move(all));
  std::vector<ActionProfile> class_keys;
  std::vector<std::vector<std::size_t>> classes;
  for (auto o : all) {
    auto k = key(o);
    auto it = std::find(class_keys.begin(), class_keys.end(), k);
    if (it == class_keys.end()) {
      class_keys.push_back(k);
      classes.push_back({o});
    } else {
      classes[it - class_keys.begin()].push_back(o);
    }
  }
  std::vector<std::size_t> out;
  for (const auto& c : classes) out.insert(out.end(), c.begin(), c.end());
  return out;
}

std::vector<std::size_t> risk_order(const NormalFormGame& g, const RiskLabeling& l) {
  auto at = [&](const std::string& a, const std::string& b) {
    std::size_t p[2] = {*g.action_index(0, a), *g.action_index(1, b)};
    return g.outcome_index(p);
  };
  return {at(l.high[0], l.low[1]), at(l.low[0], l.high[1]), at(l.low[0], l.low[1]),
          at(l.high[0], l.high[1])};
}

bool same_pairs(const Correspondence& a, const Correspondence& b) {
  return a.rows() == b.rows() && a.cols() == b.cols() && a.pairs() == b.pairs();
}

}  // namespace

VariableOrder orders_for_assumptions(const std::vector<NormalFormGame>& games, const Bcs& bcs) {
  auto game_of = [&](const std::string& id) -> const NormalFormGame& {
    for (const auto& g : games) {
      if (g.id() == id) return g;
    }
    throw InputError("variable '" + id + "' is not one of the given games");
  };
  for (const auto& var : bcs.variables()) {
    if (game_of(var.id).outcome_labels() != var.domain) {
      throw InputError("variable '" + var.id + "' does not list the outcomes of its game");
    }
  }

  std::map<std::string, RiskLabeling> risk;
  for (const auto& c : bcs.constraints()) {
    const auto& g = game_of(c.source());
    const auto& h = game_of(c.target());
    bool known = false;
    if (has_dominated_action(g)) {
      auto step = oc_dominance(g);
      known = h.same_structure(step.subgame) && same_pairs(step.oc, c);
    }
    if (!known && g.id() == h.id() && !pure_nash_equilibria(g, false).empty()) {
      known = same_pairs(oc_nash(g), c);
    }
    if (!known && g.id() != h.id() && !has_dominated_action(g) && !has_dominated_action(h)) {
      auto iso = oc_isomorphism(g, h);
      known = iso && same_pairs(*iso, c);
    }
    for (const auto& l1 : candidate_risk_labelings(g)) {
      for (const auto& l2 : candidate_risk_labelings(h)) {
        if (known) break;
        try {
          if (same_pairs(oc_decreasing_risk(g, h, l1, l2), c)) {
            known = true;
            risk.emplace(g.id(), l1);
            risk.emplace(h.id(), l2);
          }
        } catch (const PreconditionError&) {
        }
      }
    }
    if (!known) {
      throw InputError("constraint " + c.source() + "->" + c.target() +
                       " is not generated by any of the assumptions");
    }
  }

  std::vector<const NormalFormGame*> listed;
  for (const auto& var : bcs.variables()) listed.push_back(&game_of(var.id));

  std::map<std::string, std::vector<std::size_t>> ascending;
  std::vector<bool> done(listed.size(), false);
  for (std::size_t i = 0; i < listed.size(); ++i) {
    if (done[i] || has_dominated_action(*listed[i])) continue;
    std::vector<std::size_t> group{i};
    for (std::size_t j = i + 1; j < listed.size(); ++j) {
      if (!done[j] && !has_dominated_action(*listed[j]) &&
          !find_isomorphisms(*listed[i], *listed[j]).empty()) {
        group.push_back(j);
      }
    }
    auto rep = group.front();
    for (auto j : group) {
      if (risk.count(listed[j]->id())) {
        rep = j;
        break;
      }
    }
    const auto& r = *listed[rep];
    auto rep_order = risk.count(r.id()) ? risk_order(r, risk.at(r.id())) : orbit_order(r);
    for (auto j : group) {
      done[j] = true;
      const auto& g = *listed[j];
      if (j == rep) {
        ascending[g.id()] = rep_order;
        continue;
      }
      auto iso = find_isomorphisms(r, g).front();
      std::vector<std::size_t> order;
      for (auto o : rep_order) {
        auto p = r.profile(o);
        for (std::size_t k = 0; k < p.size(); ++k) p[k] = iso.maps[k][p[k]];
        order.push_back(g.outcome_index(p));
      }
      ascending[g.id()] = std::move(order);
    }
  }

  for (const auto* g : listed) {
    if (!has_dominated_action(*g)) continue;
    auto reduced = fully_reduce(*g).reduced;
    const NormalFormGame* target = nullptr;
    for (const auto* h : listed) {
      if (!has_dominated_action(*h) && h->same_structure(reduced)) {
        target = h;
        break;
      }
    }
    std::vector<std::size_t> top;
    std::vector<bool> placed(g->outcome_count(), false);
    if (target) {
      for (auto o : ascending.at(target->id())) {
        auto mine = *g->outcome_from_label(target->outcome_label(o));
        top.push_back(mine);
        placed[mine] = true;
      }
    }
    std::vector<std::size_t> rest;
    for (std::size_t o = 0; o < g->outcome_count(); ++o) {
      if (!placed[o]) rest.push_back(o);
    }
    auto order = by_labels(*g, std::move(rest));
    order.insert(order.end(), top.begin(), top.end());
    ascending[g->id()] = std::move(order);
  }

  return VariableOrder{std::move(ascending)};
}

}  // namespace ocreason

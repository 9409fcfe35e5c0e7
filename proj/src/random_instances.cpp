#include "ocreason/random_instances.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace ocreason {

namespace {

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

bool coin(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

Variable make_variable(std::size_t index, std::size_t size) {
  Variable v{"V" + std::to_string(index + 1), {}};
  for (std::size_t x = 0; x < size; ++x) v.domain.push_back("v" + std::to_string(x + 1));
  return v;
}

Correspondence random_relation(Rng& rng, const Variable& x, const Variable& y, double p) {
  Correspondence c(x.id, y.id, x.domain.size(), y.domain.size());
  for (std::size_t a = 0; a < x.domain.size(); ++a) {
    for (std::size_t b = 0; b < y.domain.size(); ++b) {
      if (coin(rng, p)) c.set(a, b);
    }
  }
  return c;
}

// Random variable pairs, with a random direction per constraint.
template <typename Make>
std::vector<Correspondence> random_constraints(Rng& rng, const std::vector<Variable>& vars,
                                               double probability, Make make) {
  std::vector<Correspondence> out;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    for (std::size_t j = i + 1; j < vars.size(); ++j) {
      if (!coin(rng, probability)) continue;
      out.push_back(coin(rng, 0.5) ? make(i, j) : make(j, i));
    }
  }
  return out;
}

std::vector<std::vector<std::size_t>> max_table(const std::vector<std::size_t>& ascending) {
  const auto n = ascending.size();
  std::vector<std::size_t> rank(n);
  for (std::size_t pos = 0; pos < n; ++pos) rank[ascending[pos]] = pos;
  std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) t[a][b] = rank[a] >= rank[b] ? a : b;
  }
  return t;
}

}  // namespace

Bcs random_bcs(Rng& rng, const RandomBcsOptions& options) {
  std::vector<Variable> vars;
  auto n = uniform(rng, options.min_variables, options.max_variables);
  for (std::size_t i = 0; i < n; ++i) {
    vars.push_back(make_variable(i, uniform(rng, options.min_domain, options.max_domain)));
  }
  auto constraints = random_constraints(rng, vars, options.constraint_probability,
                                        [&](std::size_t i, std::size_t j) {
                                          return random_relation(rng, vars[i], vars[j],
                                                                 options.pair_probability);
                                        });
  return Bcs(std::move(vars), std::move(constraints));
}

Correspondence close_under_joins(Correspondence relation,
                                 const std::vector<std::vector<std::size_t>>& jx,
                                 const std::vector<std::vector<std::size_t>>& jy) {
  bool grown = true;
  while (grown) {
    grown = false;
    auto pairs = relation.pairs();
    for (std::size_t p = 0; p < pairs.size(); ++p) {
      for (std::size_t q = p + 1; q < pairs.size(); ++q) {
        auto x = jx[pairs[p].first][pairs[q].first];
        auto y = jy[pairs[p].second][pairs[q].second];
        if (!relation.contains(x, y)) {
          relation.set(x, y);
          grown = true;
        }
      }
    }
  }
  return relation;
}

MaxClosedInstance random_max_closed_bcs(Rng& rng, const RandomBcsOptions& options) {
  std::vector<Variable> vars;
  MaxClosedInstance out;
  std::vector<std::vector<std::vector<std::size_t>>> tables;
  auto n = uniform(rng, options.min_variables, options.max_variables);
  for (std::size_t i = 0; i < n; ++i) {
    vars.push_back(make_variable(i, uniform(rng, options.min_domain, options.max_domain)));
    std::vector<std::size_t> asc(vars.back().domain.size());
    std::iota(asc.begin(), asc.end(), std::size_t{0});
    std::shuffle(asc.begin(), asc.end(), rng);
    tables.push_back(max_table(asc));
    out.orders.ascending[vars.back().id] = std::move(asc);
  }
  auto constraints = random_constraints(
      rng, vars, options.constraint_probability, [&](std::size_t i, std::size_t j) {
        return close_under_joins(random_relation(rng, vars[i], vars[j], options.pair_probability),
                                 tables[i], tables[j]);
      });
  out.bcs = Bcs(std::move(vars), std::move(constraints));
  return out;
}

std::vector<std::vector<std::size_t>> random_semilattice(Rng& rng, std::size_t max_size) {
  max_size = std::max<std::size_t>(max_size, 1);
  if (coin(rng, 0.3)) {
    std::vector<std::size_t> asc(uniform(rng, 1, max_size));
    std::iota(asc.begin(), asc.end(), std::size_t{0});
    std::shuffle(asc.begin(), asc.end(), rng);
    return max_table(asc);
  }
  for (;;) {
    // Subsets of a 3-element ground set as bit masks, closed under union.
    std::set<unsigned> family;
    auto seeds = uniform(rng, 1, 4);
    for (std::size_t s = 0; s < seeds; ++s) family.insert(static_cast<unsigned>(uniform(rng, 0, 7)));
    bool grown = true;
    while (grown) {
      grown = false;
      for (auto a : std::vector<unsigned>(family.begin(), family.end())) {
        for (auto b : std::vector<unsigned>(family.begin(), family.end())) {
          grown = family.insert(a | b).second || grown;
        }
      }
    }
    if (family.size() > max_size) continue;
    std::vector<unsigned> elements(family.begin(), family.end());
    std::shuffle(elements.begin(), elements.end(), rng);
    const auto n = elements.size();
    std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        auto u = elements[a] | elements[b];
        t[a][b] = static_cast<std::size_t>(std::find(elements.begin(), elements.end(), u) -
                                           elements.begin());
      }
    }
    return t;
  }
}

JoinClosedInstance random_join_closed_bcs(Rng& rng, const RandomBcsOptions& options) {
  JoinClosedInstance out;
  std::vector<Variable> vars;
  std::vector<std::vector<std::vector<std::size_t>>> tables;
  auto n = uniform(rng, options.min_variables, options.max_variables);
  for (std::size_t i = 0; i < n; ++i) {
    tables.push_back(random_semilattice(rng, options.max_domain));
    vars.push_back(make_variable(i, tables.back().size()));
    out.joins.tables[vars.back().id] = tables.back();
  }
  auto constraints = random_constraints(
      rng, vars, options.constraint_probability, [&](std::size_t i, std::size_t j) {
        return close_under_joins(random_relation(rng, vars[i], vars[j], options.pair_probability),
                                 tables[i], tables[j]);
      });
  out.bcs = Bcs(std::move(vars), std::move(constraints));
  return out;
}

NormalFormGame random_game(Rng& rng, const std::string& id, const RandomGameOptions& options) {
  std::vector<std::vector<std::string>> actions(options.players);
  std::size_t outcomes = 1;
  for (std::size_t i = 0; i < options.players; ++i) {
    auto k = uniform(rng, options.min_actions, options.max_actions);
    for (std::size_t a = 0; a < k; ++a) {
      actions[i].push_back(std::string(1, static_cast<char>('a' + i)) + std::to_string(a + 1));
    }
    outcomes *= k;
  }
  std::uniform_int_distribution<int> payoff(options.min_payoff, options.max_payoff);
  std::vector<PayoffVector> utilities(outcomes);
  for (auto& u : utilities) {
    for (std::size_t i = 0; i < options.players; ++i) u.push_back(Rational(payoff(rng)));
  }
  return NormalFormGame(id, std::move(actions), std::move(utilities));
}

}  // namespace ocreason

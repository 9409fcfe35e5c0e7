#include "ocreason/reductions.hpp"

#include <algorithm>
#include <stdexcept>

#include "ocreason/errors.hpp"

namespace ocreason {

Bcs montanari_instance() {
  std::vector<Variable> vars;
  for (int i = 1; i <= 4; ++i) vars.push_back({"X" + std::to_string(i), {"1", "2", "3"}});
  std::vector<Correspondence> constraints;
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i + 1; j < 4; ++j) {
      auto c = Correspondence::full(vars[i].id, vars[j].id, 3, 3);
      for (std::size_t v = 0; v < 3; ++v) c.set(v, v, false);
      constraints.push_back(std::move(c));
    }
  }
  return Bcs(std::move(vars), std::move(constraints));
}

namespace {

Variable numbered(const std::string& id, const std::string& prefix, int count) {
  Variable v{id, {}};
  for (int i = 1; i <= count; ++i) v.domain.push_back(prefix + std::to_string(i));
  return v;
}

// Every source value maps to the whole target domain except the listed rows.
Correspondence all_except(const Variable& x, const Variable& y,
                          const std::vector<std::pair<std::string, std::vector<std::string>>> rows) {
  auto c = Correspondence::full(x.id, y.id, x.domain.size(), y.domain.size());
  auto at = [](const Variable& v, const std::string& label) {
    return static_cast<std::size_t>(std::find(v.domain.begin(), v.domain.end(), label) -
                                    v.domain.begin());
  };
  for (const auto& [from, to] : rows) {
    auto r = at(x, from);
    c.image(r).reset();
    for (const auto& label : to) c.set(r, at(y, label));
  }
  return c;
}

}  // namespace

JoinInstance join_incompleteness_instance() {
  auto x = numbered("X", "x", 2);
  auto y = numbered("Y", "y", 2);
  auto z = numbered("Z", "z", 4);
  auto w = numbered("W", "w", 7);
  std::vector<Correspondence> constraints{
      all_except(x, z, {{"x2", {"z2", "z4"}}}),
      all_except(y, z, {{"y2", {"z3", "z4"}}}),
      all_except(x, w, {{"x2", {"w2", "w5", "w6"}}}),
      all_except(y, w, {{"y2", {"w3", "w6", "w7"}}}),
      all_except(z, w, {{"z4", {"w7", "w5", "w4"}}}),
  };
  JoinInstance out{Bcs({x, y, z, w}, std::move(constraints)), {}, {}};
  out.edges["X"] = {{"x2", "x1"}};
  out.edges["Y"] = {{"y2", "y1"}};
  out.edges["Z"] = {{"z2", "z1"}, {"z3", "z1"}, {"z4", "z2"}, {"z4", "z3"}};
  out.edges["W"] = {{"w2", "w1"}, {"w3", "w1"}, {"w4", "w1"}, {"w5", "w2"}, {"w6", "w2"},
                    {"w6", "w3"}, {"w7", "w3"}, {"w7", "w4"}, {"w5", "w4"}};
  for (const auto& var : out.bcs.variables()) {
    out.joins.tables[var.id] = compile_semilattice(var.domain, out.edges[var.id]);
  }
  return out;
}

Bcs SiHardnessInstance::bcs() const {
  std::vector<Variable> vars;
  for (const auto& g : games) vars.push_back({g.id(), g.outcome_labels()});
  return Bcs(std::move(vars), assumptions);
}

namespace {

std::size_t diagonal(std::size_t size, std::size_t l) { return l * size + l; }

// Square game with payoffs diag[l] on (a_l, a_l) and (0, 0) elsewhere.
NormalFormGame diagonal_game(std::string id, const std::vector<PayoffVector>& diag) {
  const auto s = diag.size();
  std::vector<std::string> acts;
  for (std::size_t l = 1; l <= s; ++l) acts.push_back("a" + std::to_string(l));
  std::vector<PayoffVector> utilities(s * s, PayoffVector{Rational(0), Rational(0)});
  for (std::size_t l = 0; l < s; ++l) utilities[diagonal(s, l)] = diag[l];
  return NormalFormGame(std::move(id), {acts, acts}, std::move(utilities));
}

}  // namespace

SiHardnessInstance csp_to_si_games(const Bcs& source, bool incomparable_tops) {
  SiHardnessInstance out;
  out.source = source;
  out.gamma = "Gamma";
  out.gamma_prime = "Gamma'";
  out.games.push_back(diagonal_game(out.gamma, {{Rational(4), Rational(0)}, {Rational(2), Rational(1)}}));
  out.games.push_back(NormalFormGame(out.gamma_prime, {{"a1"}, {"a1"}}, {{Rational(3), Rational(2)}}));

  const auto n = source.size();
  std::size_t largest = 0;
  for (const auto& v : source.variables()) largest = std::max(largest, v.domain.size() + 1);
  const Rational eps(1, 4 * static_cast<std::int64_t>(n + 1));

  for (std::size_t t = 0; t < n; ++t) {
    const auto k = source.variable(t).domain.size();
    const auto top = static_cast<std::int64_t>(largest + 4 + t);
    std::vector<PayoffVector> diag;
    for (std::size_t l = 1; l <= k + 1; ++l) {
      const auto li = static_cast<std::int64_t>(l);
      if (!incomparable_tops) {
        diag.push_back({Rational(top - li), Rational(li)});
      } else if (l <= k) {
        diag.push_back({Rational(top - li), Rational(li, 2 * static_cast<std::int64_t>(k + 1))});
      } else {
        const Rational shift = eps * static_cast<std::int64_t>(t + 1);
        diag.push_back({Rational(3) + shift, Rational(1) - shift});
      }
    }
    out.games.push_back(diagonal_game("Gamma_" + source.variable(t).id, diag));
  }

  for (std::size_t a = 0; a < out.games.size(); ++a) {
    for (std::size_t b = a + 1; b < out.games.size(); ++b) {
      if (out.games[a].outcome_count() > 1 && !find_isomorphisms(out.games[a], out.games[b]).empty()) {
        throw std::logic_error("constructed games '" + out.games[a].id() + "' and '" +
                               out.games[b].id() + "' are isomorphic");
      }
    }
  }

  const auto& gamma = out.games[0];
  const auto& gamma_prime = out.games[1];
  auto game_for = [&](std::size_t t) -> const NormalFormGame& { return out.games[t + 2]; };

  for (const auto& c : source.constraints()) {
    auto i = source.require(c.source());
    auto j = source.require(c.target());
    const auto si = source.variable(i).domain.size() + 1;
    const auto sj = source.variable(j).domain.size() + 1;
    Correspondence oc(game_for(i).id(), game_for(j).id(), si * si, sj * sj);
    oc.set(diagonal(si, si - 1), diagonal(sj, sj - 1));
    for (auto [x, y] : c.pairs()) oc.set(diagonal(si, x), diagonal(sj, y));
    out.assumptions.push_back(std::move(oc));
  }
  for (std::size_t t = 0; t < n; ++t) {
    const auto s = source.variable(t).domain.size() + 1;
    Correspondence from_gamma(gamma.id(), game_for(t).id(), 4, s * s);
    for (std::size_t l = 0; l + 1 < s; ++l) from_gamma.set(diagonal(2, 0), diagonal(s, l));
    from_gamma.set(diagonal(2, 1), diagonal(s, s - 1));
    out.assumptions.push_back(std::move(from_gamma));

    Correspondence from_prime(gamma_prime.id(), game_for(t).id(), 1, s * s);
    for (std::size_t l = 0; l < s; ++l) from_prime.set(0, diagonal(s, l));
    out.assumptions.push_back(std::move(from_prime));
  }
  Correspondence between(gamma_prime.id(), gamma.id(), 1, 4);
  between.set(0, diagonal(2, 0));
  between.set(0, diagonal(2, 1));
  out.assumptions.push_back(std::move(between));
  return out;
}

namespace {

std::string fresh(std::string base, const std::vector<std::string>& taken) {
  while (std::find(taken.begin(), taken.end(), base) != taken.end()) base += "'";
  return base;
}

std::vector<std::string> variable_ids(const Bcs& bcs) {
  std::vector<std::string> ids;
  for (const auto& v : bcs.variables()) ids.push_back(v.id);
  return ids;
}

}  // namespace

AugmentedBcs augment_always_satisfiable(const Bcs& source, const std::string& switch_id) {
  AugmentedBcs out;
  out.anchor_variable = fresh(switch_id, variable_ids(source));
  out.anchor_value = "1";

  std::vector<Variable> vars{{out.anchor_variable, {"0", "1"}}};
  for (const auto& v : source.variables()) {
    out.off_values.push_back(fresh("0", v.domain));
    auto extended = v;
    extended.domain.push_back(out.off_values.back());
    vars.push_back(std::move(extended));
  }

  // The off value sits at the end of each extended domain.
  std::vector<Correspondence> constraints;
  for (std::size_t i = 0; i < source.size(); ++i) {
    const auto& v = source.variable(i);
    const auto k = v.domain.size();
    Correspondence c(out.anchor_variable, v.id, 2, k + 1);
    c.set(0, k);
    for (std::size_t x = 0; x < k; ++x) c.set(1, x);
    constraints.push_back(std::move(c));
  }
  for (const auto& c : source.constraints()) {
    Correspondence ext(c.source(), c.target(), c.rows() + 1, c.cols() + 1);
    for (auto [x, y] : c.pairs()) ext.set(x, y);
    ext.set(c.rows(), c.cols());
    constraints.push_back(std::move(ext));
  }
  out.bcs = Bcs(std::move(vars), std::move(constraints));
  return out;
}

Correspondence ImplicationInstance::claim() const {
  return Correspondence::from_pairs(x0, indicator, 1, 2, {{0, 0}});
}

ImplicationInstance implication_instance(const Bcs& source, const std::string& variable,
                                         const std::string& value) {
  auto i = source.require(variable);
  auto vi = source.value_index(i, value);
  if (enumerate_satisfying(source, 1).empty()) {
    throw PreconditionError("implication construction needs a satisfiable source structure");
  }
  ImplicationInstance out;
  auto ids = variable_ids(source);
  out.x0 = fresh("X0", ids);
  ids.push_back(out.x0);
  out.indicator = fresh("X" + std::to_string(source.size() + 1), ids);

  auto vars = source.variables();
  vars.push_back({out.x0, {"0"}});
  vars.push_back({out.indicator, {"0", "1"}});
  auto constraints = source.constraints();
  const auto k = source.variable(i).domain.size();
  Correspondence watch(variable, out.indicator, k, 2);
  for (std::size_t x = 0; x < k; ++x) watch.set(x, x == vi ? 1 : 0);
  constraints.push_back(std::move(watch));
  out.bcs = Bcs(std::move(vars), std::move(constraints));
  return out;
}

}  // namespace ocreason

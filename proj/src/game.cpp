#include "ocreason/game.hpp"

#include <algorithm>
#include <numeric>

#include "ocreason/errors.hpp"

namespace ocreason {

NormalFormGame::NormalFormGame(std::string id, std::vector<std::vector<std::string>> actions,
                               std::vector<PayoffVector> utilities)
    : id_(std::move(id)), actions_(std::move(actions)), utilities_(std::move(utilities)) {
  if (actions_.empty()) throw InputError("game '" + id_ + "' has no players");
  std::size_t expected = 1;
  for (std::size_t i = 0; i < actions_.size(); ++i) {
    const auto& acts = actions_[i];
    if (acts.empty()) {
      throw InputError("game '" + id_ + "': player " + std::to_string(i + 1) + " has no actions");
    }
    for (std::size_t a = 0; a < acts.size(); ++a) {
      if (acts[a].empty() || acts[a].find(',') != std::string::npos) {
        throw InputError("game '" + id_ + "': invalid action label \"" + acts[a] + "\"");
      }
      for (std::size_t b = 0; b < a; ++b) {
        if (acts[a] == acts[b]) {
          throw InputError("game '" + id_ + "': duplicate action label \"" + acts[a] + "\"");
        }
      }
    }
    expected *= acts.size();
  }
  if (utilities_.size() != expected) {
    throw InputError("game '" + id_ + "': expected " + std::to_string(expected) +
                     " utility entries, got " + std::to_string(utilities_.size()));
  }
  for (const auto& u : utilities_) {
    if (u.size() != actions_.size()) {
      throw InputError("game '" + id_ + "': payoff vector length does not match player count");
    }
  }
}

const std::vector<std::string>& NormalFormGame::actions(std::size_t player) const {
  if (player >= actions_.size()) {
    throw InputError("game '" + id_ + "': no player " + std::to_string(player + 1));
  }
  return actions_[player];
}

std::optional<std::size_t> NormalFormGame::action_index(std::size_t player,
                                                        std::string_view label) const {
  const auto& acts = actions(player);
  auto it = std::find(acts.begin(), acts.end(), label);
  if (it == acts.end()) return std::nullopt;
  return static_cast<std::size_t>(it - acts.begin());
}

ActionProfile NormalFormGame::profile(std::size_t outcome) const {
  ActionProfile p(actions_.size());
  for (std::size_t i = actions_.size(); i-- > 0;) {
    p[i] = outcome % actions_[i].size();
    outcome /= actions_[i].size();
  }
  return p;
}

std::size_t NormalFormGame::outcome_index(std::span<const std::size_t> profile) const {
  if (profile.size() != actions_.size()) throw InputError("profile length mismatch");
  std::size_t index = 0;
  for (std::size_t i = 0; i < actions_.size(); ++i) {
    if (profile[i] >= actions_[i].size()) throw InputError("action index out of range");
    index = index * actions_[i].size() + profile[i];
  }
  return index;
}

std::optional<std::size_t> NormalFormGame::outcome_from_label(std::string_view label) const {
  ActionProfile p;
  std::size_t start = 0;
  for (std::size_t i = 0; i < actions_.size(); ++i) {
    auto end = label.find(',', start);
    if ((end == std::string_view::npos) != (i + 1 == actions_.size())) return std::nullopt;
    auto part = label.substr(start, end == std::string_view::npos ? label.npos : end - start);
    auto a = action_index(i, part);
    if (!a) return std::nullopt;
    p.push_back(*a);
    start = end + 1;
  }
  return outcome_index(p);
}

std::string NormalFormGame::outcome_label(std::size_t outcome) const {
  auto p = profile(outcome);
  std::string label;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) label += ',';
    label += actions_[i][p[i]];
  }
  return label;
}

std::vector<std::string> NormalFormGame::outcome_labels() const {
  std::vector<std::string> labels;
  labels.reserve(outcome_count());
  for (std::size_t o = 0; o < outcome_count(); ++o) labels.push_back(outcome_label(o));
  return labels;
}

NormalFormGame NormalFormGame::restrict(const std::vector<std::vector<std::size_t>>& kept,
                                        std::string id) const {
  if (kept.size() != actions_.size()) throw InputError("restrict: one action list per player");
  std::vector<std::vector<std::string>> acts(kept.size());
  for (std::size_t i = 0; i < kept.size(); ++i) {
    for (auto a : kept[i]) acts[i].push_back(actions(i).at(a));
  }
  std::vector<PayoffVector> utils;
  ActionProfile sub(kept.size(), 0);
  std::size_t total = 1;
  for (const auto& k : kept) total *= k.size();
  for (std::size_t o = 0; o < total; ++o) {
    std::size_t rest = o;
    ActionProfile full(kept.size());
    for (std::size_t i = kept.size(); i-- > 0;) {
      full[i] = kept[i][rest % kept[i].size()];
      rest /= kept[i].size();
    }
    utils.push_back(payoff(outcome_index(full)));
  }
  return NormalFormGame(std::move(id), std::move(acts), std::move(utils));
}

NormalFormGame NormalFormGame::with_id(std::string id) const {
  NormalFormGame copy = *this;
  copy.id_ = std::move(id);
  return copy;
}

bool NormalFormGame::same_structure(const NormalFormGame& other) const {
  return actions_ == other.actions_ && utilities_ == other.utilities_;
}

bool strictly_dominates(const NormalFormGame& game, std::size_t player, std::size_t dominator,
                        std::size_t dominated) {
  const auto n = game.action_count(player);
  if (dominator >= n || dominated >= n) throw InputError("action index out of range");
  if (dominator == dominated) throw InputError("an action cannot dominate itself");
  for (std::size_t o = 0; o < game.outcome_count(); ++o) {
    auto p = game.profile(o);
    if (p[player] != dominated) continue;
    p[player] = dominator;
    if (!(game.utility(game.outcome_index(p), player) > game.utility(o, player))) return false;
  }
  return true;
}

std::vector<std::vector<std::size_t>> dominated_actions(const NormalFormGame& game) {
  std::vector<std::vector<std::size_t>> out(game.players());
  for (std::size_t i = 0; i < game.players(); ++i) {
    for (std::size_t a = 0; a < game.action_count(i); ++a) {
      for (std::size_t b = 0; b < game.action_count(i); ++b) {
        if (a != b && strictly_dominates(game, i, b, a)) {
          out[i].push_back(a);
          break;
        }
      }
    }
  }
  return out;
}

bool has_dominated_action(const NormalFormGame& game) {
  auto d = dominated_actions(game);
  return std::any_of(d.begin(), d.end(), [](const auto& v) { return !v.empty(); });
}

namespace {

// Returns the surviving actions and the labels removed, per player.
std::pair<std::vector<std::vector<std::size_t>>, std::vector<std::vector<std::string>>>
one_round(const NormalFormGame& game) {
  auto dominated = dominated_actions(game);
  std::vector<std::vector<std::size_t>> kept(game.players());
  std::vector<std::vector<std::string>> removed(game.players());
  for (std::size_t i = 0; i < game.players(); ++i) {
    for (std::size_t a = 0; a < game.action_count(i); ++a) {
      if (std::find(dominated[i].begin(), dominated[i].end(), a) != dominated[i].end()) {
        removed[i].push_back(game.actions(i)[a]);
      } else {
        kept[i].push_back(a);
      }
    }
  }
  return {std::move(kept), std::move(removed)};
}

}  // namespace

NormalFormGame eliminate_dominated_once(const NormalFormGame& game) {
  auto [kept, removed] = one_round(game);
  bool any = std::any_of(removed.begin(), removed.end(), [](const auto& r) { return !r.empty(); });
  if (!any) return game;
  return game.restrict(kept, game.id() + "'");
}

ReductionTrace fully_reduce(const NormalFormGame& game) {
  ReductionTrace trace{{}, game};
  for (;;) {
    auto [kept, removed] = one_round(trace.reduced);
    bool any =
        std::any_of(removed.begin(), removed.end(), [](const auto& r) { return !r.empty(); });
    if (!any) break;
    trace.rounds.push_back(std::move(removed));
    trace.reduced = trace.reduced.restrict(kept, trace.reduced.id() + "'");
  }
  return trace;
}

namespace {

struct AffineFit {
  Rational scale;
  Rational shift;
};

// Fits u = scale * v + shift with scale > 0 between two sorted value lists.
std::optional<AffineFit> fit_sorted(std::vector<Rational> u, std::vector<Rational> v) {
  std::sort(u.begin(), u.end());
  std::sort(v.begin(), v.end());
  AffineFit fit{Rational(1), u.front() - v.front()};
  for (std::size_t k = 1; k < v.size(); ++k) {
    if (v[k] != v.front()) {
      fit.scale = (u[k] - u.front()) / (v[k] - v.front());
      fit.shift = u.front() - fit.scale * v.front();
      break;
    }
  }
  if (fit.scale <= 0) return std::nullopt;
  for (std::size_t k = 0; k < u.size(); ++k) {
    if (u[k] != fit.scale * v[k] + fit.shift) return std::nullopt;
  }
  return fit;
}

std::vector<std::vector<std::size_t>> all_permutations(std::size_t n) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), std::size_t{0});
  std::vector<std::vector<std::size_t>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

}  // namespace

std::vector<Isomorphism> find_isomorphisms(const NormalFormGame& g1, const NormalFormGame& g2) {
  std::vector<Isomorphism> result;
  if (g1.players() != g2.players()) return result;
  const std::size_t n = g1.players();
  for (std::size_t i = 0; i < n; ++i) {
    if (g1.action_count(i) != g2.action_count(i)) return result;
  }

  // Positive affine maps preserve order, so the sorted payoff lists of each
  // player determine scale and shift (unique unless the payoffs are constant).
  std::vector<AffineFit> fits;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Rational> u, v;
    for (std::size_t o = 0; o < g1.outcome_count(); ++o) {
      u.push_back(g1.utility(o, i));
      v.push_back(g2.utility(o, i));
    }
    auto fit = fit_sorted(std::move(u), std::move(v));
    if (!fit) return result;
    fits.push_back(*fit);
  }

  std::vector<std::vector<std::vector<std::size_t>>> perms;
  for (std::size_t i = 0; i < n; ++i) perms.push_back(all_permutations(g1.action_count(i)));

  std::vector<std::size_t> choice(n, 0);
  ActionProfile image(n);
  for (;;) {
    bool ok = true;
    for (std::size_t o = 0; o < g1.outcome_count() && ok; ++o) {
      auto p = g1.profile(o);
      for (std::size_t i = 0; i < n; ++i) image[i] = perms[i][choice[i]][p[i]];
      const auto& target = g2.payoff(g2.outcome_index(image));
      for (std::size_t i = 0; i < n && ok; ++i) {
        ok = g1.utility(o, i) == fits[i].scale * target[i] + fits[i].shift;
      }
    }
    if (ok) {
      Isomorphism iso;
      for (std::size_t i = 0; i < n; ++i) {
        iso.maps.push_back(perms[i][choice[i]]);
        iso.scale.push_back(fits[i].scale);
        iso.shift.push_back(fits[i].shift);
      }
      result.push_back(std::move(iso));
    }
    // Odometer with player 0 as the most significant digit.
    std::size_t i = n;
    while (i-- > 0) {
      if (++choice[i] < perms[i].size()) break;
      choice[i] = 0;
    }
    if (i == static_cast<std::size_t>(-1)) break;
  }
  return result;
}

std::vector<std::size_t> pure_nash_equilibria(const NormalFormGame& game, bool strict) {
  std::vector<std::size_t> result;
  for (std::size_t o = 0; o < game.outcome_count(); ++o) {
    auto p = game.profile(o);
    bool equilibrium = true;
    for (std::size_t i = 0; i < game.players() && equilibrium; ++i) {
      const auto own = p[i];
      for (std::size_t a = 0; a < game.action_count(i) && equilibrium; ++a) {
        if (a == own) continue;
        p[i] = a;
        const auto& deviation = game.utility(game.outcome_index(p), i);
        equilibrium = strict ? deviation < game.utility(o, i) : deviation <= game.utility(o, i);
      }
      p[i] = own;
    }
    if (equilibrium) result.push_back(o);
  }
  return result;
}

std::vector<Outcome> pure_nash_outcomes(const NormalFormGame& game, bool strict) {
  std::vector<Outcome> out;
  for (auto o : pure_nash_equilibria(game, strict)) out.push_back({game.id(), game.profile(o)});
  return out;
}

ParetoOrder pareto_compare(std::span<const Rational> u, std::span<const Rational> v) {
  if (u.size() != v.size()) throw InputError("payoff vectors differ in length");
  bool some_greater = false;
  bool some_less = false;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] > v[i]) some_greater = true;
    if (u[i] < v[i]) some_less = true;
  }
  if (some_greater && some_less) return ParetoOrder::incomparable;
  if (some_greater) return ParetoOrder::better;
  if (some_less) return ParetoOrder::worse;
  return ParetoOrder::equal;
}

const char* to_string(ParetoOrder order) {
  switch (order) {
    case ParetoOrder::better: return "better";
    case ParetoOrder::worse: return "worse";
    case ParetoOrder::equal: return "equal";
    case ParetoOrder::incomparable: return "incomparable";
  }
  return "?";
}

}  // namespace ocreason

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ocreason/rational.hpp"

namespace ocreason {

using PayoffVector = std::vector<Rational>;
using ActionProfile = std::vector<std::size_t>;

/// A finite n-player normal-form game with exact rational payoffs.
///
/// Outcomes are numbered in mixed radix with player 0 as the most significant
/// digit, so for a 2x2 game the order is (0,0), (0,1), (1,0), (1,1). Outcome
/// labels are the comma-joined action labels in player order ("C,D").
///
/// Values are immutable after construction.
class NormalFormGame {
 public:
  NormalFormGame() = default;
  /// `utilities[o]` is the payoff vector of outcome `o` (one entry per player).
  NormalFormGame(std::string id, std::vector<std::vector<std::string>> actions,
                 std::vector<PayoffVector> utilities);

  const std::string& id() const { return id_; }
  std::size_t players() const { return actions_.size(); }
  const std::vector<std::string>& actions(std::size_t player) const;
  std::size_t action_count(std::size_t player) const { return actions(player).size(); }
  const std::vector<std::vector<std::string>>& all_actions() const { return actions_; }
  std::optional<std::size_t> action_index(std::size_t player, std::string_view label) const;

  std::size_t outcome_count() const { return utilities_.size(); }
  ActionProfile profile(std::size_t outcome) const;
  std::size_t outcome_index(std::span<const std::size_t> profile) const;
  std::optional<std::size_t> outcome_from_label(std::string_view label) const;
  std::string outcome_label(std::size_t outcome) const;
  std::vector<std::string> outcome_labels() const;

  const PayoffVector& payoff(std::size_t outcome) const { return utilities_.at(outcome); }
  const Rational& utility(std::size_t outcome, std::size_t player) const {
    return utilities_.at(outcome).at(player);
  }
  const std::vector<PayoffVector>& utilities() const { return utilities_; }

  /// The subgame keeping `kept[i]` (indices into player i's actions, in
  /// increasing order) for every player.
  NormalFormGame restrict(const std::vector<std::vector<std::size_t>>& kept,
                          std::string id) const;

  NormalFormGame with_id(std::string id) const;

  /// Same action labels and same payoffs; ids are ignored.
  bool same_structure(const NormalFormGame& other) const;

 private:
  std::string id_;
  std::vector<std::vector<std::string>> actions_;
  std::vector<PayoffVector> utilities_;
};

struct Outcome {
  std::string game;
  ActionProfile actions;

  friend bool operator==(const Outcome&, const Outcome&) = default;
};

/// Per-player action bijections with positive scales and shifts such that
/// u_i(a) = scale[i] * u'_i(map(a)) + shift[i].
struct Isomorphism {
  std::vector<std::vector<std::size_t>> maps;  // maps[i][a] = image of action a
  std::vector<Rational> scale;
  std::vector<Rational> shift;

  friend bool operator==(const Isomorphism&, const Isomorphism&) = default;
};

struct ReductionTrace {
  /// rounds[r][i] lists the labels of player i's actions removed in round r.
  std::vector<std::vector<std::vector<std::string>>> rounds;
  NormalFormGame reduced;
};

enum class ParetoOrder { better, worse, equal, incomparable };

bool strictly_dominates(const NormalFormGame& game, std::size_t player, std::size_t dominator,
                        std::size_t dominated);

/// Actions of every player that are strictly dominated by some other pure
/// action of the same player.
std::vector<std::vector<std::size_t>> dominated_actions(const NormalFormGame& game);

bool has_dominated_action(const NormalFormGame& game);

/// One round of maximal elimination. Returns the game itself (same id) when
/// nothing is dominated.
NormalFormGame eliminate_dominated_once(const NormalFormGame& game);

ReductionTrace fully_reduce(const NormalFormGame& game);

/// Every isomorphism from g1 to g2, ordered lexicographically by the
/// per-player bijections (player 0 most significant). Factorial in the action
/// counts; meant for games with at most a handful of actions per player.
std::vector<Isomorphism> find_isomorphisms(const NormalFormGame& g1, const NormalFormGame& g2);

/// Outcome indices of the pure (or strict) Nash equilibria, ascending.
std::vector<std::size_t> pure_nash_equilibria(const NormalFormGame& game, bool strict);

std::vector<Outcome> pure_nash_outcomes(const NormalFormGame& game, bool strict);

ParetoOrder pareto_compare(std::span<const Rational> u, std::span<const Rational> v);

const char* to_string(ParetoOrder order);

}  // namespace ocreason

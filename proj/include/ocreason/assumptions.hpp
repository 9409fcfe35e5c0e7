#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ocreason/bcs.hpp"
#include "ocreason/correspondence.hpp"
#include "ocreason/game.hpp"

namespace ocreason {

struct DominanceStep {
  NormalFormGame subgame;
  Correspondence oc;  // game -> subgame
};

/// One round of maximal elimination and the outcome correspondence that keeps
/// surviving outcomes and sends the rest to nothing. The subgame is the game
/// itself (with an identity correspondence) when nothing is dominated.
DominanceStep oc_dominance(const NormalFormGame& game);

/// Product of the per-player image sets over all isomorphisms g1 -> g2, or
/// nothing if the games are not isomorphic. Throws PreconditionError if either
/// game has a strictly dominated action.
std::optional<Correspondence> oc_isomorphism(const NormalFormGame& g1, const NormalFormGame& g2);

/// Sub-identity keeping the pure Nash equilibria. Throws PreconditionError
/// when the game has none.
Correspondence oc_nash(const NormalFormGame& game);

/// Per player, `high[i]` is a_i^1 (its action in the Pareto-better strict
/// equilibrium) and `low[i]` is a_i^2.
struct RiskLabeling {
  std::vector<std::string> high;
  std::vector<std::string> low;

  friend bool operator==(const RiskLabeling&, const RiskLabeling&) = default;
};

/// Maps a^1 to {â^1} and a^2 to {â^1, â^2} per player, as a product over
/// outcomes of g1. Throws PreconditionError naming the first failed condition.
Correspondence oc_decreasing_risk(const NormalFormGame& g1, const NormalFormGame& g2,
                                  const RiskLabeling& l1, const RiskLabeling& l2);

/// Every labeling of a 2x2 game under which both diagonal-style profiles are
/// strict equilibria and the high one Pareto-dominates the low one.
std::vector<RiskLabeling> candidate_risk_labelings(const NormalFormGame& game);

struct DecreasingRiskPair {
  std::string g1;
  std::string g2;
  RiskLabeling l1;
  RiskLabeling l2;

  friend bool operator==(const DecreasingRiskPair&, const DecreasingRiskPair&) = default;
};

struct AssumptionSelection {
  bool dominance = false;
  bool isomorphism = false;
  bool nash = false;
  std::vector<DecreasingRiskPair> decreasing_risk;
  /// When nonempty, isomorphism constraints are only generated for these
  /// unordered game pairs.
  std::vector<std::pair<std::string, std::string>> isomorphism_pairs;

  bool any() const { return dominance || isomorphism || nash || !decreasing_risk.empty(); }
};

/// One variable per game (domain: its outcome labels) and the constraints the
/// selected assumptions generate. Throws InputError if nothing is selected.
Bcs build_assumption_bcs(const std::vector<NormalFormGame>& games,
                         const AssumptionSelection& selection);

}  // namespace ocreason

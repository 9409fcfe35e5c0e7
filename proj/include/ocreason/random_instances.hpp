#pragma once

#include <cstddef>
#include <random>

#include "ocreason/bcs.hpp"
#include "ocreason/closedness.hpp"
#include "ocreason/game.hpp"

namespace ocreason {

using Rng = std::mt19937_64;

struct RandomBcsOptions {
  std::size_t min_variables = 1;
  std::size_t max_variables = 4;
  std::size_t min_domain = 1;
  std::size_t max_domain = 4;
  /// Chance that a given unordered variable pair gets a constraint.
  double constraint_probability = 0.6;
  /// Chance that a pair of values is allowed by a sampled relation.
  double pair_probability = 0.5;
};

/// Variables V1..Vn with values v1..vk and independent random relations.
Bcs random_bcs(Rng& rng, const RandomBcsOptions& options = {});

/// Closes a relation under the given per-variable joins.
Correspondence close_under_joins(Correspondence relation, const std::vector<std::vector<std::size_t>>& jx,
                                 const std::vector<std::vector<std::size_t>>& jy);

struct MaxClosedInstance {
  Bcs bcs;
  VariableOrder orders;
};

/// Random orders first, then random relations closed under max.
MaxClosedInstance random_max_closed_bcs(Rng& rng, const RandomBcsOptions& options = {});

/// A random join table on at most `max_size` elements (at least 1): either a
/// chain or a union-closed family of subsets of a small ground set.
std::vector<std::vector<std::size_t>> random_semilattice(Rng& rng, std::size_t max_size);

struct JoinClosedInstance {
  Bcs bcs;
  JoinFamily joins;
};

/// Random semilattices first (domain sizes come from them), then random
/// relations closed under join.
JoinClosedInstance random_join_closed_bcs(Rng& rng, const RandomBcsOptions& options = {});

struct RandomGameOptions {
  std::size_t players = 2;
  std::size_t min_actions = 1;
  std::size_t max_actions = 3;
  int min_payoff = 0;
  int max_payoff = 4;
};

NormalFormGame random_game(Rng& rng, const std::string& id, const RandomGameOptions& options = {});

}  // namespace ocreason

#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ocreason/bcs.hpp"
#include "ocreason/game.hpp"

namespace ocreason {

/// Per variable id, its value indices from lowest to highest.
struct VariableOrder {
  std::map<std::string, std::vector<std::size_t>> ascending;

  friend bool operator==(const VariableOrder&, const VariableOrder&) = default;
};

/// Per variable id, a join table: table[a][b] is the least upper bound of values a and b.
struct JoinFamily {
  std::map<std::string, std::vector<std::vector<std::size_t>>> tables;

  friend bool operator==(const JoinFamily&, const JoinFamily&) = default;
};

struct ClosednessWitness {
  std::size_t constraint = 0;  // index into bcs.constraints()
  Correspondence::Pair first;
  Correspondence::Pair second;
  Correspondence::Pair missing;
};

struct ClosednessReport {
  bool closed = true;
  std::optional<ClosednessWitness> witness;
};

/// Checks every constraint for (max(x1,x2), max(y1,y2)). Scans constraints in
/// order and pairs lexicographically, reporting the first violation.
ClosednessReport is_max_closed(const Bcs& bcs, const VariableOrder& orders);

/// Throws InputError naming the first violated axiom (shape, range,
/// idempotency, commutativity, associativity) or a missing table.
void validate_joins(const Bcs& bcs, const JoinFamily& joins);

ClosednessReport is_join_closed(const Bcs& bcs, const JoinFamily& joins);

/// The max tables of total orders.
JoinFamily joins_from_orders(const Bcs& bcs, const VariableOrder& orders);

/// Join table of a finite poset given by Hasse edges (child, parent) over
/// `domain`. Throws InputError on cycles, unknown labels, or a pair without a
/// unique least upper bound.
std::vector<std::vector<std::size_t>> compile_semilattice(
    const std::vector<std::string>& domain,
    const std::vector<std::pair<std::string, std::string>>& edges);

/// Hasse edges (child, parent) of the order a <= b iff table[a][b] == b.
std::vector<std::pair<std::string, std::string>> hasse_edges(
    const std::vector<std::string>& domain, const std::vector<std::vector<std::size_t>>& table);

struct OrderSearchOptions {
  /// Larger domains are refused with PreconditionError.
  std::size_t max_domain = 8;
};

/// Backtracking over per-variable permutations in lexicographic order (first
/// variable most significant), pruning each constraint as soon as both of its
/// variables are ordered. Returns the first certifying family.
std::optional<VariableOrder> search_max_orders(const Bcs& bcs, OrderSearchOptions options = {});

/// Orders certifying max-closedness of a BCS produced by build_assumption_bcs
/// over `games`. Throws InputError if some constraint is not one the
/// assumptions generate for these games.
VariableOrder orders_for_assumptions(const std::vector<NormalFormGame>& games, const Bcs& bcs);

}  // namespace ocreason

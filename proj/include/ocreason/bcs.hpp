#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ocreason/correspondence.hpp"

namespace ocreason {

struct Variable {
  std::string id;
  std::vector<std::string> domain;

  friend bool operator==(const Variable&, const Variable&) = default;
};

/// One value index per variable, in variable order.
using Assignment = std::vector<std::size_t>;

/// Variables with finite domains plus binary constraints. Several constraints
/// may share a variable pair, in either direction; they are kept as given.
class Bcs {
 public:
  Bcs() = default;
  Bcs(std::vector<Variable> variables, std::vector<Correspondence> constraints);

  const std::vector<Variable>& variables() const { return variables_; }
  const Variable& variable(std::size_t i) const { return variables_.at(i); }
  std::size_t size() const { return variables_.size(); }
  const std::vector<Correspondence>& constraints() const { return constraints_; }

  std::optional<std::size_t> index_of(std::string_view id) const;
  /// Like index_of but throws InputError for unknown ids.
  std::size_t require(std::string_view id) const;
  std::size_t value_index(std::size_t variable, std::string_view label) const;

  /// Full relation between two variables, the starting point for claims.
  Correspondence full_relation(std::string_view x, std::string_view y) const;

  Bcs with_constraint(Correspondence c) const;

  friend bool operator==(const Bcs&, const Bcs&) = default;

 private:
  std::vector<Variable> variables_;
  std::vector<Correspondence> constraints_;
};

bool satisfies(const Bcs& bcs, const Assignment& assignment);

/// The path-consistency fixed point: one relation per ordered variable pair.
struct PropagatedBcs {
  std::vector<Variable> variables;
  /// relations[i][j] relates variable i to variable j; relations[i][i] is a
  /// sub-identity holding the values that survive.
  std::vector<std::vector<Correspondence>> relations;
  bool has_empty = false;
  /// Full sweeps (naive algorithm) or worklist generations until the fixed
  /// point; both include the final sweep that changes nothing.
  std::size_t passes = 0;

  const Correspondence& between(std::string_view x, std::string_view y) const;
  std::size_t index_of(std::string_view id) const;
  /// Values of each variable that no satisfying assignment can use.
  std::vector<std::vector<std::size_t>> excluded_values() const;
  /// The relations as a BCS (one constraint per pair i <= j).
  Bcs to_bcs() const;
};

/// The starting point of propagation: per ordered pair, the intersection of
/// all constraints on it (either direction), full if none, identity-bounded on
/// the diagonal. `passes` is zero.
PropagatedBcs initial_relations(const Bcs& bcs);

/// Worklist propagation: only pairs adjacent to a changed pair are revised.
PropagatedBcs path_consistency(const Bcs& bcs);

/// Full sweeps over all ordered triples until nothing changes. Slow; kept as
/// the reference the worklist version must match bit for bit.
PropagatedBcs path_consistency_naive(const Bcs& bcs);

/// Static variable order, values in domain order, forward checking over the
/// raw constraints. Returns at most `limit` assignments when given.
std::vector<Assignment> enumerate_satisfying(const Bcs& bcs,
                                             std::optional<std::size_t> limit = std::nullopt);

std::size_t count_satisfying(const Bcs& bcs);

/// A satisfying assignment whose (source, target) values fall outside claim.
std::optional<Assignment> find_counterexample(const Bcs& bcs, const Correspondence& claim);

/// True iff every satisfying assignment satisfies claim.
bool implies(const Bcs& bcs, const Correspondence& claim);

/// True iff the propagated relation between the claim's variables lies inside it.
bool derivable(const PropagatedBcs& propagated, const Correspondence& claim);

}  // namespace ocreason

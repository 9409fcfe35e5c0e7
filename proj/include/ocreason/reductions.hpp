#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ocreason/bcs.hpp"
#include "ocreason/closedness.hpp"
#include "ocreason/game.hpp"

namespace ocreason {

/// 3-coloring of the complete graph on four vertices: X1..X4 over {1,2,3},
/// pairwise different. Unsatisfiable, yet path consistency changes nothing.
Bcs montanari_instance();

struct JoinInstance {
  Bcs bcs;
  /// Hasse edges (child, parent) per variable.
  std::map<std::string, std::vector<std::pair<std::string, std::string>>> edges;
  JoinFamily joins;
};

/// Four variables X, Y, Z, W whose constraints are join-closed under the
/// attached semilattices, where x2 and y2 cannot occur together but
/// propagation keeps (x2, y2).
JoinInstance join_incompleteness_instance();

/// Games and correspondences encoding a CSP: Gamma' is a safe Pareto
/// improvement on Gamma iff the source CSP is unsatisfiable.
struct SiHardnessInstance {
  std::vector<NormalFormGame> games;  // Gamma, Gamma', then one game per source variable
  std::vector<Correspondence> assumptions;
  std::string gamma;
  std::string gamma_prime;
  Bcs source;

  Bcs bcs() const;
};

/// With `incomparable_tops`, the top diagonal outcomes get payoffs
/// (3+s*eps, 1-s*eps) so that no pair other than (Gamma, Gamma') can be an
/// improvement. Throws std::logic_error if the constructed games turn out to
/// be isomorphic (which the payoff choice rules out).
SiHardnessInstance csp_to_si_games(const Bcs& source, bool incomparable_tops = false);

struct AugmentedBcs {
  Bcs bcs;
  /// The fresh switch variable and its value selecting the original problem.
  std::string anchor_variable;
  std::string anchor_value;
  /// Per original variable, the label of the added "off" value.
  std::vector<std::string> off_values;
};

/// Adds a switch variable with values {0, 1} and an "off" value 0 to every
/// domain. Always satisfiable (everything off); the assignments with the
/// switch at 1 are exactly the source's satisfying assignments. Labels that
/// collide with existing ones get primes appended.
AugmentedBcs augment_always_satisfiable(const Bcs& source, const std::string& switch_id = "X0");

struct ImplicationInstance {
  Bcs bcs;
  std::string x0;         // domain {0}, unconstrained
  std::string indicator;  // domain {0, 1}: 1 iff the watched variable takes the watched value

  /// {(0, 0)} from x0 to the indicator: "X0 = 0 forces the indicator to 0".
  Correspondence claim() const;
};

/// The query "does X0 = 0 force the indicator to 0" holds iff no satisfying
/// assignment of the source gives `variable` the value `value`. Throws
/// PreconditionError if the source is unsatisfiable.
ImplicationInstance implication_instance(const Bcs& source, const std::string& variable,
                                         const std::string& value);

}  // namespace ocreason

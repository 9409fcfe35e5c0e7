#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ocreason/bcs.hpp"
#include "ocreason/closedness.hpp"
#include "ocreason/game.hpp"

namespace ocreason {

/// A weak preference over the union of all domains. Elements are keyed by
/// (variable id, value label), so equal labels in different variables are
/// distinct elements.
class Preference {
 public:
  struct Key {
    std::string variable;
    std::string value;

    friend bool operator==(const Key&, const Key&) = default;
  };

  Preference() = default;
  /// Only the reflexive pairs.
  explicit Preference(std::vector<Variable> blocks);

  const std::vector<Variable>& blocks() const { return blocks_; }
  std::size_t size() const { return geq_.size(); }
  std::size_t index(std::string_view variable, std::size_t value) const;
  std::size_t index(const Key& key) const;
  Key key(std::size_t element) const;
  const Variable& block(std::string_view variable) const;

  bool geq(std::size_t a, std::size_t b) const { return geq_.at(a).test(b); }
  /// a strictly preferred to b: a >= b but not b >= a.
  bool strictly(std::size_t a, std::size_t b) const { return geq(a, b) && !geq(b, a); }

  void set_geq(std::size_t a, std::size_t b);
  /// Transitive closure. Throws InputError if two distinct elements end up
  /// weakly preferred to each other (which would erase strict preferences).
  void close_without_cycles();

  friend bool operator==(const Preference&, const Preference&) = default;

 private:
  std::vector<Variable> blocks_;
  std::vector<std::size_t> offsets_;
  std::vector<boost::dynamic_bitset<>> geq_;
};

/// (g,o) >= (g',o') iff every player's utility in o is at least its utility in o'.
Preference pareto_preference(const std::vector<NormalFormGame>& games);

/// Preference of a single player (0-based index) across games.
Preference player_preference(const std::vector<NormalFormGame>& games, std::size_t player);

/// Reflexive-transitive closure of the listed (better-or-equal, worse) pairs.
Preference explicit_preference(std::vector<Variable> blocks,
                               const std::vector<std::pair<Preference::Key, Preference::Key>>& geq);

/// {(o, o') | o' >= o} from X to Y (o' > o when strict).
Correspondence improvement_oc(std::string_view x, std::string_view y, const Preference& pref,
                              bool strict);

enum class SiMode { exact, propagation, refutation };

const char* to_string(SiMode mode);
SiMode parse_si_mode(std::string_view text);

struct SiCertificate {
  std::optional<VariableOrder> orders;  // checked in propagation mode
  std::optional<JoinFamily> joins;      // checked in refutation mode (orders also serve)
};

struct SiVerdict {
  bool yes = false;
  SiMode mode = SiMode::exact;
  /// Exact mode always; other modes when a certificate was supplied and held.
  bool certified = false;
  /// Exact mode "no": a satisfying assignment where Y does not improve on X.
  std::optional<Assignment> counterexample;
};

/// Does every satisfying assignment give Y a value (strictly) preferred to X's?
///
/// exact: search for a satisfying assignment violating the improvement
/// relation. propagation: the path-consistency relation between X and Y lies
/// inside the improvement relation. refutation: adding the non-improvement
/// relation (or, failing that, each of its pairs as a single-pair constraint)
/// propagates to an empty relation.
SiVerdict decide_si(const Bcs& bcs, std::string_view x, std::string_view y,
                    const Preference& pref, bool strict, SiMode mode,
                    const SiCertificate& certificate = {});

/// Every Y != X that is a safe improvement on X, in variable order.
std::vector<std::string> find_si_on(const Bcs& bcs, std::string_view x, const Preference& pref,
                                    bool strict, SiMode mode,
                                    const SiCertificate& certificate = {});

/// Every ordered pair (X, Y) with Y a safe improvement on X.
std::vector<std::pair<std::string, std::string>> find_any_si(const Bcs& bcs,
                                                             const Preference& pref, bool strict,
                                                             SiMode mode,
                                                             const SiCertificate& certificate = {});

}  // namespace ocreason

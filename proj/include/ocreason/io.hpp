#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "ocreason/assumptions.hpp"
#include "ocreason/bcs.hpp"
#include "ocreason/closedness.hpp"
#include "ocreason/game.hpp"
#include "ocreason/si.hpp"

namespace ocreason::io {

using Json = nlohmann::json;

/// Parses a file, turning syntax errors into InputError with the position.
Json read_json(const std::filesystem::path& path);
Json parse_json(const std::string& text);
void write_json(const std::filesystem::path& path, const Json& value);
/// Two-space indented with a trailing newline; keys are sorted.
std::string dump(const Json& value);

Json rational_to_json(const Rational& r);
Rational rational_from_json(const Json& value);

/// {"id", "players", "actions", "utilities": {"C,D": [1, "5/2"], ...}}.
/// `fallback_id` is used when the object has no "id".
NormalFormGame game_from_json(const Json& value, const std::string& fallback_id = "");
Json game_to_json(const NormalFormGame& game);

Json correspondence_to_json(const Correspondence& c, const Bcs& bcs);
Correspondence correspondence_from_json(const Json& value, const Bcs& bcs);

/// A structure as read from disk. Game-backed files list "games" (inline
/// objects or paths relative to the file) and may select assumptions and a
/// designated pair; plain files list "variables".
struct Instance {
  Bcs bcs;
  std::vector<NormalFormGame> games;
  std::optional<AssumptionSelection> selection;
  std::optional<std::pair<std::string, std::string>> pair;
};

Instance instance_from_json(const Json& value,
                            const std::filesystem::path& base_dir = std::filesystem::path());
Instance load_instance(const std::filesystem::path& path);

/// {"variables": [...], "constraints": [...]}.
Json bcs_to_json(const Bcs& bcs);
/// Games inline, explicit constraints, optional pair and selection.
Json instance_to_json(const Instance& instance);

Json orders_to_json(const VariableOrder& orders, const Bcs& bcs);
VariableOrder orders_from_json(const Json& value, const Bcs& bcs);

/// {"semilattices": {"X": {"edges": [["x2", "x1"], ...]}}}; every variable of
/// the structure needs an entry (an empty edge list is an antichain and is
/// rejected unless the domain has one value).
JoinFamily joins_from_json(const Json& value, const Bcs& bcs);
Json semilattices_to_json(
    const std::map<std::string, std::vector<std::pair<std::string, std::string>>>& edges);

AssumptionSelection selection_from_json(const Json& value);
Json selection_to_json(const AssumptionSelection& selection);

/// {"kind": "pareto"} | {"kind": "player", "player": 1} (1-based) |
/// {"kind": "explicit", "geq": [[["G1","C,C"],["G2","E,E"]], ...]}.
Preference preference_from_json(const Json& value, const Instance& instance);

Json assignment_to_json(const Assignment& assignment, const Bcs& bcs);

}  // namespace ocreason::io

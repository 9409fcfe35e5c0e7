#include "ocreason/fixtures.hpp"

namespace ocreason::fixtures {

namespace {

NormalFormGame two_player(std::string id, std::vector<std::string> rows,
                          std::vector<std::string> cols,
                          std::vector<std::pair<int, int>> payoffs) {
  std::vector<PayoffVector> utilities;
  for (auto [a, b] : payoffs) utilities.push_back({Rational(a), Rational(b)});
  return NormalFormGame(std::move(id), {std::move(rows), std::move(cols)}, std::move(utilities));
}

}  // namespace

NormalFormGame chicken() {
  return two_player("Gamma_b", {"C", "D"}, {"C", "D"}, {{3, 3}, {1, 4}, {4, 1}, {0, 0}});
}

NormalFormGame chicken_scaled() {
  return two_player("Gamma_c", {"E", "F"}, {"E", "F"}, {{10, 10}, {6, 12}, {12, 6}, {4, 4}});
}

NormalFormGame chicken_with_dominated_row() {
  return two_player("Gamma_a", {"C", "D", "C'"}, {"C", "D"},
                    {{3, 3}, {1, 4}, {4, 1}, {0, 0}, {2, 3}, {0, 4}});
}

NormalFormGame prisoners_dilemma() {
  return two_player("PD", {"C", "D"}, {"C", "D"}, {{3, 3}, {0, 4}, {4, 0}, {1, 1}});
}

NormalFormGame risky_coordination() {
  return two_player("Risky", {"aH", "aL"}, {"aH", "aL"}, {{8, 8}, {0, 4}, {4, 0}, {7, 7}});
}

NormalFormGame safer_coordination() {
  return two_player("Safer", {"aH", "aL"}, {"aH", "aL"}, {{9, 8}, {1, 3}, {4, 1}, {7, 7}});
}

NormalFormGame matching_pennies() {
  return two_player("Pennies", {"H", "T"}, {"H", "T"}, {{1, -1}, {-1, 1}, {-1, 1}, {1, -1}});
}

NormalFormGame symmetric_coordination() {
  return two_player("Coord", {"a", "b"}, {"a", "b"}, {{1, 1}, {0, 0}, {0, 0}, {1, 1}});
}

}  // namespace ocreason::fixtures

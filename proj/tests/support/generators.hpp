#pragma once

// Small hand-rolled generators for property tests. Independent of the
// library's random_instances so that tests do not only exercise inputs the
// library chooses for itself.

#include <algorithm>
#include <cstddef>
#include <random>
#include <string>
#include <vector>

#include "ocreason/bcs.hpp"
#include "ocreason/game.hpp"
#include "ocreason/si.hpp"

namespace gen {

using Rng = std::mt19937_64;

inline std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

inline bool coin(Rng& rng, double p = 0.5) { return std::bernoulli_distribution(p)(rng); }

inline ocreason::Correspondence relation(Rng& rng, const std::string& x, const std::string& y,
                                         std::size_t rows, std::size_t cols, double p = 0.5) {
  ocreason::Correspondence c(x, y, rows, cols);
  for (std::size_t a = 0; a < rows; ++a)
    for (std::size_t b = 0; b < cols; ++b)
      if (coin(rng, p)) c.set(a, b);
  return c;
}

inline std::vector<std::string> labels(const std::string& prefix, std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(prefix + std::to_string(i + 1));
  return out;
}

/// Variables A1..An; constraints in random directions, sometimes two on the
/// same pair, with density `p`.
inline ocreason::Bcs bcs(Rng& rng, std::size_t max_vars, std::size_t max_dom, double p = 0.6) {
  std::size_t n = uniform(rng, 1, max_vars);
  std::vector<ocreason::Variable> vars;
  for (std::size_t i = 0; i < n; ++i) {
    vars.push_back({"A" + std::to_string(i + 1), labels("a", uniform(rng, 1, max_dom))});
  }
  std::vector<ocreason::Correspondence> cs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      std::size_t copies = coin(rng, 0.5) ? 1 : (coin(rng, 0.3) ? 2 : 0);
      for (std::size_t c = 0; c < copies; ++c) {
        bool flip = coin(rng);
        const auto& s = vars[flip ? j : i];
        const auto& t = vars[flip ? i : j];
        cs.push_back(relation(rng, s.id, t.id, s.domain.size(), t.domain.size(), p));
      }
    }
  return ocreason::Bcs(std::move(vars), std::move(cs));
}

/// 2-player game with the given shape and integer payoffs in [0, hi].
inline ocreason::NormalFormGame game(Rng& rng, const std::string& id, std::size_t rows,
                                     std::size_t cols, int hi = 4) {
  std::vector<ocreason::PayoffVector> u;
  for (std::size_t o = 0; o < rows * cols; ++o) {
    u.push_back({ocreason::Rational(static_cast<long>(uniform(rng, 0, hi))),
                 ocreason::Rational(static_cast<long>(uniform(rng, 0, hi)))});
  }
  return ocreason::NormalFormGame(id, {labels("r", rows), labels("c", cols)}, std::move(u));
}

/// A random permutation of 0..n-1.
inline std::vector<std::size_t> permutation(Rng& rng, std::size_t n) {
  std::vector<std::size_t> p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = i;
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

// Each (variable, value) gets a random 2-vector; a >= b iff a's vector
// strictly Pareto-dominates b's. Acyclic by construction.
struct RandomPref {
  ocreason::Preference pref;
  std::vector<std::vector<std::vector<int>>> score;  // [variable][value] -> vector

  RandomPref(Rng& rng, const ocreason::Bcs& bcs, int hi = 3) {
    std::vector<std::pair<ocreason::Preference::Key, ocreason::Preference::Key>> geq;
    for (const auto& v : bcs.variables()) {
      score.emplace_back();
      for (std::size_t a = 0; a < v.domain.size(); ++a) {
        score.back().push_back({int(uniform(rng, 0, hi)), int(uniform(rng, 0, hi))});
      }
    }
    for (std::size_t i = 0; i < bcs.size(); ++i)
      for (std::size_t a = 0; a < bcs.variable(i).domain.size(); ++a)
        for (std::size_t j = 0; j < bcs.size(); ++j)
          for (std::size_t b = 0; b < bcs.variable(j).domain.size(); ++b)
            if (strictly_above(i, a, j, b)) {
              geq.push_back({{bcs.variable(i).id, bcs.variable(i).domain[a]},
                             {bcs.variable(j).id, bcs.variable(j).domain[b]}});
            }
    pref = ocreason::explicit_preference(bcs.variables(), geq);
  }

  bool strictly_above(std::size_t i, std::size_t a, std::size_t j, std::size_t b) const {
    const auto& u = score[i][a];
    const auto& v = score[j][b];
    return u[0] >= v[0] && u[1] >= v[1] && u != v;
  }

  // Reflexive version used by the oracle.
  bool geq(std::size_t i, std::size_t a, std::size_t j, std::size_t b) const {
    return (i == j && a == b) || strictly_above(i, a, j, b);
  }
};

}  // namespace gen

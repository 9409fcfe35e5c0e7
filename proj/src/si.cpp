#include "ocreason/si.hpp"

#include <unordered_set>

#include "ocreason/errors.hpp"

namespace ocreason {

Preference::Preference(std::vector<Variable> blocks) : blocks_(std::move(blocks)) {
  std::unordered_set<std::string> ids;
  std::size_t total = 0;
  for (const auto& b : blocks_) {
    if (!ids.insert(b.id).second) throw InputError("preference lists '" + b.id + "' twice");
    offsets_.push_back(total);
    total += b.domain.size();
  }
  geq_.assign(total, boost::dynamic_bitset<>(total));
  for (std::size_t a = 0; a < total; ++a) geq_[a].set(a);
}

const Variable& Preference::block(std::string_view variable) const {
  for (const auto& b : blocks_) {
    if (b.id == variable) return b;
  }
  throw InputError("preference does not cover variable '" + std::string(variable) + "'");
}

std::size_t Preference::index(std::string_view variable, std::size_t value) const {
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if (blocks_[i].id != variable) continue;
    if (value >= blocks_[i].domain.size()) {
      throw InputError("value index out of range for '" + blocks_[i].id + "'");
    }
    return offsets_[i] + value;
  }
  throw InputError("preference does not cover variable '" + std::string(variable) + "'");
}

std::size_t Preference::index(const Key& key) const {
  const auto& b = block(key.variable);
  for (std::size_t v = 0; v < b.domain.size(); ++v) {
    if (b.domain[v] == key.value) return index(key.variable, v);
  }
  throw InputError("'" + key.variable + "' has no value '" + key.value + "'");
}

Preference::Key Preference::key(std::size_t element) const {
  for (std::size_t i = blocks_.size(); i-- > 0;) {
    if (element >= offsets_[i]) return {blocks_[i].id, blocks_[i].domain.at(element - offsets_[i])};
  }
  throw InputError("preference element out of range");
}

void Preference::set_geq(std::size_t a, std::size_t b) { geq_.at(a).set(b); }

void Preference::close_without_cycles() {
  const auto n = geq_.size();
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t a = 0; a < n; ++a) {
      if (geq_[a].test(k)) geq_[a] |= geq_[k];
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (geq_[a].test(b) && geq_[b].test(a)) {
        auto ka = key(a);
        auto kb = key(b);
        throw InputError("preference cycle: (" + ka.variable + ", " + ka.value + ") and (" +
                         kb.variable + ", " + kb.value + ") are each preferred to the other");
      }
    }
  }
}

namespace {

std::vector<Variable> game_blocks(const std::vector<NormalFormGame>& games) {
  std::vector<Variable> blocks;
  for (const auto& g : games) blocks.push_back({g.id(), g.outcome_labels()});
  return blocks;
}

template <typename Geq>
Preference from_games(const std::vector<NormalFormGame>& games, Geq geq) {
  Preference pref(game_blocks(games));
  for (const auto& g : games) {
    for (std::size_t o = 0; o < g.outcome_count(); ++o) {
      for (const auto& h : games) {
        for (std::size_t t = 0; t < h.outcome_count(); ++t) {
          if (geq(g.payoff(o), h.payoff(t))) pref.set_geq(pref.index(g.id(), o), pref.index(h.id(), t));
        }
      }
    }
  }
  return pref;
}

}  // namespace

Preference pareto_preference(const std::vector<NormalFormGame>& games) {
  for (const auto& g : games) {
    if (g.players() != games.front().players()) {
      throw InputError("Pareto comparison needs equal player counts; '" + g.id() + "' has " +
                       std::to_string(g.players()) + ", '" + games.front().id() + "' has " +
                       std::to_string(games.front().players()));
    }
  }
  return from_games(games, [](const PayoffVector& u, const PayoffVector& v) {
    auto order = pareto_compare(u, v);
    return order == ParetoOrder::better || order == ParetoOrder::equal;
  });
}

Preference player_preference(const std::vector<NormalFormGame>& games, std::size_t player) {
  for (const auto& g : games) {
    if (player >= g.players()) {
      throw InputError("game '" + g.id() + "' has no player " + std::to_string(player + 1));
    }
  }
  return from_games(games, [player](const PayoffVector& u, const PayoffVector& v) {
    return u[player] >= v[player];
  });
}

Preference explicit_preference(std::vector<Variable> blocks,
                               const std::vector<std::pair<Preference::Key, Preference::Key>>& geq) {
  Preference pref(std::move(blocks));
  for (const auto& [better, worse] : geq) pref.set_geq(pref.index(better), pref.index(worse));
  pref.close_without_cycles();
  return pref;
}

Correspondence improvement_oc(std::string_view x, std::string_view y, const Preference& pref,
                              bool strict) {
  const auto& bx = pref.block(x);
  const auto& by = pref.block(y);
  Correspondence oc(bx.id, by.id, bx.domain.size(), by.domain.size());
  for (std::size_t o = 0; o < bx.domain.size(); ++o) {
    auto a = pref.index(x, o);
    for (std::size_t t = 0; t < by.domain.size(); ++t) {
      auto b = pref.index(y, t);
      if (strict ? pref.strictly(b, a) : pref.geq(b, a)) oc.set(o, t);
    }
  }
  return oc;
}

const char* to_string(SiMode mode) {
  switch (mode) {
    case SiMode::exact: return "exact";
    case SiMode::propagation: return "propagation";
    case SiMode::refutation: return "refutation";
  }
  return "?";
}

SiMode parse_si_mode(std::string_view text) {
  if (text == "exact") return SiMode::exact;
  if (text == "propagation") return SiMode::propagation;
  if (text == "refutation") return SiMode::refutation;
  throw InputError("unknown mode '" + std::string(text) + "' (exact, propagation, refutation)");
}

namespace {

// Checks shared by all deciders: certificates, preference coverage, and the
// propagated structure reused across pairs.
struct Prepared {
  bool certified = false;
  std::optional<PropagatedBcs> propagated;
};

Prepared prepare(const Bcs& bcs, const Preference& pref, SiMode mode,
                 const SiCertificate& certificate) {
  for (const auto& var : bcs.variables()) {
    if (pref.block(var.id).domain != var.domain) {
      throw InputError("preference values for '" + var.id + "' differ from the variable's domain");
    }
  }
  Prepared p;
  switch (mode) {
    case SiMode::exact:
      p.certified = true;
      break;
    case SiMode::propagation:
      if (certificate.orders) {
        auto report = is_max_closed(bcs, *certificate.orders);
        if (!report.closed) {
          throw PreconditionError("supplied orders do not make the structure max-closed");
        }
        p.certified = true;
      }
      p.propagated = path_consistency(bcs);
      break;
    case SiMode::refutation:
      if (certificate.joins) {
        auto report = is_join_closed(bcs, *certificate.joins);
        if (!report.closed) {
          throw PreconditionError("supplied joins do not make the structure join-closed");
        }
        p.certified = true;
      } else if (certificate.orders) {
        // max under a total order is a join
        if (!is_max_closed(bcs, *certificate.orders).closed) {
          throw PreconditionError("supplied orders do not make the structure max-closed");
        }
        p.certified = true;
      }
      p.propagated = path_consistency(bcs);
      break;
  }
  return p;
}

SiVerdict decide_prepared(const Bcs& bcs, std::string_view x, std::string_view y,
                          const Preference& pref, bool strict, SiMode mode, const Prepared& p) {
  bcs.require(x);
  bcs.require(y);
  auto claim = improvement_oc(x, y, pref, strict);
  SiVerdict verdict;
  verdict.mode = mode;
  verdict.certified = p.certified;
  switch (mode) {
    case SiMode::exact:
      verdict.counterexample = find_counterexample(bcs, claim);
      verdict.yes = !verdict.counterexample;
      break;
    case SiMode::propagation:
      verdict.yes = derivable(*p.propagated, claim);
      break;
    case SiMode::refutation: {
      auto against = claim.complement();
      if (path_consistency(bcs.with_constraint(against)).has_empty) {
        verdict.yes = true;
        break;
      }
      // Otherwise refute each remaining pair on its own.
      const auto& reachable = p.propagated->between(x, y);
      verdict.yes = true;
      for (auto [a, b] : against.pairs()) {
        if (!reachable.contains(a, b)) continue;
        auto pin = Correspondence::from_pairs(claim.source(), claim.target(), claim.rows(),
                                              claim.cols(), {{a, b}});
        if (!path_consistency(bcs.with_constraint(std::move(pin))).has_empty) {
          verdict.yes = false;
          break;
        }
      }
      break;
    }
  }
  return verdict;
}

}  // namespace

SiVerdict decide_si(const Bcs& bcs, std::string_view x, std::string_view y,
                    const Preference& pref, bool strict, SiMode mode,
                    const SiCertificate& certificate) {
  return decide_prepared(bcs, x, y, pref, strict, mode, prepare(bcs, pref, mode, certificate));
}

std::vector<std::string> find_si_on(const Bcs& bcs, std::string_view x, const Preference& pref,
                                    bool strict, SiMode mode, const SiCertificate& certificate) {
  bcs.require(x);
  auto p = prepare(bcs, pref, mode, certificate);
  std::vector<std::string> out;
  for (const auto& var : bcs.variables()) {
    if (var.id == x) continue;
    if (decide_prepared(bcs, x, var.id, pref, strict, mode, p).yes) out.push_back(var.id);
  }
  return out;
}

std::vector<std::pair<std::string, std::string>> find_any_si(const Bcs& bcs,
                                                             const Preference& pref, bool strict,
                                                             SiMode mode,
                                                             const SiCertificate& certificate) {
  auto p = prepare(bcs, pref, mode, certificate);
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& vx : bcs.variables()) {
    for (const auto& vy : bcs.variables()) {
      if (vx.id == vy.id) continue;
      if (decide_prepared(bcs, vx.id, vy.id, pref, strict, mode, p).yes) {
        out.emplace_back(vx.id, vy.id);
      }
    }
  }
  return out;
}

}  // namespace ocreason

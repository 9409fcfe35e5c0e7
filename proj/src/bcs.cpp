#include "ocreason/bcs.hpp"

#include <functional>
#include <unordered_set>

#include "ocreason/errors.hpp"

namespace ocreason {

Bcs::Bcs(std::vector<Variable> variables, std::vector<Correspondence> constraints)
    : variables_(std::move(variables)), constraints_(std::move(constraints)) {
  std::unordered_set<std::string> seen;
  for (const auto& v : variables_) {
    if (v.id.empty()) throw InputError("variable with empty id");
    if (!seen.insert(v.id).second) throw InputError("duplicate variable id '" + v.id + "'");
    if (v.domain.empty()) throw InputError("variable '" + v.id + "' has an empty domain");
    std::unordered_set<std::string> labels;
    for (const auto& label : v.domain) {
      if (!labels.insert(label).second) {
        throw InputError("variable '" + v.id + "' lists value '" + label + "' twice");
      }
    }
  }
  for (const auto& c : constraints_) {
    auto x = require(c.source());
    auto y = require(c.target());
    if (c.rows() != variables_[x].domain.size() || c.cols() != variables_[y].domain.size()) {
      throw InputError("constraint " + c.source() + "->" + c.target() +
                       " does not match the variable domains");
    }
  }
}

std::optional<std::size_t> Bcs::index_of(std::string_view id) const {
  for (std::size_t i = 0; i < variables_.size(); ++i) {
    if (variables_[i].id == id) return i;
  }
  return std::nullopt;
}

std::size_t Bcs::require(std::string_view id) const {
  auto i = index_of(id);
  if (!i) throw InputError("unknown variable '" + std::string(id) + "'");
  return *i;
}

std::size_t Bcs::value_index(std::size_t variable, std::string_view label) const {
  const auto& dom = variables_.at(variable).domain;
  for (std::size_t v = 0; v < dom.size(); ++v) {
    if (dom[v] == label) return v;
  }
  throw InputError("variable '" + variables_[variable].id + "' has no value '" +
                   std::string(label) + "'");
}

Correspondence Bcs::full_relation(std::string_view x, std::string_view y) const {
  auto i = require(x);
  auto j = require(y);
  return Correspondence::full(variables_[i].id, variables_[j].id, variables_[i].domain.size(),
                              variables_[j].domain.size());
}

Bcs Bcs::with_constraint(Correspondence c) const {
  auto constraints = constraints_;
  constraints.push_back(std::move(c));
  return Bcs(variables_, std::move(constraints));
}

bool satisfies(const Bcs& bcs, const Assignment& assignment) {
  if (assignment.size() != bcs.size()) return false;
  for (std::size_t i = 0; i < bcs.size(); ++i) {
    if (assignment[i] >= bcs.variable(i).domain.size()) return false;
  }
  for (const auto& c : bcs.constraints()) {
    if (!c.contains(assignment[bcs.require(c.source())], assignment[bcs.require(c.target())])) {
      return false;
    }
  }
  return true;
}

const Correspondence& PropagatedBcs::between(std::string_view x, std::string_view y) const {
  return relations.at(index_of(x)).at(index_of(y));
}

std::size_t PropagatedBcs::index_of(std::string_view id) const {
  for (std::size_t i = 0; i < variables.size(); ++i) {
    if (variables[i].id == id) return i;
  }
  throw InputError("unknown variable '" + std::string(id) + "'");
}

std::vector<std::vector<std::size_t>> PropagatedBcs::excluded_values() const {
  std::vector<std::vector<std::size_t>> out(variables.size());
  for (std::size_t i = 0; i < variables.size(); ++i) {
    for (std::size_t v = 0; v < variables[i].domain.size(); ++v) {
      if (!relations[i][i].contains(v, v)) out[i].push_back(v);
    }
  }
  return out;
}

Bcs PropagatedBcs::to_bcs() const {
  std::vector<Correspondence> constraints;
  for (std::size_t i = 0; i < variables.size(); ++i) {
    for (std::size_t j = i; j < variables.size(); ++j) constraints.push_back(relations[i][j]);
  }
  return Bcs(variables, std::move(constraints));
}

namespace {

using Relations = std::vector<std::vector<Correspondence>>;

// One relation per ordered pair: the intersection of every constraint on the
// pair in either direction, the full relation when there is none, and a
// sub-identity on the diagonal.
Relations normalize(const Bcs& bcs) {
  const auto n = bcs.size();
  Relations r(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& vi = bcs.variable(i);
    for (std::size_t j = 0; j < n; ++j) {
      const auto& vj = bcs.variable(j);
      if (i == j) {
        r[i].push_back(Correspondence::identity(vi.id, vi.domain.size()));
      } else {
        r[i].push_back(
            Correspondence::full(vi.id, vj.id, vi.domain.size(), vj.domain.size()));
      }
    }
  }
  for (const auto& c : bcs.constraints()) {
    auto x = bcs.require(c.source());
    auto y = bcs.require(c.target());
    r[x][y] &= c;
    r[y][x] &= inverse(c);
  }
  return r;
}

// Applies the transitivity rule through k to the pair (i, j), keeping the
// reverse relation as the transpose. Returns true if the relation shrank.
bool revise_through(Relations& r, std::size_t i, std::size_t j, std::size_t k) {
  auto next = intersect(r[i][j], compose(r[i][k], r[k][j]));
  if (next == r[i][j]) return false;
  if (i != j) r[j][i] = inverse(next);
  r[i][j] = std::move(next);
  return true;
}

PropagatedBcs finish(const Bcs& bcs, Relations r, std::size_t passes) {
  PropagatedBcs out;
  out.variables = bcs.variables();
  out.passes = passes;
  for (const auto& row : r) {
    for (const auto& c : row) out.has_empty = out.has_empty || c.empty();
  }
  out.relations = std::move(r);
  return out;
}

}  // namespace

PropagatedBcs initial_relations(const Bcs& bcs) { return finish(bcs, normalize(bcs), 0); }

PropagatedBcs path_consistency(const Bcs& bcs) {
  const auto n = bcs.size();
  auto r = normalize(bcs);

  // Pairs are tracked as i <= j; the transpose is kept in sync.
  std::vector<std::vector<char>> queued(n, std::vector<char>(n, 0));
  std::vector<std::pair<std::size_t, std::size_t>> current;
  std::vector<std::pair<std::size_t, std::size_t>> next;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      current.emplace_back(i, j);
      queued[i][j] = 1;
    }
  }
  auto mark = [&](std::size_t a, std::size_t b) {
    if (a > b) std::swap(a, b);
    if (!queued[a][b]) {
      queued[a][b] = 1;
      next.emplace_back(a, b);
    }
  };

  std::size_t generations = 0;
  while (!current.empty()) {
    ++generations;
    for (auto [i, j] : current) {
      queued[i][j] = 0;
      bool changed = false;
      for (std::size_t k = 0; k < n; ++k) changed = revise_through(r, i, j, k) || changed;
      if (!changed) continue;
      for (std::size_t x = 0; x < n; ++x) {
        mark(i, x);
        mark(j, x);
      }
    }
    current.swap(next);
    next.clear();
  }
  return finish(bcs, std::move(r), generations);
}

PropagatedBcs path_consistency_naive(const Bcs& bcs) {
  const auto n = bcs.size();
  auto r = normalize(bcs);
  std::size_t passes = 0;
  bool changed = true;
  while (changed) {
    changed = false;
    ++passes;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) changed = revise_through(r, i, j, k) || changed;
      }
    }
  }
  return finish(bcs, std::move(r), passes);
}

namespace {

// Depth-first search in variable order. `visit` returns false to stop.
void search(const Bcs& bcs, const std::function<bool(const Assignment&)>& visit) {
  const auto n = bcs.size();
  if (n == 0) {
    visit({});
    return;
  }
  std::vector<std::vector<std::optional<Correspondence>>> rel(
      n, std::vector<std::optional<Correspondence>>(n));
  std::vector<Correspondence::Row> domains;
  for (std::size_t i = 0; i < n; ++i) {
    domains.emplace_back(bcs.variable(i).domain.size());
    domains.back().set();
  }
  for (const auto& c : bcs.constraints()) {
    auto x = bcs.require(c.source());
    auto y = bcs.require(c.target());
    if (x == y) {
      for (std::size_t v = 0; v < c.rows(); ++v) {
        if (!c.contains(v, v)) domains[x].reset(v);
      }
      continue;
    }
    auto& forward = rel[x][y];
    forward = forward ? intersect(*forward, c) : c;
    auto back = inverse(c);
    auto& backward = rel[y][x];
    backward = backward ? intersect(*backward, back) : back;
  }

  Assignment assignment(n);
  std::vector<std::vector<Correspondence::Row>> stack{domains};
  bool stop = false;
  std::function<void(std::size_t)> descend = [&](std::size_t i) {
    const auto dom = stack[i][i];
    for (auto v = dom.find_first(); v != Correspondence::Row::npos && !stop;
         v = dom.find_next(v)) {
      assignment[i] = v;
      if (i + 1 == n) {
        stop = !visit(assignment);
        continue;
      }
      auto pruned = stack[i];
      bool wiped = false;
      for (std::size_t j = i + 1; j < n && !wiped; ++j) {
        if (rel[i][j]) {
          pruned[j] &= rel[i][j]->image(v);
          wiped = pruned[j].none();
        }
      }
      if (wiped) continue;
      stack.push_back(std::move(pruned));
      descend(i + 1);
      stack.pop_back();
    }
  };
  for (const auto& d : domains) {
    if (d.none()) return;
  }
  descend(0);
}

}  // namespace

std::vector<Assignment> enumerate_satisfying(const Bcs& bcs, std::optional<std::size_t> limit) {
  std::vector<Assignment> out;
  if (limit && *limit == 0) return out;
  search(bcs, [&](const Assignment& a) {
    out.push_back(a);
    return !limit || out.size() < *limit;
  });
  return out;
}

std::size_t count_satisfying(const Bcs& bcs) {
  std::size_t count = 0;
  search(bcs, [&](const Assignment&) {
    ++count;
    return true;
  });
  return count;
}

std::optional<Assignment> find_counterexample(const Bcs& bcs, const Correspondence& claim) {
  auto x = bcs.require(claim.source());
  auto y = bcs.require(claim.target());
  if (claim.rows() != bcs.variable(x).domain.size() ||
      claim.cols() != bcs.variable(y).domain.size()) {
    throw InputError("claim " + claim.source() + "->" + claim.target() +
                     " does not match the variable domains");
  }
  auto found = enumerate_satisfying(bcs.with_constraint(claim.complement()), 1);
  if (found.empty()) return std::nullopt;
  return found.front();
}

bool implies(const Bcs& bcs, const Correspondence& claim) {
  return !find_counterexample(bcs, claim);
}

bool derivable(const PropagatedBcs& propagated, const Correspondence& claim) {
  return propagated.between(claim.source(), claim.target()).subset_of(claim);
}

}  // namespace ocreason

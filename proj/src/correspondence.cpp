#include "ocreason/correspondence.hpp"

#include "ocreason/errors.hpp"

namespace ocreason {

Correspondence::Correspondence(std::string source, std::string target, std::size_t rows,
                               std::size_t cols)
    : source_(std::move(source)), target_(std::move(target)), cols_(cols),
      rows_(rows, Row(cols)) {}

Correspondence Correspondence::full(std::string source, std::string target, std::size_t rows,
                                    std::size_t cols) {
  Correspondence c(std::move(source), std::move(target), rows, cols);
  for (auto& r : c.rows_) r.set();
  return c;
}

Correspondence Correspondence::identity(const std::string& variable, std::size_t size) {
  Correspondence c(variable, variable, size, size);
  for (std::size_t x = 0; x < size; ++x) c.rows_[x].set(x);
  return c;
}

Correspondence Correspondence::from_pairs(std::string source, std::string target,
                                          std::size_t rows, std::size_t cols,
                                          const std::vector<Pair>& pairs) {
  Correspondence c(std::move(source), std::move(target), rows, cols);
  for (auto [x, y] : pairs) c.set(x, y);
  return c;
}

void Correspondence::set(std::size_t x, std::size_t y, bool value) {
  if (x >= rows_.size() || y >= cols_) {
    throw InputError("pair (" + std::to_string(x) + "," + std::to_string(y) +
                     ") outside the " + std::to_string(rows_.size()) + "x" +
                     std::to_string(cols_) + " correspondence " + source_ + "->" + target_);
  }
  rows_[x].set(y, value);
}

bool Correspondence::empty() const {
  for (const auto& r : rows_) {
    if (r.any()) return false;
  }
  return true;
}

std::size_t Correspondence::count() const {
  std::size_t n = 0;
  for (const auto& r : rows_) n += r.count();
  return n;
}

namespace {

void require_same_shape(const Correspondence& a, const Correspondence& b, const char* what) {
  if (a.source() != b.source() || a.target() != b.target() || a.rows() != b.rows() ||
      a.cols() != b.cols()) {
    throw InputError(std::string(what) + ": correspondences " + a.source() + "->" + a.target() +
                     " and " + b.source() + "->" + b.target() + " are not between the same "
                     "variables");
  }
}

}  // namespace

bool Correspondence::subset_of(const Correspondence& other) const {
  require_same_shape(*this, other, "subset_of");
  for (std::size_t x = 0; x < rows_.size(); ++x) {
    if (!rows_[x].is_subset_of(other.rows_[x])) return false;
  }
  return true;
}

Correspondence Correspondence::complement() const {
  Correspondence c = *this;
  for (auto& r : c.rows_) r.flip();
  return c;
}

std::vector<Correspondence::Pair> Correspondence::pairs() const {
  std::vector<Pair> out;
  for (std::size_t x = 0; x < rows_.size(); ++x) {
    for (auto y = rows_[x].find_first(); y != Row::npos; y = rows_[x].find_next(y)) {
      out.emplace_back(x, y);
    }
  }
  return out;
}

Correspondence& Correspondence::operator&=(const Correspondence& other) {
  require_same_shape(*this, other, "intersect");
  for (std::size_t x = 0; x < rows_.size(); ++x) rows_[x] &= other.rows_[x];
  return *this;
}

Correspondence compose(const Correspondence& phi, const Correspondence& psi) {
  if (phi.target() != psi.source() || phi.cols() != psi.rows()) {
    throw InputError("compose: " + phi.source() + "->" + phi.target() + " cannot be followed by " +
                     psi.source() + "->" + psi.target());
  }
  Correspondence out(phi.source(), psi.target(), phi.rows(), psi.cols());
  for (std::size_t x = 0; x < phi.rows(); ++x) {
    const auto& mid = phi.image(x);
    auto& row = out.image(x);
    for (auto y = mid.find_first(); y != Correspondence::Row::npos; y = mid.find_next(y)) {
      row |= psi.image(y);
    }
  }
  return out;
}

Correspondence intersect(const Correspondence& phi, const Correspondence& xi) {
  Correspondence out = phi;
  out &= xi;
  return out;
}

Correspondence inverse(const Correspondence& phi) {
  Correspondence out(phi.target(), phi.source(), phi.cols(), phi.rows());
  for (std::size_t x = 0; x < phi.rows(); ++x) {
    const auto& row = phi.image(x);
    for (auto y = row.find_first(); y != Correspondence::Row::npos; y = row.find_next(y)) {
      out.image(y).set(x);
    }
  }
  return out;
}

}  // namespace ocreason

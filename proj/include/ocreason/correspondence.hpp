#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace ocreason {

/// A set-valued function between the domains of two variables, stored as a
/// dense bit grid with one row per source value.
class Correspondence {
 public:
  using Row = boost::dynamic_bitset<>;
  using Pair = std::pair<std::size_t, std::size_t>;

  Correspondence() = default;
  /// The empty relation of the given shape.
  Correspondence(std::string source, std::string target, std::size_t rows, std::size_t cols);

  static Correspondence full(std::string source, std::string target, std::size_t rows,
                             std::size_t cols);
  static Correspondence identity(const std::string& variable, std::size_t size);
  static Correspondence from_pairs(std::string source, std::string target, std::size_t rows,
                                   std::size_t cols, const std::vector<Pair>& pairs);

  const std::string& source() const { return source_; }
  const std::string& target() const { return target_; }
  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }

  bool contains(std::size_t x, std::size_t y) const { return rows_.at(x).test(y); }
  void set(std::size_t x, std::size_t y, bool value = true);
  const Row& image(std::size_t x) const { return rows_.at(x); }
  Row& image(std::size_t x) { return rows_.at(x); }

  /// No pairs at all: the "everywhere-empty" correspondence.
  bool empty() const;
  std::size_t count() const;
  bool subset_of(const Correspondence& other) const;
  Correspondence complement() const;
  std::vector<Pair> pairs() const;

  Correspondence& operator&=(const Correspondence& other);

  friend bool operator==(const Correspondence& a, const Correspondence& b) {
    return a.source_ == b.source_ && a.target_ == b.target_ && a.cols_ == b.cols_ &&
           a.rows_ == b.rows_;
  }

 private:
  std::string source_;
  std::string target_;
  std::size_t cols_ = 0;
  std::vector<Row> rows_;
};

/// psi after phi: x maps to psi(phi(x)). Requires phi.target() == psi.source().
Correspondence compose(const Correspondence& phi, const Correspondence& psi);
Correspondence intersect(const Correspondence& phi, const Correspondence& xi);
Correspondence inverse(const Correspondence& phi);

}  // namespace ocreason

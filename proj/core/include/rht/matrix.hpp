#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "rht/rational.hpp"

namespace rht {

using VectorQ = std::vector<Rational>;

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Sparse matrix over Q. Rows are ordered maps column -> value; zero entries
/// are never stored.
class MatrixQ {
 public:
  using Row = std::map<std::size_t, Rational>;

  MatrixQ() = default;
  MatrixQ(std::size_t rows, std::size_t cols);

  static MatrixQ identity(std::size_t n);
  static MatrixQ from_dense(const std::vector<VectorQ>& dense);
  /// Builds a matrix whose rows are the given vectors; all must share `cols`.
  static MatrixQ from_rows(const std::vector<VectorQ>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t nonzeros() const;

  Rational get(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, const Rational& value);
  /// Adds `value` to entry (r, c), dropping the entry if it cancels.
  void add(std::size_t r, std::size_t c, const Rational& value);

  const Row& row(std::size_t r) const { return data_.at(r); }

  std::vector<VectorQ> to_dense() const;
  VectorQ apply(const VectorQ& x) const;
  MatrixQ transpose() const;

  /// Rows of `top` followed by rows of `bottom`.
  static MatrixQ stack(const MatrixQ& top, const MatrixQ& bottom);

  friend bool operator==(const MatrixQ& a, const MatrixQ& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  void check_index(std::size_t r, std::size_t c) const;

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Row> data_;
};

struct RrefOptions {
  /// Matrices with at most this many columns are reduced with dense rational
  /// storage; wider ones go through fraction-free sparse elimination, which
  /// wins from about 8 columns up even on dense input.
  std::size_t dense_threshold = 8;
};

struct RrefResult {
  std::size_t rank = 0;
  MatrixQ reduced;
  std::vector<std::size_t> pivot_cols;
};

/// Gauss-Jordan elimination. The pivot for each column is the first
/// not-yet-used row with a nonzero entry there, so results are reproducible.
RrefResult rref(const MatrixQ& m, const RrefOptions& options = {});

std::size_t rank(const MatrixQ& m);

/// One basis vector per free column, in increasing column order; the free
/// coordinate is 1 and the other free coordinates are 0.
std::vector<VectorQ> kernel_basis(const MatrixQ& m);

/// Some x with m x = b, or nullopt when b is outside the column space.
/// Throws DimensionError when b.size() != m.rows().
std::optional<VectorQ> solve(const MatrixQ& m, const VectorQ& b);

/// Incremental row-space membership over Q. Used to pick complements
/// greedily: `insert` returns false for vectors already in the span.
class SpanBuilder {
 public:
  explicit SpanBuilder(std::size_t dim) : dim_(dim) {}

  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return pivots_.size(); }

  /// Reduces v against the current echelon basis.
  VectorQ reduce(const VectorQ& v) const;
  bool contains(const VectorQ& v) const;
  bool insert(const VectorQ& v);

 private:
  std::size_t dim_;
  // Echelon rows, each normalized to 1 at its pivot.
  std::vector<std::pair<std::size_t, MatrixQ::Row>> pivots_;
};

}  // namespace rht

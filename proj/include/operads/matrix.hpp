#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "operads/rational.hpp"

namespace operads {

/// Dense matrix of exact rationals.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols, Rational(0)) {}

  static RatMatrix from_rows(const std::vector<std::vector<Rational>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Rational& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  RatMatrix transposed() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

/// In-place reduced row echelon form. Pivot choice is the first nonzero entry
/// in column order, so the result is deterministic. Returns the pivot column
/// of each pivot row.
std::vector<std::size_t> rref(RatMatrix& m);

std::size_t rank(RatMatrix m);

/// Canonical basis of the right null space, one vector per free column in
/// ascending column order. dim = cols - rank.
std::vector<std::vector<Rational>> kernel_basis(const RatMatrix& m);

/// True iff the rational spans of the two vector lists coincide.
/// Throws std::invalid_argument when the vector lengths disagree.
bool same_span(const std::vector<std::vector<Rational>>& a,
               const std::vector<std::vector<Rational>>& b);

/// Membership test against the span of a fixed list of vectors.
class SpanTester {
 public:
  explicit SpanTester(const std::vector<std::vector<Rational>>& rows);
  bool contains(std::vector<Rational> v) const;

 private:
  RatMatrix reduced_;
  std::vector<std::size_t> pivots_;
  std::size_t cols_ = 0;
};

/// Factors A once and solves A x = b for many right-hand sides. The returned
/// solution sets every free variable to zero (the pivot-structured particular
/// solution), which is deterministic.
class LinearSolver {
 public:
  explicit LinearSolver(const RatMatrix& a);

  std::optional<std::vector<Rational>> solve(const std::vector<Rational>& rhs) const;

 private:
  std::size_t cols_ = 0;
  std::size_t arows_ = 0;
  std::vector<std::size_t> pivots_;
  RatMatrix echelon_;  // rref of [A | I]; pivots restricted to the A block
};

}  // namespace operads

#include "operads/matrix.hpp"

#include <stdexcept>

namespace operads {

RatMatrix RatMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
  if (rows.empty()) return RatMatrix(0, 0);
  RatMatrix m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols()) throw std::invalid_argument("ragged row list");
    for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

RatMatrix RatMatrix::transposed() const {
  RatMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

namespace {

// Eliminates over the leading `pivot_cols` columns only; trailing columns are
// carried along (used for the [A | I] factorization).
std::vector<std::size_t> rref_partial(RatMatrix& m, std::size_t pivot_cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < pivot_cols && row < m.rows(); ++col) {
    std::size_t sel = row;
    while (sel < m.rows() && m.at(sel, col) == 0) ++sel;
    if (sel == m.rows()) continue;
    if (sel != row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(sel, j), m.at(row, j));
    Rational inv = Rational(1) / m.at(row, col);
    for (std::size_t j = 0; j < m.cols(); ++j) m.at(row, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m.at(i, col) == 0) continue;
      Rational f = m.at(i, col);
      for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) -= f * m.at(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::vector<std::size_t> rref(RatMatrix& m) { return rref_partial(m, m.cols()); }

std::size_t rank(RatMatrix m) { return rref(m).size(); }

std::vector<std::vector<Rational>> kernel_basis(const RatMatrix& matrix) {
  RatMatrix m = matrix;
  std::vector<std::size_t> pivots = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : pivots) is_pivot[p] = true;

  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(m.cols(), Rational(0));
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m.at(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

namespace {

RatMatrix stack(const std::vector<std::vector<Rational>>& a,
                const std::vector<std::vector<Rational>>& b, std::size_t cols) {
  RatMatrix m(a.size() + b.size(), cols);
  std::size_t r = 0;
  for (const auto& v : a) {
    if (v.size() != cols) throw std::invalid_argument("same_span: length mismatch");
    for (std::size_t j = 0; j < cols; ++j) m.at(r, j) = v[j];
    ++r;
  }
  for (const auto& v : b) {
    if (v.size() != cols) throw std::invalid_argument("same_span: length mismatch");
    for (std::size_t j = 0; j < cols; ++j) m.at(r, j) = v[j];
    ++r;
  }
  return m;
}

}  // namespace

bool same_span(const std::vector<std::vector<Rational>>& a,
               const std::vector<std::vector<Rational>>& b) {
  if (a.empty() && b.empty()) return true;
  std::size_t cols = a.empty() ? b.front().size() : a.front().size();
  std::size_t ra = rank(stack(a, {}, cols));
  std::size_t rb = rank(stack(b, {}, cols));
  if (ra != rb) return false;
  return rank(stack(a, b, cols)) == ra;
}

SpanTester::SpanTester(const std::vector<std::vector<Rational>>& rows) {
  if (rows.empty()) return;
  cols_ = rows.front().size();
  reduced_ = stack(rows, {}, cols_);
  pivots_ = rref(reduced_);
}

bool SpanTester::contains(std::vector<Rational> v) const {
  if (pivots_.empty()) {
    for (const auto& x : v)
      if (x != 0) return false;
    return true;
  }
  if (v.size() != cols_) throw std::invalid_argument("SpanTester: length mismatch");
  for (std::size_t r = 0; r < pivots_.size(); ++r) {
    const Rational& f = v[pivots_[r]];
    if (f == 0) continue;
    Rational factor = f;
    for (std::size_t j = 0; j < cols_; ++j) v[j] -= factor * reduced_.at(r, j);
  }
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

LinearSolver::LinearSolver(const RatMatrix& a) : cols_(a.cols()), arows_(a.rows()) {
  echelon_ = RatMatrix(a.rows(), a.cols() + a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) echelon_.at(i, j) = a.at(i, j);
    echelon_.at(i, a.cols() + i) = 1;
  }
  pivots_ = rref_partial(echelon_, a.cols());
}

std::optional<std::vector<Rational>> LinearSolver::solve(const std::vector<Rational>& rhs) const {
  if (rhs.size() != arows_) throw std::invalid_argument("LinearSolver: rhs length mismatch");
  // y = E * rhs, where [R | E] is the stored echelon form and E A = R.
  std::vector<Rational> y(arows_, Rational(0));
  for (std::size_t i = 0; i < arows_; ++i)
    for (std::size_t j = 0; j < arows_; ++j)
      if (echelon_.at(i, cols_ + j) != 0 && rhs[j] != 0)
        y[i] += echelon_.at(i, cols_ + j) * rhs[j];

  for (std::size_t i = pivots_.size(); i < arows_; ++i)
    if (y[i] != 0) return std::nullopt;

  std::vector<Rational> x(cols_, Rational(0));
  for (std::size_t r = 0; r < pivots_.size(); ++r) x[pivots_[r]] = y[r];
  return x;
}

}  // namespace operads

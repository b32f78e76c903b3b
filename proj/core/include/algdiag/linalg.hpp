#ifndef ALGDIAG_LINALG_HPP
#define ALGDIAG_LINALG_HPP

#include <cstddef>
#include <utility>
#include <vector>

namespace algdiag {

/// Incremental row echelon form over a field. T needs + - * /, unary minus,
/// inverse() and is_zero(); Element and RatFun both qualify. Stored rows have
/// a leading 1 at their pivot and zeros at the pivots of earlier rows.
template <typename T>
class RowReducer {
 public:
  RowReducer(std::size_t width, T zero, T one)
      : width_(width), zero_(std::move(zero)), one_(std::move(one)) {}

  std::size_t width() const noexcept { return width_; }
  std::size_t rank() const noexcept { return rows_.size(); }
  const std::vector<std::vector<T>>& rows() const noexcept { return rows_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

  /// Residual of v after elimination against the stored rows.
  std::vector<T> reduce(std::vector<T> v) const {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const std::size_t p = pivots_[i];
      if (v[p].is_zero()) continue;
      const T f = v[p];
      for (std::size_t c = p; c < width_; ++c) {
        if (!rows_[i][c].is_zero()) v[c] -= f * rows_[i][c];
      }
    }
    return v;
  }

  /// Adds v when it is independent of the stored rows; returns whether it was.
  bool insert(std::vector<T> v) {
    v = reduce(std::move(v));
    std::size_t p = 0;
    while (p < width_ && v[p].is_zero()) ++p;
    if (p == width_) return false;
    const T inv = v[p].inverse();
    for (std::size_t c = p; c < width_; ++c) {
      if (!v[c].is_zero()) v[c] *= inv;
    }
    rows_.push_back(std::move(v));
    pivots_.push_back(p);
    return true;
  }

  /// Basis of {x : row . x = 0 for every stored row}, one vector per
  /// non-pivot column.
  std::vector<std::vector<T>> null_space() const {
    std::vector<std::vector<T>> rref = rows_;
    for (std::size_t i = rref.size(); i-- > 0;) {
      for (std::size_t k = 0; k < i; ++k) {
        const T f = rref[k][pivots_[i]];
        if (f.is_zero()) continue;
        for (std::size_t c = pivots_[i]; c < width_; ++c) {
          if (!rref[i][c].is_zero()) rref[k][c] -= f * rref[i][c];
        }
      }
    }
    std::vector<bool> is_pivot(width_, false);
    for (std::size_t p : pivots_) is_pivot[p] = true;
    std::vector<std::vector<T>> basis;
    for (std::size_t free = 0; free < width_; ++free) {
      if (is_pivot[free]) continue;
      std::vector<T> x(width_, zero_);
      x[free] = one_;
      for (std::size_t i = 0; i < rref.size(); ++i) {
        if (!rref[i][free].is_zero()) x[pivots_[i]] = -rref[i][free];
      }
      basis.push_back(std::move(x));
    }
    return basis;
  }

 private:
  std::size_t width_;
  T zero_;
  T one_;
  std::vector<std::vector<T>> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace algdiag

#endif

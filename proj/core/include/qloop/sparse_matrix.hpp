#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <tuple>
#include <utility>
#include <vector>

#include "qloop/scalar.hpp"

namespace qloop {

/// Compressed-row matrix over an exact (or float) scalar ring. Column indices
/// are sorted within each row and no stored value is zero, so two matrices are
/// equal iff their arrays are equal.
template <class S>
class SparseMatrix {
 public:
  using Traits = scalar_traits<S>;
  using Index = std::uint32_t;
  using Triplet = std::tuple<Index, Index, S>;

  SparseMatrix() = default;
  SparseMatrix(Index rows, Index cols) : rows_(rows), cols_(cols), row_ptr_(rows + 1, 0) {}

  static SparseMatrix identity(Index n, const S& one) {
    SparseMatrix m(n, n);
    m.col_.reserve(n);
    m.val_.reserve(n);
    for (Index i = 0; i < n; ++i) {
      m.col_.push_back(i);
      m.val_.push_back(one);
      m.row_ptr_[i + 1] = i + 1;
    }
    return m;
  }

  /// Sums duplicate positions and drops zeros.
  static SparseMatrix from_triplets(Index rows, Index cols, std::vector<Triplet> entries) {
    std::sort(entries.begin(), entries.end(), [](const Triplet& a, const Triplet& b) {
      return std::tie(std::get<0>(a), std::get<1>(a)) < std::tie(std::get<0>(b), std::get<1>(b));
    });
    SparseMatrix m(rows, cols);
    std::size_t i = 0;
    while (i < entries.size()) {
      const Index r = std::get<0>(entries[i]);
      const Index c = std::get<1>(entries[i]);
      S acc = std::move(std::get<2>(entries[i]));
      ++i;
      while (i < entries.size() && std::get<0>(entries[i]) == r && std::get<1>(entries[i]) == c) {
        acc += std::get<2>(entries[i]);
        ++i;
      }
      if (Traits::is_zero(acc)) continue;
      m.col_.push_back(c);
      m.val_.push_back(std::move(acc));
      m.row_ptr_[r + 1] = static_cast<Index>(m.col_.size());
    }
    for (Index r = 0; r < rows; ++r) m.row_ptr_[r + 1] = std::max(m.row_ptr_[r + 1], m.row_ptr_[r]);
    return m;
  }

  [[nodiscard]] Index rows() const { return rows_; }
  [[nodiscard]] Index cols() const { return cols_; }
  [[nodiscard]] std::size_t nnz() const { return val_.size(); }
  [[nodiscard]] bool is_zero() const { return val_.empty(); }
  [[nodiscard]] const std::vector<Index>& row_ptr() const { return row_ptr_; }
  [[nodiscard]] const std::vector<Index>& col_index() const { return col_; }
  [[nodiscard]] const std::vector<S>& values() const { return val_; }

  template <class F>
  void for_each(F&& f) const {
    for (Index r = 0; r < rows_; ++r) {
      for (Index k = row_ptr_[r]; k < row_ptr_[r + 1]; ++k) f(r, col_[k], val_[k]);
    }
  }

  /// Row-major first stored entry.
  [[nodiscard]] std::optional<std::tuple<Index, Index, S>> first_nonzero() const {
    for (Index r = 0; r < rows_; ++r) {
      if (row_ptr_[r] != row_ptr_[r + 1]) return std::make_tuple(r, col_[row_ptr_[r]], val_[row_ptr_[r]]);
    }
    return std::nullopt;
  }

  /// Product by sparse accumulation, one dense row buffer per call.
  friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
    SparseMatrix out(a.rows_, b.cols_);
    if (a.is_zero() || b.is_zero()) return out;
    std::vector<S> acc(b.cols_);
    std::vector<char> used(b.cols_, 0);
    std::vector<Index> touched;
    for (Index r = 0; r < a.rows_; ++r) {
      touched.clear();
      for (Index k = a.row_ptr_[r]; k < a.row_ptr_[r + 1]; ++k) {
        const Index mid = a.col_[k];
        const S& av = a.val_[k];
        for (Index t = b.row_ptr_[mid]; t < b.row_ptr_[mid + 1]; ++t) {
          const Index c = b.col_[t];
          if (!used[c]) {
            used[c] = 1;
            touched.push_back(c);
          }
          Traits::add_product(acc[c], av, b.val_[t]);
        }
      }
      std::sort(touched.begin(), touched.end());
      for (Index c : touched) {
        if (!Traits::is_zero(acc[c])) {
          out.col_.push_back(c);
          out.val_.push_back(std::move(acc[c]));
        }
        acc[c] = S{};
        used[c] = 0;
      }
      out.row_ptr_[r + 1] = static_cast<Index>(out.col_.size());
    }
    return out;
  }

  /// a + s * b for a scalar s.
  static SparseMatrix axpy(const SparseMatrix& a, const S& s, const SparseMatrix& b) {
    SparseMatrix out(a.rows_, a.cols_);
    for (Index r = 0; r < a.rows_; ++r) {
      Index i = a.row_ptr_[r];
      Index j = b.row_ptr_[r];
      const Index ie = a.row_ptr_[r + 1];
      const Index je = b.row_ptr_[r + 1];
      while (i < ie || j < je) {
        if (j >= je || (i < ie && a.col_[i] < b.col_[j])) {
          out.col_.push_back(a.col_[i]);
          out.val_.push_back(a.val_[i]);
          ++i;
          continue;
        }
        S v{};
        const Index c = b.col_[j];
        if (i < ie && a.col_[i] == c) {
          v = a.val_[i];
          ++i;
        }
        Traits::add_product(v, s, b.val_[j]);
        ++j;
        if (!Traits::is_zero(v)) {
          out.col_.push_back(c);
          out.val_.push_back(std::move(v));
        }
      }
      out.row_ptr_[r + 1] = static_cast<Index>(out.col_.size());
    }
    return out;
  }

  [[nodiscard]] SparseMatrix scaled(const S& s) const {
    SparseMatrix out(rows_, cols_);
    for (Index r = 0; r < rows_; ++r) {
      for (Index k = row_ptr_[r]; k < row_ptr_[r + 1]; ++k) {
        S v{};
        Traits::add_product(v, s, val_[k]);
        if (Traits::is_zero(v)) continue;
        out.col_.push_back(col_[k]);
        out.val_.push_back(std::move(v));
      }
      out.row_ptr_[r + 1] = static_cast<Index>(out.col_.size());
    }
    return out;
  }

  /// Entry-wise map into another scalar ring; zeros are dropped.
  template <class T, class F>
  [[nodiscard]] SparseMatrix<T> map(F&& f) const {
    std::vector<typename SparseMatrix<T>::Triplet> entries;
    entries.reserve(val_.size());
    for_each([&](Index r, Index c, const S& v) { entries.emplace_back(r, c, f(v)); });
    return SparseMatrix<T>::from_triplets(rows_, cols_, std::move(entries));
  }

  friend bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.row_ptr_ == b.row_ptr_ && a.col_ == b.col_ &&
           a.val_ == b.val_;
  }

 private:
  Index rows_ = 0;
  Index cols_ = 0;
  std::vector<Index> row_ptr_{0};
  std::vector<Index> col_;
  std::vector<S> val_;
};

}  // namespace qloop

#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qloop/chain_space.hpp"
#include "qloop/errors.hpp"
#include "qloop/sparse_matrix.hpp"

namespace qloop {

/// Operator on a ChainSpace that shifts the A_L sector by a fixed charge.
///
/// blocks()[m] maps sector m to sector m + charge (mod N). The zero operator
/// has every block empty and is compatible with any charge.
template <class S>
class GradedOperator {
 public:
  using Matrix = SparseMatrix<S>;
  using Index = typename Matrix::Index;
  using Traits = scalar_traits<S>;

  struct Entry {
    std::uint32_t row;
    std::uint32_t col;
    S value;
  };

  GradedOperator() = default;
  GradedOperator(std::shared_ptr<const ChainSpace> space, int charge, std::vector<Matrix> blocks)
      : space_(std::move(space)), charge_(space_->shift(charge, 0)), blocks_(std::move(blocks)) {}

  static GradedOperator zero(std::shared_ptr<const ChainSpace> space) {
    std::vector<Matrix> blocks;
    for (int m = 0; m < space->n_param(); ++m) blocks.emplace_back(space->sector_size(m), space->sector_size(m));
    return GradedOperator(std::move(space), 0, std::move(blocks));
  }

  static GradedOperator identity(std::shared_ptr<const ChainSpace> space, const S& one) {
    std::vector<Matrix> blocks;
    for (int m = 0; m < space->n_param(); ++m) blocks.push_back(Matrix::identity(space->sector_size(m), one));
    return GradedOperator(std::move(space), 0, std::move(blocks));
  }

  /// Assembles from entries in global basis indices. Throws NotGraded if two
  /// entries imply different sector shifts.
  static GradedOperator from_entries(std::shared_ptr<const ChainSpace> space, std::vector<Entry> entries) {
    const int n = space->n_param();
    std::optional<int> charge;
    for (const auto& e : entries) {
      if (Traits::is_zero(e.value)) continue;
      const int c = space->shift(space->sector_of(e.row) - space->sector_of(e.col), 0);
      if (charge && *charge != c) throw Error(ErrorKind::NotGraded, "entries disagree on the sector shift");
      charge = c;
    }
    if (!charge) return zero(std::move(space));
    std::vector<std::vector<typename Matrix::Triplet>> per(static_cast<std::size_t>(n));
    for (auto& e : entries) {
      if (Traits::is_zero(e.value)) continue;
      per[static_cast<std::size_t>(space->sector_of(e.col))].emplace_back(space->index_in_sector(e.row),
                                                                        space->index_in_sector(e.col),
                                                                        std::move(e.value));
    }
    std::vector<Matrix> blocks;
    for (int m = 0; m < n; ++m) {
      blocks.push_back(Matrix::from_triplets(space->sector_size(space->shift(m, *charge)), space->sector_size(m),
                                             std::move(per[static_cast<std::size_t>(m)])));
    }
    return GradedOperator(std::move(space), *charge, std::move(blocks));
  }

  [[nodiscard]] const std::shared_ptr<const ChainSpace>& space() const { return space_; }
  [[nodiscard]] int charge() const { return charge_; }
  [[nodiscard]] const std::vector<Matrix>& blocks() const { return blocks_; }
  [[nodiscard]] const Matrix& block(int source_sector) const { return blocks_[static_cast<std::size_t>(source_sector)]; }

  [[nodiscard]] bool is_zero() const {
    for (const auto& b : blocks_) {
      if (!b.is_zero()) return false;
    }
    return true;
  }
  [[nodiscard]] std::size_t nnz() const {
    std::size_t n = 0;
    for (const auto& b : blocks_) n += b.nnz();
    return n;
  }

  /// First stored entry in (source sector, row, col) order, in global indices.
  [[nodiscard]] std::optional<Entry> first_nonzero() const {
    for (int m = 0; m < static_cast<int>(blocks_.size()); ++m) {
      if (auto e = block(m).first_nonzero()) {
        const auto& [r, c, v] = *e;
        return Entry{space_->members(space_->shift(m, charge_))[r], space_->members(m)[c], v};
      }
    }
    return std::nullopt;
  }

  /// All entries in global indices, sorted by (row, col).
  [[nodiscard]] std::vector<Entry> entries() const {
    std::vector<Entry> out;
    for (int m = 0; m < static_cast<int>(blocks_.size()); ++m) {
      const auto& rows = space_->members(space_->shift(m, charge_));
      const auto& cols = space_->members(m);
      block(m).for_each([&](Index r, Index c, const S& v) { out.push_back(Entry{rows[r], cols[c], v}); });
    }
    std::sort(out.begin(), out.end(), [](const Entry& a, const Entry& b) {
      return a.row != b.row ? a.row < b.row : a.col < b.col;
    });
    return out;
  }

  friend GradedOperator operator*(const GradedOperator& a, const GradedOperator& b) {
    const auto& sp = a.space_;
    const int n = sp->n_param();
    std::vector<Matrix> blocks;
    blocks.reserve(static_cast<std::size_t>(n));
    for (int m = 0; m < n; ++m) blocks.push_back(a.block(sp->shift(m, b.charge_)) * b.block(m));
    return GradedOperator(sp, a.charge_ + b.charge_, std::move(blocks));
  }

  /// a + s * b. Throws NotGraded if both are nonzero with different charges.
  static GradedOperator axpy(const GradedOperator& a, const S& s, const GradedOperator& b) {
    if (b.is_zero() || Traits::is_zero(s)) return a;
    if (a.is_zero()) return b.scaled(s);
    if (a.charge_ != b.charge_) throw Error(ErrorKind::NotGraded, "sum of operators with different charges");
    std::vector<Matrix> blocks;
    for (std::size_t m = 0; m < a.blocks_.size(); ++m) blocks.push_back(Matrix::axpy(a.blocks_[m], s, b.blocks_[m]));
    return GradedOperator(a.space_, a.charge_, std::move(blocks));
  }

  [[nodiscard]] GradedOperator scaled(const S& s) const {
    std::vector<Matrix> blocks;
    for (const auto& b : blocks_) blocks.push_back(b.scaled(s));
    return GradedOperator(space_, charge_, std::move(blocks));
  }

  template <class T, class F>
  [[nodiscard]] GradedOperator<T> map(F&& f) const {
    std::vector<SparseMatrix<T>> blocks;
    for (const auto& b : blocks_) blocks.push_back(b.template map<T>(f));
    return GradedOperator<T>(space_, charge_, std::move(blocks));
  }

  /// Restriction to the domain sector q; other blocks become empty.
  [[nodiscard]] GradedOperator sector_project(int q) const {
    std::vector<Matrix> blocks;
    for (int m = 0; m < static_cast<int>(blocks_.size()); ++m) {
      blocks.push_back(m == space_->shift(q, 0) ? blocks_[static_cast<std::size_t>(m)]
                                                : Matrix(blocks_[static_cast<std::size_t>(m)].rows(),
                                                         blocks_[static_cast<std::size_t>(m)].cols()));
    }
    return GradedOperator(space_, charge_, std::move(blocks));
  }

  /// Exact equality. Zero operators compare equal regardless of stored charge.
  friend bool operator==(const GradedOperator& a, const GradedOperator& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    return a.charge_ == b.charge_ && a.blocks_ == b.blocks_;
  }

 private:
  std::shared_ptr<const ChainSpace> space_;
  int charge_ = 0;
  std::vector<Matrix> blocks_;
};

/// The sector shift of a nonzero operator; nullopt for the zero operator.
template <class S>
std::optional<int> charge_of(const GradedOperator<S>& op) {
  if (op.is_zero()) return std::nullopt;
  return op.charge();
}

template <class S>
GradedOperator<S> sector_project(const GradedOperator<S>& op, int q) {
  return op.sector_project(q);
}

}  // namespace qloop

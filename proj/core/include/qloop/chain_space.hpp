#pragma once

#include <cstdint>
#include <memory>
#include <vector>

namespace qloop {

/// The L-site tensor basis split into A_L sectors.
///
/// Basis states are numbered lexicographically in the local indices with site 1
/// slowest. Each local index carries an integer clock label w so that
/// Z = diag(q^{2w}); the sector of a state is sum(w) mod N.
class ChainSpace {
 public:
  ChainSpace(int n_param, int length, std::vector<int> clock);

  static std::shared_ptr<const ChainSpace> make(int n_param, int length, std::vector<int> clock) {
    return std::make_shared<const ChainSpace>(n_param, length, std::move(clock));
  }

  [[nodiscard]] int n_param() const { return n_param_; }
  [[nodiscard]] int length() const { return length_; }
  [[nodiscard]] int site_dim() const { return static_cast<int>(clock_.size()); }
  [[nodiscard]] std::uint32_t dim() const { return dim_; }
  [[nodiscard]] const std::vector<int>& clock() const { return clock_; }

  /// Local index at site (0-based, site 0 slowest).
  [[nodiscard]] int digit(std::uint32_t state, int site) const {
    return static_cast<int>((state / stride_[static_cast<std::size_t>(site)]) % static_cast<std::uint32_t>(site_dim()));
  }
  [[nodiscard]] std::uint32_t with_digit(std::uint32_t state, int site, int value) const {
    const auto s = stride_[static_cast<std::size_t>(site)];
    return state - static_cast<std::uint32_t>(digit(state, site)) * s + static_cast<std::uint32_t>(value) * s;
  }
  [[nodiscard]] int clock_sum(std::uint32_t state) const { return clock_sum_[state]; }

  [[nodiscard]] int sector_of(std::uint32_t state) const { return sector_[state]; }
  [[nodiscard]] std::uint32_t index_in_sector(std::uint32_t state) const { return local_[state]; }
  [[nodiscard]] const std::vector<std::uint32_t>& members(int sector) const {
    return members_[static_cast<std::size_t>(sector)];
  }
  [[nodiscard]] std::uint32_t sector_size(int sector) const {
    return static_cast<std::uint32_t>(members_[static_cast<std::size_t>(sector)].size());
  }

  /// (m + c) mod N in [0, N).
  [[nodiscard]] int shift(int m, int c) const { return ((m + c) % n_param_ + n_param_) % n_param_; }

 private:
  int n_param_;
  int length_;
  std::vector<int> clock_;
  std::uint32_t dim_ = 1;
  std::vector<std::uint32_t> stride_;
  std::vector<int> clock_sum_;
  std::vector<int> sector_;
  std::vector<std::uint32_t> local_;
  std::vector<std::vector<std::uint32_t>> members_;
};

}  // namespace qloop

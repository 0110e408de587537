#include "qloop/chain_space.hpp"

#include "qloop/errors.hpp"

namespace qloop {

namespace {
constexpr std::uint64_t kMaxDim = std::uint64_t{1} << 22;
}

ChainSpace::ChainSpace(int n_param, int length, std::vector<int> clock)
    : n_param_(n_param), length_(length), clock_(std::move(clock)) {
  if (n_param < 2) throw Error(ErrorKind::InvalidParams, "N must be at least 2");
  if (length < 1) throw Error(ErrorKind::InvalidParams, "chain length must be at least 1");
  if (clock_.empty()) throw Error(ErrorKind::InvalidParams, "site dimension must be positive");
  std::uint64_t dim = 1;
  for (int i = 0; i < length; ++i) {
    dim *= clock_.size();
    if (dim > kMaxDim) throw Error(ErrorKind::ResourceError, "chain dimension exceeds 2^22");
  }
  dim_ = static_cast<std::uint32_t>(dim);
  stride_.assign(static_cast<std::size_t>(length), 1);
  for (int i = length - 2; i >= 0; --i) {
    stride_[static_cast<std::size_t>(i)] = stride_[static_cast<std::size_t>(i) + 1] * static_cast<std::uint32_t>(clock_.size());
  }
  clock_sum_.resize(dim_);
  sector_.resize(dim_);
  local_.resize(dim_);
  members_.assign(static_cast<std::size_t>(n_param), {});
  for (std::uint32_t s = 0; s < dim_; ++s) {
    int w = 0;
    for (int i = 0; i < length; ++i) w += clock_[static_cast<std::size_t>(digit(s, i))];
    clock_sum_[s] = w;
    const int m = shift(w, 0);
    sector_[s] = m;
    local_[s] = static_cast<std::uint32_t>(members_[static_cast<std::size_t>(m)].size());
    members_[static_cast<std::size_t>(m)].push_back(s);
  }
}

}  // namespace qloop

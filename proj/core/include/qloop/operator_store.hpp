#pragma once

#include <atomic>
#include <future>
#include <map>
#include <memory>
#include <mutex>
#include <string>

#include "qloop/chain.hpp"
#include "qloop/divpow.hpp"
#include "qloop/scalar.hpp"

namespace qloop {

enum class RingMode { laurent, cyclotomic, phi_adic, floating };

const char* to_string(RingMode r);
std::optional<RingMode> ring_from_string(const std::string& s);

/// A base operator name with an optional power and normalisation.
struct OpKey {
  std::string op;
  Norm norm = Norm::none;
  int order = 1;

  /// "B1(3)w", "E0(2)q", "E1^3", "K".
  [[nodiscard]] std::string str() const;
  friend bool operator==(const OpKey&, const OpKey&) = default;
};

/// ω-normalised divided power of a barred operator, q-normalised of a
/// Chevalley generator.
inline OpKey dp_omega(std::string op, int n) { return OpKey{std::move(op), Norm::omega_fact, n}; }
inline OpKey dp_q(std::string op, int n) { return OpKey{std::move(op), Norm::q_fact, n}; }
inline OpKey base(std::string op) { return OpKey{std::move(op), Norm::none, 1}; }

struct StoreConfig {
  Backend backend = Backend::spin_half;
  int n_param = 2;
  int length = 4;
  LaurentPoly c;  // cyclic family parameter
  RingMode ring = RingMode::cyclotomic;
  Rescale rescale;
  int phi_trunc = -1;      // -1: floor(max_order / N) + 2
  int max_order = -1;      // largest divided-power order a run will request
  std::string cache_dir;   // empty: no disk cache
};

/// Which symbolic ring a divided power is formed in before specialisation.
enum class Symbolic { laurent, phi_adic };

/// Shared, lazily filled table of operators for one chain. Thread safe:
/// concurrent lookups of the same key compute once and share the result.
///
/// Divided powers are always formed in a symbolic ring (Laurent in the
/// laurent/cyclotomic/float modes, Phi-adic in phi-adic mode) and specialised
/// to the scalar type S afterwards.
template <class S>
class OperatorStore {
 public:
  using Op = GradedOperator<S>;
  using OpPtr = std::shared_ptr<const Op>;

  explicit OperatorStore(StoreConfig cfg);

  [[nodiscard]] const StoreConfig& config() const { return cfg_; }
  [[nodiscard]] const std::shared_ptr<const ChainSpace>& space() const { return space_; }
  [[nodiscard]] RingContext ring_context() const { return RingContext{cfg_.n_param, phi_trunc()}; }
  [[nodiscard]] int phi_trunc() const;

  [[nodiscard]] S scalar(const LaurentPoly& p) const { return scalar_traits<S>::from_laurent(p, ring_context()); }

  OpPtr get(const OpKey& key);

  /// Divided power formed in the given symbolic ring, specialised to Z[q]/Phi.
  GradedOperator<CycloElem> specialised_via(Symbolic which, const std::string& op, Norm norm, int n);

  /// Generic-q value of a divided power (before specialisation).
  std::shared_ptr<const LaurentOp> symbolic_laurent(const std::string& op, Norm norm, int n);

  struct Stats {
    std::size_t computed = 0;
    std::size_t disk_hits = 0;
    std::size_t disk_writes = 0;
  };
  [[nodiscard]] Stats stats() const { return Stats{computed_.load(), disk_hits_.load(), disk_writes_.load()}; }

  /// Key string written into cache files.
  [[nodiscard]] std::string cache_key(const OpKey& key) const;

 private:
  using PhiOp = GradedOperator<PhiAdicElem>;

  OpPtr compute(const OpKey& key);
  std::shared_ptr<const PhiOp> symbolic_phi(const std::string& op, Norm norm, int n);
  const LaurentOp& base_laurent(const std::string& op) const;
  Op specialise(const LaurentOp& op) const;

  template <class V, class F>
  std::shared_ptr<const V> memo(std::map<std::string, std::shared_future<std::shared_ptr<const V>>>& table,
                                const std::string& key, F&& make);

  StoreConfig cfg_;
  std::shared_ptr<const ChainSpace> space_;
  std::map<std::string, LaurentOp> base_;
  std::mutex mu_;
  std::map<std::string, std::shared_future<OpPtr>> ops_;
  std::map<std::string, std::shared_future<std::shared_ptr<const LaurentOp>>> laurent_;
  std::map<std::string, std::shared_future<std::shared_ptr<const PhiOp>>> phi_;
  std::atomic<std::size_t> computed_{0};
  std::atomic<std::size_t> disk_hits_{0};
  std::atomic<std::size_t> disk_writes_{0};
};

extern template class OperatorStore<LaurentPoly>;
extern template class OperatorStore<CycloElem>;
extern template class OperatorStore<Complex>;

/// Canonical text serialisation used by the disk cache.
template <class S>
std::string serialize_operator(const GradedOperator<S>& op);
template <class S>
GradedOperator<S> deserialize_operator(const std::string& data, const std::shared_ptr<const ChainSpace>& space);

}  // namespace qloop

#include "qloop/operator_store.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <thread>

#include "qloop/errors.hpp"

namespace qloop {

namespace {

constexpr const char* kMagic = "QLOOPOP1";

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

void write_scalar(std::ostream& os, const LaurentPoly& v) {
  os << v.terms().size();
  for (const auto& [e, c] : v.terms()) os << ' ' << e << ' ' << c.to_string();
}

void write_scalar(std::ostream& os, const CycloElem& v) {
  os << v.raw().size();
  for (const auto& c : v.raw()) os << ' ' << c.to_string();
}

void write_scalar(std::ostream& os, const Complex& v) {
  char buf[96];
  std::snprintf(buf, sizeof(buf), "%a %a", v.real(), v.imag());
  os << buf;
}

void read_scalar(std::istream& is, LaurentPoly& v, int) {
  std::size_t n = 0;
  is >> n;
  std::vector<LaurentPoly::Term> terms;
  for (std::size_t i = 0; i < n; ++i) {
    int e = 0;
    std::string c;
    is >> e >> c;
    terms.emplace_back(e, BigInt::from_string(c));
  }
  v = LaurentPoly::from_terms(std::move(terms));
}

void read_scalar(std::istream& is, CycloElem& v, int n_param) {
  std::size_t n = 0;
  is >> n;
  CycloElem::Coords coords;
  for (std::size_t i = 0; i < n; ++i) {
    std::string c;
    is >> c;
    coords.push_back(BigInt::from_string(c));
  }
  v = n == 0 ? CycloElem{} : CycloElem(CyclotomicRing::get(n_param), std::move(coords));
}

void read_scalar(std::istream& is, Complex& v, int) {
  std::string re, im;
  is >> re >> im;
  v = Complex(std::strtod(re.c_str(), nullptr), std::strtod(im.c_str(), nullptr));
}

}  // namespace

const char* to_string(RingMode r) {
  switch (r) {
    case RingMode::laurent: return "laurent";
    case RingMode::cyclotomic: return "cyclotomic";
    case RingMode::phi_adic: return "phi-adic";
    case RingMode::floating: return "float";
  }
  return "cyclotomic";
}

std::optional<RingMode> ring_from_string(const std::string& s) {
  for (RingMode r : {RingMode::laurent, RingMode::cyclotomic, RingMode::phi_adic, RingMode::floating}) {
    if (s == to_string(r)) return r;
  }
  return std::nullopt;
}

std::string OpKey::str() const {
  switch (norm) {
    case Norm::none:
      return order == 1 ? op : op + "^" + std::to_string(order);
    case Norm::q_fact:
      return op + "(" + std::to_string(order) + ")q";
    case Norm::omega_fact:
      return op + "(" + std::to_string(order) + ")w";
  }
  return op;
}

template <class S>
std::string serialize_operator(const GradedOperator<S>& op) {
  std::ostringstream os;
  os << "charge " << op.charge() << "\nblocks " << op.blocks().size() << "\n";
  for (const auto& b : op.blocks()) {
    os << b.rows() << ' ' << b.cols() << ' ' << b.nnz() << "\n";
    b.for_each([&](std::uint32_t r, std::uint32_t c, const S& v) {
      os << r << ' ' << c << ' ';
      write_scalar(os, v);
      os << "\n";
    });
  }
  return os.str();
}

template <class S>
GradedOperator<S> deserialize_operator(const std::string& data, const std::shared_ptr<const ChainSpace>& space) {
  std::istringstream is(data);
  std::string word;
  int charge = 0;
  std::size_t nblocks = 0;
  is >> word >> charge;
  if (word != "charge") throw Error(ErrorKind::InternalInconsistency, "malformed operator serialisation");
  is >> word >> nblocks;
  if (word != "blocks" || nblocks != static_cast<std::size_t>(space->n_param())) {
    throw Error(ErrorKind::InternalInconsistency, "malformed operator serialisation");
  }
  std::vector<SparseMatrix<S>> blocks;
  for (std::size_t m = 0; m < nblocks; ++m) {
    std::uint32_t rows = 0, cols = 0;
    std::size_t nnz = 0;
    is >> rows >> cols >> nnz;
    std::vector<typename SparseMatrix<S>::Triplet> entries;
    entries.reserve(nnz);
    for (std::size_t k = 0; k < nnz; ++k) {
      std::uint32_t r = 0, c = 0;
      S v{};
      is >> r >> c;
      read_scalar(is, v, space->n_param());
      entries.emplace_back(r, c, std::move(v));
    }
    if (!is) throw Error(ErrorKind::InternalInconsistency, "truncated operator serialisation");
    blocks.push_back(SparseMatrix<S>::from_triplets(rows, cols, std::move(entries)));
  }
  return GradedOperator<S>(space, charge, std::move(blocks));
}

template <class S>
OperatorStore<S>::OperatorStore(StoreConfig cfg) : cfg_(std::move(cfg)) {
  const SiteRep rep = build_site_rep(cfg_.backend, cfg_.n_param, cfg_.c);
  base_ = base_operator_table(rep, cfg_.length, cfg_.rescale);
  space_ = base_.at("Id").space();
}

template <class S>
int OperatorStore<S>::phi_trunc() const {
  if (cfg_.phi_trunc >= 0) return cfg_.phi_trunc;
  const int n_max = cfg_.max_order >= 0 ? cfg_.max_order : 4 * cfg_.n_param + cfg_.length;
  return default_phi_trunc(n_max, cfg_.n_param);
}

template <class S>
const LaurentOp& OperatorStore<S>::base_laurent(const std::string& op) const {
  auto it = base_.find(op);
  if (it == base_.end()) throw Error(ErrorKind::UnknownId, "unknown operator name: " + op);
  return it->second;
}

template <class S>
typename OperatorStore<S>::Op OperatorStore<S>::specialise(const LaurentOp& op) const {
  const RingContext ctx = ring_context();
  return op.template map<S>([&](const LaurentPoly& v) { return scalar_traits<S>::from_laurent(v, ctx); });
}

template <class S>
template <class V, class F>
std::shared_ptr<const V> OperatorStore<S>::memo(
    std::map<std::string, std::shared_future<std::shared_ptr<const V>>>& table, const std::string& key, F&& make) {
  std::promise<std::shared_ptr<const V>> promise;
  std::shared_future<std::shared_ptr<const V>> fut;
  bool owner = false;
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = table.find(key);
    if (it != table.end()) {
      fut = it->second;
    } else {
      fut = promise.get_future().share();
      table.emplace(key, fut);
      owner = true;
    }
  }
  if (owner) {
    try {
      promise.set_value(make());
    } catch (...) {
      promise.set_exception(std::current_exception());
    }
  }
  return fut.get();
}

template <class S>
std::shared_ptr<const LaurentOp> OperatorStore<S>::symbolic_laurent(const std::string& op, Norm norm, int n) {
  if (n < 0) throw Error(ErrorKind::InvalidParams, "divided power order must be non-negative");
  const std::string key = op + "|" + to_string(norm) + "|" + std::to_string(n);
  return memo(laurent_, key, [&]() -> std::shared_ptr<const LaurentOp> {
    const LaurentOp& theta = base_laurent(op);
    if (n == 0) return std::make_shared<const LaurentOp>(LaurentOp::identity(space_, LaurentPoly(1)));
    if (n == 1) return std::make_shared<const LaurentOp>(theta);
    auto prev = symbolic_laurent(op, norm, n - 1);
    return std::make_shared<const LaurentOp>(next_divided_power(theta, *prev, n, norm));
  });
}

template <class S>
std::shared_ptr<const typename OperatorStore<S>::PhiOp> OperatorStore<S>::symbolic_phi(const std::string& op,
                                                                                        Norm norm, int n) {
  if (n < 0) throw Error(ErrorKind::InvalidParams, "divided power order must be non-negative");
  const std::string key = op + "|" + to_string(norm) + "|" + std::to_string(n);
  const int trunc = phi_trunc();
  return memo(phi_, key, [&]() -> std::shared_ptr<const PhiOp> {
    if (n == 0) {
      const auto& ring = CyclotomicRing::get(cfg_.n_param);
      return std::make_shared<const PhiOp>(PhiOp::identity(space_, PhiAdicElem::embed(ring, trunc, LaurentPoly(1))));
    }
    if (n == 1) return std::make_shared<const PhiOp>(embed_phi_adic(base_laurent(op), trunc));
    auto theta = symbolic_phi(op, norm, 1);
    auto prev = symbolic_phi(op, norm, n - 1);
    return std::make_shared<const PhiOp>(next_divided_power(*theta, *prev, n, norm, trunc));
  });
}

template <class S>
GradedOperator<CycloElem> OperatorStore<S>::specialised_via(Symbolic which, const std::string& op, Norm norm, int n) {
  if (which == Symbolic::phi_adic) return phi_adic_term0(*symbolic_phi(op, norm, n));
  return reduce_cyclotomic(*symbolic_laurent(op, norm, n));
}

template <class S>
std::string OperatorStore<S>::cache_key(const OpKey& key) const {
  std::ostringstream os;
  os << "backend=" << to_string(cfg_.backend) << ";N=" << cfg_.n_param << ";L=" << cfg_.length
     << ";ring=" << to_string(cfg_.ring) << ";op=" << key.op << ";norm=" << to_string(key.norm)
     << ";n=" << key.order << ";alpha=" << cfg_.rescale.alpha.to_string() << ";beta=" << cfg_.rescale.beta.to_string()
     << ";c=" << cfg_.c.to_string();
  if (cfg_.ring == RingMode::phi_adic) os << ";K=" << phi_trunc();
  return os.str();
}

template <class S>
typename OperatorStore<S>::OpPtr OperatorStore<S>::get(const OpKey& key) {
  return memo(ops_, key.str(), [&]() { return compute(key); });
}

template <class S>
typename OperatorStore<S>::OpPtr OperatorStore<S>::compute(const OpKey& key) {
  if (key.order < 0) throw Error(ErrorKind::InvalidParams, "operator order must be non-negative");
  if (key.order == 0) {
    return std::make_shared<const Op>(Op::identity(space_, scalar(LaurentPoly(1))));
  }
  if (key.norm == Norm::none) {
    if (key.order == 1) {
      ++computed_;
      return std::make_shared<const Op>(specialise(base_laurent(key.op)));
    }
    // plain power, multiplied out in S; independent of the divided-power path
    auto theta = get(base(key.op));
    auto prev = get(OpKey{key.op, Norm::none, key.order - 1});
    ++computed_;
    return std::make_shared<const Op>(*theta * *prev);
  }

  std::filesystem::path file;
  const std::string ckey = cache_key(key);
  if (!cfg_.cache_dir.empty()) {
    char name[32];
    std::snprintf(name, sizeof(name), "%016llx.qop", static_cast<unsigned long long>(fnv1a(ckey)));
    file = std::filesystem::path(cfg_.cache_dir) / name;
    std::ifstream in(file, std::ios::binary);
    if (in) {
      std::string magic, stored_key;
      std::getline(in, magic);
      std::getline(in, stored_key);
      if (magic == kMagic && stored_key == ckey) {
        std::ostringstream rest;
        rest << in.rdbuf();
        ++disk_hits_;
        return std::make_shared<const Op>(deserialize_operator<S>(rest.str(), space_));
      }
    }
  }

  ++computed_;
  std::shared_ptr<const Op> result;
  if constexpr (std::is_same_v<S, CycloElem>) {
    if (cfg_.ring == RingMode::phi_adic) {
      result = std::make_shared<const Op>(phi_adic_term0(*symbolic_phi(key.op, key.norm, key.order)));
    }
  }
  if (!result) result = std::make_shared<const Op>(specialise(*symbolic_laurent(key.op, key.norm, key.order)));

  if (!file.empty()) {
    std::error_code ec;
    std::filesystem::create_directories(file.parent_path(), ec);
    const auto tmp = file.string() + ".tmp" + std::to_string(std::hash<std::thread::id>{}(std::this_thread::get_id()));
    {
      std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
      out << kMagic << "\n" << ckey << "\n" << serialize_operator(*result);
    }
    std::filesystem::rename(tmp, file, ec);
    if (ec) {
      std::filesystem::remove(tmp, ec);
    } else {
      ++disk_writes_;
    }
  }
  return result;
}

template class OperatorStore<LaurentPoly>;
template class OperatorStore<CycloElem>;
template class OperatorStore<Complex>;

template std::string serialize_operator(const GradedOperator<LaurentPoly>&);
template std::string serialize_operator(const GradedOperator<CycloElem>&);
template std::string serialize_operator(const GradedOperator<Complex>&);
template GradedOperator<LaurentPoly> deserialize_operator(const std::string&, const std::shared_ptr<const ChainSpace>&);
template GradedOperator<CycloElem> deserialize_operator(const std::string&, const std::shared_ptr<const ChainSpace>&);
template GradedOperator<Complex> deserialize_operator(const std::string&, const std::shared_ptr<const ChainSpace>&);

}  // namespace qloop

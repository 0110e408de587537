#include "qloop/identity.hpp"

#include <algorithm>
#include <chrono>
#include <map>

#include "qloop/errors.hpp"

namespace qloop {

namespace {

template <class S>
struct Classifier {
  const OperatorStore<S>& store;
  bool root_only;

  // Entry counted as nonzero for classification purposes.
  [[nodiscard]] bool significant(const S& v) const {
    if constexpr (std::is_same_v<S, Complex>) {
      return std::abs(v) >= kFloatTolerance;
    } else if constexpr (std::is_same_v<S, LaurentPoly>) {
      if (root_only) return !CycloElem::reduce(CyclotomicRing::get(store.config().n_param), v).is_zero();
      return !v.is_zero();
    } else {
      return !scalar_traits<S>::is_zero(v);
    }
  }

  [[nodiscard]] std::optional<EntryWitness> first_significant(const GradedOperator<S>& op, int term) const {
    if (op.is_zero()) return std::nullopt;
    std::optional<EntryWitness> best;
    for (const auto& e : op.entries()) {
      if (!significant(e.value)) continue;
      std::string value = scalar_traits<S>::to_string(e.value);
      if constexpr (std::is_same_v<S, LaurentPoly>) {
        if (root_only) value = CycloElem::reduce(CyclotomicRing::get(store.config().n_param), e.value).to_string();
      }
      return EntryWitness{e.row, e.col, std::move(value), term};
    }
    return best;
  }
};

ParamRecord with_store_params(ParamRecord params, const StoreConfig& cfg) {
  params.emplace("backend", std::string(to_string(cfg.backend)));
  params.emplace("N", static_cast<long long>(cfg.n_param));
  params.emplace("L", static_cast<long long>(cfg.length));
  params.emplace("ring", std::string(to_string(cfg.ring)));
  return params;
}

std::string join_keys(const std::vector<OpKey>& factors, std::size_t n) {
  std::string out;
  for (std::size_t i = 0; i < n; ++i) {
    if (i > 0) out += ' ';
    out += factors[i].str();
  }
  return out;
}

}  // namespace

template <class S>
IdentityCheck evaluate(const IdentitySpec& spec, OperatorStore<S>& store) {
  using Op = GradedOperator<S>;
  using OpPtr = std::shared_ptr<const Op>;
  const auto t0 = std::chrono::steady_clock::now();

  IdentityCheck out;
  out.id = spec.id;
  out.anchor = spec.anchor;
  out.params = with_store_params(spec.params, store.config());
  out.note = spec.note;
  const Classifier<S> cls{store, spec.root_only};

  try {
    std::map<std::string, OpPtr> prefix;
    auto product = [&](const std::vector<OpKey>& factors) -> OpPtr {
      if (factors.empty()) return store.get(base("Id"));
      OpPtr acc = store.get(factors[0]);
      for (std::size_t i = 1; i < factors.size(); ++i) {
        const std::string key = join_keys(factors, i + 1);
        auto it = prefix.find(key);
        if (it != prefix.end()) {
          acc = it->second;
          continue;
        }
        if (!acc->is_zero()) acc = std::make_shared<const Op>(*acc * *store.get(factors[i]));
        prefix.emplace(key, acc);
      }
      return acc;
    };

    Op residual = Op::zero(store.space());
    bool any_term = false;
    for (std::size_t t = 0; t < spec.terms.size(); ++t) {
      const Term& term = spec.terms[t];
      OpPtr value = product(term.factors);
      const auto nz = cls.first_significant(*value, static_cast<int>(t));
      out.term_nonzero.push_back(nz.has_value());
      if (nz) {
        any_term = true;
        if (!out.nontrivial) out.nontrivial = nz;
      }
      residual = Op::axpy(residual, store.scalar(term.coeff), *value);
    }

    if (!spec.support.empty()) {
      any_term = false;
      out.nontrivial.reset();
      for (std::size_t t = 0; t < spec.support.size(); ++t) {
        OpPtr value = product(spec.support[t].factors);
        if (auto nz = cls.first_significant(*value, static_cast<int>(t))) {
          any_term = true;
          if (!out.nontrivial) out.nontrivial = nz;
        }
      }
    }

    out.witness = cls.first_significant(residual, -1);
    if (out.witness) {
      out.status = Status::Nonzero;
    } else if (!any_term) {
      out.status = Status::VacuousZero;
    } else if constexpr (std::is_same_v<S, Complex>) {
      out.status = Status::ApproxZero;
    } else {
      out.status = Status::ExactZero;
    }
    if (spec.root_only && store.config().ring == RingMode::laurent) {
      if (!out.note.empty()) out.note += "; ";
      out.note += "residual reduced mod Phi_2N";
    }
  } catch (const Error& e) {
    out.status = Status::Error;
    out.error = to_string(e.kind());
    out.note = e.what();
    out.witness.reset();
  }
  out.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return out;
}

template IdentityCheck evaluate(const IdentitySpec&, OperatorStore<LaurentPoly>&);
template IdentityCheck evaluate(const IdentitySpec&, OperatorStore<CycloElem>&);
template IdentityCheck evaluate(const IdentitySpec&, OperatorStore<Complex>&);

template <class S>
GradedOperator<S> residual(const IdentitySpec& spec, OperatorStore<S>& store) {
  using Op = GradedOperator<S>;
  Op out = Op::zero(store.space());
  for (const Term& term : spec.terms) {
    std::shared_ptr<const Op> value = store.get(base("Id"));
    if (!term.factors.empty()) {
      Op acc = *store.get(term.factors[0]);
      for (std::size_t i = 1; i < term.factors.size() && !acc.is_zero(); ++i) acc = acc * *store.get(term.factors[i]);
      value = std::make_shared<const Op>(std::move(acc));
    }
    out = Op::axpy(out, store.scalar(term.coeff), *value);
  }
  return out;
}

template GradedOperator<LaurentPoly> residual(const IdentitySpec&, OperatorStore<LaurentPoly>&);
template GradedOperator<CycloElem> residual(const IdentitySpec&, OperatorStore<CycloElem>&);
template GradedOperator<Complex> residual(const IdentitySpec&, OperatorStore<Complex>&);

std::vector<Word> expand_nested_commutator(int a, int b, int depth) {
  std::map<std::vector<int>, long long> cur{{{a}, 1}};
  for (int d = 0; d < depth; ++d) {
    std::map<std::vector<int>, long long> next;
    for (const auto& [w, c] : cur) {
      std::vector<int> right = w;
      right.push_back(b);
      next[right] += c;
      std::vector<int> left{b};
      left.insert(left.end(), w.begin(), w.end());
      next[left] -= c;
    }
    cur.clear();
    for (auto& [w, c] : next) {
      if (c != 0) cur.emplace(w, c);
    }
  }
  std::vector<Word> out;
  for (const auto& [w, c] : cur) out.push_back(Word{c, w});
  return out;
}

std::vector<Term> substitute_words(const std::vector<Word>& words, const std::vector<std::vector<OpKey>>& letters) {
  std::vector<Term> out;
  for (const auto& w : words) {
    Term t{LaurentPoly(BigInt(w.coeff)), {}};
    for (int l : w.letters) {
      const auto& f = letters.at(static_cast<std::size_t>(l));
      t.factors.insert(t.factors.end(), f.begin(), f.end());
    }
    out.push_back(std::move(t));
  }
  return out;
}

}  // namespace qloop

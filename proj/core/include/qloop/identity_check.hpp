#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace qloop {

enum class Status {
  ExactZero,    // residual is exactly zero and at least one term is not
  VacuousZero,  // every individual term is zero; carries no evidence
  ApproxZero,   // float ring only: |residual| below threshold
  Nonzero,      // residual has a nonzero entry (see witness)
  Error,        // evaluation raised; see error
};

[[nodiscard]] const char* to_string(Status s);
[[nodiscard]] std::optional<Status> status_from_string(const std::string& s);

using ParamValue = std::variant<long long, std::string>;
using ParamRecord = std::map<std::string, ParamValue>;

/// Sort-friendly form: integers are zero-padded.
[[nodiscard]] std::string to_string(const ParamRecord& params);
/// Human-readable form: "key=value" separated by spaces.
[[nodiscard]] std::string display(const ParamRecord& params);

/// A matrix entry used either as the location of a nonzero residual or as
/// proof that some term of the identity is not identically zero.
struct EntryWitness {
  std::uint64_t row = 0;
  std::uint64_t col = 0;
  std::string value;
  int term = -1;

  friend bool operator==(const EntryWitness&, const EntryWitness&) = default;
};

/// One verified equation instance.
struct IdentityCheck {
  std::string id;
  std::string anchor;  // human-readable form of the relation being checked
  ParamRecord params;
  Status status = Status::Error;
  std::optional<EntryWitness> witness;     // nonzero residual entry
  std::optional<EntryWitness> nontrivial;  // nonzero entry of some term
  std::vector<bool> term_nonzero;
  std::string error;  // ErrorKind name when status == Error
  std::string note;
  double millis = 0.0;

  [[nodiscard]] bool passed() const {
    return status == Status::ExactZero || status == Status::VacuousZero || status == Status::ApproxZero;
  }
  /// Deterministic ordering key: id, then parameters.
  [[nodiscard]] std::string sort_key() const { return id + "|" + to_string(params); }
};

}  // namespace qloop

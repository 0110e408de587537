#include "qloop/identity_check.hpp"

#include <array>
#include <cstdio>
#include <utility>

namespace qloop {

namespace {

constexpr std::array<std::pair<Status, const char*>, 5> kNames{{
    {Status::ExactZero, "ExactZero"},
    {Status::VacuousZero, "VacuousZero"},
    {Status::ApproxZero, "ApproxZero"},
    {Status::Nonzero, "Nonzero"},
    {Status::Error, "Error"},
}};

}  // namespace

const char* to_string(Status s) {
  for (const auto& [k, name] : kNames) {
    if (k == s) return name;
  }
  return "Error";
}

std::optional<Status> status_from_string(const std::string& s) {
  for (const auto& [k, name] : kNames) {
    if (s == name) return k;
  }
  return std::nullopt;
}

std::string to_string(const ParamRecord& params) {
  std::string out;
  for (const auto& [key, value] : params) {
    if (!out.empty()) out += ",";
    out += key + "=";
    if (const auto* i = std::get_if<long long>(&value)) {
      // zero-pad so lexicographic order matches numeric order
      char buf[32];
      std::snprintf(buf, sizeof(buf), "%c%08lld", *i < 0 ? '-' : '+', *i < 0 ? -*i : *i);
      out += buf;
    } else {
      out += std::get<std::string>(value);
    }
  }
  return out;
}

std::string display(const ParamRecord& params) {
  std::string out;
  for (const auto& [key, value] : params) {
    if (!out.empty()) out += " ";
    out += key + "=";
    if (const auto* i = std::get_if<long long>(&value)) {
      out += std::to_string(*i);
    } else {
      out += std::get<std::string>(value);
    }
  }
  return out;
}

}  // namespace qloop

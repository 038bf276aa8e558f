#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

namespace frobkit::cli {

/// FNV-1a, 64 bit.
std::uint64_t fnv1a(std::string_view data, std::uint64_t seed = 0xcbf29ce484222325ULL);

std::string hex64(std::uint64_t v);

/// The outcome of one command. Keys keep insertion order so that text and
/// JSON output are byte-identical across runs.
class Report {
 public:
  Report(std::string command, std::string inputs_digest);

  /// A named result. `positive` false makes the command exit with status 1.
  void verdict(const std::string& name, nlohmann::ordered_json value, bool positive = true);
  void witness(const std::string& name, nlohmann::ordered_json value);
  void timing_ms(double ms);

  bool all_positive() const { return all_positive_; }
  int exit_code() const { return all_positive_ ? 0 : 1; }

  const nlohmann::ordered_json& document() const { return doc_; }
  std::string render(bool as_json) const;

 private:
  nlohmann::ordered_json doc_;
  bool all_positive_ = true;
};

}  // namespace frobkit::cli

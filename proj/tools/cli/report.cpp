#include "cli/report.hpp"

#include <cstdio>

namespace frobkit::cli {
namespace {

std::string scalar_text(const nlohmann::ordered_json& v) {
  return v.is_string() ? v.get<std::string>() : v.dump();
}

void render_section(std::string& out, const char* title, const nlohmann::ordered_json& section) {
  if (section.empty()) return;
  out += title;
  out += ":\n";
  for (const auto& [key, value] : section.items()) out += "  " + key + ": " + scalar_text(value) + "\n";
}

}  // namespace

std::uint64_t fnv1a(std::string_view data, std::uint64_t seed) {
  std::uint64_t h = seed;
  for (const unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

Report::Report(std::string command, std::string inputs_digest) {
  doc_["command"] = std::move(command);
  doc_["inputs_digest"] = std::move(inputs_digest);
  doc_["verdicts"] = nlohmann::ordered_json::object();
  doc_["witness"] = nlohmann::ordered_json::object();
}

void Report::verdict(const std::string& name, nlohmann::ordered_json value, bool positive) {
  doc_["verdicts"][name] = std::move(value);
  all_positive_ = all_positive_ && positive;
}

void Report::witness(const std::string& name, nlohmann::ordered_json value) {
  doc_["witness"][name] = std::move(value);
}

void Report::timing_ms(double ms) { doc_["timing_ms"] = ms; }

std::string Report::render(bool as_json) const {
  if (as_json) return doc_.dump(2) + "\n";
  std::string out = "command: " + doc_["command"].get<std::string>() + "\n";
  out += "inputs: " + doc_["inputs_digest"].get<std::string>() + "\n";
  render_section(out, "verdicts", doc_["verdicts"]);
  render_section(out, "witness", doc_["witness"]);
  if (doc_.contains("timing_ms")) out += "timing_ms: " + doc_["timing_ms"].dump() + "\n";
  return out;
}

}  // namespace frobkit::cli

#pragma once

// JSON input files: ring specs, code specs and form matrices.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "frobkit/codes.hpp"
#include "frobkit/finring.hpp"
#include "frobkit/skewpoly.hpp"

namespace frobkit::cli {

/// Unreadable file, malformed JSON, or a document that does not match the schema.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SourceFile {
  std::string path;
  std::string text;
};

SourceFile read_file(const std::string& path);

/// Syntax errors are reported as "path:line:column: message".
nlohmann::json parse_json(const SourceFile& file);

/// Builds and validates the ring described by a spec of any kind. Schema
/// problems throw InputError; mathematical ones throw the library's errors.
FiniteRing ring_from_spec(const nlohmann::json& spec, const std::string& where);

/// A skew_quotient spec before the quotient is formed, so that a one-sided
/// modulus can still be reported.
struct SkewSpec {
  FiniteRing base;
  RingAutomorphism sigma;
  SkewPolynomial f;
};

SkewSpec skew_from_spec(const nlohmann::json& spec, const std::string& where);

struct CodeSpec {
  std::size_t length = 0;
  std::optional<CodeSide> side;
  std::vector<ModElement> generators;
};

CodeSpec code_from_spec(const nlohmann::json& spec, const FiniteRing& alphabet, const std::string& where);

/// {"matrix": [[a_11, ..., a_1m], ...]} with ring elements as entries.
std::vector<std::vector<ModElement>> form_from_spec(const nlohmann::json& spec, const FiniteRing& ring,
                                                    const std::string& where);

/// A ring as a "table" spec that ring_from_spec reads back unchanged.
nlohmann::ordered_json ring_to_spec(const FiniteRing& ring);

nlohmann::ordered_json element_json(const ModElement& x);
/// A word of A^m as a list of m elements.
nlohmann::ordered_json word_json(const FiniteRing& ring, const ModElement& word, std::size_t length);

}  // namespace frobkit::cli

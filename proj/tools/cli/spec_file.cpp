#include "cli/spec_file.hpp"

#include <fstream>
#include <sstream>

namespace frobkit::cli {
namespace {

using nlohmann::json;

[[noreturn]] void schema_error(const std::string& where, const std::string& message) {
  throw InputError(where + ": " + message);
}

const json& field(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) schema_error(where, "expected an object");
  const auto it = obj.find(key);
  if (it == obj.end()) schema_error(where, std::string("missing \"") + key + "\"");
  return *it;
}

std::string child(const std::string& where, const std::string& key) { return where + "/" + key; }
std::string child(const std::string& where, std::size_t i) { return where + "/" + std::to_string(i); }

Residue integer(const json& j, const std::string& where) {
  if (!j.is_number_integer()) schema_error(where, "expected an integer");
  return j.get<Residue>();
}

std::size_t count(const json& j, const std::string& where) {
  const Residue v = integer(j, where);
  if (v < 0) schema_error(where, "expected a non-negative integer");
  return static_cast<std::size_t>(v);
}

const json& array(const json& j, const std::string& where) {
  if (!j.is_array()) schema_error(where, "expected an array");
  return j;
}

const json& array_of_size(const json& j, std::size_t n, const std::string& where) {
  array(j, where);
  if (j.size() != n) schema_error(where, "expected " + std::to_string(n) + " entries, found " + std::to_string(j.size()));
  return j;
}

// Elements are coordinate arrays; rank-one rings also accept a bare integer.
ModElement element(const json& j, const ModuleShape& shape, const std::string& where) {
  if (j.is_number_integer() && shape.rank() == 1) return shape.reduce({integer(j, where)});
  array_of_size(j, shape.rank(), where);
  std::vector<Residue> coords;
  for (std::size_t i = 0; i < j.size(); ++i) coords.push_back(integer(j[i], child(where, i)));
  return shape.reduce(std::move(coords));
}

std::vector<ModElement> elements(const json& j, const ModuleShape& shape, std::size_t n, const std::string& where) {
  array_of_size(j, n, where);
  std::vector<ModElement> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(element(j[i], shape, child(where, i)));
  return out;
}

std::vector<std::vector<std::size_t>> cayley_table(const json& j, const std::string& where) {
  array(j, where);
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t r = 0; r < j.size(); ++r) {
    const auto& row = array_of_size(j[r], j.size(), child(where, r));
    std::vector<std::size_t> entries;
    for (std::size_t c = 0; c < row.size(); ++c) entries.push_back(count(row[c], child(child(where, r), c)));
    out.push_back(std::move(entries));
  }
  return out;
}

std::string kind_of(const json& spec, const std::string& where) {
  const auto& k = field(spec, "kind", where);
  if (!k.is_string()) schema_error(child(where, "kind"), "expected a string");
  return k.get<std::string>();
}

}  // namespace

SourceFile read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw InputError(path + ": read error");
  return {path, buf.str()};
}

json parse_json(const SourceFile& file) {
  try {
    return json::parse(file.text);
  } catch (const json::parse_error& e) {
    // e.byte is 1-based and points at the offending character.
    const std::size_t stop = std::min<std::size_t>(e.byte > 0 ? e.byte - 1 : 0, file.text.size());
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i < stop; ++i) {
      if (file.text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    std::string message = e.what();
    if (const auto pos = message.find("syntax error"); pos != std::string::npos) message = message.substr(pos);
    throw InputError(file.path + ":" + std::to_string(line) + ":" + std::to_string(column) + ": " + message);
  }
}

FiniteRing ring_from_spec(const json& spec, const std::string& where) {
  const std::string kind = kind_of(spec, where);
  if (kind == "zn") return ring_zn(integer(field(spec, "n", where), child(where, "n")));
  if (kind == "table") {
    const Residue n = integer(field(spec, "n", where), child(where, "n"));
    const auto& orders_j = array(field(spec, "orders", where), child(where, "orders"));
    std::vector<Residue> orders;
    for (std::size_t i = 0; i < orders_j.size(); ++i) orders.push_back(integer(orders_j[i], child(child(where, "orders"), i)));
    ModuleShape shape(n, orders);
    const std::size_t k = orders.size();
    const auto& mul = array_of_size(field(spec, "mul", where), k, child(where, "mul"));
    FiniteRing::MulTable table;
    for (std::size_t i = 0; i < k; ++i)
      table.push_back(elements(mul[i], shape, k, child(child(where, "mul"), i)));
    const auto one = element(field(spec, "one", where), shape, child(where, "one"));
    return ring_from_table(std::move(shape), std::move(table), one);
  }
  if (kind == "product") {
    const auto& factors = array(field(spec, "factors", where), child(where, "factors"));
    if (factors.empty()) schema_error(child(where, "factors"), "needs at least one factor");
    FiniteRing out = ring_from_spec(factors[0], child(child(where, "factors"), 0));
    for (std::size_t i = 1; i < factors.size(); ++i)
      out = ring_product(out, ring_from_spec(factors[i], child(child(where, "factors"), i)));
    return out;
  }
  if (kind == "matrix") {
    const auto base = ring_from_spec(field(spec, "base", where), child(where, "base"));
    const std::size_t size = count(field(spec, "size", where), child(where, "size"));
    if (size == 0) schema_error(child(where, "size"), "matrix size must be positive");
    return ring_matrix(base, size);
  }
  if (kind == "group_algebra") {
    const Residue n = integer(field(spec, "n", where), child(where, "n"));
    return ring_group_algebra(n, cayley_table(field(spec, "cayley", where), child(where, "cayley")));
  }
  if (kind == "skew_quotient") {
    auto s = skew_from_spec(spec, where);
    return as_finite_ring(SkewQuotient(std::move(s.sigma), std::move(s.f)));
  }
  schema_error(child(where, "kind"), "unknown ring kind \"" + kind + "\"");
}

SkewSpec skew_from_spec(const json& spec, const std::string& where) {
  if (kind_of(spec, where) != "skew_quotient") schema_error(child(where, "kind"), "expected \"skew_quotient\"");
  auto base = ring_from_spec(field(spec, "base", where), child(where, "base"));
  const auto& shape = base.shape();
  RingAutomorphism sigma = RingAutomorphism::identity(base);
  if (spec.contains("sigma_images"))
    sigma = RingAutomorphism(base, elements(spec["sigma_images"], shape, base.rank(), child(where, "sigma_images")));
  const auto& f_j = array(field(spec, "f", where), child(where, "f"));
  SkewPolynomial f;
  for (std::size_t i = 0; i < f_j.size(); ++i) f.push_back(element(f_j[i], shape, child(child(where, "f"), i)));
  return {std::move(base), std::move(sigma), std::move(f)};
}

CodeSpec code_from_spec(const json& spec, const FiniteRing& alphabet, const std::string& where) {
  CodeSpec out;
  out.length = count(field(spec, "length", where), child(where, "length"));
  if (out.length == 0) schema_error(child(where, "length"), "code length must be positive");
  if (spec.contains("side")) {
    const auto& s = spec["side"];
    const std::string name = s.is_string() ? s.get<std::string>() : "";
    if (name == "left") out.side = CodeSide::left;
    else if (name == "right") out.side = CodeSide::right;
    else if (name == "additive") out.side = CodeSide::additive;
    else schema_error(child(where, "side"), "expected \"left\", \"right\" or \"additive\"");
  }
  const auto& gens = array(field(spec, "generators", where), child(where, "generators"));
  for (std::size_t g = 0; g < gens.size(); ++g)
    out.generators.push_back(
        make_word(alphabet, elements(gens[g], alphabet.shape(), out.length, child(child(where, "generators"), g))));
  return out;
}

std::vector<std::vector<ModElement>> form_from_spec(const json& spec, const FiniteRing& ring,
                                                    const std::string& where) {
  const auto& rows = array(field(spec, "matrix", where), child(where, "matrix"));
  std::vector<std::vector<ModElement>> out;
  for (std::size_t r = 0; r < rows.size(); ++r)
    out.push_back(elements(rows[r], ring.shape(), rows.size(), child(child(where, "matrix"), r)));
  return out;
}

nlohmann::ordered_json element_json(const ModElement& x) { return x.coords(); }

nlohmann::ordered_json word_json(const FiniteRing& ring, const ModElement& word, std::size_t length) {
  auto out = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < length; ++i) out.push_back(element_json(word_component(ring, word, i)));
  return out;
}

nlohmann::ordered_json ring_to_spec(const FiniteRing& ring) {
  nlohmann::ordered_json out;
  out["kind"] = "table";
  out["n"] = ring.characteristic();
  out["orders"] = ring.shape().orders();
  auto mul = nlohmann::ordered_json::array();
  for (const auto& row : ring.mul_table()) {
    auto r = nlohmann::ordered_json::array();
    for (const auto& x : row) r.push_back(element_json(x));
    mul.push_back(std::move(r));
  }
  out["mul"] = std::move(mul);
  out["one"] = element_json(ring.one());
  return out;
}

}  // namespace frobkit::cli

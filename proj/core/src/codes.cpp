#include "frobkit/codes.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include "frobkit/errors.hpp"

namespace frobkit {
namespace {

using BigInt = boost::multiprecision::cpp_int;

std::vector<Endomorphism> word_actions(const FiniteRing& ring, CodeSide side) {
  std::vector<Endomorphism> ops;
  if (side == CodeSide::additive) return ops;
  const Side s = side == CodeSide::left ? Side::left : Side::right;
  for (std::size_t i = 0; i < ring.rank(); ++i) {
    ModElement e = ring.basis(i);
    ops.emplace_back([&ring, e, s](const ModElement& w) { return scale_word(ring, e, w, s); });
  }
  return ops;
}

bool is_closed(const ModuleShape& shape, const ElementSet& set, const std::vector<Endomorphism>& ops) {
  if (!set.contains(shape.zero())) return false;
  for (const auto& x : set) {
    if (!shape.contains(x)) return false;
    for (const auto& y : set)
      if (!set.contains(shape.add(x, y))) return false;
    for (const auto& op : ops)
      if (!set.contains(op(x))) return false;
  }
  return true;
}

BigInt binomial(std::size_t n, std::size_t k) {
  BigInt r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

ModElement x_in_quotient(const SkewQuotient& q) {
  const auto& base = q.base();
  return q.flatten(right_remainder(q.sigma(), {base.zero(), base.one()}, q.modulus()));
}

}  // namespace

const char* to_string(CodeSide side) {
  switch (side) {
    case CodeSide::left:
      return "left";
    case CodeSide::right:
      return "right";
    case CodeSide::additive:
      return "additive";
  }
  return "?";
}

LinearCode::LinearCode(FiniteRing alphabet, std::size_t length, std::vector<ModElement> generators, CodeSide side)
    : alphabet_(std::move(alphabet)), length_(length), side_(side), generators_(std::move(generators)) {
  const auto shape = ambient_shape();
  check_enumeration_cap(shape.cardinality());
  for (const auto& g : generators_) shape.require(g);
  const auto ops = word_actions(alphabet_, side_);
  codewords_ = invariant_closure(ElementSet(generators_.begin(), generators_.end()), shape, ops);
}

LinearCode::LinearCode(FiniteRing alphabet, std::size_t length, CodeSide side, ElementSet codewords)
    : alphabet_(std::move(alphabet)), length_(length), side_(side), codewords_(std::move(codewords)) {}

LinearCode generate(const FiniteRing& alphabet, std::size_t length, const std::vector<ModElement>& generators,
                    CodeSide side) {
  return LinearCode(alphabet, length, generators, side);
}

LinearCode code_from_codewords(FiniteRing alphabet, std::size_t length, ElementSet codewords, CodeSide side) {
  const auto shape = alphabet.shape().repeated(length);
  const auto ops = word_actions(alphabet, side);
  if (!is_closed(shape, codewords, ops))
    throw InvalidArgument(std::string("codeword set is not a ") + to_string(side) + " code");
  std::vector<ModElement> gens;
  ElementSet covered{shape.zero()};
  for (const auto& w : codewords) {
    if (covered.contains(w)) continue;
    gens.push_back(w);
    covered = invariant_closure(ElementSet(gens.begin(), gens.end()), shape, ops);
  }
  LinearCode code(std::move(alphabet), length, side, std::move(codewords));
  code.generators_ = std::move(gens);
  return code;
}

LinearCode as_side(const LinearCode& code, CodeSide side) {
  return code_from_codewords(code.alphabet(), code.length(), code.codewords(), side);
}

bool same_code(const LinearCode& a, const LinearCode& b) {
  if (a.side() != b.side())
    throw SideMismatch(std::string("cannot compare a ") + to_string(a.side()) + " code with a " + to_string(b.side()) +
                       " code; coerce one with as_side first");
  return a.alphabet() == b.alphabet() && a.length() == b.length() && a.codewords() == b.codewords();
}

ModElement scale_word(const FiniteRing& ring, const ModElement& scalar, const ModElement& word, Side side) {
  const std::size_t m = word.size() / std::max<std::size_t>(ring.rank(), 1);
  std::vector<ModElement> comps;
  for (std::size_t i = 0; i < m; ++i) {
    const auto c = word_component(ring, word, i);
    comps.push_back(side == Side::right ? ring.mul(c, scalar) : ring.mul(scalar, c));
  }
  return make_word(ring, comps);
}

std::size_t hamming_weight(const FiniteRing& ring, const ModElement& word) {
  if (ring.rank() == 0) return 0;
  std::size_t w = 0;
  for (std::size_t i = 0; i < word.size() / ring.rank(); ++i) w += !word_component(ring, word, i).is_zero();
  return w;
}

std::uint64_t WeightEnumerator::total() const {
  std::uint64_t t = 0;
  for (auto c : counts) t += c;
  return t;
}

std::string WeightEnumerator::to_string() const {
  auto power = [](const char* var, std::size_t e) -> std::string {
    if (e == 0) return "";
    if (e == 1) return var;
    return std::string(var) + "^" + std::to_string(e);
  };
  std::string out;
  for (std::size_t w = 0; w < counts.size(); ++w) {
    if (counts[w] == 0) continue;
    const std::string mono = power("X", length - w) + power("Y", w);
    std::string term = counts[w] == 1 && !mono.empty() ? mono : std::to_string(counts[w]) + mono;
    if (!out.empty()) out += " + ";
    out += term;
  }
  return out.empty() ? "0" : out;
}

WeightEnumerator weight_enumerator(const LinearCode& code) {
  WeightEnumerator w{code.length(), std::vector<std::uint64_t>(code.length() + 1, 0)};
  for (const auto& c : code.codewords()) ++w.counts[hamming_weight(code.alphabet(), c)];
  return w;
}

LinearCode dual(const LinearCode& code, const AmbientForm& form, Side side) {
  if (form.ring() != code.alphabet() || form.length() != code.length())
    throw InvalidArgument("form and code live on different ambient spaces");
  if (side == Side::two_sided) throw InvalidArgument("dual side must be left or right");
  if ((code.side() == CodeSide::left && side == Side::left) || (code.side() == CodeSide::right && side == Side::right))
    throw SideMismatch(std::string("a ") + to_string(code.side()) + " code has no " + to_string(side) +
                       " dual; use the opposite side or coerce with as_side");
  if (!is_nondegenerate(form)) throw DegenerateForm("form is degenerate; duality does not apply");
  auto words = orthogonal(form, code.codewords(), side);
  return code_from_codewords(code.alphabet(), code.length(), std::move(words),
                             side == Side::left ? CodeSide::left : CodeSide::right);
}

LinearCode euclidean_dual(const LinearCode& code) {
  return dual(code, AmbientForm::identity(code.alphabet(), code.length()),
              code.side() == CodeSide::right ? Side::left : Side::right);
}

bool is_monomial(const FiniteRing& ring, const std::vector<std::vector<ModElement>>& matrix) {
  const std::size_t m = matrix.size();
  std::vector<std::size_t> column_hits(m, 0);
  for (const auto& row : matrix) {
    if (row.size() != m) return false;
    std::size_t hits = 0;
    for (std::size_t j = 0; j < m; ++j) {
      if (row[j].is_zero()) continue;
      if (!is_unit(ring, row[j])) return false;
      ++hits;
      ++column_hits[j];
    }
    if (hits != 1) return false;
  }
  for (auto h : column_hits)
    if (h != 1) return false;
  return true;
}

WeightEnumerator macwilliams_transform(const WeightEnumerator& w, std::uint64_t alphabet_size,
                                       std::uint64_t code_size) {
  const std::size_t m = w.length;
  if (w.counts.size() != m + 1) throw InvalidArgument("weight enumerator has the wrong number of counts");
  if (code_size == 0 || alphabet_size == 0) throw InvalidArgument("alphabet and code sizes must be positive");

  // Coefficient of X^{m-d} Y^d in sum_w a_w (X + (q-1)Y)^{m-w} (X - Y)^w.
  std::vector<BigInt> coeff(m + 1, 0);
  const BigInt q_minus_one = BigInt(alphabet_size) - 1;
  for (std::size_t wt = 0; wt <= m; ++wt) {
    if (w.counts[wt] == 0) continue;
    for (std::size_t s = 0; s <= m - wt; ++s) {
      const BigInt left = binomial(m - wt, s) * boost::multiprecision::pow(q_minus_one, static_cast<unsigned>(s));
      for (std::size_t t = 0; t <= wt; ++t) {
        BigInt term = BigInt(w.counts[wt]) * left * binomial(wt, t);
        if (t % 2) term = -term;
        coeff[s + t] += term;
      }
    }
  }

  WeightEnumerator out{m, std::vector<std::uint64_t>(m + 1, 0)};
  for (std::size_t d = 0; d <= m; ++d) {
    if (coeff[d] < 0 || coeff[d] % code_size != 0)
      throw NotApplicable("transformed coefficient of Y^" + std::to_string(d) + " is not a non-negative multiple of " +
                          std::to_string(code_size));
    out.counts[d] = static_cast<std::uint64_t>(coeff[d] / code_size);
  }
  return out;
}

MacWilliamsResult macwilliams_holds(const LinearCode& code, const AmbientForm& form) {
  const Side side = code.side() == CodeSide::right ? Side::left : Side::right;
  auto dual_code = dual(code, form, side);
  const auto wc = weight_enumerator(code);
  const auto wd = weight_enumerator(dual_code);
  std::optional<WeightEnumerator> transformed;
  try {
    transformed = macwilliams_transform(wc, code.alphabet().size(), code.size());
  } catch (const NotApplicable&) {
  }
  const bool holds = transformed.has_value() && *transformed == wd;
  return MacWilliamsResult{holds, is_monomial(code.alphabet(), form.matrix()), wc, wd, transformed,
                           std::move(dual_code)};
}

std::vector<LinearCode> enumerate_codes(const FiniteRing& alphabet, std::size_t length, CodeSide side) {
  const auto shape = alphabet.shape().repeated(length);
  const auto ops = word_actions(alphabet, side);
  std::vector<LinearCode> out;
  for (auto& words : enumerate_invariant_subgroups(shape, ops))
    out.push_back(code_from_codewords(alphabet, length, std::move(words), side));
  return out;
}

bool is_sigma_cyclic(const LinearCode& code, const SkewQuotient& q) {
  if (code.alphabet() != q.base() || code.length() != q.degree())
    throw InvalidArgument("code does not live in the quotient's coefficient space");
  const auto& words = code.codewords();
  const auto& base = q.base();

  const ModElement x = x_in_quotient(q);
  bool by_generators = true;
  for (const auto& w : words) {
    if (!words.contains(q.flatten(quotient_mul(q, q.unflatten(x), q.unflatten(w))))) by_generators = false;
    for (std::size_t i = 0; i < base.rank() && by_generators; ++i)
      if (!words.contains(scale_word(base, base.basis(i), w, Side::left))) by_generators = false;
    if (!by_generators) break;
  }

  const auto ring = as_finite_ring(q);
  bool by_ring = true;
  for_each_element(ring.shape(), [&](const ModElement& r) {
    if (!by_ring) return;
    for (const auto& w : words)
      if (!words.contains(ring.mul(r, w))) {
        by_ring = false;
        return;
      }
  });

  if (by_generators != by_ring)
    throw InternalConsistency("x-closure and ideal-closure disagree on sigma-cyclicity");
  return by_ring;
}

SigmaCyclicDualReport sigma_cyclic_dual_check(const LinearCode& code, const SkewQuotient& q,
                                              const FrobeniusFunctional& base_functional) {
  if (!q.is_x_m_minus_one()) throw Unsupported("sigma-cyclic duality needs f = x^m - 1");
  if (!is_sigma_cyclic(code, q)) throw InvalidArgument("code is not sigma-cyclic");
  const auto& base = q.base();
  const std::size_t m = q.degree();

  const auto euclidean = orthogonal(AmbientForm::identity(base, m), code.codewords(), Side::left);

  ElementSet theta_code;
  for (const auto& c : code.codewords()) theta_code.insert(q.flatten(theta(q, q.unflatten(c))));

  const auto functional = frobenius_form_on_quotient(q, base_functional);
  const auto& ring = functional.ring();
  ElementSet theta_orth;
  for_each_element(ring.shape(), [&](const ModElement& g) {
    for (const auto& t : theta_code)
      if (functional.pairing(g, t) != 0) return;
    theta_orth.insert(theta_orth.end(), g);
  });

  SigmaCyclicDualReport report;
  report.code_size = code.size();
  report.dual_size = euclidean.size();
  report.dual_matches_theta_orthogonal = euclidean == theta_orth;
  report.dual_is_sigma_cyclic = is_sigma_cyclic(code_from_codewords(base, m, euclidean, CodeSide::left), q);
  return report;
}

GroupAlgebraDualReport group_algebra_dual_check(const GroupAlgebra& algebra, const ElementSet& ideal) {
  const auto& ring = algebra.ring;
  if (!is_ideal(ring, ideal, Side::left)) throw InvalidArgument("subset is not a left ideal of the group algebra");
  const Residue n = ring.characteristic();

  ElementSet euclidean;
  for_each_element(ring.shape(), [&](const ModElement& b) {
    for (const auto& s : ideal) {
      Residue acc = 0;
      for (std::size_t g = 0; g < b.size(); ++g) acc = (acc + s[g] * b[g]) % n;
      if (acc != 0) return;
    }
    euclidean.insert(euclidean.end(), b);
  });

  // <a, b> = (ab)_e = sum_g a_g b_{g^-1}.
  auto identity_coefficient = [&](const ModElement& a, const ModElement& b) { return ring.mul(a, b)[algebra.identity]; };
  ElementSet rorth;
  for_each_element(ring.shape(), [&](const ModElement& b) {
    for (const auto& s : ideal)
      if (identity_coefficient(s, b) != 0) return;
    rorth.insert(rorth.end(), b);
  });
  ElementSet theta_rorth;
  for (const auto& b : rorth) theta_rorth.insert(algebra.invert_group(b));

  GroupAlgebraDualReport report;
  report.ideal_size = ideal.size();
  report.dual_size = euclidean.size();
  report.dual_matches_theta_rorth = euclidean == theta_rorth;
  report.dual_is_left_ideal = is_ideal(ring, euclidean, Side::left);
  return report;
}

}  // namespace frobkit

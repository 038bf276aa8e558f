#pragma once

/// Ring-linear codes in A^m: closure, Hamming weight enumerators, duals with
/// respect to matrix forms, the MacWilliams transform, sigma-cyclic codes and
/// group-code duality.
///
/// Codes carry the side of the scalar action they are closed under. The
/// orthogonal of a left code is taken on the right (a right code) and vice
/// versa; asking for the other side, or comparing codes of different sides,
/// throws SideMismatch unless the code is first coerced with `as_side`.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "frobkit/finring.hpp"
#include "frobkit/frobenius.hpp"
#include "frobkit/skewpoly.hpp"

namespace frobkit {

enum class CodeSide { left, right, additive };

const char* to_string(CodeSide side);

class LinearCode {
 public:
  /// Closure of `generators` under addition and the scalar action of `side`.
  LinearCode(FiniteRing alphabet, std::size_t length, std::vector<ModElement> generators, CodeSide side);

  const FiniteRing& alphabet() const { return alphabet_; }
  std::size_t length() const { return length_; }
  CodeSide side() const { return side_; }
  const std::vector<ModElement>& generators() const { return generators_; }
  const ElementSet& codewords() const { return codewords_; }
  std::size_t size() const { return codewords_.size(); }
  bool contains(const ModElement& w) const { return codewords_.contains(w); }
  ModuleShape ambient_shape() const { return alphabet_.shape().repeated(length_); }

  friend bool operator==(const LinearCode&, const LinearCode&) = default;

 private:
  friend LinearCode code_from_codewords(FiniteRing, std::size_t, ElementSet, CodeSide);
  LinearCode(FiniteRing alphabet, std::size_t length, CodeSide side, ElementSet codewords);

  FiniteRing alphabet_;
  std::size_t length_;
  CodeSide side_;
  std::vector<ModElement> generators_;
  ElementSet codewords_;
};

LinearCode generate(const FiniteRing& alphabet, std::size_t length, const std::vector<ModElement>& generators,
                    CodeSide side);

/// Wraps an already-closed codeword set, with a greedy additive generating set.
/// Throws InvalidArgument if the set is not closed for the given side.
LinearCode code_from_codewords(FiniteRing alphabet, std::size_t length, ElementSet codewords, CodeSide side);

/// Re-tags a code after checking it is closed under the new side's action.
LinearCode as_side(const LinearCode& code, CodeSide side);

/// Codeword-set equality; throws SideMismatch when the sides differ.
bool same_code(const LinearCode& a, const LinearCode& b);

/// scalar * word (left) or word * scalar (right), componentwise.
ModElement scale_word(const FiniteRing& ring, const ModElement& scalar, const ModElement& word, Side side);

std::size_t hamming_weight(const FiniteRing& ring, const ModElement& word);

/// Counts a_w of codewords of each Hamming weight w = 0..m.
struct WeightEnumerator {
  std::size_t length = 0;
  std::vector<std::uint64_t> counts;

  std::uint64_t total() const;
  /// e.g. "X^2 + 2XY + Y^2".
  std::string to_string() const;
  friend bool operator==(const WeightEnumerator&, const WeightEnumerator&) = default;
};

WeightEnumerator weight_enumerator(const LinearCode& code);

/// Orthogonal of `code` on the requested side. Left codes take right
/// orthogonals and right codes left ones; additive codes take either. The
/// result is tagged with the side it is a submodule for.
LinearCode dual(const LinearCode& code, const AmbientForm& form, Side side);

/// dual() with the identity matrix, on the side natural for the code.
LinearCode euclidean_dual(const LinearCode& code);

/// Each row and column has exactly one nonzero entry, and it is a unit.
bool is_monomial(const FiniteRing& ring, const std::vector<std::vector<ModElement>>& matrix);

/// Coefficients of W(X + (q-1)Y, X - Y) / c, for positive q and c. Throws NotApplicable if a
/// coefficient is not a non-negative multiple of c.
WeightEnumerator macwilliams_transform(const WeightEnumerator& w, std::uint64_t alphabet_size,
                                       std::uint64_t code_size);

struct MacWilliamsResult {
  bool holds = false;
  bool monomial = false;
  WeightEnumerator code_enumerator;
  WeightEnumerator dual_enumerator;
  /// Absent when the transform has non-integral coefficients.
  std::optional<WeightEnumerator> transformed;
  LinearCode dual_code;
};

/// Compares the dual's enumerator with the MacWilliams transform of the code's.
/// Throws DegenerateForm for degenerate forms.
MacWilliamsResult macwilliams_holds(const LinearCode& code, const AmbientForm& form);

/// All codes of the given side in A^m, smallest first.
std::vector<LinearCode> enumerate_codes(const FiniteRing& alphabet, std::size_t length, CodeSide side);

/// Closed under left multiplication by x and by A, with codewords read as
/// coefficient vectors of the quotient. Cross-checked against closure under
/// every quotient element.
bool is_sigma_cyclic(const LinearCode& code, const SkewQuotient& q);

struct SigmaCyclicDualReport {
  bool dual_matches_theta_orthogonal = false;  // C^perp = lorth(theta(C)) under eps((gh)_0)
  bool dual_is_sigma_cyclic = false;
  std::size_t code_size = 0;
  std::size_t dual_size = 0;
  bool passed() const { return dual_matches_theta_orthogonal && dual_is_sigma_cyclic; }
};

/// Requires f = x^m - 1. C^perp is the left Euclidean orthogonal {v : sum v_i c_i = 0}.
SigmaCyclicDualReport sigma_cyclic_dual_check(const LinearCode& code, const SkewQuotient& q,
                                              const FrobeniusFunctional& base_functional);

struct GroupAlgebraDualReport {
  bool dual_matches_theta_rorth = false;  // S^perp = theta(rorth(S)) for <a, b> = (ab)_e
  bool dual_is_left_ideal = false;
  std::size_t ideal_size = 0;
  std::size_t dual_size = 0;
  bool passed() const { return dual_matches_theta_rorth && dual_is_left_ideal; }
};

/// `ideal` is a subset of Z_n G (coordinates indexed by group elements); it must be a left ideal.
GroupAlgebraDualReport group_algebra_dual_check(const GroupAlgebra& algebra, const ElementSet& ideal);

}  // namespace frobkit

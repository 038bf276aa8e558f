#pragma once

/// Frobenius functionals (generating characters represented additively as
/// Z_n-valued linear forms), the pairings they induce, annihilators, and
/// orthogonals with respect to matrix forms on A^m.

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

#include "frobkit/finring.hpp"
#include "frobkit/znmod.hpp"

namespace frobkit {

using ZnMatrix = std::vector<std::vector<Residue>>;

/// Which kernel must vanish. `right` means {a : pairing(a, -) = 0} = {0},
/// i.e. the map from the left argument into the dual is one-to-one.
enum class PairingSide { left, right, both };

/// Entry (i, j) is eps(e_i e_j).
ZnMatrix gram_of_functional(const FiniteRing& ring, const ZnLinearForm& eps);

/// {a : pairing(a, b) = 0 for all b}; uses the basis of `right` as test vectors,
/// which is exact for Z-bilinear pairings.
ElementSet left_kernel(const ZnPairing& pairing, const ModuleShape& left, const ModuleShape& right);
/// {b : pairing(a, b) = 0 for all a}.
ElementSet right_kernel(const ZnPairing& pairing, const ModuleShape& left, const ModuleShape& right);

bool is_nondegenerate(const ZnPairing& pairing, const ModuleShape& left, const ModuleShape& right, PairingSide side);

/// Nondegeneracy of (a, b) -> eps(ab), decided on the Gram matrix.
bool is_nondegenerate(const FiniteRing& ring, const ZnLinearForm& eps, PairingSide side);

struct AssociativityResult {
  bool associative = true;
  /// Basis indices (i, j, l) with <e_i e_j, e_l> != <e_i, e_j e_l>.
  std::optional<std::array<std::size_t, 3>> witness;
};

/// Checks <ab, c> = <a, bc> on basis triples (sufficient for bilinear pairings).
AssociativityResult is_associative(const FiniteRing& ring, const ZnPairing& pairing);

/// A linear form whose pairing eps(ab) is nondegenerate on both sides.
class FrobeniusFunctional {
 public:
  /// Throws DegenerateForm if either kernel is nonzero.
  FrobeniusFunctional(FiniteRing ring, ZnLinearForm form);

  const FiniteRing& ring() const { return ring_; }
  const ZnLinearForm& form() const { return form_; }
  Residue operator()(const ModElement& a) const { return form_(a); }
  Residue pairing(const ModElement& a, const ModElement& b) const { return form_(ring_.mul(a, b)); }

 private:
  FiniteRing ring_;
  ZnLinearForm form_;
};

/// First form in enumerate_forms order with a nondegenerate pairing; nullopt
/// means no form works, i.e. the ring is not Frobenius.
std::optional<FrobeniusFunctional> find_frobenius_functional(const FiniteRing& ring);

/// The five equivalent descriptions of a Frobenius structure, each checked directly.
struct GeneratorReport {
  bool right_orbit_is_dual = false;       // {eps(a -) : a in R} = Hom(R, Z_n)
  bool left_orbit_is_dual = false;        // {eps(- a) : a in R} = Hom(R, Z_n)
  bool right_map_bijective = false;       // a -> eps(a -) is one-to-one and onto
  bool left_map_bijective = false;        // a -> eps(- a) is one-to-one and onto
  bool associative_nondegenerate = false;  // (a, b) -> eps(ab) is associative and nondegenerate

  bool all() const {
    return right_orbit_is_dual && left_orbit_is_dual && right_map_bijective && left_map_bijective &&
           associative_nondegenerate;
  }
  bool none() const {
    return !right_orbit_is_dual && !left_orbit_is_dual && !right_map_bijective && !left_map_bijective &&
           !associative_nondegenerate;
  }
};

GeneratorReport verify_generator_equivalences(const FiniteRing& ring, const ZnLinearForm& eps);

/// {a : a s = 0 for all s in S}, a left ideal.
Ideal left_annihilator(const FiniteRing& ring, const ElementSet& subset);
/// {a : t a = 0 for all t in T}, a right ideal.
Ideal right_annihilator(const FiniteRing& ring, const ElementSet& subset);

/// An A-valued bilinear form <x, y> = sum_{i,j} x_i Q_ij y_j on A^m. Words of
/// A^m are elements of `ambient_shape()`: the m coordinate blocks of A laid
/// end to end.
class AmbientForm {
 public:
  AmbientForm(FiniteRing ring, std::vector<std::vector<ModElement>> matrix);

  static AmbientForm identity(const FiniteRing& ring, std::size_t m);

  const FiniteRing& ring() const { return ring_; }
  std::size_t length() const { return matrix_.size(); }
  const std::vector<std::vector<ModElement>>& matrix() const { return matrix_; }
  const ModuleShape& ambient_shape() const { return ambient_; }

  ModElement operator()(const ModElement& x, const ModElement& y) const;

 private:
  FiniteRing ring_;
  std::vector<std::vector<ModElement>> matrix_;
  ModuleShape ambient_;
};

/// Both kernels are {0}, decided exhaustively over A^m.
bool is_nondegenerate(const AmbientForm& form);

/// i-th coordinate of a word of A^m.
ModElement word_component(const FiniteRing& ring, const ModElement& word, std::size_t i);
ModElement make_word(const FiniteRing& ring, const std::vector<ModElement>& components);

/// side = left: {x : <x, s> = 0 for all s in S}; side = right: {y : <s, y> = 0}.
ElementSet orthogonal(const AmbientForm& form, const ElementSet& subset, Side side);

/// As `orthogonal`, but only eps(<x, s>) has to vanish.
ElementSet epsilon_orthogonal(const AmbientForm& form, const ZnLinearForm& eps, const ElementSet& subset, Side side);

}  // namespace frobkit

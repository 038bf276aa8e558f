#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "frobkit/znmod.hpp"

namespace frobkit {

enum class Side { left, right, two_sided };

const char* to_string(Side side);

/// A finite unital ring presented as a Z_n-algebra: an additive shape
/// Z_{d_1} + ... + Z_{d_k}, structure constants e_i e_j, and the identity.
///
/// The constructor validates everything: products respect the additive
/// orders of both factors, basis triples associate, `one` is a two-sided
/// identity on the basis, and the additive order of `one` equals n.
/// Failures throw InvalidRing carrying the offending basis indices.
class FiniteRing {
 public:
  using MulTable = std::vector<std::vector<ModElement>>;

  FiniteRing(ModuleShape shape, MulTable mul_table, ModElement one);

  const ModuleShape& shape() const { return shape_; }
  Residue characteristic() const { return shape_.modulus(); }
  std::size_t rank() const { return shape_.rank(); }
  std::uint64_t size() const { return shape_.cardinality(); }
  const MulTable& mul_table() const { return table_; }
  const ModElement& one() const { return one_; }
  ModElement zero() const { return shape_.zero(); }
  ModElement basis(std::size_t i) const { return shape_.unit_vector(i); }

  ModElement add(const ModElement& a, const ModElement& b) const;
  ModElement sub(const ModElement& a, const ModElement& b) const;
  ModElement neg(const ModElement& a) const;
  ModElement mul(const ModElement& a, const ModElement& b) const;
  /// Integer multiple k * a.
  ModElement scale(Residue k, const ModElement& a) const { return shape_.scale(k, a); }

  bool is_commutative() const;

  friend bool operator==(const FiniteRing&, const FiniteRing&) = default;

 private:
  ModElement mul_unchecked(const ModElement& a, const ModElement& b) const;
  void validate() const;

  ModuleShape shape_;
  MulTable table_;
  ModElement one_;
};

FiniteRing ring_zn(Residue n);
/// Componentwise product; characteristic is the lcm of the factors'.
FiniteRing ring_product(const FiniteRing& a, const FiniteRing& b);
/// t x t matrices; basis E_{rs} * e_i indexed ((r * t + s) * k + i).
FiniteRing ring_matrix(const FiniteRing& base, std::size_t t);
/// Same as the validating constructor, named for symmetry with the others.
FiniteRing ring_from_table(ModuleShape shape, FiniteRing::MulTable mul_table, ModElement one);

/// Z_n G together with the group data needed for group-code duality.
struct GroupAlgebra {
  FiniteRing ring;
  std::vector<std::vector<std::size_t>> cayley;
  std::size_t identity;
  std::vector<std::size_t> inverse;

  /// The involution determined by g -> g^{-1}.
  ModElement invert_group(const ModElement& a) const;
};

/// Throws InvalidRing(group_table) unless `cayley` is a group table.
GroupAlgebra make_group_algebra(Residue n, std::vector<std::vector<std::size_t>> cayley);
FiniteRing ring_group_algebra(Residue n, std::vector<std::vector<std::size_t>> cayley);
std::vector<std::vector<std::size_t>> cyclic_group_table(std::size_t order);

bool is_unit(const FiniteRing& ring, const ModElement& a);
std::optional<ModElement> inverse(const FiniteRing& ring, const ModElement& a);
ElementSet units(const FiniteRing& ring);

struct Ideal {
  Side side;
  ElementSet elements;

  std::size_t size() const { return elements.size(); }
  bool contains(const ModElement& x) const { return elements.contains(x); }
  friend bool operator==(const Ideal&, const Ideal&) = default;
};

/// True when `elements` is an additive subgroup closed under multiplication
/// by ring elements from `side` (left: r x, right: x r).
bool is_ideal(const FiniteRing& ring, const ElementSet& elements, Side side);

/// Throws InvalidArgument if `elements` is not an ideal of the given side.
Ideal make_ideal(const FiniteRing& ring, Side side, ElementSet elements);

/// Smallest ideal of the given side containing `gens`.
Ideal ideal_generated(const FiniteRing& ring, const ElementSet& gens, Side side);

/// All ideals of the given side, smallest first.
std::vector<Ideal> enumerate_ideals(const FiniteRing& ring, Side side);

/// Additive span of {a b : a in I, b in K}.
Ideal ideal_product(const FiniteRing& ring, const Ideal& lhs, const Ideal& rhs);

/// J(R) = {x : 1 - a x is a unit for every a}.
Ideal jacobson_radical(const FiniteRing& ring);

/// Right socle {x : x J = 0} (socle of R_R) or left socle {x : J x = 0}.
Ideal socle(const FiniteRing& ring, Side side);

struct SocleFrobeniusResult {
  bool frobenius = false;
  std::uint64_t radical_size = 0;
  std::uint64_t right_socle_size = 0;
  std::uint64_t left_socle_size = 0;
  /// s with s R = Soc(R_R), present when Soc(R_R) is isomorphic to R/J.
  std::optional<ModElement> right_witness;
  /// s with R s = Soc(_R R).
  std::optional<ModElement> left_witness;
};

/// Decides Soc(R_R) = R/J and Soc(_R R) = R/J as modules. A map R/J -> Soc
/// is fixed by the image s of 1 + J; it is onto iff s generates the socle and
/// one-to-one iff the cardinalities agree.
SocleFrobeniusResult is_frobenius_socle(const FiniteRing& ring);

}  // namespace frobkit

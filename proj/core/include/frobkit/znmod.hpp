#pragma once

/// Exact arithmetic on finite Z_n-modules Z_{d_1} + ... + Z_{d_k}, with every
/// d_i dividing n. Elements are dense coordinate vectors; all enumeration is
/// lexicographic in the coordinates (last coordinate varies fastest).

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <set>
#include <span>
#include <string>
#include <vector>

namespace frobkit {

using Residue = std::int64_t;

inline constexpr std::uint64_t kDefaultEnumerationCap = std::uint64_t{1} << 20;

/// Process-wide bound on the number of elements any exhaustive scan may visit.
std::uint64_t enumeration_cap();
void set_enumeration_cap(std::uint64_t cap);

/// Throws EnumerationTooLarge when `count` exceeds the current cap.
void check_enumeration_cap(std::uint64_t count);

class ScopedEnumerationCap {
 public:
  explicit ScopedEnumerationCap(std::uint64_t cap) : saved_(enumeration_cap()) {
    set_enumeration_cap(cap);
  }
  ~ScopedEnumerationCap() { set_enumeration_cap(saved_); }
  ScopedEnumerationCap(const ScopedEnumerationCap&) = delete;
  ScopedEnumerationCap& operator=(const ScopedEnumerationCap&) = delete;

 private:
  std::uint64_t saved_;
};

class ModElement {
 public:
  ModElement() = default;
  explicit ModElement(std::vector<Residue> coords) : coords_(std::move(coords)) {}

  static ModElement zero(std::size_t rank) { return ModElement(std::vector<Residue>(rank, 0)); }

  const std::vector<Residue>& coords() const { return coords_; }
  Residue operator[](std::size_t i) const { return coords_[i]; }
  std::size_t size() const { return coords_.size(); }
  bool is_zero() const;

  friend auto operator<=>(const ModElement&, const ModElement&) = default;
  friend bool operator==(const ModElement&, const ModElement&) = default;

 private:
  std::vector<Residue> coords_;
};

std::string to_string(const ModElement& x);

using ElementSet = std::set<ModElement>;

class ModuleShape {
 public:
  /// Throws InvalidArgument unless n >= 1 and every order divides n.
  ModuleShape(Residue n, std::vector<Residue> orders);

  Residue modulus() const { return n_; }
  const std::vector<Residue>& orders() const { return orders_; }
  Residue order(std::size_t i) const { return orders_[i]; }
  std::size_t rank() const { return orders_.size(); }

  /// Product of the orders, saturating at UINT64_MAX.
  std::uint64_t cardinality() const;

  /// The shape of the m-fold direct sum, coordinates grouped per summand.
  ModuleShape repeated(std::size_t m) const;

  bool contains(const ModElement& x) const;
  /// Throws InvalidArgument when x does not belong to this shape.
  void require(const ModElement& x) const;

  /// Reduces arbitrary integers coordinate-wise.
  ModElement reduce(std::vector<Residue> coords) const;
  ModElement zero() const { return ModElement::zero(rank()); }
  ModElement unit_vector(std::size_t i) const;

  ModElement add(const ModElement& a, const ModElement& b) const;
  ModElement sub(const ModElement& a, const ModElement& b) const;
  ModElement neg(const ModElement& a) const;
  ModElement scale(Residue c, const ModElement& a) const;

  Residue additive_order(const ModElement& a) const;

  /// Position of x in the lexicographic enumeration.
  std::uint64_t index_of(const ModElement& x) const;
  ModElement element_at(std::uint64_t index) const;

  friend bool operator==(const ModuleShape&, const ModuleShape&) = default;

 private:
  Residue n_;
  std::vector<Residue> orders_;
};

/// A Z_n-linear form f(x) = sum_i w_i x_i mod n. Well-defined iff w_i d_i = 0 mod n.
class ZnLinearForm {
 public:
  /// Throws InvalidArgument if some weight is not a multiple of n / d_i.
  ZnLinearForm(const ModuleShape& shape, std::vector<Residue> weights);

  Residue modulus() const { return n_; }
  const std::vector<Residue>& weights() const { return weights_; }
  Residue operator()(const ModElement& x) const;

  friend auto operator<=>(const ZnLinearForm&, const ZnLinearForm&) = default;
  friend bool operator==(const ZnLinearForm&, const ZnLinearForm&) = default;

 private:
  Residue n_;
  std::vector<Residue> weights_;
};

/// Visits every element of the shape in lexicographic order.
void for_each_element(const ModuleShape& shape, const std::function<void(const ModElement&)>& visit);

std::vector<ModElement> enumerate_module(const ModuleShape& shape);

/// All Hom(shape, Z_n), ordered lexicographically by weight vector.
std::vector<ZnLinearForm> enumerate_forms(const ModuleShape& shape);

/// The subgroup generated by `gens`.
ElementSet span(std::span<const ModElement> gens, const ModuleShape& shape);
ElementSet span(const ElementSet& gens, const ModuleShape& shape);

using ZnPairing = std::function<Residue(const ModElement&, const ModElement&)>;

/// {x in left : pairing(x, y) = 0 for every y in right}, by exhaustive scan.
ElementSet kernel_elements(const ZnPairing& pairing, const ModuleShape& left, const ModuleShape& right);

/// An additive endomorphism of a shape, e.g. multiplication by a fixed ring element.
using Endomorphism = std::function<ModElement(const ModElement&)>;

/// The smallest subgroup containing `gens` and stable under every operator.
ElementSet invariant_closure(const ElementSet& gens, const ModuleShape& shape,
                             std::span<const Endomorphism> ops);

/// Every operator-stable subgroup of the shape: closures of single elements,
/// then closed under pairwise sums. Ordered by (size, contents).
std::vector<ElementSet> enumerate_invariant_subgroups(const ModuleShape& shape,
                                                      std::span<const Endomorphism> ops);

Residue positive_mod(Residue a, Residue n);

}  // namespace frobkit
